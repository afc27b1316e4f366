# src/blocks/type_context.py
import logging
from typing import Dict, List, Optional, Sequence

from src.algebra.root_system import AffineRootData, RootSystem, affine_root_data, build_root_system
from src.coxeter.faces import AlcoveFace, build_face, enumerate_faces, parse_face_selector
from src.coxeter.relative_weyl import RelativeWeylGroup, relative_weyl_group
from src.cuspidal.table import CuspidalAssignment, CuspidalTable, cuspidal_count, load_cuspidal_table
from src.utils.errors import UnclassifiedCuspidalError

logger = logging.getLogger(__name__)


class TypeContext:
    """
    Everything computed for one ambient type during a run.

    Faces, cuspidal assignments and relative Weyl groups are built on first
    use and cached, so the decomposition, the parameter enumeration and the
    verification suites share one set of results.
    """

    def __init__(self, type_label: str, table: Optional[CuspidalTable] = None):
        """
        Args:
            type_label: A type label such as 'B2'; aliases are resolved.
            table: The cuspidal table to use. The shipped one when None.
        """
        self.root_system: RootSystem = build_root_system(type_label)
        self.affine: AffineRootData = affine_root_data(self.root_system)
        self.table: CuspidalTable = table if table is not None else load_cuspidal_table()
        self._faces: Optional[List[AlcoveFace]] = None
        self._assignments: Dict[tuple, CuspidalAssignment] = {}
        self._groups: Dict[tuple, RelativeWeylGroup] = {}
        logger.debug(f"TypeContext for {self.type_label} using table {self.table.origin}")

    @property
    def type_label(self) -> str:
        return self.root_system.type_label

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def faces(self) -> List[AlcoveFace]:
        if self._faces is None:
            self._faces = enumerate_faces(self.affine)
        return self._faces

    def face(self, nodes: Sequence[int]) -> AlcoveFace:
        return build_face(self.affine, nodes)

    def face_from_selector(self, selector: str) -> AlcoveFace:
        return self.face(parse_face_selector(selector, self.affine))

    def assignment(self, face: AlcoveFace) -> CuspidalAssignment:
        if face.nodes not in self._assignments:
            self._assignments[face.nodes] = cuspidal_count(face, self.affine, self.table)
        return self._assignments[face.nodes]

    def cuspidal_multiplicity(self, face: AlcoveFace) -> Optional[int]:
        """c_I, or None when the table does not classify the face."""
        try:
            return self.assignment(face).count
        except UnclassifiedCuspidalError:
            return None

    def relative_group(self, face: AlcoveFace) -> RelativeWeylGroup:
        """W~^I, certified exactly when the face carries cuspidal data."""
        if face.nodes not in self._groups:
            certify = (self.cuspidal_multiplicity(face) or 0) > 0
            self._groups[face.nodes] = relative_weyl_group(face, self.affine, certify=certify)
        return self._groups[face.nodes]

    def block_faces(self) -> List[AlcoveFace]:
        """Faces with c_I > 0; unclassified faces raise."""
        return [face for face in self.faces if self.assignment(face).count > 0]

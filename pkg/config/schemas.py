# config/schemas.py
from typing import Optional, List
from pydantic import BaseModel, Field
from enum import Enum

# --- Enums ---

class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"

class VerifySuite(str, Enum):
    PAPER_EXAMPLES = "paper-examples"
    INVARIANTS = "invariants"

class RecordStatus(str, Enum):
    VERIFIED = "verified"    # reproduces a label of the rank <= 3 golden figures
    OVERRIDE = "override"    # corrects the A-type rule inside one ambient type
    EXTENDED = "extended"    # beyond the golden figures, not cross-checked here

class CuspidalRule(str, Enum):
    A_TYPE = "a-type"    # all factors of type A: characters of exact order n+1
    FACTOR = "factor"    # per-factor counts for the classical and exceptional types

class CharacterName(str, Enum):
    TRIVIAL = "trivial"
    SIGN = "sign"
    REFLECTION = "reflection"

# --- Cuspidal table records ---

class CuspidalRecordModel(BaseModel):
    """
    One record of the cuspidal classification table.
    Text form: type=<signature>; center=<factors|*>; chars=<n>; source=<citation>[; ambient=<type>; status=<status>]
    """
    type: str = Field(..., description="Levi factor signature, e.g. 'A1(l)+B2'.")
    center: str = Field("*", description="Center invariant factors joined by ',' ('1' trivial), or '*' for any.")
    chars: int = Field(..., ge=0, description="Number of admissible center characters carrying a cuspidal pair.")
    source: str = Field(..., description="Provenance of the count.")
    ambient: str = Field("*", description="Ambient type the record is scoped to, or '*' for any.")
    status: RecordStatus = Field(RecordStatus.VERIFIED, description="How far the count is certified.")

class CuspidalTableModel(BaseModel):
    version: int = Field(..., ge=1, description="Table format version.")
    records: List[CuspidalRecordModel] = Field(..., description="Classification records.")
    rules: List[CuspidalRule] = Field(
        default_factory=lambda: [CuspidalRule.A_TYPE, CuspidalRule.FACTOR],
        description="Fallback rules consulted, in order, when no record matches.",
    )

# --- Golden data ---

class GoldenComponent(BaseModel):
    torus_rank: int = Field(..., ge=0)
    group: str = Field(..., description="Finite part label, e.g. 'D4'.")
    multiplicity: int = Field(..., ge=1)

class GoldenExample(BaseModel):
    type: str = Field(..., description="Ambient type label.")
    components: List[GoldenComponent] = Field(..., description="Components of the decomposition.")
    figure_labels: dict[int, List[int]] = Field(..., description="Multiset of c_I per face dimension.")
    text: Optional[str] = Field(None, description="Rendered decomposition as in the figures.")

# --- Results ---

class GroupModel(BaseModel):
    label: str = Field(..., description="Isomorphism label of the finite part, e.g. 'S3', 'D4'.")
    order: int = Field(..., ge=1, description="Order of the finite part.")

class ComponentModel(BaseModel):
    """A component (L S_I / W^I) of the decomposition, repeated c times."""
    face: List[str] = Field(..., description="Affine node names of I.")
    c: int = Field(..., ge=1, description="Cuspidal multiplicity c_I.")
    torus_rank: int = Field(..., ge=0, description="Rank of the translation lattice.")
    group: GroupModel = Field(..., description="Finite part W^I.")
    cuspidal: bool = Field(..., description="True for the zero-dimensional components (|I| = r).")
    description: str = Field(..., description="Rendering 'L(C^x)^d/Gamma' or '*'.")
    z_dimension: int = Field(..., ge=0, description="rank - |I|.")
    notes: List[str] = Field([], description="Flags raised while building the component.")

class DecompositionModel(BaseModel):
    type: str = Field(..., description="Canonical type label.")
    components: List[ComponentModel] = Field(..., description="Components sorted by (|I|, I).")
    cuspidal_total: int = Field(..., ge=0, description="Sum of c_I over the faces with |I| = r.")
    text: str = Field(..., description="Components joined with ' ⊔ '.")

class FaceModel(BaseModel):
    face: List[str] = Field(..., description="Affine node names of I.")
    label: str = Field(..., description="Comma-separated node names, '-' for the empty face.")
    z_dimension: int = Field(..., ge=0)
    factors: List[str] = Field(..., description="Levi factor labels.")
    signature: str = Field(..., description="Sorted factor labels joined by '+'.")
    cocharacter_fixed_lattice: List[List[int]] = Field(..., description="Integer basis of V_I in coroot coordinates.")
    vertices: List[List[str]] = Field(..., description="Vertices of the face, exact rationals.")

class FacesModel(BaseModel):
    type: str = Field(...)
    faces: List[FaceModel] = Field(...)

class AffineElementModel(BaseModel):
    linear: List[List[str]] = Field(..., description="Matrix in chart coordinates.")
    translation: List[str] = Field(..., description="Translation in chart coordinates.")

class GeneratorModel(BaseModel):
    node: str = Field(..., description="Affine node s of v_s.")
    element: AffineElementModel = Field(..., description="v_s restricted to A_I.")

class RelativeWeylModel(BaseModel):
    type: str = Field(...)
    face: List[str] = Field(...)
    chart_base: List[str] = Field(..., description="Chart origin in coroot coordinates.")
    chart_basis: List[List[int]] = Field(..., description="Chart basis vectors in coroot coordinates.")
    generators: List[GeneratorModel] = Field(...)
    non_normalizing: List[str] = Field([], description="Nodes whose candidate does not normalize W~_I.")
    coxeter_nodes: List[str] = Field(..., description="Nodes indexing the Coxeter matrix rows.")
    coxeter_matrix: List[List[Optional[int]]] = Field(..., description="m(s,t); null means infinity.")
    type_label: Optional[str] = Field(None, description="Coxeter type when certified.")
    finite_part: GroupModel = Field(...)
    translation_rank: int = Field(..., ge=0)
    translation_lattice: List[List[str]] = Field(..., description="Basis of Lambda_I in chart coordinates.")
    cocharacter_index: Optional[int] = Field(None, description="[Lambda_I : X_*(Z_I^0)] when defined.")
    split: bool = Field(...)
    special_vertex: Optional[str] = Field(None, description="Vertex used as the split chart origin.")
    failures: List[str] = Field([])

class CenterModel(BaseModel):
    invariants: List[int] = Field(..., description="Cyclic factor orders of the center group.")
    order: int = Field(..., ge=1)
    projection_orders: List[List[int]] = Field(..., description="Per character, its order on each factor.")

class CuspidalFaceModel(BaseModel):
    face: List[str] = Field(...)
    signature: str = Field(...)
    center: CenterModel = Field(...)
    c: int = Field(..., ge=0)
    rule: str = Field(..., description="'torus', 'table' or 'a-type-rule'.")
    source: Optional[str] = Field(None)
    status: Optional[RecordStatus] = Field(None)

class CuspidalModel(BaseModel):
    type: str = Field(...)
    faces: List[CuspidalFaceModel] = Field(...)

class SeriesModel(BaseModel):
    order: int = Field(..., ge=0, description="Truncation degree N.")
    coefficients: List[str] = Field(..., description="Exact coefficients of t^0..t^N.")
    text: str = Field(..., description="Rendering like '1 + t^3 + 2t^4'.")

class HomologyGroupModel(BaseModel):
    degree: int = Field(...)
    rank: int = Field(..., ge=0, description="Free rank.")
    torsion: List[int] = Field([], description="Torsion invariant factors > 1.")

class HomologyModel(BaseModel):
    type: str = Field(...)
    affine: bool = Field(...)
    truncation: Optional[int] = Field(None, description="Length bound N, affine only.")
    cell_counts: dict[int, int] = Field(..., description="Basis size per degree.")
    boundary_squares_vanish: bool = Field(...)
    groups: List[HomologyGroupModel] = Field(...)
    acyclic: bool = Field(...)
    colimit_hypotheses: Optional[bool] = Field(None)
    colimit_failures: List[str] = Field([])
    note: str = Field("", description="Marks the truncated ball as a finite-scale surrogate.")

class ParameterModel(BaseModel):
    face: List[str] = Field(...)
    cuspidal_index: int = Field(..., ge=1)
    point: List[str] = Field(..., description="Orbit representative s in the dual lattice basis, mod 1.")
    stabilizer: GroupModel = Field(...)
    irreducible_count: int = Field(..., ge=1, description="Number of conjugacy classes of the stabilizer.")

class ParametersModel(BaseModel):
    type: str = Field(...)
    denominator_bound: int = Field(..., ge=1)
    parameters: List[ParameterModel] = Field(...)

class RestrictionEntryModel(BaseModel):
    source: List[str] = Field(..., description="Block label I'.")
    c: Optional[int] = Field(None, description="c_I' when classified.")
    zero: bool = Field(..., description="True when the functor kills the summand.")
    subgroup_order: Optional[int] = Field(None, description="|W^I'_J| (restriction) or the source group order.")
    group_order: Optional[int] = Field(None, description="|W^I'_J'|.")
    inclusion_verified: bool = Field(...)
    block: bool = Field(True, description="False when c_I' = 0, i.e. the face labels no block.")

class RestrictionModel(BaseModel):
    type: str = Field(...)
    direction: str = Field(..., description="'restriction' or 'induction'.")
    small: List[str] = Field(..., description="J.")
    large: List[str] = Field(..., description="J'.")
    entries: List[RestrictionEntryModel] = Field(...)

class CheckModel(BaseModel):
    name: str = Field(...)
    passed: bool = Field(...)
    detail: str = Field("")

class VerificationModel(BaseModel):
    suite: VerifySuite = Field(...)
    passed: bool = Field(...)
    summary: str = Field(...)
    checks: List[CheckModel] = Field(...)

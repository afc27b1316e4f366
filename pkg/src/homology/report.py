# src/homology/report.py
"""
Integral homology of a chain complex with integer boundary matrices.

Ranks and torsion come from the Smith normal form of each boundary map.
Coset complexes have boundary entries in {0, +-1}, so most of the work is
done by eliminating unit pivots on a sparse copy; only the residue is handed
to sympy for its invariant factors.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from sympy import Matrix

from config.schemas import HomologyGroupModel, HomologyModel
from src.algebra.lattice import smith_invariants
from src.homology.coset_complex import ColimitReport, CosetComplex
from src.utils.errors import InvariantViolation

logger = logging.getLogger(__name__)

TRUNCATION_NOTE = "length-truncated ball: a finite-scale surrogate for the infinite coset complex"


def _unit_pivot_reduction(matrix: np.ndarray) -> tuple[int, list[list[int]]]:
    """
    Eliminate +-1 pivots, returning their count and the residual matrix.

    Clearing a unit pivot's column by row operations and then dropping its
    row and column leaves the invariant factors unchanged apart from a 1.
    """
    rows = {
        i: {j: int(v) for j, v in enumerate(row) if v}
        for i, row in enumerate(matrix.tolist())
    }
    rows = {i: r for i, r in rows.items() if r}
    eliminated = 0
    progress = True
    while progress:
        progress = False
        for i in list(rows):
            row = rows.get(i)
            if row is None:
                continue
            pivot = next((j for j, v in row.items() if abs(v) == 1), None)
            if pivot is None:
                continue
            sign = row[pivot]
            del rows[i]
            for k in list(rows):
                other = rows[k]
                if pivot not in other:
                    continue
                factor = other[pivot] * sign
                for j, v in row.items():
                    value = other.get(j, 0) - factor * v
                    if value:
                        other[j] = value
                    else:
                        other.pop(j, None)
                if not other:
                    del rows[k]
            eliminated += 1
            progress = True

    columns = sorted({j for r in rows.values() for j in r})
    residue = [[r.get(j, 0) for j in columns] for r in rows.values()]
    return eliminated, residue


def boundary_invariants(matrix: np.ndarray) -> tuple[int, tuple[int, ...]]:
    """(rank, invariant factors > 1) of an integer matrix."""
    if matrix.size == 0 or not np.any(matrix):
        return 0, ()
    eliminated, residue = _unit_pivot_reduction(matrix)
    factors = smith_invariants(residue) if residue else ()
    logger.debug(
        f"SNF of {matrix.shape}: {eliminated} unit pivots, residue {len(residue)} rows"
    )
    return eliminated + len(factors), tuple(f for f in factors if f > 1)


def boundary_rank(matrix: np.ndarray) -> int:
    """Rank over Q; skips the Smith normal form of the residue."""
    if matrix.size == 0 or not np.any(matrix):
        return 0
    eliminated, residue = _unit_pivot_reduction(matrix)
    return eliminated + (Matrix(residue).rank() if residue else 0)


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def label(self) -> str:
        parts = [f"Z^{self.rank}" if self.rank > 1 else "Z"] if self.rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class HomologyReport:
    groups: tuple[HomologyGroup, ...]
    cell_counts: dict
    boundary_squares_vanish: bool
    truncation: Optional[int] = None

    @property
    def acyclic(self) -> bool:
        return all(g.is_zero for g in self.groups)

    def nonzero(self) -> list[HomologyGroup]:
        return [g for g in self.groups if not g.is_zero]

    def is_sphere(self) -> bool:
        """Exactly one nonzero group, free of rank one."""
        nonzero = self.nonzero()
        return len(nonzero) == 1 and nonzero[0].rank == 1 and not nonzero[0].torsion

    def to_model(
        self, type_label: str, affine: bool, colimit: Optional[ColimitReport] = None
    ) -> HomologyModel:
        return HomologyModel(
            type=type_label,
            affine=affine,
            truncation=self.truncation,
            cell_counts=dict(self.cell_counts),
            boundary_squares_vanish=self.boundary_squares_vanish,
            groups=[
                HomologyGroupModel(degree=g.degree, rank=g.rank, torsion=list(g.torsion))
                for g in self.groups
            ],
            acyclic=self.acyclic,
            colimit_hypotheses=None if colimit is None else colimit.passed,
            colimit_failures=[] if colimit is None else list(colimit.failures),
            note=TRUNCATION_NOTE if self.truncation is not None else "",
        )


def homology_report(complex_: CosetComplex, torsion: bool = True) -> HomologyReport:
    """
    Homology of the augmented complex in every degree.

    With `torsion=False` only ranks over Q are computed, which is enough to
    decide acyclicity up to torsion.
    """
    squares = complex_.boundary_squares_vanish()
    if not squares:
        raise InvariantViolation("homology of a complex whose boundary does not square to zero")
    counts = complex_.cell_counts()
    ranks: dict[int, int] = {}
    factors: dict[int, tuple[int, ...]] = {}
    for k in complex_.degrees:
        if torsion:
            ranks[k], factors[k] = boundary_invariants(complex_.boundary(k))
        else:
            ranks[k], factors[k] = boundary_rank(complex_.boundary(k)), ()

    groups = []
    for k in complex_.degrees:
        image_out = ranks.get(k, 0)
        image_in = ranks.get(k + 1, 0)
        free = counts[k] - image_out - image_in
        if free < 0:
            raise InvariantViolation(f"degree {k}: ranks {image_out} + {image_in} exceed {counts[k]} cells")
        groups.append(HomologyGroup(k, free, factors.get(k + 1, ())))
    report = HomologyReport(tuple(groups), counts, squares, complex_.truncation)
    logger.debug(f"homology: {[g.label() for g in groups]}")
    return report

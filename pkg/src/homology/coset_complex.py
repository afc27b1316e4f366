# src/homology/coset_complex.py
"""
The augmented coset complex of a Coxeter system (W, S).

In degree k the basis is the set of cosets w W_I with |I| = n - 1 - k,
I a proper subset of S; degree -1 is the single coset W/W_S (the
augmentation). Each coset is stored by its minimal-length representative.
For an affine W only cosets whose minimal representative has length <= N
are kept: this is the chain complex of a gallery-convex ball of alcoves.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from config.settings import COLIMIT_CHECK_LENGTH
from src.algebra.affine_element import AffineElement, enumerate_group
from src.utils.errors import DomainError, InvariantViolation

logger = logging.getLogger(__name__)

Subset = tuple[int, ...]


@dataclass
class CosetComplex:
    """
    Bases per degree as (I, minimal representative) pairs, and integer
    boundary matrices: `boundaries[k]` maps degree k to degree k - 1.
    """
    rank: int
    truncation: Optional[int]
    bases: dict[int, list[tuple[Subset, AffineElement]]] = field(default_factory=dict)
    boundaries: dict[int, np.ndarray] = field(default_factory=dict)

    @property
    def degrees(self) -> range:
        return range(-1, self.rank)

    def cell_counts(self) -> dict[int, int]:
        return {k: len(self.bases[k]) for k in self.degrees}

    def cells(self, subset: Sequence[int]) -> list[AffineElement]:
        subset = tuple(sorted(subset))
        k = self.rank - 1 - len(subset)
        return [w for I, w in self.bases.get(k, []) if I == subset]

    def boundary(self, k: int) -> np.ndarray:
        """d_k : C_k -> C_{k-1}; the zero map out of degree -1."""
        if k in self.boundaries:
            return self.boundaries[k]
        rows = len(self.bases.get(k - 1, []))
        return np.zeros((rows, len(self.bases.get(k, []))), dtype=np.int64)

    def boundary_squares_vanish(self) -> bool:
        for k in range(1, self.rank):
            if np.any(self.boundary(k - 1) @ self.boundary(k)):
                return False
        return True


def _descend(w: AffineElement, subset: Sequence[int], generators, lengths) -> AffineElement:
    """Minimal representative of w W_J by removing right descents in J."""
    while True:
        for s in subset:
            shorter = w * generators[s]
            if lengths[shorter] < lengths[w]:
                w = shorter
                break
        else:
            return w


def build_coset_complex(
    generators: Sequence[AffineElement], truncation: Optional[int] = None
) -> CosetComplex:
    """
    Assemble the augmented complex for the Coxeter system generated by the
    given reflections, S indexed by their positions.

    `truncation=None` needs a finite W. Boundary signs come from the
    position of the added generator among S minus I.
    """
    n = len(generators)
    if n == 0:
        raise DomainError("a Coxeter system needs at least one generator")
    if truncation is not None and truncation < 1:
        raise DomainError(f"length bound must be >= 1, got {truncation}")

    radius = None if truncation is None else truncation + 1
    lengths = enumerate_group(list(generators), max_length=radius)
    limit = truncation if truncation is not None else max(lengths.values())
    identity = AffineElement.identity(generators[0].dim)

    complex_ = CosetComplex(rank=n, truncation=truncation)
    everything = tuple(range(n))
    index: dict[tuple[Subset, AffineElement], int] = {}
    for k in complex_.degrees:
        size = n - 1 - k
        basis = []
        for subset in combinations(everything, size):
            if size == n:
                members = [identity]
            else:
                members = [
                    w for w, length in lengths.items()
                    if length <= limit and all(lengths[w * generators[s]] > length for s in subset)
                ]
            for w in members:
                index[(subset, w)] = len(basis)
                basis.append((subset, w))
        complex_.bases[k] = basis

    for k in range(0, n):
        source, target = complex_.bases[k], complex_.bases[k - 1]
        matrix = np.zeros((len(target), len(source)), dtype=np.int64)
        for column, (subset, w) in enumerate(source):
            outside = [t for t in everything if t not in subset]
            for position, t in enumerate(outside):
                bigger = tuple(sorted(subset + (t,)))
                image = identity if len(bigger) == n else _descend(w, bigger, generators, lengths)
                row = index.get((bigger, image))
                if row is None:
                    raise InvariantViolation(
                        f"face {bigger} of the cell ({subset}, length {lengths[w]}) is missing from the complex"
                    )
                matrix[row, column] += (-1) ** position
        complex_.boundaries[k] = matrix

    if not complex_.boundary_squares_vanish():
        raise InvariantViolation("boundary of the coset complex does not square to zero")
    logger.debug(f"coset complex (N={truncation}): cells per degree {complex_.cell_counts()}")
    return complex_


@dataclass(frozen=True)
class ColimitReport:
    passed: bool
    failures: tuple[str, ...]
    pairs_checked: int


def check_colimit_hypotheses(
    generators: Sequence[AffineElement], truncation: Optional[int] = COLIMIT_CHECK_LENGTH
) -> ColimitReport:
    """
    W_I intersected with W_I' equals W_{I and I'} for all I, I' in S, and the
    parabolic inclusions are injective, checked on the length ball of radius
    `truncation` (the whole group when None).
    """
    n = len(generators)
    everything = tuple(range(n))
    subgroups: dict[Subset, set] = {}
    for size in range(n + 1):
        for subset in combinations(everything, size):
            gens = [generators[s] for s in subset]
            if gens:
                subgroups[subset] = set(enumerate_group(gens, max_length=truncation))
            else:
                subgroups[subset] = {AffineElement.identity(generators[0].dim)}

    failures = []
    for s, t in combinations(everything, 2):
        if generators[s] == generators[t]:
            failures.append(f"generators s{s} and s{t} coincide")
    for s in everything:
        if generators[s].is_identity():
            failures.append(f"generator s{s} is trivial")

    pairs = 0
    for first, second in combinations(list(subgroups), 2):
        pairs += 1
        meet = tuple(sorted(set(first) & set(second)))
        if subgroups[first] & subgroups[second] != subgroups[meet]:
            failures.append(f"W_{list(first)} and W_{list(second)} meet in more than W_{list(meet)}")
        if set(first) <= set(second) and not subgroups[first] <= subgroups[second]:
            failures.append(f"W_{list(first)} is not inside W_{list(second)}")
    logger.debug(f"colimit hypotheses: {pairs} pairs, {len(failures)} failures")
    return ColimitReport(not failures, tuple(failures), pairs)

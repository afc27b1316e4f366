# src/algebra/coxeter_types.py
"""
Naming of Dynkin and Coxeter diagrams.

Two classifiers live here: `cartan_type` names a connected finite
crystallographic Cartan matrix (used for Levi factors), and
`coxeter_type_label` names a Coxeter matrix, finite or affine (used for the
relative Weyl groups and for parabolic orders in the colimit checks).
"""

from __future__ import annotations

from typing import Optional, Sequence

from src.utils.errors import InvariantViolation

INFINITY = None  # m(s, t) for an element of infinite order


def connected_components(n: int, adjacent) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    components = []
    for start in range(n):
        if start in seen:
            continue
        stack, component = [start], []
        seen.add(start)
        while stack:
            node = stack.pop()
            component.append(node)
            for other in range(n):
                if other not in seen and adjacent(node, other):
                    seen.add(other)
                    stack.append(other)
        components.append(tuple(sorted(component)))
    return components


def _arms(neighbours: dict[int, list[int]], centre: int) -> list[list[int]]:
    """Paths hanging off a branch node, each listed outward from the centre."""
    arms = []
    for first in neighbours[centre]:
        arm, previous, node = [first], centre, first
        while True:
            onward = [x for x in neighbours[node] if x != previous]
            if len(onward) != 1:
                break
            previous, node = node, onward[0]
            arm.append(node)
        arms.append(arm)
    return arms


def _path_order(neighbours: dict[int, list[int]], nodes: Sequence[int]) -> list[int]:
    ends = [v for v in nodes if len(neighbours[v]) <= 1]
    path, previous = [ends[0]], None
    while True:
        onward = [x for x in neighbours[path[-1]] if x != previous]
        if not onward:
            return path
        previous = path[-1]
        path.append(onward[0])


def _simply_laced_name(neighbours: dict[int, list[int]], nodes: Sequence[int]) -> Optional[str]:
    n = len(nodes)
    degrees = sorted(len(neighbours[v]) for v in nodes)
    edges = sum(degrees) // 2
    if edges != n - 1:
        return None
    if degrees[-1] <= 2:
        return f"A{n}"
    if degrees[-1] != 3 or degrees.count(3) != 1:
        return None
    centre = next(v for v in nodes if len(neighbours[v]) == 3)
    arms = sorted(len(a) for a in _arms(neighbours, centre))
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{n}"
    return None


def cartan_type(cartan: Sequence[Sequence[int]]) -> str:
    """
    Cartan type of a connected finite-type Cartan matrix.

    Convention: cartan[i][j] = <alpha_j, alpha_i^v>, so cartan[i][j] = -2 or
    -3 means node i is the short end of the bond. A double bond ending in a
    short node is type B, ending in a long node type C; the rank-2 case is B2.
    """
    n = len(cartan)
    nodes = list(range(n))
    neighbours = {i: [j for j in nodes if j != i and cartan[i][j] != 0] for i in nodes}
    bonds = {
        (i, j): cartan[i][j] * cartan[j][i] for i in nodes for j in nodes if i < j and cartan[i][j] != 0
    }
    multiple = {edge: m for edge, m in bonds.items() if m > 1}
    if n == 1:
        return "A1"
    if not multiple:
        name = _simply_laced_name(neighbours, nodes)
        if name is None:
            raise InvariantViolation(f"not a finite Cartan matrix: {cartan}")
        return name
    if len(multiple) > 1 or len(bonds) != n - 1 or max(len(v) for v in neighbours.values()) > 2:
        raise InvariantViolation(f"not a finite Cartan matrix: {cartan}")
    (u, w), m = next(iter(multiple.items()))
    if m == 3:
        if n != 2:
            raise InvariantViolation(f"triple bond outside G2: {cartan}")
        return "G2"
    if n == 2:
        return "B2"
    path = _path_order(neighbours, nodes)
    if {path[0], path[1]} == {u, w}:
        end, inner = path[0], path[1]
    elif {path[-1], path[-2]} == {u, w}:
        end, inner = path[-1], path[-2]
    elif n == 4:
        return "F4"
    else:
        raise InvariantViolation(f"double bond in the middle of a rank-{n} chain: {cartan}")
    # the end node is short when its row carries the -2
    return f"B{n}" if cartan[end][inner] == -2 else f"C{n}"


def _coxeter_component_label(matrix: Sequence[Sequence[Optional[int]]], nodes: Sequence[int]) -> str:
    n = len(nodes)
    if n == 1:
        return "A1"
    neighbours = {v: [w for w in nodes if w != v and matrix[v][w] != 2] for v in nodes}
    labels = {
        (v, w): matrix[v][w] for v in nodes for w in nodes if v < w and matrix[v][w] != 2
    }
    if any(m is INFINITY for m in labels.values()):
        return "A~1" if n == 2 else "unrecognized"
    edges = len(labels)
    heavy = {edge: m for edge, m in labels.items() if m > 3}
    max_degree = max(len(v) for v in neighbours.values())

    if edges == n and max_degree == 2 and not heavy:
        return f"A~{n - 1}"
    if edges != n - 1:
        return "unrecognized"

    if not heavy:
        name = _simply_laced_name(neighbours, nodes)
        if name is not None:
            return name
        degrees = sorted(len(neighbours[v]) for v in nodes)
        if degrees[-1] == 4 and n == 5:
            return "D~4"
        if degrees[-1] == 3 and degrees.count(3) == 2:
            return f"D~{n - 1}"
        if degrees[-1] == 3:
            centre = next(v for v in nodes if len(neighbours[v]) == 3)
            arms = sorted(len(a) for a in _arms(neighbours, centre))
            return {(2, 2, 2): "E~6", (1, 3, 3): "E~7", (1, 2, 5): "E~8"}.get(tuple(arms), "unrecognized")
        return "unrecognized"

    if max_degree <= 2:
        path = _path_order(neighbours, nodes)
        marks = [matrix[path[k]][path[k + 1]] for k in range(n - 1)]
        if n == 2:
            m = marks[0]
            return {4: "B2", 6: "G2"}.get(m, f"I2({m})")
        if marks.count(4) == 1 and 4 in (marks[0], marks[-1]) and set(marks) <= {3, 4}:
            return f"B{n}"
        if marks == [3, 4, 3]:
            return "F4"
        if marks[0] == 4 and marks[-1] == 4 and all(m == 3 for m in marks[1:-1]):
            return f"C~{n - 1}"
        if marks in ([6, 3], [3, 6]):
            return "G~2"
        if marks in ([3, 3, 4, 3], [3, 4, 3, 3]):
            return "F~4"
        if marks in ([5, 3], [3, 5]):
            return "H3"
        return "unrecognized"

    if max_degree == 3 and len(heavy) == 1 and set(heavy.values()) == {4}:
        centre = next(v for v in nodes if len(neighbours[v]) == 3)
        (u, w), _ = next(iter(heavy.items()))
        arms = _arms(neighbours, centre)
        for index, arm in enumerate(arms):
            tail = {arm[-1], arm[-2] if len(arm) > 1 else centre}
            others = [len(a) for k, a in enumerate(arms) if k != index]
            if tail == {u, w} and others == [1, 1]:
                return f"B~{n - 1}"
    return "unrecognized"


def coxeter_type_label(matrix: Sequence[Sequence[Optional[int]]]) -> str:
    """
    Name a Coxeter matrix as a product of irreducible finite or affine types.

    Affine types carry a '~' (``A~1`` is the infinite dihedral group). The
    empty matrix is ``trivial``. Components are joined with 'x' in sorted order.
    """
    n = len(matrix)
    if n == 0:
        return "trivial"
    components = connected_components(n, lambda v, w: matrix[v][w] != 2)
    labels = sorted(_coxeter_component_label(matrix, comp) for comp in components)
    return "x".join(labels)

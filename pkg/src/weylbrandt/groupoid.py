"""Orbit enumeration over twist classes, the arrow groupoid of reflections,
and real-root enumeration at the basis level.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from ._intmat import IntMatrix, identity, mat_det, mat_mul
from .braiding import (
    BraidingMatrix,
    NotReflectableError,
    TwistClass,
    bicharacter_eval,
    canonicalize,
    reflect,
    rep_matrix,
)

DEFAULT_BOUND = 1000


class Status(Enum):
    COMPLETE = "complete"
    BOUND_EXCEEDED = "bound_exceeded"


class Equivalence(Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not_equivalent"
    INCONCLUSIVE = "inconclusive"


class RankMismatchError(ValueError):
    """Raised when an operation needs inputs of equal (or specific) rank."""


class UndefinedCompositionError(Exception):
    """Raised when two groupoid elements do not compose."""


@dataclass(frozen=True, slots=True)
class GroupoidElement:
    """An arrow: a lattice automorphism ``s`` attached to its source basis.

    Both matrices act on column vectors; the columns of ``source_basis`` are
    the basis vectors of the source object.  Both must be invertible over
    the integers (determinant +-1).
    """

    s: IntMatrix
    source_basis: IntMatrix

    def __post_init__(self) -> None:
        n = len(self.s)
        if any(len(row) != n for row in self.s):
            raise ValueError("s must be square")
        if len(self.source_basis) != n or any(
            len(row) != n for row in self.source_basis
        ):
            raise ValueError("source_basis must be square of the same rank")
        if abs(mat_det(self.s)) != 1 or abs(mat_det(self.source_basis)) != 1:
            raise ValueError("groupoid matrices must have determinant +-1")

    @classmethod
    def identity_at(cls, basis: IntMatrix) -> "GroupoidElement":
        return cls(identity(len(basis)), basis)


def compose(g: GroupoidElement, h: GroupoidElement) -> GroupoidElement:
    """(s, E) o (t, F) = (s*t, F), defined only when t maps F onto E."""
    if mat_mul(h.s, h.source_basis) != g.source_basis:
        raise UndefinedCompositionError(
            "left factor's source is not the right factor's target"
        )
    return GroupoidElement(mat_mul(g.s, h.s), h.source_basis)


@dataclass(frozen=True, slots=True)
class OrbitNode:
    index: int
    twist: TwistClass
    matrix: BraidingMatrix


@dataclass(frozen=True, slots=True)
class OrbitEdge:
    source: int
    vertex: int
    target: int
    s_matrix: IntMatrix


@dataclass(frozen=True, slots=True)
class OrbitGraph:
    """Twist classes reachable by reflections, with the discovery-order BFS
    labeling; ``dead_ends`` lists (node, vertex) pairs where no reflection
    exists.
    """

    nodes: tuple[OrbitNode, ...]
    edges: tuple[OrbitEdge, ...]
    dead_ends: tuple[tuple[int, int], ...]
    status: Status

    @property
    def classes(self) -> frozenset[TwistClass]:
        return frozenset(node.twist for node in self.nodes)

    def index_of(self, twist: TwistClass) -> int | None:
        for node in self.nodes:
            if node.twist == twist:
                return node.index
        return None


def enumerate_orbit(matrix: BraidingMatrix, bound: int = DEFAULT_BOUND) -> OrbitGraph:
    """Breadth-first closure of the twist class of ``matrix`` under all
    reflections, expanding canonical representatives, vertices in ascending
    order.  Stops with BOUND_EXCEEDED when a new node would exceed ``bound``.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    start = canonicalize(matrix)
    nodes = [OrbitNode(0, start, rep_matrix(start))]
    index: dict[TwistClass, int] = {start: 0}
    edges: list[OrbitEdge] = []
    dead_ends: list[tuple[int, int]] = []
    queue: deque[int] = deque([0])
    status = Status.COMPLETE
    while queue:
        a = queue.popleft()
        source = nodes[a].matrix
        for i in range(matrix.rank):
            try:
                r = reflect(source, i)
            except NotReflectableError:
                dead_ends.append((a, i))
                continue
            twist = canonicalize(r.reflected)
            b = index.get(twist)
            if b is None:
                if len(nodes) >= bound:
                    status = Status.BOUND_EXCEEDED
                    queue.clear()
                    break
                b = len(nodes)
                index[twist] = b
                nodes.append(OrbitNode(b, twist, rep_matrix(twist)))
                queue.append(b)
            edges.append(OrbitEdge(a, i, b, r.s_matrix))
    return OrbitGraph(tuple(nodes), tuple(edges), tuple(dead_ends), status)


def weyl_equivalent(
    first: BraidingMatrix, second: BraidingMatrix, bound: int = DEFAULT_BOUND
) -> Equivalence:
    """Whether the two twist classes lie in one reflection orbit."""
    if first.rank != second.rank:
        raise RankMismatchError(
            f"cannot compare rank {first.rank} with rank {second.rank}"
        )
    target = canonicalize(second)
    orbit = enumerate_orbit(first, bound)
    if target in orbit.classes:
        return Equivalence.EQUIVALENT
    if orbit.status is Status.COMPLETE:
        return Equivalence.NOT_EQUIVALENT
    return Equivalence.INCONCLUSIVE


@dataclass(frozen=True, slots=True)
class RootEnumeration:
    """Nonnegative real roots with their heights (None means infinite)."""

    roots: tuple[tuple[tuple[int, ...], int | None], ...]
    status: Status


def enumerate_real_roots(
    matrix: BraidingMatrix, bound: int = DEFAULT_BOUND
) -> RootEnumeration:
    """Collect nonnegative rows of every basis reachable by reflections.

    Bases are tracked as integer matrices whose rows are the basis vectors in
    the original coordinates; the local braiding at a basis is the pullback of
    the starting bicharacter, which equals the iterated reflected matrix, so
    it is propagated instead of recomputed.  The height of a root d is the
    multiplicative order of chi(d, d) when that order is finite and at least
    2, otherwise infinite.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    n = matrix.rank
    start = identity(n)
    visited: set[IntMatrix] = {start}
    queue: deque[tuple[IntMatrix, BraidingMatrix]] = deque([(start, matrix)])
    status = Status.COMPLETE
    while queue:
        basis, local = queue.popleft()
        for i in range(n):
            try:
                r = reflect(local, i)
            except NotReflectableError:
                continue
            moved = mat_mul(r.s_matrix, basis)
            if moved in visited:
                continue
            if len(visited) >= bound:
                status = Status.BOUND_EXCEEDED
                queue.clear()
                break
            visited.add(moved)
            queue.append((moved, r.reflected))
    found = {row for basis in visited for row in basis if all(c >= 0 for c in row)}
    roots = []
    for d in sorted(found, key=lambda v: (sum(v), v)):
        order = bicharacter_eval(matrix, d, d).order()
        roots.append((d, order if order is not None and order >= 2 else None))
    return RootEnumeration(tuple(roots), status)


def orbit_to_json(orbit: OrbitGraph) -> dict:
    """A stable JSON document for an orbit graph; indices are 1-based."""
    return {
        "schema": 1,
        "status": orbit.status.value,
        "rank": orbit.nodes[0].twist.rank,
        "nodes": [
            {
                "id": node.index,
                "class": node.twist.to_document(),
                "matrix": node.matrix.to_document(),
            }
            for node in orbit.nodes
        ],
        "edges": [
            {
                "source": e.source,
                "vertex": e.vertex + 1,
                "target": e.target,
                "s": [list(row) for row in e.s_matrix],
            }
            for e in orbit.edges
        ],
        "dead_ends": [
            {"node": a, "vertex": i + 1} for a, i in orbit.dead_ends
        ],
    }


def orbit_to_dot(orbit: OrbitGraph) -> str:
    """An undirected DOT rendering; parallel reflection edges are merged."""
    lines = ["graph orbit {", "  node [shape=box];"]
    for node in orbit.nodes:
        lines.append(f'  n{node.index} [label="{node.index}: {node.twist.label()}"];')
    seen: set[tuple[int, int, int]] = set()
    for e in orbit.edges:
        key = (min(e.source, e.target), max(e.source, e.target), e.vertex)
        if key in seen:
            continue
        seen.add(key)
        lines.append(f'  n{e.source} -- n{e.target} [label="s{e.vertex + 1}"];')
    for a, i in orbit.dead_ends:
        lines.append(f'  n{a} -- dead_{a}_{i + 1} [label="s{i + 1}", style=dashed];')
        lines.append(f'  dead_{a}_{i + 1} [label="undefined", shape=plaintext];')
    lines.append("}")
    return "\n".join(lines) + "\n"

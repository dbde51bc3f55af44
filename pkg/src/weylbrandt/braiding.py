"""Diagonal braiding matrices: interaction exponents, pseudo-reflections,
and canonical twist-equivalence classes.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import lcm
from typing import Iterable

from .scalar import ONE, Scalar, ScalarParseError, parse_scalar


class NotReflectableError(Exception):
    """Raised when some interaction exponent at ``vertex`` is undefined."""

    def __init__(self, vertex: int):
        super().__init__(f"no finite interaction exponent at vertex index {vertex}")
        self.vertex = vertex


@dataclass(frozen=True, slots=True)
class BraidingMatrix:
    """A square matrix of exact scalars, stored as a tuple of rows."""

    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise ValueError("rank must be at least 1")
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def q(self, i: int, j: int) -> Scalar:
        return self.entries[i][j]

    def __str__(self) -> str:
        return ";".join(",".join(str(q) for q in row) for row in self.entries)

    def to_document(self) -> dict:
        return {
            "rank": self.rank,
            "entries": [str(q) for row in self.entries for q in row],
        }

    @classmethod
    def from_document(cls, doc: dict) -> "BraidingMatrix":
        rank = doc.get("rank")
        cells = doc.get("entries")
        if not isinstance(rank, int) or rank < 1:
            raise ValueError("document field 'rank' must be a positive integer")
        if not isinstance(cells, list) or len(cells) != rank * rank:
            raise ValueError("document field 'entries' must list rank*rank scalars")
        it = iter(cells)
        return cls(
            tuple(
                tuple(parse_scalar(next(it)) for _ in range(rank))
                for _ in range(rank)
            )
        )

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "BraidingMatrix":
        return cls.from_document(json.loads(text))


def parse_matrix(text: str) -> BraidingMatrix:
    """Parse the inline row-major syntax "q11,q12;q21,q22"."""
    rows = text.split(";")
    parsed = tuple(tuple(parse_scalar(cell) for cell in row.split(",")) for row in rows)
    if any(len(row) != len(parsed) for row in parsed):
        raise ScalarParseError("matrix must be square", text, 0)
    return BraidingMatrix(parsed)


def _check_vertex(matrix: BraidingMatrix, i: int) -> None:
    if not 0 <= i < matrix.rank:
        raise IndexError(f"vertex index {i} out of range for rank {matrix.rank}")


def m_exponent(matrix: BraidingMatrix, i: int, j: int) -> int | None:
    """Least m >= 0 with [m+1]_{q_ii} * (q_ii^m * q_ij * q_ji - 1) = 0, or None.

    The two vanishing branches are solved exactly: the product branch by
    pinning m against parameter exponents (or scanning one period of the
    root-of-unity congruence), the q-integer branch at ord(q_ii) - 1.
    """
    _check_vertex(matrix, i)
    _check_vertex(matrix, j)
    if i == j:
        raise ValueError("interaction exponent is defined for distinct indices only")
    qii = matrix.entries[i][i]
    prod = matrix.entries[i][j] * matrix.entries[j][i]
    candidates = []
    order = qii.order()
    if order is not None and order >= 2:
        candidates.append(order - 1)
    solved = _least_power_cancelling(qii, prod)
    if solved is not None:
        candidates.append(solved)
    return min(candidates) if candidates else None


def _least_power_cancelling(base: Scalar, prod: Scalar) -> int | None:
    """Least m >= 0 with base^m * prod = 1, or None if no power cancels."""
    pinned = None
    leftover = dict(prod.params)
    for name, exp in base.params:
        off = leftover.pop(name, 0)
        if off % exp:
            return None
        m = -off // exp
        if m < 0 or (pinned is not None and m != pinned):
            return None
        pinned = m
    if leftover:
        return None
    if pinned is not None:
        return pinned if (base ** pinned * prod).is_one() else None
    period = lcm(base.root.denominator, prod.root.denominator)
    for m in range(period):
        if (base.root * m + prod.root) % 1 == 0:
            return m
    return None


def _p_scalar(qii: Scalar, prod: Scalar, m: int) -> Scalar:
    if (qii ** m * prod).is_one():
        return ONE
    return qii.inverse() * prod


def p_factor(matrix: BraidingMatrix, i: int, j: int) -> Scalar:
    """The residual twist factor p_ij attached to reflecting at vertex i."""
    m = m_exponent(matrix, i, j)
    if m is None:
        raise NotReflectableError(i)
    return _p_scalar(matrix.entries[i][i], matrix.entries[i][j] * matrix.entries[j][i], m)


@dataclass(frozen=True, slots=True)
class Reflection:
    """The full outcome of reflecting a braiding matrix at one vertex.

    ``m_row[j]`` is the interaction exponent toward j, with -2 at the vertex
    itself; ``s_matrix`` acts on row vectors (row j is the image of the j-th
    basis vector); ``p_row`` holds the twist factors, with 1 at the vertex.
    """

    vertex: int
    m_row: tuple[int, ...]
    p_row: tuple[Scalar, ...]
    s_matrix: tuple[tuple[int, ...], ...]
    reflected: BraidingMatrix


def reflect(matrix: BraidingMatrix, i: int) -> Reflection:
    """Reflect at vertex i: q'_jl = q_ii^(m_j*m_l) * q_il^m_j * q_ji^m_l * q_jl."""
    _check_vertex(matrix, i)
    n = matrix.rank
    exps = []
    for j in range(n):
        if j == i:
            exps.append(-2)
            continue
        m = m_exponent(matrix, i, j)
        if m is None:
            raise NotReflectableError(i)
        exps.append(m)
    m_row = tuple(exps)
    qii = matrix.entries[i][i]
    p_row = tuple(
        ONE
        if j == i
        else _p_scalar(qii, matrix.entries[i][j] * matrix.entries[j][i], m_row[j])
        for j in range(n)
    )
    s_matrix = tuple(
        tuple(
            -1 if j == i and k == i else (1 if j == k else (m_row[j] if k == i else 0))
            for k in range(n)
        )
        for j in range(n)
    )
    q = matrix.entries
    reflected = BraidingMatrix(
        tuple(
            tuple(
                (qii ** (m_row[j] * m_row[l]))
                * (q[i][l] ** m_row[j])
                * (q[j][i] ** m_row[l])
                * q[j][l]
                for l in range(n)
            )
            for j in range(n)
        )
    )
    return Reflection(i, m_row, p_row, s_matrix, reflected)


def cartan_matrix(matrix: BraidingMatrix) -> tuple[tuple[int, ...], ...]:
    """Generalized Cartan matrix: 2 on the diagonal, -m_ij off it."""
    n = matrix.rank
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(2)
                continue
            m = m_exponent(matrix, i, j)
            if m is None:
                raise NotReflectableError(i)
            row.append(-m)
        rows.append(tuple(row))
    return tuple(rows)


def bicharacter_eval(
    matrix: BraidingMatrix, d: Iterable[int], e: Iterable[int]
) -> Scalar:
    """chi(d, e) = prod q_ij^(d_i * e_j), the biadditive extension of the matrix."""
    d = tuple(d)
    e = tuple(e)
    n = matrix.rank
    if len(d) != n or len(e) != n:
        raise ValueError(f"vectors must have length {n}")
    out = ONE
    for i, di in enumerate(d):
        if not di:
            continue
        for j, ej in enumerate(e):
            if ej:
                out = out * matrix.entries[i][j] ** (di * ej)
    return out


def _pair_index(i: int, j: int, n: int) -> int:
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


@total_ordering
@dataclass(frozen=True, slots=True)
class TwistClass:
    """Twist-equivalence data, canonical under simultaneous index permutation.

    Two braiding matrices are twist-equivalent iff they share diagonals and
    the off-diagonal products q_ij * q_ji; ``products`` lists those for i < j
    in lexicographic pair order, after minimizing over permutations.
    """

    diagonal: tuple[Scalar, ...]
    products: tuple[Scalar, ...]

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def product(self, i: int, j: int) -> Scalar:
        if i == j:
            raise ValueError("off-diagonal product needs distinct indices")
        if i > j:
            i, j = j, i
        return self.products[_pair_index(i, j, self.rank)]

    def _key(self) -> tuple:
        return (self.diagonal, self.products)

    def __lt__(self, other: "TwistClass") -> bool:
        if not isinstance(other, TwistClass):
            return NotImplemented
        return self._key() < other._key()

    def label(self) -> str:
        diag = ", ".join(str(q) for q in self.diagonal)
        if not self.products:
            return diag
        prods = ", ".join(str(q) for q in self.products)
        return f"{diag} | {prods}"

    def to_document(self) -> dict:
        n = self.rank
        return {
            "diagonal": [str(q) for q in self.diagonal],
            "products": [
                {"i": i + 1, "j": j + 1, "value": str(self.product(i, j))}
                for i in range(n)
                for j in range(i + 1, n)
            ],
        }


def canonicalize(matrix: BraidingMatrix) -> TwistClass:
    """Permutation-minimal twist class of a braiding matrix (rank <= 8)."""
    n = matrix.rank
    if n > 8:
        raise ValueError("canonicalization enumerates permutations; rank > 8 refused")
    diag = tuple(matrix.entries[k][k] for k in range(n))
    prods = {
        (a, b): matrix.entries[a][b] * matrix.entries[b][a]
        for a in range(n)
        for b in range(a + 1, n)
    }
    best: tuple | None = None
    for perm in itertools.permutations(range(n)):
        d = tuple(diag[perm[k]] for k in range(n))
        p = tuple(
            prods[tuple(sorted((perm[a], perm[b])))]
            for a in range(n)
            for b in range(a + 1, n)
        )
        if best is None or (d, p) < best:
            best = (d, p)
    return TwistClass(*best)


def rep_matrix(twist: TwistClass) -> BraidingMatrix:
    """The canonical representative with q_ij = 1 for i < j."""
    n = twist.rank
    return BraidingMatrix(
        tuple(
            tuple(
                twist.diagonal[i]
                if i == j
                else (ONE if i < j else twist.product(j, i))
                for j in range(n)
            )
            for i in range(n)
        )
    )

"""The rank-2 classification table: loading the data file, instantiating
rows, verifying each row's orbit closure and pairwise disjointness, and
classifying concrete braidings against the table.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import gcd
from typing import Iterable, Iterator, Mapping

from .braiding import BraidingMatrix, TwistClass, canonicalize, rep_matrix
from .groupoid import OrbitGraph, RankMismatchError, Status, enumerate_orbit
from .scalar import ONE, Scalar, parameter, parse_scalar

DEFAULT_VERIFY_BOUND = 64

Assignment = dict[str, Scalar]


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class MatchStatus(Enum):
    MATCH = "match"
    NO_MATCH = "no_match"
    INCONCLUSIVE = "inconclusive"


class DomainViolationError(ValueError):
    """A fixed parameter was given a value outside its declared domain."""


@dataclass(frozen=True, slots=True)
class FixedParam:
    """A fixed symbol of a table row.

    ``kind`` is "root" (value must be a root of unity whose order is listed
    in ``orders``) or "generic" (value must have infinite order, i.e. involve
    a formal parameter).  ``exclude`` lists values ruled out by the row; the
    expressions may mention fixed symbols declared earlier in the row.
    """

    name: str
    kind: str
    orders: tuple[int, ...] = ()
    exclude: tuple[Scalar, ...] = ()


@dataclass(frozen=True, slots=True)
class CatalogRow:
    """One row: forms (q11, q21, q22) with q12 = 1, fixed parameter domains,
    and an optional free symbol ranging over finitely many derived values."""

    row_id: int
    trees: tuple[str, ...]
    fixed: tuple[FixedParam, ...]
    free_symbol: str | None
    free_values: tuple[Scalar, ...]
    forms: tuple[tuple[Scalar, Scalar, Scalar], ...]


@dataclass(frozen=True, slots=True)
class RowInstantiation:
    row_id: int
    assignment: Assignment
    classes: tuple[TwistClass, ...]

    @property
    def class_set(self) -> frozenset[TwistClass]:
        return frozenset(self.classes)


@dataclass(frozen=True, slots=True)
class RowCheck:
    row_id: int
    assignment: Assignment
    verdict: Verdict
    detail: str
    instantiation: RowInstantiation
    orbit: OrbitGraph


@dataclass(frozen=True, slots=True)
class Overlap:
    """Two instantiations (as indices into Report.checks) sharing classes."""

    first: int
    second: int
    shared: tuple[TwistClass, ...]


@dataclass(frozen=True, slots=True)
class Report:
    checks: tuple[RowCheck, ...]
    overlaps: tuple[Overlap, ...]

    @property
    def verdict(self) -> Verdict:
        if self.overlaps or any(c.verdict is Verdict.FAIL for c in self.checks):
            return Verdict.FAIL
        if any(c.verdict is Verdict.INCONCLUSIVE for c in self.checks):
            return Verdict.INCONCLUSIVE
        return Verdict.PASS


@dataclass(frozen=True, slots=True)
class Classification:
    status: MatchStatus
    row_id: int | None
    assignment: Assignment | None


def _load_fixed(raw: dict) -> FixedParam:
    kind = raw["kind"]
    if kind not in ("generic", "root"):
        raise ValueError(f"unknown parameter kind {kind!r}")
    return FixedParam(
        raw["name"],
        kind,
        tuple(sorted(raw.get("orders") or ())),
        tuple(parse_scalar(x) for x in raw.get("exclude") or ()),
    )


@lru_cache(maxsize=1)
def load_rows() -> tuple[CatalogRow, ...]:
    """Parse the bundled table; rows come back in ascending row_id order."""
    text = resources.files("weylbrandt.data").joinpath("rank2_table.json").read_text()
    doc = json.loads(text)
    rows = []
    for raw in doc["rows"]:
        free = raw.get("free")
        rows.append(
            CatalogRow(
                row_id=raw["row"],
                trees=tuple(raw["trees"]),
                fixed=tuple(_load_fixed(p) for p in raw["fixed"]),
                free_symbol=free["name"] if free else None,
                free_values=tuple(parse_scalar(v) for v in free["values"])
                if free
                else (),
                forms=tuple(
                    tuple(parse_scalar(cell) for cell in form) for form in raw["forms"]
                ),
            )
        )
    return tuple(sorted(rows, key=lambda r: r.row_id))


def row_by_id(row_id: int) -> CatalogRow:
    for row in load_rows():
        if row.row_id == row_id:
            return row
    raise ValueError(f"no table row numbered {row_id}")


def _primitive_roots(orders: Iterable[int]) -> list[Scalar]:
    return [
        Scalar(Fraction(k, m))
        for m in orders
        for k in range(1, m + 1)
        if gcd(k, m) == 1
    ]


def _excluded(param: FixedParam, value: Scalar, assignment: Mapping[str, Scalar]) -> bool:
    return any(excl.substitute(assignment) == value for excl in param.exclude)


def _validate_assignment(row: CatalogRow, assignment: Assignment) -> None:
    names = {p.name for p in row.fixed}
    if set(assignment) != names:
        raise DomainViolationError(
            f"row {row.row_id} expects values for exactly {sorted(names)}"
        )
    for param in row.fixed:
        value = assignment[param.name]
        if param.kind == "root":
            if value.params or value.root.denominator not in param.orders:
                raise DomainViolationError(
                    f"{param.name} must be a root of unity of order in {param.orders},"
                    f" got {value}"
                )
        elif not value.params:
            raise DomainViolationError(
                f"{param.name} must have infinite order, got {value}"
            )
        if _excluded(param, value, assignment):
            raise DomainViolationError(f"{param.name} = {value} is excluded")


def _class_tuple(row: CatalogRow, assignment: Mapping[str, Scalar]) -> tuple[TwistClass, ...]:
    envs: list[dict[str, Scalar]]
    if row.free_symbol is None:
        envs = [dict(assignment)]
    else:
        envs = [
            {**assignment, row.free_symbol: value.substitute(assignment)}
            for value in row.free_values
        ]
    classes = set()
    for env in envs:
        for q11, q21, q22 in row.forms:
            matrix = BraidingMatrix(
                (
                    (q11.substitute(env), ONE),
                    (q21.substitute(env), q22.substitute(env)),
                )
            )
            classes.add(canonicalize(matrix))
    return tuple(sorted(classes))


def instantiate_row(row: CatalogRow, assignment: Assignment) -> RowInstantiation:
    """Evaluate every form at every free value; classes are deduplicated."""
    _validate_assignment(row, assignment)
    return RowInstantiation(row.row_id, dict(assignment), _class_tuple(row, assignment))


def default_assignments(row: CatalogRow) -> list[Assignment]:
    """The verification sweep: every primitive root of every listed order for
    root symbols, fresh formal parameters (q, q2, ...) for generic ones."""
    pools = []
    generic_seen = 0
    for param in row.fixed:
        if param.kind == "root":
            values = _primitive_roots(param.orders)
        else:
            name = "q" if generic_seen == 0 else f"q{generic_seen + 1}"
            generic_seen += 1
            values = [parameter(name)]
        pools.append([(param.name, value) for value in values])
    return [dict(combo) for combo in itertools.product(*pools)]


def verify_row(
    row: CatalogRow, assignment: Assignment, bound: int = DEFAULT_VERIFY_BOUND
) -> RowCheck:
    """Pass iff the reflection orbit of one member is complete, totally
    reflectable, and reaches exactly the row's classes."""
    inst = instantiate_row(row, assignment)
    orbit = enumerate_orbit(rep_matrix(inst.classes[0]), bound)
    extra = orbit.classes - inst.class_set
    missing = inst.class_set - orbit.classes
    if extra:
        verdict = Verdict.FAIL
        detail = f"orbit reached {len(extra)} class(es) outside the row"
    elif orbit.dead_ends:
        node, vertex = orbit.dead_ends[0]
        verdict = Verdict.FAIL
        detail = f"reflection undefined at node {node}, vertex {vertex + 1}"
    elif orbit.status is Status.BOUND_EXCEEDED:
        verdict = Verdict.INCONCLUSIVE
        detail = "orbit bound exceeded"
    elif missing:
        verdict = Verdict.FAIL
        detail = f"orbit missed {len(missing)} of the row's class(es)"
    else:
        verdict = Verdict.PASS
        detail = f"orbit matches the row ({len(orbit.nodes)} classes)"
    return RowCheck(row.row_id, dict(assignment), verdict, detail, inst, orbit)


def verify_all(
    row_ids: Iterable[int] | None = None, bound: int = DEFAULT_VERIFY_BOUND
) -> Report:
    """Verify every instantiation of the selected rows, then check pairwise
    disjointness of the class sets.

    Two instantiations of the same row with literally equal class sets (seed
    values related by the row's free-parameter relation) describe the same
    braidings and are exempt from the disjointness requirement.
    """
    wanted = None if row_ids is None else set(row_ids)
    checks = []
    for row in load_rows():
        if wanted is not None and row.row_id not in wanted:
            continue
        for assignment in default_assignments(row):
            checks.append(verify_row(row, assignment, bound))
    overlaps = find_overlaps([check.instantiation for check in checks])
    return Report(tuple(checks), tuple(overlaps))


def find_overlaps(instantiations: list[RowInstantiation]) -> tuple[Overlap, ...]:
    """All disjointness violations among the given instantiations."""
    overlaps = []
    for a in range(len(instantiations)):
        for b in range(a + 1, len(instantiations)):
            x = instantiations[a]
            y = instantiations[b]
            shared = x.class_set & y.class_set
            if not shared:
                continue
            if x.row_id == y.row_id and x.class_set == y.class_set:
                continue
            overlaps.append(Overlap(a, b, tuple(sorted(shared))))
    return tuple(overlaps)


def _generic_candidates(orbit: OrbitGraph) -> tuple[Scalar, ...]:
    pool = set()
    for node in orbit.nodes:
        for scalar in (*node.twist.diagonal, *node.twist.products):
            pool.add(scalar)
            pool.add(scalar.inverse())
    return tuple(sorted(pool))


def _candidate_assignments(
    row: CatalogRow, generic_pool: tuple[Scalar, ...]
) -> Iterator[Assignment]:
    pools = []
    for param in row.fixed:
        values = (
            _primitive_roots(param.orders) if param.kind == "root" else generic_pool
        )
        pools.append([(param.name, value) for value in values])
    for combo in itertools.product(*pools):
        assignment = dict(combo)
        if any(_excluded(p, assignment[p.name], assignment) for p in row.fixed):
            continue
        yield assignment


def classify(matrix: BraidingMatrix, bound: int = DEFAULT_VERIFY_BOUND) -> Classification:
    """Find the first table row whose classes meet the orbit of ``matrix``.

    Rows are scanned in ascending order.  Root symbols range over all
    primitive roots of their listed orders; generic symbols range over the
    scalars occurring in the orbit's class data together with their inverses
    (root-of-unity values are admitted here: a hit is an exact membership
    fact, while the domain check of instantiate_row stays strict).
    """
    if matrix.rank != 2:
        raise RankMismatchError(f"classification covers rank 2 only, got {matrix.rank}")
    names = {
        name for row in matrix.entries for s in row for name, _ in s.params
    }
    if len(names) > 1:
        raise ValueError("at most one formal parameter is supported")
    orbit = enumerate_orbit(matrix, bound)
    targets = orbit.classes
    generic_pool = _generic_candidates(orbit)
    for row in load_rows():
        for assignment in _candidate_assignments(row, generic_pool):
            if set(_class_tuple(row, assignment)) & targets:
                return Classification(MatchStatus.MATCH, row.row_id, assignment)
    if orbit.status is Status.COMPLETE:
        return Classification(MatchStatus.NO_MATCH, None, None)
    return Classification(MatchStatus.INCONCLUSIVE, None, None)


def format_assignment(assignment: Mapping[str, Scalar]) -> str:
    return " ".join(f"{name}={value}" for name, value in assignment.items())

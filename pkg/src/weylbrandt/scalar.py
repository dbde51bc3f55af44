"""Exact scalars: a root of unity times a monomial in formal parameters.

A scalar is u(p/r) * t1^e1 * ... * tk^ek, where u(p/r) stands for
exp(2*pi*i*p/r) and the named parameters are algebraically independent
transcendentals over Q.  Every value in this domain is nonzero, so
multiplication, inversion, integer powers, equality, and multiplicative
order are all exact and decidable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Mapping


class ScalarParseError(ValueError):
    """Malformed scalar literal; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} (column {pos + 1} of {text!r})")
        self.text = text
        self.pos = pos


@total_ordering
@dataclass(frozen=True, slots=True, repr=False)
class Scalar:
    """An exact nonzero scalar.

    ``root`` is the exponent of exp(2*pi*i), reduced into [0, 1);
    ``params`` maps parameter names to nonzero integer exponents, kept as a
    name-sorted tuple so scalars hash and compare deterministically.
    Construction normalizes both fields, so ``Scalar(Fraction(5, 4))`` and
    ``Scalar(Fraction(1, 4))`` are the same value.
    """

    root: Fraction = Fraction(0)
    params: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        root = self.root % 1
        if root is not self.root:
            object.__setattr__(self, "root", root)
        merged: dict[str, int] = {}
        for name, exp in self.params:
            merged[name] = merged.get(name, 0) + exp
        cleaned = tuple(sorted((n, e) for n, e in merged.items() if e))
        if cleaned != self.params:
            object.__setattr__(self, "params", cleaned)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        exps = dict(self.params)
        for name, exp in other.params:
            exps[name] = exps.get(name, 0) + exp
        return Scalar(self.root + other.root, tuple(exps.items()))

    def __pow__(self, k: int) -> "Scalar":
        return Scalar(self.root * k, tuple((n, e * k) for n, e in self.params))

    def inverse(self) -> "Scalar":
        return self ** -1

    def is_one(self) -> bool:
        return not self.root and not self.params

    def order(self) -> int | None:
        """Multiplicative order, or None when infinite (a parameter is present)."""
        if self.params:
            return None
        return self.root.denominator

    def substitute(self, values: Mapping[str, "Scalar"]) -> "Scalar":
        """Replace named parameters by scalars; unlisted parameters pass through."""
        out = Scalar(self.root)
        for name, exp in self.params:
            value = values.get(name)
            if value is None:
                out = out * Scalar(Fraction(0), ((name, exp),))
            else:
                out = out * value ** exp
        return out

    @property
    def _key(self) -> tuple:
        return (self.root.denominator, self.root.numerator, self.params)

    def __lt__(self, other: "Scalar") -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._key < other._key

    def __str__(self) -> str:
        parts = []
        if self.root:
            parts.append(f"u({self.root.numerator}/{self.root.denominator})")
        parts.extend(n if e == 1 else f"{n}^{e}" for n, e in self.params)
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"<Scalar {self}>"


ONE = Scalar(Fraction(0))
MINUS_ONE = Scalar(Fraction(1, 2))


def root_of_unity(numerator: int, denominator: int) -> Scalar:
    """u(numerator/denominator), i.e. exp(2*pi*i*numerator/denominator)."""
    if denominator <= 0:
        raise ValueError("denominator must be a positive integer")
    return Scalar(Fraction(numerator, denominator))


def parameter(name: str, exponent: int = 1) -> Scalar:
    if not name:
        raise ValueError("parameter name must be nonempty")
    return Scalar(Fraction(0), ((name, exponent),))


def qint_is_zero(q: Scalar, m: int) -> bool:
    """Whether the q-integer [m]_q = 1 + q + ... + q^(m-1) vanishes.

    In characteristic zero, [m]_q = 0 for m >= 1 iff q != 1 and q^m = 1;
    the empty sum [0]_q counts as zero.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return True
    if q.is_one():
        return False
    return (q ** m).is_one()


_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_INT = re.compile(r"-?\d+")
_DIGITS = re.compile(r"\d+")


class _Cursor:
    __slots__ = ("text", "pos")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.eat(literal):
            raise ScalarParseError(f"expected {literal!r}", self.text, self.pos)

    def match(self, pattern: re.Pattern) -> str | None:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if m is None:
            return None
        self.pos = m.end()
        return m.group()


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar literal.

    Grammar (one unusual rule: a leading minus binds to the atom *before*
    exponentiation, so "-t^2" means (-t)^2 = t^2; write "-(t^2)" for -(t^2)):

        scalar      := factor ('*' factor)*
        factor      := signed_atom ('^' integer)?
        signed_atom := '-'? atom
        atom        := 'u(' integer '/' positive_integer ')'
                     | identifier | '1' | '(' scalar ')'
    """
    cur = _Cursor(text)
    value = _parse_product(cur)
    cur.skip_ws()
    if cur.pos != len(text):
        raise ScalarParseError("unexpected trailing input", text, cur.pos)
    return value


def _parse_product(cur: _Cursor) -> Scalar:
    value = _parse_factor(cur)
    while cur.eat("*"):
        value = value * _parse_factor(cur)
    return value


def _parse_factor(cur: _Cursor) -> Scalar:
    base = _parse_signed_atom(cur)
    if cur.eat("^"):
        exp = cur.match(_INT)
        if exp is None:
            raise ScalarParseError("expected an integer exponent", cur.text, cur.pos)
        base = base ** int(exp)
    return base


def _parse_signed_atom(cur: _Cursor) -> Scalar:
    negated = cur.eat("-")
    atom = _parse_atom(cur)
    return MINUS_ONE * atom if negated else atom


def _parse_atom(cur: _Cursor) -> Scalar:
    cur.skip_ws()
    ch = cur.peek()
    if ch == "(":
        cur.expect("(")
        value = _parse_product(cur)
        cur.expect(")")
        return value
    if ch.isdigit():
        digits = cur.match(_DIGITS)
        if digits != "1":
            raise ScalarParseError(
                "the only integer literals are 1 and -1", cur.text, cur.pos - len(digits)
            )
        return ONE
    name = cur.match(_IDENT)
    if name is None:
        raise ScalarParseError(
            "expected 'u(p/r)', a parameter name, '1', or '('", cur.text, cur.pos
        )
    if name == "u" and cur.peek() == "(":
        cur.expect("(")
        num = cur.match(_INT)
        if num is None:
            raise ScalarParseError("expected an integer numerator", cur.text, cur.pos)
        cur.expect("/")
        den = cur.match(_DIGITS)
        if den is None or int(den) == 0:
            raise ScalarParseError("expected a positive denominator", cur.text, cur.pos)
        cur.expect(")")
        return Scalar(Fraction(int(num), int(den)))
    return parameter(name)

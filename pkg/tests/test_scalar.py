"""Scalar arithmetic, ordering, the q-integer test, parsing, and rendering."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylbrandt import (
    MINUS_ONE,
    ONE,
    Scalar,
    ScalarParseError,
    parameter,
    parse_scalar,
    qint_is_zero,
    root_of_unity,
)

from oracles import qint_zero_oracle


@st.composite
def scalars(draw, max_order=12, names=("t", "s")):
    order = draw(st.integers(1, max_order))
    num = draw(st.integers(0, order - 1))
    params = []
    for name in names:
        exp = draw(st.integers(-3, 3))
        if exp:
            params.append((name, exp))
    return Scalar(Fraction(num, order), tuple(params))


class TestConstruction:
    def test_root_reduced_into_unit_interval(self):
        assert Scalar(Fraction(5, 4)) == Scalar(Fraction(1, 4))
        assert Scalar(Fraction(-1, 4)) == Scalar(Fraction(3, 4))
        assert Scalar(Fraction(7, 1)) == ONE

    def test_params_sorted_merged_and_pruned(self):
        a = Scalar(Fraction(0), (("t", 1), ("a", 2), ("t", -1), ("z", 0)))
        assert a.params == (("a", 2),)

    def test_factories(self):
        assert root_of_unity(1, 2) == MINUS_ONE
        assert root_of_unity(3, 6) == MINUS_ONE
        assert parameter("t").params == (("t", 1),)
        with pytest.raises(ValueError):
            root_of_unity(1, 0)
        with pytest.raises(ValueError):
            root_of_unity(1, -3)
        with pytest.raises(ValueError):
            parameter("")


class TestArithmetic:
    def test_known_products(self):
        assert MINUS_ONE * MINUS_ONE == ONE
        zeta = root_of_unity(1, 3)
        assert zeta * zeta == root_of_unity(2, 3)
        assert zeta * zeta * zeta == ONE
        t = parameter("t")
        assert t * t.inverse() == ONE
        assert (MINUS_ONE * t) ** 2 == t ** 2

    @given(scalars(), scalars(), scalars())
    @settings(max_examples=150)
    def test_group_laws(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * ONE == a
        assert a * a.inverse() == ONE

    @given(scalars(), st.integers(-6, 6), st.integers(-6, 6))
    @settings(max_examples=150)
    def test_power_laws(self, a, m, n):
        assert a ** (m + n) == a ** m * a ** n
        assert (a ** m) ** n == a ** (m * n)

    def test_order(self):
        assert ONE.order() == 1
        assert MINUS_ONE.order() == 2
        assert root_of_unity(3, 12).order() == 4
        assert parameter("t").order() is None
        assert (parameter("t") * parameter("t", -1)).order() == 1

    def test_substitute(self):
        expr = parse_scalar("-(zeta^3)")
        assert expr.substitute({"zeta": root_of_unity(1, 30)}) == root_of_unity(3, 5)
        passthrough = parse_scalar("u(1/4)*a*b^2")
        assert passthrough.substitute({"b": MINUS_ONE}) == parse_scalar("u(1/4)*a")
        assert passthrough.substitute({}) == passthrough


class TestOrdering:
    def test_known_chain(self):
        t = parameter("t")
        chain = [ONE, t, MINUS_ONE, root_of_unity(1, 3), root_of_unity(2, 3)]
        assert sorted(chain[::-1]) == chain

    @given(scalars(), scalars())
    @settings(max_examples=150)
    def test_trichotomy(self, a, b):
        assert (a < b) + (a == b) + (b < a) == 1

    @given(scalars(), scalars(), scalars())
    @settings(max_examples=150)
    def test_transitive(self, a, b, c):
        x, y, z = sorted([a, b, c])
        assert x <= y <= z and x <= z


class TestQInteger:
    def test_base_cases(self):
        assert qint_is_zero(parameter("t"), 0)
        assert not qint_is_zero(ONE, 1)
        assert not qint_is_zero(ONE, 5)
        assert qint_is_zero(root_of_unity(1, 3), 3)
        assert not qint_is_zero(root_of_unity(1, 3), 2)
        assert not qint_is_zero(parameter("t"), 4)
        with pytest.raises(ValueError):
            qint_is_zero(ONE, -1)

    def test_against_cyclotomic_oracle_small(self):
        for order in range(1, 13):
            for num in range(order):
                q = Scalar(Fraction(num, order))
                for m in range(31):
                    assert qint_is_zero(q, m) == qint_zero_oracle(num, order, m), (
                        num, order, m,
                    )


class TestParsing:
    def test_literals(self):
        assert parse_scalar("1") == ONE
        assert parse_scalar("-1") == MINUS_ONE
        assert parse_scalar("u(1/2)") == MINUS_ONE
        assert parse_scalar("u(5/4)") == root_of_unity(1, 4)
        assert parse_scalar("u(-1/3)") == root_of_unity(2, 3)
        assert parse_scalar("t") == parameter("t")
        assert parse_scalar("t^-2") == parameter("t", -2)
        assert parse_scalar("zeta*q0^-1") == parameter("zeta") * parameter("q0", -1)
        assert parse_scalar(" t * s ^ 2 ") == parameter("t") * parameter("s", 2)
        assert parse_scalar("u(1/2)*u(1/3)") == root_of_unity(5, 6)

    def test_minus_binds_before_power(self):
        assert parse_scalar("-t^2") == parameter("t", 2)
        assert parse_scalar("-(t^2)") == MINUS_ONE * parameter("t", 2)
        assert parse_scalar("-t^3") == MINUS_ONE * parameter("t", 3)
        assert parse_scalar("-(zeta^2)") == MINUS_ONE * parameter("zeta", 2)

    def test_parenthesized_groups(self):
        assert parse_scalar("(t*s)^2") == parameter("t", 2) * parameter("s", 2)
        assert parse_scalar("-(u(1/3))") == root_of_unity(5, 6)

    def test_u_is_a_parameter_without_arguments(self):
        assert parse_scalar("u") == parameter("u")
        assert parse_scalar("uu*u(1/2)") == parameter("uu") * MINUS_ONE

    @pytest.mark.parametrize(
        "bad",
        ["", "2", "12", "t^", "u(1/0)", "u(1)", "u(/2)", "(t", "t)", "t**2",
         "-", "1/2", "t 2", "u(1/2", "t^x", "*t", "t*"],
    )
    def test_errors_carry_position(self, bad):
        with pytest.raises(ScalarParseError) as exc:
            parse_scalar(bad)
        assert isinstance(exc.value.pos, int)
        assert 0 <= exc.value.pos <= len(bad)


class TestRendering:
    def test_known_forms(self):
        assert str(ONE) == "1"
        assert str(MINUS_ONE) == "u(1/2)"
        assert str(root_of_unity(3, 12)) == "u(1/4)"
        assert str(parameter("t")) == "t"
        assert str(parameter("t", -2)) == "t^-2"
        assert str(MINUS_ONE * parameter("t", -1)) == "u(1/2)*t^-1"
        assert str(parameter("b") * parameter("a")) == "a*b"

    @given(scalars())
    @settings(max_examples=200)
    def test_round_trip(self, a):
        assert parse_scalar(str(a)) == a

    @given(scalars())
    @settings(max_examples=200)
    def test_no_negation_sign(self, a):
        text = str(a)
        for k, ch in enumerate(text):
            if ch == "-":
                assert text[k - 1] == "^"

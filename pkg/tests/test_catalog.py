"""The bundled rank-2 table: loading, instantiation, verification, and
classification.
"""

import pytest

from weylbrandt import (
    CatalogRow,
    DomainViolationError,
    FixedParam,
    MatchStatus,
    RankMismatchError,
    RowInstantiation,
    Verdict,
    canonicalize,
    classify,
    default_assignments,
    find_overlaps,
    format_assignment,
    instantiate_row,
    load_rows,
    parameter,
    parse_matrix,
    parse_scalar,
    root_of_unity,
    row_by_id,
    verify_all,
    verify_row,
)

EXPECTED_INSTANTIATIONS = {
    1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 2, 7: 2, 8: 4, 9: 4, 10: 6,
    11: 1, 12: 4, 13: 8, 14: 12, 15: 8, 16: 6,
}


def _row(forms, fixed, free=None):
    """A hand-built single-purpose row for negative tests."""
    return CatalogRow(
        row_id=99,
        trees=("X",) * len(forms),
        fixed=tuple(fixed),
        free_symbol=free[0] if free else None,
        free_values=tuple(parse_scalar(v) for v in free[1]) if free else (),
        forms=tuple(tuple(parse_scalar(c) for c in f) for f in forms),
    )


class TestLoading:
    def test_sixteen_rows_in_order(self):
        rows = load_rows()
        assert [r.row_id for r in rows] == list(range(1, 17))

    def test_tree_tags_match_forms(self):
        for row in load_rows():
            assert len(row.trees) == len(row.forms)

    def test_free_symbol_consistency(self):
        for row in load_rows():
            assert (row.free_symbol is None) == (not row.free_values)
            if row.free_symbol is not None:
                assert row.free_symbol not in {p.name for p in row.fixed}

    def test_row_lookup(self):
        assert row_by_id(7).free_symbol == "zeta"
        with pytest.raises(ValueError):
            row_by_id(17)


class TestInstantiation:
    def test_row_seven_has_two_classes(self):
        inst = instantiate_row(row_by_id(7), {"zeta0": root_of_unity(1, 3)})
        assert inst.row_id == 7
        assert inst.classes == tuple(sorted([
            canonicalize(parse_matrix("u(1/3),1;u(5/6),u(1/2)")),
            canonicalize(parse_matrix("u(2/3),1;u(1/6),u(1/2)")),
        ]))
        assert inst.class_set == frozenset(inst.classes)

    def test_conjugate_seeds_give_equal_class_sets(self):
        row = row_by_id(7)
        a = instantiate_row(row, {"zeta0": root_of_unity(1, 3)})
        b = instantiate_row(row, {"zeta0": root_of_unity(2, 3)})
        assert a.class_set == b.class_set

    def test_generic_row_is_symbolic(self):
        inst = instantiate_row(row_by_id(2), {"q": parameter("q")})
        assert len(inst.classes) == 1
        diag = inst.classes[0].diagonal
        assert diag == (parameter("q"), parameter("q"))

    def test_domain_violations(self):
        with pytest.raises(DomainViolationError):
            instantiate_row(row_by_id(7), {"zeta0": parameter("t")})
        with pytest.raises(DomainViolationError):
            instantiate_row(row_by_id(7), {"zeta0": root_of_unity(1, 4)})
        with pytest.raises(DomainViolationError):
            instantiate_row(row_by_id(2), {"q": root_of_unity(1, 5)})
        with pytest.raises(DomainViolationError):
            instantiate_row(row_by_id(2), {})
        with pytest.raises(DomainViolationError):
            instantiate_row(row_by_id(2), {"q": parameter("q"), "x": parameter("x")})

    def test_excluded_value_rejected(self):
        row = _row(
            [("a", "1", "a")],
            [FixedParam("a", "generic", exclude=(parse_scalar("t"),))],
        )
        with pytest.raises(DomainViolationError):
            instantiate_row(row, {"a": parameter("t")})
        inst = instantiate_row(row, {"a": parameter("s")})
        assert len(inst.classes) == 1


class TestDefaultAssignments:
    def test_counts_per_row(self):
        for row in load_rows():
            assert len(default_assignments(row)) == EXPECTED_INSTANTIATIONS[row.row_id]

    def test_total_is_sixty_two(self):
        total = sum(len(default_assignments(r)) for r in load_rows())
        assert total == 62

    def test_generic_symbols_are_fresh_parameters(self):
        (assignment,) = default_assignments(row_by_id(1))
        assert assignment == {"q11": parameter("q"), "q22": parameter("q2")}

    def test_root_symbols_enumerate_primitive_roots(self):
        assignments = default_assignments(row_by_id(14))
        values = [a["zeta0"] for a in assignments]
        orders = [v.order() for v in values]
        assert orders == [5] * 4 + [20] * 8


class TestVerifyRow:
    def test_row_three_passes(self):
        check = verify_row(row_by_id(3), {"q": parameter("q")})
        assert check.verdict is Verdict.PASS
        assert len(check.orbit.nodes) == 2

    def test_mutated_row_two_fails(self):
        row = _row(
            [("q", "q^-1", "q^2")],
            [FixedParam("q", "generic", exclude=(parse_scalar("1"),))],
        )
        check = verify_row(row, {"q": parameter("q")})
        assert check.verdict is Verdict.FAIL
        assert "undefined" in check.detail

    def test_orbit_escaping_row_fails(self):
        # only the first form of the pair; the orbit reaches the dropped one
        row = _row(
            [("q", "q^-1", "-1")],
            [FixedParam("q", "generic", exclude=(parse_scalar("1"), parse_scalar("-1")))],
        )
        check = verify_row(row, {"q": parameter("q")})
        assert check.verdict is Verdict.FAIL
        assert "outside" in check.detail

    def test_unreached_class_fails(self):
        # the genuine pair plus a bogus third form nothing reflects onto
        row = _row(
            [("q", "q^-1", "-1"), ("-1", "q", "-1"), ("q^5", "q^-1", "-1")],
            [FixedParam("q", "generic", exclude=(parse_scalar("1"), parse_scalar("-1")))],
        )
        check = verify_row(row, {"q": parameter("q")})
        assert check.verdict is Verdict.FAIL
        assert "missed" in check.detail

    def test_small_bound_is_inconclusive(self):
        check = verify_row(row_by_id(3), {"q": parameter("q")}, bound=1)
        assert check.verdict is Verdict.INCONCLUSIVE


class TestVerifyAll:
    def test_subset_run(self):
        report = verify_all({2, 4, 11})
        assert len(report.checks) == 3
        assert report.verdict is Verdict.PASS
        assert report.overlaps == ()

    def test_full_table_passes(self):
        report = verify_all()
        assert report.verdict is Verdict.PASS
        assert len(report.checks) == 62
        assert report.overlaps == ()

    def test_bound_one_is_inconclusive_not_failing(self):
        report = verify_all({3}, bound=1)
        assert report.verdict is Verdict.INCONCLUSIVE


class TestOverlapDetection:
    def test_partial_overlap_is_reported(self):
        x = canonicalize(parse_matrix("u(1/3),1;u(5/6),u(1/2)"))
        y = canonicalize(parse_matrix("u(2/3),1;u(1/6),u(1/2)"))
        a = RowInstantiation(1, {}, (x, y))
        b = RowInstantiation(1, {}, (x,))
        overlaps = find_overlaps([a, b])
        assert len(overlaps) == 1
        assert overlaps[0].shared == (x,)

    def test_equal_sets_same_row_exempt(self):
        x = canonicalize(parse_matrix("u(1/3),1;u(5/6),u(1/2)"))
        a = RowInstantiation(1, {}, (x,))
        b = RowInstantiation(1, {}, (x,))
        assert find_overlaps([a, b]) == ()

    def test_equal_sets_across_rows_still_violate(self):
        x = canonicalize(parse_matrix("u(1/3),1;u(5/6),u(1/2)"))
        a = RowInstantiation(1, {}, (x,))
        b = RowInstantiation(2, {}, (x,))
        assert len(find_overlaps([a, b])) == 1


class TestClassify:
    def test_symbolic_diagonal_matrix(self):
        result = classify(parse_matrix("t,1;1,t"))
        assert result.status is MatchStatus.MATCH
        assert result.row_id == 1
        assert result.assignment == {"q11": parameter("t"), "q22": parameter("t")}

    def test_root_of_unity_pair(self):
        result = classify(parse_matrix("u(1/3),1;u(5/6),u(1/2)"))
        assert result.status is MatchStatus.MATCH
        assert result.row_id == 7
        assert result.assignment == {"zeta0": root_of_unity(1, 3)}

    def test_mixed_root_and_parameter(self):
        result = classify(parse_matrix("t,1;t^-1,u(1/3)"))
        assert result.status is MatchStatus.MATCH
        assert result.row_id == 6
        assert result.assignment == {
            "zeta": root_of_unity(1, 3),
            "q0": parameter("t"),
        }

    def test_root_of_unity_match_on_generic_row(self):
        result = classify(parse_matrix("u(1/3),1;u(2/3),u(1/3)"))
        assert result.status is MatchStatus.MATCH
        assert result.row_id == 2
        assert result.assignment == {"q": root_of_unity(1, 3)}

    def test_golden_no_match(self):
        result = classify(parse_matrix("u(1/7),1;u(1/7),u(1/7)"))
        assert result.status is MatchStatus.NO_MATCH
        assert result.row_id is None

    def test_inconclusive_when_bound_truncates(self):
        result = classify(parse_matrix("u(1/5),1;u(1/7),u(1/3)"), bound=2)
        assert result.status is MatchStatus.INCONCLUSIVE

    def test_rank_and_parameter_guards(self):
        with pytest.raises(RankMismatchError):
            classify(parse_matrix("1,1,1;1,1,1;1,1,1"))
        with pytest.raises(ValueError):
            classify(parse_matrix("t,1;s,t"))


class TestFormatting:
    def test_assignment_rendering(self):
        text = format_assignment({"zeta0": root_of_unity(1, 3), "q0": parameter("t")})
        assert text == "zeta0=u(1/3) q0=t"

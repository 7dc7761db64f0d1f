import random
from fractions import Fraction

import pytest

from src.concavity import find_dominating_matching
from src.config import ScarfOptions
from src.errors import NoOrdinalStartError, PivotError
from src.market import Market
from src.scarf import build_matrix_a, build_matrix_c, cardinal_pivot, format_trace, initial_bases, maximize, ordinal_pivot
from src.scarf.solver import scarf_solve
from src.scarf.tableau import INFEASIBLE, UNBOUNDED
from src.schedule import find_block_pi_schedule, is_feasible, is_stable_matching, unit_scheme, worst_situation_profile
from tests.generators import random_market, random_scheme

HALF = Fraction(1, 2)

GOLDEN_TRACE = [
    "step 0 A=[f1 f2 w1 w2] C=[f2 w1 w2 {z1,z2}]",
    "step 1 pivotA in={z1,z2} out=w2 pivotC out=w2 in={x5c} A=[f1 f2 w1 {z1,z2}] C=[f2 w1 {x5c} {z1,z2}]",
    "step 2 pivotA in={x5c} out=w1 pivotC out=w1 in=f1 A=[f1 f2 {x5c} {z1,z2}] C=[f1 f2 {x5c} {z1,z2}]",
]


def test_matrix_a_of_numeric_scheme(eb):
    m, s, _ = eb
    a = build_matrix_a(m, s)
    assert a.entries[0] == (1, 0, 0, 0, 4, 2, 4, 0, 0)
    assert a.rhs == (5, 3, 2, 3)


def test_matrix_a_of_unit_scheme(eb):
    m, _, _ = eb
    a = build_matrix_a(m, unit_scheme(m))
    assert a.column_vector(a.columns[7]) == (0, 1, 1, 1)


def test_matrix_c_canonical_entries(eb):
    m, _, _ = eb
    c = build_matrix_c(m)
    assert c.entries == (
        (0, 12, 11, 10, 3, 2, 1, 6, 5),
        (13, 0, 11, 10, 9, 8, 7, 2, 1),
        (13, 12, 0, 10, 4, 3, 1, 2, 5),
        (13, 12, 11, 0, 1, 2, 7, 4, 3),
    )


def test_matrix_c_reversed_entries_increase_with_position(eb):
    m, _, _ = eb
    c = build_matrix_c(m, "reversed")
    assert c.entries[0] == (0, 11, 12, 13, 3, 2, 1, 8, 9)
    with pytest.raises(ValueError):
        build_matrix_c(m, "sideways")


def test_initial_bases_start_from_first_firm(eb):
    m, s, _ = eb
    feasible, ordinal, entering = initial_bases(build_matrix_a(m, s), build_matrix_c(m))
    assert [c.label for c in feasible.columns_by_row] == ["f1", "f2", "w1", "w2"]
    assert [c.label for c in ordinal.columns] == ["f2", "w1", "w2", "{z1,z2}"]
    assert entering.label == "{z1,z2}"


def test_golden_trace(eb):
    m, s, _ = eb
    t, trace = scarf_solve(m, s)
    assert trace.lines() == GOLDEN_TRACE
    assert trace.solution == (3, 1, 0, 0, 0, 0, HALF, 1, 0)
    assert t.vector == (0, 0, HALF, 1, 0)


def test_format_trace_joins_lines(eb):
    m, s, _ = eb
    _, trace = scarf_solve(m, s)
    assert format_trace(trace) == "\n".join(GOLDEN_TRACE)


def test_exact_linear_program():
    result = maximize([3, 2, 0, 0], [[1, 1, 1, 0], [1, 3, 0, 1]], [4, 6])
    assert result.is_optimal
    assert result.value == 12
    assert result.solution == [4, 0, 0, 2]

    assert maximize([1], [[1]], [-1]).status == INFEASIBLE
    assert maximize([1, 0], [[1, -1]], [0]).status == UNBOUNDED


def test_cardinal_pivot_rejects_basic_column(eb):
    m, s, _ = eb
    a = build_matrix_a(m, s)
    feasible, _, _ = initial_bases(a, build_matrix_c(m))
    with pytest.raises(PivotError):
        cardinal_pivot(a, feasible, a.columns[0])


def test_cardinal_pivot_brings_in_assignment(eb):
    m, s, _ = eb
    a = build_matrix_a(m, s)
    feasible, _, entering = initial_bases(a, build_matrix_c(m))
    after, leaving = cardinal_pivot(a, feasible, entering)
    assert leaving.label == "w2"
    assert after.basic_solution[entering] == 1


def test_ordinal_pivot_rejects_foreign_column(eb):
    m, s, _ = eb
    a, c = build_matrix_a(m, s), build_matrix_c(m)
    _, ordinal, _ = initial_bases(a, c)
    with pytest.raises(PivotError):
        ordinal_pivot(c, ordinal, a.columns[0])


def test_ordinal_pivot_after_first_cardinal_pivot(eb):
    m, s, _ = eb
    a, c = build_matrix_a(m, s), build_matrix_c(m)
    _, ordinal, _ = initial_bases(a, c)
    after, entering = ordinal_pivot(c, ordinal, a.columns[3])
    assert entering.label == "{x5c}"
    assert [col.label for col in after.columns] == ["f2", "w1", "{x5c}", "{z1,z2}"]


def test_no_ordinal_start_when_every_assignment_covers_everyone():
    m = Market.from_labels(["f1"], ["w1"], [("a", "f1", "w1")], {"f1": [["a"]]}, {"w1": ["a"]})
    with pytest.raises(NoOrdinalStartError):
        initial_bases(build_matrix_a(m, unit_scheme(m)), build_matrix_c(m))


def test_market_without_assignments_gives_zero_schedule(empty_market):
    m, s, _ = empty_market
    t, trace = scarf_solve(m, s)
    assert t.vector == ()
    assert trace.lines() == []


def test_reversed_ordering_still_gives_unblocked_schedule(eb):
    m, s, _ = eb
    t, _ = scarf_solve(m, s, ScarfOptions(l_order="reversed"))
    assert is_feasible(t, s)
    assert find_block_pi_schedule(m, s, t) is None


def test_other_start_row_gives_unblocked_schedule(eb):
    m, s, _ = eb
    t, trace = scarf_solve(m, s, ScarfOptions(initial_row="w2"))
    assert find_block_pi_schedule(m, s, t) is None
    with pytest.raises(ValueError):
        scarf_solve(m, s, ScarfOptions(initial_row="nobody"))


def test_random_markets_give_unblocked_schedules_and_stable_dominating_matchings():
    rng = random.Random(20240611)
    for _ in range(200):
        m = random_market(rng)
        s = random_scheme(rng, m)
        t, trace = scarf_solve(m, s)
        assert is_feasible(t, s)
        assert find_block_pi_schedule(m, s, t) is None

        pairs = [(frozenset(trace.initial_feasible), frozenset(trace.initial_ordinal))] if trace.steps else []
        pairs += [(frozenset(step.feasible_basis), frozenset(step.ordinal_basis)) for step in trace.steps]
        assert len(set(pairs)) == len(pairs)

        matching = find_dominating_matching(m, worst_situation_profile(m, s, t))
        if matching is not None:
            assert is_stable_matching(m, matching)

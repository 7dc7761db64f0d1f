import random
from fractions import Fraction

import pytest

from src.concavity import (
    Pattern,
    brute_force_stable_set,
    check_pi_concavity,
    enumerate_matchings,
    extreme_schedule,
    find_dominating_matching,
    pattern_realizable,
    solve_via_scarf,
    stable_matching_via_scarf,
)
from src.config import EnumerationLimits
from src.errors import ResourceBoundError
from src.market import Market, enumerate_acceptable_assignments
from src.schedule import (
    FullTimeMatching,
    PiScheduleMatching,
    is_feasible,
    is_stable_matching,
    profile_from_pattern,
    unit_scheme,
    worst_situation_profile,
)
from tests.generators import firm_assignment, random_market, random_scheme, random_weights

HALF = Fraction(1, 2)


def half_schedule_pattern(m):
    return Pattern(
        frozenset([firm_assignment(m, "a1", "a2"), firm_assignment(m, "b1"), firm_assignment(m, "b2")]),
        frozenset([m.agent("f2"), m.agent("w1"), m.agent("w2")]),
    )


def test_enumerated_matching_counts(m2, eb):
    assert len(list(enumerate_matchings(m2[0]))) == 9
    assert len(list(enumerate_matchings(eb[0]))) == 16
    assert next(enumerate_matchings(eb[0])) == FullTimeMatching()


def test_single_contract_market_has_two_matchings():
    m = Market.from_labels(["f1", "f2"], ["w1", "w2"], [("a", "f1", "w1")], {"f1": [["a"]]}, {"w1": ["a"]})
    assert len(list(enumerate_matchings(m))) == 2


def test_enumeration_bound_raises(eb):
    with pytest.raises(ResourceBoundError):
        list(enumerate_matchings(eb[0], EnumerationLimits(max_matchings=10)))


def test_half_schedule_pattern_is_realizable(m2):
    m, s, _ = m2
    witness = pattern_realizable(m, s, half_schedule_pattern(m))
    assert witness is not None
    assert sorted(witness.support, key=lambda y: y.label) == sorted(half_schedule_pattern(m).support, key=lambda y: y.label)
    assert all(witness.share(y) == HALF for y in witness.support)


def test_capacity_three_firm_cannot_be_full_matched(m4_pi):
    m, s, _ = m4_pi
    support = frozenset([firm_assignment(m, "a1", "a2"), firm_assignment(m, "b1"), firm_assignment(m, "b2")])
    assert pattern_realizable(m, s, Pattern(support, frozenset([m.agent("f2")]))) is None
    assert pattern_realizable(m, s, Pattern(support, frozenset([m.agent("f2"), m.agent("w1")]))) is None


def test_empty_pattern_is_realized_by_zero_schedule(eb):
    m, s, _ = eb
    witness = pattern_realizable(m, s, Pattern(frozenset(), frozenset()))
    assert witness.vector == (0, 0, 0, 0, 0)


def test_dominating_matching_of_scarf_output(eb):
    m, s, _ = eb
    profile = worst_situation_profile(m, s, PiScheduleMatching.from_vector(m, [0, 0, HALF, 1, 0]))
    assert find_dominating_matching(m, profile).label == "{z1,z2}"


def test_half_schedule_has_no_dominating_matching(m2):
    m, s, _ = m2
    pattern = half_schedule_pattern(m)
    assert find_dominating_matching(m, profile_from_pattern(m, pattern.support, pattern.tight)) is None


def test_all_empty_profile_is_dominated_by_empty_matching(eb):
    m, _, _ = eb
    assert find_dominating_matching(m, profile_from_pattern(m, [], [])) == FullTimeMatching()


def test_m2_is_not_concave(m2):
    m, s, _ = m2
    verdict = check_pi_concavity(m, s)
    assert not verdict.concave
    counterexample = verdict.counterexample
    assert counterexample.pattern.support_labels(m) == ["{a1,a2}", "{b1}", "{b2}"]
    assert counterexample.pattern.tight_labels(m) == ["f2", "w1", "w2"]
    assert Pattern.of(m, s, counterexample.witness) == counterexample.pattern


def test_m4_concavity_depends_on_capacities(m4, m4_pi):
    m, s, _ = m4
    verdict = check_pi_concavity(m, s)
    assert not verdict.concave
    pattern = verdict.counterexample.pattern
    assert Pattern.of(m, s, verdict.counterexample.witness) == pattern
    assert find_dominating_matching(m, profile_from_pattern(m, pattern.support, pattern.tight)) is None

    m, s, _ = m4_pi
    assert check_pi_concavity(m, s).concave


def test_eb_is_concave_under_both_schemes(eb):
    m, s, _ = eb
    assert check_pi_concavity(m, unit_scheme(m)).concave
    assert check_pi_concavity(m, s).concave


def test_concavity_bounds(eb):
    m, s, _ = eb
    with pytest.raises(ResourceBoundError):
        check_pi_concavity(m, s, EnumerationLimits(max_assignments=4))
    with pytest.raises(ResourceBoundError):
        check_pi_concavity(m, s, EnumerationLimits(max_agents=3))


def test_brute_force_stable_sets(eb, m2, m4):
    assert [matching.label for matching in brute_force_stable_set(eb[0])] == ["{z1,z2}"]
    assert brute_force_stable_set(m2[0]) == []
    assert "{a1,a2}" in [matching.label for matching in brute_force_stable_set(m4[0])]


def test_stable_matching_via_scarf(eb, m4_pi, m2):
    m, s, _ = eb
    assert stable_matching_via_scarf(m, s).label == "{z1,z2}"
    m, s, _ = m4_pi
    found = stable_matching_via_scarf(m, s)
    assert found.label == "{a1,a2}"
    assert is_stable_matching(m, found)
    m, s, _ = m2
    assert stable_matching_via_scarf(m, s) is None


def test_exhaustive_fallback_without_scarf_start():
    m = Market.from_labels(["f1"], ["w1"], [("a", "f1", "w1")], {"f1": [["a"]]}, {"w1": ["a"]})
    outcome = solve_via_scarf(m, unit_scheme(m))
    assert outcome.used_fallback
    assert outcome.matching.label == "{a}"


def test_extreme_schedule_is_feasible(eb):
    m, s, _ = eb
    t = extreme_schedule(m, s, {firm_assignment(m, "z1", "z2"): Fraction(1)})
    assert is_feasible(t, s)
    assert t.share(firm_assignment(m, "z1", "z2")) == 1


def test_patterns_of_random_vertices_are_realizable():
    rng = random.Random(7)
    for _ in range(40):
        m = random_market(rng)
        s = random_scheme(rng, m)
        t = extreme_schedule(m, s, random_weights(rng, m))
        pattern = Pattern.of(m, s, t)
        assert worst_situation_profile(m, s, t) == profile_from_pattern(m, pattern.support, pattern.tight)
        witness = pattern_realizable(m, s, pattern)
        assert witness is not None
        assert Pattern.of(m, s, witness) == pattern


def test_concave_random_markets_give_stable_matchings():
    rng = random.Random(11)
    for _ in range(40):
        m = random_market(rng, max_contracts=5)
        if len(enumerate_acceptable_assignments(m)) > 8:
            continue
        s = random_scheme(rng, m, top=3)
        found = stable_matching_via_scarf(m, s)
        if check_pi_concavity(m, s).concave:
            assert found is not None
        if found is not None:
            assert found in brute_force_stable_set(m)

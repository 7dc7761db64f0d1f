import random

import pytest

from src.errors import AssignmentOwnershipError, MarketValidationError, SituationMismatchError
from src.market import (
    FirmAssignment,
    Market,
    Ordering,
    Situation,
    enumerate_acceptable_assignments,
    firm_compare,
    validate_market,
    worker_compare_ext,
    worker_situations,
)
from tests.generators import firm_assignment, random_market


def test_eb_market_is_valid(eb):
    market, _, _ = eb
    assert validate_market(market) == []


def test_single_firm_market_is_reported():
    m = Market.from_labels(["f1"], ["w1", "w2"], [("a", "f1", "w1")], {"f1": [["a"]]}, {"w1": ["a"]})
    assert "single-firm market" in validate_market(m)


def test_unranked_contract_is_reported():
    m = Market.from_labels(
        ["f1", "f2"], ["w1", "w2"], [("a", "f1", "w1"), ("b", "f2", "w1")], {"f1": [["a"]]}, {"w1": ["a"]}
    )
    assert any("does not rank contract b" in v for v in validate_market(m))


def test_assignment_with_two_contracts_of_one_worker_is_reported():
    m = Market.from_labels(
        ["f1", "f2"],
        ["w1", "w2"],
        [("a", "f1", "w1"), ("b", "f1", "w1")],
        {"f1": [["a", "b"]]},
        {"w1": ["a", "b"]},
    )
    assert any("2 contracts of worker w1" in v for v in validate_market(m))


def test_unknown_worker_in_contract_raises():
    with pytest.raises(MarketValidationError, match="unknown worker w9"):
        Market.from_labels(["f1", "f2"], ["w1", "w2"], [("a", "f1", "w9")], {}, {})


def test_firm_compare_follows_list_order(eb):
    m, _, _ = eb
    f1, f2 = m.agent("f1"), m.agent("f2")
    assert firm_compare(m, f1, firm_assignment(m, "x5d", "y4d"), firm_assignment(m, "x5c")) is Ordering.GREATER
    assert firm_compare(m, f2, firm_assignment(m, "z1"), FirmAssignment.empty(f2)) is Ordering.LESS
    assert firm_compare(m, f2, FirmAssignment.empty(f2), None) is Ordering.EQUAL


def test_firm_compare_rejects_foreign_assignment(eb):
    m, _, _ = eb
    with pytest.raises(AssignmentOwnershipError):
        firm_compare(m, m.agent("f1"), firm_assignment(m, "z2"), None)


def test_worker_order_uses_employer_ranking_for_same_contract(eb):
    m, _, _ = eb
    w1, w2 = m.agent("w1"), m.agent("w2")
    z1z2 = Situation(w2, firm_assignment(m, "z1", "z2"))
    z2 = Situation(w2, firm_assignment(m, "z2"))
    assert worker_compare_ext(m, w2, z1z2, z2) is Ordering.GREATER
    assert worker_compare_ext(
        m, w1, Situation(w1, firm_assignment(m, "x5d", "y4d")), Situation(w1, firm_assignment(m, "x5d", "y5d"))
    ) is Ordering.GREATER
    assert worker_compare_ext(m, w2, Situation(w2, firm_assignment(m, "x5d", "y4d")), Situation(w2)) is Ordering.GREATER


def test_worker_compare_rejects_other_workers_situation(eb):
    m, _, _ = eb
    with pytest.raises(SituationMismatchError):
        worker_compare_ext(m, m.agent("w1"), Situation(m.agent("w2")), Situation(m.agent("w1")))


def test_acceptable_assignments_follow_firm_lists(eb):
    m, _, _ = eb
    labels = [y.label for y in enumerate_acceptable_assignments(m)]
    assert labels == ["{x5d,y4d}", "{x5d,y5d}", "{x5c}", "{z1,z2}", "{z2}"]


def test_worker_situations_ascend(eb):
    m, _, _ = eb
    assert [s.label for s in worker_situations(m, m.agent("w2"))] == [
        "empty", "{x5d,y4d}@f1", "{x5d,y5d}@f1", "{z2}@f2", "{z1,z2}@f2",
    ]
    assert [s.label for s in worker_situations(m, m.agent("w1"))] == [
        "empty", "{x5c}@f1", "{z1,z2}@f2", "{x5d,y5d}@f1", "{x5d,y4d}@f1",
    ]


def assert_strict_total_order(compare, items):
    for y in items:
        assert compare(y, y) is Ordering.EQUAL
        for z in items:
            if y == z:
                continue
            assert compare(y, z) is not Ordering.EQUAL
            assert (compare(y, z) is Ordering.GREATER) == (compare(z, y) is Ordering.LESS)
            for x in items:
                if compare(y, z) is Ordering.GREATER and compare(z, x) is Ordering.GREATER:
                    assert compare(y, x) is Ordering.GREATER


def test_orders_are_strict_and_total_on_random_markets():
    rng = random.Random(11)
    for _ in range(100):
        m = random_market(rng)
        for f in m.firms:
            options = [None, *(y for y in enumerate_acceptable_assignments(m) if y.firm == f)]
            assert_strict_total_order(lambda y, z: firm_compare(m, f, y, z), options)

        for w in m.workers:
            situations = worker_situations(m, w)
            assert_strict_total_order(lambda y, z: worker_compare_ext(m, w, y, z), situations)

            listed = list(m.worker_prefs.get(w, ()))
            for y in situations:
                for z in situations:
                    if y.is_empty or z.is_empty or y.own_contract == z.own_contract:
                        continue
                    prefers_y = listed.index(y.own_contract) < listed.index(z.own_contract)
                    assert (worker_compare_ext(m, w, y, z) is Ordering.GREATER) == prefers_y
                if not y.is_empty:
                    assert worker_compare_ext(m, w, y, Situation(w)) is Ordering.GREATER

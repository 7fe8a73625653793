import pytest

from exel_sgpd import BudgetExceeded, cyclic_group, disjoint_union, enumerate_sg, normalize_word
from exel_sgpd.oracle import (compare_with_normal_forms, composable_words,
                              oracle_congruence_enumerate)


@pytest.mark.parametrize("name, classes", [("z2", 3), ("z3", 8), ("g1", 6), ("trivial", 1)])
def test_oracle_agrees_with_normal_forms(name, classes, request):
    G = request.getfixturevalue(name)
    res = oracle_congruence_enumerate(G, 6)
    assert len(res.classes) == classes == len(enumerate_sg(G))
    assert res.stable and res.counts[5] == res.counts[6]
    assert compare_with_normal_forms(res, lambda w: normalize_word(G, w)) == []


def test_oracle_on_larger_groupoids():
    for G in (cyclic_group(4), disjoint_union([cyclic_group(2), cyclic_group(3)])):
        res = oracle_congruence_enumerate(G, 5)
        assert len(res.classes) == len(enumerate_sg(G))
        assert compare_with_normal_forms(res, lambda w: normalize_word(G, w)) == []


def test_words_are_composable(g1):
    for w in composable_words(g1, 4):
        assert all(g1.composable(a, b) for a, b in zip(w, w[1:]))


def test_without_slack_the_bound_is_not_saturated(z3):
    # a^6 cannot be rewritten without passing through a longer word
    res = oracle_congruence_enumerate(z3, 6, slack=0)
    assert len(res.classes) == 10


def test_budget_exceeded_when_counts_move(z3):
    with pytest.raises(BudgetExceeded):
        oracle_congruence_enumerate(z3, 2, slack=0)


def test_class_lookup(z3):
    res = oracle_congruence_enumerate(z3, 6)
    assert ("a2", "a2", "a2") in res.class_of(("a", "a", "a"))

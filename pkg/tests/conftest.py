import pytest

from exel_sgpd import GroupoidPartialAction, arrow_groupoid, cyclic_group, disjoint_union, trivial_groupoid


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def z3():
    return cyclic_group(3)


@pytest.fixture
def g1():
    return arrow_groupoid()


@pytest.fixture
def trivial():
    return trivial_groupoid()


@pytest.fixture
def z2z2():
    return disjoint_union([cyclic_group(2), cyclic_group(2)])


def z2_example():
    # D_e = X, D_a = {1}, alpha_a the identity of {1}
    G = cyclic_group(2)
    return GroupoidPartialAction(G, [1, 2], {"e": [1, 2], "a": [1]},
                                 {"e": {1: 1, 2: 2}, "a": {1: 1}})


def g1_example():
    # unit domains disjoint, g carries 1 to 2
    G = arrow_groupoid()
    return GroupoidPartialAction(G, [1, 2], {"e": [1], "f": [2], "g": [2], "g^-1": [1]},
                                 {"e": {1: 1}, "f": {2: 2}, "g": {1: 2}, "g^-1": {2: 1}})


def g1_three_points():
    G = arrow_groupoid()
    return GroupoidPartialAction(G, [1, 2, 3], {"e": [1, 2], "f": [3], "g": [3], "g^-1": [2]},
                                 {"e": {1: 1, 2: 2}, "f": {3: 3}, "g": {2: 3}, "g^-1": {3: 2}})


@pytest.fixture
def z2_action():
    return z2_example()


@pytest.fixture
def g1_action():
    return g1_example()

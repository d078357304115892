import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quiverfan import catalog
from quiverfan.cones import PolyCone
from quiverfan.domains import (
    HalfspaceSystem,
    WeightSplit,
    dbeta_cone_decomposition,
    dbeta_contains,
    dbeta_contains_by_split,
    dbeta_inequalities,
    dbeta_weight,
    decompose_weight_vector,
    is_quiver_exceptional_set,
    recombine,
)
from quiverfan.errors import InvalidInputError
from quiverfan.homext import real_schur_roots
from quiverfan.quiver import support
from quiverfan.stability import ExceptionalCollection

LATTICE_QUIVERS = [catalog.linear_a(2), catalog.linear_a(3), catalog.kronecker(2)]


def box(n, b):
    return itertools.product(range(-b, b + 1), repeat=n)


def test_split_examples(a2):
    assert decompose_weight_vector(a2, (-1, 2)) == WeightSplit((0, 3), (1, 0))
    assert decompose_weight_vector(a2, (0, -1)) == WeightSplit((0, 0), (0, 1))
    assert decompose_weight_vector(a2, (2, 5)) == WeightSplit((2, 5), (0, 0))


@given(st.sampled_from([catalog.linear_a(3), catalog.triangle(), catalog.kronecker(3)]), st.data())
def test_split_round_trip(Q, data):
    alpha = tuple(data.draw(st.lists(st.integers(-9, 9), min_size=Q.n, max_size=Q.n)))
    split = decompose_weight_vector(Q, alpha)
    assert recombine(Q, split) == alpha
    assert not support(split.alpha_plus) & support(split.delta)
    assert min(split.alpha_plus + split.delta) >= 0
    if min(alpha) >= 0:
        assert split == WeightSplit(alpha, Q.zero())


def test_split_is_unique_on_a3(a3):
    # any other disjoint pair within the box reconstructs a different vector
    seen = {}
    for plus in itertools.product(range(4), repeat=3):
        for delta in itertools.product(range(4), repeat=3):
            if support(plus) & support(delta):
                continue
            alpha = recombine(a3, WeightSplit(plus, delta))
            assert alpha not in seen
            seen[alpha] = (plus, delta)
            assert decompose_weight_vector(a3, alpha) == WeightSplit(plus, delta)


def test_halfspace_examples(a2):
    system = dbeta_inequalities(a2, (1, 1))
    assert system.sources == ((0, 1),)
    ray = [a for a in box(2, 4) if system.contains(a)]
    assert ray == [(k, 0) for k in range(5)]
    line = [a for a in box(2, 3) if dbeta_inequalities(a2, (0, 1)).contains(a)]
    assert line == [(k, k) for k in range(-3, 4)]
    a1 = catalog.linear_a(1)
    assert [a for a in box(1, 3) if dbeta_contains(a1, (1,), a)] == [(0,)]


def test_zero_beta_gives_empty_system(a2):
    assert dbeta_inequalities(a2, (0, 0)) == HalfspaceSystem((), ())
    with pytest.raises(InvalidInputError):
        dbeta_cone_decomposition(a2, (0, 0), 3)


def test_contains_examples(a2, tri):
    assert dbeta_contains(a2, (1, 1), (2, 0))
    assert not dbeta_contains(a2, (1, 1), (0, 1))
    for Q, beta in ((a2, (1, 1)), (tri, (1, 2, 1))):
        assert dbeta_contains(Q, beta, Q.zero())
        assert dbeta_contains_by_split(Q, beta, Q.zero())


def test_cone_decomposition_examples(a2):
    one = dbeta_cone_decomposition(a2, (1, 1), 3)
    assert one.collections == [ExceptionalCollection(((1, 0),), frozenset())]
    two = dbeta_cone_decomposition(a2, (0, 1), 3)
    assert sorted(c.vectors(a2) for c in two.collections) == [[(-1, -1)], [(1, 1)]]
    assert dbeta_weight(a2, (0, 1)) == (1, -1)


def test_cone_decomposition_rejects_non_real(k2):
    with pytest.raises(InvalidInputError):
        dbeta_cone_decomposition(k2, (1, 1), 3)


def test_sincere_beta_single_cone(a3, tri):
    for Q in (a3, tri):
        for beta in real_schur_roots(Q, 3):
            if min(beta) == 0:
                continue
            decomposition = dbeta_cone_decomposition(Q, beta, 4)
            assert len(decomposition.collections) == 1
            assert not decomposition.collections[0].negatives


def test_collections_are_small_and_independent(a3, tri):
    for Q in (a3, tri):
        for beta in real_schur_roots(Q, 2):
            for c in dbeta_cone_decomposition(Q, beta, 4, include_all=True).collections:
                assert len(c.roots) + len(c.negatives) <= Q.n - 1
                if c.roots or c.negatives:
                    PolyCone(tuple(c.vectors(Q)))
                assert is_quiver_exceptional_set(Q, c)


def test_caveat_propagates(k2):
    assert dbeta_cone_decomposition(k2, (1, 2), 4).caveats == ["bounded-search"]
    assert dbeta_cone_decomposition(catalog.linear_a(2), (1, 1), 4).caveats == []


def test_origin_only_when_search_too_small(k2):
    small = dbeta_cone_decomposition(k2, (3, 4), 4)
    assert small.collections == [ExceptionalCollection()]
    assert dbeta_cone_decomposition(k2, (3, 4), 6).stable == [(4, 5)]


@pytest.mark.parametrize("Q", LATTICE_QUIVERS)
def test_membership_routes_agree(Q):
    for beta in real_schur_roots(Q, 4):
        system = dbeta_inequalities(Q, beta)
        for alpha in box(Q.n, 4):
            assert system.contains(alpha) == dbeta_contains_by_split(Q, beta, alpha), (beta, alpha)


@pytest.mark.parametrize("Q", LATTICE_QUIVERS + [catalog.triangle()])
def test_projectives_in_domain_iff_vertex_outside_support(Q):
    for beta in itertools.product(range(3), repeat=Q.n):
        if not any(beta):
            continue
        for i in range(Q.n):
            gamma = Q.path_counts[i]
            neg = tuple(-x for x in gamma)
            inside = dbeta_contains(Q, beta, gamma)
            assert inside == dbeta_contains(Q, beta, neg) == (beta[i] == 0)


@pytest.mark.parametrize("Q", LATTICE_QUIVERS)
def test_sincere_domains_are_dimension_vectors(Q):
    for beta in real_schur_roots(Q, 4):
        if min(beta) == 0:
            continue
        for alpha in box(Q.n, 4):
            if dbeta_contains(Q, beta, alpha):
                assert min(alpha) >= 0


def test_exceptional_set_examples(a2):
    T = catalog.star_t434()
    beta1, beta2 = (4, 3, 2, 1, 0, 3, 1, 2, 3), (0, 0, 0, 0, 1, 0, 0, 0, 0)
    assert is_quiver_exceptional_set(T, ExceptionalCollection((beta2, beta1)))
    assert is_quiver_exceptional_set(a2, ExceptionalCollection(((1, 0), (0, 1))))
    assert not is_quiver_exceptional_set(a2, ExceptionalCollection(((1, 1),), frozenset({0})))

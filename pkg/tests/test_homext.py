import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quiverfan import catalog
from quiverfan.errors import InvalidInputError, ResourceError
from quiverfan.homext import (
    LIMITS,
    HomExtPair,
    RootClass,
    canonical_decomposition,
    embeds,
    generic_ext,
    generic_hom,
    generic_homext,
    is_prehomogeneous,
    is_real_schur_root,
    real_schur_roots,
    root_class,
)
from quiverfan.quiver import Quiver, dynkin_positive_roots, euler_form

SMALL = [catalog.linear_a(2), catalog.linear_a(3), catalog.kronecker(2), catalog.triangle()]


@st.composite
def small_pair(draw, top=3):
    Q = draw(st.sampled_from(SMALL))
    vec = st.lists(st.integers(0, top), min_size=Q.n, max_size=Q.n).map(tuple)
    return Q, draw(vec), draw(vec)


def test_homext_examples(a2, k2):
    assert generic_homext(a2, (1, 0), (0, 1)) == HomExtPair(0, 1)
    assert generic_homext(a2, (1, 1), (1, 0)) == HomExtPair(1, 0)
    for Q in (a2, k2):
        assert generic_homext(Q, Q.zero(), (1, 1)) == HomExtPair(0, 0)


def test_embeds_examples(a2, tri):
    assert embeds(a2, (0, 1), (1, 1))
    assert not embeds(a2, (1, 0), (1, 1))
    for Q, beta in ((a2, (2, 1)), (tri, (1, 2, 1))):
        assert embeds(Q, Q.zero(), beta)
        assert embeds(Q, beta, beta)


def test_embeds_requires_componentwise_order(a2):
    assert not embeds(a2, (2, 0), (1, 1))


def test_canonical_examples(a2, k2):
    assert canonical_decomposition(a2, (1, 1)) == [((1, 1), 1)]
    assert canonical_decomposition(a2, (2, 1)) == [((1, 0), 1), ((1, 1), 1)]
    assert canonical_decomposition(a2, (1, 0)) == [((1, 0), 1)]
    assert canonical_decomposition(k2, (2, 2)) == [((1, 1), 2)]
    assert canonical_decomposition(k2, (2, 3)) == [((2, 3), 1)]


def test_root_class_examples(a2, k2):
    assert root_class(a2, (1, 1)) is RootClass.REAL_SCHUR
    assert root_class(k2, (1, 1)) is RootClass.IMAGINARY_SCHUR
    assert root_class(a2, (2, 2)) is RootClass.NOT_SCHUR
    assert root_class(k2, (2, 2)) is RootClass.NOT_SCHUR
    assert root_class(k2, (1, 3)) is RootClass.NOT_SCHUR


def test_root_class_of_zero_rejected(a2):
    with pytest.raises(InvalidInputError):
        root_class(a2, (0, 0))


def test_isotropic_summand_is_not_real():
    # Kronecker plus an isolated vertex: (1,1,1) has <a,a> = 1 and ext(a,a) = 0
    # but its general representation splits as delta + e_3
    Q = Quiver.from_arrows(["1", "2", "3"], [("1", "2"), ("1", "2")])
    assert euler_form(Q, (1, 1, 1), (1, 1, 1)) == 1
    assert generic_ext(Q, (1, 1, 1), (1, 1, 1)) == 0
    assert root_class(Q, (1, 1, 1)) is RootClass.NOT_SCHUR
    assert not is_prehomogeneous(Q, (1, 1, 1))


def test_prehomogeneous_examples(a2, k2, a3):
    assert is_prehomogeneous(a2, (2, 1))
    assert not is_prehomogeneous(k2, (1, 1))
    assert not is_prehomogeneous(k2, (2, 2))
    assert is_prehomogeneous(k2, (2, 3))
    assert is_prehomogeneous(a2, (0, 0))
    for alpha in itertools.product(range(4), repeat=3):
        assert is_prehomogeneous(a3, alpha)


def test_kronecker_real_schur_roots(k2):
    expected = sorted({(k, k + 1) for k in range(5)} | {(k + 1, k) for k in range(5)})
    assert real_schur_roots(k2, 5) == expected


@pytest.mark.parametrize("Q", [catalog.linear_a(2), catalog.linear_a(3), catalog.linear_a(4)])
def test_dynkin_real_schur_roots_are_positive_roots(Q):
    assert real_schur_roots(Q, 3) == dynkin_positive_roots(Q)


def test_real_schur_needs_dimension_vector(a2):
    assert not is_real_schur_root(a2, (1, -1))
    assert not is_real_schur_root(a2, (0, 0))


def test_wild_star_root():
    T = catalog.star_t434()
    beta1 = (4, 3, 2, 1, 0, 3, 1, 2, 3)
    beta2 = (0, 0, 0, 0, 1, 0, 0, 0, 0)
    assert euler_form(T, beta1, beta1) == 1
    assert is_real_schur_root(T, beta1)
    assert generic_homext(T, beta1, beta2) == HomExtPair(0, 0)
    assert generic_ext(T, beta2, beta1) == 3


def test_ext_not_from_subvectors_of_beta(k2):
    # the max of -<alpha, beta'> over beta' -> beta would give 1 here
    assert generic_ext(k2, (1, 1), (1, 1)) == 0


def test_negative_input_rejected(a2):
    with pytest.raises(InvalidInputError):
        generic_homext(a2, (-1, 0), (1, 1))


def test_resource_limit(a2):
    with pytest.raises(ResourceError):
        generic_ext(a2, (LIMITS.bound + 1, 0), (1, 1))


@given(small_pair())
def test_euler_reconciliation(data):
    Q, a, b = data
    pair = generic_homext(Q, a, b)
    assert pair.hom >= 0 and pair.ext >= 0
    assert pair.hom - pair.ext == euler_form(Q, a, b)


@given(small_pair(top=2))
def test_both_recursions_agree(data):
    Q, a, b = data
    assert generic_ext(Q, a, b, side="quotient") == generic_ext(Q, a, b, side="sub")


@given(small_pair(top=3))
def test_canonical_decomposition_properties(data):
    Q, a, _ = data
    parts = canonical_decomposition(Q, a)
    total = tuple(sum(m * r[i] for r, m in parts) for i in range(Q.n))
    assert total == a
    for r, m in parts:
        assert root_class(Q, r) is not RootClass.NOT_SCHUR
        if m > 1:
            assert generic_ext(Q, r, r) == 0
    for (r, _), (s, _) in itertools.combinations(parts, 2):
        assert generic_ext(Q, r, s) == 0 and generic_ext(Q, s, r) == 0


@given(small_pair(top=3))
def test_real_schur_roots_are_bricks(data):
    Q, a, _ = data
    if any(a) and is_real_schur_root(Q, a):
        assert generic_ext(Q, a, a) == 0
        assert generic_hom(Q, a, a) == 1


def test_embedding_via_ext(tri):
    for b in itertools.product(range(3), repeat=3):
        for a in itertools.product(range(3), repeat=3):
            if all(x <= y for x, y in zip(a, b)):
                sub = tuple(y - x for x, y in zip(a, b))
                assert embeds(tri, a, b) == (generic_ext(tri, a, sub) == 0)

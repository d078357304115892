import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quiverfan import catalog
from quiverfan.errors import InvalidInputError, ResourceError
from quiverfan.homext import canonical_decomposition, is_prehomogeneous, is_real_schur_root
from quiverfan.quiver import euler_form, pairing, projective_root, weight_map
from quiverfan.stability import (
    Lcg,
    StabilityStatus,
    check_embedding,
    ext_quiver,
    ext_quiver_matrix,
    is_quiver_exceptional_sequence,
    projective_weight,
    sigma_stable_decomposition,
    stability_status,
    stable_dims,
    stable_search,
    verify_embedding_isometry,
)

S = StabilityStatus


def test_status_examples(a2, k2):
    assert stability_status(a2, (1, -1), (1, 1)) is S.STABLE
    assert stability_status(a2, (0, 0), (1, 1)) is S.STRICTLY_SEMISTABLE
    assert stability_status(k2, (1, -1), (2, 2)) is S.STRICTLY_SEMISTABLE
    assert stability_status(a2, (-1, 1), (1, 1)) is S.UNSTABLE
    assert stability_status(a2, (1, 0), (1, 1)) is S.UNSTABLE


def test_status_zero_beta_rejected(a2):
    with pytest.raises(InvalidInputError):
        stability_status(a2, (0, 0), (0, 0))


def test_semistable_flag():
    assert S.STABLE.semistable and S.STRICTLY_SEMISTABLE.semistable and not S.UNSTABLE.semistable


def test_stable_dims_examples(a2, k2):
    assert stable_dims(a2, (1, -1), 4) == [(1, 1)]
    assert stable_dims(k2, weight_map(k2, (1, 1)), 6) == [(1, 1)]
    assert stable_dims(a2, (0, 0), 2) == [(0, 1), (1, 0)]


def test_search_caveats(a2, k2):
    assert stable_search(a2, (1, -1), 1).complete
    assert stable_search(k2, (1, -1), 6).caveats == ["bounded-search"]
    with pytest.raises(ResourceError):
        stable_search(catalog.star_t434(), (0,) * 9, 6)


def test_stable_decomposition_examples(a2):
    assert sorted(sigma_stable_decomposition(a2, (0, 0), (1, 1))) == [((0, 1), 1), ((1, 0), 1)]
    # ext((0,1),(1,0)) = 0 puts (0,1) first
    assert sigma_stable_decomposition(a2, (0, 0), (1, 1)) == [((0, 1), 1), ((1, 0), 1)]
    assert sigma_stable_decomposition(a2, (1, -1), (2, 2)) == [((1, 1), 2)]
    assert sigma_stable_decomposition(a2, (1, -1), (1, 1)) == [((1, 1), 1)]


def test_stable_decomposition_of_unstable(a2):
    with pytest.raises(InvalidInputError):
        sigma_stable_decomposition(a2, (-1, 1), (1, 1))


@pytest.mark.parametrize("Q", [catalog.linear_a(2), catalog.linear_a(3), catalog.kronecker(2), catalog.triangle()])
def test_stable_decomposition_invariants(Q):
    for beta in itertools.product(range(3), repeat=Q.n):
        if not any(beta):
            continue
        for sigma in itertools.product(range(-2, 3), repeat=Q.n):
            if pairing(sigma, beta) or not stability_status(Q, sigma, beta).semistable:
                continue
            parts = sigma_stable_decomposition(Q, sigma, beta)
            assert tuple(sum(m * r[i] for r, m in parts) for i in range(Q.n)) == beta
            for r, _ in parts:
                assert pairing(sigma, r) == 0
                assert stability_status(Q, sigma, r) is S.STABLE


def test_ext_quiver_examples(a2, tri):
    T = catalog.star_t434()
    beta1, beta2 = (4, 3, 2, 1, 0, 3, 1, 2, 3), (0, 0, 0, 0, 1, 0, 0, 0, 0)
    assert euler_form(T, beta2, beta1) == -3
    qe = ext_quiver(T, [beta1, beta2])
    assert qe.arrows == {(1, 0): 3}
    seed = [(0, 1, 1), (1, 0, 0)]
    assert euler_form(tri, seed[1], seed[0]) == -2
    assert ext_quiver(tri, seed).arrows == {(1, 0): 2}
    single = ext_quiver(a2, [(1, 1)])
    assert single.n == 1 and not single.arrows


def test_ext_quiver_rejects_bad_sequence(a2):
    with pytest.raises(InvalidInputError):
        ext_quiver(a2, [(1, 0), (0, 1)])


def test_quiver_exceptional_sequences(a2):
    assert is_quiver_exceptional_sequence(a2, [(0, 1), (1, 0)])
    assert not is_quiver_exceptional_sequence(a2, [(1, 0), (0, 1)])
    assert not is_quiver_exceptional_sequence(a2, [(1, 1), (1, 1)])


def test_isometry_examples(a2, tri):
    assert verify_embedding_isometry(a2, [(1, 1)]).passed
    stable = stable_dims(tri, weight_map(tri, projective_root(tri, "1")), 4)
    assert stable == [(0, 0, 1), (0, 1, 0)]
    assert verify_embedding_isometry(tri, stable, samples=100, seed=3).passed


def test_isometry_negative_control(tri):
    report = verify_embedding_isometry(tri, [(0, 0, 1), (0, 1, 1)], samples=100, seed=0)
    assert not report.passed
    assert report.counterexample["ext_quiver"] != report.counterexample["quiver"]


def test_isometry_is_reproducible(tri):
    one = verify_embedding_isometry(tri, [(0, 0, 1), (1, 1, 0)], seed=11).to_dict()
    two = verify_embedding_isometry(tri, [(0, 0, 1), (1, 1, 0)], seed=11).to_dict()
    assert one == two


def test_lcg_reference_values():
    rng = Lcg(0)
    state = 1442695040888963407
    assert rng.below(1 << 31) == state >> 33
    rng2 = Lcg(42)
    draws = [rng2.below(10) for _ in range(5)]
    assert draws == [Lcg(42).below(10)] + draws[1:]
    assert all(0 <= d < 10 for d in draws)


def test_ext_quiver_matrix_pulls_back_euler_form(tri):
    roots = [(0, 0, 1), (0, 1, 0)]
    counts = ext_quiver_matrix(tri, roots)
    for i, j in itertools.product(range(2), repeat=2):
        expected = int(i == j) - counts[i][j]
        assert euler_form(tri, roots[i], roots[j]) == expected


def test_projective_weight_is_indicator(tri):
    assert projective_weight(tri, "2") == (0, 1, 0)


def test_stable_dims_are_real_schur(a3):
    for alpha in itertools.product(range(4), repeat=3):
        if not any(alpha) or not is_prehomogeneous(a3, alpha):
            continue
        for r in stable_dims(a3, weight_map(a3, alpha), 3):
            assert is_real_schur_root(a3, r)


@pytest.mark.parametrize("Q,bound", [(catalog.linear_a(3), 3), (catalog.triangle(), 4)])
def test_stable_count_matches_summands(Q, bound):
    for alpha in itertools.product(range(3), repeat=3):
        if not any(alpha) or not is_prehomogeneous(Q, alpha):
            continue
        report = check_embedding(Q, alpha, bound, samples=20)
        assert report.passed, report
        assert len(report.stable) == Q.n - len(canonical_decomposition(Q, alpha))


def test_check_embedding_rejects_non_prehomogeneous(k2):
    with pytest.raises(InvalidInputError):
        check_embedding(k2, (1, 1), 4)


@given(st.lists(st.integers(-2, 2), min_size=3, max_size=3), st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_stable_implies_semistable_subvectors(sigma, beta):
    Q = catalog.triangle()
    if not any(beta):
        return
    status = stability_status(Q, sigma, beta)
    if status is not S.UNSTABLE:
        assert pairing(sigma, beta) == 0

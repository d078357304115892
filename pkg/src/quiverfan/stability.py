"""Stability of dimension vectors for a weight, stable dimension vectors,
the stable decomposition, and Ext-quivers of quiver exceptional sequences.

Weights are always explicit integer vectors ``sigma`` with
``sigma(beta) = sum(sigma[i] * beta[i])``.  A weight of the form
``<alpha, .>`` is obtained with :func:`quiverfan.quiver.weight_map`.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Sequence

from quiverfan import exact
from quiverfan.errors import ConsistencyError, CycleError, InvalidInputError, ResourceError
from quiverfan.homext import (
    _dimension_vector,
    _embeds,
    _ext,
    canonical_decomposition,
    generic_homext,
    is_prehomogeneous,
    is_real_schur_root,
    subvectors,
)
from quiverfan.quiver import (
    Quiver,
    Vector,
    dynkin_positive_roots,
    euler_form,
    is_dynkin,
    pairing,
    projective_root,
    sub,
    weight_map,
)

DEFAULT_SEARCH_BUDGET = 2_000_000


class StabilityStatus(str, enum.Enum):
    UNSTABLE = "unstable"
    STRICTLY_SEMISTABLE = "strictly-semistable"
    STABLE = "stable"

    @property
    def semistable(self) -> bool:
        return self is not StabilityStatus.UNSTABLE


@dataclass(frozen=True)
class ExceptionalCollection:
    """Ordered real Schur roots plus negated projective roots ``-gamma_i``
    for the vertex indices in ``negatives``."""

    roots: tuple[Vector, ...] = ()
    negatives: frozenset[int] = frozenset()

    def vectors(self, Q: Quiver) -> list[Vector]:
        negs = [tuple(-x for x in Q.path_counts[i]) for i in sorted(self.negatives)]
        return list(self.roots) + negs

    def to_dict(self, Q: Quiver) -> dict:
        return {
            "roots": [list(r) for r in self.roots],
            "negatives": [Q.vertices[i] for i in sorted(self.negatives)],
        }


def _nonzero_dimension_vector(Q: Quiver, beta, name="beta") -> Vector:
    b = _dimension_vector(Q, beta, name)
    if not any(b):
        raise InvalidInputError(f"{name} must be nonzero")
    return b


def _status(Q: Quiver, sigma: Vector, b: Vector) -> StabilityStatus:
    if pairing(sigma, b) != 0:
        return StabilityStatus.UNSTABLE
    blocked = False
    for bp in subvectors(b):
        if not any(bp) or bp == b:
            continue
        value = pairing(sigma, bp)
        if value < 0 or (value == 0 and blocked):
            continue
        if _embeds(Q, bp, b):
            if value > 0:
                return StabilityStatus.UNSTABLE
            blocked = True
    return StabilityStatus.STRICTLY_SEMISTABLE if blocked else StabilityStatus.STABLE


def stability_status(Q: Quiver, sigma: Sequence[int], beta: Sequence[int]) -> StabilityStatus:
    """Whether a general ``beta``-dimensional representation is
    ``sigma``-stable, strictly semistable or unstable."""
    sigma = Q.vector(sigma)
    return _status(Q, sigma, _nonzero_dimension_vector(Q, beta))


@dataclass(frozen=True)
class StableSearch:
    roots: list[Vector]
    bound: int
    complete: bool

    @property
    def caveats(self) -> list[str]:
        return [] if self.complete else ["bounded-search"]


def search_is_complete(Q: Quiver, bound: int) -> bool:
    """A box search up to ``bound`` sees every Schur root when ``Q`` is Dynkin
    and ``bound`` reaches the largest positive-root entry."""
    if not is_dynkin(Q):
        return False
    return bound >= max((max(r) for r in dynkin_positive_roots(Q)), default=0)


def stable_search(Q: Quiver, sigma: Sequence[int], bound: int, budget: int = DEFAULT_SEARCH_BUDGET) -> StableSearch:
    sigma = Q.vector(sigma)
    if bound < 0:
        raise InvalidInputError("bound must be non-negative")
    if (bound + 1) ** Q.n > budget:
        raise ResourceError(f"search box {bound + 1}^{Q.n} exceeds the budget {budget}")
    roots = []
    for b in subvectors((bound,) * Q.n):
        if any(b) and pairing(sigma, b) == 0 and _status(Q, sigma, b) is StabilityStatus.STABLE:
            roots.append(b)
    return StableSearch(sorted(roots), bound, search_is_complete(Q, bound))


def stable_dims(Q: Quiver, sigma: Sequence[int], bound: int, budget: int = DEFAULT_SEARCH_BUDGET) -> list[Vector]:
    """All ``sigma``-stable dimension vectors with entries at most ``bound``."""
    return stable_search(Q, sigma, bound, budget).roots


def _order_forward(Q: Quiver, roots: list[Vector]) -> list[Vector] | None:
    """Order ``roots`` so that ext vanishes from earlier to later ones."""
    remaining = sorted(roots)
    ordered: list[Vector] = []
    while remaining:
        # r may go next only if ext(r, s) == 0 for every s still waiting
        ready = [r for r in remaining if all(s == r or _ext(Q, r, s) == 0 for s in remaining)]
        if not ready:
            return None
        ordered.append(ready[0])
        remaining.remove(ready[0])
    return ordered


def sigma_stable_decomposition(Q: Quiver, sigma: Sequence[int], beta: Sequence[int]) -> list[tuple[Vector, int]]:
    """Dimension vectors (with multiplicity) of the stable factors of a
    general ``sigma``-semistable ``beta``-dimensional representation.

    Repeatedly peels off the smallest (total dimension, then lexicographic)
    nonzero ``b' -> b`` with ``sigma(b') = 0``; minimality makes it stable.
    Distinct factors come out ordered so that ext vanishes forward.
    """
    sigma = Q.vector(sigma)
    b = _nonzero_dimension_vector(Q, beta)
    if not _status(Q, sigma, b).semistable:
        raise InvalidInputError(f"beta={b} is not {sigma}-semistable")
    factors: list[Vector] = []
    rest = b
    while any(rest):
        candidates = [
            bp for bp in subvectors(rest)
            if any(bp) and pairing(sigma, bp) == 0
        ]
        candidates.sort(key=lambda v: (sum(v), v))
        first = next((bp for bp in candidates if _embeds(Q, bp, rest)), None)
        if first is None or _status(Q, sigma, first) is not StabilityStatus.STABLE:
            raise ConsistencyError("no stable factor found", sigma=sigma, beta=b, rest=rest, candidate=first)
        factors.append(first)
        rest = sub(rest, first)
        if any(rest) and not _status(Q, sigma, rest).semistable:
            raise ConsistencyError("remainder is unstable", sigma=sigma, beta=b, rest=rest)
    counts: dict[Vector, int] = {}
    for f in factors:
        counts[f] = counts.get(f, 0) + 1
    ordered = _order_forward(Q, list(counts))
    if ordered is None:
        raise ConsistencyError("stable factors admit no ext-forward order", sigma=sigma, beta=b, factors=factors)
    for x, y in itertools.permutations(ordered, 2):
        if _ext(Q, x, y) + euler_form(Q, x, y) != 0:
            raise ConsistencyError("distinct stable factors have nonzero hom", sigma=sigma, pair=(x, y))
    return [(r, counts[r]) for r in ordered]


def is_quiver_exceptional_sequence(Q: Quiver, roots: Sequence[Sequence[int]], quiver_flavor: bool = True) -> bool:
    """Real Schur roots, perpendicular from each to every later one, and (for
    the quiver flavour) ``<later, earlier> <= 0``."""
    roots = [Q.vector(r) for r in roots]
    if not all(is_real_schur_root(Q, r) for r in roots):
        return False
    for i, j in itertools.combinations(range(len(roots)), 2):
        if generic_homext(Q, roots[i], roots[j]).hom or _ext(Q, roots[i], roots[j]):
            return False
        if quiver_flavor and euler_form(Q, roots[j], roots[i]) > 0:
            return False
    return True


def ext_quiver_matrix(Q: Quiver, roots: Sequence[Sequence[int]]) -> list[list[int]]:
    """Arrow counts ``max(0, -<b_i, b_j>)`` for ``i != j``, without validation."""
    roots = [Q.vector(r) for r in roots]
    n = len(roots)
    return [[0 if i == j else max(0, -euler_form(Q, roots[i], roots[j])) for j in range(n)] for i in range(n)]


def ext_quiver(Q: Quiver, roots: Sequence[Sequence[int]]) -> Quiver:
    """The quiver on ``1..l`` with ``-<b_i, b_j>`` arrows ``i -> j``."""
    roots = [Q.vector(r) for r in roots]
    if not is_quiver_exceptional_sequence(Q, roots):
        raise InvalidInputError(f"{roots} is not a quiver exceptional sequence")
    counts = ext_quiver_matrix(Q, roots)
    for i, j in itertools.permutations(range(len(roots)), 2):
        if counts[i][j] != _ext(Q, roots[i], roots[j]):
            raise ConsistencyError(
                "ext differs from -<b_i, b_j>", i=i, j=j, ext=_ext(Q, roots[i], roots[j]), count=counts[i][j]
            )
    names = [str(k + 1) for k in range(len(roots))]
    arrows = [(names[i], names[j]) for i, row in enumerate(counts) for j, m in enumerate(row) for _ in range(m)]
    try:
        return Quiver.from_arrows(names, arrows)
    except CycleError:
        raise ConsistencyError("Ext-quiver has an oriented cycle", roots=roots) from None


class Lcg:
    """64-bit linear congruential generator (Knuth's MMIX constants).

    ``state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64``;
    a draw below ``n`` is ``(state >> 33) % n`` taken after each step.
    """

    A = 6364136223846793005
    C = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def below(self, n: int) -> int:
        self.state = (self.A * self.state + self.C) & self.MASK
        return (self.state >> 33) % n


@dataclass
class IsometryReport:
    passed: bool
    samples: int
    seed: int
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        return {"passed": self.passed, "samples": self.samples, "seed": self.seed,
                "counterexample": self.counterexample}


def verify_embedding_isometry(
    Q: Quiver, roots: Sequence[Sequence[int]], samples: int = 100, seed: int = 0, max_entry: int = 10
) -> IsometryReport:
    """Compare the Euler form of the Ext-quiver with the pull-back of the Euler
    form of ``Q`` through ``eta -> sum(eta[i] * roots[i])`` on seeded samples."""
    roots = [Q.vector(r) for r in roots]
    if not roots or any(min(r) < 0 or not any(r) for r in roots):
        raise InvalidInputError("roots must be nonzero dimension vectors")
    arrows = ext_quiver_matrix(Q, roots)
    l = len(roots)
    rng = Lcg(seed)
    for _ in range(samples):
        eta = [rng.below(max_entry + 1) for _ in range(l)]
        gamma = [rng.below(max_entry + 1) for _ in range(l)]
        lhs = sum(e * g for e, g in zip(eta, gamma)) - sum(
            arrows[i][j] * eta[i] * gamma[j] for i in range(l) for j in range(l)
        )
        ie = _combine(roots, eta)
        ig = _combine(roots, gamma)
        rhs = euler_form(Q, ie, ig)
        if lhs != rhs:
            return IsometryReport(False, samples, seed, {"eta": eta, "gamma": gamma, "ext_quiver": lhs, "quiver": rhs})
    return IsometryReport(True, samples, seed)


def _combine(roots: Sequence[Vector], coeffs: Sequence[int]) -> Vector:
    return tuple(sum(c * r[k] for c, r in zip(coeffs, roots)) for k in range(len(roots[0])))


@dataclass
class EmbeddingReport:
    """Numeric checks for the stable dimension vectors of ``<alpha, .>`` with
    ``alpha`` pre-homogeneous."""

    alpha: Vector
    sigma: Vector
    stable: list[Vector]
    sequence: list[Vector] | None
    distinct_summands: int
    all_real_schur: bool
    independent: bool
    count_ok: bool
    count_matches_summands: bool
    isometry: IsometryReport | None
    complete: bool
    caveats: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.all_real_schur and self.independent and self.count_ok
            and self.count_matches_summands and self.sequence is not None
            and (self.isometry is None or self.isometry.passed)
        )


def check_embedding(Q: Quiver, alpha: Sequence[int], bound: int, samples: int = 100, seed: int = 0) -> EmbeddingReport:
    a = _nonzero_dimension_vector(Q, alpha, "alpha")
    if not is_prehomogeneous(Q, a):
        raise InvalidInputError(f"alpha={a} is not pre-homogeneous")
    sigma = weight_map(Q, a)
    search = stable_search(Q, sigma, bound)
    stable = search.roots
    r = len(canonical_decomposition(Q, a))
    sequence = _find_quiver_sequence(Q, stable)
    iso = verify_embedding_isometry(Q, sequence, samples, seed) if sequence else None
    return EmbeddingReport(
        alpha=a,
        sigma=sigma,
        stable=stable,
        sequence=sequence,
        distinct_summands=r,
        all_real_schur=all(is_real_schur_root(Q, s) for s in stable),
        independent=exact.independent(stable),
        count_ok=len(stable) <= Q.n - 1,
        count_matches_summands=len(stable) == Q.n - r,
        isometry=iso,
        complete=search.complete,
        caveats=search.caveats,
    )


def _find_quiver_sequence(Q: Quiver, roots: Sequence[Vector]) -> list[Vector] | None:
    for perm in itertools.permutations(sorted(roots)):
        if is_quiver_exceptional_sequence(Q, perm):
            return list(perm)
    return None


def projective_weight(Q: Quiver, vertex) -> Vector:
    """The weight ``<gamma_i, .>``, which is the indicator of ``vertex``."""
    return weight_map(Q, projective_root(Q, vertex))

"""Brute-force ground truth from explicit representations over F_p.

Nothing here calls the hom/ext recursion: every verdict is read off matrices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from quiverfan.errors import InvalidInputError, ResourceError
from quiverfan.homext import HomExtPair
from quiverfan.oracle.linalg import FIELDS, batched_rank, det, rank, rref_subspaces
from quiverfan.quiver import Quiver, Vector, euler_form, pairing
from quiverfan.stability import StabilityStatus

DEFAULT_BUDGET = 10**6
DEFAULT_SAMPLES = 3000
_CHUNK = 20000


@dataclass(frozen=True, eq=False)
class Rep:
    """A representation over F_p.  ``maps[k]`` belongs to the k-th entry of
    ``Q.arrow_list()`` and has shape ``(dims[head], dims[tail])``."""

    p: int
    dims: Vector
    maps: tuple[np.ndarray, ...]

    @classmethod
    def build(cls, Q: Quiver, p: int, dims: Sequence[int], maps: Sequence) -> "Rep":
        dims = Q.vector(dims)
        arrows = Q.arrow_list()
        if len(maps) != len(arrows):
            raise InvalidInputError(f"expected {len(arrows)} arrow matrices, got {len(maps)}")
        fixed = []
        for (t, h), m in zip(arrows, maps):
            m = np.asarray(m, dtype=np.int64).reshape(dims[h], dims[t]) % p
            fixed.append(m)
        return cls(p, dims, tuple(fixed))

    @classmethod
    def zero_maps(cls, Q: Quiver, p: int, dims: Sequence[int]) -> "Rep":
        dims = Q.vector(dims)
        return cls(p, dims, tuple(np.zeros((dims[h], dims[t]), dtype=np.int64) for t, h in Q.arrow_list()))


def rep_space_dim(Q: Quiver, dims: Sequence[int]) -> int:
    return sum(dims[h] * dims[t] for t, h in Q.arrow_list())


def _flat_to_maps(Q: Quiver, dims: Sequence[int], flat: np.ndarray) -> list[np.ndarray]:
    """Split a ``(N, rep_space_dim)`` array into per-arrow ``(N, h, t)`` stacks."""
    out, pos = [], 0
    for t, h in Q.arrow_list():
        size = dims[h] * dims[t]
        out.append(flat[:, pos:pos + size].reshape(flat.shape[0], dims[h], dims[t]))
        pos += size
    return out


def _all_points(k: int, p: int) -> np.ndarray:
    codes = np.arange(p**k, dtype=np.int64)
    return (codes[:, None] // p ** np.arange(k, dtype=np.int64)[None, :]) % p


def enumerate_reps(Q: Quiver, dims: Sequence[int], p: int) -> Iterator[Rep]:
    dims = Q.vector(dims)
    for flat in _all_points(rep_space_dim(Q, dims), p):
        yield Rep(p, dims, tuple(m[0] for m in _flat_to_maps(Q, dims, flat[None])))


def random_rep(Q: Quiver, dims: Sequence[int], p: int, rng: np.random.Generator) -> Rep:
    dims = Q.vector(dims)
    flat = rng.integers(0, p, size=(1, rep_space_dim(Q, dims)))
    return Rep(p, dims, tuple(m[0] for m in _flat_to_maps(Q, dims, flat)))


def _hom_matrices(Q: Quiver, alpha: Vector, beta: Vector, vmaps, wmaps, count: int) -> np.ndarray:
    """Stack of matrices of phi -> (phi(h) V(a) - W(a) phi(t)) over all arrows."""
    col = [0]
    for i in range(Q.n):
        col.append(col[-1] + alpha[i] * beta[i])
    arrows = Q.arrow_list()
    nrows = sum(alpha[t] * beta[h] for t, h in arrows)
    mats = np.zeros((count, nrows, col[-1]), dtype=np.int64)
    row0 = 0
    for (t, h), va, wa in zip(arrows, vmaps, wmaps):
        for r in range(beta[h]):
            for c in range(alpha[t]):
                row = row0 + r * alpha[t] + c
                for k in range(alpha[h]):
                    mats[:, row, col[h] + r * alpha[h] + k] += va[:, k, c]
                for k in range(beta[t]):
                    mats[:, row, col[t] + k * alpha[t] + c] -= wa[:, r, k]
        row0 += alpha[t] * beta[h]
    return mats


def hom_matrix(Q: Quiver, V: Rep, W: Rep) -> np.ndarray:
    if V.p != W.p:
        raise InvalidInputError(f"field mismatch: F_{V.p} vs F_{W.p}")
    vmaps = [m[None] for m in V.maps]
    wmaps = [m[None] for m in W.maps]
    return _hom_matrices(Q, V.dims, W.dims, vmaps, wmaps, 1)[0] % V.p


def hom_dim(Q: Quiver, V: Rep, W: Rep) -> int:
    """``dim Hom(V, W)``: the kernel of Ringel's map."""
    mat = hom_matrix(Q, V, W)
    return mat.shape[1] - rank(mat, V.p)


def ext_dim(Q: Quiver, V: Rep, W: Rep) -> int:
    return hom_dim(Q, V, W) - euler_form(Q, V.dims, W.dims)


@dataclass(frozen=True)
class OracleHomExt:
    hom: int
    ext: int
    sampled: bool
    fields: tuple[int, ...]
    pairs_checked: int
    per_field: dict = field(default_factory=dict, compare=False)

    @property
    def pair(self) -> HomExtPair:
        return HomExtPair(self.hom, self.ext)


def brute_generic_homext(
    Q: Quiver,
    alpha: Sequence[int],
    beta: Sequence[int],
    fields: Sequence[int] = FIELDS,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
) -> OracleHomExt:
    """Minimum of ``dim Hom`` over representation pairs, per field and then
    across fields.  A field whose pair space exceeds ``budget`` is sampled
    (``samples`` seeded pairs) and the result is flagged."""
    alpha, beta = Q.vector(alpha), Q.vector(beta)
    if min(alpha + beta, default=0) < 0:
        raise InvalidInputError("dimension vectors must be non-negative")
    euler = euler_form(Q, alpha, beta)
    floor = max(0, euler)
    ka, kb = rep_space_dim(Q, alpha), rep_space_dim(Q, beta)
    best, sampled, checked, per_field = None, False, 0, {}
    for p in fields:
        if p**ka * p**kb <= budget:
            vs, ws = _all_points(ka, p), _all_points(kb, p)
            pairs = _exhaustive_pairs(len(vs), len(ws))
        else:
            sampled = True
            rng = np.random.default_rng([seed, p])
            vs = rng.integers(0, p, size=(samples, ka))
            ws = rng.integers(0, p, size=(samples, kb))
            pairs = _diagonal_pairs(samples)
        low = None
        for vi, wi in pairs:
            vmaps = _flat_to_maps(Q, alpha, vs[vi])
            wmaps = _flat_to_maps(Q, beta, ws[wi])
            mats = _hom_matrices(Q, alpha, beta, vmaps, wmaps, len(vi))
            homs = mats.shape[2] - batched_rank(mats, p)
            checked += len(vi)
            chunk_min = int(homs.min())
            low = chunk_min if low is None else min(low, chunk_min)
            if low == floor:
                break
        per_field[p] = low
        best = low if best is None else min(best, low)
        if best == floor:
            break
    if best is None:
        raise ResourceError("no field given to the oracle")
    return OracleHomExt(best, best - euler, sampled, tuple(per_field), checked, per_field)


def _exhaustive_pairs(nv: int, nw: int):
    total = nv * nw
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(total, start + _CHUNK))
        yield codes // nw, codes % nw


def _diagonal_pairs(n: int):
    for start in range(0, n, _CHUNK):
        codes = np.arange(start, min(n, start + _CHUNK))
        yield codes, codes


def _in_span(basis: np.ndarray, vectors: np.ndarray, p: int) -> bool:
    if vectors.shape[0] == 0:
        return True
    return rank(np.vstack([basis, vectors]), p) == basis.shape[0]


def subrep_dim_vectors(Q: Quiver, V: Rep, budget: int = DEFAULT_BUDGET) -> set[Vector]:
    """Dimension vectors of all subrepresentations of ``V``."""
    p = V.p
    spaces = [rref_subspaces(d, p) for d in V.dims]
    total = 1
    for s in spaces:
        total *= len(s)
    if total > budget:
        raise ResourceError(f"{total} subspace tuples exceed the budget {budget}")
    arrows = Q.arrow_list()
    # allowed[k] holds the (tail subspace, head subspace) index pairs closed under arrow k
    allowed = []
    for (t, h), m in zip(arrows, V.maps):
        ok = set()
        for it, ut in enumerate(spaces[t]):
            image = (m @ ut.T).T % p
            for ih, uh in enumerate(spaces[h]):
                if uh.shape[0] >= rank(image, p) and _in_span(uh, image, p):
                    ok.add((it, ih))
        allowed.append(ok)
    found = set()
    for choice in itertools.product(*(range(len(s)) for s in spaces)):
        if all((choice[t], choice[h]) in ok for (t, h), ok in zip(arrows, allowed)):
            found.add(tuple(spaces[i][c].shape[0] for i, c in enumerate(choice)))
    return found


def stability_from_subdims(sigma: Sequence[int], dims: Sequence[int], subdims) -> StabilityStatus:
    """King's criterion evaluated on a set of subrepresentation dimension vectors."""
    dims = tuple(dims)
    if pairing(sigma, dims) != 0:
        return StabilityStatus.UNSTABLE
    proper = [s for s in subdims if any(s) and s != dims]
    values = [pairing(sigma, s) for s in proper]
    if any(v > 0 for v in values):
        return StabilityStatus.UNSTABLE
    if any(dims) and all(v < 0 for v in values):
        return StabilityStatus.STABLE
    return StabilityStatus.STRICTLY_SEMISTABLE


def rep_stability(Q: Quiver, sigma: Sequence[int], V: Rep) -> StabilityStatus:
    return stability_from_subdims(Q.vector(sigma), V.dims, subrep_dim_vectors(Q, V))


def schofield_det(Q: Quiver, V: Rep, W: Rep) -> int:
    """``det`` of Ringel's map for ``<dim V, dim W> = 0``, as an element of
    ``range(p)``; nonzero exactly when Hom(V, W) = Ext(V, W) = 0."""
    mat = hom_matrix(Q, V, W)
    if mat.shape[0] != mat.shape[1]:
        raise InvalidInputError(
            f"<{V.dims}, {W.dims}> = {euler_form(Q, V.dims, W.dims)} != 0: Ringel's map is not square"
        )
    if mat.shape[0] == 0:
        return 1
    return det(mat, V.p)


def extension_rep(Q: Quiver, sub: Rep, quotient: Rep, blocks: Sequence) -> Rep:
    """The representation with maps ``[[sub, block], [0, quotient]]``: it
    contains ``sub`` on the leading coordinates with quotient ``quotient``."""
    p = sub.p
    dims = tuple(a + b for a, b in zip(sub.dims, quotient.dims))
    maps = []
    for (t, h), s, q, b in zip(Q.arrow_list(), sub.maps, quotient.maps, blocks):
        m = np.zeros((dims[h], dims[t]), dtype=np.int64)
        m[: sub.dims[h], : sub.dims[t]] = s
        m[: sub.dims[h], sub.dims[t]:] = np.asarray(b, dtype=np.int64).reshape(sub.dims[h], quotient.dims[t])
        m[sub.dims[h]:, sub.dims[t]:] = q
        maps.append(m % p)
    return Rep(p, dims, tuple(maps))


def enumerate_blocks(Q: Quiver, sub_dims: Sequence[int], quot_dims: Sequence[int], p: int) -> Iterator[list[np.ndarray]]:
    shapes = [(sub_dims[h], quot_dims[t]) for t, h in Q.arrow_list()]
    k = sum(a * b for a, b in shapes)
    for flat in _all_points(k, p):
        out, pos = [], 0
        for a, b in shapes:
            out.append(flat[pos:pos + a * b].reshape(a, b))
            pos += a * b
        yield out


_RANK = {StabilityStatus.UNSTABLE: 0, StabilityStatus.STRICTLY_SEMISTABLE: 1, StabilityStatus.STABLE: 2}


@dataclass(frozen=True)
class OracleStability:
    """Best stability status met among ``beta``-dimensional representations
    over F_p, judged over the algebraic closure.

    Semistability descends from the closure, and an F_p-stable ``V`` stays
    stable there exactly when ``End(V)`` is one-dimensional, so F_p-stable
    representations with larger endomorphism rings count as strictly
    semistable."""

    status: StabilityStatus
    p: int
    sampled: bool
    reps_checked: int


def oracle_stability(
    Q: Quiver,
    sigma: Sequence[int],
    beta: Sequence[int],
    p: int,
    budget: int = 10**5,
    seed: int = 0,
    samples: int = 2000,
) -> OracleStability:
    sigma, beta = Q.vector(sigma), Q.vector(beta)
    if min(beta, default=0) < 0 or not any(beta):
        raise InvalidInputError("beta must be a nonzero dimension vector")
    if pairing(sigma, beta) != 0:
        return OracleStability(StabilityStatus.UNSTABLE, p, False, 0)
    k = rep_space_dim(Q, beta)
    sampled = p**k > budget
    if sampled:
        points = np.random.default_rng([seed, p]).integers(0, p, size=(samples, k))
    else:
        points = _all_points(k, p)
    best, checked = StabilityStatus.UNSTABLE, 0
    for flat in points:
        V = Rep(p, beta, tuple(m[0] for m in _flat_to_maps(Q, beta, flat[None, :])))
        checked += 1
        status = rep_stability(Q, sigma, V)
        if status is StabilityStatus.STABLE and hom_dim(Q, V, V) != 1:
            # stable over F_p only: over the closure it splits into conjugate pieces
            status = StabilityStatus.STRICTLY_SEMISTABLE
        if _RANK[status] > _RANK[best]:
            best = status
            if best is StabilityStatus.STABLE:
                break
    return OracleStability(best, p, sampled, checked)


@dataclass(frozen=True)
class BridgeResult:
    agree: bool
    expected: StabilityStatus
    observed: StabilityStatus
    fields: tuple[int, ...]
    sampled: bool


def stability_bridge(
    Q: Quiver, sigma: Sequence[int], beta: Sequence[int], expected: StabilityStatus, fields: Sequence[int] = FIELDS,
    seed: int = 0,
) -> BridgeResult:
    """Compare a dimension-level verdict with the representation-level one,
    moving to the next field while they differ (a small field can miss the
    general representation)."""
    used, sampled, observed = [], False, StabilityStatus.UNSTABLE
    for p in fields:
        result = oracle_stability(Q, sigma, beta, p, seed=seed)
        used.append(p)
        sampled = sampled or result.sampled
        observed = result.status
        if observed is expected:
            return BridgeResult(True, expected, observed, tuple(used), sampled)
    return BridgeResult(False, expected, observed, tuple(used), sampled)

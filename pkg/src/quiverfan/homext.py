"""Generic hom/ext between dimension vectors, the relation ``alpha -> beta``
(every beta-dimensional representation has an alpha-dimensional
subrepresentation), canonical decomposition and Schur-root classes.

The recursion is Schofield's::

    ext(a, b) = max{ -<a, b - b'> : b' -> b } = max{ -<a', b> : a' -> a }
    a -> b   iff   ext(a, b - a) == 0

Both maxima range over quotient vectors of ``b`` (resp. subvectors of ``a``),
so each call only recurses on strictly smaller total dimension.  Results are
memoized on the quiver.  The memo only ever receives deterministic values, so
concurrent callers may race on an insert but always store the same entry.
"""
from __future__ import annotations

import enum
import itertools
import math
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from quiverfan.errors import InvalidInputError, ResourceError
from quiverfan.quiver import Quiver, Vector, euler_form, leq, sub

DEFAULT_BOUND = 64
DEFAULT_MEMO_CAP = 5_000_000

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


@dataclass(frozen=True)
class HomExtPair:
    hom: int
    ext: int


class RootClass(str, enum.Enum):
    REAL_SCHUR = "real-schur"
    IMAGINARY_SCHUR = "imaginary-schur"
    NOT_SCHUR = "not-schur"


@dataclass
class Limits:
    """Budgets shared by every recursion; adjust module-wide via ``LIMITS``."""

    bound: int = DEFAULT_BOUND
    memo_cap: int = DEFAULT_MEMO_CAP


LIMITS = Limits()


def subvectors(v: Sequence[int]) -> Iterator[Vector]:
    """All vectors ``0 <= w <= v`` in lexicographic order."""
    return itertools.product(*(range(x + 1) for x in v))


def box_size(v: Sequence[int]) -> int:
    return math.prod(x + 1 for x in v)


def _dimension_vector(Q: Quiver, v: Sequence[int], name: str) -> Vector:
    v = Q.vector(v)
    if any(x < 0 for x in v):
        raise InvalidInputError(f"{name}={v} has a negative entry")
    if any(x > LIMITS.bound for x in v):
        raise ResourceError(f"{name}={v} exceeds the componentwise bound {LIMITS.bound}")
    return v


def _remember(Q: Quiver, key, value):
    if len(Q.memo) >= LIMITS.memo_cap:
        raise ResourceError(f"memo table for this quiver exceeded {LIMITS.memo_cap} entries")
    Q.memo[key] = value
    return value


def _ext(Q: Quiver, a: Vector, b: Vector, side: str | None = None) -> int:
    if not any(a) or not any(b):
        return 0
    key = ("ext", a, b) if side is None else ("ext", a, b, side)
    hit = Q.memo.get(key)
    if hit is not None:
        return hit
    if side is None:
        side = "quotient" if box_size(b) <= box_size(a) else "sub"

    if side == "quotient":
        # value of the quotient b - b' for every candidate sub b'
        candidates = [(-euler_form(Q, a, sub(b, bp)), bp) for bp in subvectors(b)]
        whole = b
    else:
        candidates = [(-euler_form(Q, ap, b), ap) for ap in subvectors(a)]
        whole = a
    candidates = [c for c in candidates if c[0] > 0]
    candidates.sort(key=lambda c: -c[0])
    result = 0
    for value, cand in candidates:
        if _embeds(Q, cand, whole):
            result = value
            break
    return _remember(Q, key, result)


def _embeds(Q: Quiver, a: Vector, b: Vector) -> bool:
    if not leq(a, b):
        return False
    if not any(a) or a == b:
        return True
    key = ("emb", a, b)
    hit = Q.memo.get(key)
    if hit is not None:
        return hit
    return _remember(Q, key, _ext(Q, a, sub(b, a)) == 0)


def embeds(Q: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Whether every ``beta``-dimensional representation has an
    ``alpha``-dimensional subrepresentation."""
    a = _dimension_vector(Q, alpha, "alpha")
    b = _dimension_vector(Q, beta, "beta")
    return _embeds(Q, a, b)


def generic_ext(Q: Quiver, alpha: Sequence[int], beta: Sequence[int], side: str | None = None) -> int:
    """Generic ``dim Ext^1``.  ``side`` forces the quotient-of-beta or
    sub-of-alpha maximum at the top level; by default the smaller box is used."""
    if side not in (None, "quotient", "sub"):
        raise InvalidInputError(f"unknown side {side!r}")
    a = _dimension_vector(Q, alpha, "alpha")
    b = _dimension_vector(Q, beta, "beta")
    return _ext(Q, a, b, side)


def generic_hom(Q: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    return generic_homext(Q, alpha, beta).hom


def generic_homext(Q: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> HomExtPair:
    a = _dimension_vector(Q, alpha, "alpha")
    b = _dimension_vector(Q, beta, "beta")
    ext = _ext(Q, a, b)
    return HomExtPair(hom=ext + euler_form(Q, a, b), ext=ext)


def is_perpendicular(Q: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Generic hom and ext from ``alpha`` to ``beta`` both vanish."""
    return generic_homext(Q, alpha, beta) == HomExtPair(0, 0)


def _canonical(Q: Quiver, a: Vector) -> Counter:
    key = ("canon", a)
    hit = Q.memo.get(key)
    if hit is not None:
        return Counter(dict(hit))
    result: Counter | None = None
    for b in subvectors(a):
        if not any(b) or b == a:
            continue
        c = sub(a, b)
        if b > c:
            # the complement split was already tried
            continue
        if _ext(Q, b, c) == 0 and _ext(Q, c, b) == 0:
            result = _canonical(Q, b) + _canonical(Q, c)
            break
    if result is None:
        result = Counter({a: 1})
    _remember(Q, key, tuple(sorted(result.items())))
    return result


def canonical_decomposition(Q: Quiver, alpha: Sequence[int]) -> list[tuple[Vector, int]]:
    """Schur roots (with multiplicity) of the general ``alpha``-dimensional
    representation, sorted by root."""
    a = _dimension_vector(Q, alpha, "alpha")
    if not any(a):
        return []
    return sorted(_canonical(Q, a).items())


def root_class(Q: Quiver, alpha: Sequence[int]) -> RootClass:
    a = _dimension_vector(Q, alpha, "alpha")
    if not any(a):
        raise InvalidInputError("root_class needs a nonzero dimension vector")
    real = euler_form(Q, a, a) == 1
    if real and _ext(Q, a, a) != 0:
        # a real Schur root is rigid; this cheap test settles most cases
        return RootClass.NOT_SCHUR
    if sum(_canonical(Q, a).values()) >= 2:
        return RootClass.NOT_SCHUR
    return RootClass.REAL_SCHUR if real else RootClass.IMAGINARY_SCHUR


def is_real_schur_root(Q: Quiver, alpha: Sequence[int]) -> bool:
    a = Q.vector(alpha)
    if any(x < 0 for x in a) or not any(a):
        return False
    return root_class(Q, a) is RootClass.REAL_SCHUR


def is_prehomogeneous(Q: Quiver, alpha: Sequence[int]) -> bool:
    """Whether ``rep(Q, alpha)`` has a dense orbit: every canonical summand is
    a real Schur root.  ``ext(alpha, alpha) == 0`` alone is not enough, since
    two general representations of an isotropic root have no extensions."""
    a = _dimension_vector(Q, alpha, "alpha")
    if not any(a):
        return True
    if _ext(Q, a, a) != 0:
        return False
    return all(euler_form(Q, b, b) == 1 for b in _canonical(Q, a))


def real_schur_roots(Q: Quiver, bound: int) -> list[Vector]:
    """Real Schur roots with every entry at most ``bound``, sorted."""
    roots = []
    for v in subvectors((bound,) * Q.n):
        if any(v) and euler_form(Q, v, v) == 1 and root_class(Q, v) is RootClass.REAL_SCHUR:
            roots.append(v)
    return roots

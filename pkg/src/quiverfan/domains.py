"""Domains of semi-invariants

    D(beta) = { alpha : <alpha, beta> = 0 and <alpha, beta'> <= 0 for all beta' -> beta }

as halfspace systems, the split of a weight vector into a dimension vector
minus a projective, and the decomposition of D(beta) into cones spanned by
quiver exceptional sets.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from quiverfan import exact
from quiverfan.cones import PolyCone, cone_contains
from quiverfan.errors import ConsistencyError, InvalidInputError
from quiverfan.homext import (
    HomExtPair,
    _dimension_vector,
    _embeds,
    generic_homext,
    is_real_schur_root,
    subvectors,
)
from quiverfan.quiver import Quiver, Vector, euler_form, support
from quiverfan.stability import ExceptionalCollection, _find_quiver_sequence, stable_search


@dataclass(frozen=True)
class WeightSplit:
    """``alpha = alpha_plus - sum(delta[i] * gamma_i)`` with disjoint supports."""

    alpha_plus: Vector
    delta: Vector


def decompose_weight_vector(Q: Quiver, alpha: Sequence[int]) -> WeightSplit:
    alpha = Q.vector(alpha)
    plus = [0] * Q.n
    delta = [0] * Q.n
    paths = Q.path_counts
    for i in Q.topo_order:
        t = alpha[i] + sum(delta[j] * paths[j][i] for j in range(Q.n) if j != i)
        if t >= 0:
            plus[i] = t
        else:
            delta[i] = -t
    return WeightSplit(tuple(plus), tuple(delta))


def recombine(Q: Quiver, split: WeightSplit) -> Vector:
    return tuple(
        split.alpha_plus[k] - sum(split.delta[i] * Q.path_counts[i][k] for i in range(Q.n))
        for k in range(Q.n)
    )


@dataclass(frozen=True)
class HalfspaceSystem:
    """Linear functionals (coefficient vectors) with ``f . alpha == 0`` for
    each equality and ``f . alpha <= 0`` for each inequality.
    ``sources[k]`` is the subvector behind ``inequalities[k]``."""

    equalities: tuple[Vector, ...]
    inequalities: tuple[Vector, ...]
    sources: tuple[Vector, ...] = ()

    def contains(self, point: Sequence[int]) -> bool:
        dot = lambda f: sum(a * b for a, b in zip(f, point))  # noqa: E731
        return all(dot(f) == 0 for f in self.equalities) and all(dot(f) <= 0 for f in self.inequalities)


def _functional(Q: Quiver, beta: Vector) -> Vector:
    """Coefficients ``c`` with ``c . alpha == <alpha, beta>``."""
    E = Q.euler_matrix
    return tuple(sum(E[i][j] * beta[j] for j in range(Q.n)) for i in range(Q.n))


def dbeta_inequalities(Q: Quiver, beta: Sequence[int]) -> HalfspaceSystem:
    b = _dimension_vector(Q, beta, "beta")
    if not any(b):
        return HalfspaceSystem((), ())
    sources = tuple(
        bp for bp in subvectors(b)
        if any(bp) and bp != b and _embeds(Q, bp, b)
    )
    return HalfspaceSystem(
        equalities=(_functional(Q, b),),
        inequalities=tuple(_functional(Q, bp) for bp in sources),
        sources=sources,
    )


def dbeta_contains(Q: Quiver, beta: Sequence[int], alpha: Sequence[int]) -> bool:
    alpha = Q.vector(alpha)
    return dbeta_inequalities(Q, beta).contains(alpha)


def dbeta_contains_by_split(Q: Quiver, beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """Membership through the weight split: ``supp(beta)`` misses
    ``supp(delta)`` and ``alpha_plus`` is perpendicular to ``beta``."""
    b = _dimension_vector(Q, beta, "beta")
    split = decompose_weight_vector(Q, alpha)
    if support(b) & support(split.delta):
        return False
    return generic_homext(Q, split.alpha_plus, b) == HomExtPair(0, 0)


@dataclass
class ConeDecomposition:
    beta: Vector
    sigma: Vector
    stable: list[Vector]
    collections: list[ExceptionalCollection]
    complete: bool
    caveats: list[str] = field(default_factory=list)

    def contains(self, Q: Quiver, alpha: Sequence[int]) -> bool:
        return any(cone_contains(PolyCone(tuple(c.vectors(Q))), alpha)[0] for c in self.collections)


def dbeta_weight(Q: Quiver, beta: Sequence[int]) -> Vector:
    """The weight ``i -> -<e_i, beta>``."""
    b = Q.vector(beta)
    return tuple(-euler_form(Q, Q.simple(i), b) for i in range(Q.n))


def dbeta_cone_decomposition(
    Q: Quiver, beta: Sequence[int], bound: int, include_all: bool = False
) -> ConeDecomposition:
    """Quiver exceptional sets built from the ``-<., beta>``-stable dimension
    vectors and the ``-gamma_i`` with ``i`` outside ``supp(beta)``; their
    cones cover ``D(beta)``.  Only maximal sets are returned unless
    ``include_all``; the empty set (cone = origin) survives only when the
    search found nothing else."""
    b = _dimension_vector(Q, beta, "beta")
    if not is_real_schur_root(Q, b):
        raise InvalidInputError(f"beta={b} is not a real Schur root")
    sigma = dbeta_weight(Q, b)
    search = stable_search(Q, sigma, bound)
    stable = search.roots
    free_vertices = [i for i in range(Q.n) if b[i] == 0]

    found: list[ExceptionalCollection] = []
    for k in range(len(stable) + 1):
        for roots in itertools.combinations(stable, k):
            ordered = quiver_exceptional_order(Q, roots)
            if ordered is None:
                continue
            allowed = [i for i in free_vertices if all(r[i] == 0 for r in roots)]
            for m in range(len(allowed) + 1):
                for negs in itertools.combinations(allowed, m):
                    coll = ExceptionalCollection(tuple(ordered), frozenset(negs))
                    if not exact.independent(coll.vectors(Q)):
                        raise ConsistencyError("exceptional set is linearly dependent", collection=coll)
                    found.append(coll)
    if not include_all:
        found = [c for c in found if not any(_strictly_inside(c, d) for d in found)]
    for c in found:
        if len(c.roots) + len(c.negatives) > Q.n - 1:
            raise ConsistencyError("exceptional set larger than |Q_0| - 1", collection=c)
    return ConeDecomposition(b, sigma, stable, found, search.complete, search.caveats)


def _strictly_inside(c: ExceptionalCollection, d: ExceptionalCollection) -> bool:
    return (set(c.roots) <= set(d.roots) and c.negatives <= d.negatives
            and (len(c.roots), len(c.negatives)) != (len(d.roots), len(d.negatives)))


def quiver_exceptional_order(Q: Quiver, roots: Sequence[Sequence[int]]) -> list[Vector] | None:
    """An ordering of ``roots`` forming a quiver exceptional sequence, if any."""
    return _find_quiver_sequence(Q, [Q.vector(r) for r in roots])


def is_quiver_exceptional_set(Q: Quiver, collection: ExceptionalCollection) -> bool:
    for r in collection.roots:
        if any(r[i] != 0 for i in collection.negatives):
            return False
    return quiver_exceptional_order(Q, collection.roots) is not None

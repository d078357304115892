"""Almost positive roots, compatibility, clusters, the finite-stability cone
and the comparison between domains of semi-invariants and cluster cones."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from quiverfan import exact
from quiverfan.cones import PolyCone, cone_contains
from quiverfan.domains import decompose_weight_vector, dbeta_inequalities
from quiverfan.errors import ConsistencyError, InvalidInputError, ResourceError
from quiverfan.homext import (
    _ext,
    canonical_decomposition,
    is_prehomogeneous,
    is_real_schur_root,
    real_schur_roots,
)
from quiverfan.quiver import Quiver, Vector, dynkin_positive_roots, euler_form, is_dynkin, support
from quiverfan.stability import ExceptionalCollection, ext_quiver, is_quiver_exceptional_sequence

DEFAULT_CLIQUE_BUDGET = 1_000_000


@dataclass(frozen=True, order=True)
class AlmostPositiveRoot:
    """A real Schur root, or ``-gamma_i`` when ``vertex`` is set."""

    root: Vector | None = None
    vertex: int | None = None

    def __post_init__(self):
        if (self.root is None) == (self.vertex is None):
            raise InvalidInputError("give exactly one of a root or a vertex")

    @classmethod
    def real(cls, root: Sequence[int]) -> "AlmostPositiveRoot":
        return cls(root=tuple(int(x) for x in root))

    @classmethod
    def negative(cls, vertex: int) -> "AlmostPositiveRoot":
        return cls(vertex=int(vertex))

    @property
    def is_negative(self) -> bool:
        return self.vertex is not None

    def vector(self, Q: Quiver) -> Vector:
        if self.vertex is not None:
            return tuple(-x for x in Q.path_counts[self.vertex])
        return self.root

    def sort_key(self) -> tuple:
        return (1, (self.vertex,)) if self.is_negative else (0, self.root)

    def label(self, Q: Quiver) -> str:
        if self.is_negative:
            return f"-gamma_{Q.vertices[self.vertex]}"
        return "(" + ",".join(map(str, self.root)) + ")"

    def validate(self, Q: Quiver) -> None:
        if self.is_negative:
            if not 0 <= self.vertex < Q.n:
                raise InvalidInputError(f"vertex index {self.vertex} out of range")
        elif len(self.root) != Q.n or not is_real_schur_root(Q, self.root):
            raise InvalidInputError(f"{self.root} is not a real Schur root")


def compatibility_degree(Q: Quiver, x: AlmostPositiveRoot, y: AlmostPositiveRoot, check: bool = True) -> int:
    if check:
        x.validate(Q)
        y.validate(Q)
    if not x.is_negative and not y.is_negative:
        return _ext(Q, x.root, y.root) + _ext(Q, y.root, x.root)
    if x.is_negative and y.is_negative:
        return 0
    real, neg = (x, y) if y.is_negative else (y, x)
    return real.root[neg.vertex]


@dataclass(frozen=True)
class CompatibleSet:
    members: tuple[AlmostPositiveRoot, ...]
    maximal: bool = False

    def vectors(self, Q: Quiver) -> list[Vector]:
        return [m.vector(Q) for m in self.members]

    def cone(self, Q: Quiver) -> PolyCone:
        return PolyCone(tuple(self.vectors(Q)))

    def labels(self, Q: Quiver) -> list[str]:
        return [m.label(Q) for m in self.members]

    def to_dict(self, Q: Quiver) -> dict:
        return {"members": self.labels(Q), "vectors": [list(v) for v in self.vectors(Q)], "maximal": self.maximal}


def is_compatible(Q: Quiver, members: Iterable[AlmostPositiveRoot]) -> bool:
    members = list(members)
    if any(compatibility_degree(Q, x, y) for x, y in itertools.combinations(members, 2)):
        return False
    return exact.independent([m.vector(Q) for m in members])


def ground_set(Q: Quiver, root_bound: int) -> list[AlmostPositiveRoot]:
    reals = [AlmostPositiveRoot.real(r) for r in real_schur_roots(Q, root_bound)]
    negs = [AlmostPositiveRoot.negative(i) for i in range(Q.n)]
    return reals + negs


def ground_set_is_complete(Q: Quiver, root_bound: int) -> bool:
    """Whether every real Schur root is within ``root_bound`` (Dynkin only)."""
    if not is_dynkin(Q):
        return False
    return all(max(r) <= root_bound for r in dynkin_positive_roots(Q))


@dataclass
class CompatibleSetEnumeration:
    ground: list[AlmostPositiveRoot]
    sets: list[CompatibleSet]
    complete: bool

    @property
    def clusters(self) -> list[CompatibleSet]:
        return [s for s in self.sets if s.maximal]

    @property
    def caveats(self) -> list[str]:
        return [] if self.complete else ["bounded-search"]


def enumerate_compatible_sets(
    Q: Quiver, root_bound: int, size_bound: int, budget: int = DEFAULT_CLIQUE_BUDGET
) -> CompatibleSetEnumeration:
    """All nonempty compatible subsets of the ground set with at most
    ``size_bound`` members; ``maximal`` marks sets that no ground element
    extends (clusters, relative to the ground set)."""
    if root_bound < 1 or size_bound < 1:
        raise InvalidInputError("root_bound and size_bound must be positive")
    ground = ground_set(Q, root_bound)
    vecs = [g.vector(Q) for g in ground]
    m = len(ground)
    compatible = [[False] * m for _ in range(m)]
    for i, j in itertools.combinations(range(m), 2):
        ok = compatibility_degree(Q, ground[i], ground[j], check=False) == 0
        compatible[i][j] = compatible[j][i] = ok

    found: list[tuple[int, ...]] = []
    extendable: set[tuple[int, ...]] = set()
    visited = 0

    def grow(clique: tuple[int, ...], candidates: list[int]):
        nonlocal visited
        for pos, k in enumerate(candidates):
            new = clique + (k,)
            if not exact.independent([vecs[i] for i in new]):
                continue
            visited += 1
            if visited > budget:
                raise ResourceError(f"compatible-set enumeration exceeded {budget} sets")
            found.append(new)
            if len(new) < size_bound:
                grow(new, [c for c in candidates[pos + 1:] if compatible[k][c]])

    grow((), list(range(m)))
    members = set(found)
    for s in found:
        # a set is extendable when adding one more compatible ground element keeps independence
        for k in range(m):
            if k in s or not all(compatible[k][i] for i in s):
                continue
            bigger = tuple(sorted(s + (k,)))
            if bigger in members or exact.independent([vecs[i] for i in bigger]):
                extendable.add(s)
                break

    sets = [
        CompatibleSet(tuple(sorted((ground[i] for i in s), key=AlmostPositiveRoot.sort_key)), s not in extendable)
        for s in found
    ]
    sets.sort(key=lambda c: (len(c.members), [m.sort_key() for m in c.members]))
    return CompatibleSetEnumeration(ground, sets, ground_set_is_complete(Q, root_bound))


@dataclass
class FiniteStabilityResult:
    alpha: Vector
    alpha_plus: Vector
    delta: Vector
    member: bool
    effective: bool
    witness: CompatibleSet | None
    coefficients: list[Fraction] | None = None

    def to_dict(self, Q: Quiver) -> dict:
        return {
            "alpha": list(self.alpha),
            "alpha_plus": list(self.alpha_plus),
            "delta": list(self.delta),
            "member": self.member,
            "effective": self.effective,
            "witness": None if self.witness is None else self.witness.to_dict(Q),
            "coefficients": None if self.coefficients is None else [str(c) for c in self.coefficients],
        }


def in_finite_stability_cone(Q: Quiver, alpha: Sequence[int]) -> FiniteStabilityResult:
    """Decide whether the weight ``<alpha, .>`` lies in the finite-stability
    cone, through pre-homogeneity of the dimension-vector part of ``alpha``."""
    a = Q.vector(alpha)
    split = decompose_weight_vector(Q, a)
    plus, delta = split.alpha_plus, split.delta
    if not is_prehomogeneous(Q, plus):
        return FiniteStabilityResult(a, plus, delta, False, False, None)
    summands = canonical_decomposition(Q, plus) if any(plus) else []
    members = [AlmostPositiveRoot.real(r) for r, _ in summands]
    members += [AlmostPositiveRoot.negative(i) for i in sorted(support(delta))]
    witness = CompatibleSet(tuple(members))
    if not is_compatible(Q, members):
        raise ConsistencyError("finite-stability witness is not compatible", alpha=a, witness=witness)
    inside, coeffs = cone_contains(witness.cone(Q), a)
    if not inside:
        raise ConsistencyError("alpha is outside the cone of its witness", alpha=a, witness=witness)
    effective = len(members) < Q.n
    return FiniteStabilityResult(a, plus, delta, True, effective, witness, coeffs)


def refine_exceptional_cone(Q: Quiver, collection: ExceptionalCollection, eta: Sequence[int]) -> CompatibleSet:
    """The compatible set whose cone carries ``I(eta) = sum(eta[k] * roots[k])``,
    for a quiver exceptional set whose Ext-quiver is Dynkin."""
    roots = list(collection.roots)
    eta = tuple(int(x) for x in eta)
    if len(eta) != len(roots):
        raise InvalidInputError(f"eta has {len(eta)} entries for {len(roots)} roots")
    if any(x < 0 for x in eta):
        raise InvalidInputError("eta must be a dimension vector")
    if not is_quiver_exceptional_sequence(Q, roots):
        raise InvalidInputError("roots are not a quiver exceptional sequence in the given order")
    for i in collection.negatives:
        if any(r[i] for r in roots):
            raise InvalidInputError(f"a root is nonzero at negative vertex {Q.vertices[i]}")
    qe = ext_quiver(Q, roots)
    if not is_dynkin(qe):
        raise InvalidInputError("Ext-quiver is not Dynkin: the exceptional set is not representation-finite")

    def image(v: Sequence[int]) -> Vector:
        return tuple(sum(c * r[k] for c, r in zip(v, roots)) for k in range(Q.n))

    summands = canonical_decomposition(qe, eta) if any(eta) else []
    members = []
    for s, _ in summands:
        img = image(s)
        if not is_real_schur_root(Q, img):
            raise ConsistencyError("image of a canonical summand is not a real Schur root", summand=s, image=img)
        members.append(AlmostPositiveRoot.real(img))
    members += [AlmostPositiveRoot.negative(i) for i in sorted(collection.negatives)]
    result = CompatibleSet(tuple(members))
    if not is_compatible(Q, members):
        raise ConsistencyError("refined set is not compatible", members=members)
    if not cone_contains(result.cone(Q), image(eta))[0]:
        raise ConsistencyError("I(eta) is outside the refined cone", eta=eta)
    return result


@dataclass
class DomainClusterReport:
    root_bound: int
    box: int
    points: int
    agree: bool
    domains_only: list[Vector]
    cones_only: list[Vector]
    witness: Vector | None
    witness_euler: int | None
    complete: bool
    caveats: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "root_bound": self.root_bound,
            "box": self.box,
            "points": self.points,
            "agree": self.agree,
            "domains_only": [list(p) for p in self.domains_only],
            "cones_only": [list(p) for p in self.cones_only],
            "witness": None if self.witness is None else list(self.witness),
            "witness_euler": self.witness_euler,
            "complete": self.complete,
        }


def check_domains_vs_clusters(Q: Quiver, root_bound: int, box: int) -> DomainClusterReport:
    """Compare, on the integer box ``[-box, box]^n``, the union of the domains
    ``D(beta)`` over real Schur roots within ``root_bound`` against the union
    of cones of compatible sets of size at most ``n - 1``."""
    if not Q.is_connected():
        raise InvalidInputError("quiver must be connected")
    if box < 0:
        raise InvalidInputError("box must be non-negative")
    if (2 * box + 1) ** Q.n > 5_000_000:
        raise ResourceError("box too large")
    systems = [dbeta_inequalities(Q, b) for b in real_schur_roots(Q, root_bound)]
    enum = enumerate_compatible_sets(Q, root_bound, max(Q.n - 1, 1))
    cones = [c.cone(Q) for c in enum.sets if len(c.members) <= Q.n - 1]

    domains_only: list[Vector] = []
    cones_only: list[Vector] = []
    points = 0
    for a in itertools.product(range(-box, box + 1), repeat=Q.n):
        points += 1
        in_domain = any(s.contains(a) for s in systems)
        in_cone = not any(a) or any(cone_contains(c, a)[0] for c in cones)
        if in_domain and not in_cone:
            domains_only.append(a)
        elif in_cone and not in_domain:
            cones_only.append(a)
    witness = None
    if domains_only:
        # simplest witness: smallest l1 norm, then lexicographic
        witness = min(domains_only, key=lambda p: (sum(map(abs, p)), p))
    return DomainClusterReport(
        root_bound=root_bound,
        box=box,
        points=points,
        agree=not domains_only and not cones_only,
        domains_only=domains_only,
        cones_only=cones_only,
        witness=witness,
        witness_euler=None if witness is None else euler_form(Q, witness, witness),
        complete=enum.complete,
        caveats=enum.caveats,
    )

"""Acyclic quivers, integer vectors and the Euler form.

Vectors are plain tuples of ints in the quiver's declared vertex order.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from quiverfan.errors import CycleError, InvalidInputError, ParseError, UnknownVertexError

Vector = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Quiver:
    """A finite quiver without oriented cycles.

    ``arrows`` maps ``(tail_index, head_index)`` to the number of parallel arrows.
    Instances are immutable; the ``memo`` table is a private cache used by the
    hom/ext recursion and never affects equality.
    """

    vertices: tuple[str, ...]
    arrows: dict[tuple[int, int], int]
    topo_order: tuple[int, ...] = field(init=False)
    euler_matrix: tuple[Vector, ...] = field(init=False)
    path_counts: tuple[Vector, ...] = field(init=False)
    memo: dict = field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise InvalidInputError(f"duplicate vertex identifiers in {self.vertices}")
        for (t, h), m in self.arrows.items():
            if not (0 <= t < n and 0 <= h < n) or m <= 0:
                raise InvalidInputError(f"bad arrow entry {(t, h)}: {m}")
        order = _topological_order(n, self.arrows)
        if order is None:
            raise CycleError("quiver has an oriented cycle")
        object.__setattr__(self, "topo_order", order)

        euler = [[int(i == j) for j in range(n)] for i in range(n)]
        for (t, h), m in self.arrows.items():
            euler[t][h] -= m
        object.__setattr__(self, "euler_matrix", tuple(tuple(r) for r in euler))

        # paths[i][j] = number of directed paths i -> j, trivial path included
        paths = [[0] * n for _ in range(n)]
        out = self.out_arrows
        for i in reversed(order):
            paths[i][i] = 1
            for h, m in out[i]:
                for j in range(n):
                    paths[i][j] += m * paths[h][j]
        object.__setattr__(self, "path_counts", tuple(tuple(r) for r in paths))
        object.__setattr__(self, "memo", {})

    @classmethod
    def from_arrows(cls, vertices: Sequence[str], arrows: Iterable[tuple[str, str]]) -> "Quiver":
        vertices = tuple(str(v) for v in vertices)
        index = {v: k for k, v in enumerate(vertices)}
        counts: Counter = Counter()
        for tail, head in arrows:
            tail, head = str(tail), str(head)
            for v in (tail, head):
                if v not in index:
                    raise UnknownVertexError(f"arrow endpoint {v!r} is not a declared vertex")
            counts[index[tail], index[head]] += 1
        return cls(vertices, dict(sorted(counts.items())))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def out_arrows(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in self.vertices]
        for (t, h), m in self.arrows.items():
            out[t].append((h, m))
        return out

    @property
    def in_arrows(self) -> list[list[tuple[int, int]]]:
        inc: list[list[tuple[int, int]]] = [[] for _ in self.vertices]
        for (t, h), m in self.arrows.items():
            inc[h].append((t, m))
        return inc

    def arrow_list(self) -> list[tuple[int, int]]:
        """One ``(tail, head)`` entry per arrow, parallel arrows repeated."""
        return [(t, h) for (t, h), m in self.arrows.items() for _ in range(m)]

    def index(self, vertex) -> int:
        try:
            return self.vertices.index(str(vertex))
        except ValueError:
            raise UnknownVertexError(f"unknown vertex {vertex!r}") from None

    def vector(self, values: Iterable[int]) -> Vector:
        v = tuple(int(x) for x in values)
        if len(v) != self.n:
            raise InvalidInputError(f"expected {self.n} entries, got {len(v)}")
        return v

    def simple(self, i: int) -> Vector:
        return tuple(int(j == i) for j in range(self.n))

    def zero(self) -> Vector:
        return (0,) * self.n

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        nbrs: dict[int, set[int]] = {i: set() for i in range(self.n)}
        for t, h in self.arrows:
            nbrs[t].add(h)
            nbrs[h].add(t)
        seen, stack = {0}, [0]
        while stack:
            for j in nbrs[stack.pop()] - seen:
                seen.add(j)
                stack.append(j)
        return len(seen) == self.n

    def full_subquiver(self, support: Iterable[int]) -> "Quiver":
        keep = sorted(set(support))
        pos = {v: k for k, v in enumerate(keep)}
        arrows = {(pos[t], pos[h]): m for (t, h), m in self.arrows.items() if t in pos and h in pos}
        return Quiver(tuple(self.vertices[i] for i in keep), arrows)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [[self.vertices[t], self.vertices[h]] for t, h in self.arrow_list()],
        }

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(self.arrows.items()))))


def _topological_order(n: int, arrows: dict[tuple[int, int], int]) -> tuple[int, ...] | None:
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for t, h in arrows:
        indeg[h] += 1
        out[t].append(h)
    ready = [i for i in range(n) if indeg[i] == 0]
    order = []
    while ready:
        # smallest declared index first keeps the order deterministic
        ready.sort(reverse=True)
        i = ready.pop()
        order.append(i)
        for h in out[i]:
            indeg[h] -= 1
            if indeg[h] == 0:
                ready.append(h)
    return tuple(order) if len(order) == n else None


def parse_quiver(text: str) -> Quiver:
    """Build a quiver from quiver-file text.

    The file is a JSON object with a ``vertices`` list and an ``arrows`` list of
    ``[tail, head]`` pairs; a repeated pair is a parallel arrow.
    """
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"quiver file is not valid JSON: {exc}") from None
    if not isinstance(record, dict) or "vertices" not in record:
        raise ParseError("quiver file must be an object with a 'vertices' list")
    vertices = record["vertices"]
    arrows = record.get("arrows", [])
    if not isinstance(vertices, list) or not isinstance(arrows, list):
        raise ParseError("'vertices' and 'arrows' must be lists")
    pairs = []
    for a in arrows:
        if not isinstance(a, (list, tuple)) or len(a) != 2:
            raise ParseError(f"arrow {a!r} is not a [tail, head] pair")
        pairs.append((a[0], a[1]))
    return Quiver.from_arrows(vertices, pairs)


def _check(Q: Quiver, *vectors: Sequence[int]) -> None:
    for v in vectors:
        if len(v) != Q.n:
            raise InvalidInputError(f"vector {tuple(v)} does not match {Q.n} vertices")


def euler_form(Q: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    _check(Q, alpha, beta)
    total = sum(a * b for a, b in zip(alpha, beta))
    for (t, h), m in Q.arrows.items():
        total -= m * alpha[t] * beta[h]
    return total


def projective_root(Q: Quiver, vertex) -> Vector:
    """Dimension vector of the indecomposable projective at ``vertex``:
    entry ``j`` counts the directed paths from ``vertex`` to ``j``."""
    return Q.path_counts[Q.index(vertex)]


def projective_roots(Q: Quiver) -> list[Vector]:
    return list(Q.path_counts)


def weight_map(Q: Quiver, alpha: Sequence[int]) -> Vector:
    """The weight ``j -> <alpha, e_j>``."""
    _check(Q, alpha)
    sigma = list(alpha)
    for (t, h), m in Q.arrows.items():
        sigma[h] -= m * alpha[t]
    return tuple(sigma)


def inverse_weight_map(Q: Quiver, sigma: Sequence[int]) -> Vector:
    """The unique integer vector ``alpha`` with ``weight_map(alpha) == sigma``."""
    _check(Q, sigma)
    alpha = [0] * Q.n
    incoming = Q.in_arrows
    for j in Q.topo_order:
        alpha[j] = sigma[j] + sum(m * alpha[t] for t, m in incoming[j])
    return tuple(alpha)


def pairing(sigma: Sequence[int], beta: Sequence[int]) -> int:
    """``sigma(beta)``: a weight evaluated on a dimension vector."""
    return sum(s * b for s, b in zip(sigma, beta))


def support(v: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(v) if x != 0)


def add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: int, v: Sequence[int]) -> Vector:
    return tuple(c * x for x in v)


def is_dimension_vector(v: Sequence[int]) -> bool:
    return all(x >= 0 for x in v)


def leq(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def tits_matrix(Q: Quiver) -> list[list[int]]:
    """Symmetrized Euler form ``<a,b> + <b,a>``."""
    E = Q.euler_matrix
    return [[E[i][j] + E[j][i] for j in range(Q.n)] for i in range(Q.n)]


def is_dynkin(Q: Quiver) -> bool:
    """Every connected component is of type A, D or E (positive definite Tits form)."""
    from quiverfan.exact import is_positive_definite

    return Q.n == 0 or is_positive_definite(tits_matrix(Q))


def dynkin_positive_roots(Q: Quiver) -> list[Vector]:
    """Positive roots of a Dynkin quiver, generated from the simples by reflections."""
    if not is_dynkin(Q):
        raise InvalidInputError("quiver is not Dynkin: its positive roots are infinite")
    T = tits_matrix(Q)
    seen = {Q.simple(i) for i in range(Q.n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for root in frontier:
            for i in range(Q.n):
                c = sum(T[i][j] * root[j] for j in range(Q.n))
                image = tuple(x - c if j == i else x for j, x in enumerate(root))
                if all(x >= 0 for x in image) and any(image) and image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return sorted(seen)

"""Simplicial rational cones with exact membership."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from quiverfan import exact
from quiverfan.errors import InvalidInputError
from quiverfan.quiver import Vector


@dataclass(frozen=True)
class PolyCone:
    generators: tuple[Vector, ...]
    _pivots: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _inverse: tuple[tuple[Fraction, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        if len({len(g) for g in gens}) > 1:
            raise InvalidInputError("cone generators have different lengths")
        _, pivots = exact._rref(gens)
        if len(pivots) != len(gens):
            raise InvalidInputError(f"cone generators {gens} are linearly dependent")
        # the square block of generator coordinates at the pivot positions is invertible
        square = [[g[i] for g in gens] for i in pivots]
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_pivots", tuple(pivots))
        object.__setattr__(self, "_inverse", tuple(tuple(r) for r in _inverse(square)))

    @property
    def dim(self) -> int:
        return len(self.generators)

    def coefficients(self, point: Sequence[int]) -> list[Fraction] | None:
        if self.generators and len(point) != len(self.generators[0]):
            raise InvalidInputError("point and generators have different lengths")
        if not self.generators:
            return [] if not any(point) else None
        rhs = [point[i] for i in self._pivots]
        coeffs = [sum(m * x for m, x in zip(row, rhs)) for row in self._inverse]
        for i, x in enumerate(point):
            if sum(c * g[i] for c, g in zip(coeffs, self.generators)) != x:
                return None
        return coeffs

    def contains(self, point: Sequence[int]) -> bool:
        return cone_contains(self, point)[0]


def _inverse(square: list[list[int]]) -> list[list[Fraction]]:
    k = len(square)
    augmented = [list(row) + [int(i == j) for j in range(k)] for i, row in enumerate(square)]
    reduced, _ = exact._rref(augmented)
    return [row[k:] for row in reduced]


def cone_contains(cone: PolyCone, point: Sequence[int]) -> tuple[bool, list[Fraction] | None]:
    """Whether ``point`` is a non-negative rational combination of the
    generators, with the (unique) coefficients when it lies in their span."""
    coeffs = cone.coefficients(tuple(point))
    if coeffs is None:
        return False, None
    return all(c >= 0 for c in coeffs), coeffs


def in_cone(generators: Sequence[Sequence[int]], point: Sequence[int]) -> bool:
    return cone_contains(PolyCone(tuple(tuple(g) for g in generators)), point)[0]

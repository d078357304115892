"""Named quivers used throughout the tests and the command line."""
from __future__ import annotations

from quiverfan.quiver import Quiver


def linear_a(n: int) -> Quiver:
    """Equioriented A_n: 1 -> 2 -> ... -> n."""
    names = [str(i) for i in range(1, n + 1)]
    return Quiver.from_arrows(names, zip(names, names[1:]))


def kronecker(m: int = 2) -> Quiver:
    """Generalized Kronecker quiver with ``m`` arrows 1 -> 2."""
    return Quiver.from_arrows(["1", "2"], [("1", "2")] * m)


def triangle() -> Quiver:
    """The acyclic triangle 1 -> 2, 2 -> 3, 1 -> 3 (Euclidean of type A~2)."""
    return Quiver.from_arrows(["1", "2", "3"], [("1", "2"), ("2", "3"), ("1", "3")])


def star_t434() -> Quiver:
    """Wild star T_{4,3,4} with centre ``a``.

    Arms: a -> b -> c -> d, e -> f -> a and a -> i -> h -> g.
    """
    return Quiver.from_arrows(
        list("abcdefghi"),
        [("a", "b"), ("b", "c"), ("c", "d"), ("f", "a"), ("e", "f"),
         ("a", "i"), ("i", "h"), ("h", "g")],
    )


NAMED = {
    "A1": lambda: linear_a(1),
    "A2": lambda: linear_a(2),
    "A3": lambda: linear_a(3),
    "A4": lambda: linear_a(4),
    "K2": lambda: kronecker(2),
    "K3": lambda: kronecker(3),
    "triangle": triangle,
    "T434": star_t434,
}

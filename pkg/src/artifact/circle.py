"""Arg-valued intervals on the unit circle and path classes of two points.

Angles are rational numbers of full turns.  An :class:`ArgInterval`
``(a, b)`` is the circle arc ``{exp(2 pi i t) : a < t < b}`` together with
the argument function ``t -> 2 pi t``; shifting both ends by an integer
gives the same arc with a different argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import floor

__all__ = [
    "ArgInterval",
    "PathClass",
    "contains",
    "overlaps",
    "anticlockwise_to",
    "relative_winding",
    "rotate",
    "hull",
    "braid_path",
    "compose",
    "identity_path",
    "same_point",
]


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, order=True)
class ArgInterval:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = _q(self.a), _q(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not 0 < b - a < 1:
            raise ValueError(f"need 0 < b - a < 1, got ({a}, {b})")

    @property
    def length(self) -> Fraction:
        return self.b - self.a

    @cached_property
    def midpoint(self) -> Fraction:
        return (self.a + self.b) / 2

    def holds(self, x) -> bool:
        """Whether the lifted point x lies in the interval (with this arg)."""
        return self.a < _q(x) < self.b

    def normalized(self) -> ArgInterval:
        """Same arc with ``a`` shifted into [0, 1); for display."""
        n = floor(self.a)
        return ArgInterval(self.a - n, self.b - n)

    def __str__(self):
        return f"({self.a}, {self.b})"


def contains(inner: ArgInterval, outer: ArgInterval) -> bool:
    """True iff ``inner`` is an arg-valued subinterval of ``outer``."""
    return outer.a <= inner.a and inner.b <= outer.b


def overlaps(i: ArgInterval, j: ArgInterval) -> bool:
    """Whether the underlying circle arcs intersect."""
    n = floor(i.a - j.a)
    for s in (n - 1, n, n + 1):
        if j.a + s < i.b and i.a < j.b + s:
            return True
    return False


def anticlockwise_to(i: ArgInterval, j: ArgInterval) -> bool:
    """True iff arg_J < arg_I < arg_J + 2 pi on all point pairs."""
    if overlaps(i, j):
        raise ValueError(f"intervals {i} and {j} overlap on the circle")
    return j.b <= i.a and i.b <= j.a + 1


def relative_winding(i: ArgInterval, j: ArgInterval) -> int:
    """The unique n such that ``rotate(i, -n)`` is anticlockwise to ``j``.

    n = 0 means i is anticlockwise to j, n = -1 means clockwise.
    """
    if overlaps(i, j):
        raise ValueError(f"intervals {i} and {j} overlap on the circle")
    n = floor(i.a - j.b)
    assert anticlockwise_to(rotate(i, -n), j)
    return n


def rotate(i: ArgInterval, t) -> ArgInterval:
    t = _q(t)
    return ArgInterval(i.a + t, i.b + t)


def hull(*intervals: ArgInterval) -> ArgInterval:
    """Smallest arg-valued interval containing all the given ones."""
    return ArgInterval(min(i.a for i in intervals), max(i.b for i in intervals))


def same_point(x, y) -> bool:
    """Whether two lifts describe the same point of the circle."""
    return (_q(x) - _q(y)).denominator == 1


@dataclass(frozen=True)
class PathClass:
    """Homotopy class of a path in the space of two distinct circle points.

    The class is determined by the lifts of both points at the start and
    the end of the path.
    """

    start: tuple
    end: tuple

    def __post_init__(self):
        start = tuple(_q(x) for x in self.start)
        end = tuple(_q(x) for x in self.end)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "end", end)
        if len(start) != 2 or len(end) != 2:
            raise ValueError("a path class records lifts of exactly two points")
        if same_point(*start) or same_point(*end):
            raise ValueError("the two marked points must be distinct")

    @property
    def displacement(self) -> tuple:
        return (self.end[0] - self.start[0], self.end[1] - self.start[1])


def identity_path(lifts) -> PathClass:
    return PathClass(tuple(lifts), tuple(lifts))


def braid_path(zi, zj) -> PathClass:
    """The half-turn clockwise move of the first point, the second fixed."""
    zi, zj = _q(zi), _q(zj)
    end = (zi - Fraction(1, 2), zj)
    if same_point(*end):
        raise ValueError(f"moving {zi} by -1/2 turn lands on the fixed point {zj}")
    return PathClass((zi, zj), end)


def compose(p: PathClass, q: PathClass) -> PathClass:
    """Run p, then q."""
    if p.end != q.start:
        raise ValueError(f"path ends at {p.end} but the next starts at {q.start}")
    return PathClass(p.start, q.end)

"""Virasoro minimal-model weight tables and Heisenberg sector data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import pairing
from .scalar import Cyc, exp_i_pi

__all__ = [
    "MinimalModelTable",
    "minimal_model",
    "kac_weight",
    "HeisenbergSector",
    "heisenberg_fusion",
    "heisenberg_braid_phase",
]


def kac_weight(m: int, r: int, s: int) -> Fraction:
    """h_{r,s} = (((m+1) r - m s)^2 - 1) / (4 m (m+1))."""
    return Fraction(((m + 1) * r - m * s) ** 2 - 1, 4 * m * (m + 1))


@dataclass(frozen=True)
class MinimalModelTable:
    m: int
    central_charge: Fraction
    weights: dict  # (r, s) -> h for every 1 <= r <= m-1, 1 <= s <= m
    labels: tuple  # one (r, s) per Kac orbit, the lexicographically smallest
    generating_set: tuple = ((1, 2), (2, 2))

    @property
    def twists(self) -> dict:
        return {rs: exp_i_pi(2 * h) for rs, h in self.weights.items()}

    def distinct_weights(self) -> list[Fraction]:
        return [self.weights[rs] for rs in self.labels]


def minimal_model(m: int) -> MinimalModelTable:
    if m < 2:
        raise ValueError("minimal models need m >= 2")
    c = 1 - Fraction(6, m * (m + 1))
    weights = {(r, s): kac_weight(m, r, s) for r in range(1, m) for s in range(1, m + 1)}
    labels = sorted({min((r, s), (m - r, m + 1 - s)) for r, s in weights})
    return MinimalModelTable(m, c, weights, tuple(labels))


@dataclass(frozen=True)
class HeisenbergSector:
    """A charge vector lambda in a space with a rational inner product."""

    gram: tuple
    vector: tuple

    def __post_init__(self):
        g = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        v = tuple(Fraction(x) for x in self.vector)
        if len(v) != len(g) or any(len(row) != len(g) for row in g):
            raise ValueError("charge vector and inner product have different dimensions")
        object.__setattr__(self, "gram", g)
        object.__setattr__(self, "vector", v)

    def pair(self, other: HeisenbergSector) -> Fraction:
        _same_space(self, other)
        return pairing(self.gram, self.vector, other.vector)

    @property
    def weight(self) -> Fraction:
        """Lowest L0 eigenvalue (lambda|lambda)/2."""
        return self.pair(self) / 2


def _same_space(x: HeisenbergSector, y: HeisenbergSector):
    if x.gram != y.gram:
        raise ValueError("sectors live in different Heisenberg spaces")


def heisenberg_fusion(x: HeisenbergSector, y: HeisenbergSector) -> HeisenbergSector:
    """The unique channel lambda + mu."""
    _same_space(x, y)
    return HeisenbergSector(x.gram, tuple(a + b for a, b in zip(x.vector, y.vector)))


def heisenberg_braid_phase(x: HeisenbergSector, y: HeisenbergSector) -> Cyc:
    """exp(i pi (lambda|mu))."""
    return exp_i_pi(x.pair(y))

"""Even lattices: discriminant group, section, epsilon cocycle, pointed category.

Vectors of the dual lattice are written in coordinates with respect to the
lattice basis, so ``(x|y) = x^T G y`` for the Gram matrix ``G`` and the dual
lattice is ``G^{-1} Z^n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import lcm

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp

from .fusion import FusionData, verify_all
from .scalar import Cyc, exp_i_pi

__all__ = [
    "LatticeError",
    "parse_gram",
    "check_gram",
    "smith_normal_form",
    "DiscriminantGroup",
    "discriminant_group",
    "epsilon",
    "pairing",
    "build_pointed_mtc",
    "group_label",
]


class LatticeError(ValueError):
    """The Gram matrix is not that of an even non-degenerate lattice."""


def parse_gram(text: str) -> list[list[int]]:
    """Parse ``"2 -1; -1 2"`` into integer rows."""
    rows = [r.split() for r in text.replace(",", " ").split(";") if r.strip()]
    if not rows:
        raise LatticeError("empty Gram matrix")
    try:
        return [[int(x) for x in r] for r in rows]
    except ValueError as exc:
        raise LatticeError(f"Gram entries must be integers: {exc}") from None


def check_gram(gram) -> tuple[tuple[int, ...], ...]:
    g = tuple(tuple(int(x) for x in row) for row in gram)
    n = len(g)
    if n == 0 or any(len(row) != n for row in g):
        raise LatticeError("Gram matrix must be square and nonempty")
    for i in range(n):
        for j in range(n):
            if g[i][j] != g[j][i]:
                raise LatticeError(f"Gram matrix is not symmetric at ({i},{j})")
        if g[i][i] % 2:
            raise LatticeError(f"diagonal entry {g[i][i]} at {i} is odd; the lattice must be even")
    if Matrix(g).det() == 0:
        raise LatticeError("Gram matrix is singular")
    return g


def smith_normal_form(M):
    """(U, D, V) with U M V = D, U and V unimodular, d1 | d2 | ... on the diagonal."""
    A = Matrix(M)
    D, U, V = smith_normal_decomp(A)
    # make the diagonal nonnegative by flipping rows of U
    for i in range(min(D.shape)):
        if D[i, i] < 0:
            D[i, :] = -D[i, :]
            U[i, :] = -U[i, :]
    assert U * A * V == D
    return _ints(U), _ints(D), _ints(V)


def _ints(M) -> list[list[int]]:
    return [[int(x) for x in M.row(i)] for i in range(M.rows)]


def _frac_vec(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(x.p), int(x.q)) for x in v)


def pairing(gram, x, y) -> Fraction:
    n = len(gram)
    return sum((Fraction(x[i]) * gram[i][j] * Fraction(y[j]) for i in range(n) for j in range(n)), Fraction(0))


def group_label(elem: tuple) -> str:
    if not elem:
        return "0"
    if len(elem) == 1:
        return str(elem[0])
    return "(" + ",".join(str(x) for x in elem) + ")"


@dataclass(frozen=True)
class DiscriminantGroup:
    """The finite group dual/lattice with a fixed section.

    Elements are tuples ``(x_1, ..., x_r)`` with ``0 <= x_i < d_i`` for the
    invariant factors ``d_1 | ... | d_r`` (all > 1).  The section sends an
    element to ``sum_i (x_i / d_i) v_i`` where the ``v_i`` are the columns of
    the Smith transform ``V`` belonging to those factors.
    """

    gram: tuple
    invariant_factors: tuple
    basis: tuple  # the v_i, lattice coordinates
    shift: dict = field(default_factory=dict, compare=False)

    @cached_property
    def elements(self) -> tuple:
        return tuple(product(*(range(d) for d in self.invariant_factors)))

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def add(self, x, y) -> tuple:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def neg(self, x) -> tuple:
        return tuple((-a) % d for a, d in zip(x, self.invariant_factors))

    @property
    def zero(self) -> tuple:
        return tuple(0 for _ in self.invariant_factors)

    def section(self, x) -> tuple:
        n = len(self.gram)
        out = [Fraction(0)] * n
        for a, d, v in zip(x, self.invariant_factors, self.basis):
            for i in range(n):
                out[i] += Fraction(a, d) * v[i]
        for i, s in enumerate(self.shift.get(tuple(x), ())):
            out[i] += s
        return tuple(out)

    def classify(self, vec) -> tuple:
        """The class [vec] of a dual-lattice vector (lattice coordinates)."""
        U, _, _ = smith_normal_form(self.gram)
        k = [sum(Fraction(self.gram[i][j]) * Fraction(vec[j]) for j in range(len(vec))) for i in range(len(vec))]
        if any(c.denominator != 1 for c in k):
            raise LatticeError(f"{vec} is not in the dual lattice")
        uk = [sum(U[i][j] * int(k[j]) for j in range(len(k))) for i in range(len(k))]
        offset = len(uk) - len(self.invariant_factors)
        return tuple(uk[offset + i] % d for i, d in enumerate(self.invariant_factors))

    def pair(self, x, y) -> Fraction:
        return pairing(self.gram, self.section(x), self.section(y))

    def q(self, x) -> Fraction:
        """(s(x)|s(x)) mod 2."""
        return self.pair(x, x) % 2

    def b(self, x, y) -> Fraction:
        """(s(x)|s(y)) mod 1."""
        return self.pair(x, y) % 1

    def label(self, x) -> str:
        return group_label(tuple(x))

    def with_shift(self, shift: dict) -> DiscriminantGroup:
        """The same group with section s(x) + shift[x] (integer lattice vectors)."""
        for x, v in shift.items():
            if any(Fraction(c).denominator != 1 for c in v):
                raise LatticeError("section shifts must be lattice vectors")
            if tuple(x) == self.zero and any(v):
                raise LatticeError("the section must send 0 to 0")
        return DiscriminantGroup(self.gram, self.invariant_factors, self.basis, dict(shift))


def discriminant_group(gram) -> DiscriminantGroup:
    g = check_gram(gram)
    U, D, V = smith_normal_form(g)
    n = len(g)
    factors, basis = [], []
    for i in range(n):
        d = D[i][i]
        if d > 1:
            factors.append(d)
            basis.append(tuple(V[r][i] for r in range(n)))
    return DiscriminantGroup(g, tuple(factors), tuple(basis))


def epsilon(gram, alpha, beta) -> Cyc:
    """Bilinear sign cocycle: eps(e_i, e_j) = (-1)^{(e_i|e_j)} for i > j, else 1."""
    n = len(gram)
    e = 0
    for i in range(n):
        for j in range(i):
            e += int(alpha[i]) * int(beta[j]) * gram[i][j]
    return Cyc.rational(-1 if e % 2 else 1)


def _defect(A: DiscriminantGroup, sec: dict, x, y) -> tuple:
    """s(x) + s(y) - s(x+y), a lattice vector in lattice coordinates."""
    z = sec[A.add(x, y)]
    return tuple(int(a + b - c) for a, b, c in zip(sec[x], sec[y], z))


def _eps_exponent(gram, alpha, beta) -> int:
    n = len(gram)
    return sum(alpha[i] * beta[j] * gram[i][j] for i in range(n) for j in range(i)) % 2


def _sign_correction(A: DiscriminantGroup, sec: dict, x, y, z) -> int:
    """Exponent (0 or 1, times i pi) of eps(d(x,y), d(x+y,z)) eps(d(y,z), d(x,y+z)).

    Without it the associator built from the section alone has pentagon
    defect (-1)^{(d(a,b)|d(c,d))}, which is nonzero whenever two defect
    vectors pair oddly.
    """
    g = A.gram
    xy, yz = A.add(x, y), A.add(y, z)
    return _eps_exponent(g, _defect(A, sec, x, y), _defect(A, sec, xy, z)) + _eps_exponent(
        g, _defect(A, sec, y, z), _defect(A, sec, x, yz)
    )


def build_pointed_mtc(gram, shift: dict | None = None, check: bool = True) -> FusionData:
    """The pointed braided category of an even lattice.

    Labels are the discriminant group; R(l, m) = exp(i pi (s(l)|s(m))),
    F(l, m, n) = exp(i pi (s(l) | s(m) + s(n) - s(m+n))), twist(l) =
    exp(i pi (s(l)|s(l))).  The result is validated before it is returned.
    """
    A = discriminant_group(gram)
    if shift:
        A = A.with_shift(shift)
    els = A.elements
    sec = {x: A.section(x) for x in els}
    P = {(x, y): pairing(A.gram, sec[x], sec[y]) for x in els for y in els}
    order = 2 * lcm(1, *(p.denominator for p in P.values()))
    lab = {x: A.label(x) for x in els}
    fusion, F, R, twist = set(), {}, {}, {}
    for x in els:
        twist[lab[x]] = exp_i_pi(P[(x, x)]).lift(order)
        for y in els:
            xy = A.add(x, y)
            fusion.add((lab[x], lab[y], lab[xy]))
            R[(lab[x], lab[y], lab[xy])] = exp_i_pi(P[(x, y)]).lift(order)
            for z in els:
                yz = A.add(y, z)
                expo = P[(x, y)] + P[(x, z)] - P[(x, yz)] + _sign_correction(A, sec, x, y, z)
                key = (lab[x], lab[y], lab[z], lab[A.add(xy, z)], lab[xy], lab[yz])
                F[key] = exp_i_pi(expo).lift(order)
    d = FusionData(
        labels=tuple(lab[x] for x in els),
        unit=lab[A.zero],
        dual={lab[x]: lab[A.neg(x)] for x in els},
        fusion=frozenset(fusion),
        F=F,
        R=R,
        twist=twist,
        cyclotomic_order=order,
    )
    if check:
        rep = verify_all(d)
        if not rep.passed:
            raise RuntimeError("lattice category failed its own validation:\n" + rep.render_text())
    return d

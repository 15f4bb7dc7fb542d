"""Localized endomorphisms and the statistics operator, pointed case.

An endomorphism of sector ``a`` localized in ``loc`` is represented by a
charge of sector ``a`` at a point of ``loc`` (the midpoint unless given), all
inside the reference interval I0 = (0, 1/2) turns.  The object rho_1 x rho_2
is the word L(a_1 @ x_1) L(a_2 @ x_2) on the vacuum, and rho_2 x rho_1 the
word in the other order.

Transport of a pair to standard position (rho_1 in I1, rho_2 in I2, I2
anticlockwise to I1, where the statistics operator is the identity) is the
phase ratio between the evaluated words at the two positions, times an
arbitrary phase per transporter.  Those arbitrary phases cancel, and so does
the choice of I1, I2; both facts are checked, not assumed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .catext import PointedModel, _left_exp
from .circle import ArgInterval, anticlockwise_to, contains
from .report import Check, Report
from .scalar import Cyc

__all__ = [
    "I0",
    "DhrEndo",
    "compose",
    "statistics_operator",
    "statistics_choices",
    "monodromy",
    "check_G_functor",
]

I0 = ArgInterval(Fraction(0), Fraction(1, 2))


@dataclass(frozen=True)
class DhrEndo:
    sector: object
    loc: ArgInterval
    ref: ArgInterval = I0
    at: Fraction = None

    def __post_init__(self):
        if not contains(self.loc, self.ref):
            raise ValueError(f"localization {self.loc} is not inside {self.ref}")
        at = self.loc.midpoint if self.at is None else Fraction(self.at)
        if not self.loc.holds(at):
            raise ValueError(f"point {at} is not inside {self.loc}")
        object.__setattr__(self, "at", at)


def _same_ref(r1: DhrEndo, r2: DhrEndo):
    if r1.ref != r2.ref:
        raise ValueError("endomorphisms have different reference intervals")


def compose(M: PointedModel, r1: DhrEndo, r2: DhrEndo) -> DhrEndo:
    """rho_1 x rho_2 = rho_2 o rho_1: sectors add, localized in the hull of both."""
    _same_ref(r1, r2)
    s = M.labels[M.m[M.idx(r1.sector)][M.idx(r2.sector)]]
    loc = ArgInterval(min(r1.loc.a, r2.loc.a), max(r1.loc.b, r2.loc.b))
    return DhrEndo(s, loc, r1.ref)


def _pair(M: PointedModel, a, x, b, y) -> int:
    """Phase exponent of L(a @ x) L(b @ y) on the vacuum."""
    return _left_exp(M, [(M.idx(a), x), (M.idx(b), y)])[0]


def _standard_choice(rng: random.Random, ref: ArgInterval):
    """Disjoint I1, I2 inside ref with I2 anticlockwise to I1, and points in them."""
    den = 960
    span = ref.b - ref.a
    cuts = sorted(rng.sample(range(1, den), 4))
    a1, b1, a2, b2 = (ref.a + span * Fraction(c, den) for c in cuts)
    I1, I2 = ArgInterval(a1, b1), ArgInterval(a2, b2)
    assert anticlockwise_to(I2, I1)
    return I1, I2, I1.midpoint, I2.midpoint


def statistics_choices(M: PointedModel, r1: DhrEndo, r2: DhrEndo, choices: int = 10, seed: int = 0):
    """Statistics operator exponents from independent transport choices.

    Returns a list of (exponent, standard_ok) per choice, where standard_ok
    records that the braiding maps the transported rho_1 x rho_2 onto the
    transported rho_2 x rho_1 (the statistics operator is the identity there).
    """
    _same_ref(r1, r2)
    rng = random.Random(seed)
    a, b = M.idx(r1.sector), M.idx(r2.sector)
    A = _pair(M, r1.sector, r1.at, r2.sector, r2.at)
    D = _pair(M, r2.sector, r2.at, r1.sector, r1.at)
    out = []
    for _ in range(choices):
        I1, I2, y1, y2 = _standard_choice(rng, r1.ref)
        B = _pair(M, r1.sector, y1, r2.sector, y2)
        C = _pair(M, r2.sector, y2, r1.sector, y1)
        standard_ok = (M.r[a][b] + B - C) % M.N == 0
        tau1, tau2 = rng.randrange(M.N), rng.randrange(M.N)
        t12 = (B - A) + tau1 + tau2  # transport of rho_1 x rho_2
        t21 = (C - D) + tau1 + tau2  # transport of rho_2 x rho_1
        # epsilon = t21^* . id . t12, the identity sitting at the standard position
        out.append(((t21 - t12) % M.N, standard_ok))
    return out


def statistics_operator(M: PointedModel, r1: DhrEndo, r2: DhrEndo, choices: int = 1, seed: int = 0) -> Cyc:
    vals = statistics_choices(M, r1, r2, choices, seed)
    exps = {e for e, _ in vals}
    if len(exps) != 1 or not all(ok for _, ok in vals):
        raise ArithmeticError("statistics operator depends on the transport choice")
    return M.phase(exps.pop())


def monodromy(M: PointedModel, r1: DhrEndo, r2: DhrEndo) -> Cyc:
    return statistics_operator(M, r2, r1) * statistics_operator(M, r1, r2)


PROOF_CONFIGS = (
    # (loc of rho_i, loc of rho_j): the second anticlockwise to the first
    (ArgInterval(Fraction(1, 16), Fraction(3, 16)), ArgInterval(Fraction(5, 16), Fraction(7, 16))),
    (ArgInterval(Fraction(1, 48), Fraction(1, 24)), ArgInterval(Fraction(1, 12), Fraction(23, 48))),
    (ArgInterval(Fraction(1, 8), Fraction(1, 4)), ArgInterval(Fraction(1, 4), Fraction(3, 8))),
)

OTHER_CONFIGS = (
    # same interval, and the reversed order
    (ArgInterval(Fraction(1, 8), Fraction(3, 8)), ArgInterval(Fraction(1, 8), Fraction(3, 8))),
    (ArgInterval(Fraction(5, 16), Fraction(7, 16)), ArgInterval(Fraction(1, 16), Fraction(3, 16))),
)


def _braiding_image(M: PointedModel, ri: DhrEndo, rj: DhrEndo) -> int:
    """Phase of the image of B_{i,j}: braiding applied to rho_i x rho_j against rho_j x rho_i."""
    a, b = M.idx(ri.sector), M.idx(rj.sector)
    A = _pair(M, ri.sector, ri.at, rj.sector, rj.at)
    D = _pair(M, rj.sector, rj.at, ri.sector, ri.at)
    return (M.r[a][b] + A - D) % M.N


def check_G_functor(M: PointedModel, choices: int = 10, seed: int = 0) -> Report:
    """The braiding of the fusion data maps to the statistics operator, for every pair."""
    rep = Report("braiding vs statistics operator")
    g = rep.add(Check("G(B) = epsilon"))
    ind = rep.add(Check("transport choice independence"))
    idc = rep.add(Check("epsilon = id in the standard position"))
    mon = rep.add(Check("monodromy = braiding monodromy"))
    for ia, a in enumerate(M.labels):
        for ib, b in enumerate(M.labels):
            for k, (Ii, Ij) in enumerate(PROOF_CONFIGS + OTHER_CONFIGS):
                ri, rj = DhrEndo(a, Ii), DhrEndo(b, Ij)
                vals = statistics_choices(M, ri, rj, choices, seed + 7919 * k + 31 * ia + ib)
                ind.tested += 1
                exps = {e for e, _ in vals}
                if len(exps) != 1 or not all(ok for _, ok in vals):
                    ind.fail((a, b, k), note=f"values {sorted(exps)}")
                    continue
                eps = exps.pop()
                g.tested += 1
                img = _braiding_image(M, ri, rj)
                if img != eps:
                    g.fail((a, b, k), M.phase(img), M.phase(eps))
                if k < len(PROOF_CONFIGS):
                    idc.tested += 1
                    if eps != 0:
                        idc.fail((a, b, k), M.phase(eps), 1)
            ri, rj = DhrEndo(a, PROOF_CONFIGS[0][0]), DhrEndo(b, PROOF_CONFIGS[0][1])
            mon.tested += 1
            got = monodromy(M, ri, rj)
            want = M.phase(M.monodromy(ia, ib))
            if got != want:
                mon.fail((a, b), got, want)
    return rep

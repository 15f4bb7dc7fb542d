"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as a coefficient vector in the power basis
1, z, ..., z^(d-1) with d = phi(N), reduced modulo the N-th cyclotomic
polynomial, so equality is equality of coefficient tuples.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from sympy import Poly, cyclotomic_poly, symbols

__all__ = ["Cyc", "root_of_unity", "exp_i_pi", "as_cyc", "lcm"]

_x = symbols("x")


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def _field(n: int):
    """Degree and the table of z^k mod Phi_n for 0 <= k < n."""
    phi = [int(c) for c in reversed(Poly(cyclotomic_poly(n, _x), _x).all_coeffs())]
    d = len(phi) - 1
    table = []
    cur = [0] * d
    cur[0] = 1
    for _ in range(n):
        table.append(tuple(cur))
        # multiply by z and fold z^d = -(phi_0 + ... + phi_{d-1} z^{d-1})
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return d, tuple(table)


@lru_cache(maxsize=None)
def _root_index(n: int) -> dict:
    """Map from reduced coefficient tuple of z^k to k."""
    _, table = _field(n)
    return {_trim(tuple(Fraction(c) for c in row)): k for k, row in enumerate(table)}


def _trim(coeffs: tuple) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


def _reduce(n: int, raw) -> tuple:
    """Reduce an arbitrary-length coefficient list (index = power of z)."""
    d, table = _field(n)
    if len(raw) <= d:
        return _trim(tuple(Fraction(c) for c in raw))
    out = [Fraction(0)] * d
    for k, c in enumerate(raw):
        if not c:
            continue
        row = table[k % n]
        for i, r in enumerate(row):
            if r:
                out[i] += c * r
    return _trim(tuple(out))


class Cyc:
    """An element of Q(zeta_N), immutable and hashable.

    Elements of different orders are combined after lifting both to the
    lcm of the orders. Equality is exact; ``approx_complex`` is for display.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        self.order = order
        self.coeffs = _reduce(order, coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, order: int, coeffs: tuple) -> Cyc:
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    # construction helpers
    @classmethod
    def rational(cls, q, order: int = 1) -> Cyc:
        return cls(order, (Fraction(q),))

    @classmethod
    def zero(cls, order: int = 1) -> Cyc:
        return cls._raw(order, ())

    @classmethod
    def one(cls, order: int = 1) -> Cyc:
        return cls._raw(order, (Fraction(1),))

    # order handling
    def lift(self, m: int) -> Cyc:
        """Rewrite in Q(zeta_m); m must be a multiple of the current order."""
        if m == self.order:
            return self
        if m % self.order:
            raise ValueError(f"cannot lift order {self.order} to {m}")
        step = m // self.order
        raw = [Fraction(0)] * (step * max(len(self.coeffs) - 1, 0) + 1)
        for k, c in enumerate(self.coeffs):
            raw[k * step] = c
        return Cyc._raw(m, _reduce(m, raw))

    def _common(self, other) -> tuple[Cyc, Cyc]:
        other = as_cyc(other)
        if other.order == self.order:
            return self, other
        m = lcm(self.order, other.order)
        return self.lift(m), other.lift(m)

    # arithmetic
    def __add__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        n = max(len(a.coeffs), len(b.coeffs))
        ca = a.coeffs + (Fraction(0),) * (n - len(a.coeffs))
        cb = b.coeffs + (Fraction(0),) * (n - len(b.coeffs))
        return Cyc._raw(a.order, _trim(tuple(x + y for x, y in zip(ca, cb))))

    __radd__ = __add__

    def __neg__(self):
        return Cyc._raw(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        try:
            return self + (-as_cyc(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return as_cyc(other) - self

    def __mul__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        if not a.coeffs or not b.coeffs:
            return Cyc._raw(a.order, ())
        raw = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        raw[i + j] += x * y
        return Cyc._raw(a.order, _reduce(a.order, raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * as_cyc(other).inv()

    def __rtruediv__(self, other):
        return as_cyc(other) * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = Cyc.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def galois(self, k: int) -> Cyc:
        """Apply the automorphism zeta -> zeta^k (k coprime to the order)."""
        n = self.order
        if gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        raw = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            raw[(j * k) % n] += c
        return Cyc._raw(n, _reduce(n, raw))

    def conj(self) -> Cyc:
        return self.galois(self.order - 1) if self.order > 2 else self

    def is_zero(self) -> bool:
        return not self.coeffs

    def inv(self) -> Cyc:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        k = self.root_exponent()
        if k is not None:
            return root_of_unity(self.order, -k)
        # x^{-1} = (product of the other conjugates) / norm(x)
        n = self.order
        others = Cyc.one(n)
        for u in range(2, n):
            if gcd(u, n) == 1:
                others = others * self.galois(u)
        norm = self * others
        q = norm.coeffs[0] if norm.coeffs else Fraction(0)
        if len(norm.coeffs) != 1:
            raise ArithmeticError("norm is not rational")  # pragma: no cover
        return Cyc._raw(n, tuple(c / q for c in others.coeffs))

    def root_exponent(self):
        """Return k with self == zeta_order^k, or None if not a root of unity."""
        return _root_index(self.order).get(self.coeffs)

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def approx_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return complex(sum(float(c) * z**k for k, c in enumerate(self.coeffs)))

    # comparison
    def __eq__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        # the normalised trace is unchanged by lifting, so equal values
        # of different orders hash alike
        if self._hash is None:
            n = self.order
            t = sum((c * _ramanujan(n, j) for j, c in enumerate(self.coeffs)), Fraction(0))
            self._hash = hash(t)
        return self._hash

    def __repr__(self):
        return f"Cyc({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        k = self.root_exponent()
        if k is not None:
            if k == 0:
                return "1"
            return f"z{self.order}^{k}"
        if not self.coeffs:
            return "0"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if j == 0 else f"{c}*z{self.order}^{j}")
        return " + ".join(terms)


@lru_cache(maxsize=None)
def _ramanujan(n: int, j: int) -> Fraction:
    """Trace of zeta_n^j divided by phi(n)."""
    m = n // gcd(j, n)
    return Fraction(_mobius(m), _totient(m))


def _mobius(n: int) -> int:
    sign, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1
    return -sign if n > 1 else sign


def _totient(n: int) -> int:
    return _field(n)[0]


def as_cyc(x) -> Cyc:
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction, Rational)):
        return Cyc.rational(Fraction(x))
    raise TypeError(f"cannot interpret {type(x).__name__} as a cyclotomic number")


@lru_cache(maxsize=4096)
def root_of_unity(n: int, k: int) -> Cyc:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError("root_of_unity needs a positive order")
    _, table = _field(n)
    return Cyc._raw(n, _trim(tuple(Fraction(c) for c in table[k % n])))


def exp_i_pi(q) -> Cyc:
    """e^{i pi q} for a rational q, in order 2*denominator(q)."""
    q = Fraction(q)
    return root_of_unity(2 * q.denominator, q.numerator)

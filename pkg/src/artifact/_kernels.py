"""Exhaustive coherence kernels for pointed data stored as exponent tables.

A pointed category over a finite abelian group with n elements is encoded by

* ``m[a, b]``  the index of a + b,
* ``w[a, b, c]`` the exponent of the associator F(a, b, c) = z^w,
* ``r[a, b]`` the exponent of the braiding R(a, b; a + b),
* ``t[a]`` the exponent of the twist,

all modulo the cyclotomic order ``N`` (z = exp(2 pi i / N)).  Every kernel
returns an integer array of residues which is zero exactly where the
identity holds.

Each kernel has a numba version and a numpy version.  The numba one is
used when numba imports and ``ARTIFACT_NO_NUMBA`` is unset or ``0``.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "BACKEND",
    "available_backends",
    "pentagon_residue",
    "hexagon_residues",
    "ribbon_residue",
]


def _numpy_pentagon(m, w, N):
    n = m.shape[0]
    a = np.arange(n)[:, None, None, None]
    b = np.arange(n)[None, :, None, None]
    c = np.arange(n)[None, None, :, None]
    d = np.arange(n)[None, None, None, :]
    lhs = w[m[a, b], c, d] + w[a, b, m[c, d]]
    rhs = w[a, b, c] + w[a, m[b, c], d] + w[b, c, d]
    return (lhs - rhs) % N


def _numpy_hexagons(m, w, r, N):
    n = m.shape[0]
    a = np.arange(n)[:, None, None]
    b = np.arange(n)[None, :, None]
    c = np.arange(n)[None, None, :]
    first = r[c, a] + w[a, c, b] + r[c, b] - w[c, a, b] - r[c, m[a, b]] - w[a, b, c]
    second = -r[a, c] + w[a, c, b] - r[b, c] - w[c, a, b] + r[m[a, b], c] - w[a, b, c]
    return first % N, second % N


def _numpy_ribbon(m, r, t, N):
    n = m.shape[0]
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    return (t[m] - r[j, i] - r[i, j] - t[i] - t[j]) % N


def _make_numba():
    from numba import njit

    @njit(cache=True)
    def pentagon(m, w, N):
        n = m.shape[0]
        out = np.zeros((n, n, n, n), dtype=np.int64)
        for a in range(n):
            for b in range(n):
                ab = m[a, b]
                for c in range(n):
                    bc = m[b, c]
                    for d in range(n):
                        cd = m[c, d]
                        v = w[ab, c, d] + w[a, b, cd] - w[a, b, c] - w[a, bc, d] - w[b, c, d]
                        out[a, b, c, d] = v % N
        return out

    @njit(cache=True)
    def hexagons(m, w, r, N):
        n = m.shape[0]
        first = np.zeros((n, n, n), dtype=np.int64)
        second = np.zeros((n, n, n), dtype=np.int64)
        for a in range(n):
            for b in range(n):
                ab = m[a, b]
                for c in range(n):
                    f = r[c, a] + w[a, c, b] + r[c, b] - w[c, a, b] - r[c, ab] - w[a, b, c]
                    s = -r[a, c] + w[a, c, b] - r[b, c] - w[c, a, b] + r[ab, c] - w[a, b, c]
                    first[a, b, c] = f % N
                    second[a, b, c] = s % N
        return first, second

    @njit(cache=True)
    def ribbon(m, r, t, N):
        n = m.shape[0]
        out = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                out[i, j] = (t[m[i, j]] - r[j, i] - r[i, j] - t[i] - t[j]) % N
        return out

    return pentagon, hexagons, ribbon


_IMPLS = {"numpy": (_numpy_pentagon, _numpy_hexagons, _numpy_ribbon)}
try:
    _IMPLS["numba"] = _make_numba()
except ImportError:  # pragma: no cover - numba is a declared dependency
    pass


def available_backends() -> list[str]:
    return sorted(_IMPLS)


def _default_backend() -> str:
    flag = os.environ.get("ARTIFACT_NO_NUMBA", "0").strip().lower()
    if flag not in ("", "0", "false", "no") or "numba" not in _IMPLS:
        return "numpy"
    return "numba"


BACKEND = _default_backend()


def _impl(backend, k):
    return _IMPLS[backend or BACKEND][k]


def _as_int(*arrays):
    return [np.ascontiguousarray(x, dtype=np.int64) for x in arrays]


def pentagon_residue(m, w, N, backend=None):
    m, w = _as_int(m, w)
    return _impl(backend, 0)(m, w, np.int64(N))


def hexagon_residues(m, w, r, N, backend=None):
    m, w, r = _as_int(m, w, r)
    return _impl(backend, 1)(m, w, r, np.int64(N))


def ribbon_residue(m, r, t, N, backend=None):
    m, r, t = _as_int(m, r, t)
    return _impl(backend, 2)(m, r, t, np.int64(N))

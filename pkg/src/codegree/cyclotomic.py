"""Exact arithmetic on sums of e-th roots of unity.

A value is a length-e integer vector ``a`` representing ``sum a[k] zeta^k``
with ``zeta = exp(2 pi i / e)``.  Sums and products live in Z[x]/(x^e - 1);
testing a vector against a plain integer reduces modulo the e-th cyclotomic
polynomial, which is exact and avoids floating point entirely.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def zero(e: int) -> np.ndarray:
    return np.zeros(e, dtype=np.int64)


def integer(value: int, e: int) -> np.ndarray:
    v = zero(e)
    v[0] = value
    return v


def root(k: int, e: int) -> np.ndarray:
    v = zero(e)
    v[k % e] = 1
    return v


def add(a, b) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)


def mul(a, b) -> np.ndarray:
    """Product in Z[x]/(x^e - 1): cyclic convolution."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    e = a.shape[0]
    full = np.convolve(a, b)
    out = full[:e].copy()
    out[: full.shape[0] - e] += full[e:]
    return out


def conj(a) -> np.ndarray:
    """Complex conjugate: zeta^k -> zeta^(-k)."""
    a = np.asarray(a, dtype=np.int64)
    return np.roll(a[::-1], 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    poly = num
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn] // den[dn]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return out


def reduce_mod_cyclotomic(a) -> tuple[int, ...]:
    """Canonical residue of a (length e) modulo the e-th cyclotomic polynomial."""
    a = [int(x) for x in np.asarray(a)]
    e = len(a)
    phi = cyclotomic_polynomial(e)
    d = len(phi) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            for j in range(d + 1):
                a[i - d + j] -= c * phi[j]
    return tuple(a[:d])


def equals_integer(a, value: int) -> bool:
    """Does the vector represent the rational integer ``value``?"""
    a = np.asarray(a, dtype=np.int64).copy()
    a[0] -= value
    return not any(reduce_mod_cyclotomic(a))


def as_integer(a):
    """The rational integer a represents, or None."""
    r = reduce_mod_cyclotomic(a)
    if any(r[1:]):
        return None
    a0 = int(np.asarray(a)[0])
    return a0 - (a0 - r[0]) if False else r[0] + 0 if len(r) else 0

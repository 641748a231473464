"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

Setting the environment variable ``CODEGREE_PURE=1`` (before import) forces
the pure-numpy path even when numba is installed; the same path is used
automatically when numba is missing.  Both paths are exact integer
arithmetic and produce identical results.
"""

from __future__ import annotations

import os

import numpy as np

_PURE_FLAG = os.environ.get("CODEGREE_PURE", "").strip().lower()
FORCE_PURE = _PURE_FLAG not in ("", "0", "false", "no")

try:
    if FORCE_PURE:
        raise ImportError("pure path forced via CODEGREE_PURE")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# class-algebra structure constants
#
# A[j, i, l] = #{(x, y) in C_j x C_i : x*y = rep_l}, the class-matrix entries
# driving the Dixon-Schneider eigenvector splitting.


def _structure_constants_np(elems, inv_idx, class_of, mem_flat, mem_off, reps):
    k = reps.shape[0]
    A = np.zeros((k, k, k), dtype=np.int64)
    index = {elems[i].tobytes(): i for i in range(elems.shape[0])}
    zmat = elems[reps]
    for j in range(k):
        for x in mem_flat[mem_off[j] : mem_off[j + 1]]:
            xinv = elems[inv_idx[x]]
            # Y[l, t] = rep_l[xinv[t]], i.e. the product x^-1 * rep_l
            Y = zmat[:, xinv]
            for l in range(k):
                yi = index[Y[l].tobytes()]
                A[j, class_of[yi], l] += 1
    return A


if HAVE_NUMBA:

    @njit(cache=True)
    def _find_row(sorted_rows, target):
        lo = 0
        hi = sorted_rows.shape[0]
        d = target.shape[0]
        while lo < hi:
            mid = (lo + hi) // 2
            cmp = 0
            for t in range(d):
                a = sorted_rows[mid, t]
                b = target[t]
                if a < b:
                    cmp = -1
                    break
                if a > b:
                    cmp = 1
                    break
            if cmp < 0:
                lo = mid + 1
            else:
                hi = mid
        return lo

    @njit(cache=True)
    def _structure_constants_nb(elems, inv_idx, class_of, mem_flat, mem_off, reps):
        k = reps.shape[0]
        d = elems.shape[1]
        A = np.zeros((k, k, k), dtype=np.int64)
        y = np.empty(d, dtype=elems.dtype)
        for j in range(k):
            for mpos in range(mem_off[j], mem_off[j + 1]):
                xinv = elems[inv_idx[mem_flat[mpos]]]
                for l in range(k):
                    z = elems[reps[l]]
                    for t in range(d):
                        y[t] = z[xinv[t]]
                    yi = _find_row(elems, y)
                    A[j, class_of[yi], l] += 1
        return A


def structure_constants(elems, inv_idx, class_of, mem_flat, mem_off, reps):
    """Class-algebra structure constants (k, k, k).

    ``elems`` must be the lexicographically sorted (n, degree) image table;
    the remaining arrays are index data relative to that ordering.
    """
    elems = np.ascontiguousarray(elems, dtype=np.int64)
    inv_idx = np.ascontiguousarray(inv_idx, dtype=np.int64)
    class_of = np.ascontiguousarray(class_of, dtype=np.int64)
    mem_flat = np.ascontiguousarray(mem_flat, dtype=np.int64)
    mem_off = np.ascontiguousarray(mem_off, dtype=np.int64)
    reps = np.ascontiguousarray(reps, dtype=np.int64)
    if HAVE_NUMBA:
        return _structure_constants_nb(elems, inv_idx, class_of, mem_flat, mem_off, reps)
    return _structure_constants_np(elems, inv_idx, class_of, mem_flat, mem_off, reps)


# ---------------------------------------------------------------------------
# reduced row echelon form over GF(p)


def _rref_mod_np(M, p):
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % p
        pivots.append(c)
        r += 1
    return A, np.array(pivots, dtype=np.int64)


if HAVE_NUMBA:

    @njit(cache=True)
    def _pow_mod(a, e, p):
        result = 1
        base = a % p
        while e:
            if e & 1:
                result = (result * base) % p
            base = (base * base) % p
            e >>= 1
        return result

    @njit(cache=True)
    def _rref_mod_nb(M, p):
        A = M % p
        rows, cols = A.shape
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            pr = -1
            for i in range(r, rows):
                if A[i, c] != 0:
                    pr = i
                    break
            if pr == -1:
                continue
            if pr != r:
                for t in range(cols):
                    tmp = A[r, t]
                    A[r, t] = A[pr, t]
                    A[pr, t] = tmp
            inv = _pow_mod(A[r, c], p - 2, p)
            for t in range(cols):
                A[r, t] = (A[r, t] * inv) % p
            for i in range(rows):
                if i != r and A[i, c] != 0:
                    f = A[i, c]
                    for t in range(cols):
                        A[i, t] = (A[i, t] - f * A[r, t]) % p
            pivots[r] = c
            r += 1
        return A, pivots[:r]


def rref_mod(M, p):
    """Reduced row echelon form of an integer matrix over GF(p).

    Returns ``(R, pivots)`` where rows beyond ``len(pivots)`` are zero.
    """
    M = np.ascontiguousarray(M, dtype=np.int64)
    if HAVE_NUMBA:
        R, piv = _rref_mod_nb(M.copy(), p)
        return R, piv
    return _rref_mod_np(M, p)


def nullspace_mod(M, p):
    """Basis (rows, rref-normalized) of the right nullspace of M over GF(p)."""
    M = np.ascontiguousarray(M, dtype=np.int64)
    rows, cols = M.shape
    R, piv = rref_mod(M, p)
    pivset = set(int(c) for c in piv)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(piv):
            basis[bi, pc] = (-int(R[ri, fc])) % p
    return basis

"""Hot mod-p elimination kernels.

Everything above this module manipulates small exact matrices; the one loop
that dominates runtime (maximal-subalgebra scans do thousands of small
reduced-row-echelon computations) lives here.  Two interchangeable
implementations are provided:

* a numba ``@njit`` kernel (default when numba imports cleanly), and
* a vectorized pure-numpy fallback.

Set ``LIESC_BACKEND=numpy`` or ``LIESC_BACKEND=numba`` to force one;
``benchmarks/bench_rref.py`` compares the two.
"""

from __future__ import annotations

import os

import numpy as np

_FORCED = os.environ.get("LIESC_BACKEND", "").strip().lower()


def _rref_modp_numpy(a: np.ndarray, p: int):
    """Reduced row echelon form of ``a`` mod p, in place.

    Returns (rank, pivot_cols). Entries are kept in [0, p).
    """
    rows, cols = a.shape
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(col[nzr], a[r])) % p
        piv.append(c)
        r += 1
    return r, np.array(piv, dtype=np.int64)


def _modinv(a: int, p: int) -> int:
    # extended Euclid; a in (0, p)
    t, new_t = 0, 1
    r, new_r = p, a
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    return t % p


def _rref_modp_python(a, p):
    # Fallback body shared with the numba kernel; typed so @njit accepts it.
    rows, cols = a.shape
    piv = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                pr = i
                break
        if pr == -1:
            continue
        if pr != r:
            for j in range(cols):
                tmp = a[r, j]
                a[r, j] = a[pr, j]
                a[pr, j] = tmp
        # scale pivot row
        v = a[r, c]
        t, new_t = 0, 1
        rr, new_r = p, v
        while new_r != 0:
            q = rr // new_r
            t, new_t = new_t, t - q * new_t
            rr, new_r = new_r, rr - q * new_r
        inv = t % p
        for j in range(cols):
            a[r, j] = (a[r, j] * inv) % p
        # eliminate everywhere else
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        piv[r] = c
        r += 1
    return r, piv[:r]


def _build_numba():
    from numba import njit

    return njit(cache=True)(_rref_modp_python)


_rref_modp_numba = None
if _FORCED != "numpy":
    try:
        _rref_modp_numba = _build_numba()
    except Exception:  # pragma: no cover - numba unavailable or broken
        if _FORCED == "numba":
            raise
        _rref_modp_numba = None

BACKEND = "numba" if _rref_modp_numba is not None else "numpy"


def rref_modp(a: np.ndarray, p: int):
    """RREF mod p of an int64 array, in place. Returns (rank, pivot_cols)."""
    if _rref_modp_numba is not None:
        r, piv = _rref_modp_numba(a, p)
        return int(r), piv
    return _rref_modp_numpy(a, p)

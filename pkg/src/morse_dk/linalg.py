"""Dense complex eigenvalues: Householder Hessenberg reduction + shifted QR.

A small self-contained implementation used to cross-check LAPACK on the
non-Hermitian discretizations.  Cost is O(n^3) with an O(n) Python loop per
QR sweep, so it is meant for matrices up to a few hundred rows.
"""
from __future__ import annotations

import numpy as np

__all__ = ["ConvergenceError", "hessenberg", "hqr_eigvals"]


class ConvergenceError(RuntimeError):
    """The QR iteration hit its iteration cap."""


def hessenberg(a: np.ndarray) -> np.ndarray:
    """Upper Hessenberg form of ``a`` by Householder reflections (similarity)."""
    h = np.array(a, dtype=complex, copy=True)
    n = h.shape[0]
    if h.shape != (n, n):
        raise ValueError("matrix must be square")
    for k in range(n - 2):
        x = h[k + 1:, k]
        alpha = np.linalg.norm(x)
        if alpha == 0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x.copy()
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        # H <- P H P with P = I - 2 v v^H
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0.0
    return h


def _wilkinson_shift(a, b, c, d):
    # eigenvalue of [[a, b], [c, d]] closest to d
    tr = a + d
    det = a * d - b * c
    disc = np.sqrt(tr * tr / 4 - det)
    l1 = tr / 2 + disc
    l2 = tr / 2 - disc
    return l1 if abs(l1 - d) < abs(l2 - d) else l2


def hqr_eigvals(a: np.ndarray, max_iter_per_eig: int = 30) -> np.ndarray:
    """All eigenvalues of a square complex matrix.

    Single-shift QR on the Hessenberg form with Wilkinson shifts, Givens
    rotations and deflation on negligible subdiagonals.  The total number of
    QR sweeps is capped at ``max_iter_per_eig * n``.

    Raises
    ------
    ConvergenceError
        If the cap is exceeded.
    """
    h = hessenberg(a)
    n = h.shape[0]
    eig = np.empty(n, dtype=complex)
    eps = np.finfo(float).eps
    cap = max_iter_per_eig * max(n, 1)
    sweeps = 0
    since_deflation = 0
    hi = n - 1
    while hi >= 0:
        if hi == 0:
            eig[0] = h[0, 0]
            break
        # locate the start of the active unreduced block
        lo = hi
        while lo > 0:
            scale = abs(h[lo, lo]) + abs(h[lo - 1, lo - 1])
            if scale == 0:
                scale = np.abs(h[: hi + 1, : hi + 1]).max()
            if abs(h[lo, lo - 1]) <= eps * scale:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            eig[hi] = h[hi, hi]
            hi -= 1
            since_deflation = 0
            continue

        sweeps += 1
        since_deflation += 1
        if sweeps > cap:
            raise ConvergenceError(f"QR iteration did not converge within {cap} sweeps (n={n})")
        if since_deflation % 11 == 10:
            # exceptional shift to break cycles
            mu = h[hi, hi] + 0.75 * abs(h[hi, hi - 1])
        else:
            mu = _wilkinson_shift(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])

        idx = np.arange(lo, hi + 1)
        h[idx, idx] -= mu
        rots = []
        for k in range(lo, hi):
            x, y = h[k, k], h[k + 1, k]
            r = np.hypot(abs(x), abs(y))
            if r == 0:
                c, s = 1.0 + 0j, 0j
            else:
                c, s = x / r, y / r
            rows = h[k:k + 2, k:hi + 1]
            top = c.conjugate() * rows[0] + s.conjugate() * rows[1]
            bot = -s * rows[0] + c * rows[1]
            rows[0], rows[1] = top, bot
            rots.append((c, s))
        for k, (c, s) in zip(range(lo, hi), rots):
            cols = h[lo:min(k + 2, hi) + 1, k:k + 2]
            left = cols[:, 0] * c + cols[:, 1] * s
            right = -cols[:, 0] * s.conjugate() + cols[:, 1] * c.conjugate()
            cols[:, 0], cols[:, 1] = left, right
        h[idx, idx] += mu
    return eig

"""Complex special functions: log-gamma, associated Laguerre, modified Bessel I.

All functions use the principal branch for logarithms, square roots and
complex powers.  They accept numpy broadcastable inputs and return a Python
``complex`` when every argument is a scalar.
"""
from __future__ import annotations

import numpy as np
from scipy import special

__all__ = [
    "BESSEL_ASYMPTOTIC_THRESHOLD",
    "PoleError",
    "log_gamma",
    "gamma",
    "laguerre",
    "bessel_i",
    "hille_hardy_pair",
    "hille_hardy_printed",
]

# |z| at which bessel_i leaves the power series for the Hankel expansion
BESSEL_ASYMPTOTIC_THRESHOLD = 15.0

_EPS = np.finfo(float).eps


class PoleError(ValueError):
    """Raised when a function is evaluated at one of its poles."""


def _out(value, *args):
    if all(np.ndim(a) == 0 for a in args):
        return complex(np.asarray(value).reshape(()))
    return value


def _is_nonpositive_integer(z: np.ndarray) -> np.ndarray:
    return (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))


def log_gamma(z):
    """Principal-branch log-gamma of complex ``z``.

    Raises
    ------
    PoleError
        If any ``z`` is a non-positive integer.
    """
    zz = np.asarray(z, dtype=complex)
    if np.any(_is_nonpositive_integer(zz)):
        raise PoleError(f"log_gamma has a pole at non-positive integer argument {z!r}")
    return _out(special.loggamma(zz), z)


def gamma(z):
    """Gamma function evaluated through :func:`log_gamma`."""
    return _out(np.exp(np.asarray(log_gamma(z), dtype=complex)), z)


def laguerre(n: int, a, x):
    """Associated Laguerre polynomial ``L_n^{(a)}(x)`` by upward recurrence.

    ``(k+1) L_{k+1} = (2k+1+a-x) L_k - (k+a) L_{k-1}``; stable in the
    forward direction for the arguments used here.
    """
    if n < 0 or int(n) != n:
        raise ValueError(f"Laguerre degree must be a non-negative integer, got {n!r}")
    n = int(n)
    aa, xx = np.broadcast_arrays(np.asarray(a, dtype=complex), np.asarray(x, dtype=complex))
    prev = np.ones(aa.shape, dtype=complex)
    if n == 0:
        return _out(prev, a, x)
    cur = 1.0 + aa - xx
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + aa - xx) * cur - (k + aa) * prev) / (k + 1)
    return _out(cur, a, x)


def _bessel_series(nu, z, scale):
    """Ascending series for I_nu(z) * exp(-scale); nu, z, scale are 1-d arrays."""
    if np.isrealobj(z):
        term = special.gammasgn(nu + 1) * np.exp(nu * np.log(z / 2) - special.gammaln(nu + 1) - scale)
    else:
        term = np.exp(nu * np.log(z / 2) - special.loggamma(nu + 1) - scale)
    total = term.copy()
    q = (z / 2) ** 2
    idx = np.arange(z.size)
    k_max = int(2 * np.max(np.abs(z), initial=0.0)) + 200
    for k in range(k_max):
        if idx.size == 0:
            break
        term = term * q[idx] / ((k + 1) * (k + 1 + nu[idx]))
        total[idx] += term
        mag = np.abs(term)
        # past the peak of the series the terms only shrink
        keep = (mag > _EPS * 0.1 * np.abs(total[idx])) & ~((mag == 0) & (k > np.abs(z[idx])))
        idx, term = idx[keep], term[keep]
    return total


def _bessel_asymptotic(nu, z, scaled):
    """Hankel expansion for Re z >= 0, large |z|; nu, z are 1-d arrays.

    Returns the values and a mask of entries whose smallest term reached 1e-15.
    """
    real = np.isrealobj(z)
    dtype = float if real else complex
    mu = 4 * nu * nu
    s_plus = np.ones(z.shape, dtype=dtype)   # sum a_k / z^k
    s_minus = np.ones(z.shape, dtype=dtype)  # sum (-1)^k a_k / z^k
    last = np.full(z.shape, np.inf)
    idx = np.arange(z.size)
    a_k = np.ones(z.shape, dtype=dtype)
    for k in range(1, 120):
        if idx.size == 0:
            break
        a_k = a_k * (mu[idx] - (2 * k - 1) ** 2) / (8 * k * z[idx])
        mag = np.abs(a_k)
        # stop at the smallest term: the expansion is divergent beyond it
        use = mag <= last[idx]
        idx, a_k, mag = idx[use], a_k[use], mag[use]
        s_plus[idx] += a_k
        s_minus[idx] += (-1) ** k * a_k
        last[idx] = mag
        keep = mag > _EPS * 0.1
        idx, a_k = idx[keep], a_k[keep]
    converged = last <= 1e-15
    root = np.sqrt(2 * np.pi * z)
    if real:
        # positive real axis: Stokes line, averaged subdominant term
        coeff = -np.sin(np.pi * nu)
        if scaled:
            return (s_minus + coeff * np.exp(-2 * z) * s_plus) / root, converged
        return (np.exp(z) * s_minus + coeff * np.exp(-z) * s_plus) / root, converged
    # coefficient of the subdominant exponential; averaged on the Stokes line
    coeff = np.where(
        z.imag > 0,
        1j * np.exp(1j * np.pi * nu),
        np.where(z.imag < 0, -1j * np.exp(-1j * np.pi * nu), -np.sin(np.pi * nu)),
    )
    if scaled:
        grow = np.exp(1j * z.imag)
        decay = np.exp(-z - z.real)
    else:
        grow = np.exp(z)
        decay = np.exp(-z)
    return (grow * s_minus + coeff * decay * s_plus) / root, converged


def bessel_i(nu, z, scaled: bool = False):
    """Modified Bessel function of the first kind, ``I_nu(z)``, principal branch.

    Parameters
    ----------
    nu, z : complex or array_like
        Order and argument; both may be complex and are broadcast together.
    scaled : bool
        Return ``I_nu(z) * exp(-|Re z|)``, which stays finite for large ``z``.

    Notes
    -----
    The power series is used for ``|z| < BESSEL_ASYMPTOTIC_THRESHOLD`` and
    wherever the smallest term of the Hankel expansion stays above 1e-15
    (large order relative to ``|z|``).  Arguments with ``Re z < 0`` are reflected
    through ``I_nu(z e^{+-i pi}) = e^{+-i pi nu} I_nu(z)``.

    Near the imaginary axis the series cancels; with ``|nu|`` above ~10 and
    ``|Im z|`` above ~30 the relative accuracy is no better than 1e-5.
    """
    nn, zz = np.broadcast_arrays(np.asarray(nu, dtype=complex), np.asarray(z, dtype=complex))
    shape = nn.shape
    nn = nn.ravel().copy()
    zz = zz.ravel().copy()

    at_zero = zz == 0
    if np.any(at_zero & (nn != 0) & (nn.real <= 0)):
        raise ValueError("bessel_i(nu, 0) is undefined for Re(nu) < 0 (or purely imaginary nu)")
    # I_{-m} = I_m for integer m
    neg_int = _is_nonpositive_integer(nn) & (nn != 0)
    nn[neg_int] = -nn[neg_int]

    out = np.zeros(zz.shape, dtype=complex)
    out[at_zero & (nn == 0)] = 1.0

    # reflect into the right half-plane
    left = (zz.real < 0) & ~at_zero
    phase = np.ones(zz.shape, dtype=complex)
    phase[left] = np.where(
        zz[left].imag >= 0, np.exp(1j * np.pi * nn[left]), np.exp(-1j * np.pi * nn[left])
    )
    w = np.where(left, -zz, zz)

    if np.all(nn.imag == 0) and np.all(w.imag == 0) and np.all(phase.imag == 0):
        out = out.real.copy()
        nn = nn.real
        w = w.real
        phase = phase.real

    big = np.abs(w) >= BESSEL_ASYMPTOTIC_THRESHOLD
    if big.any():
        idx = np.flatnonzero(big)
        values, ok = _bessel_asymptotic(nn[idx], w[idx], scaled)
        out[idx[ok]] = values[ok]
        big[idx[~ok]] = False
    small = ~at_zero & ~big
    if small.any():
        scale = np.abs(w[small].real) if scaled else np.zeros(int(small.sum()))
        out[small] = _bessel_series(nn[small], w[small], scale)
    out *= phase
    return _out(out.reshape(shape), nu, z)


def hille_hardy_pair(t, x, y, a, n_trunc: int):
    """Both sides of the Hille-Hardy bilinear generating function.

    Returns ``(closed, series)`` where, with ``w = exp(-(x+y)/2) (xy)^{a/2}``::

        series = sum_{n < n_trunc} t^n n!/Gamma(n+a+1) w L_n^a(x) L_n^a(y)
        closed = t^{-a/2}/(1-t) exp(-(x+y)/2 (1+t)/(1-t)) I_a(2 sqrt(xyt)/(1-t))

    The two agree as ``n_trunc`` grows whenever ``|t| < 1``.
    """
    t = complex(t)
    if abs(t) >= 1:
        raise ValueError(f"Hille-Hardy series diverges for |t| >= 1 (t={t})")
    if x < 0 or y < 0:
        raise ValueError("Hille-Hardy arguments x, y must be non-negative")
    if n_trunc < 1:
        raise ValueError("n_trunc must be >= 1")
    a = complex(a)
    xy = x * y
    weight = np.exp(-(x + y) / 2) * (xy ** (a / 2) if xy > 0 else 0.0)
    if xy == 0 and a.real <= 0 and a != 0:
        raise ValueError("(xy)^{a/2} at xy = 0 requires Re(a) > 0")
    if xy == 0 and a == 0:
        weight = np.exp(-(x + y) / 2)

    series = 0j
    tn = 1.0 + 0j
    for n in range(n_trunc):
        coeff = np.exp(special.gammaln(n + 1) - special.loggamma(n + a + 1))
        series += tn * coeff * laguerre(n, a, x) * laguerre(n, a, y)
        tn *= t
    series *= weight

    if t == 0:
        # only the n = 0 term survives
        closed = weight / np.exp(special.loggamma(a + 1))
    elif xy == 0:
        closed = 0j if a != 0 else np.exp(-(x + y) / 2 * (1 + t) / (1 - t)) / (1 - t)
    else:
        arg = 2 * np.sqrt(xy * t) / (1 - t)
        closed = (
            t ** (-a / 2) / (1 - t)
            * np.exp(-(x + y) / 2 * (1 + t) / (1 - t))
            * bessel_i(a, arg)
        )
    return complex(closed), complex(series)


def hille_hardy_printed(t, x, y, a) -> complex:
    """Closed side of the identity in its printed variant.

    Carries ``t * exp(-a/2)`` where the reference identity has ``t^{-a/2}``.
    Only used to measure that discrepancy against the Laguerre series.
    """
    t = complex(t)
    a = complex(a)
    if abs(t) >= 1:
        raise ValueError(f"Hille-Hardy series diverges for |t| >= 1 (t={t})")
    arg = 2 * np.sqrt(x * y * t) / (1 - t)
    value = (
        t * np.exp(-a / 2) / (1 - t)
        * np.exp(-(x + y) / 2 * (1 + t) / (1 - t))
        * bessel_i(a, arg)
    )
    return complex(value)

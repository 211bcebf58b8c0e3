"""Complex-argument special functions used by the symbol and kernel formulas.

Everything here follows one branch convention: arguments of complex numbers
live in (-pi, pi], with the cut along the negative real axis.  All fractional
powers of complex bases must go through :func:`principal_power` so that the
convention holds globally.

Gamma and digamma are evaluated by a Lanczos-type rational approximation
(g = 607/128, 15 terms) with reflection for Re z < 1/2; beta is assembled in
log space to dodge overflow.  The real modified Bessel function K_nu and the
confluent hypergeometric U are delegated to scipy.special behind the domain
windows this package actually needs.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy import special as _sp

from .errors import DomainError, GammaOverflowError, PoleError

__all__ = [
    "principal_power",
    "complex_gamma",
    "complex_loggamma",
    "complex_digamma",
    "complex_beta",
    "bessel_k",
    "kummer_u",
]

_TWO_PI = 2.0 * math.pi
_LOG_SQRT_TWO_PI = 0.5 * math.log(_TWO_PI)

# Lanczos coefficients for g = 607/128 (Godfrey's 15-term set).
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = np.array(
    [
        0.99999999999999709182,
        57.156235665862923517,
        -59.597960355475491248,
        14.136097974741747174,
        -0.49191381609762019978,
        0.33994649984811888699e-4,
        0.46523628927048575665e-4,
        -0.98374475304879564677e-4,
        0.15808870322491248884e-3,
        -0.21026444172410488319e-3,
        0.21743961811521264320e-3,
        -0.16431810653676389022e-3,
        0.84418223983852743293e-4,
        -0.26190838401581408670e-4,
        0.36899182659531622704e-5,
    ]
)

# B_{2n}/(2n) for the digamma asymptotic series.
_DIGAMMA_TAIL = np.array(
    [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ]
)

_POLE_TOL = 1e-13


def _as_complex_array(z):
    a = np.asarray(z, dtype=complex)
    return a


def _is_scalar(z) -> bool:
    return np.ndim(z) == 0


class AccuracyOverflow(GammaOverflowError):
    """A finite-input evaluation escaped to inf/nan."""


def _check_finite(value, what: str):
    if not np.all(np.isfinite(np.asarray(value))):
        raise AccuracyOverflow(f"{what} produced a non-finite value")
    return value


def _arg_principal(z):
    """Argument in (-pi, pi]; negative reals map to +pi even with -0.0 parts."""
    a = np.angle(z)
    z = np.asarray(z)
    on_cut = (z.imag == 0.0) & (z.real < 0.0)
    if np.any(on_cut):
        a = np.where(on_cut, math.pi, a)
    return a


def principal_power(z, gamma: float):
    """z**gamma with the principal branch, z^g := exp(g*(log|z| + i*arg z)).

    arg z is taken in (-pi, pi].  z = 0 returns 0 for gamma > 0 and raises
    for gamma <= 0.
    """
    if _is_scalar(z):
        zc = complex(z)
        if zc == 0:
            if gamma > 0:
                return 0j
            raise DomainError("0 cannot be raised to a non-positive power")
        w = cmath.exp(gamma * complex(math.log(abs(zc)), _arg_principal(zc)))
        return _check_finite(w, "principal_power")
    za = _as_complex_array(z)
    if np.any(za == 0) and gamma <= 0:
        raise DomainError("0 cannot be raised to a non-positive power")
    logz = np.log(np.where(za == 0, 1.0, np.abs(za))) + 1j * _arg_principal(za)
    out = np.where(za == 0, 0j, np.exp(gamma * logz))
    return _check_finite(out, "principal_power")


def _near_nonpositive_integer(z) -> np.ndarray:
    za = _as_complex_array(z)
    near_int = np.abs(za.real - np.round(za.real)) < _POLE_TOL
    return near_int & (np.abs(za.imag) < _POLE_TOL) & (za.real < 0.5)


def _lanczos_series(z):
    # z has Re z >= 0.5 here; series in 1/(z-1+k).
    acc = np.full_like(z, _LANCZOS_C[0])
    for k in range(1, len(_LANCZOS_C)):
        acc = acc + _LANCZOS_C[k] / (z - 1.0 + k)
    return acc


def _loggamma_right(z):
    """log Gamma for Re z >= 0.5 (principal modulo 2*pi*i, exact under exp)."""
    t = z - 0.5 + _LANCZOS_G
    return _LOG_SQRT_TWO_PI + (z - 0.5) * np.log(t) - t + np.log(_lanczos_series(z))


def _log_sin_pi(z):
    """log sin(pi z), stable for large |Im z| (principal modulo 2*pi*i)."""
    z = _as_complex_array(z)
    y = z.imag
    small = np.abs(y) < 20.0
    out = np.empty_like(z)
    if np.any(small):
        out[small] = np.log(np.sin(math.pi * z[small]))
    big = ~small
    if np.any(big):
        zb = z[big]
        sgn = np.sign(zb.imag)
        # sin(pi z) ~ -sgn * exp(-i sgn pi z) / (2i) up to an exp(2 i sgn pi z) correction
        out[big] = (
            -1j * sgn * math.pi * zb
            - math.log(2.0)
            + 1j * sgn * (math.pi / 2.0)
            + np.log1p(-np.exp(2j * sgn * math.pi * zb))
        )
    return out


def complex_loggamma(z):
    """log of complex_gamma, assembled from principal logs.

    The imaginary part may differ from the continuous log-gamma by a multiple
    of 2*pi; exp(complex_loggamma(z)) is exact, which is all the beta-function
    assembly needs.
    """
    scalar = _is_scalar(z)
    za = np.atleast_1d(_as_complex_array(z))
    if np.any(_near_nonpositive_integer(za)):
        raise PoleError("log-gamma pole at a non-positive integer")
    out = np.empty_like(za)
    right = za.real >= 0.5
    if np.any(right):
        out[right] = _loggamma_right(za[right])
    left = ~right
    if np.any(left):
        zl = za[left]
        out[left] = (
            math.log(math.pi) - _log_sin_pi(zl) - _loggamma_right(1.0 - zl)
        )
    out = _check_finite(out, "complex_loggamma")
    return complex(out[0]) if scalar else out.reshape(np.shape(z))


def complex_gamma(z):
    """Gamma function for complex argument.

    Lanczos approximation on Re z >= 1/2, reflection formula on the left
    half-plane.  Raises on poles and beyond the overflow guard |Re z| > 170.
    """
    scalar = _is_scalar(z)
    za = np.atleast_1d(_as_complex_array(z))
    if np.any(np.abs(za.real) > 170.0):
        raise GammaOverflowError("gamma overflow guard: |Re z| > 170")
    if np.any(_near_nonpositive_integer(za)):
        raise PoleError("gamma pole at a non-positive integer")
    out = np.empty_like(za)
    right = za.real >= 0.5
    if np.any(right):
        zr = za[right]
        t = zr - 0.5 + _LANCZOS_G
        out[right] = (
            math.sqrt(_TWO_PI)
            * np.exp((zr - 0.5) * np.log(t) - t)
            * _lanczos_series(zr)
        )
    left = ~right
    if np.any(left):
        zl = za[left]
        out[left] = math.pi / (np.sin(math.pi * zl) * np.exp(_loggamma_right(1.0 - zl)))
    out = _check_finite(out, "complex_gamma")
    return complex(out[0]) if scalar else out.reshape(np.shape(z))


def complex_digamma(z):
    """Digamma (logarithmic derivative of gamma) for complex argument.

    Reflection for Re z < 1/2, recurrence up to Re z >= 10, then the
    asymptotic series in 1/z^2.
    """
    scalar = _is_scalar(z)
    za = np.atleast_1d(_as_complex_array(z))
    if np.any(_near_nonpositive_integer(za)):
        raise PoleError("digamma pole at a non-positive integer")
    out = np.zeros_like(za)
    work = za.copy()
    left = work.real < 0.5
    if np.any(left):
        zl = work[left]
        out[left] -= math.pi / np.tan(math.pi * zl)
        work[left] = 1.0 - zl
    # push the argument into the asymptotic region
    for _ in range(10):
        low = work.real < 10.0
        if not np.any(low):
            break
        out[low] -= 1.0 / work[low]
        work[low] = work[low] + 1.0
    inv2 = 1.0 / (work * work)
    tail = np.zeros_like(work)
    for coeff in _DIGAMMA_TAIL[::-1]:
        tail = (tail + coeff) * inv2
    out += np.log(work) - 0.5 / work - tail
    out = _check_finite(out, "complex_digamma")
    return complex(out[0]) if scalar else out.reshape(np.shape(z))


def complex_beta(a, b):
    """Beta function B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), via log-gamma."""
    aa = _as_complex_array(a)
    bb = _as_complex_array(b)
    if np.any(_near_nonpositive_integer(aa)) or np.any(
        _near_nonpositive_integer(bb)
    ) or np.any(_near_nonpositive_integer(aa + bb)):
        raise PoleError("beta pole: argument or argument sum at a non-positive integer")
    out = np.exp(
        complex_loggamma(aa) + complex_loggamma(bb) - complex_loggamma(aa + bb)
    )
    if _is_scalar(a) and _is_scalar(b):
        return complex(out)
    return out


def bessel_k(nu: float, x: float) -> float:
    """Modified Bessel function of the second kind K_nu(x), x > 0.

    Supported for |nu| <= 2 (K is even in the order).
    """
    if x <= 0.0:
        raise DomainError("bessel_k requires x > 0")
    if abs(nu) > 2.0:
        raise DomainError("bessel_k supports |nu| <= 2")
    val = _sp.kv(nu, x)
    if not np.all(np.isfinite(val)):
        raise AccuracyOverflow("bessel_k escaped to a non-finite value")
    return float(val)


def kummer_u(a: float, b: float, x: float) -> float:
    """Confluent hypergeometric function U(a, b, x) on the window this
    package uses: a > 0, 0 < b < 3, x > 0 (b = 1, 2 take the logarithmic
    limit form)."""
    if not (a > 0.0):
        raise DomainError("kummer_u requires a > 0")
    if not (0.0 < b < 3.0):
        raise DomainError("kummer_u requires 0 < b < 3")
    if not (x > 0.0):
        raise DomainError("kummer_u requires x > 0")
    val = _sp.hyperu(a, b, x)
    if not np.isfinite(val):
        raise AccuracyOverflow("kummer_u escaped to a non-finite value")
    return float(val)

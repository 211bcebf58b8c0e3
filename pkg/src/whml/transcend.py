"""The two transcendental functions whose equality marks loss of
Fredholmness, the root of their frequency-zero equation, and machine checks
of the inequality estimates that keep them apart everywhere else.

Everything is parameterised by (alpha, tau, xi) with tau = s - 1/p; the
regularity-order bookkeeping collapses because the sine ratio only sees
tau (the m = 1 convention is fixed throughout).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError
from .reports import VerificationReport
from .specfun import complex_beta

__all__ = [
    "TranscendParams",
    "t_s",
    "t_b",
    "te_residual_zero",
    "alpha_c",
    "critical_s",
    "arg_beta_series_residual",
    "inequality_scan",
    "no_solution_certificate",
    "SCAN_REGIONS",
]


@dataclass(frozen=True)
class TranscendParams:
    """Point (alpha, tau, xi) of the transcendental-equation state space."""

    alpha: float
    tau: float
    xi: float = 0.0

    def __post_init__(self):
        if not (0.0 < self.alpha < 1.0):
            raise DomainError("TranscendParams requires 0 < alpha < 1")
        if not (0.0 < self.tau < 2.0):
            raise DomainError("TranscendParams requires 0 < tau < 2")


def _ts_array(alpha, tau, xi):
    """sin(pi(1+a-tau-i xi))/sin(pi(1+2a-tau-i xi)), overflow-free.

    Dividing numerator and denominator by cosh(pi xi) leaves a tanh form
    that is exact for all real xi.
    """
    a1 = 1.0 + alpha - tau
    a2 = 1.0 + 2.0 * alpha - tau
    t = np.tanh(math.pi * np.asarray(xi, dtype=float))
    num = np.sin(math.pi * np.asarray(a1)) - 1j * np.cos(math.pi * np.asarray(a1)) * t
    den = np.sin(math.pi * np.asarray(a2)) - 1j * np.cos(math.pi * np.asarray(a2)) * t
    return num / den


def _tb_array(alpha, tau, xi):
    """(sin pi a / pi) * B(tau + 1 - 2a + i xi, 2a)."""
    sigma = np.asarray(tau, dtype=float) + 1.0 - 2.0 * np.asarray(alpha, dtype=float)
    z = sigma + 1j * np.asarray(xi, dtype=float)
    return np.sin(math.pi * np.asarray(alpha)) / math.pi * complex_beta(z, 2.0 * np.asarray(alpha))


def t_s(tp: TranscendParams) -> complex:
    """Sine-ratio side of the transcendental equation."""
    den_zero = tp.xi == 0.0 and abs(
        math.sin(math.pi * (1.0 + 2.0 * tp.alpha - tp.tau))
    ) < 1e-15
    if den_zero:
        raise PoleError("t_s pole: xi = 0 with tau - 2*alpha an integer")
    return complex(_ts_array(tp.alpha, tp.tau, tp.xi))


def t_b(tp: TranscendParams) -> complex:
    """Beta side of the transcendental equation; vanishes as |xi| -> inf."""
    if tp.tau + 1.0 - 2.0 * tp.alpha <= 0.0:
        raise PoleError("t_b needs tau + 1 - 2*alpha > 0")
    return complex(_tb_array(tp.alpha, tp.tau, tp.xi))


def _real_gamma(x: float) -> float:
    if abs(x - round(x)) < 1e-12 and x < 0.5:
        raise PoleError(f"gamma pole at {x}")
    return math.gamma(x)


def te_residual_zero(tau: float, alpha: float) -> float:
    """Residual of the frequency-zero equation
    Gamma(2a - tau) Gamma(tau + 1) sin(pi(a - tau)) = Gamma(2a) sin(pi a)."""
    lhs = (
        _real_gamma(2.0 * alpha - tau)
        * _real_gamma(tau + 1.0)
        * math.sin(math.pi * (alpha - tau))
    )
    return lhs - math.gamma(2.0 * alpha) * math.sin(math.pi * alpha)


def alpha_c(alpha: float, tol: float = 1e-12) -> float:
    """The critical smoothness offset: the unique root tau = 1 + alpha_c of
    the frequency-zero equation in (1, 2), returned as alpha_c in (0, alpha).

    Bisection on [1 + d, 1 + a - d] for a < 1/2 and [2a + d, 1 + a - d] for
    a >= 1/2, with d shrunk until the endpoint signs differ; existence and
    uniqueness of the sign change make the bracket safe.
    """
    if not (0.0 < alpha < 1.0):
        raise DomainError("alpha_c requires 0 < alpha < 1")
    if tol < 1e-12:
        tol = 1e-12
    left_base = 1.0 if alpha < 0.5 else 2.0 * alpha
    delta = 1e-3
    lo = hi = None
    for _ in range(40):
        lo_try = left_base + delta
        hi_try = 1.0 + alpha - delta
        if lo_try < hi_try:
            try:
                f_lo = te_residual_zero(lo_try, alpha)
                f_hi = te_residual_zero(hi_try, alpha)
            except PoleError:
                f_lo = f_hi = None
            if f_lo is not None and f_lo > 0.0 > f_hi:
                lo, hi = lo_try, hi_try
                break
        delta *= 0.5
    if lo is None:
        raise DomainError("failed to bracket the critical root")
    # bisect to float resolution: near alpha -> 1 the root hugs a gamma pole
    # where the residual slope is steep, and the requested tol alone would
    # leave a visible residual
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if te_residual_zero(mid, alpha) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi) - 1.0


def critical_s(alpha: float, p: float, tol: float = 1e-12) -> float:
    """The non-Fredholm smoothness value 1 + 1/p + alpha_c(alpha)."""
    return 1.0 + 1.0 / p + alpha_c(alpha, tol)


def arg_beta_series_residual(sigma: float, gamma: float, xi: float, n_terms: int) -> float:
    """Difference (mod 2 pi) between the arctan series for arg B(sigma+i xi, gamma)
    and the directly computed argument.

    The truncated sum is completed with the exact antiderivative of its
    integral tail, so the residual reflects the series identity rather than
    truncation.
    """
    if sigma <= 0.0 or gamma <= 0.0 or xi < 0.0:
        raise DomainError("arg_beta_series_residual requires sigma, gamma > 0 and xi >= 0")
    if xi == 0.0:
        return 0.0
    n = np.arange(n_terms, dtype=float)
    series = float(
        np.sum(np.arctan(xi / (sigma + gamma + n)) - np.arctan(xi / (sigma + n)))
    )

    def antideriv(base: float, t: float) -> float:
        u = base + t
        return u * math.atan2(xi, u) + 0.5 * xi * math.log(u * u + xi * xi)

    tail = antideriv(sigma, float(n_terms)) - antideriv(sigma + gamma, float(n_terms))
    direct = float(np.angle(complex_beta(complex(sigma, xi), gamma)))
    diff = (series + tail) - direct
    return abs((diff + math.pi) % (2.0 * math.pi) - math.pi)


def _midgrid(lo: float, hi: float, n: int) -> np.ndarray:
    return lo + (np.arange(n) + 0.5) * (hi - lo) / n


_XI_FAR = 10.0


def _scan_te2(density: int):
    alphas = _midgrid(0.0, 0.5, density)
    xis = _midgrid(0.25, _XI_FAR, density)
    two_over_pi = 2.0 / math.pi
    worst = math.inf
    arg = None
    for a in alphas:
        taus = _midgrid(a, 1.0, density)
        ts = _ts_array(a, taus[:, None], xis[None, :])
        tb = _tb_array(a, taus[:, None], xis[None, :])
        m = np.minimum(np.abs(ts) - two_over_pi, two_over_pi - np.abs(tb))
        i = np.unravel_index(np.argmin(m), m.shape)
        if m[i] < worst:
            worst = float(m[i])
            arg = (float(a), float(taus[i[0]]), float(xis[i[1]]))
    return worst, arg, "alpha in (0,1/2), tau in [alpha,1), xi in [1/4,10]"


def _scan_te3(density: int):
    alphas = _midgrid(0.0, 0.5, density)
    xis = _midgrid(0.0, 0.25, density)
    worst = math.inf
    arg = None
    for a in alphas:
        taus = np.concatenate([_midgrid(a, 1.0, density), _midgrid(1.0 + a, 2.0, density)])
        ts = _ts_array(a, taus[:, None], xis[None, :])
        tb = _tb_array(a, taus[:, None], xis[None, :])
        line = -4.0 * a * xis[None, :]
        m = np.minimum(np.angle(tb) - line, line - np.angle(ts))
        i = np.unravel_index(np.argmin(m), m.shape)
        if m[i] < worst:
            worst = float(m[i])
            arg = (float(a), float(taus[i[0]]), float(xis[i[1]]))
    return worst, arg, "alpha in (0,1/2), tau in [alpha,1) or [1+alpha,2), xi in (0,1/4)"


def _scan_arg_separation(density: int, tau_window):
    """Common body of the argument-separation scans: margin is the smallest
    principal argument of t_s / t_b over the region."""
    alphas = _midgrid(0.0, tau_window.alpha_hi, density)
    xis = _midgrid(0.0, _XI_FAR, density)
    worst = math.inf
    arg = None
    for a in alphas:
        lo, hi = tau_window.bounds(a)
        if hi <= lo:
            continue
        taus = _midgrid(lo, hi, density)
        ts = _ts_array(a, taus[:, None], xis[None, :])
        tb = _tb_array(a, taus[:, None], xis[None, :])
        m = np.abs(np.angle(ts / tb))
        i = np.unravel_index(np.argmin(m), m.shape)
        if m[i] < worst:
            worst = float(m[i])
            arg = (float(a), float(taus[i[0]]), float(xis[i[1]]))
    return worst, arg


class _Te4Window:
    alpha_hi = 0.5

    @staticmethod
    def bounds(a):
        return 0.0, a


class _Te8Window:
    alpha_hi = 1.0

    @staticmethod
    def bounds(a):
        return 1.0, 1.0 + a


def _scan_te4(density: int):
    worst, arg = _scan_arg_separation(density, _Te4Window)
    return worst, arg, "alpha in (0,1/2), tau in (0,alpha), xi in (0,10]"


def _scan_te8(density: int):
    worst, arg = _scan_arg_separation(density, _Te8Window)
    return worst, arg, "alpha in (0,1), tau in (1,1+alpha), xi in (0,10]"


def _scan_te6(density: int):
    alphas = _midgrid(0.0, 1.0, density)
    xis = _midgrid(0.25, _XI_FAR, density)
    worst = math.inf
    arg = None
    for a in alphas:
        taus = _midgrid(1.0 + a, 2.0, density)
        ts = _ts_array(a, taus[:, None], xis[None, :])
        tb = _tb_array(a, taus[:, None], xis[None, :])
        m = np.abs(ts) - np.abs(tb)
        i = np.unravel_index(np.argmin(m), m.shape)
        if m[i] < worst:
            worst = float(m[i])
            arg = (float(a), float(taus[i[0]]), float(xis[i[1]]))
    return worst, arg, "alpha in (0,1), tau in [1+alpha,2), xi in [1/4,10]"


def _scan_te7(density: int):
    alphas = _midgrid(0.5, 1.0, density)
    xis = _midgrid(0.0, 0.25, density)
    half_pi = math.pi / 2.0
    worst = math.inf
    arg = None
    for a in alphas:
        taus = _midgrid(1.0 + a, 2.0, density)
        ts = _ts_array(a, taus[:, None], xis[None, :])
        tb = _tb_array(a, taus[:, None], xis[None, :])
        args_s = np.angle(ts)
        args_b = np.angle(tb)
        m = np.minimum.reduce([
            -half_pi - args_s,      # arg t_s <= -pi/2
            args_s + math.pi,       # arg t_s > -pi
            args_b + half_pi,       # arg t_b > -pi/2
            -args_b,                # arg t_b < 0
        ])
        i = np.unravel_index(np.argmin(m), m.shape)
        if m[i] < worst:
            worst = float(m[i])
            arg = (float(a), float(taus[i[0]]), float(xis[i[1]]))
    return worst, arg, "alpha in [1/2,1), tau in [1+alpha,2), xi in (0,1/4)"


SCAN_REGIONS = {
    "TE2": _scan_te2,
    "TE3": _scan_te3,
    "TE4": _scan_te4,
    "TE6": _scan_te6,
    "TE7": _scan_te7,
    "TE8": _scan_te8,
}


def inequality_scan(region: str, grid_density: int = 40) -> VerificationReport:
    """Evaluate one inequality estimate on a midpoint grid of its stated
    region; reports the minimum margin and where it occurred (violations are
    content, not errors)."""
    if grid_density < 20:
        raise DomainError("inequality_scan requires grid_density >= 20")
    try:
        scan = SCAN_REGIONS[region.upper()]
    except KeyError as exc:
        raise DomainError(f"unknown scan region {region!r}") from exc
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        margin, argmin, grid = scan(grid_density)
    return VerificationReport.from_margin(
        name=region.upper(),
        grid=f"{grid}, {grid_density} cells per axis (midpoints)",
        margin=margin,
        tolerance=0.0,
        argmin=argmin,
    )


def no_solution_certificate(regime: str, grid_density: int = 30,
                            alphas=(0.3, 0.5, 0.75)) -> VerificationReport:
    """Grid certificate that the two sides stay apart.

    LOW scans the full admissible cube and reports the smallest separation.
    HIGH scans (tau, xi) per alpha and passes when the grid minimum sits
    within one cell of the known touching point (xi = 0, tau = 1 + alpha_c).
    """
    if grid_density < 20:
        raise DomainError("no_solution_certificate requires grid_density >= 20")
    regime = regime.upper()
    if regime == "LOW":
        alphas_grid = _midgrid(0.0, 0.5, grid_density)
        xis = _midgrid(0.0, _XI_FAR, grid_density)
        worst = math.inf
        arg = None
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            for a in alphas_grid:
                taus = _midgrid(0.0, 1.0, grid_density)
                gap = np.abs(
                    _ts_array(a, taus[:, None], xis[None, :])
                    - _tb_array(a, taus[:, None], xis[None, :])
                )
                gap = np.where(np.isfinite(gap), gap, np.inf)
                i = np.unravel_index(np.argmin(gap), gap.shape)
                if gap[i] < worst:
                    worst = float(gap[i])
                    arg = (float(a), float(taus[i[0]]), float(xis[i[1]]))
        return VerificationReport.from_margin(
            name="NO_SOLUTION_LOW",
            grid=f"alpha x tau x xi midpoint grid, {grid_density}^3 cells",
            margin=worst,
            tolerance=1e-3,
            argmin=arg,
        )
    if regime == "HIGH":
        # the touching point sits exactly at xi = 0, so the frequency grid
        # keeps that row; the tau grid stays at cell midpoints
        taus = _midgrid(1.0, 2.0, grid_density)
        xis = np.linspace(0.0, _XI_FAR, grid_density)
        tau_cell = (2.0 - 1.0) / grid_density
        xi_cell = _XI_FAR / grid_density
        overall_min = math.inf
        arg = None
        localized = True
        details = []
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            for a in alphas:
                gap = np.abs(
                    _ts_array(a, taus[:, None], xis[None, :])
                    - _tb_array(a, taus[:, None], xis[None, :])
                )
                gap = np.where(np.isfinite(gap), gap, np.inf)
                i = np.unravel_index(np.argmin(gap), gap.shape)
                tau_star = 1.0 + alpha_c(a)
                ok = (abs(taus[i[0]] - tau_star) <= tau_cell
                      and xis[i[1]] <= xi_cell)
                localized &= ok
                details.append(f"alpha={a}: argmin (tau={taus[i[0]]:.4f}, xi={xis[i[1]]:.4f}) "
                               f"target tau={tau_star:.4f} ok={ok}")
                if gap[i] < overall_min:
                    overall_min = float(gap[i])
                    arg = (float(a), float(taus[i[0]]), float(xis[i[1]]))
        return VerificationReport(
            name="NO_SOLUTION_HIGH",
            grid=f"tau x xi midpoint grid, {grid_density}^2 cells per alpha; " + "; ".join(details),
            tolerance=0.0,
            min_margin=overall_min,
            argmin=arg,
            passed=localized,
        )
    raise DomainError(f"unknown regime {regime!r}")

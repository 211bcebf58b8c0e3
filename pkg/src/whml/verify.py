"""Named verification suites behind the command-line `verify` subcommand.

Each suite re-runs the module's dual-route and invariant checks at a
caller-chosen grid density and returns one VerificationReport per check.
The suites are independent and safe to run concurrently.
"""

from __future__ import annotations

import math

import numpy as np

from .gridfn import GridFunction
from .halfline import apply_fourier, apply_singular, quadratic_form, rl_integral
from .kernel import (
    KernelParams,
    bernstein_residual,
    kernel_m,
    kernel_m_oracle,
    killing_coefficient,
    symbol_identity_residual,
)
from .quadrature import quad
from .reports import VerificationReport
from .specfun import principal_power
from .symbols import (
    SpectralParams,
    c1p_inf,
    c2p_inf,
    loop_function,
    mellin_symbol_residual,
    sin_ratio_modulus,
    wh_c1,
    wh_c2,
)
from .transcend import (
    alpha_c,
    inequality_scan,
    no_solution_certificate,
    te_residual_zero,
)

__all__ = ["SUITES", "run_suite"]

_ALPHA_SET = (0.1, 0.25, 0.5, 0.75, 0.9)


def suite_kernel(density: int = 20) -> list:
    reports = []

    ys = np.geomspace(1e-3, 20.0, max(7, density // 2))
    worst = 0.0
    arg = None
    for a in _ALPHA_SET:
        k = KernelParams(a)
        for y in ys:
            rel = abs(kernel_m(y, k) - kernel_m_oracle(y, k)) / kernel_m(y, k)
            if rel > worst:
                worst, arg = rel, (a, float(y))
    reports.append(VerificationReport.from_residual(
        "kernel_dual_route", f"log-grid y in [1e-3, 20] x alpha set, {len(ys)} x 5",
        worst, 1e-8, arg))

    xis = np.linspace(0.0, 20.0, max(5, density // 4))
    worst = 0.0
    arg = None
    for a in _ALPHA_SET:
        k = KernelParams(a)
        for xi in xis:
            r = symbol_identity_residual(float(xi), k)
            if r > worst:
                worst, arg = r, (a, float(xi))
    reports.append(VerificationReport.from_residual(
        "symbol_identity", f"xi in [0, 20] x alpha set, {len(xis)} x 5",
        worst, 1e-5, arg))

    worst = max(bernstein_residual(3.0, KernelParams(0.6)),
                bernstein_residual(0.1, KernelParams(0.2)))
    reports.append(VerificationReport.from_residual(
        "bernstein_identity", "(x, alpha) in {(3, 0.6), (0.1, 0.2)}", worst, 1e-9))

    worst = 0.0
    for a in (0.6, 0.75, 0.9):
        k = KernelParams(a)
        c1a = a * 2.0 ** (2 * a) * math.gamma(a + 0.5) / (
            math.sqrt(math.pi) * math.gamma(1.0 - a))
        oracle = c1a * quad(lambda t: (1.0 + t) ** (-1.0 - 2.0 * a), 0.0, np.inf,
                            epsabs=1e-13, epsrel=1e-12)
        worst = max(worst, abs(killing_coefficient(k) - oracle))
    reports.append(VerificationReport.from_residual(
        "killing_coefficient", "alpha in {0.6, 0.75, 0.9}, tail quadrature at x=1",
        worst, 1e-8))
    return reports


def suite_operator(density: int = 20) -> list:
    reports = []
    n = max(2048, 64 * density)
    u = GridFunction.from_function(lambda x: x * x * math.exp(-x), 32.0, n)

    worst = 0.0
    arg = None
    for a in (0.25, 0.5, 0.75):
        k = KernelParams(a)
        au = apply_fourier(u, k)
        for x in (1.0, 3.0, 8.0):
            d = abs(apply_singular(u, x, k) - au(x))
            if d > worst:
                worst, arg = d, (a, x)
    reports.append(VerificationReport.from_residual(
        "operator_dual_route", f"x^2 e^-x on n={n}, probes x in (1,3,8) x alpha set",
        worst, 1e-3, arg))

    k = KernelParams(0.4)
    qf = quadratic_form(u, k)
    au = apply_fourier(u, k)
    ip = float(np.trapezoid(au.samples * u.samples, dx=u.h))
    riemann = float(np.sum(np.abs(u.samples) ** 2) * u.h)
    reports.append(VerificationReport.from_residual(
        "quadratic_form_consistency", f"x^2 e^-x on n={n} at alpha=0.4",
        abs(qf - ip), 1e-3))
    reports.append(VerificationReport.from_margin(
        "quadratic_form_positivity", "energy >= grid Riemann norm",
        qf - riemann, 0.0))

    un = GridFunction.from_function(lambda x: x * x * math.exp(-x), 8.0, 2048)
    inner_vals = [0.0] + [rl_integral(un, x, 0.3) for x in un.xs[1:-1]]
    inner_vals.append(inner_vals[-1])
    inner = GridFunction(np.asarray(inner_vals), un.h)
    resid = abs(rl_integral(inner, 0.8, 0.5) - rl_integral(un, 0.8, 0.8))
    reports.append(VerificationReport.from_residual(
        "fractional_semigroup", "I^0.3 I^0.5 = I^0.8 at x = 0.8", resid, 1e-6))
    return reports


def suite_symbols(density: int = 20) -> list:
    reports = []
    sp = SpectralParams(0.3, 2.0, 1.2)

    worst = max(
        abs(c1p_inf(30.0, sp) - wh_c1(-math.inf, sp)),
        abs(c1p_inf(-30.0, sp) - wh_c1(math.inf, sp)),
        abs(c2p_inf(30.0, sp) - wh_c2(-math.inf, sp)),
        abs(c2p_inf(-30.0, sp) - wh_c2(math.inf, sp)),
    )
    reports.append(VerificationReport.from_residual(
        "junction_limits", "|xi| = 30 against the one-sided limits", worst, 1e-8))

    worst = 0.0
    for p in (1.5, 2.5, 3.0, 4.0):
        centre = 1j / math.tan(2.0 * math.pi / p)
        radius = 1.0 / abs(math.sin(2.0 * math.pi / p))
        for xi in np.linspace(-3.0, 3.0, density):
            dev = abs(abs(loop_function(-1.0, 1.0, float(xi), p) - centre) - radius)
            worst = max(worst, dev)
    reports.append(VerificationReport.from_residual(
        "loop_arc_invariant", "endpoints -1/+1, p in {1.5, 2.5, 3, 4}", worst, 1e-10))

    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        a, b, xi = rng.uniform(0.1, 0.9), rng.uniform(0.55, 0.95), rng.uniform(-3, 3)
        import cmath
        direct = abs(cmath.sin(math.pi * (a - 1j * xi)) / cmath.sin(math.pi * (b - 1j * xi)))
        worst = max(worst, abs(sin_ratio_modulus(a, b, xi) - direct))
    reports.append(VerificationReport.from_residual(
        "sin_ratio_closed_form", "100 random (a, b, xi)", worst, 1e-12))

    worst = 0.0
    arg = None
    for _ in range(20):
        gamma = rng.uniform(0.2, 1.8)
        p = rng.uniform(1.2, 5.0)
        rho = rng.uniform(1.0 / p - 0.9, 1.5)
        y = rng.uniform(0.0, 4.0)
        r = mellin_symbol_residual(gamma, rho, y, p)
        if r > worst:
            worst, arg = r, (gamma, rho, y, p)
    reports.append(VerificationReport.from_residual(
        "mellin_symbol", "20 random (gamma, rho, y, p) samples", worst, 1e-7, arg))

    worst = 0.0
    for _ in range(100):
        xi = rng.uniform(-50.0, 50.0)
        a, s, m = sp.alpha, sp.s, sp.m
        composed = (
            principal_power(1.0 + xi * xi, a)
            * principal_power(complex(xi, -1.0), s - 2.0 * a - m)
            * principal_power(complex(xi, 1.0), m - s)
        )
        worst = max(worst, abs(wh_c1(xi, sp) - composed))
    reports.append(VerificationReport.from_residual(
        "c1_factorisation", "100 random xi in [-50, 50]", worst, 1e-12))
    return reports


def suite_transcend(density: int = 20) -> list:
    reports = [inequality_scan(region, max(20, density))
               for region in ("TE2", "TE3", "TE4", "TE6", "TE7", "TE8")]
    reports.append(no_solution_certificate("LOW", max(20, density)))
    reports.append(no_solution_certificate("HIGH", max(20, density)))

    worst = 0.0
    for a in np.linspace(0.05, 0.95, max(10, density)):
        rel = abs(te_residual_zero(1.0 + alpha_c(float(a)), float(a)))
        rel /= abs(math.gamma(2.0 * a) * math.sin(math.pi * a))
        worst = max(worst, rel)
    reports.append(VerificationReport.from_residual(
        "critical_root_residual", "alpha grid against the zero-frequency equation",
        worst, 1e-10))
    return reports


SUITES = {
    "kernel": suite_kernel,
    "operator": suite_operator,
    "symbols": suite_symbols,
    "transcend": suite_transcend,
}


def run_suite(name: str, density: int = 20) -> list:
    return SUITES[name](density)

"""Assembly of the generalized-symbol loop, its minimum modulus, and the
winding number that carries the Fredholm index.

The loop lives on a six-segment closed contour.  Four segments are exact
(constants or the unit-modulus factor alone); the boundary segment mixes the
loop-function interpolants with the Mellin factor.  Each curved segment is
compactified through xi = tan(pi (t - 1/2)) so the infinite junctions are
honest endpoint limits, then refined until adjacent phase increments are
small enough for branch-safe unwrapping.
"""

from __future__ import annotations

import cmath
import enum
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, NotFredholmError, ResolutionError
from .symbols import (
    SpectralParams,
    c1p_inf,
    c2p_inf,
    gamma1_mellin_term,
    wh_c1,
)

__all__ = [
    "Segment",
    "ContourPoint",
    "SymbolLoop",
    "eval_segment",
    "build_loop",
    "build_validation_loop",
    "min_modulus",
    "winding_number",
    "fredholm_index",
    "export_loop",
    "FREDHOLM_TOL",
]

FREDHOLM_TOL = 1e-4

_MAX_POINTS = 10 ** 6
_PHASE_CAP = math.pi / 2.0
_JUNCTION_TOL = 1e-6
_XI_SATURATION = 1e8


class Segment(enum.Enum):
    G1 = "G1"
    G2P = "G2P"
    G3P = "G3P"
    G4 = "G4"
    G3M = "G3M"
    G2M = "G2M"


# traversal order of the closed contour
SEGMENT_ORDER = (
    Segment.G1,
    Segment.G2P,
    Segment.G3P,
    Segment.G4,
    Segment.G3M,
    Segment.G2M,
)


@dataclass(frozen=True)
class ContourPoint:
    segment: Segment
    t: float
    value: complex


@dataclass(frozen=True)
class SymbolLoop:
    """Ordered closed polyline of symbol values with its continuity audit."""

    points: tuple
    closure_gap: float
    junction_gaps: tuple
    # segment evaluators kept for sub-grid polish; not part of identity
    segment_eval: dict = field(default=None, repr=False, compare=False)

    def values(self) -> np.ndarray:
        return np.array([pt.value for pt in self.points])


def _xi_line(t: float) -> float:
    """Compactified coordinate for a full line, t in [0, 1] -> xi."""
    if t <= 0.0:
        return -math.inf
    if t >= 1.0:
        return math.inf
    return math.tan(math.pi * (t - 0.5))


def _lambda_down(t: float) -> float:
    """Half-line coordinate running from +inf (t=0) to 0 (t=1)."""
    if t <= 0.0:
        return math.inf
    if t >= 1.0:
        return 0.0
    return math.tan(math.pi * (1.0 - t) / 2.0)


def _lambda_up(t: float) -> float:
    """Half-line coordinate running from 0 (t=0) to +inf (t=1)."""
    return _lambda_down(1.0 - t)


def _boundary_value(xi: float, sp: SpectralParams) -> complex:
    """Symbol on the boundary segment: c1p + (mellin term) * c2p."""
    if xi == math.inf or xi > _XI_SATURATION:
        return wh_c1(-math.inf, sp)
    if xi == -math.inf or xi < -_XI_SATURATION:
        return wh_c1(math.inf, sp)
    return c1p_inf(xi, sp) + gamma1_mellin_term(xi, sp) * c2p_inf(xi, sp)


def eval_segment(seg: Segment, t: float, sp: SpectralParams) -> complex:
    """Value of the generalized symbol at parameter t of one segment."""
    if not (0.0 <= t <= 1.0):
        raise DomainError("segment parameter must lie in [0, 1]")
    if seg is Segment.G1:
        return _boundary_value(_xi_line(t), sp)
    if seg is Segment.G2P:
        return wh_c1(-math.inf, sp)
    if seg is Segment.G3P:
        lam = _lambda_down(t)
        return wh_c1(-lam, sp) if lam < _XI_SATURATION else wh_c1(-math.inf, sp)
    if seg is Segment.G4:
        return wh_c1(0.0, sp)
    if seg is Segment.G3M:
        lam = _lambda_up(t)
        return wh_c1(lam, sp) if lam < _XI_SATURATION else wh_c1(math.inf, sp)
    if seg is Segment.G2M:
        return wh_c1(math.inf, sp)
    raise DomainError(f"unknown segment {seg!r}")


def _segment_functions(sp: SpectralParams) -> dict:
    return {seg: (lambda t, s=seg: eval_segment(s, t, sp)) for seg in SEGMENT_ORDER}


def _validation_functions(n: int) -> dict:
    """Segment maps for the rational test symbol (xi+i)^n (xi-i)^(-n).

    Its two one-sided limits coincide, so the boundary and multiplier
    segments are constant and the whole loop reduces to the unit-circle
    curve, traversed clockwise n times.
    """

    def c(xi: float) -> complex:
        if math.isinf(xi):
            return 1.0 + 0j
        z = complex(xi, 1.0) / complex(xi, -1.0)
        return z ** n

    return {
        Segment.G1: lambda t: 1.0 + 0j,
        Segment.G2P: lambda t: 1.0 + 0j,
        Segment.G3P: lambda t: c(-_lambda_down(t)),
        Segment.G4: lambda t: c(0.0),
        Segment.G3M: lambda t: c(_lambda_up(t)),
        Segment.G2M: lambda t: 1.0 + 0j,
    }


def _assemble(seg_funcs: dict, n_base: int) -> SymbolLoop:
    if n_base < 64:
        raise DomainError("build_loop requires n_base >= 64")
    counts = {
        Segment.G1: n_base,
        Segment.G2P: max(2, n_base // 8),
        Segment.G3P: n_base,
        Segment.G4: max(2, n_base // 8),
        Segment.G3M: n_base,
        Segment.G2M: max(2, n_base // 8),
    }
    per_segment = {}
    total = 0
    for seg in SEGMENT_ORDER:
        f = seg_funcs[seg]
        ts = list(np.linspace(0.0, 1.0, counts[seg]))
        vals = [f(t) for t in ts]
        # adaptive refinement: insert midpoints until phase increments are
        # branch-safe (or the budget runs out)
        changed = True
        while changed:
            changed = False
            i = 0
            while i < len(ts) - 1:
                v0, v1 = vals[i], vals[i + 1]
                if v0 != 0 and v1 != 0:
                    dphi = abs(cmath.phase(v1 / v0))
                else:
                    dphi = math.pi
                gap = ts[i + 1] - ts[i]
                if dphi >= _PHASE_CAP and gap > 1e-12:
                    tm = 0.5 * (ts[i] + ts[i + 1])
                    ts.insert(i + 1, tm)
                    vals.insert(i + 1, f(tm))
                    total += 1
                    changed = True
                    if total + sum(counts.values()) > _MAX_POINTS:
                        raise ResolutionError(
                            "phase refinement exhausted the point budget; "
                            "the loop may pass through the origin"
                        )
                else:
                    i += 1
        per_segment[seg] = (ts, vals)
        total += counts[seg]

    points = []
    junction_gaps = []
    for idx, seg in enumerate(SEGMENT_ORDER):
        ts, vals = per_segment[seg]
        nxt = SEGMENT_ORDER[(idx + 1) % len(SEGMENT_ORDER)]
        gap = abs(vals[-1] - per_segment[nxt][1][0])
        junction_gaps.append(gap)
        points.extend(ContourPoint(seg, t, v) for t, v in zip(ts, vals))
    closure_gap = abs(points[-1].value - points[0].value)

    if any(g > _JUNCTION_TOL for g in junction_gaps):
        raise ResolutionError(
            f"junction gaps {junction_gaps} exceed {_JUNCTION_TOL}"
        )
    return SymbolLoop(tuple(points), closure_gap, tuple(junction_gaps), seg_funcs)


def build_loop(sp: SpectralParams, n_base: int = 256) -> SymbolLoop:
    """Assemble and refine the generalized-symbol loop for one parameter set."""
    return _assemble(_segment_functions(sp), n_base)


def build_validation_loop(n: int, n_base: int = 256) -> SymbolLoop:
    """Loop of the rational validation symbol with known winding -n."""
    if n < 1:
        raise DomainError("validation symbol order must be >= 1")
    return _assemble(_validation_functions(n), n_base)


def min_modulus(loop: SymbolLoop) -> float:
    """Minimum |value| over the refined loop, polished by a golden-section
    search inside the bracketing parameter interval of the discrete argmin."""
    pts = loop.points
    mods = np.abs(loop.values())
    i = int(np.argmin(mods))
    best = float(mods[i])

    seg = pts[i].segment
    left = pts[i - 1] if i > 0 and pts[i - 1].segment is seg else pts[i]
    right = pts[i + 1] if i + 1 < len(pts) and pts[i + 1].segment is seg else pts[i]
    a, b = left.t, right.t
    if b <= a:
        return best

    # polish by re-evaluating along the same segment when evaluators exist
    f = loop.segment_eval.get(seg) if loop.segment_eval else None
    if f is None:
        return best

    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = b - invphi * (b - a)
    x2 = a + invphi * (b - a)
    f1, f2 = abs(f(x1)), abs(f(x2))
    for _ in range(60):
        if f1 < f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - invphi * (b - a)
            f1 = abs(f(x1))
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + invphi * (b - a)
            f2 = abs(f(x2))
        if b - a < 1e-14:
            break
    return min(best, f1, f2)


def winding_number(loop: SymbolLoop, fredholm_tol: float = FREDHOLM_TOL) -> int:
    """Winding of the loop about the origin from unwrapped phase increments.

    Requires the loop to stay away from the origin (min modulus above the
    Fredholm tolerance); the accumulated phase must land on an integer
    multiple of 2 pi to within 1 percent.
    """
    if min_modulus(loop) <= fredholm_tol:
        raise NotFredholmError(
            f"loop minimum modulus is below {fredholm_tol}; winding undefined"
        )
    vals = loop.values()
    closed = np.append(vals, vals[0])
    increments = np.angle(closed[1:] / closed[:-1])
    total = float(np.sum(increments)) / (2.0 * math.pi)
    rounded = round(total)
    if abs(total - rounded) > 0.01:
        raise ResolutionError(
            f"accumulated phase {total} is not within 0.01 of an integer"
        )
    return int(rounded)


def fredholm_index(loop: SymbolLoop, fredholm_tol: float = FREDHOLM_TOL) -> int:
    """Index of the symbol's operator on the full half-line space:
    minus the winding number."""
    return -winding_number(loop, fredholm_tol)


def export_loop(loop: SymbolLoop, fmt: str = "csv") -> bytes:
    """Serialize the loop: CSV columns segment,t,re,im or an SVG polyline
    with a dashed unit-circle reference ring."""
    if not loop.points:
        raise DomainError("cannot export an empty loop")
    fmt = fmt.lower()
    if fmt == "csv":
        buf = io.StringIO()
        buf.write("segment,t,re,im\n")
        for pt in loop.points:
            buf.write(
                f"{pt.segment.value},{pt.t:.17g},{pt.value.real:.17g},{pt.value.imag:.17g}\n"
            )
        return buf.getvalue().encode("utf-8")
    if fmt == "svg":
        vals = list(loop.values())
        vals.append(vals[0])  # closed polyline
        pts = " ".join(f"{v.real:.6f},{-v.imag:.6f}" for v in vals)
        svg = (
            '<svg xmlns="http://www.w3.org/2000/svg" '
            'viewBox="-1.6 -1.6 3.2 3.2">\n'
            '  <circle cx="0" cy="0" r="1" fill="none" stroke="#999" '
            'stroke-width="0.01" stroke-dasharray="0.05,0.05"/>\n'
            f'  <polyline points="{pts}" fill="none" stroke="#1f4e9c" '
            'stroke-width="0.012"/>\n'
            "</svg>\n"
        )
        return svg.encode("utf-8")
    raise DomainError(f"unknown export format {fmt!r}")

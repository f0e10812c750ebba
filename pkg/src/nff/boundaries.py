"""Near/far-field boundary evaluators and the threshold-crossing search.

Six boundary notions are implemented, each mapping an array geometry (and,
for most, a test-line direction) to a single radius in wavelengths:

``qr``
    Quasi-Rayleigh distance ``2 * D^2 / wavelength`` from the largest
    array dimension ``D``.
``ar``
    First radius where the worst-case element path-length excess ``Phi``
    (in radians of phase) drops to ``pi/8``.
``up``
    First radius where the element power-uniformity ratio ``Gamma``
    reaches a threshold in (0, 1).
``en``
    Last radius where the focusing-over-steering gain ratio ``Psi`` is at
    or above a threshold > 1.
``ep``
    Last radius where the normalized mean inverse-square power ``Upsilon``
    is at or below a threshold.
``wc``
    First radius beyond which the worst-case single-element mismatch
    ``Xi`` stays below a threshold everywhere (suffix supremum).

All searches share a log-grid bracketing pass plus geometric bisection,
refined to 1e-6 relative.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import minimize_scalar

from .core import (
    DEFAULT_CONTEXT,
    Direction,
    SphericalPoint,
    WaveContext,
    stable_excess_path,
    unit_vector,
)
from .sources import SINGULARITY_RADIUS, ArrayGeometry, ff_precoder, nf_precoder

#: Default search bracket (wavelengths) and log-grid density.
DEFAULT_BRACKET = (1.0e-3, 1.0e6)
DEFAULT_POINTS_PER_DECADE = 400

#: Relative refinement tolerance of every bisected boundary value.
REFINE_REL_TOL = 1e-6

#: Fixed phase threshold of the ``ar`` boundary, radians.
AR_THRESHOLD = math.pi / 8.0

#: Conventional thresholds applied when a :class:`BoundarySpec` omits one.
DEFAULT_THRESHOLDS = {"up": 0.9, "en": 1.05, "ep": 0.99, "wc": 0.001}

#: Dimensionless ``wc`` thresholds are defined relative to a reference
#: mismatch amplitude of ``1 / 0.0304`` (about 32.9 per wavelength);
#: :func:`xi_worst_mismatch` itself returns a raw amplitude in units of
#: one over length, so thresholds are scaled by this factor before the
#: comparison.
WC_THRESHOLD_SCALE = 0.0304

_KINDS = ("qr", "ar", "up", "en", "ep", "wc")

STATUS_FOUND = "found"
STATUS_UNBOUNDED = "unbounded"
STATUS_NOT_FOUND = "not-found"


class UndefinedProjection(ValueError):
    """Raised when the uniform-power ratio mixes projection signs."""


class TailNotMonotone(RuntimeError):
    """Raised when the worst-case mismatch tail fails its decay check."""


@dataclass(frozen=True)
class BoundarySpec:
    """A boundary kind plus its threshold.

    ``threshold`` may be omitted: ``ar`` is fixed at pi/8, ``qr`` takes no
    threshold, and the remaining kinds fall back to the conventional
    values in :data:`DEFAULT_THRESHOLDS`.
    """

    kind: str
    threshold: float | None = None

    def __post_init__(self) -> None:
        kind = str(self.kind).lower()
        if kind not in _KINDS:
            raise ValueError(f"unknown boundary kind {self.kind!r}; expected one of {_KINDS}")
        object.__setattr__(self, "kind", kind)
        th = self.threshold
        if kind == "qr":
            if th is not None:
                raise ValueError("the qr boundary takes no threshold")
            return
        if kind == "ar":
            if th is None:
                th = AR_THRESHOLD
            elif not math.isclose(th, AR_THRESHOLD, rel_tol=1e-12):
                raise ValueError("the ar boundary threshold is fixed at pi/8")
        elif th is None:
            th = DEFAULT_THRESHOLDS[kind]
        th = float(th)
        if kind == "up" and not (0.0 < th < 1.0):
            raise ValueError(f"up threshold must lie in (0, 1), got {th!r}")
        if kind == "en" and not th > 1.0:
            raise ValueError(f"en threshold must exceed 1, got {th!r}")
        if kind in ("ep", "wc") and not th > 0.0:
            raise ValueError(f"{kind} threshold must be positive, got {th!r}")
        object.__setattr__(self, "threshold", th)


@dataclass(frozen=True)
class BoundaryResult:
    """Outcome of one boundary search.

    ``status`` is ``"found"`` (with ``value`` in wavelengths),
    ``"unbounded"`` (the defining set extends past the bracket) or
    ``"not-found"`` (the defining set is empty within the bracket).
    ``crossings`` counts threshold transitions seen on the scan grid, and
    ``degenerate`` marks results pinned at the bracket edge (for example a
    single-element array, whose phase excess is identically zero).
    """

    status: str
    value: float | None
    bracket: tuple[float, float]
    crossings: int
    degenerate: bool = False


# ---------------------------------------------------------------------------
# pointwise evaluators


def phi_excess(
    geometry: ArrayGeometry,
    point: SphericalPoint,
    ctx: WaveContext = DEFAULT_CONTEXT,
) -> float:
    """Worst-case element phase excess, radians.

    ``Phi = max_n k * (|r - r_n| - r + rhat . r_n)``, evaluated through
    :func:`nff.core.stable_excess_path` so large radii do not cancel.
    Nonnegative by the triangle inequality.
    """
    if point.r <= 0.0:
        raise ValueError("phase excess is undefined at r = 0")
    rhat = unit_vector(point.direction)
    excess = stable_excess_path(point.r, rhat, geometry.positions)
    t = geometry.positions @ rhat
    return max(float(np.max(excess + t)) * ctx.wavenumber, 0.0)


def gamma_uniform_power(geometry: ArrayGeometry, point: SphericalPoint) -> float:
    """Uniformity ratio of per-element projected power factors.

    ``Gamma = min_n g_n / max_n g_n`` with
    ``g_n = (r - r_n) . nhat / |r - r_n|^3``.  When the projection onto
    the boresight vanishes identically (a test line inside the array
    plane), the common projection factor cancels and the ratio is
    evaluated with ``g_n = 1 / |r - r_n|^3``.

    Raises
    ------
    UndefinedProjection
        If the projections carry mixed signs, where the ratio loses
        meaning.
    """
    cart = point.to_cartesian()
    rvec = cart - geometry.positions
    dist = np.linalg.norm(rvec, axis=1)
    if np.any(dist <= SINGULARITY_RADIUS):
        raise ValueError("gamma is singular on an element position")
    proj = rvec @ geometry.boresight
    tol = 1e-9 * max(1.0, point.r)
    if np.all(np.abs(proj) <= tol):
        g = 1.0 / dist**3
    else:
        if np.any(proj > tol) and np.any(proj < -tol):
            raise UndefinedProjection(
                "boresight projections change sign along the element set; "
                "the uniform-power ratio is undefined here"
            )
        g = np.abs(proj) / dist**3
    top = float(np.max(g))
    if top == 0.0:
        return 0.0
    return float(np.min(g)) / top


def psi_gain_ratio(
    geometry: ArrayGeometry,
    point: SphericalPoint,
    direction: Direction,
    ctx: WaveContext = DEFAULT_CONTEXT,
) -> float:
    """Focusing-over-steering array gain ratio at a point.

    ``Psi = |h . w_focus| / |h . w_steer|`` with channel entries
    ``h_n = exp(-j k |r - r_n|) / |r - r_n|``, focusing weights matched to
    the point and steering weights matched to ``direction``.  At least 1
    by the triangle inequality (the focusing weights align every term).
    """
    cart = point.to_cartesian()
    dist = np.linalg.norm(cart - geometry.positions, axis=1)
    if np.any(dist <= SINGULARITY_RADIUS):
        raise ValueError("psi is singular on an element position")
    h = np.exp(-1j * ctx.wavenumber * dist) / dist
    num = abs(h @ nf_precoder(geometry, cart, ctx))
    den = abs(h @ ff_precoder(geometry, direction, ctx))
    if den == 0.0:
        return math.inf
    return num / den


def upsilon_power(geometry: ArrayGeometry, point: SphericalPoint) -> float:
    """Mean inverse-square element distance, normalized by ``1/r^2``.

    ``Upsilon = (r^2 / N) * sum_n 1 / |r - r_n|^2``; equals 1 when every
    element sits at the reference point.
    """
    cart = point.to_cartesian()
    dist2 = np.sum((cart - geometry.positions) ** 2, axis=1)
    if np.any(dist2 <= SINGULARITY_RADIUS**2):
        raise ValueError("upsilon is singular on an element position")
    return float(point.r**2 / geometry.n * np.sum(1.0 / dist2))


# ---------------------------------------------------------------------------
# worst-case element mismatch


_XI_S_GRID = np.linspace(-1.0, 1.0, 2001)
_XI_SPHERE_POINTS = 20001


def _collinear_offsets(geometry: ArrayGeometry) -> tuple[np.ndarray, np.ndarray] | None:
    """Axis and signed offsets if the elements lie on one line, else None."""
    pos = geometry.positions
    _, sv, vt = np.linalg.svd(pos, full_matrices=False)
    axis = vt[0]
    y = pos @ axis
    resid = float(np.linalg.norm(pos - np.outer(y, axis)))
    if resid <= 1e-12 * max(1.0, float(np.max(np.abs(y))) if y.size else 1.0):
        return axis, y
    return None


def _fibonacci_sphere(n: int) -> np.ndarray:
    """Near-uniform unit-sphere sample, shape ``(n, 3)``."""
    i = np.arange(n)
    z = 1.0 - (2.0 * i + 1.0) / n
    azim = i * (math.pi * (3.0 - math.sqrt(5.0)))
    s = np.sqrt(np.maximum(1.0 - z * z, 0.0))
    return np.column_stack([s * np.cos(azim), s * np.sin(azim), z])


def _xi_element_scalar(y_n: float, s: float, r: float, k: float) -> float:
    """Mismatch of one collinear element at one line-projection value."""
    d = math.sqrt(r * r - 2.0 * r * s * y_n + y_n * y_n)
    return abs(cmath.exp(-1j * k * d) / d - cmath.exp(-1j * k * (r - s * y_n)) / r)


def _xi_collinear(y: np.ndarray, r: float, k: float, refine: bool = True) -> float:
    """Worst-case mismatch over the sphere, reduced to 1-D.

    For collinear elements both distances depend on the sphere direction
    only through its projection ``s`` onto the array axis, so the inner
    maximization runs over ``s`` in [-1, 1]: a dense grid pass followed by
    bounded golden-section polishing of the leading elements.
    """
    s = _XI_S_GRID
    ys = np.outer(y, s)
    d = np.sqrt(r * r - 2.0 * r * ys + (y * y)[:, None])
    g = np.abs(np.exp(-1j * k * d) / d - np.exp(-1j * k * (r - ys)) / r)
    best = float(g.max())
    if not refine or best == 0.0:
        return best
    per_element = g.max(axis=1)
    for n in np.nonzero(per_element >= 0.999 * best)[0]:
        j = int(np.argmax(g[n]))
        lo, hi = s[max(j - 1, 0)], s[min(j + 1, s.size - 1)]
        if hi <= lo:
            continue
        y_n = float(y[n])
        res = minimize_scalar(
            lambda sv: -_xi_element_scalar(y_n, sv, r, k),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": 1e-8},
        )
        best = max(best, -float(res.fun))
    return best


def _xi_sphere(positions: np.ndarray, r: float, k: float) -> float:
    """Brute-force worst-case mismatch over a dense unit-sphere sample."""
    a = _fibonacci_sphere(_XI_SPHERE_POINTS)
    best = 0.0
    for pos in positions:
        d = np.linalg.norm(r * a - pos, axis=1)
        proj = a @ pos
        g = np.abs(np.exp(-1j * k * d) / d - np.exp(-1j * k * (r - proj)) / r)
        best = max(best, float(g.max()))
    return best


def xi_worst_mismatch(
    geometry: ArrayGeometry,
    r: float,
    ctx: WaveContext = DEFAULT_CONTEXT,
) -> float:
    """Worst-case single-element spherical-wave mismatch at radius ``r``.

    ``Xi(r) = max_n max_{|a|=1} | exp(-jk|ra - r_n|)/|ra - r_n|
    - exp(-jk(r - a.r_n))/r |`` - the largest absolute error, over all
    observation directions and elements, of replacing an element's
    spherical wave by its far-field phase/amplitude approximation.
    Direction-independent by construction.  Units: one over length.

    Raises
    ------
    ValueError
        If ``r`` does not exceed the largest element offset (the exact
        wave would be singular on the sphere of radius ``r``).
    """
    max_offset = float(np.max(np.linalg.norm(geometry.positions, axis=1)))
    if r <= max_offset:
        raise ValueError(
            f"xi needs r > max element offset ({max_offset:.6g}), got r = {r!r}"
        )
    k = ctx.wavenumber
    reduced = _collinear_offsets(geometry)
    if reduced is not None:
        return _xi_collinear(reduced[1], r, k)
    return _xi_sphere(geometry.positions, r, k)


# ---------------------------------------------------------------------------
# shared crossing search


def _log_grid(lo: float, hi: float, points_per_decade: int) -> np.ndarray:
    if not (0.0 < lo < hi):
        raise ValueError(f"need 0 < lo < hi for the search bracket, got ({lo!r}, {hi!r})")
    if points_per_decade < 100:
        raise ValueError(f"grid density must be >= 100 points/decade, got {points_per_decade}")
    n = int(round(math.log10(hi / lo) * points_per_decade)) + 1
    return np.geomspace(lo, hi, max(n, 2))


def _refine_crossing(
    scan: Callable[[float], float],
    lo: float,
    hi: float,
    threshold: float,
    mode: str,
) -> float:
    below = mode.endswith("below")
    ok_hi = mode.startswith("first")

    def ok(radius: float) -> bool:
        v = scan(radius)
        return v <= threshold if below else v >= threshold

    for _ in range(200):
        if hi / lo - 1.0 <= REFINE_REL_TOL:
            break
        mid = math.sqrt(lo * hi)
        if ok(mid) == ok_hi:
            hi = mid
        else:
            lo = mid
    return math.sqrt(lo * hi)


def _search_values(
    grid: np.ndarray,
    vals: np.ndarray,
    scan: Callable[[float], float],
    threshold: float,
    mode: str,
) -> BoundaryResult:
    if mode in ("first-below", "last-below"):
        ok = vals <= threshold
    elif mode in ("first-above", "last-above"):
        ok = vals >= threshold
    else:
        raise ValueError(f"unknown search mode {mode!r}")
    bracket = (float(grid[0]), float(grid[-1]))
    crossings = int(np.count_nonzero(ok[1:] != ok[:-1]))
    hits = np.nonzero(ok)[0]
    if hits.size == 0:
        return BoundaryResult(STATUS_NOT_FOUND, None, bracket, crossings)
    if mode.startswith("first"):
        i = int(hits[0])
        if i == 0:
            return BoundaryResult(STATUS_FOUND, bracket[0], bracket, crossings, degenerate=True)
        value = _refine_crossing(scan, float(grid[i - 1]), float(grid[i]), threshold, mode)
        return BoundaryResult(STATUS_FOUND, value, bracket, crossings)
    i = int(hits[-1])
    if i == grid.size - 1:
        return BoundaryResult(STATUS_UNBOUNDED, None, bracket, crossings)
    value = _refine_crossing(scan, float(grid[i]), float(grid[i + 1]), threshold, mode)
    return BoundaryResult(STATUS_FOUND, value, bracket, crossings)


def find_crossing(
    scan: Callable[[float], float],
    threshold: float,
    mode: str,
    bracket: tuple[float, float] = DEFAULT_BRACKET,
    points_per_decade: int = DEFAULT_POINTS_PER_DECADE,
) -> BoundaryResult:
    """Locate a threshold crossing of ``scan`` on a log grid.

    ``mode`` selects which crossing defines the boundary:
    ``"first-below"``/``"first-above"`` return the first grid entry into
    the target side (an infimum), ``"last-above"``/``"last-below"`` the
    last exit from it (a supremum).  A supremum still satisfied at the
    top of the bracket reports ``unbounded``; an empty target set reports
    ``not-found``.  Found values are bisection-refined to 1e-6 relative.
    """
    grid = _log_grid(bracket[0], bracket[1], points_per_decade)
    vals = np.array([scan(float(r)) for r in grid])
    return _search_values(grid, vals, scan, threshold, mode)


def find_first_below(scan, threshold, bracket=DEFAULT_BRACKET, points_per_decade=DEFAULT_POINTS_PER_DECADE):
    """First radius where ``scan`` drops to or below ``threshold``."""
    return find_crossing(scan, threshold, "first-below", bracket, points_per_decade)


def find_first_above(scan, threshold, bracket=DEFAULT_BRACKET, points_per_decade=DEFAULT_POINTS_PER_DECADE):
    """First radius where ``scan`` rises to or above ``threshold``."""
    return find_crossing(scan, threshold, "first-above", bracket, points_per_decade)


def find_last_above(scan, threshold, bracket=DEFAULT_BRACKET, points_per_decade=DEFAULT_POINTS_PER_DECADE):
    """Last radius where ``scan`` is still at or above ``threshold``."""
    return find_crossing(scan, threshold, "last-above", bracket, points_per_decade)


def find_last_below(scan, threshold, bracket=DEFAULT_BRACKET, points_per_decade=DEFAULT_POINTS_PER_DECADE):
    """Last radius where ``scan`` is still at or below ``threshold``."""
    return find_crossing(scan, threshold, "last-below", bracket, points_per_decade)


# ---------------------------------------------------------------------------
# boundary operations


def quasi_rayleigh(span: float, ctx: WaveContext = DEFAULT_CONTEXT) -> float:
    """Quasi-Rayleigh distance ``2 * span^2 / wavelength``."""
    if span < 0.0:
        raise ValueError(f"span must be nonnegative, got {span!r}")
    return 2.0 * span * span / ctx.wavelength


def d_ar(
    geometry: ArrayGeometry,
    direction: Direction,
    ctx: WaveContext = DEFAULT_CONTEXT,
    threshold: float = AR_THRESHOLD,
    *,
    bracket: tuple[float, float] = DEFAULT_BRACKET,
    points_per_decade: int = DEFAULT_POINTS_PER_DECADE,
) -> BoundaryResult:
    """First radius where the phase excess ``Phi`` falls to ``pi/8``."""

    def scan(r: float) -> float:
        return phi_excess(geometry, SphericalPoint(r, direction), ctx)

    return find_crossing(scan, threshold, "first-below", bracket, points_per_decade)


def d_up(
    geometry: ArrayGeometry,
    direction: Direction,
    ctx: WaveContext = DEFAULT_CONTEXT,
    threshold: float = DEFAULT_THRESHOLDS["up"],
    *,
    bracket: tuple[float, float] = DEFAULT_BRACKET,
    points_per_decade: int = DEFAULT_POINTS_PER_DECADE,
) -> BoundaryResult:
    """First radius where the power-uniformity ratio reaches ``threshold``."""
    if not (0.0 < threshold < 1.0):
        raise ValueError(f"up threshold must lie in (0, 1), got {threshold!r}")

    def scan(r: float) -> float:
        return gamma_uniform_power(geometry, SphericalPoint(r, direction))

    return find_crossing(scan, threshold, "first-above", bracket, points_per_decade)


def d_en(
    geometry: ArrayGeometry,
    direction: Direction,
    ctx: WaveContext = DEFAULT_CONTEXT,
    threshold: float = DEFAULT_THRESHOLDS["en"],
    *,
    bracket: tuple[float, float] = DEFAULT_BRACKET,
    points_per_decade: int = DEFAULT_POINTS_PER_DECADE,
) -> BoundaryResult:
    """Last radius where the focusing gain ratio is at least ``threshold``."""
    if not threshold > 1.0:
        raise ValueError(f"en threshold must exceed 1, got {threshold!r}")

    def scan(r: float) -> float:
        return psi_gain_ratio(geometry, SphericalPoint(r, direction), direction, ctx)

    return find_crossing(scan, threshold, "last-above", bracket, points_per_decade)


def d_ep(
    geometry: ArrayGeometry,
    direction: Direction,
    ctx: WaveContext = DEFAULT_CONTEXT,
    threshold: float = DEFAULT_THRESHOLDS["ep"],
    *,
    bracket: tuple[float, float] = DEFAULT_BRACKET,
    points_per_decade: int = DEFAULT_POINTS_PER_DECADE,
) -> BoundaryResult:
    """Last radius where the normalized power ratio is at most ``threshold``."""
    if not threshold > 0.0:
        raise ValueError(f"ep threshold must be positive, got {threshold!r}")

    def scan(r: float) -> float:
        return upsilon_power(geometry, SphericalPoint(r, direction))

    return find_crossing(scan, threshold, "last-below", bracket, points_per_decade)


_ENVELOPE_CACHE: dict[tuple, tuple[np.ndarray, np.ndarray]] = {}


def _xi_scan_samples(
    geometry: ArrayGeometry,
    ctx: WaveContext,
    bracket: tuple[float, float],
    points_per_decade: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Raw ``Xi`` samples on the search grid, cached per geometry."""
    max_offset = float(np.max(np.linalg.norm(geometry.positions, axis=1)))
    lo = max(bracket[0], max_offset * (1.0 + 1e-6))
    hi = bracket[1]
    key = (
        geometry.positions.tobytes(),
        ctx.wavenumber,
        lo,
        hi,
        points_per_decade,
    )
    cached = _ENVELOPE_CACHE.get(key)
    if cached is not None:
        return cached
    grid = _log_grid(lo, hi, points_per_decade)
    reduced = _collinear_offsets(geometry)
    k = ctx.wavenumber
    if reduced is not None:
        y = reduced[1]
        vals = np.array([_xi_collinear(y, float(r), k) for r in grid])
    else:
        vals = np.array([_xi_sphere(geometry.positions, float(r), k) for r in grid])
    _ENVELOPE_CACHE[key] = (grid, vals)
    return grid, vals


def d_wc(
    geometry: ArrayGeometry,
    ctx: WaveContext = DEFAULT_CONTEXT,
    threshold: float = DEFAULT_THRESHOLDS["wc"],
    *,
    bracket: tuple[float, float] = DEFAULT_BRACKET,
    points_per_decade: int = DEFAULT_POINTS_PER_DECADE,
) -> BoundaryResult:
    """First radius past which the worst-case mismatch stays below threshold.

    The suffix supremum ``sup_{r' >= r} Xi(r')`` is formed over the
    search grid; truncating it at the top of the bracket is only valid
    when ``Xi`` is decaying there, so the final decade is checked for
    monotone decrease first.  Direction-independent.

    Raises
    ------
    TailNotMonotone
        If ``Xi`` is not decreasing over the final decade of the bracket.
    """
    if not threshold > 0.0:
        raise ValueError(f"wc threshold must be positive, got {threshold!r}")
    th_eff = threshold * WC_THRESHOLD_SCALE
    grid, vals = _xi_scan_samples(geometry, ctx, bracket, points_per_decade)

    tail = vals[grid >= grid[-1] / 10.0]
    slack = 1e-9 * np.maximum(tail[:-1], tail[1:])
    if np.any(np.diff(tail) > slack):
        raise TailNotMonotone(
            "the worst-case mismatch is not decreasing over the final decade; "
            "the suffix supremum cannot be truncated at this bracket"
        )

    envelope = np.maximum.accumulate(vals[::-1])[::-1]
    bracket_used = (float(grid[0]), float(grid[-1]))
    crossings = int(np.count_nonzero((envelope <= th_eff)[1:] != (envelope <= th_eff)[:-1]))
    hits = np.nonzero(envelope <= th_eff)[0]
    if hits.size == 0:
        return BoundaryResult(STATUS_NOT_FOUND, None, bracket_used, crossings)
    i = int(hits[0])
    if i == 0:
        return BoundaryResult(STATUS_FOUND, bracket_used[0], bracket_used, crossings, degenerate=True)

    reduced = _collinear_offsets(geometry)
    k = ctx.wavenumber
    suffix = float(envelope[i])

    def env_scan(r: float) -> float:
        if reduced is not None:
            point_val = _xi_collinear(reduced[1], r, k)
        else:
            point_val = _xi_sphere(geometry.positions, r, k)
        return max(point_val, suffix)

    value = _refine_crossing(env_scan, float(grid[i - 1]), float(grid[i]), th_eff, "first-below")
    return BoundaryResult(STATUS_FOUND, value, bracket_used, crossings)


def evaluate_boundary(
    geometry: ArrayGeometry,
    spec: BoundarySpec,
    direction: Direction,
    ctx: WaveContext = DEFAULT_CONTEXT,
    *,
    bracket: tuple[float, float] = DEFAULT_BRACKET,
    points_per_decade: int = DEFAULT_POINTS_PER_DECADE,
) -> BoundaryResult:
    """Evaluate one :class:`BoundarySpec` for a geometry and direction."""
    kw = {"bracket": bracket, "points_per_decade": points_per_decade}
    if spec.kind == "qr":
        value = quasi_rayleigh(geometry.span, ctx)
        return BoundaryResult(
            STATUS_FOUND, value, (0.0, math.inf), 0, degenerate=geometry.span == 0.0
        )
    if spec.kind == "ar":
        return d_ar(geometry, direction, ctx, spec.threshold, **kw)
    if spec.kind == "up":
        return d_up(geometry, direction, ctx, spec.threshold, **kw)
    if spec.kind == "en":
        return d_en(geometry, direction, ctx, spec.threshold, **kw)
    if spec.kind == "ep":
        return d_ep(geometry, direction, ctx, spec.threshold, **kw)
    return d_wc(geometry, ctx, spec.threshold, **kw)

"""The field-mismatch metric and radial approximation-error sweeps.

True fields and their far-field approximation are compared through the
squared normalized Euclidean distance of impedance-normalized stacked
field vectors ``F = [E / sqrt(Z0); sqrt(Z0) * H]``:

    mu = ( ||F - F_FF|| / (||F|| + ||F_FF||) )^2,   mu = 0 if both vanish.

``mu`` lies in [0, 1], is symmetric, and is exactly invariant to scaling
all inputs by one complex factor.  Sweeping ``mu`` along a test line as a
function of radius gives the approximation error curve ``epsilon(r)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Protocol, runtime_checkable

import numpy as np

from .core import (
    DEFAULT_CONTEXT,
    FREE_SPACE_IMPEDANCE,
    Direction,
    SphericalPoint,
    WaveContext,
    unit_vector,
)
from .farfield import AngularFieldDistribution, analytic_angular_distribution, auxiliary_fields
from .sources import ArrayGeometry, FieldSingularity, array_field, ff_precoder, nf_precoder

#: Default radial sweep grid: 10^-1 .. 10^4 wavelengths, 100 points/decade.
DEFAULT_GRID_LO = 0.1
DEFAULT_GRID_HI = 1.0e4
DEFAULT_GRID_PPD = 100

#: Excitation scheme labels used in scenario metadata and file naming.
EXCITATION_STEER = "ff-bf"
EXCITATION_FOCUS = "nf-bf"
EXCITATION_NONE = "none"
_EXCITATIONS = (EXCITATION_STEER, EXCITATION_FOCUS, EXCITATION_NONE)


def _stacked_norm(e: np.ndarray, h: np.ndarray, z0: float) -> np.ndarray:
    """Norm of the impedance-normalized stacked 6-vector, broadcasting."""
    ne2 = np.sum(np.abs(e) ** 2, axis=-1)
    nh2 = np.sum(np.abs(h) ** 2, axis=-1)
    return np.sqrt(ne2 / z0 + z0 * nh2)


def field_mismatch(e, h, e_ff, h_ff, z0: float = FREE_SPACE_IMPEDANCE):
    """Squared normalized distance between two field pairs.

    Accepts single complex 3-vectors or arrays of shape ``(..., 3)``
    (broadcast over leading axes).

    Returns
    -------
    float or numpy.ndarray
        ``mu`` in [0, 1]; 0 when both stacked vectors vanish.
    """
    e = np.asarray(e, dtype=complex)
    h = np.asarray(h, dtype=complex)
    e_ff = np.asarray(e_ff, dtype=complex)
    h_ff = np.asarray(h_ff, dtype=complex)
    num = _stacked_norm(e - e_ff, h - h_ff, z0)
    den = _stacked_norm(e, h, z0) + _stacked_norm(e_ff, h_ff, z0)
    safe = np.where(den == 0.0, 1.0, den)
    mu = np.minimum((num / safe) ** 2, 1.0)
    mu = np.where(den == 0.0, 0.0, mu)
    if mu.ndim == 0:
        return float(mu)
    return mu


@runtime_checkable
class FieldScenario(Protocol):
    """Anything that can produce true fields and an angular distribution.

    ``fields`` returns the true ``(E, H)`` at a cartesian point;
    ``angular_distribution`` returns the far-field ``f`` to compare
    against, given the evaluation direction and radius (the radius matters
    for excitations that re-focus at every evaluation point).
    """

    ctx: WaveContext
    source_kind: str
    excitation: str

    def fields(self, point: np.ndarray) -> tuple[np.ndarray, np.ndarray]: ...

    def angular_distribution(
        self, direction: Direction, r: float
    ) -> AngularFieldDistribution: ...


@dataclass(frozen=True, eq=False)
class DipoleArrayScenario:
    """A dipole array driven by one of the supported excitation schemes.

    excitation:
        ``"ff-bf"``  - beamsteering toward ``steering`` (fixed weights);
        ``"nf-bf"``  - beamfocusing onto each evaluation point in turn;
        ``"none"``   - uniform unit weights.
    """

    geometry: ArrayGeometry
    excitation: str = EXCITATION_NONE
    steering: Direction | None = None
    ctx: WaveContext = DEFAULT_CONTEXT

    source_kind: str = "dipole-ula"

    def __post_init__(self) -> None:
        if self.excitation not in _EXCITATIONS:
            raise ValueError(
                f"unknown excitation {self.excitation!r}; expected one of {_EXCITATIONS}"
            )
        if self.excitation == EXCITATION_STEER and self.steering is None:
            raise ValueError("ff-bf excitation needs a steering direction")

    @cached_property
    def _steer_weights(self) -> np.ndarray:
        return ff_precoder(self.geometry, self.steering, self.ctx)

    def weights(self, point: np.ndarray) -> np.ndarray:
        """Excitation weights used when evaluating at a cartesian point."""
        if self.excitation == EXCITATION_STEER:
            return self._steer_weights
        if self.excitation == EXCITATION_FOCUS:
            return nf_precoder(self.geometry, point, self.ctx)
        return np.ones(self.geometry.n, dtype=complex)

    def fields(self, point: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return array_field(self.geometry, self.weights(point), point, self.ctx)

    def angular_distribution(self, direction: Direction, r: float) -> AngularFieldDistribution:
        point = r * unit_vector(direction)
        return analytic_angular_distribution(
            self.geometry, self.weights(point), direction, self.ctx
        )


@dataclass(frozen=True, eq=False)
class ErrorCurve:
    """An approximation-error curve epsilon(r) along one test line."""

    r: np.ndarray
    epsilon: np.ndarray
    direction: Direction
    excitation: str
    source: str

    def __post_init__(self) -> None:
        r = np.asarray(self.r, dtype=float).reshape(-1)
        eps = np.asarray(self.epsilon, dtype=float).reshape(-1)
        if r.shape != eps.shape:
            raise ValueError(f"r and epsilon lengths differ: {r.size} vs {eps.size}")
        if r.size:
            if not np.all(r > 0.0):
                raise ValueError("radii must be positive")
            if not np.all(np.diff(r) > 0.0):
                raise ValueError("radii must be strictly increasing")
            if not (np.all(eps >= 0.0) and np.all(eps <= 1.0)):
                raise ValueError("epsilon values must lie in [0, 1]")
        r.flags.writeable = False
        eps.flags.writeable = False
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "epsilon", eps)

    def __len__(self) -> int:
        return self.r.size


def approximation_error(scenario: FieldScenario, point: SphericalPoint) -> float:
    """Mismatch between true and auxiliary far fields at one point.

    Under a re-focusing excitation both the weights and the angular
    distribution are recomputed for the given point.
    """
    if point.r <= 0.0:
        raise ValueError("approximation error is undefined at r = 0")
    cart = point.to_cartesian()
    e, h = scenario.fields(cart)
    dist = scenario.angular_distribution(point.direction, point.r)
    e_ff, h_ff = auxiliary_fields(dist, point, scenario.ctx)
    return field_mismatch(e, h, e_ff, h_ff, scenario.ctx.impedance)


def error_sweep(
    scenario: FieldScenario,
    direction: Direction,
    r_grid: np.ndarray,
) -> ErrorCurve:
    """Evaluate the approximation error along a radial grid.

    Parameters
    ----------
    scenario : FieldScenario
    direction : Direction
        Test-line direction.
    r_grid : numpy.ndarray
        Strictly increasing positive radii, wavelengths.

    Returns
    -------
    ErrorCurve
    """
    grid = np.asarray(r_grid, dtype=float).reshape(-1)
    if grid.size == 0:
        return ErrorCurve(
            grid, grid.copy(), direction, scenario.excitation, scenario.source_kind
        )
    if not np.all(grid > 0.0):
        raise ValueError("sweep grid radii must be positive")
    if not np.all(np.diff(grid) > 0.0):
        raise ValueError("sweep grid must be strictly increasing")
    geometry = getattr(scenario, "geometry", None)
    if geometry is not None:
        rhat = unit_vector(direction)
        dists = np.linalg.norm(
            grid[:, None, None] * rhat[None, None, :] - geometry.positions[None, :, :],
            axis=-1,
        )
        bad = np.nonzero(np.min(dists, axis=1) < 1e-9 * scenario.ctx.wavelength)[0]
        if bad.size:
            raise ValueError(
                f"sweep grid point r = {grid[bad[0]]!r} coincides with an element position"
            )
    eps = np.array(
        [approximation_error(scenario, SphericalPoint(r, direction)) for r in grid]
    )
    return ErrorCurve(grid, eps, direction, scenario.excitation, scenario.source_kind)


def default_grid(
    lo: float = DEFAULT_GRID_LO,
    hi: float = DEFAULT_GRID_HI,
    points_per_decade: int = DEFAULT_GRID_PPD,
) -> np.ndarray:
    """Logarithmic radial grid with a fixed density per decade."""
    if not (0.0 < lo < hi):
        raise ValueError(f"need 0 < lo < hi, got lo={lo!r}, hi={hi!r}")
    if points_per_decade < 1:
        raise ValueError(f"points per decade must be >= 1, got {points_per_decade}")
    n = int(round(math.log10(hi / lo) * points_per_decade)) + 1
    return np.geomspace(lo, hi, max(n, 2))

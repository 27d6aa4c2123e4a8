"""Locating and tracking the moving quasi-node of a two-state superposition.

A superposition of the two lowest well states has a near-zero of |Psi|^2 that
oscillates once per beat period. Three operational definitions of "the node"
are implemented and can be compared:

* analytic-formula: x(t) = (a/pi) arccos(-A cos(dw t)) with A = c1/(2 c2),
  valid for real coefficients; absent whenever |A cos(dw t)| > 1.
* real-part-zero: interior zeros of Re Psi(x, t), found by bisection.
* density-minimum: interior local minima of |Psi|^2, found by golden-section.

True zeros of the complex wavefunction are rarer. For real coefficients they
exist only at instants with sin(dw t) = 0; exact_zero_times scans a window
for them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .numerics import bisect_root, golden_min
from .well import (
    TwoStateSuperposition,
    WellConfig,
    beat_period,
    delta_omega,
    density_exact,
    eigenfunction,
    evaluate_psi,
)

__all__ = [
    "NodeKind",
    "NodeSample",
    "NodeTrajectory",
    "ratio_from_state",
    "analytic_node_position",
    "find_real_part_zeros",
    "find_density_minima",
    "exact_zero_times",
    "track_trajectory",
]

# fraction of |c| that the imaginary part may reach before a coefficient
# stops counting as real
_REAL_TOL = 1e-14


class NodeKind(str, Enum):
    ANALYTIC = "analytic-formula"
    REAL_PART_ZERO = "real-part-zero"
    DENSITY_MINIMUM = "density-minimum"
    TRUE_ZERO = "true-zero"


@dataclass(frozen=True)
class NodeSample:
    """Node position at one instant; position is None when no node exists."""

    t: float
    position: float | None
    kind: NodeKind


@dataclass(frozen=True)
class NodeTrajectory:
    """A sequence of node samples for one state, plus the ratio A when defined."""

    samples: tuple[NodeSample, ...]
    config: WellConfig
    state: TwoStateSuperposition
    kind: NodeKind
    ratio: float | None

    def times(self) -> np.ndarray:
        return np.array([s.t for s in self.samples])

    def positions(self) -> np.ndarray:
        """Positions as an array with NaN standing in for absent samples."""
        return np.array(
            [math.nan if s.position is None else s.position for s in self.samples]
        )


def _require_real(state: TwoStateSuperposition) -> tuple[float, float]:
    for label, c in (("c1", state.c1), ("c2", state.c2)):
        if abs(c.imag) > _REAL_TOL * abs(c):
            raise ValueError(f"{label} must be real for this operation, got {c!r}")
    return state.c1.real, state.c2.real


def ratio_from_state(state: TwoStateSuperposition) -> float:
    """Amplitude ratio A = c1 / (2 c2) for a real-coefficient state.

    Raises ValueError for complex coefficients or c2 = 0 (no finite ratio).
    """
    c1, c2 = _require_real(state)
    if c2 == 0.0:
        raise ValueError("degenerate ratio: c2 = 0")
    ratio = c1 / (2.0 * c2)
    if not math.isfinite(ratio):
        raise ValueError(f"ratio overflow for c1={c1!r}, c2={c2!r}")
    return ratio


def analytic_node_position(cfg: WellConfig, ratio: float, t: float) -> float | None:
    """Closed-form node position (a/pi) arccos(-A cos(dw t)).

    Uses the principal arccos branch, so the result lies in [0, a]. Returns
    None at instants where |A cos(dw t)| > 1 and the node is off the domain.
    """
    if not math.isfinite(ratio):
        raise ValueError("ratio must be finite")
    u = -ratio * math.cos(delta_omega(cfg) * t)
    if abs(u) > 1.0:
        return None
    return cfg.width_a / math.pi * math.acos(u)


def find_real_part_zeros(cfg: WellConfig, state: TwoStateSuperposition, t: float,
                         grid_n: int = 2048) -> list[float]:
    """Interior zeros of Re Psi(x, t) for a real-coefficient state.

    Sign changes on a uniform grid of grid_n intervals are refined by
    bisection to a width of 1e-12 * a. Wall zeros are structural and are not
    reported. At instants where Re Psi vanishes identically (possible when a
    coefficient's cosine factor is zero) there are no isolated zeros and the
    list is empty.
    """
    _require_real(state)
    if grid_n < 16:
        raise ValueError("grid_n too small to isolate zeros")
    a = cfg.width_a
    xs = np.linspace(0.0, a, grid_n + 1)
    fs = np.real(np.asarray(evaluate_psi(cfg, state, xs, float(t))))
    if np.max(np.abs(fs)) == 0.0:
        return []

    def f(x: float) -> float:
        return evaluate_psi(cfg, state, x, float(t)).real

    zeros: list[float] = []
    for i in range(1, grid_n):
        if fs[i] == 0.0:
            zeros.append(float(xs[i]))
    for i in range(grid_n):
        if fs[i] * fs[i + 1] < 0.0:
            zeros.append(bisect_root(f, float(xs[i]), float(xs[i + 1]), 1e-12 * a))
    zeros.sort()
    return [z for z in zeros if 0.0 < z < a]


def find_density_minima(cfg: WellConfig, state: TwoStateSuperposition, t: float,
                        grid_n: int = 2048) -> list[tuple[float, float]]:
    """Interior local minima of |Psi|^2 at time t, as (position, density) pairs.

    Grid minima are refined by golden-section search inside their bracketing
    cells to 1e-10 * a. Searching only within brackets keeps the walls (where
    the density always tends to zero) from masquerading as minima.
    """
    if grid_n < 16:
        raise ValueError("grid_n too small to isolate minima")
    a = cfg.width_a
    xs = np.linspace(0.0, a, grid_n + 1)
    rho = np.asarray(density_exact(cfg, state, xs, float(t)))

    def f(x: float) -> float:
        return float(density_exact(cfg, state, x, float(t)))

    found: list[tuple[float, float]] = []
    for i in range(1, grid_n):
        if rho[i] > rho[i - 1] or rho[i] > rho[i + 1]:
            continue
        if rho[i] == rho[i - 1]:  # plateau: keep only its left edge
            continue
        x_star = golden_min(f, float(xs[i - 1]), float(xs[i + 1]), 1e-10 * a)
        if 0.0 < x_star < a:
            found.append((x_star, f(x_star)))
    found.sort()
    return found


def exact_zero_times(cfg: WellConfig, state: TwoStateSuperposition, period_count: int = 1,
                     grid_n: int = 1024, samples_per_period: int = 512,
                     rel_threshold: float = 1e-10) -> list[float]:
    """Times in [0, period_count * T] at which |Psi|^2 has a genuine interior zero.

    The coefficients must be real. A time qualifies when the deepest interior
    density dip falls below rel_threshold of the instantaneous density
    maximum. The scan samples each beat period uniformly and refines any
    near-miss dip in t by golden-section search, so isolated zero crossings
    between sample times are still caught. For a state with |c1/(2 c2)| > 1
    the list is empty: no interior zero ever forms.
    """
    _require_real(state)
    if period_count < 1:
        raise ValueError("period_count must be at least 1")
    if grid_n < 16 or samples_per_period < 16:
        raise ValueError("scan resolution too small")
    a = cfg.width_a
    T = beat_period(cfg)
    horizon = period_count * T
    x_interior = np.linspace(0.0, a, grid_n + 1)[1:-1]
    # The density vanishes quadratically at the walls for every state, which
    # would put a flat floor under a raw min-density scan and hide a zero
    # approaching between time samples. Dividing by the stationary envelope
    # psi_1^2 + psi_2^2 removes the wall zeros without moving any interior
    # zero; the contract threshold is still applied to the raw density.
    envelope = (np.asarray(eigenfunction(cfg, 1, x_interior)) ** 2
                + np.asarray(eigenfunction(cfg, 2, x_interior)) ** 2)

    def _env(x: float) -> float:
        return eigenfunction(cfg, 1, x) ** 2 + eigenfunction(cfg, 2, x) ** 2

    def rel_min(t: float) -> float:
        rho = np.asarray(density_exact(cfg, state, x_interior, float(t)))
        i = int(np.argmin(rho / envelope))
        lo = x_interior[max(i - 1, 0)]
        hi = x_interior[min(i + 1, rho.size - 1)]
        x_star = golden_min(
            lambda x: float(density_exact(cfg, state, x, float(t))) / _env(x),
            float(lo), float(hi), 1e-12 * a)
        bottom = float(density_exact(cfg, state, x_star, float(t)))
        return min(bottom, float(rho[i])) / float(np.max(rho))

    n_t = period_count * samples_per_period
    ts = np.linspace(0.0, horizon, n_t + 1)
    depth = np.array([rel_min(t) for t in ts])

    times = [float(ts[k]) for k in range(n_t + 1) if depth[k] <= rel_threshold]

    # dips that straddle sample times: refine an interior local minimum of the
    # sampled depth curve and keep it if the refined dip reaches zero. A real
    # crossing is locally quadratic in t, so its flanks sit at least ~9x above
    # the dip sample; a flank ratio test keeps flat noise plateaus (states
    # that never develop a zero) from triggering hundreds of refinements.
    for k in range(1, n_t):
        if depth[k] <= rel_threshold:
            continue
        if depth[k] <= depth[k - 1] and depth[k] <= depth[k + 1] \
                and max(depth[k - 1], depth[k + 1]) > 4.0 * depth[k]:
            t_star = golden_min(rel_min, float(ts[k - 1]), float(ts[k + 1]), 1e-12 * T)
            if rel_min(t_star) <= rel_threshold:
                times.append(t_star)
    times.sort()

    deduped: list[float] = []
    for t in times:
        if not deduped or t - deduped[-1] > 1e-9 * T:
            deduped.append(t)
    return deduped


def _nearest(candidates: list[float], reference: float) -> float | None:
    if not candidates:
        return None
    return min(candidates, key=lambda x: abs(x - reference))


def track_trajectory(cfg: WellConfig, state: TwoStateSuperposition, kind: NodeKind,
                     t_start: float, t_end: float, n_samples: int,
                     grid_n: int = 2048) -> NodeTrajectory:
    """Sample the node position on a uniform time grid, keeping track continuity.

    When a time step offers several candidate nodes (possible for the numeric
    kinds), the one nearest the previously tracked position wins; the first
    step measures from the well center. kind selects among analytic-formula,
    real-part-zero and density-minimum; true zeros are isolated events in
    time, not a trackable curve, so that kind is rejected here.
    """
    kind = NodeKind(kind)
    if kind is NodeKind.TRUE_ZERO:
        raise ValueError("true-zero events are found by exact_zero_times, not tracked")
    if not t_end > t_start:
        raise ValueError("need t_end > t_start")
    if n_samples < 2:
        raise ValueError("need at least two samples")

    ratio: float | None
    if kind is NodeKind.ANALYTIC:
        ratio = ratio_from_state(state)  # propagate the error: formula needs A
    else:
        try:
            ratio = ratio_from_state(state)
        except ValueError:
            ratio = None

    ts = np.linspace(t_start, t_end, n_samples)
    reference = cfg.width_a / 2.0
    samples: list[NodeSample] = []
    for t in ts:
        t = float(t)
        if kind is NodeKind.ANALYTIC:
            pos = analytic_node_position(cfg, ratio, t)
        elif kind is NodeKind.REAL_PART_ZERO:
            pos = _nearest(find_real_part_zeros(cfg, state, t, grid_n), reference)
        else:
            minima = find_density_minima(cfg, state, t, grid_n)
            pos = _nearest([x for x, _ in minima], reference)
        samples.append(NodeSample(t=t, position=pos, kind=kind))
        if pos is not None:
            reference = pos
    return NodeTrajectory(samples=tuple(samples), config=cfg, state=state,
                          kind=kind, ratio=ratio)

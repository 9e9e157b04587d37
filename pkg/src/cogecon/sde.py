"""Path simulators: reflected Ornstein-Uhlenbeck and Brownian motion with resets.

Both are Monte Carlo counterparts to closed-form results elsewhere in the
package and are written to stay independent of those formulas: the reflected
OU uses Euler-Maruyama stepping with fold-back reflection, and the reset
process simulates the Poisson reset clock directly, propagating the state
between resets with the exact Gaussian transition (arithmetic Brownian motion
needs no discretization in between events).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDiffusionError
from .rng import RngSpec


@dataclass(frozen=True)
class OuProcessSpec:
    """Mean-reverting process reflected into [lower_bound, upper_bound].

    dX = reversion * (mean - X) dt + volatility dW, folded back into the
    bounds whenever a step oversteps them.  start defaults to the long-run
    mean when omitted.
    """

    mean: float
    reversion: float
    volatility: float
    lower_bound: float
    upper_bound: float
    dt: float | None = None
    horizon: float = 50.0
    start: float | None = None

    def __post_init__(self) -> None:
        if self.reversion <= 0.0:
            raise ValueError(f"reversion must be positive, got {self.reversion}")
        if self.volatility < 0.0:
            raise ValueError(f"volatility must be nonnegative, got {self.volatility}")
        if not self.lower_bound < self.upper_bound:
            raise ValueError("lower_bound must be below upper_bound")
        if not self.lower_bound <= self.mean <= self.upper_bound:
            raise ValueError("mean must lie inside the reflection bounds")
        if self.start is not None and not self.lower_bound <= self.start <= self.upper_bound:
            raise ValueError("start must lie inside the reflection bounds")
        if self.dt is not None and self.dt <= 0.0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.horizon <= 0.0:
            raise ValueError(f"horizon must be positive, got {self.horizon}")

    def step_size(self) -> float:
        """Default step keeps reversion-per-step at 1e-3."""
        return self.dt if self.dt is not None else 1e-3 / self.reversion


@dataclass(frozen=True)
class GbmResetSpec:
    """Log state following arithmetic Brownian motion, reset at Poisson times.

    Between resets d(log X) = drift dt + volatility dW; at reset events the
    log state jumps back to reset_point.  burn_in must cover many reset
    half-lives so the recorded samples have forgotten the initial condition.
    """

    drift: float
    volatility: float
    reset_rate: float
    reset_point: float = 0.0
    burn_in: float | None = None
    horizon: float = 0.0

    def __post_init__(self) -> None:
        if self.volatility == 0.0:
            raise DegenerateDiffusionError("zero volatility: reset process collapses onto the drift line")
        if self.reset_rate <= 0.0:
            raise ValueError(f"reset_rate must be positive, got {self.reset_rate}")
        if self.burn_in is not None and self.burn_in < 10.0 / self.reset_rate:
            raise ValueError(
                f"burn_in {self.burn_in} is below 10/reset_rate = {10.0 / self.reset_rate}; "
                "samples would remember the start point")
        if self.horizon < 0.0:
            raise ValueError(f"horizon must be nonnegative, got {self.horizon}")

    def record_time(self) -> float:
        burn = self.burn_in if self.burn_in is not None else 10.0 / self.reset_rate
        return burn + self.horizon


def simulate_ou_reflected(spec: OuProcessSpec, rng: RngSpec,
                          n_paths: int, record_times) -> np.ndarray:
    """Euler-Maruyama paths of the reflected OU process.

    Returns an array of shape (n_paths, len(record_times)) with the state of
    every path at each requested time.  Reflection folds an overshoot back
    into the interval symmetrically (repeatedly if the step is violent), which
    keeps every recorded value inside [lower_bound, upper_bound] exactly.
    """
    if n_paths <= 0:
        raise ValueError(f"n_paths must be positive, got {n_paths}")
    record_times = np.asarray(sorted(record_times), dtype=float)
    if record_times.size == 0:
        raise ValueError("record_times must be nonempty")
    if record_times[0] < 0.0 or record_times[-1] > spec.horizon:
        raise ValueError("record_times must lie inside [0, horizon]")

    dt = spec.step_size()
    gen = rng.generator()

    x = np.full(n_paths, spec.mean if spec.start is None else spec.start, dtype=float)
    out = np.empty((n_paths, record_times.size), dtype=float)

    lo, hi = spec.lower_bound, spec.upper_bound
    period = 2.0 * (hi - lo)

    t = 0.0
    next_record = 0
    while next_record < record_times.size and record_times[next_record] <= t:
        out[:, next_record] = x
        next_record += 1

    n_steps = int(np.ceil((record_times[-1] - t) / dt))
    for _ in range(n_steps):
        step = min(dt, record_times[-1] - t)
        if step <= 0.0:
            break
        shocks = gen.standard_normal(n_paths)
        x = x + spec.reversion * (spec.mean - x) * step \
            + spec.volatility * np.sqrt(step) * shocks
        # Fold back into [lo, hi]; the modular form resolves any number of
        # bounces in one shot.
        y = np.mod(x - lo, period)
        x = lo + np.minimum(y, period - y)
        t += step
        while next_record < record_times.size and record_times[next_record] <= t + 1e-12:
            out[:, next_record] = x
            next_record += 1
    while next_record < record_times.size:  # pragma: no cover - guard for fp drift
        out[:, next_record] = x
        next_record += 1
    return out


def simulate_gbm_reset(spec: GbmResetSpec, rng: RngSpec, n_samples: int) -> np.ndarray:
    """Draws of the log state at time burn_in + horizon, one per path.

    Each path starts at reset_point, its reset clock ticks as a Poisson
    process (simulated through exponential inter-arrival gaps), and between
    the final reset and the recording time the state advances by the exact
    Brownian transition.  The recording time is far beyond 10 reset
    half-lives, so the samples follow the stationary law of the process.
    """
    if n_samples <= 0:
        raise ValueError(f"n_samples must be positive, got {n_samples}")
    gen = rng.generator()
    t_record = spec.record_time()

    # Walk the reset clock forward path by path, vectorized over the paths
    # whose clocks have not yet passed the recording time.  last_reset keeps
    # the most recent event before t_record (0 when no reset fired at all,
    # which matches starting the path at the reset point).
    clock = np.zeros(n_samples)
    last_reset = np.zeros(n_samples)
    active = np.arange(n_samples)
    while active.size:
        gaps = gen.exponential(1.0 / spec.reset_rate, size=active.size)
        clock[active] += gaps
        fired = clock[active] <= t_record
        last_reset[active[fired]] = clock[active[fired]]
        active = active[fired]

    age = t_record - last_reset
    shocks = gen.standard_normal(n_samples)
    return spec.reset_point + spec.drift * age + spec.volatility * np.sqrt(age) * shocks

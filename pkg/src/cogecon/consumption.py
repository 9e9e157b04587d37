"""Consumption adjustment under data-informed beliefs.

Covers the log-odds belief adjustment, the shrinkage rule that maps a
Bayesian adjustment to a non-Bayesian one, the consumption adjustment weight
function (CAWF) that blends the two regimes by crowd size, and the effective
consumption it induces in CRRA utility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .rng import RngSpec
from .sde import OuProcessSpec, simulate_ou_reflected


def bayes_adjustment(p1: float) -> float:
    """Log odds ln(p1 / (1 - p1)) of an upward belief p1 in [0.5, 1)."""
    if not 0.5 <= p1 < 1.0:
        raise ValueError(f"p1 must lie in [0.5, 1), got {p1}")
    return math.log(p1 / (1.0 - p1))


@dataclass(frozen=True)
class ShrinkageParams:
    """Non-Bayesian adjustment S -> mu_b * S^beta_b (linear in logs)."""

    beta_b: float
    mu_b: float

    def __post_init__(self) -> None:
        if not 0.0 < self.beta_b <= 1.0:
            raise ValueError(f"beta_b must lie in (0, 1], got {self.beta_b}")
        if self.mu_b <= 0.0:
            raise ValueError(f"mu_b must be positive, got {self.mu_b}")


def nonbayes_adjustment(s: float, p: ShrinkageParams) -> float:
    """Shrunken adjustment mu_b * s^beta_b for a positive Bayesian adjustment s."""
    if s <= 0.0:
        raise ValueError(f"adjustment must be positive, got {s}")
    return p.mu_b * s**p.beta_b

def shrinkage_crossover(p: ShrinkageParams) -> float | None:
    """ln S at which the shrunken adjustment crosses the identity line.

    None when beta_b = 1 (the two lines are parallel in logs).
    """
    if p.beta_b == 1.0:
        return None
    return math.log(p.mu_b) / (1.0 - p.beta_b)


def implied_shrinkage(sigma_s: float, sigma_n: float, mu_s: float) -> ShrinkageParams:
    """Shrinkage parameters induced by the lognormal belief-updating model.

    True log adjustment ln S ~ N(mu_s, sigma_s^2); the observed estimate is
    unbiased in levels with log noise sigma_n.  Precision weighting gives
    beta_b = sigma_s^2 / (sigma_s^2 + sigma_n^2), and taking means of the
    lognormal belief gives
    ln mu_b = (1 - beta_b)(mu_s + sigma_s^2 / 2) + beta_b^2 sigma_n^2 / 2.
    """
    if sigma_s <= 0.0 or sigma_n <= 0.0:
        raise ValueError("sigma_s and sigma_n must be positive")
    beta = sigma_s**2 / (sigma_s**2 + sigma_n**2)
    ln_mu = (1.0 - beta) * (mu_s + 0.5 * sigma_s**2) + 0.5 * beta**2 * sigma_n**2
    return ShrinkageParams(beta_b=beta, mu_b=math.exp(ln_mu))


def shrinkage_regression_check(sigma_s: float, sigma_n: float, mu_s: float,
                               rng: RngSpec, n_draws: int) -> tuple[float, float]:
    """Monte Carlo consistency check of the shrinkage reduced form.

    Simulates the generative model draw by draw: a true adjustment S, a noisy
    unbiased estimate, and the agent's combined belief (the mean of its
    lognormal posterior over adjustments).  Returns the OLS (slope, intercept)
    of ln(belief) on ln(S); they should recover beta_b and ln(mu_b).
    """
    if n_draws < 10:
        raise ValueError(f"need at least 10 draws, got {n_draws}")
    p = implied_shrinkage(sigma_s, sigma_n, mu_s)
    beta = p.beta_b
    gen = rng.generator()
    ln_s = mu_s + sigma_s * gen.standard_normal(n_draws)
    ln_est = ln_s - 0.5 * sigma_n**2 + sigma_n * gen.standard_normal(n_draws)
    # Combined belief: precision-weighted log estimate (bias-corrected) and
    # log prior mean, plus the variance half-term of the residual noise.
    ln_belief = (beta * (ln_est + 0.5 * sigma_n**2)
                 + (1.0 - beta) * (mu_s + 0.5 * sigma_s**2)
                 + 0.5 * beta**2 * sigma_n**2)
    slope, intercept = np.polyfit(ln_s, ln_belief, deg=1)
    return float(slope), float(intercept)


@dataclass(frozen=True)
class CawfParams:
    """Consumption adjustment weight function and its data-value environment.

    The weight w = 1 / (1 + n / omega) interpolates between the Bayesian
    branch (small crowds) and the non-Bayesian branch (large crowds); d_bar is
    the neutral data value and scale the gross adjustment multiplier.  The
    data-value index follows a mean-reverting process reflected into [0, 1].
    """

    scale: float = 1.15
    omega: float = 100.0
    d_bar: float = 0.5
    ou: OuProcessSpec = field(default_factory=lambda: OuProcessSpec(
        mean=0.5, reversion=0.1, volatility=0.8,
        lower_bound=0.0, upper_bound=1.0, horizon=60.0))
    n_paths: int = 1000

    def __post_init__(self) -> None:
        if self.scale <= 0.0:
            raise ValueError(f"scale must be positive, got {self.scale}")
        if self.omega <= 0.0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if self.n_paths <= 1:
            raise ValueError(f"n_paths must exceed 1, got {self.n_paths}")


def cawf_bayes_limit(d_value: float, p: CawfParams) -> float:
    """Small-crowd limit: scale * exp(D - d_bar) - 1."""
    return p.scale * math.exp(d_value - p.d_bar) - 1.0


def cawf_nonbayes_limit(d_value: float, p: CawfParams) -> float:
    """Large-crowd limit: 1 - scale * exp(d_bar - D)."""
    return 1.0 - p.scale * math.exp(p.d_bar - d_value)


def cawf(d_value, n, p: CawfParams):
    """Consumption adjustment weight at data value D and crowd size n.

    n may be any nonnegative float including inf; n = 0 reproduces the
    Bayesian limit exactly and n = inf the non-Bayesian one.
    """
    d_value = np.asarray(d_value, dtype=float)
    n_arr = np.asarray(n, dtype=float)
    if np.any(n_arr < 0.0):
        raise ValueError("crowd size n must be nonnegative")
    with np.errstate(divide="ignore"):
        w = 1.0 / (1.0 + n_arr / p.omega)
    w = np.where(np.isinf(n_arr), 0.0, w)
    up = p.scale * np.exp(d_value - p.d_bar) - 1.0
    down = 1.0 - p.scale * np.exp(p.d_bar - d_value)
    out = up * w + down * (1.0 - w)
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class CawfCurves:
    """Monte Carlo averages of the CAWF over stationary data-value draws."""

    n_grid: np.ndarray
    average: np.ndarray
    high_value: np.ndarray
    low_value: np.ndarray
    n_high: int
    n_low: int


def default_n_grid(top: float = 300.0, points: int = 50) -> np.ndarray:
    """Geometric crowd-size grid from 1 to top."""
    return np.geomspace(1.0, top, points)


def cawf_montecarlo(p: CawfParams, rng: RngSpec, n_grid=None) -> CawfCurves:
    """Average CAWF curves over stationary draws of the data-value process.

    Draws p.n_paths terminal values of the reflected mean-reverting process,
    splits them at d_bar into high-value and low-value environments, and
    averages the CAWF over each group on the crowd-size grid.
    """
    if n_grid is None:
        n_grid = default_n_grid()
    n_grid = np.asarray(n_grid, dtype=float)
    draws = simulate_ou_reflected(p.ou, rng, p.n_paths,
                                  record_times=[p.ou.horizon])[:, -1]
    high = draws[draws > p.d_bar]
    low = draws[draws <= p.d_bar]
    if high.size == 0 or low.size == 0:
        raise RuntimeError("stationary draws failed to populate both sides of d_bar")

    def group_mean(values: np.ndarray) -> np.ndarray:
        return np.array([float(np.mean(cawf(values, n, p))) for n in n_grid])

    return CawfCurves(
        n_grid=n_grid,
        average=group_mean(draws),
        high_value=group_mean(high),
        low_value=group_mean(low),
        n_high=int(high.size),
        n_low=int(low.size),
    )


@dataclass(frozen=True)
class EffectiveConsumption:
    """Total consumption and its data-driven adjustment."""

    c_total: float
    c_delta: float

    def __post_init__(self) -> None:
        if self.c_total <= 0.0:
            raise ValueError(f"c_total must be positive, got {self.c_total}")
        if self.c_delta <= -1.0:
            raise ValueError(f"c_delta must exceed -1, got {self.c_delta}")

    def utility_consumption(self) -> float:
        return self.c_total * (1.0 + self.c_delta)


def net_utility(e: EffectiveConsumption, gamma: float) -> float:
    """CRRA utility of the adjustment-scaled consumption; gamma = 1 is log."""
    if gamma <= 0.0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    c = e.utility_consumption()
    if gamma == 1.0:
        return math.log(c)
    return c ** (1.0 - gamma) / (1.0 - gamma)

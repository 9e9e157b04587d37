"""Information-entropy valuation of data sources and ensembles.

A source's value is scored from its differential entropy relative to a
reference cap: zero entropy scores +1, the cap scores -1.  Pairwise synergy
and antagonism couplings shift the ensemble aggregate, and a batch of
aggregates is squashed into a unit-interval index.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

_UNIT_NORM_TOL = 1e-9


@dataclass(frozen=True)
class SourceDist:
    """One data source's distribution, described just well enough to score it.

    kind "uniform" carries width epsilon, "gaussian" carries a variance, and
    "grid" carries a sampled density (renormalized at construction).
    """

    kind: str
    width: float | None = None
    variance: float | None = None
    grid_x: np.ndarray | None = None
    grid_p: np.ndarray | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("uniform", "gaussian", "grid"):
            raise ValueError(f"unknown source kind {self.kind!r}")
        if self.kind == "uniform":
            if self.width is None or self.width <= 0.0:
                raise ValueError("uniform source needs a positive width")
        elif self.kind == "gaussian":
            if self.variance is None or self.variance <= 0.0:
                raise ValueError("gaussian source needs a positive variance")
        else:
            if self.grid_x is None or self.grid_p is None:
                raise ValueError("grid source needs grid_x and grid_p")

    @classmethod
    def uniform(cls, width: float) -> "SourceDist":
        return cls(kind="uniform", width=float(width))

    @classmethod
    def gaussian(cls, variance: float) -> "SourceDist":
        return cls(kind="gaussian", variance=float(variance))

    @classmethod
    def from_grid(cls, x, p) -> "SourceDist":
        x = np.asarray(x, dtype=float)
        p = np.asarray(p, dtype=float)
        if x.ndim != 1 or x.shape != p.shape or x.size < 3:
            raise ValueError("grid source needs matching 1-d arrays with at least 3 points")
        if np.any(np.diff(x) <= 0.0):
            raise ValueError("grid_x must be strictly increasing")
        if np.any(p < 0.0):
            raise ValueError("grid_p must be nonnegative")
        mass = np.trapezoid(p, x)
        if mass <= 0.0:
            raise ValueError("grid density has no mass")
        return cls(kind="grid", grid_x=x, grid_p=p / mass)


def gaussian_entropy(variance: float) -> float:
    """Differential entropy of a normal with the given variance (no clamping)."""
    if variance <= 0.0:
        raise ValueError(f"variance must be positive, got {variance}")
    return 0.5 * math.log(2.0 * math.pi * math.e * variance)


def differential_entropy(d: SourceDist) -> float:
    """Differential entropy of a source, clamped below at zero.

    The clamp encodes the convention that a unit-width uniform (entropy 0) is
    the most informative source worth distinguishing; anything sharper scores
    the same.  Grid sources are integrated by the trapezoid rule with
    0 log 0 = 0.
    """
    if d.kind == "uniform":
        h = math.log(d.width)
    elif d.kind == "gaussian":
        h = gaussian_entropy(d.variance)
    else:
        p = d.grid_p
        integrand = np.where(p > 0.0, -p * np.log(np.where(p > 0.0, p, 1.0)), 0.0)
        h = float(np.trapezoid(integrand, d.grid_x))
    return max(h, 0.0)


def information_value(sigma_t: float, sigma_max: float) -> float:
    """Value score V = 1 - 2 sigma_t / sigma_max in [-1, 1].

    sigma_t above the cap is clamped to the cap with a warning: such a source
    is worth the minimum, not less.
    """
    if sigma_max <= 0.0:
        raise ValueError(f"sigma_max must be positive, got {sigma_max}")
    if sigma_t < 0.0:
        raise ValueError(f"sigma_t must be nonnegative, got {sigma_t}")
    if sigma_t > sigma_max:
        warnings.warn(
            f"entropy {sigma_t} exceeds the cap {sigma_max}; clamping to the cap",
            RuntimeWarning, stacklevel=2)
        sigma_t = sigma_max
    return 1.0 - 2.0 * sigma_t / sigma_max


def value_weight(v: float) -> float:
    """Map a value score from [-1, 1] to the interaction weight (v + 1) / 2."""
    return 0.5 * (v + 1.0)


@dataclass(frozen=True)
class DirectionVector:
    """Unit vector (a, b, c) giving the directional composition of a source."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        norm = math.sqrt(self.a**2 + self.b**2 + self.c**2)
        if not math.isclose(norm, 1.0, rel_tol=0.0, abs_tol=_UNIT_NORM_TOL):
            raise ValueError(f"direction vector must have unit norm, got |v| = {norm}")


def direction_value_matrix(d: DirectionVector, magnitude: float) -> np.ndarray:
    """Hermitian 2x2 encoding of a directed source value.

    A = magnitude * [[c, a - ib], [a + ib, -c]]; its eigenvalues are exactly
    +magnitude and -magnitude for any unit direction.
    """
    if magnitude < 0.0:
        raise ValueError(f"magnitude must be nonnegative, got {magnitude}")
    a, b, c = d.a, d.b, d.c
    return magnitude * np.array([[c, a - 1j * b],
                                 [a + 1j * b, -c]], dtype=complex)


@dataclass(frozen=True)
class InfoEnsemble:
    """A set of sources with pairwise couplings.

    synergy[(i, j)] and antagonism[(i, j)] hold the coefficients a_ij, b_ij
    for 0-based i < j; absent pairs contribute nothing.  j_coupling scales the
    whole interaction term, and sigma_max is the entropy cap shared by every
    source score.
    """

    sources: tuple[SourceDist, ...]
    sigma_max: float
    j_coupling: float = 0.0
    synergy: dict = field(default_factory=dict)
    antagonism: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "sources", tuple(self.sources))
        if len(self.sources) == 0:
            raise ValueError("ensemble needs at least one source")
        if self.sigma_max <= 0.0:
            raise ValueError(f"sigma_max must be positive, got {self.sigma_max}")
        if self.j_coupling < 0.0:
            raise ValueError(f"j_coupling must be nonnegative, got {self.j_coupling}")
        n = len(self.sources)
        for table_name in ("synergy", "antagonism"):
            for (i, j) in getattr(self, table_name):
                if not (0 <= i < j < n):
                    raise ValueError(f"{table_name} key ({i}, {j}) is not an ordered pair of source indices")

    def source_values(self) -> np.ndarray:
        return np.array([information_value(differential_entropy(s), self.sigma_max)
                         for s in self.sources])


def aggregate_data_value(e: InfoEnsemble) -> float:
    """Ensemble aggregate: mean source weight plus the normalized coupling sum.

    D = (1/n) sum phi_i + J * sum_{i<j} (a_ij - b_ij) phi_i phi_j / (n(n-1)/2).
    A single-source ensemble has no interaction term.
    """
    phis = np.array([value_weight(v) for v in e.source_values()])
    n = phis.size
    base = float(np.mean(phis))
    if n == 1:
        return base
    pair_sum = 0.0
    for (i, j), a_ij in e.synergy.items():
        pair_sum += a_ij * phis[i] * phis[j]
    for (i, j), b_ij in e.antagonism.items():
        pair_sum -= b_ij * phis[i] * phis[j]
    n_pairs = n * (n - 1) / 2.0
    return base + e.j_coupling * pair_sum / n_pairs


def data_value_index(batch) -> float:
    """Squash a batch of aggregates into (0, 1): logistic of their sum."""
    batch = np.asarray(batch, dtype=float)
    if batch.size == 0:
        raise ValueError("batch must be nonempty")
    total = float(np.sum(batch))
    # Branch on sign to avoid overflow in exp for large |total|.
    if total >= 0.0:
        return 1.0 / (1.0 + math.exp(-total))
    z = math.exp(total)
    return z / (1.0 + z)

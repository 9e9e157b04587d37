"""Gaussian tail helpers used by several model components."""

from __future__ import annotations

import numpy as np
from scipy.special import log_ndtr, ndtr


def normal_cdf(x):
    """Standard normal CDF, accurate deep into both tails.

    Backed by the complementary-error-function evaluation, so normal_cdf(-30)
    is a faithful ~1e-198 rather than 0.
    """
    return ndtr(x)


def normal_sf(x):
    """Standard normal survival function 1 - Phi(x) without cancellation."""
    return ndtr(-np.asarray(x, dtype=float))


def normal_log_sf(x):
    """log(1 - Phi(x)), finite far beyond where the survival value underflows."""
    return log_ndtr(-np.asarray(x, dtype=float))


def normal_hazard(x):
    """Hazard rate phi(x) / (1 - Phi(x)) of the standard normal.

    Evaluated in log space so it stays finite and monotone for arguments of
    either sign out to hundreds of standard deviations.
    """
    x = np.asarray(x, dtype=float)
    log_pdf = -0.5 * x * x - 0.5 * np.log(2.0 * np.pi)
    return np.exp(log_pdf - normal_log_sf(x))

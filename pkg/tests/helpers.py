"""Shared oracle helpers for the test suite.

The naive DFA implementation here deliberately avoids the vectorized
projection used by the library: segments are materialized one at a time
and the linear detrend is solved through the explicit 2x2 normal
equations, so agreement between the two is a real cross-check rather
than the same arithmetic twice.
"""
from __future__ import annotations

import datetime as dt

import numpy as np

from hurstscan import ReturnSeries, synthetic_dates

# filled by test_acceptance, printed by the conftest terminal-summary hook
ACCEPTANCE_LINES: list[str] = []


def naive_segment_fluctuations(profile, s: int) -> np.ndarray:
    """Per-segment mean squared residual about a least-squares line.

    Forward segments from the head, backward segments from the tail in
    the same order the library emits them.
    """
    prof = np.asarray(profile, dtype=float)
    t = prof.size
    ns = t // s
    x = np.arange(s, dtype=float)
    sx = x.sum()
    sxx = (x * x).sum()
    det = s * sxx - sx * sx

    def one(seg):
        sy = seg.sum()
        sxy = (x * seg).sum()
        slope = (s * sxy - sx * sy) / det
        intercept = (sy - slope * sx) / s
        resid = seg - intercept - slope * x
        return float(np.mean(resid * resid))

    forward = [one(prof[i * s : (i + 1) * s]) for i in range(ns)]
    backward = [one(prof[t - (j + 1) * s : t - j * s]) for j in range(ns)]
    return np.array(forward + backward)


def lag1_autocorr(x) -> float:
    x = np.asarray(x, dtype=float)
    d = x - x.mean()
    return float(np.dot(d[1:], d[:-1]) / np.dot(d, d))


def sample_kurtosis(x) -> float:
    x = np.asarray(x, dtype=float)
    d = x - x.mean()
    return float(np.mean(d**4) / np.mean(d**2) ** 2)


def make_return_series(values, start: dt.date = dt.date(2000, 1, 3)) -> ReturnSeries:
    values = np.asarray(values, dtype=float)
    return ReturnSeries(dates=synthetic_dates(values.size, start), values=values)

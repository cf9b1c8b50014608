"""Wavelet shrinkage with Chebyshev filter banks."""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .dwt import BoundaryMode, analyze, synthesize
from .filterbank import build_bank
from .filters import make_filter

MAD_SCALE = 0.6745


class ThresholdMode(Enum):
    SOFT = "soft"
    HARD = "hard"


@dataclass(frozen=True)
class DenoiseConfig:
    """Shrinkage settings.

    ``threshold=None`` selects the universal rule
    ``sigma * sqrt(2 ln N)``; a number is used as a manual threshold.
    """

    levels: int = 2
    mode: ThresholdMode = ThresholdMode.SOFT
    threshold: float | None = None
    kind: int = 2
    order: int = 3
    k: int = 0
    boundary: BoundaryMode = BoundaryMode.PERIODIC

    def __post_init__(self):
        if self.levels < 1:
            raise ValueError("levels must be at least 1")
        if self.threshold is not None and not self.threshold >= 0:
            raise ValueError(f"manual threshold must be >= 0, got {self.threshold}")
        object.__setattr__(self, "mode", ThresholdMode(self.mode))

    def bank(self):
        return build_bank(make_filter(self.kind, self.order, self.k or None))


def estimate_sigma(finest_details):
    """Noise level from the finest details: ``median(|d|) / 0.6745``."""
    d = np.asarray(finest_details, dtype=np.float64)
    if d.size == 0:
        raise ValueError("need at least one detail coefficient")
    return float(np.median(np.abs(d)) / MAD_SCALE)


def universal_threshold(sigma, n):
    return float(sigma * np.sqrt(2.0 * np.log(n)))


def soft_threshold(d, t):
    d = np.asarray(d, dtype=np.float64)
    return np.sign(d) * np.maximum(np.abs(d) - t, 0.0)


def hard_threshold(d, t):
    d = np.asarray(d, dtype=np.float64)
    return np.where(np.abs(d) > t, d, 0.0)


def threshold_for(tree, config):
    if config.threshold is not None:
        return float(config.threshold)
    return universal_threshold(estimate_sigma(tree.details[0]), tree.original_length)


def shrink(tree, config):
    """Threshold the details of the ``config.levels`` finest levels; approximation untouched."""
    if tree.levels < config.levels:
        raise ValueError(f"tree has {tree.levels} levels, config asks for {config.levels}")
    t = threshold_for(tree, config)
    op = soft_threshold if config.mode is ThresholdMode.SOFT else hard_threshold
    out = tree.copy()
    for j in range(config.levels):
        out.details[j] = op(out.details[j], t)
    return out


def denoise(signal, config):
    """analyze, shrink, synthesize; returns as many samples as ``signal``."""
    x = np.asarray(signal, dtype=np.float64).ravel()
    bank = config.bank()
    tree = analyze(x, bank, config.levels, config.boundary)
    return synthesize(shrink(tree, config), bank)

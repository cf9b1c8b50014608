"""
Multi-level two-channel wavelet analysis and synthesis.

Analysis convolves the running approximation with ``h_d`` and ``g_d`` and keeps
the even-indexed outputs. Synthesis upsamples, filters with ``h_r``/``g_r`` and
adds the branches. A PR bank of order m returns its input delayed by m samples
per level; :func:`synthesize` removes that delay level by level so the output
lines up with the input.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import _kernels
from .filterbank import FilterBank


class BoundaryMode(Enum):
    PERIODIC = "periodic"
    ZEROPAD = "zeropad"


@dataclass
class DecompositionTree:
    """Coefficients of an L-level decomposition, details finest first.

    ``lengths[j]`` is the length of the sequence that was split at level
    j + 1 (``lengths[0] == original_length``); synthesis trims back to it.
    """

    approximation: np.ndarray
    details: list
    boundary_mode: BoundaryMode
    original_length: int
    lengths: list = field(default_factory=list)
    order: int = 0

    @property
    def levels(self):
        return len(self.details)

    def copy(self):
        return DecompositionTree(
            self.approximation.copy(),
            [d.copy() for d in self.details],
            self.boundary_mode,
            self.original_length,
            list(self.lengths),
            self.order,
        )


def _mode(mode):
    return mode if isinstance(mode, BoundaryMode) else BoundaryMode(str(mode).lower())


def level_lengths(n, levels, order, mode):
    """Input length at each level and the final approximation length."""
    mode = _mode(mode)
    lengths = [n]
    for _ in range(levels):
        cur = lengths[-1]
        if mode is BoundaryMode.PERIODIC:
            lengths.append((cur + 1) // 2)
        else:
            lengths.append((cur + order + 1) // 2)
    return lengths


def max_levels(n):
    """Deepest decomposition allowed for a length-n signal (``2**L <= n``)."""
    return int(np.floor(np.log2(n))) if n >= 1 else 0


def analysis_step(x, bank, mode=BoundaryMode.PERIODIC):
    """One level: ``(approximation, detail)`` of ``x``."""
    mode = _mode(mode)
    x = np.asarray(x, dtype=np.float64)
    if mode is BoundaryMode.PERIODIC:
        if len(x) % 2:
            x = np.append(x, x[-1])
        return (_kernels.periodic_analysis(x, bank.h_d),
                _kernels.periodic_analysis(x, bank.g_d))
    return (_kernels.zeropad_analysis(x, bank.h_d),
            _kernels.zeropad_analysis(x, bank.g_d))


def synthesis_step(a, d, bank, length, mode=BoundaryMode.PERIODIC, compensate=True):
    """Invert :func:`analysis_step`, returning ``length`` samples.

    With ``compensate`` the bank delay (its order) is removed; otherwise the
    periodic output is returned delayed by the order.
    """
    mode = _mode(mode)
    m = bank.order
    if len(a) != len(d):
        raise ValueError(f"approximation/detail size mismatch: {len(a)} vs {len(d)}")
    if mode is BoundaryMode.PERIODIC:
        n = 2 * len(a)
        if length > n:
            raise ValueError(f"cannot synthesize {length} samples from {len(a)} coefficients")
        y = (_kernels.periodic_synthesis(a, bank.h_r, n)
             + _kernels.periodic_synthesis(d, bank.g_r, n))
        if compensate:
            y = np.roll(y, -m)
        return y[:length]
    y = _kernels.upsample_convolve(a, bank.h_r) + _kernels.upsample_convolve(d, bank.g_r)
    start = m if compensate else 0
    if start + length > len(y):
        raise ValueError(f"cannot synthesize {length} samples from {len(a)} coefficients")
    return y[start:start + length]


def analyze(signal, bank, levels, mode=BoundaryMode.PERIODIC):
    """Decompose ``signal`` into ``levels`` detail bands plus an approximation.

    Periodic mode extends odd-length inputs (at any level) by repeating the
    last sample. Zero-pad mode keeps the full linear convolution, so level k
    has ``ceil((n + m) / 2)`` coefficients for an input of length n.
    """
    mode = _mode(mode)
    x = np.asarray(signal, dtype=np.float64).ravel()
    if x.size == 0:
        raise ValueError("cannot decompose an empty signal")
    if not np.all(np.isfinite(x)):
        raise ValueError("signal contains non-finite samples")
    if levels < 1:
        raise ValueError(f"levels must be at least 1, got {levels}")
    if 2**levels > x.size:
        raise ValueError(
            f"{levels} levels need at least {2**levels} samples, signal has {x.size} "
            f"(max {max_levels(x.size)} levels)"
        )
    lengths = [x.size]
    details = []
    a = x
    for _ in range(levels):
        a, d = analysis_step(a, bank, mode)
        details.append(d)
        lengths.append(len(a))
    return DecompositionTree(a, details, mode, x.size, lengths[:-1], bank.order)


def synthesize(tree, bank, compensate=True):
    """Rebuild the signal from ``tree``.

    With ``compensate=True`` each level's delay is removed before the next
    finer level, so a PR bank reproduces the analyzed signal exactly (up to
    rounding). With ``compensate=False`` (periodic mode, all level lengths
    even) details are delayed to stay aligned and the output is the input
    circularly delayed by ``total_delay(bank.order, tree.levels)``.
    """
    mode = tree.boundary_mode
    if tree.order and tree.order != bank.order:
        raise ValueError(f"tree was built with order {tree.order}, bank has order {bank.order}")
    lengths = tree.lengths or level_lengths(tree.original_length, tree.levels, bank.order, mode)[:-1]
    if len(lengths) != tree.levels:
        raise ValueError("tree lengths do not match its number of levels")
    a = np.asarray(tree.approximation, dtype=np.float64)
    if compensate:
        for j in reversed(range(tree.levels)):
            d = np.asarray(tree.details[j], dtype=np.float64)
            if len(d) != len(a):
                raise ValueError(f"level {j + 1}: {len(a)} approximation vs {len(d)} detail coefficients")
            a = synthesis_step(a, d, bank, lengths[j], mode)
        return a

    if mode is not BoundaryMode.PERIODIC or any(n % 2 for n in lengths):
        raise ValueError("uncompensated synthesis needs periodic mode and even lengths at every level")
    m = bank.order
    delay = 0
    for j in reversed(range(tree.levels)):
        d = np.roll(np.asarray(tree.details[j], dtype=np.float64), delay)
        if len(d) != len(a):
            raise ValueError(f"level {j + 1}: {len(a)} approximation vs {len(d)} detail coefficients")
        a = synthesis_step(a, d, bank, lengths[j], mode, compensate=False)
        delay = 2 * delay + m
    return a


def total_delay(order, levels):
    """Delay of an uncompensated L-level periodic PR reconstruction: ``m (2**L - 1)``."""
    return order * (2**levels - 1)


def reconstruction_error(signal, bank, levels, mode=BoundaryMode.PERIODIC):
    """Relative L2 error of ``synthesize(analyze(signal))`` against ``signal``.

    Returns 0 for the zero signal.
    """
    x = np.asarray(signal, dtype=np.float64).ravel()
    y = synthesize(analyze(x, bank, levels, mode), bank)
    norm = np.linalg.norm(x)
    err = np.linalg.norm(y - x)
    return float(err / norm) if norm > 0 else float(err)


def coefficient_energy(tree):
    return float(np.sum(tree.approximation**2) + sum(np.sum(d**2) for d in tree.details))

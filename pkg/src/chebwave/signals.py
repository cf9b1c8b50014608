"""Synthetic test signals and noise helpers."""

import numpy as np

# Donoho-Johnstone "Bumps": positions, heights, widths on t in [0, 1).
BUMP_POSITIONS = np.array([0.10, 0.13, 0.15, 0.23, 0.25, 0.40, 0.44, 0.65, 0.76, 0.78, 0.81])
BUMP_HEIGHTS = np.array([4.0, 5.0, 3.0, 4.0, 5.0, 4.2, 2.1, 4.3, 3.1, 5.1, 4.2])
BUMP_WIDTHS = np.array([0.005, 0.005, 0.006, 0.01, 0.01, 0.03, 0.01, 0.01, 0.005, 0.008, 0.005])


def bumps(n=4096):
    """``sum_i h_i / (1 + |(t - p_i) / w_i|)**4`` sampled at ``t = k / n``."""
    t = np.arange(n) / n
    u = np.abs((t[:, None] - BUMP_POSITIONS[None, :]) / BUMP_WIDTHS[None, :])
    return (BUMP_HEIGHTS[None, :] / (1.0 + u) ** 4).sum(axis=1)


def frequency_breakdown(n=1024, low=0.02, high=0.2):
    """A sinusoid whose normalized frequency jumps from ``low`` to ``high`` halfway."""
    k = np.arange(n)
    half = n // 2
    out = np.sin(2 * np.pi * low * k)
    out[half:] = np.sin(2 * np.pi * high * (k[half:] - half))
    return out


def noise_sigma(clean, snr_db):
    """Gaussian noise level giving ``snr_db`` against the signal's mean power."""
    power = np.mean(np.asarray(clean, dtype=np.float64) ** 2)
    return float(np.sqrt(power / 10.0 ** (snr_db / 10.0)))


def add_noise(clean, snr_db, rng):
    clean = np.asarray(clean, dtype=np.float64)
    return clean + noise_sigma(clean, snr_db) * rng.standard_normal(clean.shape)


def snr_db(clean, estimate):
    clean = np.asarray(clean, dtype=np.float64)
    err = np.sum((np.asarray(estimate, dtype=np.float64) - clean) ** 2)
    if err == 0:
        return float("inf")
    return float(10.0 * np.log10(np.sum(clean**2) / err))


SIGNALS = {"bumps": bumps, "breakdown": frequency_breakdown}

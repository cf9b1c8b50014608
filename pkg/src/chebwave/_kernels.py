"""
Hot inner loops for the cascade iteration and the two-channel transforms.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy
version with identical semantics. The module-level names (``upsample_convolve``,
``periodic_analysis``, ...) are bound to the numba versions unless numba is
missing or the environment variable ``CHEBWAVE_DISABLE_NUMBA`` is set to a
non-empty value other than ``0``.

    CHEBWAVE_DISABLE_NUMBA=1 pytest        # run the suite on the numpy path
"""

import os

import numpy as np

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]):
            return args[0]
        return lambda func: func


def _env_disabled():
    return os.environ.get("CHEBWAVE_DISABLE_NUMBA", "").strip() not in ("", "0")


USE_NUMBA = NUMBA_AVAILABLE and not _env_disabled()
BACKEND = "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numpy reference path
# ---------------------------------------------------------------------------

def upsample_convolve_numpy(x, taps):
    """Insert a zero between samples of ``x`` and convolve with ``taps``."""
    x = np.asarray(x, dtype=np.float64)
    taps = np.asarray(taps, dtype=np.float64)
    up = np.zeros(2 * len(x) - 1)
    up[::2] = x
    return np.convolve(up, taps)


def periodic_analysis_numpy(x, taps):
    """``y[k] = sum_n taps[n] * x[(2k - n) mod N]`` for ``k < N // 2``."""
    x = np.asarray(x, dtype=np.float64)
    taps = np.asarray(taps, dtype=np.float64)
    N = len(x)
    k = np.arange(N // 2)
    idx = (2 * k[:, None] - np.arange(len(taps))[None, :]) % N
    return x[idx] @ taps


def periodic_synthesis_numpy(c, taps, N):
    """Scatter ``c[k] * taps[n]`` into ``y[(2k + n) mod N]``."""
    c = np.asarray(c, dtype=np.float64)
    taps = np.asarray(taps, dtype=np.float64)
    y = np.zeros(N)
    idx = (2 * np.arange(len(c))[:, None] + np.arange(len(taps))[None, :]) % N
    np.add.at(y, idx, c[:, None] * taps[None, :])
    return y


def zeropad_analysis_numpy(x, taps):
    """Full linear convolution followed by keeping even-indexed samples."""
    return np.convolve(np.asarray(x, dtype=np.float64),
                       np.asarray(taps, dtype=np.float64))[::2].copy()


# ---------------------------------------------------------------------------
# numba path
# ---------------------------------------------------------------------------

@njit(cache=True)
def upsample_convolve_numba(x, taps):
    nx = x.shape[0]
    nt = taps.shape[0]
    out = np.zeros(2 * nx - 1 + nt - 1)
    for i in range(nx):
        xi = x[i]
        if xi == 0.0:
            continue
        base = 2 * i
        for n in range(nt):
            out[base + n] += xi * taps[n]
    return out


@njit(cache=True)
def periodic_analysis_numba(x, taps):
    N = x.shape[0]
    nt = taps.shape[0]
    half = N // 2
    out = np.zeros(half)
    for k in range(half):
        acc = 0.0
        for n in range(nt):
            acc += taps[n] * x[(2 * k - n) % N]
        out[k] = acc
    return out


@njit(cache=True)
def periodic_synthesis_numba(c, taps, N):
    nt = taps.shape[0]
    out = np.zeros(N)
    for k in range(c.shape[0]):
        ck = c[k]
        for n in range(nt):
            out[(2 * k + n) % N] += ck * taps[n]
    return out


@njit(cache=True)
def zeropad_analysis_numba(x, taps):
    nx = x.shape[0]
    nt = taps.shape[0]
    full = nx + nt - 1
    out = np.zeros((full + 1) // 2)
    for k in range(out.shape[0]):
        t = 2 * k
        acc = 0.0
        lo = max(0, t - nx + 1)
        hi = min(nt - 1, t)
        for n in range(lo, hi + 1):
            acc += taps[n] * x[t - n]
        out[k] = acc
    return out


def _f64(a):
    return np.ascontiguousarray(a, dtype=np.float64)


def _wrap(kernel):
    def call(*arrays):
        return kernel(*[_f64(a) if np.ndim(a) else int(a) for a in arrays])

    call.__name__ = kernel.__name__
    call.__doc__ = kernel.__doc__
    return call


if USE_NUMBA:
    upsample_convolve = _wrap(upsample_convolve_numba)
    periodic_analysis = _wrap(periodic_analysis_numba)
    periodic_synthesis = _wrap(periodic_synthesis_numba)
    zeropad_analysis = _wrap(zeropad_analysis_numba)
else:
    upsample_convolve = upsample_convolve_numpy
    periodic_analysis = periodic_analysis_numpy
    periodic_synthesis = periodic_synthesis_numpy
    zeropad_analysis = zeropad_analysis_numpy

"""Chebyshev polynomials of the first and second kind by three-term recurrence."""

from enum import Enum

import numpy as np


class PolyKind(Enum):
    FIRST = 1
    SECOND = 2


def _recurrence(m, x, second):
    if m < 0:
        raise ValueError(f"polynomial order must be nonnegative, got {m}")
    x = np.asarray(x, dtype=np.float64) if not np.isscalar(x) else float(x)
    prev = np.ones_like(x) if isinstance(x, np.ndarray) else 1.0
    if m == 0:
        return prev
    cur = 2.0 * x if second else x
    for _ in range(m - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def chebyshev_t(m, x):
    """Evaluate T_m(x) with T_0 = 1, T_1 = x, T_m = 2x T_{m-1} - T_{m-2}.

    ``x`` may be a scalar or an array; any finite real is accepted.
    """
    return _recurrence(m, x, second=False)


def chebyshev_u(m, x):
    """Evaluate U_m(x): same recurrence as :func:`chebyshev_t` with U_1 = 2x."""
    return _recurrence(m, x, second=True)


def chebyshev(kind, m, x):
    if PolyKind(kind) is PolyKind.FIRST:
        return chebyshev_t(m, x)
    return chebyshev_u(m, x)

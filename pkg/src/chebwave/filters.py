"""
Chebyshev lowpass prototypes.

Two closed forms come out of the half-angle substitution ``x = cos(w/2)``:

* first kind, odd m:  H(w) = exp(-j m w / 2) T_m(cos(w/2)) = (1 + exp(-j m w)) / 2,
  so the taps are 1/2 at n = 0 and n = m;
* second kind, odd m: H(w) = exp(-j m w / 2) U_m(cos(w/2)) / (m + 1), the
  length-(m+1) moving average.

The generalized second-kind filter stretches the frequency axis by an odd
factor ``2k + 1``, which in time is an upsampling of the moving average.

Taps are exact :class:`fractions.Fraction` values; conversion to float
happens only in :func:`frequency_response` and the DSP code.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np


class FilterKind(Enum):
    TYPE_I = "type1"
    TYPE_II = "type2"
    TYPE_II_GENERALIZED = "type2-generalized"
    CUSTOM = "custom"


@dataclass(frozen=True)
class FilterTaps:
    """Unit-sum FIR lowpass prototype with exact rational taps.

    ``order`` is the order m of the underlying polynomial; the
    tap count is ``m + 1`` except for the generalized filter, which has
    ``(2k + 1) m + 1`` taps. ``degree`` is always ``len(coefficients) - 1``
    and is the order of the filter bank built from these taps.
    """

    coefficients: tuple
    order: int
    kind: FilterKind
    upsampling: int = 0  # k of the generalized filter

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs:
            raise ValueError("a filter needs at least one tap")
        if sum(coeffs) != 1:
            raise ValueError(f"taps must sum to exactly 1, got {sum(coeffs)}")
        if self.kind is not FilterKind.CUSTOM and coeffs != coeffs[::-1]:
            raise ValueError("Chebyshev prototypes are symmetric")

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, n):
        return self.coefficients[n]

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def is_symmetric(self):
        return self.coefficients == self.coefficients[::-1]

    def as_float(self):
        return np.array([float(c) for c in self.coefficients])

    def label(self):
        if self.kind is FilterKind.TYPE_II_GENERALIZED:
            return f"{self.kind.value} m={self.order} k={self.upsampling}"
        return f"{self.kind.value} m={self.order}"


def _check_odd_order(m):
    if isinstance(m, bool) or int(m) != m:
        raise ValueError(f"order m must be an odd positive integer, got {m!r}")
    m = int(m)
    if m < 1 or m % 2 == 0:
        raise ValueError(
            f"order m must be an odd positive integer (half-angle scaling needs odd m), got {m}"
        )
    return m


def make_type1(m):
    """First-kind prototype: ``[1/2, 0, ..., 0, 1/2]`` with m - 1 interior zeros."""
    m = _check_odd_order(m)
    coeffs = [Fraction(0)] * (m + 1)
    coeffs[0] = coeffs[m] = Fraction(1, 2)
    return FilterTaps(tuple(coeffs), m, FilterKind.TYPE_I)


def make_type2(m):
    """Second-kind prototype: m + 1 taps of ``1/(m+1)`` (a moving average)."""
    m = _check_odd_order(m)
    return FilterTaps((Fraction(1, m + 1),) * (m + 1), m, FilterKind.TYPE_II)


def make_type2_generalized(m, k):
    """Second-kind prototype upsampled by the odd factor ``2k + 1``.

    ``k = 0`` reproduces :func:`make_type2`. The frequency response at w is
    the base response at ``(2k + 1) w``, which narrows the passband.
    """
    m = _check_odd_order(m)
    if isinstance(k, bool) or int(k) != k or k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")
    k = int(k)
    step = 2 * k + 1
    coeffs = [Fraction(0)] * (step * m + 1)
    for i in range(m + 1):
        coeffs[i * step] = Fraction(1, m + 1)
    if k == 0:
        return FilterTaps(tuple(coeffs), m, FilterKind.TYPE_II)
    return FilterTaps(tuple(coeffs), m, FilterKind.TYPE_II_GENERALIZED, upsampling=k)


def custom_taps(values):
    """Wrap arbitrary unit-sum taps (anything :class:`Fraction` accepts).

    The bank order is ``len(values) - 1`` and must be odd, so the tap count
    must be even.
    """
    coeffs = tuple(Fraction(v) for v in values)
    _check_odd_order(len(coeffs) - 1)
    return FilterTaps(coeffs, len(coeffs) - 1, FilterKind.CUSTOM)


def make_filter(kind, m, k=None):
    """Dispatch on ``kind`` in {1, 2} (or a :class:`FilterKind`)."""
    if kind in (1, "1", FilterKind.TYPE_I):
        if k:
            raise ValueError("the selectivity parameter k applies to second-kind filters only")
        return make_type1(m)
    if kind in (2, "2", FilterKind.TYPE_II, FilterKind.TYPE_II_GENERALIZED):
        return make_type2_generalized(m, k or 0)
    raise ValueError(f"unknown filter kind {kind!r}; expected 1 or 2")


@dataclass(frozen=True)
class FrequencySample:
    omega: float
    magnitude: float
    phase: float


@dataclass(frozen=True)
class FrequencyResponse:
    omega: np.ndarray
    magnitude: np.ndarray
    phase: np.ndarray

    def __len__(self):
        return len(self.omega)

    def __iter__(self):
        for w, a, p in zip(self.omega, self.magnitude, self.phase):
            yield FrequencySample(float(w), float(a), float(p))


def frequency_response(taps, grid_size=512, omega=None):
    """Evaluate ``H(e^{jw}) = sum_n h[n] exp(-j w n)``.

    Parameters
    ----------
    taps : FilterTaps or array_like
        Filter taps, first index 0.
    grid_size : int
        Number of uniformly spaced points on ``[0, pi]``, both endpoints
        included. Ignored when ``omega`` is given.
    omega : array_like, optional
        Explicit evaluation frequencies.

    Returns
    -------
    FrequencyResponse
        Magnitude and unwrapped phase on the grid.
    """
    h = taps.as_float() if isinstance(taps, FilterTaps) else np.asarray(taps, dtype=np.float64)
    if omega is None:
        if grid_size < 2:
            raise ValueError(f"grid_size must be at least 2, got {grid_size}")
        omega = np.linspace(0.0, np.pi, grid_size)
    else:
        omega = np.asarray(omega, dtype=np.float64)
    n = np.arange(len(h))
    H = np.exp(-1j * np.outer(omega, n)) @ h
    return FrequencyResponse(omega, np.abs(H), np.unwrap(np.angle(H)))

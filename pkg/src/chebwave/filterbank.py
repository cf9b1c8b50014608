"""
Two-channel analysis/synthesis banks built from a lowpass prototype.

With prototype p of odd order m the four filters are

    h_r[n] = sqrt(2) p[n]
    g_r[n] = (-1)**(n+1) h_r[m-n]
    h_d[n] = h_r[m-n]
    g_d[n] = g_r[m-n]

Exactly one factor sqrt(2) is applied. The overall sign of the highpass pair
is chosen so that G_r = (-1 + z^-m)/sqrt(2) and G_d = (1 - z^-m)/sqrt(2) for
the first-kind prototype; any product of two filters is then rational.

Every bank filter is stored as an exact rational "unit" polynomial equal to
the real filter divided by sqrt(2). Products of two filters carry a factor 2,
which is applied explicitly, so alias and distortion checks never touch a
float.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from .filters import FilterTaps, custom_taps
from .laurent import LaurentPoly

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class FilterBank:
    """Four filters ``(h_r, g_r, h_d, g_d)``.

    The ``*_unit`` fields hold exact taps divided by sqrt(2); the float
    properties ``h_r`` etc. return the real, sqrt(2)-scaled taps.
    """

    h_r_unit: tuple
    g_r_unit: tuple
    h_d_unit: tuple
    g_d_unit: tuple
    prototype: FilterTaps = None

    @property
    def order(self):
        return len(self.h_r_unit) - 1

    @property
    def h_r(self):
        return SQRT2 * np.array([float(c) for c in self.h_r_unit])

    @property
    def g_r(self):
        return SQRT2 * np.array([float(c) for c in self.g_r_unit])

    @property
    def h_d(self):
        return SQRT2 * np.array([float(c) for c in self.h_d_unit])

    @property
    def g_d(self):
        return SQRT2 * np.array([float(c) for c in self.g_d_unit])

    def unit_polys(self):
        """``(H_r, G_r, H_d, G_d) / sqrt(2)`` as Laurent polynomials."""
        return tuple(
            LaurentPoly.from_taps(t)
            for t in (self.h_r_unit, self.g_r_unit, self.h_d_unit, self.g_d_unit)
        )


def build_bank(prototype):
    """Build the analysis/synthesis bank of a unit-sum prototype of odd order."""
    if not isinstance(prototype, FilterTaps):
        prototype = custom_taps(prototype)
    p = prototype.coefficients
    m = len(p) - 1
    if m < 1 or m % 2 == 0:
        raise ValueError(f"bank order len(taps) - 1 must be odd and positive, got {m}")
    h_r = tuple(p)
    g_r = tuple((-1) ** (n + 1) * h_r[m - n] for n in range(m + 1))
    h_d = h_r[::-1]
    g_d = g_r[::-1]
    return FilterBank(h_r, g_r, h_d, g_d, prototype)


def bank_from_unit_taps(h_r, g_r, h_d, g_d):
    """Assemble a bank from four arbitrary filters given divided by sqrt(2)."""
    taps = [tuple(Fraction(c) for c in t) for t in (h_r, g_r, h_d, g_d)]
    return FilterBank(*taps)


def alias_residual(bank):
    """``H_r(z) H_d(-z) + G_r(z) G_d(-z)``, exactly."""
    hr, gr, hd, gd = bank.unit_polys()
    return 2 * (hr * hd.substitute_negz() + gr * gd.substitute_negz())


def distortion_product(bank):
    """``H_r(z) H_d(z) + G_r(z) G_d(z)``, exactly."""
    hr, gr, hd, gd = bank.unit_polys()
    return 2 * (hr * hd + gr * gd)


def pr_delay(bank):
    """Delay l if the bank is PR (alias-free with distortion ``2 z^-l``), else None."""
    if not alias_residual(bank).is_zero:
        return None
    delay = distortion_product(bank).is_pure_delay()
    if delay is None or delay[0] != 2:
        return None
    return delay[1]


def even_shift_autocorrelation(prototype):
    """``a[n] = sum_k h[k] h[k-2n]`` for ``h = sqrt(2) * prototype``, n >= 0.

    Computed exactly as ``2 * sum_k p[k] p[k-2n]``; the sequence is even in n
    so only nonnegative lags are returned.
    """
    p = [Fraction(c) for c in prototype]
    L = len(p)
    return [2 * sum(p[k] * p[k - 2 * n] for k in range(2 * n, L)) for n in range((L + 1) // 2)]


def even_shift_orthogonal(prototype):
    """True iff ``sum_k h[k] h[k-2n] = delta[n]`` for the sqrt(2)-scaled prototype."""
    a = even_shift_autocorrelation(prototype)
    return a[0] == 1 and all(v == 0 for v in a[1:])


@dataclass(frozen=True)
class BankPropertyReport:
    alias_residual: LaurentPoly
    distortion_product: LaurentPoly
    pr_delay: int | None
    is_orthogonal: bool
    alias_norm: float
    distortion_error: float  # max |distortion - 2 z^-order|

    @property
    def alias_zero(self):
        return self.alias_residual.is_zero

    @property
    def perfect_reconstruction(self):
        return self.pr_delay is not None


def analyze_bank(prototype):
    """Run the alias, distortion and orthogonality checks on ``prototype``'s bank."""
    bank = build_bank(prototype)
    alias = alias_residual(bank)
    dist = distortion_product(bank)
    delay = dist.is_pure_delay()
    pr = delay[1] if alias.is_zero and delay is not None and delay[0] == 2 else None
    target = LaurentPoly.monomial(2, bank.order)
    return BankPropertyReport(
        alias_residual=alias,
        distortion_product=dist,
        pr_delay=pr,
        is_orthogonal=even_shift_orthogonal(bank.prototype),
        alias_norm=float(alias.max_abs_coefficient()),
        distortion_error=float((dist - target).max_abs_coefficient()),
    )

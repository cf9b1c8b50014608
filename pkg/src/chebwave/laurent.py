"""Exact finite Laurent polynomials in z^-1 with rational coefficients."""

from fractions import Fraction


class LaurentPoly:
    """``sum_i coefficients[i] * z^-(min_degree + i)``, kept in trimmed form.

    The zero polynomial has no coefficients and ``min_degree == 0``. Equality
    is structural, so ``p == LaurentPoly.zero()`` decides "identically zero".
    """

    __slots__ = ("coefficients", "min_degree")

    def __init__(self, coefficients=(), min_degree=0):
        coeffs = [Fraction(c) for c in coefficients]
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "coefficients", ())
            object.__setattr__(self, "min_degree", 0)
        else:
            object.__setattr__(self, "coefficients", tuple(coeffs[lo:hi]))
            object.__setattr__(self, "min_degree", int(min_degree) + lo)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, coefficient, degree):
        """``coefficient * z^-degree``."""
        return cls([coefficient], degree)

    @classmethod
    def from_taps(cls, taps, scale=1):
        """z-transform of a causal tap sequence, times an exact ``scale``."""
        scale = Fraction(scale)
        return cls([scale * Fraction(t) for t in taps], 0)

    @property
    def is_zero(self):
        return not self.coefficients

    @property
    def max_degree(self):
        return self.min_degree + len(self.coefficients) - 1

    def coefficient(self, degree):
        i = degree - self.min_degree
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def as_dict(self):
        return {self.min_degree + i: c for i, c in enumerate(self.coefficients) if c}

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly([other])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_degree == other.min_degree and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.min_degree, self.coefficients))

    def __repr__(self):
        if self.is_zero:
            return "LaurentPoly(0)"
        return f"LaurentPoly({[str(c) for c in self.coefficients]}, min_degree={self.min_degree})"

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for d, c in sorted(self.as_dict().items()):
            terms.append(str(c) if d == 0 else f"{c}*z^{-d}")
        return " + ".join(terms)

    def __neg__(self):
        return LaurentPoly([-c for c in self.coefficients], self.min_degree)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly([other])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.min_degree, other.min_degree)
        hi = max(self.max_degree, other.max_degree)
        return LaurentPoly(
            [self.coefficient(d) + other.coefficient(d) for d in range(lo, hi + 1)], lo
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly([c * other for c in self.coefficients], self.min_degree)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LaurentPoly.zero()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return LaurentPoly(out, self.min_degree + other.min_degree)

    __rmul__ = __mul__

    def substitute_negz(self):
        """Replace z by -z: the coefficient of z^-n picks up ``(-1)**n``."""
        return LaurentPoly(
            [c if (self.min_degree + i) % 2 == 0 else -c for i, c in enumerate(self.coefficients)],
            self.min_degree,
        )

    def is_pure_delay(self):
        """Return ``(gain, delay)`` if the polynomial is ``gain * z^-delay``, else None.

        The zero polynomial is not a delay.
        """
        if len(self.coefficients) != 1:
            return None
        return self.coefficients[0], self.min_degree

    def max_abs_coefficient(self):
        return max((abs(c) for c in self.coefficients), default=Fraction(0))


def multiply(a, b):
    return a * b


def substitute_negz(a):
    return a.substitute_negz()


def is_pure_delay(a):
    return a.is_pure_delay()


def from_taps(taps, scale=1):
    return LaurentPoly.from_taps(taps, scale)

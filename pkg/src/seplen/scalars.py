"""Scalar backends: exact Gaussian rationals and double-precision complex floats.

The exact backend stores a complex number as a pair of arbitrary-precision
rationals, so sums, products, quotients and conjugates never round.  The float
backend is ordinary ``complex``/``float64`` arithmetic.  Every public function
in this package that computes ranks or determinants accepts a backend tag and
keeps its results bit-reproducible for a fixed tag.
"""

from __future__ import annotations

from fractions import Fraction

EXACT = "exact"
FLOAT = "float"
AUTO = "auto"

BACKENDS = (EXACT, FLOAT)

# With d the total Hilbert-space dimension, ``auto`` resolves to the exact
# backend while d**2 <= AUTO_EXACT_LIMIT and to floats beyond that.
AUTO_EXACT_LIMIT = 1200


def resolve_backend(backend: str | None, hermitian_dim: int) -> str:
    """Turn ``None``/``"auto"`` into a concrete backend tag."""
    if backend is None or backend == AUTO:
        return EXACT if hermitian_dim <= AUTO_EXACT_LIMIT else FLOAT
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; expected 'exact', 'float' or 'auto'")
    return backend


def parse_rational(value: int | Fraction | float | str) -> Fraction:
    """Parse an exact rational from an int, Fraction, float or ``"p/q"`` string.

    Floats convert to their exact dyadic value; strings accept the forms
    ``"3"``, ``"-3/4"`` and ``"1.25"``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def rational_str(value: Fraction | int) -> str:
    """Canonical ``"p/q"`` rendering; the denominator is always present and positive."""
    frac = value if isinstance(value, Fraction) else Fraction(value)
    return f"{frac.numerator}/{frac.denominator}"


class GaussianRational:
    """A complex number ``re + im*i`` with rational real and imaginary parts.

    Instances are immutable by convention; all operators return new objects.
    Mixed arithmetic with ``int`` and ``Fraction`` is supported so that
    matrix code can stay backend-agnostic.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str | float = 0, im: int | Fraction | str | float = 0):
        self.re = parse_rational(re)
        self.im = parse_rational(im)

    @classmethod
    def from_value(cls, value) -> "GaussianRational":
        """Coerce an int, Fraction, complex, float or GaussianRational."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(parse_rational(value))

    # -- structure ---------------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return not self.re and not self.im

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        denom = o.abs2()
        if not denom:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational((self.re * o.re + self.im * o.im) / denom,
                                (self.im * o.re - self.re * o.im) / denom)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    # -- comparisons / conversions ------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)

"""Exact arithmetic substrate: arbitrary-precision rationals and quadratic surds.

Rationals are plain `fractions.Fraction` values (always stored fully reduced
with a positive denominator); this module adds the canonical "num/den" wire
format plus exact arithmetic, sign evaluation and decimal rendering for
elements a + b*sqrt(d) of a real quadratic field.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import isqrt, sqrt

__all__ = [
    "DomainError",
    "Rational",
    "GOLDEN_RATIO",
    "QuadraticSurd",
    "abs_le",
    "abs_lt",
    "as_rational",
    "decimal_str",
    "format_rational",
    "parse_rational",
    "quadratic_roots",
    "sqrt_decomposition",
    "surd_sign",
]

Rational = Fraction


class DomainError(Exception):
    """An operation was asked to leave its mathematical domain."""


def as_rational(value: Fraction | int | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse a "num/den" literal (a bare integer is accepted) into a reduced Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational literal {text!r}") from exc


def format_rational(value: Fraction | int) -> str:
    """Canonical "num/den" form with the denominator always spelled out, e.g. "-3/2", "7/1"."""
    value = as_rational(value)
    return f"{value.numerator}/{value.denominator}"


def _square_split(n: int) -> tuple[int, int]:
    """Write n = s*s*d with d square-free.

    Trial division; adequate for the small radicands arising from quadratic
    discriminants of modest rational coefficients.
    """
    s, d, f = 1, 1, 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            s *= f ** (e // 2)
            if e % 2:
                d *= f
        f += 1 if f == 2 else 2
    return s, d * n  # leftover n has no factor below its square root


def sqrt_decomposition(value: Fraction | int) -> tuple[Fraction, int]:
    """Express sqrt(value) as coeff*sqrt(d) with d a square-free integer.

    d == 1 exactly when value is the square of a rational.
    """
    value = as_rational(value)
    if value < 0:
        raise DomainError(f"square root of negative value {value}")
    if value == 0:
        return Fraction(0), 1
    s, d = _square_split(value.numerator * value.denominator)
    return Fraction(s, value.denominator), d


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@total_ordering
class QuadraticSurd:
    """Exact element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).

    The radicand is reduced to its square-free part on construction; when the
    value collapses to a rational (b == 0) the radicand is irrelevant and is
    normalised to 2.  Values with different radicands only mix when at least
    one side is rational-valued.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: Fraction | int | str, b: Fraction | int | str = 0, d: int = 2) -> None:
        a, b = as_rational(a), as_rational(b)
        if not isinstance(d, int) or d < 1:
            raise DomainError(f"radicand must be a positive integer, got {d!r}")
        s, d = _square_split(d)
        b *= s
        if d == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            d = 2
        self._a, self._b, self._d = a, b, d

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def as_fraction(self) -> Fraction:
        if self._b != 0:
            raise DomainError(f"{self} is irrational")
        return self._a

    def to_record(self) -> dict:
        """Serialisable form: rational parts as "num/den" strings plus the radicand."""
        return {"a": format_rational(self._a), "b": format_rational(self._b), "d": self._d}

    def conjugate(self) -> QuadraticSurd:
        return QuadraticSurd(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return self._a * self._a - self._b * self._b * self._d

    def sign(self) -> int:
        """Exact sign, decided without floating point."""
        a, b, d = self._a, self._b, self._d
        if b == 0:
            return _sign(a)
        if a == 0:
            return _sign(b)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a*a against b*b*d; sqrt(d) is irrational so
        # the two can never be equal here
        if a > 0:
            return 1 if a * a > b * b * d else -1
        return -1 if a * a > b * b * d else 1

    def _coerce(self, other: object) -> QuadraticSurd | None:
        if isinstance(other, QuadraticSurd):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd(other)
        return None

    def _common_radicand(self, other: QuadraticSurd) -> int:
        if self._b == 0:
            return other._d
        if other._b == 0:
            return self._d
        if self._d != other._d:
            raise DomainError(f"incompatible radicands {self._d} and {other._d}")
        return self._d

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self._b == 0 and rhs._b == 0:
            return self._a == rhs._a
        return self._a == rhs._a and self._b == rhs._b and self._d == rhs._d

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __lt__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() < 0

    def __neg__(self) -> QuadraticSurd:
        return QuadraticSurd(-self._a, -self._b, self._d)

    def __abs__(self) -> QuadraticSurd:
        return -self if self.sign() < 0 else self

    def __add__(self, other: object) -> QuadraticSurd:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        d = self._common_radicand(rhs)
        return QuadraticSurd(self._a + rhs._a, self._b + rhs._b, d)

    __radd__ = __add__

    def __sub__(self, other: object) -> QuadraticSurd:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> QuadraticSurd:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> QuadraticSurd:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        d = self._common_radicand(rhs)
        return QuadraticSurd(
            self._a * rhs._a + self._b * rhs._b * d,
            self._a * rhs._b + self._b * rhs._a,
            d,
        )

    __rmul__ = __mul__

    def _inverse(self) -> QuadraticSurd:
        # 1/(a + b*sqrt(d)) = (a - b*sqrt(d))/(a*a - b*b*d)
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero surd")
        return QuadraticSurd(self._a / n, -self._b / n, self._d)

    def __truediv__(self, other: object) -> QuadraticSurd:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        self._common_radicand(rhs)  # reject incompatible radicands up front
        return self * rhs._inverse()

    def __rtruediv__(self, other: object) -> QuadraticSurd:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs / self

    def __pow__(self, exponent: int) -> QuadraticSurd:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self._inverse() ** (-exponent)
        result = QuadraticSurd(1, 0, self._d)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * sqrt(self._d)

    def __repr__(self) -> str:
        return f"QuadraticSurd({self._a}, {self._b}, {self._d})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        op = "+" if self._b > 0 else "-"
        return f"{self._a} {op} {abs(self._b)}*sqrt({self._d})"


def surd_sign(value: QuadraticSurd | Fraction | int) -> int:
    """Exact sign in {-1, 0, 1} of a rational or quadratic surd."""
    if isinstance(value, QuadraticSurd):
        return value.sign()
    return _sign(as_rational(value))


def _as_surd(value: QuadraticSurd | Fraction | int) -> QuadraticSurd:
    if isinstance(value, QuadraticSurd):
        return value
    return QuadraticSurd(as_rational(value))


def abs_lt(value: QuadraticSurd | Fraction | int, bound: QuadraticSurd | Fraction | int) -> bool:
    """Exact |value| < bound."""
    v, hi = _as_surd(value), _as_surd(bound)
    return (hi - v).sign() > 0 and (hi + v).sign() > 0


def abs_le(value: QuadraticSurd | Fraction | int, bound: QuadraticSurd | Fraction | int) -> bool:
    """Exact |value| <= bound."""
    v, hi = _as_surd(value), _as_surd(bound)
    return (hi - v).sign() >= 0 and (hi + v).sign() >= 0


def quadratic_roots(p: Fraction | int | str, q: Fraction | int | str) -> tuple[QuadraticSurd, QuadraticSurd]:
    """Both roots of x**2 - p*x - q = 0, larger root first.

    Requires a positive discriminant p*p + 4*q; when the discriminant is the
    square of a rational both roots come back rational-valued (b == 0).
    """
    p, q = as_rational(p), as_rational(q)
    disc = p * p + 4 * q
    if disc <= 0:
        raise DomainError(f"discriminant {disc} is not positive")
    coeff, d = sqrt_decomposition(disc)
    half_p = p / 2
    half_root = coeff / 2
    return (
        QuadraticSurd(half_p, half_root, d),
        QuadraticSurd(half_p, -half_root, d),
    )


def _round_fraction(value: Fraction, digits: int) -> str:
    """Fixed-point decimal string, rounded half away from zero."""
    scale = 10**digits
    negative = value < 0
    magnitude = -value if negative else value
    scaled = magnitude * scale
    units, rem = divmod(scaled.numerator, scaled.denominator)
    if 2 * rem >= scaled.denominator:
        units += 1
    sign = "-" if negative and units > 0 else ""
    whole, frac = divmod(units, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def _sqrt_approx(d: int, precision: int) -> Fraction:
    scale = 10**precision
    return Fraction(isqrt(d * scale * scale), scale)


def decimal_str(value: QuadraticSurd | Fraction | int, digits: int = 12) -> str:
    """Correctly rounded fixed-point decimal rendering.

    Quadratic surds are evaluated at doubling working precision until two
    successive evaluations round to the same string, so every displayed digit
    is stable.
    """
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    if isinstance(value, QuadraticSurd) and value.is_rational:
        value = value.as_fraction()
    if not isinstance(value, QuadraticSurd):
        return _round_fraction(as_rational(value), digits)
    precision = digits + 8
    previous = None
    while True:
        approx = value.a + value.b * _sqrt_approx(value.d, precision)
        text = _round_fraction(approx, digits)
        if text == previous:
            return text
        previous, precision = text, precision * 2


GOLDEN_RATIO = QuadraticSurd(Fraction(1, 2), Fraction(1, 2), 5)

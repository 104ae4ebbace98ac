"""Horadam sequences w(n+2) = p*w(n+1) - q*w(n) over exact rationals.

Two sign conventions are easy to confuse: the canonical recurrence above
subtracts q, while the fundamental Lucas sequence used by the closed forms
satisfies the "+" form u(n+2) = A*u(n+1) + B*u(n).  `fundamental_lucas` takes
the "+" coefficients explicitly so no silent sign flip can creep in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, as_rational

__all__ = [
    "FIBONACCI",
    "RecurrenceParams",
    "SequenceWindow",
    "fast_term",
    "fundamental_lucas",
    "horadam_term",
    "lucas_window",
    "negative_symmetry_check",
    "window",
]


@dataclass(frozen=True)
class RecurrenceParams:
    """Seeds and coefficients of w(n+2) = p*w(n+1) - q*w(n); q != 0 keeps it invertible."""

    w0: Fraction
    w1: Fraction
    p: Fraction
    q: Fraction

    def __post_init__(self) -> None:
        for name in ("w0", "w1", "p", "q"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.q == 0:
            raise DomainError("q = 0 makes the recurrence non-invertible")


FIBONACCI = RecurrenceParams(0, 1, 1, -1)


@dataclass(frozen=True)
class SequenceWindow:
    """Contiguous run of terms; start may be negative."""

    start: int
    values: tuple[Fraction, ...]


def horadam_term(params: RecurrenceParams, n: int) -> Fraction:
    """Exact n-th term; negative indices use the inverted recurrence w(n) = (p*w(n+1) - w(n+2))/q."""
    a, b = params.w0, params.w1
    if n >= 0:
        for _ in range(n):
            a, b = b, params.p * b - params.q * a
        return a
    for _ in range(-n):
        a, b = (params.p * a - b) / params.q, a
    return a


def window(params: RecurrenceParams, start: int, length: int) -> SequenceWindow:
    """Terms w(start) .. w(start + length - 1)."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    a = horadam_term(params, start)
    b = horadam_term(params, start + 1)
    values = []
    for _ in range(length):
        values.append(a)
        a, b = b, params.p * b - params.q * a
    return SequenceWindow(start, tuple(values))


def fundamental_lucas(A: Fraction | int | str, B: Fraction | int | str, n: int) -> Fraction:
    """Term of u(n+2) = A*u(n+1) + B*u(n) with u(0) = 0, u(1) = 1, extended to negative n by inversion."""
    A, B = as_rational(A), as_rational(B)
    if B == 0:
        raise DomainError("B = 0 gives a degenerate recurrence")
    a, b = Fraction(0), Fraction(1)
    if n >= 0:
        for _ in range(n):
            a, b = b, A * b + B * a
        return a
    for _ in range(-n):
        a, b = (b - A * a) / B, a
    return a


def lucas_window(A: Fraction | int | str, B: Fraction | int | str, lo: int, hi: int) -> list[Fraction]:
    """Values u(lo) .. u(hi) of the "+" form recurrence, inclusive."""
    if lo > hi:
        raise ValueError("empty window")
    A, B = as_rational(A), as_rational(B)
    a = fundamental_lucas(A, B, lo)
    b = fundamental_lucas(A, B, lo + 1)
    values = [a]
    for _ in range(hi - lo):
        a, b = b, A * b + B * a
        values.append(a)
    return values


def _mat_mul(x: tuple, y: tuple) -> tuple:
    return (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    )


def fast_term(params: RecurrenceParams, n: int) -> Fraction:
    """Same value as horadam_term in O(log|n|) big-number steps via companion-matrix powering."""
    if n == 0:
        return params.w0
    one, zero = Fraction(1), Fraction(0)
    if n > 0:
        base = (params.p, -params.q, one, zero)
    else:
        # inverse of [[p, -q], [1, 0]] (determinant q)
        base = (zero, one, -1 / params.q, params.p / params.q)
    result = (one, zero, zero, one)
    k = abs(n)
    while k:
        if k & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        k >>= 1
    # [w(n+1), w(n)]^T = M^n [w1, w0]^T
    return result[2] * params.w1 + result[3] * params.w0


def negative_symmetry_check(params: RecurrenceParams, n_max: int) -> tuple[int, ...]:
    """Indices 1 <= n <= n_max where w(-n) != (-1)**(n+1) * w(n).

    The mirror relation holds for Fibonacci-like instances where the backward
    division is by +-1; the returned tuple is empty exactly when it holds
    throughout the probed range.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    failures = []
    forward = window(params, 0, n_max + 1).values
    a, b = params.w0, params.w1  # pair (w(-n), w(-n+1)) while stepping down
    for n in range(1, n_max + 1):
        a, b = (params.p * a - b) / params.q, a
        expected = forward[n] if n % 2 else -forward[n]
        if a != expected:
            failures.append(n)
    return tuple(failures)

"""Ratio dynamics of two-term recurrences: Cauchy certificates, limit targets,
and continued-fraction convergents.

A recurrence f(n+2) = ±r*f(n+1) + s*f(n) induces the ratio map
g -> 1/(±r + s*g) on g(n) = f(n)/f(n+1), which is the Riccati map with
p = r/s and q = 1/s.  Increasing-index ratios f(n+1)/f(n) approach the
dominant root of x**2 = ±r*x + s; decreasing-index ratios approach the
conjugate root (1 - φ in the Fibonacci case), not the sign-flipped dominant
root that is sometimes quoted, so backward estimates carry both values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import DomainError, GOLDEN_RATIO, QuadraticSurd, as_rational, quadratic_roots
from .riccati import MINUS, PLUS, OrbitReport, RiccatiParams, closed_form_term, iterate_orbit

__all__ = [
    "BACKWARD",
    "FORWARD",
    "ODD",
    "STANDARD",
    "ConvergenceCertificate",
    "LimitEstimate",
    "NestingReport",
    "RatioParams",
    "certificate",
    "cf_convergent",
    "closed_form_ratio",
    "difference_identity_check",
    "dominant_root",
    "limit_estimate",
    "nesting_check",
    "ratio_orbit",
]

STANDARD = "standard"
ODD = "odd"
FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class RatioParams:
    """Positive coefficients of f(n+2) = ±r*f(n+1) + s*f(n); parity picks the sign."""

    r: Fraction
    s: Fraction
    parity: str = STANDARD

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", as_rational(self.r))
        object.__setattr__(self, "s", as_rational(self.s))
        if self.r <= 0 or self.s <= 0:
            raise DomainError(f"r and s must be positive, got r={self.r}, s={self.s}")
        if self.parity not in (STANDARD, ODD):
            raise DomainError(f"parity must be {STANDARD!r} or {ODD!r}, got {self.parity!r}")

    def riccati(self) -> RiccatiParams:
        """The induced ratio map as a Riccati instance (p = r/s, q = 1/s)."""
        branch = PLUS if self.parity == STANDARD else MINUS
        return RiccatiParams(self.r / self.s, 1 / self.s, branch)

    def middle_coefficient(self) -> Fraction:
        return self.r if self.parity == STANDARD else -self.r


def ratio_orbit(params: RatioParams, g0: Fraction | int | str, n: int) -> OrbitReport:
    """Exact orbit of g -> 1/(±r + s*g); poles are reported via the orbit status."""
    return iterate_orbit(params.riccati(), g0, n)


def closed_form_ratio(g0: Fraction | int | str, n: int) -> Fraction:
    """(F(n) + F(n-1)*g0) / (F(n+1) + F(n)*g0): the golden map's orbit without iteration."""
    return closed_form_term(RiccatiParams(1, 1, PLUS), g0, n)


@dataclass(frozen=True)
class ConvergenceCertificate:
    """Exact Cauchy certificate for the golden ratio map g -> 1/(1 + g).

    For a seed pair with f0 >= 0 and fk > 0 the certificate guarantees
    |g(m) - g(n)| < tail_bound(n) for all m > n >= 2, where
    tail_bound(n) = c/(1 + M)**(n - 2); N is the least index from which the
    tail bound stays below epsilon.
    """

    M: Fraction
    c: Fraction
    epsilon: Fraction
    N: int

    def tail_bound(self, n: int) -> Fraction:
        if n < 2:
            raise ValueError("the tail bound starts at index 2")
        return self.c / (1 + self.M) ** (n - 2)


def certificate(
    f0: Fraction | int | str,
    fk: Fraction | int | str,
    epsilon: Fraction | int | str,
) -> ConvergenceCertificate:
    """Build the certificate for the ratio orbit seeded by g0 = f0/fk.

    M = fk/(fk + f0) is the orbit's positive floor after one step and
    c = |f0*f0 + f0*fk - fk*fk| / ((2*fk + f0)*(fk + f0)) equals |g2 - g1|
    exactly; both are computed in exact rationals, and N is found by a linear
    scan since the tail bound is strictly decreasing.
    """
    f0, fk, epsilon = as_rational(f0), as_rational(fk), as_rational(epsilon)
    if not (f0 >= 0 and fk > 0):
        raise DomainError("certificate requires f0 >= 0 and fk > 0")
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    M = fk / (fk + f0)
    c = abs(f0 * f0 + f0 * fk - fk * fk) / ((2 * fk + f0) * (fk + f0))
    N = 2
    bound = c
    while bound >= epsilon:
        N += 1
        bound /= 1 + M
    return ConvergenceCertificate(M, c, epsilon, N)


def difference_identity_check(orbit: Sequence[Fraction]) -> tuple[bool, ...]:
    """Exact check of g(n+1) - g(n) = -(g(n) - g(n-1)) / ((1+g(n))(1+g(n-1))) at interior indices."""
    results = []
    for i in range(1, len(orbit) - 1):
        lhs = orbit[i + 1] - orbit[i]
        rhs = -(orbit[i] - orbit[i - 1]) / ((1 + orbit[i]) * (1 + orbit[i - 1]))
        results.append(lhs == rhs)
    return tuple(results)


def dominant_root(r: Fraction | int | str, s: Fraction | int | str) -> QuadraticSurd:
    """Positive root (r + sqrt(r*r + 4*s))/2 of x**2 = r*x + s."""
    r, s = as_rational(r), as_rational(s)
    if r <= 0 or s <= 0:
        raise DomainError("r and s must be positive")
    return quadratic_roots(r, s)[0]


@dataclass(frozen=True)
class LimitEstimate:
    """Final consecutive-term ratio of a recurrence run, next to its exact limit.

    `target` is the root the ratios provably approach.  For the backward
    direction `claimed` carries the sign-flipped dominant root often quoted
    for decreasing arguments; it is attached for comparison, never asserted.
    """

    params: RatioParams
    direction: str
    steps: int
    ratio: Fraction
    target: QuadraticSurd
    claimed: QuadraticSurd | None = None


def limit_estimate(
    params: RatioParams,
    seed: tuple[Fraction | int | str, Fraction | int | str],
    direction: str,
    n: int,
) -> LimitEstimate:
    """Iterate the two-term recurrence n steps and report the last ratio f(j+1)/f(j).

    Forward runs extend the recurrence upward, backward runs invert it
    downward; either way the reported ratio is taken at the final index pair.
    """
    if direction not in (FORWARD, BACKWARD):
        raise DomainError(f"direction must be {FORWARD!r} or {BACKWARD!r}, got {direction!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = as_rational(seed[0]), as_rational(seed[1])
    rr, s = params.middle_coefficient(), params.s
    if direction == FORWARD:
        for _ in range(n):
            a, b = b, rr * b + s * a
    else:
        for _ in range(n):
            a, b = (b - rr * a) / s, a
    if a == 0:
        raise DomainError(f"ratio undefined: the term at the final index vanished after {n} steps")
    ratio = b / a
    rho = dominant_root(params.r, params.s)
    conjugate = quadratic_roots(params.r, params.s)[1]
    if direction == FORWARD:
        target = rho if params.parity == STANDARD else -rho
        claimed = None
    else:
        target = conjugate if params.parity == STANDARD else -conjugate
        claimed = -rho if params.parity == STANDARD else rho
    return LimitEstimate(params, direction, n, ratio, target, claimed)


def cf_convergent(m: int) -> Fraction:
    """m-term truncation of the all-ones continued fraction [0; 1, 1, ..., 1].

    Folded bottom-up; the value equals F(m)/F(m+1).
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    value = Fraction(1)
    for _ in range(m - 1):
        value = 1 / (1 + value)
    return value


@dataclass(frozen=True)
class NestingReport:
    """Outcome of checking the canonical orbit against Fibonacci convergents."""

    n_max: int
    convergent_failures: tuple[int, ...]
    ordering_failures: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.convergent_failures and not self.ordering_failures


def nesting_check(n_max: int) -> NestingReport:
    """For the canonical orbit g0 = 0: g(n) = F(n)/F(n+1) exactly, straddling
    the limit with alternating order (even n below φ - 1, odd n above)."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    limit = GOLDEN_RATIO - 1
    convergent_failures = []
    ordering_failures = []
    g = Fraction(0)
    fib_n, fib_next = 0, 1
    for n in range(n_max + 1):
        if g != Fraction(fib_n, fib_next):
            convergent_failures.append(n)
        side = (g - limit).sign()
        if side != (-1 if n % 2 == 0 else 1):
            ordering_failures.append(n)
        g = 1 / (1 + g)
        fib_n, fib_next = fib_next, fib_n + fib_next
    return NestingReport(n_max, tuple(convergent_failures), tuple(ordering_failures))

"""Orbits, closed forms, forbidden sets and fixed points of x(n+1) = q/(±p + x(n)).

The substitution x(n) = t(n)/t(n+1) turns the map into the linear recurrence
t(n+1) = (p/q)*t(n) + (1/q)*t(n-1), which is what makes an exact closed form
in terms of fundamental Lucas numbers possible.  `substitution_check` replays
that derivation step by step as a verifiable identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, QuadraticSurd, as_rational, quadratic_roots
from .horadam import lucas_window

__all__ = [
    "MINUS",
    "PLUS",
    "Classification",
    "OrbitReport",
    "RiccatiParams",
    "SubstitutionReport",
    "classify_initial",
    "closed_form_term",
    "closed_form_trajectory",
    "fixed_points",
    "forbidden_set",
    "iterate_orbit",
    "substitution_check",
]

PLUS = "plus"
MINUS = "minus"


@dataclass(frozen=True)
class RiccatiParams:
    """Positive coefficients and branch sign of the map x -> q/(±p + x)."""

    p: Fraction
    q: Fraction
    branch: str = PLUS

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", as_rational(self.p))
        object.__setattr__(self, "q", as_rational(self.q))
        if self.p <= 0 or self.q <= 0:
            raise DomainError(f"p and q must be positive, got p={self.p}, q={self.q}")
        if self.branch not in (PLUS, MINUS):
            raise DomainError(f"branch must be {PLUS!r} or {MINUS!r}, got {self.branch!r}")

    def pole(self) -> Fraction:
        """The unique input with a vanishing denominator (also the depth-1 forbidden value)."""
        return -self.p if self.branch == PLUS else self.p

    def denominator_at(self, x):
        return self.p + x if self.branch == PLUS else x - self.p

    def apply(self, x):
        """One map step; works for rationals and quadratic surds alike."""
        den = self.denominator_at(x)
        if den == 0:
            raise DomainError(f"map undefined at the pole {self.pole()}")
        return self.q / den


@dataclass(frozen=True)
class Classification:
    """Status of an initial value: regular, fixed_point, or forbidden at a finite depth."""

    kind: str
    depth: int | None = None

    def label(self) -> str:
        if self.kind == "forbidden":
            return f"forbidden_depth({self.depth})"
        return self.kind


REGULAR = Classification("regular")
FIXED_POINT = Classification("fixed_point")


@dataclass(frozen=True)
class OrbitReport:
    trajectory: tuple[Fraction, ...]
    pole_step: int | None
    classification: Classification

    @property
    def completed(self) -> bool:
        return self.pole_step is None

    def status(self) -> str:
        if self.pole_step is None:
            return "completed"
        return f"pole_at_step({self.pole_step})"


def iterate_orbit(params: RiccatiParams, x0: Fraction | int | str, n: int) -> OrbitReport:
    """Exact trajectory x0 .. xn; hitting the pole is a reported status, not a failure."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x0 = as_rational(x0)
    trajectory = [x0]
    pole_step = None
    x = x0
    for step in range(1, n + 1):
        den = params.denominator_at(x)
        if den == 0:
            pole_step = step
            break
        x = params.q / den
        trajectory.append(x)
    if pole_step is not None:
        classification = Classification("forbidden", pole_step)
    elif params.denominator_at(x0) == 0:
        classification = Classification("forbidden", 1)  # n == 0 at the pole itself
    elif params.apply(x0) == x0:
        classification = FIXED_POINT
    else:
        classification = REGULAR
    return OrbitReport(tuple(trajectory), pole_step, classification)


def closed_form_trajectory(params: RiccatiParams, x0: Fraction | int | str, n: int) -> list[Fraction]:
    """Orbit values x0 .. xn straight from the fundamental-Lucas closed form.

    With u the "+" form sequence for (A, B) = (p, q):

        plus branch:   x(k) = q*(u(k) + u(k-1)*x0) / (u(k+1) + u(k)*x0)
        minus branch:  x(k) = (q*u(-k) + u(-(k-1))*x0) / (q*u(-(k+1)) + u(-k)*x0)

    Negative indices come from backward recursion, never from a sign-symmetry
    shortcut.  A vanishing denominator means x0 is forbidden at that depth.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    x0 = as_rational(x0)
    values: list[Fraction] = []
    if params.branch == PLUS:
        u = lucas_window(params.p, params.q, -1, n + 1)

        def term(k: int) -> Fraction:
            return u[k + 1]

        for k in range(n + 1):
            den = term(k + 1) + term(k) * x0
            if den == 0:
                raise DomainError(f"initial value {x0} is forbidden at depth {k}")
            values.append(params.q * (term(k) + term(k - 1) * x0) / den)
    else:
        u = lucas_window(params.p, params.q, -(n + 1), 1)

        def term(k: int) -> Fraction:
            return u[k + n + 1]

        for k in range(n + 1):
            den = params.q * term(-(k + 1)) + term(-k) * x0
            if den == 0:
                raise DomainError(f"initial value {x0} is forbidden at depth {k}")
            values.append((params.q * term(-k) + term(-(k - 1)) * x0) / den)
    return values


def closed_form_term(params: RiccatiParams, x0: Fraction | int | str, n: int) -> Fraction:
    """The n-th orbit value from the closed form alone (no iteration of the map)."""
    return closed_form_trajectory(params, x0, n)[n]


def fixed_points(params: RiccatiParams) -> tuple[QuadraticSurd, QuadraticSurd]:
    """Both exact fixed points, larger first; rational-valued when the discriminant is a square.

    Plus branch solves x**2 + p*x - q = 0, minus branch x**2 - p*x - q = 0.
    """
    if params.branch == PLUS:
        return quadratic_roots(-params.p, params.q)
    return quadratic_roots(params.p, params.q)


def forbidden_set(params: RiccatiParams, depth: int) -> list[Fraction]:
    """Backward orbit of the pole: the initial values whose trajectory dies within `depth` steps.

    element(1) is the pole itself; element(m+1) = q/element(m) + pole is its
    unique preimage.  On the plus branch element(m) = -u(m+1)/u(m) exactly.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    pole = params.pole()
    elements = [pole]
    while len(elements) < depth:
        prev = elements[-1]
        if prev == 0:
            # unreachable for p, q > 0 (the backward orbit keeps the pole's sign)
            raise DomainError("backward orbit hit zero; preimage undefined")
        elements.append(params.q / prev + pole)
    return elements


def classify_initial(
    params: RiccatiParams,
    x0: Fraction | int | str | QuadraticSurd,
    depth: int,
) -> Classification:
    """fixed_point, forbidden_depth(m) with m <= depth, or regular up to the probed depth.

    Membership in the full infinite forbidden set is only semi-decided, so
    "regular" is always relative to `depth`.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    points = fixed_points(params)
    if isinstance(x0, QuadraticSurd) and not x0.is_rational:
        if x0 == points[0] or x0 == points[1]:
            return FIXED_POINT
        return REGULAR  # the forbidden set is rational, irrational values never meet it
    x0 = x0.as_fraction() if isinstance(x0, QuadraticSurd) else as_rational(x0)
    for point in points:
        if point.is_rational and point.as_fraction() == x0:
            return FIXED_POINT
    for m, element in enumerate(forbidden_set(params, depth), start=1):
        if element == x0:
            return Classification("forbidden", m)
    return REGULAR


@dataclass(frozen=True)
class SubstitutionReport:
    """Step-by-step audit of the linearising substitution x(n) = t(n)/t(n+1)."""

    t_values: tuple[Fraction, ...]
    ratio_values: tuple[Fraction, ...]
    orbit_matches: tuple[bool, ...]
    closed_form_matches: tuple[bool, ...]
    pole_step: int | None

    @property
    def passed(self) -> bool:
        return all(self.orbit_matches) and all(self.closed_form_matches)


def substitution_check(
    params: RiccatiParams,
    t0: Fraction | int | str,
    t1: Fraction | int | str,
    n: int,
) -> SubstitutionReport:
    """Build the linear t-sequence, form x(k) = t(k)/t(k+1), and verify both identities.

    Per step this checks x(k) against the iterated orbit of x0 = t0/t1 and
    t(k) against its scaled-Lucas closed form q**(1-k) * (t1*u(k) + t0*u(k-1)).
    A vanishing t(k+1) maps to the orbit's pole at step k.
    """
    if params.branch != PLUS:
        raise DomainError("the substitution derivation applies to the plus branch")
    if n < 0:
        raise ValueError("n must be nonnegative")
    t0, t1 = as_rational(t0), as_rational(t1)
    if t1 == 0:
        raise DomainError("t1 = 0 leaves x0 = t0/t1 undefined")

    t_values = [t0, t1]
    for _ in range(n):
        t_values.append((params.p / params.q) * t_values[-1] + t_values[-2] / params.q)

    u = lucas_window(params.p, params.q, -1, n + 1)
    closed_form_matches = tuple(
        t_values[k] == params.q ** (1 - k) * (t1 * u[k + 1] + t0 * u[k])
        for k in range(n + 2)
    )

    orbit = iterate_orbit(params, t0 / t1, n)
    ratio_values: list[Fraction] = []
    orbit_matches: list[bool] = []
    pole_step = None
    for k in range(n + 1):
        if t_values[k + 1] == 0:
            pole_step = k
            break
        ratio_values.append(t_values[k] / t_values[k + 1])
        if k < len(orbit.trajectory):
            orbit_matches.append(ratio_values[k] == orbit.trajectory[k])
        else:
            orbit_matches.append(False)
    if pole_step != orbit.pole_step:
        # the two pole accounts must agree; disagreement is a failed check
        orbit_matches.append(False)
    return SubstitutionReport(
        tuple(t_values),
        tuple(ratio_values),
        tuple(orbit_matches),
        closed_form_matches,
        pole_step,
    )

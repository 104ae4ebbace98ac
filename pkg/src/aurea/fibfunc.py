"""Period-k lattice recurrences.

A real function satisfying f(x + 2k) = ±r*f(x + k) + s*f(x) couples values
only along the lattices {ξ + n*k}, so a sampled function is completely
described by one independent two-term recurrence per offset ξ.  This module
extends those lattices exactly in both directions, traces the ratio orbits
g(n) = f(ξ + n*k) / f(ξ + (n+1)*k), and verifies per offset that the
consecutive ratios f(ξ + (n+1)*k) / f(ξ + n*k) reach the predicted quadratic
root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, GOLDEN_RATIO, QuadraticSurd, abs_lt, as_rational, format_rational
from .limits import ConvergenceCertificate, RatioParams, STANDARD, certificate, dominant_root

__all__ = [
    "LatticeTrace",
    "OffsetReport",
    "PeriodicSeed",
    "dump_seed",
    "extend",
    "golden_power_trace",
    "load_seed",
    "parse_seed",
    "ratio_trace",
    "verify_convergence",
]


@dataclass(frozen=True)
class PeriodicSeed:
    """Sampled seed data for a period-k recurrence.

    Each offset ξ in [0, k) carries the pair (f(ξ), f(ξ + k)); the lattices
    evolve independently.  The period may be any positive rational.
    """

    period: Fraction
    kind: RatioParams
    offsets: tuple[Fraction, ...]
    seed_pairs: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "period", as_rational(self.period))
        object.__setattr__(self, "offsets", tuple(as_rational(x) for x in self.offsets))
        object.__setattr__(
            self,
            "seed_pairs",
            tuple((as_rational(a), as_rational(b)) for a, b in self.seed_pairs),
        )
        if self.period <= 0:
            raise DomainError(f"period must be positive, got {self.period}")
        if not self.offsets:
            raise DomainError("at least one offset is required")
        if len(self.offsets) != len(self.seed_pairs):
            raise DomainError("offsets and seed pairs must pair up one to one")
        previous = None
        for offset in self.offsets:
            if not (0 <= offset < self.period):
                raise DomainError(f"offset {offset} outside [0, {self.period})")
            if previous is not None and offset <= previous:
                raise DomainError("offsets must be strictly increasing")
            previous = offset


@dataclass(frozen=True)
class LatticeTrace:
    """Values f(ξ + n*k) along one offset lattice, with optional ratio data."""

    offset: Fraction
    n_start: int
    values: tuple[Fraction, ...]
    ratios: tuple[Fraction, ...] | None = None
    ratio_undefined_at: int | None = None

    def value_at(self, n: int) -> Fraction:
        return self.values[n - self.n_start]


def _extend_pair(kind: RatioParams, f0: Fraction, f1: Fraction, n_min: int, n_max: int) -> list[Fraction]:
    rr, s = kind.middle_coefficient(), kind.s
    forward = [f0, f1]
    for _ in range(n_max - 1):
        forward.append(rr * forward[-1] + s * forward[-2])
    backward = []
    a, b = f0, f1
    for _ in range(-n_min):
        a, b = (b - rr * a) / s, a
        backward.append(a)
    backward.reverse()
    return backward + forward


def extend(seed: PeriodicSeed, n_min: int, n_max: int) -> list[LatticeTrace]:
    """Exact lattice values f(ξ + n*k) for n_min <= n <= n_max on every offset.

    Forward values follow the functional equation, backward values its
    inversion f(x) = (f(x + 2k) - (±r)*f(x + k)) / s.
    """
    if not (n_min <= 0 and n_max >= 1):
        raise ValueError("range must cover the seed pair: n_min <= 0 and n_max >= 1")
    traces = []
    for offset, (f0, f1) in zip(seed.offsets, seed.seed_pairs):
        values = _extend_pair(seed.kind, f0, f1, n_min, n_max)
        traces.append(LatticeTrace(offset, n_min, tuple(values)))
    return traces


def ratio_trace(seed: PeriodicSeed, offset_index: int, n_min: int = 0, n_max: int = 32) -> LatticeTrace:
    """Ratios g(n) = f(ξ + n*k) / f(ξ + (n+1)*k) over [n_min, n_max] for one offset.

    The ratio list stops at the first vanishing denominator; that index is
    reported.  An identically zero lattice is degenerate.
    """
    if n_min > n_max:
        raise ValueError("empty range")
    offset = seed.offsets[offset_index]
    f0, f1 = seed.seed_pairs[offset_index]
    if f0 == 0 and f1 == 0:
        raise DomainError(f"degenerate all-zero lattice at offset {offset}")
    values = _extend_pair(seed.kind, f0, f1, min(n_min, 0), max(n_max + 1, 1))
    base = min(n_min, 0)
    ratios = []
    undefined_at = None
    for n in range(n_min, n_max + 1):
        den = values[n + 1 - base]
        if den == 0:
            undefined_at = n
            break
        ratios.append(values[n - base] / den)
    window = tuple(values[n_min - base : n_max + 2 - base])
    return LatticeTrace(offset, n_min, window, tuple(ratios), undefined_at)


@dataclass(frozen=True)
class OffsetReport:
    """Per-offset convergence report for the consecutive ratios f(ξ+(n+1)k)/f(ξ+nk)."""

    offset: Fraction
    target: QuadraticSurd
    epsilon: Fraction
    first_step: int | None
    ratio: Fraction | None
    horizon: int
    certificate: ConvergenceCertificate | None = None

    @property
    def converged(self) -> bool:
        return self.first_step is not None


def verify_convergence(
    seed: PeriodicSeed,
    epsilon: Fraction | int | str,
    horizon: int = 512,
) -> list[OffsetReport]:
    """For every offset, find the first n with |f(ξ+(n+1)k)/f(ξ+nk) - target| < epsilon.

    The target is the dominant root of x**2 = r*x + s, negated for the odd
    form; the epsilon comparison is done exactly in the quadratic field.
    Golden seeds with a definite sign pattern additionally carry the Cauchy
    certificate bounding the same tail.  Seeds outside that pattern are
    iterated to the horizon and reported as-is.
    """
    epsilon = as_rational(epsilon)
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    kind = seed.kind
    rho = dominant_root(kind.r, kind.s)
    target = rho if kind.parity == STANDARD else -rho
    rr, s = kind.middle_coefficient(), kind.s
    reports = []
    for offset, (f0, f1) in zip(seed.offsets, seed.seed_pairs):
        if f0 == 0 and f1 == 0:
            raise DomainError(f"degenerate all-zero lattice at offset {offset}")
        cert = None
        if kind.parity == STANDARD and kind.r == 1 and kind.s == 1:
            if f0 >= 0 and f1 > 0:
                cert = certificate(f0, f1, epsilon)
            elif f0 <= 0 and f1 < 0:
                cert = certificate(-f0, -f1, epsilon)
        a, b = f0, f1
        first_step = None
        achieved = None
        for n in range(horizon + 1):
            if a != 0:
                ratio = b / a
                achieved = ratio
                if abs_lt(ratio - target, epsilon):
                    first_step = n
                    break
            a, b = b, rr * b + s * a
        reports.append(OffsetReport(offset, target, epsilon, first_step, achieved, horizon, cert))
    return reports


def golden_power_trace(n_min: int, n_max: int) -> list[QuadraticSurd]:
    """Powers φ**n for n_min <= n <= n_max, exact in Q(sqrt(5)).

    φ**2 = φ + 1, so this trace satisfies the standard period equation with
    consecutive ratio exactly φ at every lattice point; it is the exponential
    witness f(x) = φ**(x/k) restricted to one lattice (the offset prefactor
    cancels from every ratio).
    """
    if n_min > n_max:
        raise ValueError("empty range")
    return [GOLDEN_RATIO**n for n in range(n_min, n_max + 1)]


def parse_seed(text: str) -> PeriodicSeed:
    """Parse the line-oriented seed format.

    Header line, then one offset per line, rationals in "num/den" form:

        k=<rational> kind=<standard|odd> r=<rational> s=<rational>
        <xi> <f_xi> <f_xi_plus_k>

    Blank lines and lines starting with '#' are skipped.
    """
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty seed data")
    header: dict[str, str] = {}
    for token in lines[0].split():
        key, sep, value = token.partition("=")
        if not sep or not value:
            raise ValueError(f"malformed header token {token!r}")
        header[key] = value
    missing = {"k", "kind", "r", "s"} - header.keys()
    if missing:
        raise ValueError(f"header missing {sorted(missing)}")
    kind = RatioParams(header["r"], header["s"], header["kind"])
    offsets = []
    pairs = []
    for line in lines[1:]:
        fields = line.split()
        if len(fields) != 3:
            raise ValueError(f"expected 'xi f_xi f_xi_k', got {line!r}")
        offsets.append(as_rational(fields[0]))
        pairs.append((as_rational(fields[1]), as_rational(fields[2])))
    if not offsets:
        raise ValueError("seed data lists no offsets")
    return PeriodicSeed(as_rational(header["k"]), kind, tuple(offsets), tuple(pairs))


def load_seed(path: str) -> PeriodicSeed:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_seed(handle.read())


def dump_seed(seed: PeriodicSeed) -> str:
    """Canonical text form accepted by parse_seed."""
    lines = [
        "k={} kind={} r={} s={}".format(
            format_rational(seed.period),
            seed.kind.parity,
            format_rational(seed.kind.r),
            format_rational(seed.kind.s),
        )
    ]
    for offset, (f0, f1) in zip(seed.offsets, seed.seed_pairs):
        lines.append(f"{format_rational(offset)} {format_rational(f0)} {format_rational(f1)}")
    return "\n".join(lines) + "\n"

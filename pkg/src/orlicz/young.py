"""Young functions of power and log-bump type.

The log-bump family is A(t) = t**p * log(shift + t)**q.  With shift = e - 1
the logarithm equals 1 at t = 1, so A(1) = 1 for every (p, q); that
normalization is what makes the q -> infinity norm limit an equality rather
than an equivalence.  Evaluation switches to the log domain for large q,
where the direct product leaves the double-precision exponent range long
before the quantities of interest stop being meaningful.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, InputError, NumericError

__all__ = [
    "E0",
    "E",
    "Kind",
    "YoungFunction",
    "AxiomCheck",
    "YoungAxiomReport",
    "ComparisonResult",
    "check_young",
    "compare",
    "default_grid",
]

E0 = math.e - 1.0  # log(E0 + 1) == 1
E = math.e

_MAX_LOG = math.log(sys.float_info.max)  # ~709.78
_LOG_SWITCH = 700.0
_Q_SWITCH = 50.0
_MAX_BISECT = 200
_MAX_EXPAND = 1100  # enough doublings to sweep the entire double range
_LN2 = math.log(2.0)


class Kind(Enum):
    POWER = "power"
    LOG_BUMP = "log_bump"


@dataclass(frozen=True)
class YoungFunction:
    """One member of the family: t**p (power) or t**p * log(shift+t)**q (log bump).

    Instances are immutable and safe to share across threads.  p >= 1 and
    q >= 0 are required; q is forced to 0 for power kind.  shift must be
    positive; the canonical choices are E0 = e-1 and E = e.  For shift < 1
    the log factor turns nonpositive on part of the axis and evaluation
    raises DomainError there.
    """

    kind: Kind
    p: float
    q: float = 0.0
    shift: float = E0

    def __post_init__(self):
        p, q, shift = float(self.p), float(self.q), float(self.shift)
        if not (math.isfinite(p) and p >= 1.0):
            raise DomainError(f"exponent p must be finite and >= 1, got {self.p}")
        if self.kind is Kind.POWER:
            q = 0.0
        elif not (math.isfinite(q) and q >= 0.0):
            raise DomainError(f"exponent q must be finite and >= 0, got {self.q}")
        if not (math.isfinite(shift) and shift > 0.0):
            raise DomainError(f"shift must be finite and > 0, got {self.shift}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "shift", shift)

    @classmethod
    def power(cls, p: float) -> "YoungFunction":
        return cls(Kind.POWER, p)

    @classmethod
    def log_bump(cls, p: float, q: float, shift: float = E0) -> "YoungFunction":
        return cls(Kind.LOG_BUMP, p, q, shift)

    @property
    def is_power_like(self) -> bool:
        return self.kind is Kind.POWER or self.q == 0.0

    def value(self, t: float) -> float:
        """A(t) for scalar t >= 0.  Values beyond the double range come back
        as math.inf (overflow) or 0.0 (underflow)."""
        return float(self.value_array(np.asarray([t], dtype=float))[0])

    def __call__(self, t: float) -> float:
        return self.value(t)

    def value_array(self, t: np.ndarray) -> np.ndarray:
        """Vectorized A(t); same semantics as value().

        Direct products are used while q <= 50 and the exponent stays inside
        [-700, 700]; otherwise the result is exp(log_value).
        """
        t = np.asarray(t, dtype=float)
        if t.size and (np.any(np.isnan(t)) or np.any(t < 0.0)):
            raise DomainError("A(t) requires t >= 0")
        out = np.zeros_like(t)
        pos = t > 0.0
        if not np.any(pos):
            return out
        tp = t[pos]
        with np.errstate(over="ignore", under="ignore"):
            if self.is_power_like:
                lv = self.p * np.log(tp)
                vals = np.where(np.abs(lv) <= _LOG_SWITCH, tp**self.p, np.exp(lv))
            else:
                ell = np.log(self.shift + tp)
                if np.any(ell <= 0.0):
                    raise DomainError(
                        f"log({self.shift} + t) <= 0 on the requested points; "
                        "the log-bump form needs shift + t > 1"
                    )
                lv = self.p * np.log(tp) + self.q * np.log(ell)
                use_log = (self.q > _Q_SWITCH) | (np.abs(lv) > _LOG_SWITCH)
                vals = np.where(use_log, np.exp(lv), tp**self.p * ell**self.q)
        out[pos] = vals
        return out

    def log_value(self, t: float) -> float:
        """log A(t) for t > 0: p*log(t) + q*log(log(shift+t))."""
        if not t > 0.0:
            raise DomainError(f"log A(t) requires t > 0, got {t}")
        if self.is_power_like:
            return self.p * math.log(t)
        ell = math.log(self.shift + t)
        if ell <= 0.0:
            raise DomainError(
                f"log({self.shift} + {t}) <= 0; log-domain form undefined"
            )
        return self.p * math.log(t) + self.q * math.log(ell)

    def inverse(self, y: float, tol: float = 1e-12) -> float:
        """Solve A(t) = y for t >= 0.

        Brackets the root by doubling (or halving) away from t = 1, in the
        direction A(1) vs y indicates, then bisects geometrically on the
        strictly increasing log A.  The returned t satisfies
        |A(t) - y| <= tol * max(1, y) whenever tol sits above the evaluation
        noise floor (about q * 1e-16 relative for extreme q); below that
        floor the bracket is refined to one ULP, which is the best double
        precision admits.
        """
        if not tol > 0.0:
            raise DomainError(f"tol must be positive, got {tol}")
        if not y >= 0.0:
            raise DomainError(f"inverse requires y >= 0, got {y}")
        if y == 0.0:
            return 0.0
        t = _solve_log(self, math.log(y), 0.5 * tol)
        return t


def _solve_log(A: YoungFunction, target: float, tol_log: float) -> float:
    """Find t > 0 with log A(t) = target, to |residual| <= tol_log or one ULP."""
    g1 = A.log_value(1.0) - target
    if g1 == 0.0:
        return 1.0
    if g1 < 0.0:
        lo, glo = 1.0, g1
        hi = 2.0
        for _ in range(_MAX_EXPAND):
            ghi = A.log_value(hi) - target
            if ghi >= 0.0:
                break
            lo, glo = hi, ghi
            hi *= 2.0
            if not math.isfinite(hi):
                raise NumericError(f"inverse bracket expansion overflowed (target={target})")
        else:
            raise NumericError(f"inverse bracket expansion failed upward (target={target})")
    else:
        hi, ghi = 1.0, g1
        lo = 0.5
        for _ in range(_MAX_EXPAND):
            glo = A.log_value(lo) - target
            if glo <= 0.0:
                break
            hi, ghi = lo, glo
            lo *= 0.5
            if lo == 0.0:
                raise NumericError(f"inverse bracket expansion underflowed (target={target})")
        else:
            raise NumericError(f"inverse bracket expansion failed downward (target={target})")

    for _ in range(_MAX_BISECT):
        mid = math.sqrt(lo) * math.sqrt(hi)  # geometric midpoint, overflow-safe
        if not lo < mid < hi:
            break
        gm = A.log_value(mid) - target
        if abs(gm) <= tol_log:
            return mid
        if gm < 0.0:
            lo, glo = mid, gm
        else:
            hi, ghi = mid, gm
    # bracket collapsed to adjacent doubles: take the endpoint closest in value
    t, res = (lo, glo) if abs(glo) <= abs(ghi) else (hi, ghi)
    if abs(res) > 1e-6:
        raise NumericError(
            f"inverse did not converge: log-residual {res:.3e} at t={t!r} "
            f"(bracket [{lo!r}, {hi!r}])"
        )
    return t


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    violation_t: float | None = None


@dataclass(frozen=True)
class YoungAxiomReport:
    """Grid verification of the Young-function axioms."""

    zero_at_zero: AxiomCheck
    strictly_increasing: AxiomCheck
    midpoint_convex: AxiomCheck
    superlinear: AxiomCheck

    @property
    def checks(self) -> tuple[AxiomCheck, ...]:
        return (
            self.zero_at_zero,
            self.strictly_increasing,
            self.midpoint_convex,
            self.superlinear,
        )

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def default_grid(lo: float = 1e-6, hi: float = 1e6, n: int = 64) -> tuple[float, ...]:
    """64 log-spaced points spanning both sides of the t = 1 knee."""
    return tuple(float(x) for x in np.geomspace(lo, hi, n))


def _validate_grid(grid, require_sorted: bool) -> list[float]:
    pts = [float(t) for t in grid]
    if not pts:
        raise InputError("grid must be nonempty")
    if any(not math.isfinite(t) or t <= 0.0 for t in pts):
        raise InputError("grid points must be finite and strictly positive")
    if require_sorted and any(b <= a for a, b in zip(pts, pts[1:])):
        raise InputError("grid must be strictly increasing")
    return pts


def check_young(A: YoungFunction, grid, tol: float = 1e-9) -> YoungAxiomReport:
    """Verify the Young axioms of A on a sorted positive grid.

    Checks, in the log domain so that extreme q cannot overflow:
    value 0 at 0; strict increase across the grid; midpoint convexity
    A((s+t)/2) <= (A(s)+A(t))/2 on consecutive pairs, with relative slack
    tol; strict increase of A(t)/t on the tail t >= 1.  Each failed axiom
    reports its first violating grid point.
    """
    pts = _validate_grid(grid, require_sorted=True)
    logs = [A.log_value(t) for t in pts]

    zero = AxiomCheck("zero_at_zero", A.value(0.0) == 0.0, None if A.value(0.0) == 0.0 else 0.0)

    mono = AxiomCheck("strictly_increasing", True)
    for i in range(len(pts) - 1):
        if logs[i + 1] <= logs[i]:
            mono = AxiomCheck("strictly_increasing", False, pts[i + 1])
            break

    convex = AxiomCheck("midpoint_convex", True)
    slack = math.log1p(tol)
    for i in range(len(pts) - 1):
        m = 0.5 * (pts[i] + pts[i + 1])
        log_mean = float(np.logaddexp(logs[i], logs[i + 1])) - _LN2
        if A.log_value(m) > log_mean + slack:
            convex = AxiomCheck("midpoint_convex", False, m)
            break

    tail = [(t, lv - math.log(t)) for t, lv in zip(pts, logs) if t >= 1.0]
    superlinear = AxiomCheck("superlinear", True)
    for (_, r0), (t1, r1) in zip(tail, tail[1:]):
        if r1 <= r0:
            superlinear = AxiomCheck("superlinear", False, t1)
            break

    return YoungAxiomReport(zero, mono, convex, superlinear)


@dataclass(frozen=True)
class ComparisonResult:
    """Grid certificate for A(t) <= B(c t).

    c_estimate is the smallest constant that works at every grid point; it
    certifies the inequality on the grid only, not for all t > 0.
    """

    c_estimate: float
    grid: tuple[float, ...]
    certified: bool


def compare(A: YoungFunction, B: YoungFunction, grid, tol: float = 1e-9) -> ComparisonResult:
    """Smallest grid-certified c with A(t) <= B(c t) for every grid t.

    Per point the exact c_t solves B(c_t t) = A(t); the estimate is the max
    over the grid, re-verified with relative slack tol.
    """
    pts = _validate_grid(grid, require_sorted=False)
    c_best = 0.0
    for t in pts:
        s = _solve_log(B, A.log_value(t), 1e-13)
        c_best = max(c_best, s / t)
    slack = math.log1p(tol)
    certified = all(A.log_value(t) <= B.log_value(c_best * t) + slack for t in pts)
    return ComparisonResult(c_best, tuple(pts), certified)

"""Truncation control and compensated log-space summation for power series.

Every series in this package is assembled the same way: each term is
produced as a ``(sign, log magnitude)`` pair, exponentiated, and added with
Kahan compensation.  Keeping terms in log space until the last moment lets
gamma-heavy coefficients cancel symbolically (as differences of ``lgamma``
values) instead of overflowing near ``Gamma(171)``.

Truncation policy: stop once ``stagnation_window`` consecutive terms are
below ``rel_tol`` times the running partial sum.  A single small term is not
enough because alternating series stall near sign changes.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Callable, NamedTuple

LOG_DBL_MAX = math.log(sys.float_info.max)

# |largest term| / |sum| beyond which an alternating sum in double
# precision retains fewer than ~4 significant digits; past it the computed
# total is usually pure roundoff noise.
CANCELLATION_RATIO_LIMIT = 1e12


class EvaluationError(Exception):
    """Base class for numerical evaluation failures."""


class DomainError(EvaluationError, ValueError):
    """An argument or parameter is outside the supported domain."""


class ConvergenceGateError(DomainError):
    """A series specification violates its convergence condition."""


class OverflowLogError(EvaluationError, OverflowError):
    """A value exceeds the double range; carries its natural log."""

    def __init__(self, message: str, log_value: float):
        super().__init__(f"{message} (log value {log_value:.6g})")
        self.log_value = log_value


class NonConvergenceError(EvaluationError, ArithmeticError):
    """The term budget ran out before the stagnation rule triggered."""

    def __init__(self, message: str, partial: float, terms: int):
        super().__init__(f"{message} (partial sum {partial!r} after {terms} terms)")
        self.partial = partial
        self.terms = terms


class CancellationError(EvaluationError, ArithmeticError):
    """Alternating-series cancellation destroyed the result's precision."""


class SeriesResult(NamedTuple):
    """Value of a truncated series plus its evaluation metadata."""

    value: float
    terms: int
    tail: float


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy shared by all series evaluators.

    ``max_terms`` bounds the term budget, ``rel_tol`` is the relative size
    below which a term counts as negligible, and ``stagnation_window`` is
    how many consecutive negligible terms are required before stopping.
    """

    max_terms: int = 500
    rel_tol: float = 1e-15
    stagnation_window: int = 3

    def __post_init__(self):
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")
        if not 0.0 < self.rel_tol < 1.0:
            raise DomainError(f"rel_tol must be in (0, 1), got {self.rel_tol}")
        if self.stagnation_window < 1:
            raise DomainError(
                f"stagnation_window must be >= 1, got {self.stagnation_window}"
            )

    def tightened(self, factor: float = 10.0) -> "SeriesControl":
        """Same policy with ``rel_tol`` divided by ``factor`` (for inner sums)."""
        return SeriesControl(self.max_terms, self.rel_tol / factor, self.stagnation_window)


DEFAULT_CONTROL = SeriesControl()


def sum_log_terms(
    term: Callable[[int], tuple[float, float]],
    ctl: SeriesControl,
    *,
    cancellation_guard: bool = False,
    label: str = "series",
) -> SeriesResult:
    """Sum ``term(n) -> (sign, log|term|)`` for n = 0, 1, ... under ``ctl``.

    ``log|term| = -inf`` denotes an exactly-zero term.  The tail estimate is
    a geometric extrapolation from the last two term magnitudes; for the
    factorially-decaying series used here the term ratio shrinks with n, so
    the extrapolation bounds the discarded remainder.

    With ``cancellation_guard`` the ratio of the largest intermediate term
    to the final sum is checked, and a :class:`CancellationError` is raised
    instead of returning a digit-starved result.
    """
    total = 0.0
    comp = 0.0
    max_mag = 0.0
    prev_mag = 0.0
    mag = 0.0
    quiet = 0
    n_used = 0
    stopped = False
    for n in range(ctl.max_terms):
        sign, log_mag = term(n)
        if log_mag > LOG_DBL_MAX:
            raise OverflowLogError(f"{label}: term {n} overflows double range", log_mag)
        prev_mag = mag
        mag = math.exp(log_mag) if log_mag != -math.inf else 0.0
        t = sign * mag
        # Kahan step
        y = t - comp
        s = total + y
        comp = (s - total) - y
        total = s
        n_used = n + 1
        if mag > max_mag:
            max_mag = mag
        if mag <= ctl.rel_tol * abs(total):
            quiet += 1
            if quiet >= ctl.stagnation_window:
                stopped = True
                break
        else:
            quiet = 0
    if not stopped:
        raise NonConvergenceError(
            f"{label}: no stagnation within {ctl.max_terms} terms", total, n_used
        )
    if cancellation_guard and max_mag > CANCELLATION_RATIO_LIMIT * max(
        abs(total), sys.float_info.min
    ):
        raise CancellationError(
            f"{label}: cancellation ratio {max_mag / max(abs(total), sys.float_info.min):.3g} "
            f"exceeds {CANCELLATION_RATIO_LIMIT:.0e}; result would carry no significant digits"
        )
    if mag == 0.0:
        tail = 0.0
    elif 0.0 < mag < prev_mag:
        ratio = mag / prev_mag
        tail = 2.0 * mag * ratio / (1.0 - ratio)
        tail = max(tail, mag)
    else:
        tail = mag
    return SeriesResult(total, n_used, tail)

"""Closed-form series solutions of three linear fractional kinetic equations.

All three problems are Volterra equations of the second kind built on the
order-``nu`` Riemann-Liouville integral ``I^nu`` and a generalized k-Bessel
source ``omega`` (see :mod:`kkinetics.specfun`):

    variant 1:  N(t) - N0 * omega(t)              = -d**nu * I^nu N(t)
    variant 2:  N(t) - N0 * omega(d**nu * t**nu)  = -d**nu * I^nu N(t)
    variant 3:  N(t) - N0 * omega(d**nu * t**nu)  = -a**nu * I^nu N(t),  a != d

Each solution is a double series: an outer k-Bessel-type sum whose n-th
term carries the factor ``Gamma(beta_n) * E_{nu,beta_n}(-rate**nu * t**nu)``
with ``beta_n = mu+2n+1`` (variant 1) or ``nu*(mu+2n)+1`` (variants 2-3).
That factor is always evaluated through :func:`specfun.scaled_ml`, because
``Gamma(beta_n)`` on its own overflows once the outer sum passes n ~ 85.

The inner Mittag-Leffler sums run at a 10x tighter relative tolerance than
the outer sum so the reported outer tail estimate dominates the error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Callable, Sequence

from .series import DEFAULT_CONTROL, DomainError, SeriesControl, SeriesResult, sum_log_terms
from .specfun import (
    FoxWrightSpec,
    KBesselParams,
    MLParams,
    fox_wright,
    gen_k_bessel,
    k_bessel_j,
    k_wright_w,
    log_k_gamma,
    log_k_pochhammer,
    scaled_ml,
)

__all__ = [
    "Theorem",
    "KineticProblem",
    "SolutionTable",
    "solve_theorem1",
    "solve_theorem2",
    "solve_theorem3",
    "solve_scaled_source",
    "solve_grid",
    "corollary_source",
    "psi_form_source",
]


class Theorem(IntEnum):
    """Which of the three kinetic equations a problem instance solves."""

    T1 = 1
    T2 = 2
    T3 = 3


@dataclass(frozen=True)
class KineticProblem:
    """A kinetic-equation instance: initial density, rates, order, source."""

    n0: float
    d: float
    nu: float
    variant: Theorem
    params: KBesselParams
    a: float | None = None

    def __post_init__(self):
        if not self.n0 > 0.0:
            raise DomainError(f"n0 must be > 0, got {self.n0}")
        if not self.d > 0.0:
            raise DomainError(f"d must be > 0, got {self.d}")
        if not self.nu > 0.0:
            raise DomainError(f"nu must be > 0, got {self.nu}")
        if self.variant == Theorem.T3:
            if self.a is None or not self.a > 0.0:
                raise DomainError(f"variant 3 requires a > 0, got {self.a}")
            if not abs(self.a - self.d) > 0.0:
                raise DomainError("variant 3 requires a != d")

    @property
    def rate(self) -> float:
        """Relaxation rate entering the integral term (d, d, or a)."""
        return self.a if self.variant == Theorem.T3 else self.d

    def source(self, t: float, ctl: SeriesControl | None = None) -> float:
        """Source value N0-free: omega(t) or omega(d**nu * t**nu)."""
        if self.variant == Theorem.T1:
            return gen_k_bessel(self.params, t, ctl).value
        z = self.d ** self.nu * t ** self.nu
        return gen_k_bessel(self.params, z, ctl).value


@dataclass(frozen=True)
class SolutionTable:
    """Solution values on a time grid plus per-point evaluation metadata."""

    times: tuple[float, ...]
    values: tuple[float, ...]
    terms: tuple[int, ...]
    tails: tuple[float, ...]
    problem: KineticProblem

    def __post_init__(self):
        n = len(self.times)
        if not (len(self.values) == len(self.terms) == len(self.tails) == n):
            raise DomainError("SolutionTable columns must have equal length")
        for t0, t1 in zip(self.times, self.times[1:]):
            if not t1 > t0:
                raise DomainError("SolutionTable times must be strictly increasing")

    def __len__(self) -> int:
        return len(self.times)

    @property
    def max_tail(self) -> float:
        return max(self.tails, default=0.0)


def _series_solution(
    params: KBesselParams,
    n0: float,
    nu: float,
    z: float,
    beta_of_n: Callable[[int], float],
    ml_arg: float,
    ctl: SeriesControl,
    label: str,
) -> SeriesResult:
    """Outer k-Bessel-type sum with a fused Gamma*E Mittag-Leffler factor."""
    if z == 0.0:
        return SeriesResult(0.0, 1, 0.0)
    inner_ctl = ctl.tightened(10.0)
    log_hz = math.log(z / 2.0)
    log_ac = math.log(abs(params.c)) if params.c != 0.0 else -math.inf
    half_shift = (params.b + 1.0) / 2.0

    def term(n: int) -> tuple[float, float]:
        arg = params.mu + params.lam * n + half_shift
        if arg <= 0.0:
            raise DomainError(f"{label}: k-gamma argument {arg} <= 0 at term index {n}")
        if n > 0 and params.c == 0.0:
            return 1.0, -math.inf
        ml = scaled_ml(MLParams(nu, beta_of_n(n)), ml_arg, inner_ctl)
        if ml.value == 0.0:
            return 1.0, -math.inf
        log_mag = (
            log_k_pochhammer(params.gamma, n, params.k)
            - log_k_gamma(arg, params.k)
            - 2.0 * math.lgamma(n + 1.0)
            + (params.mu + 2.0 * n) * log_hz
            + math.log(abs(ml.value))
        )
        if n > 0:
            log_mag += n * log_ac
        sign = 1.0 if n % 2 == 0 or -params.c > 0.0 else -1.0
        if ml.value < 0.0:
            sign = -sign
        return sign, log_mag

    res = sum_log_terms(term, ctl, label=label)
    return SeriesResult(n0 * res.value, res.terms, abs(n0) * res.tail)


def solve_theorem1(
    prob: KineticProblem, t: float, ctl: SeriesControl | None = None
) -> SeriesResult:
    """Series solution of variant 1 at time t >= 0."""
    if prob.variant != Theorem.T1:
        raise DomainError(f"solve_theorem1 requires a variant-1 problem, got {prob.variant}")
    if t < 0.0:
        raise DomainError(f"t must be >= 0, got {t}")
    p = prob.params
    ml_arg = -(prob.d ** prob.nu) * t ** prob.nu
    return _series_solution(
        p, prob.n0, prob.nu, t, lambda n: p.mu + 2.0 * n + 1.0, ml_arg, ctl or DEFAULT_CONTROL,
        "solve_theorem1",
    )


def solve_scaled_source(
    params: KBesselParams,
    n0: float,
    nu: float,
    d: float,
    rate: float,
    t: float,
    ctl: SeriesControl | None = None,
) -> SeriesResult:
    """Shared kernel of variants 2 and 3: source omega(d**nu t**nu), rate ``rate``.

    Variant 2 is ``rate=d`` and variant 3 is ``rate=a``; calling this with
    ``rate == d`` evaluates the variant-3 formula at a = d, which coincides
    with variant 2 term for term.
    """
    if t < 0.0:
        raise DomainError(f"t must be >= 0, got {t}")
    z = d ** nu * t ** nu
    ml_arg = -(rate ** nu) * t ** nu
    return _series_solution(
        params, n0, nu, z,
        lambda n: nu * (params.mu + 2.0 * n) + 1.0,
        ml_arg, ctl or DEFAULT_CONTROL, "solve_scaled_source",
    )


def solve_theorem2(
    prob: KineticProblem, t: float, ctl: SeriesControl | None = None
) -> SeriesResult:
    """Series solution of variant 2 at time t >= 0."""
    if prob.variant != Theorem.T2:
        raise DomainError(f"solve_theorem2 requires a variant-2 problem, got {prob.variant}")
    return solve_scaled_source(prob.params, prob.n0, prob.nu, prob.d, prob.d, t, ctl)


def solve_theorem3(
    prob: KineticProblem, t: float, ctl: SeriesControl | None = None
) -> SeriesResult:
    """Series solution of variant 3 at time t >= 0."""
    if prob.variant != Theorem.T3:
        raise DomainError(f"solve_theorem3 requires a variant-3 problem, got {prob.variant}")
    return solve_scaled_source(prob.params, prob.n0, prob.nu, prob.d, prob.a, t, ctl)


_SOLVERS = {
    Theorem.T1: solve_theorem1,
    Theorem.T2: solve_theorem2,
    Theorem.T3: solve_theorem3,
}


def solve_point(prob: KineticProblem, t: float, ctl: SeriesControl | None = None) -> SeriesResult:
    """Dispatch to the variant solver of ``prob``."""
    return _SOLVERS[prob.variant](prob, t, ctl)


def solve_grid(
    prob: KineticProblem, grid: Sequence[float], ctl: SeriesControl | None = None
) -> SolutionTable:
    """Evaluate the variant solver on a strictly increasing grid of t >= 0.

    Raises on the first failing point; a partial table is never returned.
    """
    times = tuple(float(t) for t in grid)
    for t in times:
        if t < 0.0:
            raise DomainError(f"grid times must be >= 0, got {t}")
    for t0, t1 in zip(times, times[1:]):
        if not t1 > t0:
            raise DomainError("grid times must be strictly increasing")
    solver = _SOLVERS[prob.variant]
    results = [solver(prob, t, ctl) for t in times]
    return SolutionTable(
        times=times,
        values=tuple(r.value for r in results),
        terms=tuple(r.terms for r in results),
        tails=tuple(r.tail for r in results),
        problem=prob,
    )


def corollary_source(
    params: KBesselParams,
    reduction: str,
    z: float,
    ctl: SeriesControl | None = None,
) -> SeriesResult:
    """Evaluate omega(z) through its reduced form.

    ``reduction="bessel_j"`` requires b = c = 1 and returns
    ``(z/2)**mu * J(z**2/2)``; ``reduction="wright_w"`` requires b = -1,
    c = 1 and returns ``(z/2)**mu * W(-z**2/2)``.
    """
    if reduction == "bessel_j":
        if not (params.b == 1.0 and params.c == 1.0):
            raise DomainError(
                f"bessel_j reduction requires b=c=1, got b={params.b}, c={params.c}"
            )
        if z == 0.0:
            return SeriesResult(0.0, 1, 0.0)
        inner = k_bessel_j(params.k, params.gamma, params.lam, params.mu, z * z / 2.0, ctl)
    elif reduction == "wright_w":
        if not (params.b == -1.0 and params.c == 1.0):
            raise DomainError(
                f"wright_w reduction requires b=-1, c=1, got b={params.b}, c={params.c}"
            )
        if z == 0.0:
            return SeriesResult(0.0, 1, 0.0)
        inner = k_wright_w(params.k, params.gamma, params.lam, params.mu, -z * z / 2.0, ctl)
    else:
        raise DomainError(f"unknown reduction {reduction!r}")
    pref = (z / 2.0) ** params.mu
    return SeriesResult(pref * inner.value, inner.terms, pref * inner.tail)


def psi_form_source(
    params: KBesselParams, t: float, ctl: SeriesControl | None = None
) -> SeriesResult:
    """omega(t) through the classical-gamma (Fox-Wright) route.

    Rewriting each term with (g)_{n,k} = k**n (g/k)_n and
    Gamma_k(x) = k**(x/k-1) Gamma(x/k) turns the series into

        k**(1 - mu/k - (b+1)/(2k)) / Gamma(g/k) * (t/2)**mu
        * 1psi2[(g/k, 1); (mu/k + (b+1)/(2k), lam/k), (1, 1) | x],

    with argument x = -c * k**(1 - lam/k) * (t/2)**2.  It must agree with
    :func:`specfun.gen_k_bessel`, which is the defining series; the two
    routes share no gamma bookkeeping, so the agreement is a real check.
    """
    if t < 0.0:
        raise DomainError(f"psi_form_source requires t >= 0, got {t}")
    if t == 0.0:
        return SeriesResult(0.0, 1, 0.0)
    k, g, lam, mu, b, c = params.k, params.gamma, params.lam, params.mu, params.b, params.c
    spec = FoxWrightSpec(
        upper=((g / k, 1.0),),
        lower=((mu / k + (b + 1.0) / (2.0 * k), lam / k), (1.0, 1.0)),
    )
    x = -c * k ** (1.0 - lam / k) * (t / 2.0) ** 2
    psi = fox_wright(spec, x, ctl)
    pref = math.exp(
        (1.0 - mu / k - (b + 1.0) / (2.0 * k)) * math.log(k) - math.lgamma(g / k)
    ) * (t / 2.0) ** mu
    return SeriesResult(pref * psi.value, psi.terms, abs(pref) * psi.tail)

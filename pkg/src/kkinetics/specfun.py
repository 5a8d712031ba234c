"""Real-valued special functions built on the k-deformed gamma calculus.

Conventions used throughout:

* ``Gamma_k(x) = k**(x/k - 1) * Gamma(x/k)`` (the k-gamma function), so
  ``Gamma_1 = Gamma``.
* ``(g)_{n,k} = g (g+k) ... (g+(n-1)k)`` (the k-Pochhammer symbol), equal to
  ``Gamma_k(g+n*k) / Gamma_k(g)``; in log space this is
  ``n*log(k) + lgamma(g/k + n) - lgamma(g/k)``.
* The generalized k-Bessel function evaluated here is

      omega(z) = sum_n (-1)^n c^n (g)_{n,k}
                 / [Gamma_k(mu + lam*n + (b+1)/2) * (n!)^2] * (z/2)^(mu+2n)

  with selectors ``b`` and ``c``: ``b=c=1`` reduces it to
  ``(z/2)^mu * J(z^2/2)`` for the k-Bessel function of the first kind, and
  ``b=-1, c=1`` to ``(z/2)^mu * W(-z^2/2)`` for the k-Wright function.
* ``E_{alpha,beta}(x) = sum_n x^n / Gamma(alpha*n + beta)`` is the
  two-parameter Mittag-Leffler function; :func:`scaled_ml` returns
  ``Gamma(beta) * E_{alpha,beta}(x)`` without ever forming ``Gamma(beta)``
  on its own, which keeps the product finite for ``beta`` in the hundreds.

All parameters are restricted to the real ranges stated on each type; any
gamma argument that becomes non-positive within the truncation horizon is a
hard :class:`DomainError`, never a silently skipped term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .series import (
    DEFAULT_CONTROL,
    CancellationError,
    ConvergenceGateError,
    DomainError,
    LOG_DBL_MAX,
    OverflowLogError,
    SeriesControl,
    SeriesResult,
    sum_log_terms,
)

__all__ = [
    "KBesselParams",
    "MLParams",
    "FoxWrightSpec",
    "log_gamma",
    "log_k_gamma",
    "k_gamma",
    "k_pochhammer",
    "log_k_pochhammer",
    "mittag_leffler",
    "scaled_ml",
    "gen_k_bessel",
    "k_bessel_j",
    "k_wright_w",
    "fox_wright",
]


@dataclass(frozen=True)
class KBesselParams:
    """Parameter tuple (k, gamma, lam, mu, b, c) of the generalized k-Bessel series.

    ``k`` is the gamma-deformation parameter, ``gamma`` the rising-factorial
    parameter, ``lam`` the index stride inside the k-gamma argument, ``mu``
    the series order (the power of z/2 in the leading term), and ``b``, ``c``
    the family selectors.
    """

    k: float
    gamma: float
    lam: float
    mu: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("k", "gamma", "lam", "mu"):
            v = getattr(self, name)
            if not v > 0.0:
                raise DomainError(f"KBesselParams.{name} must be > 0, got {v}")
        if not (math.isfinite(self.b) and math.isfinite(self.c)):
            raise DomainError("KBesselParams.b and .c must be finite")
        # mu + lam*n + (b+1)/2 is increasing in n, so n=0 is the worst case.
        if self.b < -1.0 and self.mu + (self.b + 1.0) / 2.0 <= 0.0:
            raise DomainError(
                f"leading k-gamma argument mu+(b+1)/2 = {self.mu + (self.b + 1.0) / 2.0} "
                "is non-positive"
            )


@dataclass(frozen=True)
class MLParams:
    """Index pair (alpha, beta) of the two-parameter Mittag-Leffler function."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not self.alpha > 0.0:
            raise DomainError(f"MLParams.alpha must be > 0, got {self.alpha}")
        if not self.beta > 0.0:
            raise DomainError(f"MLParams.beta must be > 0, got {self.beta}")


@dataclass(frozen=True)
class FoxWrightSpec:
    """Upper/lower (value, weight) pairs of a Fox-Wright series.

    The series sum_n prod_i Gamma(a_i + alpha_i n) / prod_j Gamma(b_j + beta_j n)
    * z^n / n! is entire when the margin sum_j beta_j - sum_i alpha_i
    exceeds -1.  On the boundary (margin exactly -1, e.g. any unit-weight
    series reducible to a hypergeometric pFq with p = q+1) it converges only
    for |z| < 1, which :func:`fox_wright` enforces per call.  Below the
    boundary the series diverges for every z != 0 and is rejected here.
    """

    upper: tuple[tuple[float, float], ...]
    lower: tuple[tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple((float(a), float(w)) for a, w in self.upper))
        object.__setattr__(self, "lower", tuple((float(b), float(w)) for b, w in self.lower))
        for a, w in self.upper + self.lower:
            if not (math.isfinite(a) and math.isfinite(w)):
                raise DomainError("Fox-Wright parameters must be finite")
        if self.margin < -1.0:
            raise ConvergenceGateError(
                f"Fox-Wright convergence gate violated: sum(beta)-sum(alpha) = "
                f"{self.margin} < -1"
            )

    @property
    def margin(self) -> float:
        return sum(w for _, w in self.lower) - sum(w for _, w in self.upper)


# zeta(2) .. zeta(32), for the series expansions of ln Gamma around its
# zeros at x = 1 and x = 2 where a library lgamma only delivers absolute
# (not relative) accuracy.
_ZETA = (
    1.64493406684822644, 1.20205690315959429, 1.08232323371113819,
    1.03692775514336993, 1.01734306198444914, 1.00834927738192283,
    1.00407735619794434, 1.00200839282608221, 1.00099457512781809,
    1.00049418860411946, 1.00024608655330805, 1.00012271334757849,
    1.0000612481350587, 1.00003058823630702, 1.00001528225940865,
    1.0000076371976379, 1.000003817293265, 1.00000190821271655,
    1.00000095396203387, 1.00000047693298679, 1.00000023845050273,
    1.00000011921992597, 1.00000005960818905, 1.00000002980350351,
    1.00000001490155483, 1.00000000745071179, 1.00000000372533402,
    1.00000000186265972, 1.00000000093132743, 1.00000000046566291,
    1.00000000023283118,
)
_EULER_GAMMA = 0.577215664901532861


def _lgamma_near_root(e: float, at_two: bool) -> float:
    # ln Gamma(1+e) = -gamma*e + sum_{k>=2} (-1)^k zeta(k)/k e^k
    # ln Gamma(2+e) = (1-gamma)*e + sum_{k>=2} (-1)^k (zeta(k)-1)/k e^k
    shift = 1.0 if at_two else 0.0
    acc = 0.0
    for k in range(len(_ZETA) + 1, 1, -1):  # smallest terms first
        coeff = _ZETA[k - 2] - shift
        term = coeff / k * e ** k
        acc += term if k % 2 == 0 else -term
    linear = (1.0 - _EULER_GAMMA) if at_two else -_EULER_GAMMA
    return linear * e + acc


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0, relatively accurate through the zeros at 1 and 2."""
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    if abs(x - 1.0) <= 0.25:
        return _lgamma_near_root(x - 1.0, at_two=False)
    if abs(x - 2.0) <= 0.25:
        return _lgamma_near_root(x - 2.0, at_two=True)
    return math.lgamma(x)


def log_k_gamma(gamma: float, k: float) -> float:
    """ln Gamma_k(gamma) = (gamma/k - 1) ln k + ln Gamma(gamma/k)."""
    if not gamma > 0.0:
        raise DomainError(f"log_k_gamma requires gamma > 0, got {gamma}")
    if not k > 0.0:
        raise DomainError(f"log_k_gamma requires k > 0, got {k}")
    return (gamma / k - 1.0) * math.log(k) + math.lgamma(gamma / k)


def k_gamma(gamma: float, k: float) -> float:
    """Gamma_k(gamma) = k**(gamma/k - 1) * Gamma(gamma/k), via log space."""
    lg = log_k_gamma(gamma, k)
    if lg > LOG_DBL_MAX:
        raise OverflowLogError(f"k_gamma({gamma}, {k}) overflows double range", lg)
    return math.exp(lg)


def log_k_pochhammer(gamma: float, n: int, k: float) -> float:
    """ln (gamma)_{n,k} through the Gamma_k ratio form."""
    if not gamma > 0.0 or not k > 0.0:
        raise DomainError(f"log_k_pochhammer requires gamma, k > 0, got ({gamma}, {k})")
    if n < 0:
        raise DomainError(f"log_k_pochhammer requires n >= 0, got {n}")
    if n == 0:
        return 0.0
    g = gamma / k
    return n * math.log(k) + math.lgamma(g + n) - math.lgamma(g)


def k_pochhammer(gamma: float, n: int, k: float) -> float:
    """(gamma)_{n,k} = gamma (gamma+k) ... (gamma+(n-1)k), 1 for n = 0.

    Evaluated as a left-to-right product so that
    ``k_pochhammer(g, n+1, k) == k_pochhammer(g, n, k) * (g + n*k)`` holds
    bit for bit.
    """
    if not gamma > 0.0 or not k > 0.0:
        raise DomainError(f"k_pochhammer requires gamma, k > 0, got ({gamma}, {k})")
    if n < 0:
        raise DomainError(f"k_pochhammer requires n >= 0, got {n}")
    prod = 1.0
    for i in range(n):
        prod *= gamma + i * k
    if math.isinf(prod):
        raise OverflowLogError(
            f"k_pochhammer({gamma}, {n}, {k}) overflows double range",
            log_k_pochhammer(gamma, n, k),
        )
    return prod


def _sign_pow(base_sign: float, n: int) -> float:
    return 1.0 if n % 2 == 0 or base_sign > 0.0 else -1.0


# Documented safe bound for negative Mittag-Leffler arguments: beyond
# |x| = 700**alpha the peak series term dwarfs the sum so badly that double
# precision cannot represent the cancellation.
def ml_negative_bound(alpha: float) -> float:
    return 700.0 ** alpha


def mittag_leffler(p: MLParams, x: float, ctl: SeriesControl | None = None) -> SeriesResult:
    """E_{alpha,beta}(x) = sum_n x^n / Gamma(alpha n + beta)."""
    ctl = ctl or DEFAULT_CONTROL
    if x == 0.0:
        return SeriesResult(math.exp(-math.lgamma(p.beta)), 1, 0.0)
    if x < 0.0 and -x > ml_negative_bound(p.alpha):
        raise CancellationError(
            f"mittag_leffler: x = {x} is beyond the safe negative bound "
            f"-{ml_negative_bound(p.alpha):.4g} for alpha = {p.alpha}"
        )
    log_ax = math.log(abs(x))

    def term(n: int) -> tuple[float, float]:
        return _sign_pow(x, n), n * log_ax - math.lgamma(p.alpha * n + p.beta)

    return sum_log_terms(term, ctl, cancellation_guard=x < 0.0, label="mittag_leffler")


def scaled_ml(p: MLParams, x: float, ctl: SeriesControl | None = None) -> SeriesResult:
    """Gamma(beta) * E_{alpha,beta}(x), term-fused so nothing overflows.

    Each term is exp(lgamma(beta) - lgamma(beta + alpha n)) * x^n, which
    stays bounded even when Gamma(beta) alone would not fit in a double.
    """
    ctl = ctl or DEFAULT_CONTROL
    if x == 0.0:
        return SeriesResult(1.0, 1, 0.0)
    if x < 0.0 and -x > ml_negative_bound(p.alpha):
        raise CancellationError(
            f"scaled_ml: x = {x} is beyond the safe negative bound "
            f"-{ml_negative_bound(p.alpha):.4g} for alpha = {p.alpha}"
        )
    log_ax = math.log(abs(x))
    lg_beta = math.lgamma(p.beta)

    def term(n: int) -> tuple[float, float]:
        return (
            _sign_pow(x, n),
            lg_beta - math.lgamma(p.alpha * n + p.beta) + n * log_ax,
        )

    return sum_log_terms(term, ctl, cancellation_guard=x < 0.0, label="scaled_ml")


def gen_k_bessel(p: KBesselParams, z: float, ctl: SeriesControl | None = None) -> SeriesResult:
    """The generalized k-Bessel series omega(z) for z >= 0 (see module docs)."""
    ctl = ctl or DEFAULT_CONTROL
    if z < 0.0:
        raise DomainError(f"gen_k_bessel requires z >= 0, got {z}")
    if z == 0.0:
        # every term carries (z/2)**(mu+2n) with mu > 0
        return SeriesResult(0.0, 1, 0.0)
    log_hz = math.log(z / 2.0)
    log_ac = math.log(abs(p.c)) if p.c != 0.0 else -math.inf
    half_shift = (p.b + 1.0) / 2.0

    def term(n: int) -> tuple[float, float]:
        arg = p.mu + p.lam * n + half_shift
        if arg <= 0.0:
            raise DomainError(
                f"gen_k_bessel: k-gamma argument {arg} <= 0 at term index {n}"
            )
        if n > 0 and p.c == 0.0:
            return 1.0, -math.inf
        log_mag = (
            log_k_pochhammer(p.gamma, n, p.k)
            - log_k_gamma(arg, p.k)
            - 2.0 * math.lgamma(n + 1.0)
            + (p.mu + 2.0 * n) * log_hz
        )
        if n > 0:
            log_mag += n * log_ac
        return _sign_pow(-p.c, n), log_mag

    return sum_log_terms(term, ctl, label="gen_k_bessel")


def k_bessel_j(
    k: float,
    gamma: float,
    lam: float,
    nu_order: float,
    w: float,
    ctl: SeriesControl | None = None,
) -> SeriesResult:
    """k-Bessel function of the first kind,

        J(w) = sum_n (gamma)_{n,k} / Gamma_k(lam n + nu_order + 1)
               * (-1)^n (w/2)^n / (n!)^2.

    The rising factorial uses the ``gamma`` parameter, which is what makes
    the reduction omega(z; b=c=1) = (z/2)^mu J(z^2/2) hold.
    """
    ctl = ctl or DEFAULT_CONTROL
    for name, v in (("k", k), ("gamma", gamma), ("lam", lam), ("nu_order", nu_order)):
        if not v > 0.0:
            raise DomainError(f"k_bessel_j requires {name} > 0, got {v}")
    if w == 0.0:
        return SeriesResult(math.exp(-log_k_gamma(nu_order + 1.0, k)), 1, 0.0)
    log_hw = math.log(abs(w) / 2.0)

    def term(n: int) -> tuple[float, float]:
        log_mag = (
            log_k_pochhammer(gamma, n, k)
            - log_k_gamma(lam * n + nu_order + 1.0, k)
            + n * log_hw
            - 2.0 * math.lgamma(n + 1.0)
        )
        return _sign_pow(-w, n), log_mag

    return sum_log_terms(term, ctl, label="k_bessel_j")


def k_wright_w(
    k: float,
    gamma: float,
    lam: float,
    mu: float,
    x: float,
    ctl: SeriesControl | None = None,
) -> SeriesResult:
    """k-Wright-type series W(x) = sum_n (gamma)_{n,k} / Gamma_k(lam n + mu)
    * (x/2)^n / (n!)^2.

    The x/2 powers make the companion identity
    omega(z; b=-1, c=1) = (z/2)^mu W(-z^2/2) exact: substituting x = -z^2/2
    reproduces the (-1)^n (z^2/4)^n pattern of the reduced series.
    """
    ctl = ctl or DEFAULT_CONTROL
    for name, v in (("k", k), ("gamma", gamma), ("lam", lam), ("mu", mu)):
        if not v > 0.0:
            raise DomainError(f"k_wright_w requires {name} > 0, got {v}")
    if x == 0.0:
        return SeriesResult(math.exp(-log_k_gamma(mu, k)), 1, 0.0)
    log_hx = math.log(abs(x) / 2.0)

    def term(n: int) -> tuple[float, float]:
        log_mag = (
            log_k_pochhammer(gamma, n, k)
            - log_k_gamma(lam * n + mu, k)
            + n * log_hx
            - 2.0 * math.lgamma(n + 1.0)
        )
        return _sign_pow(x, n), log_mag

    return sum_log_terms(term, ctl, label="k_wright_w")


def fox_wright(spec: FoxWrightSpec, z: float, ctl: SeriesControl | None = None) -> SeriesResult:
    """Fox-Wright series for a validated :class:`FoxWrightSpec`."""
    ctl = ctl or DEFAULT_CONTROL
    if spec.margin == -1.0 and abs(z) >= 1.0:
        raise ConvergenceGateError(
            f"fox_wright: series on the convergence boundary diverges for |z| >= 1, "
            f"got z = {z}"
        )

    def log_ratio(n: int) -> float:
        acc = 0.0
        for i, (a, w) in enumerate(spec.upper):
            arg = a + w * n
            if arg <= 0.0:
                raise DomainError(
                    f"fox_wright: upper gamma argument {arg} <= 0 "
                    f"(pair {i}) at term index {n}"
                )
            acc += math.lgamma(arg)
        for j, (b, w) in enumerate(spec.lower):
            arg = b + w * n
            if arg <= 0.0:
                raise DomainError(
                    f"fox_wright: lower gamma argument {arg} <= 0 "
                    f"(pair {j}) at term index {n}"
                )
            acc -= math.lgamma(arg)
        return acc

    if z == 0.0:
        return SeriesResult(math.exp(log_ratio(0)), 1, 0.0)
    log_az = math.log(abs(z))

    def term(n: int) -> tuple[float, float]:
        return _sign_pow(z, n), log_ratio(n) + n * log_az - math.lgamma(n + 1.0)

    return sum_log_terms(term, ctl, cancellation_guard=z < 0.0, label="fox_wright")

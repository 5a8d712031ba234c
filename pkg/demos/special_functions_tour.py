"""A tour of the special-function layer.

Walks through the k-gamma calculus, the two-parameter Mittag-Leffler
function, the generalized k-Bessel series and its Bessel/Wright/Fox-Wright
reductions, printing each identity next to its closed-form partner.

Run:  python demos/special_functions_tour.py
"""

import math

from kkinetics import (
    FoxWrightSpec,
    KBesselParams,
    MLParams,
    fox_wright,
    gen_k_bessel,
    k_bessel_j,
    k_gamma,
    k_pochhammer,
    k_wright_w,
    mittag_leffler,
    psi_form_source,
    scaled_ml,
)

print("=== k-gamma calculus ===")
print(f"Gamma_1(g) is the classical gamma: Gamma_1(4) = {k_gamma(4.0, 1.0):.12g}"
      f"  (3! = {math.factorial(3)})")
print(f"Gamma_2(3) = 2^(1/2) Gamma(3/2)  = {k_gamma(3.0, 2.0):.12g}")
print(f"(1)_(3,2)  = 1*3*5               = {k_pochhammer(1.0, 3, 2.0):.12g}")
ratio = k_gamma(1.0 + 3 * 2.0, 2.0) / k_gamma(1.0, 2.0)
print(f"same through the Gamma_k ratio   = {ratio:.12g}")

print()
print("=== Mittag-Leffler function ===")
for alpha, beta, x, closed, label in [
    (1.0, 1.0, 1.3, math.exp(1.3), "E_11(x) = exp(x)"),
    (2.0, 1.0, -2.25, math.cos(1.5), "E_21(-x^2) = cos(x)"),
    (1.0, 2.0, 0.7, math.expm1(0.7) / 0.7, "E_12(x) = (e^x-1)/x"),
]:
    got = mittag_leffler(MLParams(alpha, beta), x)
    print(f"{label}: series {got.value:.15g} vs closed {closed:.15g} "
          f"({got.terms} terms, tail {got.tail:.1e})")

print()
print("the fused form survives huge second indices where Gamma(beta) alone")
print("overflows a double:")
big = scaled_ml(MLParams(0.5, 150.0), -2.0)
print(f"Gamma(150)*E_(1/2,150)(-2) = {big.value:.15g}  ({big.terms} terms)")

print()
print("=== generalized k-Bessel and its reductions ===")
z = 1.25
pj = KBesselParams(k=2.0, gamma=1.5, lam=1.0, mu=1.0, b=1.0, c=1.0)
lhs = gen_k_bessel(pj, z).value
rhs = (z / 2.0) ** pj.mu * k_bessel_j(pj.k, pj.gamma, pj.lam, pj.mu, z * z / 2.0).value
print(f"b=c=1:   omega(z)          = {lhs:.15g}")
print(f"         (z/2)^mu J(z^2/2) = {rhs:.15g}")
pw = KBesselParams(k=2.0, gamma=1.5, lam=1.0, mu=1.0, b=-1.0, c=1.0)
lhs = gen_k_bessel(pw, z).value
rhs = (z / 2.0) ** pw.mu * k_wright_w(pw.k, pw.gamma, pw.lam, pw.mu, -z * z / 2.0).value
print(f"b=-1,c=1: omega(z)           = {lhs:.15g}")
print(f"          (z/2)^mu W(-z^2/2) = {rhs:.15g}")

print()
print("the same series through classical gammas (Fox-Wright route):")
p = KBesselParams(k=2.0, gamma=1.0, lam=1.0, mu=1.0, b=3.0, c=2.0)
print(f"canonical Gamma_k series : {gen_k_bessel(p, 0.5).value:.15g}")
print(f"converted 1psi2 route    : {psi_form_source(p, 0.5).value:.15g}")

print()
print("=== Fox-Wright series ===")
spec = FoxWrightSpec(upper=((1.0, 1.0),), lower=((1.0, 1.0),))
print(f"unit 1psi1 at z=1 collapses to e: {fox_wright(spec, 1.0).value:.15g}")
boundary = FoxWrightSpec(upper=((1.25, 1.0), (2.0, 1.0)), lower=((3.75, 1.0),))
print(f"a unit-weight 2psi1 (margin {boundary.margin:g}) converges inside the"
      f" unit disc: {fox_wright(boundary, 0.5).value:.15g}")

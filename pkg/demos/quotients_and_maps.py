"""
Quotients, localisation and the comparison maps
================================================
"""

import random

from qmatrices import (
    GLElement,
    QuantumMatrixRing,
    delta_map,
    eta,
    gamma,
    phi,
    quantum_det,
    sigma,
    sl2_engine_commutator,
    sl2_normal_form,
    sl2_trace_commutator_formula,
    sl_ideal_member,
)

R3 = QuantumMatrixRing(3)

# eta sends the sigmas to elementary symmetric polynomials
for i in (1, 2, 3):
    print(f"eta(sigma_{i}) =", eta(sigma(R3, i)))

# ...and factors through the corner quotient
a = R3.random_element(random.Random(0), 3, 4)
print("phi(a) =", phi(a))
print(eta(a) == delta_map(phi(a)))

# index reversal into the ring with parameter 1/q
print("gamma(sigma_1) =", gamma(sigma(R3, 1)))

# membership in (det - 1), decided by homogenising each residue class mod n
det = quantum_det(R3)
y = R3.gen(1, 2) * R3.gen(3, 1)
print(sl_ideal_member(y * (det - 1)), sl_ideal_member(y * (det - 1) + R3.gen(2, 2)))

# det is invertible after localising
inv = GLElement.det_inverse(R3)
print("det * det^-1 == 1:", inv * det == R3.one())

# in SL_2 every a*d is replaced by 1 + q*b*c
R2 = QuantumMatrixRing(2)
a2, d2 = R2.gen(1, 1), R2.gen(2, 2)
print("a*d ->", sl2_normal_form(a2 * d2), "   d*a ->", sl2_normal_form(d2 * a2))

# closed-form commutators with the trace, compared against the engine
f = sl2_trace_commutator_formula("a-side", i=2, k=1, l=0)
print(f)
print(f == sl2_engine_commutator("a-side", i=2, k=1, l=0))

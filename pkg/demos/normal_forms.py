"""
Normal forms in O_q(M_n)
========================

Products are rewritten into row-major ordered monomials.
"""

from qmatrices import QuantumMatrixRing, commutator, quantum_det, quantum_minor, sigma
from qmatrices.qfield import Q

R = QuantumMatrixRing(2)
x = R.gen

# out-of-order products pick up q-powers, or a correction term on the diagonal
print("x12*x11 =", x(1, 2) * x(1, 1))
print("x21*x12 =", x(2, 1) * x(1, 2))
print("x22*x11 =", x(2, 2) * x(1, 1))

# the rewriting also works word by word
print(R.normalize_word([(2, 1), (1, 2), (1, 1)]))

det = quantum_det(R)
print("det  =", det)
print("[det, x12] =", commutator(det, x(1, 2)))

# a 3x3 example: a non-principal 2x2 minor, and sigma_2 as a sum of principal ones
R3 = QuantumMatrixRing(3)
print("[13|23] =", quantum_minor(R3, (1, 3), (2, 3)))
print("sigma_2 =", sigma(R3, 2))

# scalars live in Q(q); this is q - 1/q written two ways
print((Q ** 2 - 1) / Q == Q - Q ** -1)

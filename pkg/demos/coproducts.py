"""
Coproducts and cocommutative elements
=====================================
"""

from itertools import combinations

from qmatrices import (
    QuantumMatrixRing,
    cocommutativity_witness,
    coproduct,
    counit,
    is_cocommutative,
    quantum_det,
    quantum_minor,
    sigma,
    tensor,
)

R = QuantumMatrixRing(2)
print("D(x11) =", coproduct(R.gen(1, 1)))
print("D(x12) =", coproduct(R.gen(1, 2)))

det = quantum_det(R)
print("det is group-like:", coproduct(det) == tensor(det, det))
print("counit(det) =", counit(det))

# off-diagonal generators are not cocommutative; the sigmas are
print(cocommutativity_witness(R.gen(1, 2)))
R3 = QuantumMatrixRing(3)
print([is_cocommutative(sigma(R3, i)) for i in (1, 2, 3)])

# minors multiply like matrix entries under the coproduct
rows, cols = (1, 2), (2, 3)
lhs = coproduct(quantum_minor(R3, rows, cols))
rhs = None
for mid in combinations((1, 2, 3), 2):
    term = tensor(quantum_minor(R3, rows, mid), quantum_minor(R3, mid, cols))
    rhs = term if rhs is None else rhs + term
print("minor identity holds:", lhs == rhs, "-", len(lhs), "tensor terms")

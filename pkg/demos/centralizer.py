"""
The centralizer of the quantum trace
====================================

On each graded slice, ker(ad sigma_1) is computed exactly and compared
with the products of sigma_1..sigma_n of the same degree.
"""

import time

from qmatrices import (
    QuantumMatrixRing,
    build_slice_matrix,
    count_partitions_max_part,
    gr_ad_sigma1,
    kernel_basis,
    verify_centralizer_theorem,
)
from qmatrices.centralizer import GrMonomial

R = QuantumMatrixRing(2)

M = build_slice_matrix(R, 2)
print("slice matrix shape:", M.shape, "nonzero entries:", len(M.entries))
for k in kernel_basis(M):
    print("  kernel vector:", k)

# the leading part of ad sigma_1 just rescales monomials
m = GrMonomial(2, 1, (0, 1, 1, 0))  # x11 * x12*x21
print(gr_ad_sigma1(m))

for n, top in [(2, 8), (3, 4)]:
    t0 = time.perf_counter()
    for d in range(top + 1):
        report = verify_centralizer_theorem(n, d)
        print(report)
    print(f"n={n}: {time.perf_counter() - t0:.1f}s")

print([count_partitions_max_part(d, 3) for d in range(10)])

# at q = 1 everything commutes and the statement fails, as expected
print(verify_centralizer_theorem(2, 2, q=1))

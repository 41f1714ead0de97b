"""
Quaternary matrices and the Gray map
====================================

Build the matrices A^{r1,r2}, look at their columns, and check that the
Gray map turns Lee distance into Hamming distance.
"""

import numpy as np

from z4codes import z4core
from z4codes.qmatrix import build_A, code_type

# A^{1,1}: the all-ones row, one row with digits 0..3, one row with 0 and 2
A = build_A(1, 1)
print(A.to_text())

# every column starts with 1; the remaining entries are counted in lexicographic order
print(A.rows().T[:5])

# the type 4^{k1} 2^{k2} of the code spanned by the rows
print(code_type(A))

# Gray map: 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10, first halves then second halves
w = np.array([0, 1, 2, 3])
print(z4core.gray_map(w))

# Lee distance between random words equals the Hamming distance of their images
rng = np.random.default_rng(1)
a = rng.integers(0, 4, size=(1000, 16))
b = rng.integers(0, 4, size=(1000, 16))
lee = np.array([z4core.lee_distance(x, y) for x, y in zip(a, b)])
ham = np.array([z4core.hamming_distance(z4core.gray_map(x), z4core.gray_map(y)) for x, y in zip(a, b)])
print("isometry holds:", bool((lee == ham).all()))

# the map is not additive, but the failure is a fixed correction term
print("identity holds on all scalar pairs:", z4core.check_gray_addition_identity())

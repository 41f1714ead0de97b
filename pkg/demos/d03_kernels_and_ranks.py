"""
Kernels and ranks
=================

The kernel size separates the Hadamard codes of one length, the rank
separates the extended perfect codes.
"""

from z4codes.codefam import binary_image, family_params_table, hadamard_code, perfect_code
from z4codes.invariants import is_linear, kernel, rank

# Hadamard codes of length 64
for p in family_params_table(6):
    B = binary_image(hadamard_code(p))
    print(p, "kernel", kernel(B).cardinality, "linear", is_linear(B))

# ranks of the length-16 perfect codes, by enumerating all 2^11 words
for p in family_params_table(4):
    print(p, rank(binary_image(perfect_code(p))))

# the generator-span path only needs the generator rows, so k = 6 is cheap
for p in family_params_table(6):
    print(p, rank(binary_image(perfect_code(p)), "generator_span"))

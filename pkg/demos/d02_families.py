"""
Hadamard and extended perfect families
======================================

For each k the pairs (r1, r2) with 2*r1 + r2 + 1 = k give a Hadamard code
H^{r1,r2} and its dual, an extended perfect code C^{r1,r2}.
"""

from z4codes.codefam import binary_image, family_params_table, hadamard_code, perfect_code
from z4codes.invariants import min_distance, weight_distribution

for p in family_params_table(4):
    H, C = hadamard_code(p), perfect_code(p)
    print(p, "n =", p.n, "N =", p.N)
    print("  H:", H.cardinality, "words, Lee distance", min_distance(H))
    print("  C: 2^%d words" % C.log2_cardinality)

# the binary image of H^{1,0} is a (8, 16, 4) code
B = binary_image(hadamard_code((1, 0)))
print(B.bits())
print(weight_distribution(B))

# extended perfect codes have distance 4 at every length
for k in range(2, 5):
    for p in family_params_table(k):
        print(p, min_distance(binary_image(perfect_code(p))))

# membership is a syndrome check, no enumeration needed
C = perfect_code((0, 4))
print((0,) * 16 in C, (1,) + (0,) * 15 in C)

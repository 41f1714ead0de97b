"""
Doubling and quadrupling
========================

Longer Hadamard codes from shorter ones.
"""

from z4codes.codefam import hadamard_code
from z4codes.constructions import equivalence_invariant_match, plotkin_double, quadruple, recurrent_build, same_codewords

H = hadamard_code((0, 1))
D = plotkin_double(H)
print(D.generator.rows())
print("double of H^{0,1} is H^{0,2}:", same_codewords(D, hadamard_code((0, 2))))

Q = quadruple(hadamard_code((0, 0)))
print(Q.codewords())

# build H^{2,1} from the length-1 code
R = recurrent_build((2, 1))
m = equivalence_invariant_match(R, hadamard_code((2, 1)))
print(m.first)
print("invariants agree:", m.all_match)

# doubling before quadrupling reproduces the code word for word
print(same_codewords(recurrent_build((2, 1), doubling_first=True), hadamard_code((2, 1))))

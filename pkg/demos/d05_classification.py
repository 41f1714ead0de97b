"""
Counting classes
================

How many inequivalent codes each family has at each length, and a short
verification run.
"""

from z4codes.classify import classify_hadamard, classify_perfect, verify_suite

for k in range(3, 8):
    print("\n".join(classify_hadamard(k).to_lines()))

for k in range(4, 8):
    print("\n".join(classify_perfect(k).to_lines()))

report = verify_suite(4)
print(report.text().splitlines()[-1])

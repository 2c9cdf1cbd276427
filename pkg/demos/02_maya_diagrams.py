"""
Maya diagrams: partitions as fermion configurations
===================================================

A Maya diagram assigns +1 (particle) or -1 (hole) to every half-integer,
with particles filling all large positive positions. A partition of charge
zero puts a particle at j - 1/2 - lam_j for each row j (1-based, trailing
zero rows included).
"""

from fractions import Fraction

from affine_fock import maya

HALF = Fraction(1, 2)

lam = (3, 1)
m = maya.from_partition(lam)

# Print a window of the configuration. The two defects below zero and the
# two above are exactly the rows of the partition.
window = [HALF - k for k in range(6, 0, -1)] + [HALF + k for k in range(6)]
print("position:", " ".join(f"{str(h):>5}" for h in window))
print("value:   ", " ".join(f"{maya.evaluate(m, h):>5}" for h in window))

print("charge:", maya.charge(m))

# Shifting translates the configuration and moves the charge.
shifted = maya.shift(m, 1)
print("charge after shift by 1:", maya.charge(shifted))
print("shift moves values:", maya.evaluate(shifted, HALF + 1) == maya.evaluate(m, HALF))

# Local sign patterns across integer positions detect addable and removable
# nodes: a hole-then-particle pair is addable, particle-then-hole removable.
print("node patterns:", maya.node_patterns(m))

# Slicing positions by residue mod l gives l strand diagrams; minus their
# charges form the core vector and their shapes the quotient. Strands are
# labelled by the half-integers 1/2, 3/2, ..., l - 1/2.
for k in maya.strand_positions(2):
    c, shape = maya.to_charge_partition(maya.strand(m, 2, k))
    print(f"strand {k}: charge {c}, shape {shape}")

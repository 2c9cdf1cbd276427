"""
The l-core / l-quotient bijection
=================================

Partitions biject with pairs (core vector, l-tuple of partitions). The core
vector is an integer vector summing to zero; it determines an l-core (a
partition with no hook length divisible by l), and the quotient tuple fills
in the rest, one partition per Maya strand.
"""

from affine_fock import core_quotient as cq
from affine_fock import partitions as pt

for l in (2, 3):
    lam = (5, 3, 3, 1)
    c, q = cq.core_and_quotient(lam, l)
    core = cq.core_partition(c, l)
    print(f"l = {l}:")
    print("  lambda      ", lam)
    print("  core vector ", c)
    print("  core shape  ", core, "is an l-core:", cq.is_l_core(core, l))
    print("  quotient    ", q)

    # The bijection is exact: rebuild lambda from (c, q).
    assert cq.cq_inverse(c, q, l) == lam

    # Size bookkeeping: |lambda| = |core| + l * (total quotient size), and
    # the total quotient size counts the hook lengths divisible by l.
    hooks = sum(1 for h in pt.hook_lengths(lam).values() if h % l == 0)
    total_q = sum(pt.size(p) for p in q)
    print("  size law:", pt.size(lam), "=", pt.size(core), "+", l, "*", total_q)
    assert pt.size(lam) == pt.size(core) + l * total_q
    assert hooks == total_q

    # Character identity: the content character of lambda can be rebuilt
    # blockwise from the core and the inflated quotient characters.
    assert cq.quotient_char_rhs(c, q, l) == pt.diagonal_char(lam)
    print("  character identity: ok")

# The inverse direction accepts any sum-zero core vector and any tuple of
# partitions; nothing else is a valid address.
print()
print("rebuild from c=(1,-1), q=((1,),()):", cq.cq_inverse((1, -1), ((1,), ()), 2))
try:
    cq.cq_inverse((1, 0), ((), ()), 2)
except ValueError as exc:
    print("rejected c=(1,0):", exc)

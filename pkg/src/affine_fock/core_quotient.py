"""The l-core / l-quotient decomposition of partitions.

Reading a partition's Maya diagram along the l congruence classes of
positions produces l strand diagrams. The vector of negated strand charges
is the core vector c (it determines the l-core), and the normalized strand
shapes form the l-quotient. Removing an l-hook from the partition is the
same as moving one particle down one step on a single strand, so the
partition size decomposes as |lam| = |core| + l * (total quotient size).
"""

from __future__ import annotations

from fractions import Fraction

from . import maya
from .partitions import LaurentPoly, as_partition, diagonal_char, hook_lengths, size


def core_and_quotient(
    lam, l: int
) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Core vector and quotient tuple of a partition.

    Component k of the core vector (k running over 1/2, ..., l - 1/2 in
    order) is minus the charge of strand k; component k of the quotient is
    the strand's normalized shape.
    """
    lam = as_partition(lam)
    m = maya.from_partition(lam)
    c = []
    q = []
    for k in maya.strand_positions(l):
        s = maya.strand(m, l, k)
        ch, shape = maya.to_charge_partition(s)
        c.append(-ch)
        q.append(shape)
    return tuple(c), tuple(q)


def check_core_vector(c, l: int) -> tuple[int, ...]:
    c = tuple(int(x) for x in c)
    if len(c) != l:
        raise ValueError(f"core vector must have {l} components: {c}")
    if sum(c) != 0:
        raise ValueError(f"core vector components must sum to zero: {c}")
    return c


def cq_inverse(c, q, l: int) -> tuple[int, ...]:
    """Partition with the given core vector and quotient tuple."""
    c = check_core_vector(c, l)
    q = tuple(as_partition(part) for part in q)
    if len(q) != l:
        raise ValueError(f"quotient must have {l} components: {q}")
    strands = [maya.from_charge_partition(-ck, qk) for ck, qk in zip(c, q)]
    m = maya.assemble_strands(strands, l)
    charge, lam = maya.to_charge_partition(m)
    if charge != 0:
        raise AssertionError("assembled diagram must have charge zero")
    return lam


def core_partition(c, l: int) -> tuple[int, ...]:
    """The l-core determined by a core vector: empty quotient everywhere."""
    c = check_core_vector(c, l)
    return cq_inverse(c, ((),) * l, l)


def is_l_core(lam, l: int) -> bool:
    """True when no hook length is divisible by l."""
    return all(h % l != 0 for h in hook_lengths(as_partition(lam)).values())


def quotient_char_rhs(c, q, l: int) -> LaurentPoly:
    """Content character rebuilt from core and quotient data.

    The core contributes its own character; strand k contributes its
    normalized character inflated by l, shifted by l*c_k, and smeared over
    the l consecutive integer contents ending at k - 1/2.
    """
    c = check_core_vector(c, l)
    q = tuple(as_partition(part) for part in q)
    total = diagonal_char(core_partition(c, l))
    for ck, qk, k in zip(c, q, maya.strand_positions(l)):
        if not qk:
            continue
        top = int(k - Fraction(1, 2))
        window = LaurentPoly({e: 1 for e in range(top - l + 1, top + 1)})
        total = total + diagonal_char(qk).compose_power(l).shift(l * ck) * window
    return total


def quotient_char_identity(lam, l: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the content character decomposition, for comparison."""
    lam = as_partition(lam)
    c, q = core_and_quotient(lam, l)
    return diagonal_char(lam), quotient_char_rhs(c, q, l)


def size_decomposition(lam, l: int) -> tuple[int, int, int]:
    """(total size, core size, hook count): total = core + l * hooks."""
    lam = as_partition(lam)
    c, q = core_and_quotient(lam, l)
    return size(lam), size(core_partition(c, l)), sum(size(part) for part in q)

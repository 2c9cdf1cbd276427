"""
Partition combinatorics: nodes, contents, hooks, boundary
=========================================================

Everything downstream is built on a handful of diagram primitives, so this
demo walks through them on one small shape.
"""

from affine_fock import partitions as pt

lam = (4, 2, 1)
print("shape:", lam, "size:", pt.size(lam))

# A node is a (row, column) pair, 0-based; its content is row - column.
# The content mod l is the node's residue class.
for node in pt.nodes(lam):
    print(
        "node", node,
        "content", pt.content(node),
        "residue mod 3", pt.content(node) % 3,
        "hook", pt.hook_lengths(lam)[node],
    )

# Addable and removable nodes are where a single node can join or leave the
# diagram leaving a partition. They interleave along the boundary.
print("addable:  ", pt.addable_nodes(lam))
print("removable:", pt.removable_nodes(lam))

# addable_of_residue filters by content class.
print("addable of residue 0 (l=3):", pt.addable_of_residue(lam, 0, 3))

# The content character packages all contents into one Laurent polynomial;
# evaluating at 1 recovers the size.
char = pt.diagonal_char(lam)
print("content character:", char)
print("character at 1 == size:", char.at_one() == pt.size(lam))

# Transposing the diagram mirrors the character.
print("transpose:", pt.transpose(lam))
print(
    "mirror check:",
    pt.diagonal_char(pt.transpose(lam)) == char.compose_power(-1),
)

# The eta scan counts boundary nodes of one residue class to one side of a
# given node; it is the sign bookkeeping device for the affine action.
node = (0, 3)  # the removable node at the end of the first row
print(
    "eta left/right of", node, "for residue 0, l=3:",
    pt.eta(lam, 0, node, 3, "left"),
    pt.eta(lam, 0, node, 3, "right"),
)

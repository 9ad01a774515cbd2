#!/usr/bin/env python3
"""Hook lengths and character degrees of symmetric groups.

A partition of n is a weakly decreasing tuple; the hook length of a diagram
node counts the nodes to its right, above it, and itself.  Dividing n! by
the product of all hook lengths gives the degree of the corresponding
irreducible character, which we cross-check against an explicit count of
standard fillings.
"""

from math import factorial

from chardeg.partitions import (
    boundary_nodes, conjugate, hook_degree, hook_lengths, partitions_of,
    standard_tableaux_count,
)

lam = (4, 2, 1)
print(f"partition {lam}, transpose {conjugate(lam)}")
print("hook lengths by (column, row):")
for node, h in sorted(hook_lengths(lam).items()):
    print(f"  {node}: {h}")
print(f"degree = 7!/prod(hooks) = {hook_degree(lam)}")
print(f"standard fillings counted directly: {standard_tableaux_count(lam)}")

print("\nsum of squared degrees recovers n!:")
for n in range(1, 9):
    total = sum(hook_degree(mu) ** 2 for mu in partitions_of(n))
    print(f"  n={n}: sum = {total:6d} = {n}! is {total == factorial(n)}")

print("\nbranching: adding one node at a time carries degree upward")
addable, removable = boundary_nodes(lam)
print(f"addable nodes of {lam}: {sorted(addable)}")
print(f"removable nodes of {lam}: {sorted(removable)}")
up = (sum(lam) + 1) * hook_degree(lam)
print(f"(n+1) * degree = {up}, matching the sum over one-node extensions")

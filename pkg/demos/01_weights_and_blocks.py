"""Weights and blocks of Ariki-Koike algebras, computed from combinatorics alone.

Run with ``python demos/01_weights_and_blocks.py``.
"""

# %% A multipartition and its weight
# Cyclotomic parameters are written as exponents: Q_k = q^{a_k}, and the
# residue of node (i, j) in component k is (a_k + j - i) mod e.
from akblocks import ResidueParams, content, parse_multipartition, weight
from akblocks.blocks import classify_weight_one, conjugate_params, partition_into_blocks

rp = ResidueParams(e=9, a=(1, 1, 5, 2))
lam = parse_multipartition("3,3,2|2,1|1,1,1,1,1,1|2,2,1")
print("lambda         ", lam)
print("residue content", content(lam, rp))
print("weight         ", weight(lam, rp))

# %% Conjugation
# The conjugate reverses the components and transposes each one.  With the
# same parameters the weight changes; with the reversed parameters
# a'_k = -a_{r+1-k} (the algebra at q^{-1}) it is preserved.
mu = lam.conjugate()
print("\nconjugate      ", mu)
print("weight, same parameters    ", weight(mu, rp))
print("weight, reversed parameters", weight(mu, conjugate_params(rp)))

# %% Blocks of H_2 with e = 3, Q = (1, q)
# Two multipartitions lie in the same block exactly when their residue
# contents agree, and all members of a block share one weight.
small = ResidueParams(3, (0, 1))
for blk in partition_into_blocks(2, small):
    print(f"\ncontent {blk.content}  weight {blk.weight}  members",
          [str(m) for m in blk.descending()])

# %% A weight-one block is a dominance chain
# Its simple modules, decomposition matrix and Lambda-sets follow from the
# chain alone.
blk = partition_into_blocks(2, small)[0]
rep = classify_weight_one(blk, small)
print("\nchain (least dominant first):", [str(m) for m in rep.chain])
print("standard tableaux n_lambda:   ", rep.n_lambda)
print("simple dimensions dim L:      ", rep.dim_L)
print("decomposition matrix:         ", rep.decomposition)
for i, members in rep.lambda_sets.items():
    print(f"Lambda_{i}:", [str(m) for m in members])

"""The radical of a weight-one block, certified on two small algebras.

Run with ``python demos/03_weight_one_radical.py``.
"""

# %% Instance A: p = 7, q = 2, Q = (1, q), n = 2, block of content (1, 1, 0)
import json

from akblocks.akalgebra import AKParams, AlgebraAnalysis, verify_weight_one_block

params = AKParams.make(7, 2, (0, 1), 2)
an = AlgebraAnalysis(params)
print("block dimensions:", [blk.dim for blk in an.blocks])

ba = an.block((1, 1, 0))
r1, r2, r3 = ba.radical_powers
print(f"dim rad B = {r1}, dim (rad B)^2 = {r2}, dim (rad B)^3 = {r3}")
print(f"dim Z(B) = {ba.center.dim}, dim soc B = {ba.socle.dim}")
print("L(B) = R(B):", ba.l_ideal == ba.reynolds)

# %% The full verdict
# It compares the algebraic Lambda-sets with the combinatorial prediction,
# builds the mirror algebra at q^{-1} with reversed parameters, and checks
# the paired sums over both blocks.
verdict = verify_weight_one_block(params, (1, 1, 0), analysis=an)
doc = verdict.to_json()
print(json.dumps({k: doc[k] for k in ("chain", "lambda_sets", "k_lambda", "checks")}, indent=1))

# %% Instance B: p = 5, q = 4 (so e = 2), Q = (1, 1), n = 1
vb = verify_weight_one_block(AKParams.make(5, 4, (0, 0), 1), (1, 0))
print("\ninstance B: dim B =", vb.dim_B, " rad =", vb.dim_radB, " rad^2 =", vb.radB_square_dim, " ok =", vb.ok)

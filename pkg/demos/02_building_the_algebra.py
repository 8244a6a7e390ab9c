"""Constructing H_n(q, Q) over F_p as an explicit matrix algebra.

Run with ``python demos/02_building_the_algebra.py``.
"""

# %% The algebra H_2(q, Q) over F_7 with q = 2 and Q = (1, q)
# The basis is L^c T_w with 0 <= c_i < r.  Multiplication comes from the left
# regular representation; the defining relations are replayed on the
# generator matrices before the algebra is handed out.
import numpy as np

from akblocks.akalgebra import AKParams, build_algebra, check_cellularity, djm_basis, trace_and_dual
from akblocks.akalgebra.cellular import check_trace, gram_matrices
from akblocks.linalg import rank

params = AKParams.make(p=7, q=2, a=(0, 1), n=2)
alg = build_algebra(params)
print(f"dimension {alg.dim} = r^n n! with r = {params.r}, n = {params.n}")
print("relations", alg.check_relations())

# %% Products
T0, T1 = alg.generator(0), alg.generator(1)
x = alg.mul(T0, T1)
print("\nT0 T1 =", x)
print("(T1 + 1)(T1 - q) =", alg.mul((T1 + alg.one()) % 7, (T1 - 2 * alg.one()) % 7))

# %% The trace form
# tau picks out the coefficient of the identity.  It is symmetric and
# nondegenerate, so the algebra is symmetric.
print("\ntrace checks", check_trace(alg))

# %% A cellular basis, its dual and the Gram matrices
cd = djm_basis(alg)
print("\ncellular:", check_cellularity(cd).ok)
dual = trace_and_dual(cd)
for lam, g in gram_matrices(cd, dual).items():
    print(f"{str(lam):>6}  G = {g.G.tolist()}  rank {rank(g.G, 7)}  k = {g.k}")

# %% Duality: tau(C_ST D_UV) is 1 exactly when (U, V) = (T, S)
pairing = np.array([[alg.tau(alg.mul(c, d)) for d in dual.D] for c in cd.C])
print("\npairing matrix is a permutation:", sorted(pairing.sum(axis=0)) == [1] * cd.size)

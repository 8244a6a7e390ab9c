"""Cellular bases, the symmetrising trace, dual bases and Gram data.

Cell ideals are spanned by basis elements of strictly more dominant shape:
``C^λ_{ST} h ≡ Σ_V r(T, V, h) C^λ_{SV}`` modulo shapes ``μ ▷ λ``.  The dual
basis is then cellular for the opposite order, so its products are read
modulo shapes ``μ ◁ λ``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..errors import InternalError, TheoremViolation
from ..linalg import Subspace, inverse, matmul, rank, rref
from ..partitions import (
    MultiPartition,
    enumerate_multipartitions,
    enumerate_standard_tableaux,
    initial_tableau,
    strictly_dominates,
)
from .hecke import AKAlgebra, reduced_word


def tableau_permutation(t, lam: MultiPartition) -> tuple[int, ...]:
    """``d(t)``: the permutation with ``t^λ · d(t) = t``."""
    d = [0] * lam.size
    for comp0, comp in zip(initial_tableau(lam), t):
        for row0, row in zip(comp0, comp):
            for a, b in zip(row0, row):
                d[a - 1] = b
    return tuple(d)


def row_stabiliser(lam: MultiPartition) -> list[tuple[int, ...]]:
    rows = [row for comp in initial_tableau(lam) for row in comp if row]
    n = lam.size
    out = []
    for images in itertools.product(*(itertools.permutations(row) for row in rows)):
        w = [0] * n
        for row, img in zip(rows, images):
            for a, b in zip(row, img):
                w[a - 1] = b
        out.append(tuple(w))
    return out


@dataclass
class Cellular:
    """A labelled family of basis vectors (rows of ``C``) inside an algebra.

    ``labels[i] = (λ, s, t)`` with ``s, t`` indices into ``tableaux[λ]``.
    The family spans either the whole algebra or a two-sided ideal of it.
    """

    alg: AKAlgebra
    shapes: list
    tableaux: dict
    labels: list
    C: np.ndarray

    def __post_init__(self):
        p = self.alg.p
        self.C = np.asarray(self.C, dtype=np.int64) % p
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.shape_pos = {lam: k for k, lam in enumerate(self.shapes)}
        self.label_shape = np.array([self.shape_pos[lab[0]] for lab in self.labels])
        _, piv = rref(self.C, p)
        if len(piv) != len(self.labels):
            raise InternalError(f"cellular family is linearly dependent (rank {len(piv)} of {len(self.labels)})")
        self._piv = piv
        self._coord = inverse(self.C[:, piv], p)
        k = len(self.shapes)
        self.above = np.array([[strictly_dominates(self.shapes[j], self.shapes[i])
                                for j in range(k)] for i in range(k)], dtype=bool)

    @property
    def p(self) -> int:
        return self.alg.p

    @property
    def size(self) -> int:
        return len(self.labels)

    def span(self) -> Subspace:
        return Subspace.span(self.C, self.alg.dim, self.p)

    def coords(self, x) -> np.ndarray:
        """Coordinates of vectors (rows of ``x``) in this family; checks membership."""
        x = np.atleast_2d(np.asarray(x, dtype=np.int64)) % self.p
        y = matmul(x[:, self._piv], self._coord, self.p)
        if not np.array_equal(matmul(y, self.C, self.p), x):
            raise InternalError("vector outside the span of the cellular family")
        return y

    def indices(self, lam) -> list[int]:
        nt = len(self.tableaux[lam])
        return [self.index[(lam, s, t)] for s in range(nt) for t in range(nt)]

    def vector(self, lam, s, t) -> np.ndarray:
        return self.C[self.index[(lam, s, t)]]

    def transpose_index(self) -> np.ndarray:
        return np.array([self.index[(lam, t, s)] for (lam, s, t) in self.labels])

    def restrict(self, shapes) -> "Cellular":
        shapes = [lam for lam in self.shapes if lam in set(shapes)]
        labels = [lab for lab in self.labels if lab[0] in set(shapes)]
        rows = [self.index[lab] for lab in labels]
        return Cellular(self.alg, shapes, {lam: self.tableaux[lam] for lam in shapes}, labels, self.C[rows])

    def transformed(self, left_matrix) -> "Cellular":
        """The family ``z · C`` for a left multiplication matrix."""
        return Cellular(self.alg, self.shapes, self.tableaux, self.labels,
                        matmul(self.C, np.asarray(left_matrix).T, self.p))


def djm_basis(alg: AKAlgebra, weighted_x: bool = False) -> Cellular:
    """The Dipper-James-Mathas basis ``m_{st} = T_{d(s)}^* u^+_λ x_λ T_{d(t)}``.

    ``x_λ = Σ_{w ∈ S_λ} T_w`` and ``u^+_λ = Π_{s≥2} Π_{k ≤ |λ^(1)|+...+|λ^(s-1)|} (L_k - Q_s)``.
    ``weighted_x`` uses ``Σ q^{ℓ(w)} T_w`` instead; it exists only to show
    that this variant is not cellular.
    """
    p, n = alg.p, alg.n
    Q = alg.params.Q
    shapes = enumerate_multipartitions(n, alg.r)
    tableaux, labels, rows = {}, [], []
    for lam in shapes:
        x = np.zeros(alg.dim, dtype=np.int64)
        for w in row_stabiliser(lam):
            coef = pow(alg.q, len(reduced_word(w)), p) if weighted_x else 1
            x = (x + coef * alg.T(w)) % p
        m = x
        total = 0
        for s in range(1, alg.r):
            total += sum(lam[s - 1])
            for k in range(total):
                m = matmul(alg.left_L[k], m, p) - Q[s] * m
                m %= p
        tabs = enumerate_standard_tableaux(lam, cap=max(12, n))
        tableaux[lam] = tabs
        words = [reduced_word(tableau_permutation(t, lam)) for t in tabs]
        right_part = []
        for word in words:
            v = m
            for i in word:
                v = matmul(alg.right[i], v, p)
            right_part.append(v)
        for si, word in enumerate(words):
            for ti in range(len(tabs)):
                v = right_part[ti]
                for i in word:
                    v = matmul(alg.left[i], v, p)
                labels.append((lam, si, ti))
                rows.append(v)
    return Cellular(alg, shapes, tableaux, labels, np.array(rows))


@dataclass
class CellularityCheck:
    ok: bool
    witness: dict | None = None
    # actions[λ][g] is the matrix of r(T, V, T_g) on the cell module
    actions: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def check_cellularity(cd: Cellular) -> CellularityCheck:
    """Verify the cellular multiplication rule for every generator and the
    compatibility ``C_{ST}^* = C_{TS}``."""
    alg, p = cd.alg, cd.p
    actions = {lam: {} for lam in cd.shapes}
    for g, rg in enumerate(alg.right):
        prods = matmul(cd.C, rg.T, p)
        coeffs = cd.coords(prods)  # row i: C_i · g in the family
        for lam in cd.shapes:
            nt = len(cd.tableaux[lam])
            k = cd.shape_pos[lam]
            allowed_other = cd.above[k][cd.label_shape]
            mat = None
            for s in range(nt):
                block = np.zeros((nt, nt), dtype=np.int64)
                for t in range(nt):
                    row = coeffs[cd.index[(lam, s, t)]].copy()
                    for v in range(nt):
                        j = cd.index[(lam, s, v)]
                        block[t, v] = row[j]
                        row[j] = 0
                    row[allowed_other] = 0
                    if row.any():
                        bad = int(np.nonzero(row)[0][0])
                        return CellularityCheck(False, {
                            "shape": str(lam), "s": s, "t": t, "generator": g,
                            "stray_label": _label_str(cd.labels[bad]),
                            "reason": "product leaves the cell modulo more dominant shapes"})
                if mat is None:
                    mat = block
                elif not np.array_equal(mat, block):
                    return CellularityCheck(False, {
                        "shape": str(lam), "s": s, "generator": g,
                        "reason": "structure constants depend on the left index"})
            actions[lam][g] = mat
    starred = cd.coords(matmul(cd.C, alg.star.T, p))
    expected = np.zeros_like(starred)
    expected[np.arange(cd.size), cd.transpose_index()] = 1
    if not np.array_equal(starred, expected):
        bad = int(np.nonzero((starred != expected).any(axis=1))[0][0])
        return CellularityCheck(False, {"label": _label_str(cd.labels[bad]),
                                        "reason": "C_ST^* differs from C_TS"})
    return CellularityCheck(True, None, actions)


def _label_str(lab):
    lam, s, t = lab
    return f"{lam}[{s},{t}]"


@dataclass
class DualBasis:
    tau: np.ndarray
    D: np.ndarray  # rows: D elements, same labels as the cellular family
    family: Cellular = field(repr=False)

    @cached_property
    def as_cellular(self) -> Cellular:
        cd = self.family
        return Cellular(cd.alg, cd.shapes, cd.tableaux, cd.labels, self.D)


class InvalidTrace(InternalError):
    pass


def trace_form(alg: AKAlgebra) -> np.ndarray:
    """Matrix ``τ(b_i b_j)`` on the normal form basis."""
    return alg.structure[:, 0, :].astype(np.int64)


def check_trace(alg: AKAlgebra) -> dict[str, bool]:
    g = trace_form(alg)
    return {
        "symmetric": bool(np.array_equal(g, g.T)),
        "nondegenerate": rank(g, alg.p) == alg.dim,
        "star_invariant": bool(np.array_equal(alg.star[0], alg.one())),
    }


def trace_and_dual(cd: Cellular) -> DualBasis:
    """Dual basis to ``cd`` inside its span under τ = coefficient of 1.

    ``τ(C^λ_{ST} D^μ_{UV}) = δ_{λμ} δ_{SV} δ_{TU}``.
    """
    alg, p = cd.alg, cd.p
    checks = check_trace(alg)
    if not all(checks.values()):
        raise InvalidTrace(f"trace checks failed: {checks}")
    g = trace_form(alg)
    tc = matmul(matmul(cd.C, g, p), cd.C.T, p)  # τ(c_i c_k)
    try:
        tinv = inverse(tc, p)
    except ZeroDivisionError:
        raise InvalidTrace("trace form is degenerate on the span of the family") from None
    pi = np.zeros((cd.size, cd.size), dtype=np.int64)
    pi[np.arange(cd.size), cd.transpose_index()] = 1
    y = matmul(tinv, pi, p).T  # row j: coefficients of D_j in the family
    d = matmul(y, cd.C, p)
    pairing = matmul(matmul(cd.C, g, p), d.T, p)
    if not np.array_equal(pairing, pi):
        raise InternalError("dual basis fails the duality pattern")
    tau = np.zeros(alg.dim, dtype=np.int64)
    tau[0] = 1
    return DualBasis(tau, d, cd)


@dataclass
class GramPair:
    shape: MultiPartition
    G: np.ndarray
    Gp: np.ndarray
    k_by_V: list[int]
    k: int

    def rank(self, p) -> int:
        return rank(self.G, p)


def _cell_products(cd: Cellular, lam, below: bool):
    """``Φ(T, U)`` read off ``X_{ST} X_{UV}`` for every spectator pair ``(S, V)``.

    ``below`` selects the ideal convention (True for the dual family).
    Returns the form matrix, or raises when it depends on the spectators.
    """
    alg, p = cd.alg, cd.p
    nt = len(cd.tableaux[lam])
    k = cd.shape_pos[lam]
    ignore = (cd.above[:, k] if below else cd.above[k])[cd.label_shape]
    idx = cd.indices(lam)
    vecs = cd.C[idx]
    form = None
    for a, (s, t) in enumerate((s, t) for s in range(nt) for t in range(nt)):
        lx = alg.left_matrix(vecs[a])
        prods = matmul(vecs, lx.T, p)  # row b: X_{st} X_b
        coeffs = cd.coords(prods)
        coeffs[:, ignore] = 0
        for b, (u, v) in enumerate((u, v) for u in range(nt) for v in range(nt)):
            row = coeffs[b].copy()
            j = cd.index[(lam, s, v)]
            val = int(row[j])
            row[j] = 0
            if row.any():
                raise InternalError(f"cell product for {lam} leaves the cell")
            if form is None:
                form = np.full((nt, nt), -1, dtype=np.int64)
            if form[t, u] == -1:
                form[t, u] = val
            elif form[t, u] != val:
                raise InternalError(f"bilinear form of {lam} depends on spectator indices")
    return form


def gram_matrices(cd: Cellular, dual: DualBasis, shapes=None) -> dict:
    """``{λ: GramPair}`` with both forms and ``k_λ``.

    Asserts the identities ``G G' = k E`` and ``(C_SS D_SS)^2 = k C_SS D_SS``.
    """
    alg, p = cd.alg, cd.p
    dcd = dual.as_cellular
    out = {}
    for lam in (shapes or cd.shapes):
        G = _cell_products(cd, lam, below=False)
        Gp = _cell_products(dcd, lam, below=True)
        nt = G.shape[0]
        ks = [int(sum(G[x, v] * Gp[x, v] for x in range(nt)) % p) for v in range(nt)]
        if len(set(ks)) != 1:
            raise InternalError(f"k_λ for {lam} depends on V: {ks}")
        k = ks[0]
        if not np.array_equal(matmul(G, Gp, p), (k * np.eye(nt, dtype=np.int64)) % p):
            raise TheoremViolation("G(λ)G'(λ) = k_λ E", f"fails for {lam}", witness=str(lam))
        for s in range(nt):
            cs = alg.mul(cd.vector(lam, s, s), dcd.vector(lam, s, s))
            if not np.array_equal(alg.mul(cs, cs), (k * cs) % p):
                raise TheoremViolation("(C_SS D_SS)^2 = k_λ C_SS D_SS", f"fails for {lam}", witness=str(lam))
        out[lam] = GramPair(lam, G, Gp, ks, k)
    return out


def k_lambda(cd: Cellular, dual: DualBasis, lam) -> int:
    return gram_matrices(cd, dual, [lam])[lam].k


def lambda_sets(grams: dict, p: int) -> dict[int, list]:
    """Λ₀ ... Λ₄ from Gram data, in the order of ``grams``."""
    sets = {i: [] for i in range(5)}
    for lam, gp in grams.items():
        rk = rank(gp.G, p)
        if rk > 0:
            sets[0].append(lam)
        if rk == gp.G.shape[0]:
            sets[1].append(lam)
            if gp.k == 0:
                sets[4].append(lam)
        if 0 < rk < gp.G.shape[0]:
            sets[2].append(lam)
        if rk == 0:
            sets[3].append(lam)
    return sets


def gram_identity_holds(gp: GramPair, p: int) -> bool:
    """``G(λ) G'(λ) = k_λ E`` for a stored pair (re-checkable after edits)."""
    nt = gp.G.shape[0]
    return np.array_equal(matmul(gp.G, gp.Gp, p), (gp.k * np.eye(nt, dtype=np.int64)) % p)

"""Cell and simple modules, the radical, the centre, blocks and socles."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InternalError
from ..linalg import Subspace, image, kernel, left_kernel, matmul, rank, split_idempotents
from .cellular import Cellular, CellularityCheck
from .hecke import AKAlgebra, reduced_word


@dataclass
class CellModule:
    """W(λ) as a right module, with its form and simple head L(λ)."""

    shape: object
    generators: list  # row convention: v · T_g = v @ generators[g]
    G: np.ndarray
    p: int
    basis_actions: np.ndarray = field(repr=False)  # [b] acts as v @ basis_actions[b]

    @property
    def dim(self) -> int:
        return self.G.shape[0]

    @property
    def radical(self) -> Subspace:
        return left_kernel(self.G, self.p)

    @property
    def dim_simple(self) -> int:
        return rank(self.G, self.p)

    def simple_generators(self) -> list[np.ndarray]:
        """Action of the generators on a complement of ``rad λ``."""
        rad = self.radical
        comp = [c for c in range(self.dim) if c not in set(rad.pivots)]
        out = []
        for m in self.generators:
            img = m[comp] % self.p
            if rad.dim:
                img = (img - matmul(img[:, list(rad.pivots)], rad.basis, self.p)) % self.p
            out.append(img[:, comp])
        return out


def _basis_actions(alg: AKAlgebra, gens: list[np.ndarray]) -> np.ndarray:
    p = alg.p
    d = gens[0].shape[0]
    qi = pow(alg.q, -1, p)
    Ls = [gens[0]]
    for j in range(1, alg.n):
        Ls.append(matmul(matmul(gens[j], Ls[-1], p), gens[j], p) * qi % p)
    perm_mats = {}
    for w in alg.perms:
        m = np.eye(d, dtype=np.int64)
        for i in reduced_word(w):
            m = matmul(m, gens[i], p)
        perm_mats[w] = m
    out = np.empty((alg.dim, d, d), dtype=np.int64)
    for c in alg.monomials:
        mc = np.eye(d, dtype=np.int64)
        for j, cj in enumerate(c):
            for _ in range(cj):
                mc = matmul(mc, Ls[j], p)
        for w in alg.perms:
            out[alg.index(c, w)] = matmul(mc, perm_mats[w], p)
    return out


def cell_and_simple_modules(cd: Cellular, check: CellularityCheck, grams: dict) -> dict:
    if not check.ok:
        raise InternalError(f"cannot read cell modules off a non-cellular family: {check.witness}")
    out = {}
    for lam in cd.shapes:
        gens = [check.actions[lam][g] for g in range(cd.alg.n)]
        acts = _basis_actions(cd.alg, gens)
        out[lam] = CellModule(lam, gens, grams[lam].G, cd.p, acts)
    return out


def module_relations_hold(alg: AKAlgebra, mod: CellModule) -> bool:
    """The generator matrices of a right module satisfy H1-H5."""
    p = alg.p
    g = mod.generators
    d = mod.dim
    eye = np.eye(d, dtype=np.int64)
    mm = lambda *ms: _chain(ms, p)  # noqa: E731
    h1 = eye
    for Qk in alg.params.Q:
        h1 = matmul(h1, (g[0] - Qk * eye) % p, p)
    ok = not h1.any()
    if alg.n >= 2:
        ok &= np.array_equal(mm(g[0], g[1], g[0], g[1]), mm(g[1], g[0], g[1], g[0]))
    for i in range(1, alg.n):
        ok &= not mm((g[i] + eye) % p, (g[i] - alg.q * eye) % p).any()
    for i in range(1, alg.n - 1):
        ok &= np.array_equal(mm(g[i], g[i + 1], g[i]), mm(g[i + 1], g[i], g[i + 1]))
    for i in range(alg.n):
        for j in range(i + 2, alg.n):
            ok &= np.array_equal(mm(g[i], g[j]), mm(g[j], g[i]))
    return bool(ok)


def _chain(ms, p):
    out = ms[0]
    for m in ms[1:]:
        out = matmul(out, m, p)
    return out


def radical(alg: AKAlgebra, modules: dict, lambda0) -> Subspace:
    """``rad A``: elements acting as zero on every simple head L(λ), λ ∈ Λ₀.

    ``a`` kills ``L(λ) = W(λ)/rad λ`` exactly when ``W(λ)·a ⊆ rad λ``, i.e.
    when ``M_a G(λ) = 0``.
    """
    p = alg.p
    cols = []
    for lam in lambda0:
        mod = modules[lam]
        prod = np.einsum("bij,jk->bik", mod.basis_actions, mod.G) % p
        cols.append(prod.reshape(alg.dim, -1))
    if not cols:
        return Subspace.full(alg.dim, p)
    return left_kernel(np.hstack(cols), p)


def products_span(alg: AKAlgebra, xs: Subspace, ys: Subspace) -> Subspace:
    """Span of ``{x y}`` over bases of ``xs`` and ``ys``."""
    p, N = alg.p, alg.dim
    if xs.dim == 0 or ys.dim == 0:
        return Subspace.zero(N, p)
    vecs = []
    for y in ys.basis:
        vecs.append(matmul(xs.basis, alg.right_matrix(y).T, p))
    return Subspace.span(np.vstack(vecs), N, p)


def is_two_sided_ideal(alg: AKAlgebra, sub: Subspace) -> bool:
    p = alg.p
    for g in list(alg.left) + list(alg.right):
        for v in sub.basis:
            if not sub.contains(matmul(g, v, p)):
                return False
    return True


def nilpotency_index(alg: AKAlgebra, sub: Subspace, limit: int = 64) -> int:
    """Least ``k`` with ``sub^k = 0``; raises if none up to ``limit``."""
    power, k = sub, 1
    while power.dim:
        if k >= limit:
            raise InternalError("subspace is not nilpotent")
        power = products_span(alg, power, sub)
        k += 1
    return k


def center(alg: AKAlgebra) -> Subspace:
    p = alg.p
    return kernel(np.vstack([(lg - rg) % p for lg, rg in zip(alg.left, alg.right)]), p)


def subalgebra_table(alg: AKAlgebra, sub: Subspace) -> np.ndarray:
    """Structure constants of a subalgebra in its canonical basis."""
    k = sub.dim
    table = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        lm = alg.left_matrix(sub.basis[i])
        prods = matmul(sub.basis, lm.T, alg.p)
        for j in range(k):
            if not sub.contains(prods[j]):
                raise InternalError("subspace is not closed under multiplication")
            table[i, j] = sub.coordinates(prods[j])
    return table


@dataclass
class AlgebraBlock:
    idempotent: np.ndarray
    shapes: list
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim


def central_idempotents(alg: AKAlgebra, Z: Subspace | None = None) -> list[np.ndarray]:
    Z = center(alg) if Z is None else Z
    table = subalgebra_table(alg, Z)
    ones = split_idempotents(table, Z.coordinates(alg.one()), alg.p)
    return [matmul(c.reshape(1, -1), Z.basis, alg.p)[0] for c in ones]


def center_and_blocks(alg: AKAlgebra, modules: dict, Z: Subspace | None = None) -> list[AlgebraBlock]:
    """Blocks as ``z A`` for the primitive central idempotents ``z``.

    Each idempotent must act as 0 or 1 on every cell module; the shapes on
    which it acts as 1 label the block.
    """
    p = alg.p
    blocks = []
    seen = set()
    for z in central_idempotents(alg, Z):
        shapes = []
        for lam, mod in modules.items():
            act = np.tensordot(z, mod.basis_actions, axes=(0, 0)) % p
            eye = np.eye(mod.dim, dtype=np.int64)
            if np.array_equal(act, eye):
                shapes.append(lam)
            elif act.any():
                raise InternalError(f"central idempotent acts on W({lam}) by a non-scalar")
        if seen & set(shapes):
            raise InternalError("two blocks share a cell module")
        seen |= set(shapes)
        blocks.append(AlgebraBlock(z, shapes, image(alg.left_matrix(z), p)))
    if seen != set(modules):
        raise InternalError("some cell module lies in no block")
    return blocks


def socle(alg: AKAlgebra, space: Subspace, rad: Subspace) -> Subspace:
    """``{x ∈ space : x · rad = 0}``."""
    if rad.dim == 0:
        return space
    ann = kernel(np.vstack([alg.right_matrix(y) for y in rad.basis]), alg.p)
    return ann & space

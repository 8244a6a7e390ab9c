"""The Ariki-Koike algebra H_n(q, Q) over F_p as an explicit table.

Basis: ``L_1^{c_1} ... L_n^{c_n} T_w`` with ``0 <= c_i < r`` and ``w`` in S_n,
where ``L_1 = T_0`` and ``L_{i+1} = q^{-1} T_i L_i T_i``.

Permutations are tuples ``w`` with ``w[k-1] = k·w`` (right action), so
``w s_i`` swaps the values ``i, i+1`` and ``s_i w`` swaps positions ``i, i+1``.

The algebra is realised through its left regular representation.  Left
multiplication by generators never leaves the span of normal forms:

* ``T_0 · L^c T_w`` only raises ``c_1``, and ``L_1^r`` is rewritten by the
  cyclotomic relation ``prod_k (L_1 - Q_k) = 0``;
* ``T_i · f(L) T_w = (s_i f) T_i T_w + (q-1) L_{i+1} (f - s_i f)/(L_{i+1} - L_i) T_w``,
  whose divided difference keeps every exponent below ``r``.

The defining relations and the identity ``v·1 = v`` on normal forms are
replayed on the resulting matrices (:meth:`AKAlgebra.check_relations`,
:meth:`AKAlgebra.check_normal_forms`), which certifies the table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import factorial

import numpy as np

from ..errors import CapExceeded, InternalError, PreconditionError
from ..ffield import FieldContext
from ..linalg import matmul, rank

DIM_CAP = 1000


@dataclass(frozen=True)
class AKParams:
    field: FieldContext
    a: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) % self.field.e for x in self.a))
        if len(self.a) < 2:
            raise PreconditionError("need r >= 2 cyclotomic parameters")
        if self.n < 1:
            raise PreconditionError("need n >= 1")

    @classmethod
    def make(cls, p: int, q: int | None, a, n: int, e: int | None = None) -> "AKParams":
        if q is None:
            if e is None:
                raise PreconditionError("give q or e")
            fc = FieldContext.with_order(p, e)
        else:
            fc = FieldContext(p, q, e or 0)
        return cls(fc, tuple(a), n)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def e(self) -> int:
        return self.field.e

    @property
    def r(self) -> int:
        return len(self.a)

    @property
    def Q(self) -> tuple[int, ...]:
        return tuple(pow(self.q, x, self.p) for x in self.a)

    @property
    def dim(self) -> int:
        return self.r ** self.n * factorial(self.n)

    def mirror(self) -> "AKParams":
        """Parameters ``q^{-1}`` and ``(Q_r, ..., Q_1)``."""
        qi = pow(self.q, -1, self.p)
        fc = FieldContext(self.p, qi, self.e)
        return AKParams(fc, tuple(-x for x in reversed(self.a)), self.n)

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "e": self.e, "r": self.r, "a": list(self.a), "n": self.n}


# --- permutations ----------------------------------------------------------

def length(w) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def inverse_perm(w):
    inv = [0] * len(w)
    for k, v in enumerate(w, start=1):
        inv[v - 1] = k
    return tuple(inv)


def times_s(w, i):
    """``w s_i``: swap the values ``i`` and ``i + 1``."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


def s_times(w, i):
    """``s_i w``: swap positions ``i`` and ``i + 1`` (1-based)."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def reduced_word(w) -> list[int]:
    """``[i_1, ..., i_k]`` with ``w = s_{i_1} ... s_{i_k}`` reduced."""
    word = []
    w = tuple(w)
    while True:
        pos = {v: k for k, v in enumerate(w)}
        for i in range(1, len(w)):
            if pos[i] > pos[i + 1]:  # right descent
                word.append(i)
                w = times_s(w, i)
                break
        else:
            return word[::-1]


def _divided_difference(a: int, b: int):
    """``(x^a y^b - x^b y^a) / (y - x)`` as ``{(i, j): coeff}`` over Z."""
    if a == b:
        return {}
    lo, hi, sign = (b, a, -1) if a > b else (a, b, 1)
    return {(lo + hi - lo - 1 - t, lo + t): sign for t in range(hi - lo)}


class AKAlgebra:
    """Explicit multiplication table of H_n(q, Q) over F_p."""

    def __init__(self, params: AKParams, cap: int = DIM_CAP):
        if params.dim > cap:
            raise CapExceeded(f"dim H = {params.dim} exceeds the cap {cap}")
        self.params = params
        self.p, self.q, self.n, self.r = params.p, params.q, params.n, params.r
        self.perms = list(itertools.permutations(range(1, self.n + 1)))
        self.monomials = list(itertools.product(range(self.r), repeat=self.n))
        self._perm_index = {w: k for k, w in enumerate(self.perms)}
        self._mono_index = {c: k for k, c in enumerate(self.monomials)}
        self.dim = len(self.perms) * len(self.monomials)
        self.identity_perm = self.perms[0]
        self.left = [self._left_T0()] + [self._left_Ti(i) for i in range(1, self.n)]

    # -- indexing ----------------------------------------------------------
    def index(self, c, w) -> int:
        return self._mono_index[tuple(c)] * len(self.perms) + self._perm_index[tuple(w)]

    def label(self, k: int):
        c, w = divmod(k, len(self.perms))
        return self.monomials[c], self.perms[w]

    def basis_vector(self, k: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[k] = 1
        return v

    def one(self) -> np.ndarray:
        return self.basis_vector(0)

    def T(self, w) -> np.ndarray:
        return self.basis_vector(self.index((0,) * self.n, w))

    def L(self, j: int) -> np.ndarray:
        c = [0] * self.n
        c[j - 1] = 1
        return self.basis_vector(self.index(c, self.identity_perm)) if self.r > 1 else None

    def generator(self, i: int) -> np.ndarray:
        if i == 0:
            return self.L(1)
        return self.T(s_times(self.identity_perm, i))

    # -- generator actions -------------------------------------------------
    def _left_T0(self) -> np.ndarray:
        p, r = self.p, self.r
        # prod_k (x - Q_k), constant term first
        poly = [1]
        for Qk in self.params.Q:
            nxt = [0] * (len(poly) + 1)
            for d, coef in enumerate(poly):
                nxt[d + 1] = (nxt[d + 1] + coef) % p
                nxt[d] = (nxt[d] - coef * Qk) % p
            poly = nxt
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        for c in self.monomials:
            for w in self.perms:
                col = self.index(c, w)
                if c[0] + 1 < r:
                    m[self.index((c[0] + 1,) + c[1:], w), col] += 1
                else:
                    for d in range(r):
                        m[self.index((d,) + c[1:], w), col] -= poly[d]
        return m % p

    def _left_Ti(self, i: int) -> np.ndarray:
        p, q = self.p, self.q
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        for c in self.monomials:
            sc = list(c)
            sc[i - 1], sc[i] = sc[i], sc[i - 1]
            for w in self.perms:
                col = self.index(c, w)
                sw = s_times(w, i)
                if w[i - 1] < w[i]:
                    m[self.index(sc, sw), col] += 1
                else:
                    m[self.index(sc, w), col] += q - 1
                    m[self.index(sc, sw), col] += q
                for (x, y), coef in _divided_difference(c[i - 1], c[i]).items():
                    nc = list(c)
                    nc[i - 1], nc[i] = x, y + 1
                    m[self.index(nc, w), col] += (q - 1) * coef
        return m % p

    @cached_property
    def left_L(self) -> list[np.ndarray]:
        """Left action matrices of ``L_1, ..., L_n``."""
        p = self.p
        qi = pow(self.q, -1, p)
        out = [self.left[0]]
        for j in range(1, self.n):
            t = self.left[j]
            out.append(matmul(matmul(t, out[-1], p), t, p) * qi % p)
        return out

    def left_word(self, word) -> np.ndarray:
        """Left action matrix of ``T_{i_1} ... T_{i_k}``."""
        m = np.eye(self.dim, dtype=np.int64)
        for i in word:
            m = matmul(m, self.left[i], self.p)
        return m

    @cached_property
    def star(self) -> np.ndarray:
        """Matrix of the anti-involution fixing T_0, ..., T_{n-1}."""
        s = np.zeros((self.dim, self.dim), dtype=np.int64)
        for c in self.monomials:
            start = self.basis_vector(self.index(c, self.identity_perm))
            for w in self.perms:
                v = start
                # (L^c T_w)^* = T_{w^{-1}} L^c = T_{i_k} ... T_{i_1} L^c
                for i in reduced_word(w):
                    v = matmul(self.left[i], v, self.p)
                s[:, self.index(c, w)] = v
        return s

    @cached_property
    def right(self) -> list[np.ndarray]:
        """Matrices of right multiplication by T_0, ..., T_{n-1}."""
        return [matmul(matmul(self.star, g, self.p), self.star, self.p) for g in self.left]

    # -- full multiplication ---------------------------------------------
    @cached_property
    def structure(self) -> np.ndarray:
        """``structure[b]`` is the left action matrix of basis element ``b``."""
        p, N = self.p, self.dim
        perm_mats = {self.identity_perm: np.eye(N, dtype=np.int64)}
        for w in sorted(self.perms, key=length):
            if w in perm_mats:
                continue
            word = reduced_word(w)
            prev = w
            prev = times_s(prev, word[-1])
            perm_mats[w] = matmul(perm_mats[prev], self.left[word[-1]], p)
        mono_mats = {}
        for c in sorted(self.monomials, key=sum):
            if not any(c):
                mono_mats[c] = np.eye(N, dtype=np.int64)
                continue
            j = max(k for k in range(self.n) if c[k])
            prev = c[:j] + (c[j] - 1,) + c[j + 1:]
            mono_mats[c] = matmul(mono_mats[prev], self.left_L[j], p)
        dtype = np.uint16 if p < 2**16 else np.int64
        out = np.empty((N, N, N), dtype=dtype)
        for c in self.monomials:
            for w in self.perms:
                out[self.index(c, w)] = matmul(mono_mats[c], perm_mats[w], p)
        return out

    def mul(self, x, y) -> np.ndarray:
        N, p = self.dim, self.p
        lx = matmul(np.asarray(x, dtype=np.int64).reshape(1, N),
                    self.structure.reshape(N, N * N), p).reshape(N, N)
        return matmul(lx, np.asarray(y, dtype=np.int64), p)

    def prod(self, *xs) -> np.ndarray:
        out = self.one()
        for x in xs:
            out = self.mul(out, x)
        return out

    def left_matrix(self, x) -> np.ndarray:
        N = self.dim
        return matmul(np.asarray(x, dtype=np.int64).reshape(1, N),
                      self.structure.reshape(N, N * N), self.p).reshape(N, N)

    def right_matrix(self, y) -> np.ndarray:
        """Matrix ``R`` with ``R @ x == x * y``."""
        N = self.dim
        s = self.structure.reshape(N * N, N)
        return matmul(s, np.asarray(y, dtype=np.int64), self.p).reshape(N, N).T.copy()

    def apply_star(self, x) -> np.ndarray:
        return matmul(self.star, np.asarray(x, dtype=np.int64), self.p)

    def tau(self, x) -> int:
        """Coefficient of the identity normal form."""
        return int(np.asarray(x)[0]) % self.p

    def polynomial_in_L1(self, coeffs) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        power = self.one()
        for c in coeffs:
            out = (out + c * power) % self.p
            power = self.mul(self.L(1), power)
        return out

    # -- certification ------------------------------------------------------
    def check_relations(self) -> dict[str, bool]:
        """Replay H1-H5 on the left action matrices."""
        p, N = self.p, self.dim
        eye = np.eye(N, dtype=np.int64)
        g = self.left
        mm = lambda *ms: _chain(ms, p)  # noqa: E731
        out = {}
        h1 = eye.copy()
        for Qk in self.params.Q:
            h1 = matmul(h1, (g[0] - Qk * eye) % p, p)
        out["H1"] = not h1.any()
        if self.n >= 2:
            out["H2"] = np.array_equal(mm(g[0], g[1], g[0], g[1]), mm(g[1], g[0], g[1], g[0]))
        else:
            out["H2"] = True
        out["H3"] = all(not mm((g[i] + eye) % p, (g[i] - self.q * eye) % p).any()
                        for i in range(1, self.n))
        out["H4"] = all(np.array_equal(mm(g[i], g[i + 1], g[i]), mm(g[i + 1], g[i], g[i + 1]))
                        for i in range(1, self.n - 1))
        out["H5"] = all(np.array_equal(mm(g[i], g[j]), mm(g[j], g[i]))
                        for i in range(self.n) for j in range(i + 2, self.n))
        return out

    def check_normal_forms(self) -> bool:
        """``L^c T_w · 1`` is the basis vector labelled ``(c, w)``, and right
        multiplication commutes with left multiplication."""
        p = self.p
        one = self.one()
        for c in self.monomials:
            for w in self.perms:
                v = one
                for i in reversed(reduced_word(w)):
                    v = matmul(self.left[i], v, p)
                for j in reversed(range(self.n)):
                    for _ in range(c[j]):
                        v = matmul(self.left_L[j], v, p)
                if not np.array_equal(v, self.basis_vector(self.index(c, w))):
                    return False
        if not np.array_equal(matmul(self.star, self.star, p), np.eye(self.dim, dtype=np.int64)):
            return False
        return all(np.array_equal(matmul(a, b, p), matmul(b, a, p))
                   for a in self.left for b in self.right)

    def span_rank_of_normal_forms(self) -> int:
        return rank(self.structure[:, :, 0].astype(np.int64), self.p)


def _chain(ms, p):
    out = ms[0]
    for m in ms[1:]:
        out = matmul(out, m, p)
    return out


def build_algebra(params: AKParams, cap: int = DIM_CAP, check: bool = True) -> AKAlgebra:
    alg = AKAlgebra(params, cap)
    if check:
        rel = alg.check_relations()
        if not all(rel.values()):
            raise InternalError(f"defining relations fail: {rel}")
        if not alg.check_normal_forms():
            raise InternalError("normal forms are not reproduced by the action")
    return alg

"""Dense exact linear algebra over F_p on numpy integer arrays.

Matrices are ``int64`` arrays whose entries lie in ``[0, p)``; every function
takes the modulus explicitly.  Row vectors are the default convention for
subspaces: a :class:`Subspace` stores its basis as the rows of a matrix in
reduced row echelon form, so two subspaces are equal exactly when their
stored bases are.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_EXACT_FLOAT = 2**53


def asmod(a, p: int) -> np.ndarray:
    return np.mod(np.asarray(a, dtype=np.int64), p)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` without overflow.

    Uses float64 BLAS when every partial sum is exactly representable,
    otherwise int64 in chunks of the inner dimension.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    inner = a.shape[-1] if a.ndim else 1
    bound = (p - 1) ** 2
    if inner * bound < _EXACT_FLOAT:
        out = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        return np.mod(np.rint(out).astype(np.int64), p)
    chunk = max(1, (2**62) // max(bound, 1))
    if chunk == 1:
        return np.mod(a.astype(object) @ b.astype(object), p).astype(np.int64)
    out = None
    for start in range(0, inner, chunk):
        part = np.mod(a[..., start:start + chunk] @ b[start:start + chunk, ...], p)
        out = part if out is None else np.mod(out + part, p)
    return out


def rref(m, p: int):
    """Reduced row echelon form of ``m`` over F_p.

    Returns ``(R, pivots)`` where ``R`` keeps only the nonzero rows.
    """
    a = asmod(m, p).copy()
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(col[nzr], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m, p: int) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F_p^ambient held by its canonical (RREF) basis."""

    ambient: int
    p: int
    basis: np.ndarray = field(repr=False)
    pivots: tuple = ()

    @classmethod
    def span(cls, vectors, ambient: int, p: int) -> "Subspace":
        v = np.asarray(vectors, dtype=np.int64).reshape(-1, ambient)
        if v.shape[0] == 0:
            return cls.zero(ambient, p)
        r, piv = rref(v, p)
        return cls(ambient, p, r, tuple(piv))

    @classmethod
    def zero(cls, ambient: int, p: int) -> "Subspace":
        return cls(ambient, p, np.zeros((0, ambient), dtype=np.int64), ())

    @classmethod
    def full(cls, ambient: int, p: int) -> "Subspace":
        return cls(ambient, p, np.eye(ambient, dtype=np.int64), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient == other.ambient and self.p == other.p
                and self.pivots == other.pivots
                and np.array_equal(self.basis, other.basis))

    def __hash__(self):
        return hash((self.ambient, self.p, self.pivots, self.basis.tobytes()))

    def coordinates(self, v) -> np.ndarray:
        """Coordinates of ``v`` in the stored basis (``v`` assumed inside)."""
        v = asmod(v, self.p)
        return v[..., list(self.pivots)]

    def contains(self, v) -> bool:
        v = asmod(v, self.p)
        if self.dim == 0:
            return not v.any()
        resid = (v - matmul(self.coordinates(v), self.basis, self.p)) % self.p
        return not resid.any()

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return Subspace.span(np.vstack([self.basis, other.basis]), self.ambient, self.p)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)


def _check_ambient(s1: Subspace, s2: Subspace):
    if s1.ambient != s2.ambient or s1.p != s2.p:
        raise ValueError(
            f"subspaces live in different spaces: F_{s1.p}^{s1.ambient} vs F_{s2.p}^{s2.ambient}")


def kernel(m, p: int) -> Subspace:
    """Right null space ``{x : m @ x == 0}``."""
    m = np.asarray(m, dtype=np.int64)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return Subspace.full(cols, p)
    r, piv = rref(m, p)
    free = [c for c in range(cols) if c not in set(piv)]
    vecs = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        vecs[k, f] = 1
        for i, pc in enumerate(piv):
            vecs[k, pc] = (-r[i, f]) % p
    return Subspace.span(vecs, cols, p)


def left_kernel(m, p: int) -> Subspace:
    """``{y : y @ m == 0}``."""
    return kernel(np.asarray(m).T, p)


def solve(m, b, p: int):
    """One solution of ``m @ x == b``, or ``None`` when inconsistent.

    ``b`` may be a vector or a matrix of right-hand sides (columns).
    """
    m = asmod(m, p)
    b = asmod(b, p)
    vec = b.ndim == 1
    bb = b.reshape(-1, 1) if vec else b
    rows, cols = m.shape
    aug = np.hstack([m, bb])
    r, piv = rref(aug, p)
    if any(c >= cols for c in piv):
        return None
    x = np.zeros((cols, bb.shape[1]), dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = r[i, cols:]
    return x[:, 0] if vec else x


def inverse(m, p: int) -> np.ndarray:
    m = asmod(m, p)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    r, piv = rref(np.hstack([m, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return r[:n, n:]


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    _check_ambient(s1, s2)
    p = s1.p
    if s1.dim == 0 or s2.dim == 0:
        return Subspace.zero(s1.ambient, p)
    stacked = np.vstack([s1.basis, (-s2.basis) % p])
    rel = left_kernel(stacked, p)
    if rel.dim == 0:
        return Subspace.zero(s1.ambient, p)
    vecs = matmul(rel.basis[:, :s1.dim], s1.basis, p)
    return Subspace.span(vecs, s1.ambient, p)


def image(m, p: int) -> Subspace:
    """Column space of ``m`` as a subspace (of row vectors)."""
    m = np.asarray(m, dtype=np.int64)
    return Subspace.span(m.T, m.shape[0], p)


# --- commutative algebras given by structure constants ---------------------

def _cmul(x, y, table, p):
    # table[i, j, k]: coefficient of basis k in b_i * b_j
    t = np.tensordot(np.asarray(x, dtype=np.int64), table, axes=(0, 0)) % p
    return np.tensordot(np.asarray(y, dtype=np.int64), t, axes=(0, 0)) % p


def minimal_polynomial(z, mult, one, p: int) -> list[int]:
    """Monic minimal polynomial of ``z`` as coefficients, constant term first.

    ``mult(x, y)`` multiplies two coordinate vectors and ``one`` is the
    identity.  Powers of ``z`` are accumulated until the first linear
    dependence.
    """
    z = asmod(z, p)
    one = asmod(one, p)
    powers = [one]
    while True:
        nxt = asmod(mult(powers[-1], z), p)
        mat = np.array(powers, dtype=np.int64).T
        sol = solve(mat, nxt, p)
        if sol is not None:
            return [int(-c % p) for c in sol] + [1]
        powers.append(nxt)


def _roots(coeffs, p):
    return [x for x in range(p) if sum(c * pow(x, k, p) for k, c in enumerate(coeffs)) % p == 0]


def split_idempotents(table, one, p: int) -> list[np.ndarray]:
    """Primitive orthogonal idempotents of a split commutative algebra.

    ``table[i, j, :]`` holds the coordinates of ``b_i * b_j``.  The
    idempotents span the Frobenius-fixed subalgebra ``{z : z**p == z}``,
    which is a product of copies of F_p; it is split by Lagrange projectors
    built from eigenvalues of its elements until each piece is one
    dimensional.
    """
    table = asmod(table, p)
    if not np.array_equal(table, table.transpose(1, 0, 2)):
        raise ValueError("algebra is not commutative")
    one = asmod(one, p)
    dim = len(one)

    def mult(x, y):
        return _cmul(x, y, table, p)

    def power(x, k):
        result, base = one.copy(), x
        while k:
            if k & 1:
                result = mult(result, base)
            base = mult(base, base)
            k >>= 1
        return result

    eye = np.eye(dim, dtype=np.int64)
    frob = np.array([power(eye[i], p) for i in range(dim)], dtype=np.int64)
    fixed = left_kernel((frob - eye) % p, p)
    pending = [one]
    done = []
    while pending:
        e = pending.pop()
        # e*F is spanned by e times the basis of F; look for a non-scalar element
        piece = Subspace.span(np.array([mult(e, f) for f in fixed.basis]), dim, p)
        if piece.dim <= 1:
            done.append(e)
            continue
        z = next(v for v in piece.basis if not Subspace.span(e, dim, p).contains(v))
        mp = minimal_polynomial(z, mult, e, p)
        roots = _roots(mp, p)
        if len(roots) != len(mp) - 1:
            raise ValueError("algebra is not split over F_p")
        for a in roots:
            proj = e.copy()
            for b in roots:
                if b != a:
                    factor = (z - b * e) % p * pow((a - b) % p, -1, p) % p
                    proj = mult(proj, factor)
            pending.append(proj)
    done.sort(key=lambda v: tuple(v))
    return done

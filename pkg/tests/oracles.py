"""Slow, independent reference implementations used to cross-check the library.

Nothing here imports the code under test except for plain data types, so a
bug in the library cannot leak into its own oracle.
"""

from collections import Counter
from fractions import Fraction
from itertools import permutations, product


# --- field and linear algebra ---------------------------------------------

def order_of(q, p):
    x, k = q % p, 1
    while x != 1:
        x, k = x * q % p, k + 1
    return k


def rank_mod_p(rows, p):
    """Rank by textbook elimination on Python lists."""
    m = [[int(x) % p for x in row] for row in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def det_mod_p(m, p):
    """Leibniz expansion; only for tiny matrices."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total % p


# --- multipartitions -------------------------------------------------------

def residues(lam, e, a):
    """Residue multiset of all nodes, computed row by row."""
    out = Counter()
    for k, comp in enumerate(lam):
        for i, length in enumerate(comp, start=1):
            for j in range(1, length + 1):
                out[(a[k] + j - i) % e] += 1
    return out


def weight_oracle(lam, e, a):
    """Weight via the defining formula, in exact rational arithmetic."""
    c = residues(lam, e, a)
    w = Fraction(sum(c[x % e] for x in a))
    w -= Fraction(1, 2) * sum((c[f] - c[(f + 1) % e]) ** 2 for f in range(e))
    assert w.denominator == 1
    return int(w)


def all_partitions(n, top=None):
    top = n if top is None else top
    if n == 0:
        yield ()
        return
    for first in range(min(n, top), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def all_multipartitions(n, r):
    for sizes in product(range(n + 1), repeat=r):
        if sum(sizes) == n:
            yield from product(*(list(all_partitions(s)) for s in sizes))


def conjugate_oracle(lam):
    def conj(part):
        return tuple(sum(1 for x in part if x > j) for j in range(part[0] if part else 0))
    return tuple(conj(c) for c in reversed(lam))


def dominates_oracle(lam, mu):
    """Compare the numbers of nodes in the first components and rows."""
    def count(x, k, i):
        return sum(sum(c) for c in x[:k - 1]) + sum(x[k - 1][:i])
    r = len(lam)
    rows = max([len(c) for c in lam + mu] + [1])
    return all(count(lam, k, i) >= count(mu, k, i) for k in range(1, r + 1) for i in range(rows + 1))


def standard_tableaux_count(lam):
    """Count standard fillings by removing removable nodes recursively."""
    def rec(shape):
        shape = tuple(tuple(x for x in c if x) for c in shape)
        if not any(shape):
            return 1
        total = 0
        for k, comp in enumerate(shape):
            for i, length in enumerate(comp):
                if i + 1 == len(comp) or comp[i + 1] < length:
                    new = list(map(list, shape))
                    new[k][i] -= 1
                    total += rec(new)
        return total
    return rec(lam)


def blocks_oracle(n, e, a):
    """Group multipartitions of n by their residue multiset."""
    groups = {}
    for lam in all_multipartitions(n, len(a)):
        key = tuple(sorted(residues(lam, e, a).items()))
        groups.setdefault(key, []).append(lam)
    return list(groups.values())

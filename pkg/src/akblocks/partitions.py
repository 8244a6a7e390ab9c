"""Partitions, multipartitions, dominance and standard tableaux.

A partition is a plain tuple of positive weakly decreasing integers (the
empty partition is ``()``).  A :class:`MultiPartition` is a tuple of such
partitions.  Nodes are 1-based triples ``(row, column, component)``.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import ParseError, PreconditionError

TABLEAU_CAP = 12


def make_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"not a partition: {parts}")
    return parts


def conjugate_partition(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x > j) for j in range(parts[0]))


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n == 0:
        return ((),)
    largest = n if largest is None else min(largest, n)
    out = []
    for first in range(largest, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def hook_length_count(parts: Sequence[int]) -> int:
    """Number of standard tableaux of one partition (hook length formula)."""
    n = sum(parts)
    conj = conjugate_partition(parts)
    hooks = prod(parts[i] - j + conj[j] - i - 1
                 for i in range(len(parts)) for j in range(parts[i]))
    return factorial(n) // hooks


class MultiPartition(tuple):
    """An r-tuple of partitions; ``str`` gives the ``a,b|c|-`` wire format."""

    def __new__(cls, components):
        return super().__new__(cls, (make_partition(c) for c in components))

    @property
    def r(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self)

    def nodes(self) -> Iterator[tuple[int, int, int]]:
        for k, comp in enumerate(self, start=1):
            for i, row in enumerate(comp, start=1):
                for j in range(1, row + 1):
                    yield (i, j, k)

    def conjugate(self) -> "MultiPartition":
        return MultiPartition(conjugate_partition(c) for c in reversed(self))

    def __str__(self):
        return "|".join(",".join(map(str, c)) if c else "-" for c in self)

    def __repr__(self):
        return f"MultiPartition({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "MultiPartition":
        text = text.strip()
        if not text:
            raise ParseError("empty multipartition string")
        comps = []
        for piece in text.split("|"):
            piece = piece.strip()
            if piece == "-":
                comps.append(())
                continue
            try:
                parts = [int(x) for x in piece.split(",")]
            except ValueError:
                raise ParseError(f"bad component {piece!r} in {text!r}") from None
            if any(x <= 0 for x in parts) or parts != sorted(parts, reverse=True):
                raise ParseError(f"component {piece!r} is not a partition")
            comps.append(parts)
        return cls(comps)


def parse_multipartition(text: str) -> MultiPartition:
    return MultiPartition.parse(text)


def _compositions(n: int, r: int):
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, r - 1):
            yield (first,) + rest


def enumerate_multipartitions(n: int, r: int) -> list[MultiPartition]:
    """All r-partitions of n.

    Ordered by the sizes of the components (largest first component first),
    then by the components in reverse lexicographic order.
    """
    if n < 0 or r < 1:
        raise PreconditionError("need n >= 0 and r >= 1")
    out = []
    for sizes in _compositions(n, r):
        def rec(k, acc):
            if k == r:
                out.append(MultiPartition(acc))
                return
            for part in partitions(sizes[k]):
                rec(k + 1, acc + [part])
        rec(0, [])
    return out


def _partial_sums(lam: MultiPartition, depth: int) -> list[int]:
    sums, base = [], 0
    for comp in lam:
        run = base
        for j in range(depth):
            run += comp[j] if j < len(comp) else 0
            sums.append(run)
        base += sum(comp)
    return sums


def dominates(lam: MultiPartition, mu: MultiPartition) -> bool:
    """``lam ⊵ mu`` in the dominance order on multipartitions."""
    if lam.r != mu.r or lam.size != mu.size:
        raise PreconditionError(f"cannot compare {lam} and {mu}: different r or size")
    depth = max([len(c) for c in lam] + [len(c) for c in mu] + [1])
    return all(a >= b for a, b in zip(_partial_sums(lam, depth), _partial_sums(mu, depth)))


def strictly_dominates(lam: MultiPartition, mu: MultiPartition) -> bool:
    return lam != mu and dominates(lam, mu)


def count_standard_tableaux(lam: MultiPartition) -> int:
    sizes = [sum(c) for c in lam]
    multinom = factorial(sum(sizes)) // prod(factorial(s) for s in sizes)
    return multinom * prod(hook_length_count(c) for c in lam)


# A tableau is a tuple (one entry per component) of tuples of rows.
Tableau = tuple


def reading_word(t: Tableau) -> tuple[int, ...]:
    return tuple(x for comp in t for row in comp for x in row)


def shape_of(t: Tableau) -> MultiPartition:
    return MultiPartition(tuple(len(row) for row in comp) for comp in t)


def is_standard(t: Tableau) -> bool:
    for comp in t:
        for i, row in enumerate(comp):
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                return False
            if i and any(comp[i - 1][j] >= row[j] for j in range(len(row))):
                return False
    return sorted(reading_word(t)) == list(range(1, len(reading_word(t)) + 1))


def enumerate_standard_tableaux(lam: MultiPartition, cap: int = TABLEAU_CAP) -> list[Tableau]:
    """All standard lam-tableaux, sorted by row reading word."""
    n = lam.size
    if n > cap:
        raise PreconditionError(f"|lambda| = {n} exceeds the enumeration cap {cap}")
    results = []
    # fill entries n, n-1, ..., 1 into removable nodes
    fill = [[[0] * row for row in comp] for comp in lam]
    current = [list(comp) for comp in lam]

    def rec(m):
        if m == 0:
            results.append(tuple(tuple(tuple(row) for row in comp) for comp in fill))
            return
        for k, comp in enumerate(current):
            for i in range(len(comp)):
                if comp[i] and (i + 1 == len(comp) or comp[i + 1] < comp[i]):
                    comp[i] -= 1
                    fill[k][i][comp[i]] = m
                    rec(m - 1)
                    comp[i] += 1

    # rows that become empty stay as zeros in ``current``; the removability
    # test above treats a following zero row as shorter, which is correct
    rec(n)
    results.sort(key=reading_word)
    return results


def initial_tableau(lam: MultiPartition) -> Tableau:
    """The tableau with 1..n entered along the rows, component by component."""
    out, k = [], 1
    for comp in lam:
        rows = []
        for length in comp:
            rows.append(tuple(range(k, k + length)))
            k += length
        out.append(tuple(rows))
    return tuple(out)

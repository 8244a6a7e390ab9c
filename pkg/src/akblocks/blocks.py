"""Residue combinatorics of multipartitions: Fayers' weight and block structure.

Every cyclotomic parameter is a power of ``q`` (``Q_k = q^{a_k}``), so a node
residue ``q^{j-i} Q_k`` is recorded by its exponent ``(j - i + a_k) mod e``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cmp_to_key

from .errors import InternalError, PreconditionError, TheoremViolation
from .partitions import (
    MultiPartition,
    count_standard_tableaux,
    dominates,
    enumerate_multipartitions,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResidueParams:
    e: int
    a: tuple[int, ...]

    def __post_init__(self):
        if self.e < 2:
            raise PreconditionError(f"e must be at least 2, got {self.e}")
        if not self.a:
            raise PreconditionError("need at least one cyclotomic parameter")
        object.__setattr__(self, "a", tuple(int(x) % self.e for x in self.a))

    @property
    def r(self) -> int:
        return len(self.a)


def residue(node, params: ResidueParams) -> int:
    i, j, k = node
    return (j - i + params.a[k - 1]) % params.e


def content(lam: MultiPartition, params: ResidueParams) -> tuple[int, ...]:
    c = [0] * params.e
    for node in lam.nodes():
        c[residue(node, params)] += 1
    return tuple(c)


def weight(lam: MultiPartition, params: ResidueParams) -> int:
    """Fayers' weight of ``lam``.

    ``sum_k c_{a_k} - 1/2 sum_f (c_f - c_{f+1})^2`` with ``f`` running over the
    residues mod ``e`` (``Q_k`` repeated in ``a`` counts once per repetition).
    """
    if lam.r != params.r:
        raise PreconditionError(f"{lam} has {lam.r} components but there are {params.r} parameters")
    c = content(lam, params)
    e = params.e
    diff = sum((c[f] - c[(f + 1) % e]) ** 2 for f in range(e))
    if diff % 2:
        raise InternalError(f"odd defect sum {diff} for {lam}")
    return sum(c[a] for a in params.a) - diff // 2


def conjugate_params(params: ResidueParams) -> ResidueParams:
    """Parameters of the algebra with ``q^{-1}`` and ``Q`` reversed.

    In exponent form relative to ``q^{-1}``: ``a'_k = -a_{r+1-k}``.
    """
    return ResidueParams(params.e, tuple(-x for x in reversed(params.a)))


def dominance_sorted(members) -> tuple[list[MultiPartition], bool]:
    """Sort by dominance (least dominant first); report whether it is a chain."""
    def cmp(x, y):
        if x == y:
            return 0
        if dominates(y, x):
            return -1
        if dominates(x, y):
            return 1
        return 0

    ordered = sorted(members, key=lambda m: m.size)
    # insertion by dominance; stable fallback keeps incomparable pairs in input order
    ordered = sorted(ordered, key=cmp_to_key(cmp))
    chain = all(dominates(ordered[i + 1], ordered[i]) for i in range(len(ordered) - 1))
    return ordered, chain


@dataclass
class BlockClass:
    content: tuple[int, ...]
    members: list[MultiPartition]
    weight: int

    @property
    def is_chain(self) -> bool:
        return dominance_sorted(self.members)[1]

    def descending(self) -> list[MultiPartition]:
        """Members from most to least dominant (input order when not a chain)."""
        ordered, chain = dominance_sorted(self.members)
        return list(reversed(ordered)) if chain else list(self.members)


def partition_into_blocks(n: int, params: ResidueParams) -> list[BlockClass]:
    """Group all r-partitions of ``n`` by residue content.

    Blocks are listed in order of first appearance in the enumeration.
    """
    groups: dict[tuple, list[MultiPartition]] = {}
    for lam in enumerate_multipartitions(n, params.r):
        groups.setdefault(content(lam, params), []).append(lam)
    blocks = []
    for c, members in groups.items():
        weights = {weight(m, params) for m in members}
        if len(weights) != 1:
            raise TheoremViolation("Remark 3.2", f"block {c} has members of weights {sorted(weights)}",
                                   witness=[str(m) for m in members])
        w = weights.pop()
        if w < 0:
            log.warning("block %s has negative weight %d", c, w)
        blocks.append(BlockClass(c, members, w))
    return blocks


def find_block(n: int, params: ResidueParams, target_content) -> BlockClass:
    target = tuple(int(x) for x in target_content)
    for b in partition_into_blocks(n, params):
        if b.content == target:
            return b
    raise PreconditionError(f"no {params.r}-partition of {n} has content {list(target)}")


@dataclass
class WeightOneReport:
    """Combinatorial description of a weight-one block.

    ``chain`` lists the members least dominant first (``chain[0]`` is
    lambda_1).  Index lists in ``lambda_sets`` refer to positions in ``chain``.
    """

    chain: list[MultiPartition]
    s: int
    lambda_sets: dict[int, list[MultiPartition]]
    decomposition: list[list[int]]
    n_lambda: list[int]
    dim_L: list[int]
    dim_rad_cell: list[int]
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "chain": [str(m) for m in self.chain],
            "s": self.s,
            "lambda_sets": {f"Lambda{i}": [str(m) for m in v] for i, v in self.lambda_sets.items()},
            "decomposition": self.decomposition,
            "n_lambda": self.n_lambda,
            "dim_L": self.dim_L,
            "dim_rad_cell": self.dim_rad_cell,
        }


def classify_weight_one(block: BlockClass, params: ResidueParams) -> WeightOneReport:
    if block.weight != 1:
        raise PreconditionError(f"block {list(block.content)} has weight {block.weight}, not 1")
    chain, ok = dominance_sorted(block.members)
    if not ok:
        raise TheoremViolation("Lemma 3.8", "members of a weight-one block are not totally ordered",
                               witness=[str(m) for m in block.members])
    s = len(chain)
    if s > params.e:
        raise TheoremViolation("Lemma 3.8", f"chain length {s} exceeds e = {params.e}",
                               witness=[str(m) for m in chain])
    decomposition = [[1 if (i == j or i == j + 1) else 0 for j in range(s - 1)] for i in range(s)]
    n_lambda = [count_standard_tableaux(m) for m in chain]
    # [W(l_i)] = [L(l_i)] + [L(l_{i-1})], inverted along the chain
    dim_L = []
    for i in range(s - 1):
        dim_L.append(sum((-1) ** (i - j) * n_lambda[j] for j in range(i + 1)))
    if any(d <= 0 for d in dim_L):
        raise TheoremViolation("Lemma 3.8", f"non-positive simple dimension in {dim_L}",
                               witness=[str(m) for m in chain])
    if s >= 2 and dim_L[-1] != n_lambda[-1]:
        raise TheoremViolation("Lemma 3.9", "W(lambda_s) is not isomorphic to L(lambda_{s-1})",
                               witness={"dim_L": dim_L, "n_lambda": n_lambda})
    dim_rad = [0] + [dim_L[i - 1] for i in range(1, s)]
    sets = {
        0: chain[:s - 1],
        1: chain[:1],
        2: chain[1:s - 1],
        3: chain[s - 1:],
        4: chain[:1],
    }
    return WeightOneReport(chain, s, sets, decomposition, n_lambda, dim_L, dim_rad)


def mirror_block(block: BlockClass, params: ResidueParams) -> tuple[BlockClass, ResidueParams]:
    """The block of the parameter-reversed algebra holding the conjugates."""
    mparams = conjugate_params(params)
    n = block.members[0].size
    target = content(block.members[0].conjugate(), mparams)
    return find_block(n, mparams, target), mparams


@dataclass
class PairedSums:
    mirror_members_match: bool
    mirror_chain_reversed: bool
    mirror_weight: int
    lemma_3_11: tuple[int, int]
    lemma_3_12: tuple[int, int]

    @property
    def ok(self) -> bool:
        return (self.mirror_members_match and self.mirror_chain_reversed and self.mirror_weight == 1
                and self.lemma_3_11[0] == self.lemma_3_11[1]
                and self.lemma_3_12[0] == self.lemma_3_12[1])


def paired_sums(reports) -> tuple[tuple[int, int], tuple[int, int]]:
    """Both sides of the two sum identities over a collection of reports.

    Each report is a :class:`WeightOneReport`-like object with ``lambda_sets``
    (by member), ``chain``, ``n_lambda``, ``dim_L`` and ``dim_rad_cell``.
    """
    s3 = s4 = r2 = l2 = 0
    for rep in reports:
        pos = {m: i for i, m in enumerate(rep.chain)}
        s3 += sum(rep.n_lambda[pos[m]] ** 2 for m in rep.lambda_sets[3])
        s4 += sum(rep.n_lambda[pos[m]] ** 2 for m in rep.lambda_sets[4])
        for m in rep.lambda_sets[2]:
            i = pos[m]
            r2 += rep.dim_rad_cell[i] ** 2
            l2 += rep.dim_L[i] ** 2
    return (s3, s4), (r2, l2)


def verify_paired_sums(block: BlockClass, params: ResidueParams) -> PairedSums:
    rep = classify_weight_one(block, params)
    mblock, mparams = mirror_block(block, params)
    if mblock.weight != 1:
        raise TheoremViolation("Lemma 3.5", f"mirror block has weight {mblock.weight}",
                               witness=str(mblock.content))
    mrep = classify_weight_one(mblock, mparams)
    members_match = set(mblock.members) == {m.conjugate() for m in block.members}
    reversed_ok = mrep.chain == [m.conjugate() for m in reversed(rep.chain)]
    l311, l312 = paired_sums([rep, mrep])
    return PairedSums(members_match, reversed_ok, mblock.weight, l311, l312)

"""Reproducible acceptance checks, one row per published statement.

Each check returns a :class:`Row`; :func:`run` collects them.  The random
parameter samples use a fixed seed so that a run is fully deterministic.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass
from itertools import product
from math import factorial

import numpy as np

from .blocks import (
    ResidueParams,
    classify_weight_one,
    conjugate_params,
    partition_into_blocks,
    weight,
)
from .errors import AKError
from .partitions import count_standard_tableaux, dominates, enumerate_multipartitions, parse_multipartition

log = logging.getLogger(__name__)

SEED = 20240601
EXAMPLE_LAMBDA = "3,3,2|2,1|1,1,1,1,1,1|2,2,1"

# Algebras used by the structural identity suite: (p, q, a, n).
STRUCTURE_INSTANCES = [
    (7, 2, (0, 1), 1), (7, 2, (0, 1), 2), (7, 2, (0, 1), 3),
    (5, 4, (0, 0), 1), (5, 4, (0, 0), 2), (5, 4, (0, 0), 3),
    (13, 3, (0, 2), 3), (11, 3, (1, 4), 2),
]


@dataclass
class Row:
    statement: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0


def _timed(statement, fn) -> Row:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except AKError as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Row(statement, bool(ok), detail, time.perf_counter() - t0)


def _random_params(rng: random.Random, r: int, max_e: int = 12) -> ResidueParams:
    e = rng.randint(2, max_e)
    return ResidueParams(e, tuple(rng.randrange(e) for _ in range(r)))


# --- combinatorial checks ---------------------------------------------------

def check_example() -> tuple[bool, str]:
    lam = parse_multipartition(EXAMPLE_LAMBDA)
    rp = ResidueParams(9, (1, 1, 5, 2))
    w, wc = weight(lam, rp), weight(lam.conjugate(), rp)
    return (w, wc) == (1, 6), f"w={w}, w(conj)={wc}"


def check_bipartition_conjugation(samples: int = 200, max_n: int = 6) -> tuple[bool, str]:
    rng = random.Random(SEED)
    lams = [lam for n in range(max_n + 1) for lam in enumerate_multipartitions(n, 2)]
    for _ in range(samples):
        rp = _random_params(rng, 2)
        for lam in lams:
            if weight(lam, rp) != weight(lam.conjugate(), rp):
                return False, f"{lam} under e={rp.e}, a={list(rp.a)}"
    return True, f"{len(lams)} bipartitions x {samples} parameter pairs"


def check_reversed_conjugation(samples: int = 100, max_n: int = 5, max_r: int = 4) -> tuple[bool, str]:
    rng = random.Random(SEED + 1)
    total = 0
    for _ in range(samples):
        r = rng.randint(1, max_r)
        rp = _random_params(rng, r)
        mp = conjugate_params(rp)
        for n in range(max_n + 1):
            for lam in enumerate_multipartitions(n, r):
                total += 1
                if weight(lam, rp) != weight(lam.conjugate(), mp):
                    return False, f"{lam} under e={rp.e}, a={list(rp.a)}"
    return True, f"{total} (multipartition, parameter) pairs"


def check_dominance_reversal(max_n: int = 6, max_r: int = 3) -> tuple[bool, str]:
    pairs = 0
    for r in range(1, max_r + 1):
        for n in range(max_n + 1):
            lams = enumerate_multipartitions(n, r)
            conj = {lam: lam.conjugate() for lam in lams}
            for lam, mu in product(lams, repeat=2):
                pairs += 1
                if dominates(lam, mu) != dominates(conj[mu], conj[lam]):
                    return False, f"{lam} vs {mu}"
    return True, f"{pairs} ordered pairs"


def _block_sweep(samples: int = 50, max_n: int = 6, max_r: int = 3):
    rng = random.Random(SEED + 2)
    for _ in range(samples):
        r = rng.randint(1, max_r)
        rp = _random_params(rng, r, max_e=6)
        for n in range(max_n + 1):
            yield rp, n, partition_into_blocks(n, rp)


def check_block_weights() -> tuple[bool, str]:
    nblocks = 0
    for rp, _, blocks in _block_sweep():
        for blk in blocks:
            nblocks += 1
            if len({weight(m, rp) for m in blk.members}) != 1:
                return False, f"block {list(blk.content)} under e={rp.e}, a={list(rp.a)}"
    return True, f"{nblocks} blocks"


def check_weight_one_chains() -> tuple[bool, str]:
    found = 0
    for rp, _, blocks in _block_sweep():
        for blk in blocks:
            if blk.weight == 1:
                found += 1
                rep = classify_weight_one(blk, rp)
                if not blk.is_chain or rep.s > rp.e:
                    return False, f"block {list(blk.content)} under e={rp.e}, a={list(rp.a)}"
    return found > 0, f"{found} weight-one blocks"


# --- algebra checks ---------------------------------------------------------

def _instance_verdict(p, q, a, n, content, fault: str | None = None):
    from .akalgebra import AKParams, AlgebraAnalysis, verify_weight_one_block

    params = AKParams.make(p, q, a, n)
    an = AlgebraAnalysis(params)
    if fault == "gram":
        _corrupt_gram(an)
    return an, verify_weight_one_block(params, content, analysis=an, strict=False)


def _corrupt_gram(an) -> None:
    """Test hook: flip one Gram entry of the first shape with a nonzero form."""
    from .akalgebra.cellular import GramPair

    grams = dict(an.grams)
    lam = next(m for m, g in grams.items() if g.G.any())
    g = grams[lam]
    G = g.G.copy()
    G[0, 0] = (G[0, 0] + 1) % an.p
    grams[lam] = GramPair(g.shape, G, g.Gp, g.k_by_V, g.k)
    an.grams = grams


def algebra_rows(fault: str | None = None) -> list[Row]:
    """Rows for instances A and B plus the structural identity suite."""
    from .akalgebra.cellular import gram_identity_holds

    rows = []
    cache = {}

    def inst(key):
        if key not in cache:
            cache[key] = _instance_verdict(*key, fault=fault)
        return cache[key]

    A = (7, 2, (0, 1), 2, (1, 1, 0))
    B = (5, 4, (0, 0), 1, (1, 0))

    def gram_identity():
        bad = []
        for key in (A, B):
            an, _ = inst(key)
            bad += [str(m) for m, g in an.grams.items() if not gram_identity_holds(g, an.p)]
        return not bad, "violated for " + ", ".join(bad) if bad else "instances A and B"

    def from_checks(names, *keys):
        def fn():
            bad = [f"{n}@{k[:4]}" for k in keys for n in names if not inst(k)[1].checks[n]]
            return not bad, ", ".join(bad) or "ok"
        return fn

    def instance_a():
        an, v = inst(A)
        dims = sorted((blk.dim for blk in an.blocks), reverse=True)
        want = dict(dim_B=6, dim_radB=4, s=3)
        got = dict(dim_B=v.dim_B, dim_radB=v.dim_radB, s=v.s)
        ok = (an.alg.dim == 8 and dims == [6, 1, 1] and got == want and v.radB_square_dim > 0
              and v.radB_cube_dim == 0 and v.ok
              and v.chain == ["2|-", "1|1", "-|1,1"] and v.mirror["params"]["q"] == 4
              and v.mirror["params"]["a"] == [2, 0])
        return ok, f"dims {dims}, rad {v.dim_radB}/{v.radB_square_dim}/{v.radB_cube_dim}"

    def instance_b():
        an, v = inst(B)
        ok = (v.dim_B == 2 and v.dim_radB == 1 and v.radB_square_dim == 0 and v.ok
              and set(v.k_lambda.values()) == {0})
        return ok, f"rad {v.dim_radB}/{v.radB_square_dim}"

    rows.append(_timed("Gram identity G G' = k E", gram_identity))
    rows.append(_timed("Lemma 3.8", from_checks(["chain", "dims"], A, B)))
    rows.append(_timed("Lemma 3.9", from_checks(["lambda_sets", "k_zero"], A, B)))
    rows.append(_timed("Lemma 3.10", from_checks(["mirror_block", "mirror_lambda_sets"], A, B)))
    rows.append(_timed("Lemma 3.11", from_checks(["lemma_3_11"], A, B)))
    rows.append(_timed("Lemma 3.12", from_checks(["lemma_3_12"], A, B)))
    rows.append(_timed("Lemma 2.1", from_checks(["lambda_sets_restriction"], A, B)))
    rows.append(_timed("Corollary 3.14", from_checks(["rad_cube_zero", "rad_square"], A)))
    rows.append(_timed("Remark 3.15", from_checks(["rad_cube_zero", "rad_square"], B)))
    rows.append(_timed("final corollary L(B) = R(B)", from_checks(["L_equals_R"], A, B)))
    rows.append(_timed("instance A", instance_a))
    rows.append(_timed("instance B", instance_b))
    rows.append(_timed("structural identities", check_structure))
    return rows


def structure_report(p, q, a, n) -> dict[str, bool]:
    """All structural identities on one algebra (cellular data from scratch)."""
    from .akalgebra import AKParams, AlgebraAnalysis
    from .akalgebra.cellular import check_trace, gram_identity_holds

    an = AlgebraAnalysis(AKParams.make(p, q, a, n))
    alg = an.alg
    out = dict(alg.check_relations())
    out["normal_forms"] = alg.check_normal_forms()
    out.update({f"trace_{k}": v for k, v in check_trace(alg).items()})
    cd, D = an.djm, an.dual.D
    tau_cd = np.array([[alg.tau(alg.mul(c, d)) for d in D] for c in cd.C])
    perm = np.zeros_like(tau_cd)
    perm[np.arange(cd.size), cd.transpose_index()] = 1
    out["dual_delta"] = np.array_equal(tau_cd, perm)
    out["gram_identity"] = all(gram_identity_holds(g, an.p) for g in an.grams.values())
    counts = [count_standard_tableaux(m) for m in cd.shapes]
    out["dimension"] = alg.dim == len(a) ** n * factorial(n) == sum(c * c for c in counts)
    out["wedderburn"] = an.wedderburn_defect() == 0
    restriction = True
    for blk in an.blocks:
        ba = an.block(an.block_content(blk))
        local, glob = ba.lambda_sets, ba.restricted_global_sets()
        restriction &= all(set(local[i]) == set(glob[i]) for i in range(5))
    out["lambda_set_restriction"] = restriction
    return {k: bool(v) for k, v in out.items()}


def check_structure() -> tuple[bool, str]:
    for inst in STRUCTURE_INSTANCES:
        rep = structure_report(*inst)
        bad = [k for k, v in rep.items() if not v]
        if bad:
            return False, f"{inst}: {', '.join(bad)}"
    return True, f"{len(STRUCTURE_INSTANCES)} algebras"


COMBINATORIAL = [
    ("Example 3.3", check_example),
    ("Remark 3.2", check_block_weights),
    ("Lemma 3.4", check_bipartition_conjugation),
    ("Lemma 3.5", check_reversed_conjugation),
    ("Lemma 3.6", check_dominance_reversal),
    ("Lemma 3.8 (chains)", check_weight_one_chains),
]


def run(quick: bool = False, fault: str | None = None) -> list[Row]:
    rows = [_timed(name, fn) for name, fn in COMBINATORIAL]
    if not quick:
        rows += algebra_rows(fault)
    return rows


def format_table(rows: list[Row]) -> str:
    width = max(len(r.statement) for r in rows)
    lines = [f"{'statement':<{width}}  result  seconds  detail"]
    for r in rows:
        lines.append(f"{r.statement:<{width}}  {'PASS' if r.ok else 'FAIL':<6}  {r.seconds:7.2f}  {r.detail}")
    return "\n".join(lines)

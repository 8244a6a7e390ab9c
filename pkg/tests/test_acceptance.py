"""Acceptance criteria, one test per criterion.

Each test prints a single ``CRITERION n: PASS|FAIL`` line (visible even
without ``-s``) and then asserts.  Timings are wall-clock on fresh objects.
"""

import random
import time
from itertools import product

import pytest

from akblocks.akalgebra import AKParams, AlgebraAnalysis, verify_weight_one_block
from akblocks.blocks import ResidueParams, classify_weight_one, conjugate_params, partition_into_blocks, weight
from akblocks.linalg import rank
from akblocks.partitions import dominates, enumerate_multipartitions, parse_multipartition
from akblocks.selftest import structure_report
from oracles import weight_oracle

SEED = 1234


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\nCRITERION {number}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


def random_params(rng, r, max_e=12):
    e = rng.randint(2, max_e)
    return ResidueParams(e, tuple(rng.randrange(e) for _ in range(r)))


def test_criterion_1_example(report):
    t0 = time.perf_counter()
    lam = parse_multipartition("3,3,2|2,1|1,1,1,1,1,1|2,2,1")
    rp = ResidueParams(9, (1, 1, 5, 2))
    w, wc = weight(lam, rp), weight(lam.conjugate(), rp)
    dt = time.perf_counter() - t0
    ok = (w, wc) == (1, 6) and weight_oracle(lam, 9, rp.a) == 1 and dt < 1.0
    report(1, ok, f"w={w}, w(conj)={wc}, {dt:.3f}s (limit 1s)")


def test_criterion_2_bipartition_conjugation(report):
    rng = random.Random(SEED)
    lams = [lam for n in range(7) for lam in enumerate_multipartitions(n, 2)]
    bad = [(str(lam), rp) for rp in (random_params(rng, 2) for _ in range(200))
           for lam in lams if weight(lam, rp) != weight(lam.conjugate(), rp)]
    report(2, not bad, f"{len(lams)} bipartitions x 200 parameter pairs, {len(bad)} failures")


def test_criterion_3_reversed_parameters(report):
    rng = random.Random(SEED + 1)
    checked, bad = 0, []
    for _ in range(100):
        r = rng.randint(1, 4)
        rp = random_params(rng, r)
        mp = conjugate_params(rp)
        for n in range(6):
            for lam in enumerate_multipartitions(n, r):
                checked += 1
                if weight(lam, rp) != weight(lam.conjugate(), mp):
                    bad.append((str(lam), rp))
    report(3, not bad, f"{checked} cases over 100 parameter tuples, {len(bad)} failures")


def test_criterion_4_dominance_reversal(report):
    checked, bad = 0, []
    for r in range(1, 4):
        for n in range(7):
            lams = enumerate_multipartitions(n, r)
            for lam, mu in product(lams, repeat=2):
                checked += 1
                if dominates(lam, mu) != dominates(mu.conjugate(), lam.conjugate()):
                    bad.append((str(lam), str(mu)))
    report(4, not bad, f"{checked} ordered pairs, {len(bad)} failures")


def _sweep():
    rng = random.Random(SEED + 2)
    for _ in range(50):
        rp = random_params(rng, rng.randint(1, 3), max_e=6)
        for n in range(7):
            yield rp, partition_into_blocks(n, rp)


def test_criterion_5_constant_block_weight(report):
    count, bad = 0, []
    for rp, blocks in _sweep():
        for blk in blocks:
            count += 1
            if len({weight(m, rp) for m in blk.members}) != 1:
                bad.append((rp, blk.content))
    report(5, not bad, f"{count} blocks, {len(bad)} with varying weight")


def test_criterion_6_weight_one_chains(report):
    count, bad = 0, []
    for rp, blocks in _sweep():
        for blk in blocks:
            if blk.weight == 1:
                count += 1
                if not blk.is_chain or classify_weight_one(blk, rp).s > rp.e:
                    bad.append((rp, blk.content))
    report(6, count > 0 and not bad, f"{count} weight-one blocks, {len(bad)} violations")


def test_criterion_7_instance_a(report):
    t0 = time.perf_counter()
    params = AKParams.make(7, 2, (0, 1), 2)
    an = AlgebraAnalysis(params)
    v = verify_weight_one_block(params, (1, 1, 0), analysis=an, strict=False)
    ba = an.block((1, 1, 0))
    dt = time.perf_counter() - t0
    got = {
        "dim_H": an.alg.dim,
        "block_dims": sorted((b.dim for b in an.blocks), reverse=True),
        "chain": v.chain,
        "n_lambda": [v.gram[m]["n"] for m in reversed(v.chain)],
        "dim_L": [v.gram[m]["rank"] for m in reversed(v.chain)][:-1],
        "lambda_sets": {k: sorted(x) for k, x in v.lambda_sets.items()}
                       == {k: sorted(x) for k, x in v.lambda_sets_expected.items()},
        "k": sorted(set(v.k_lambda.values())),
        "rad": (v.dim_radB, v.radB_square_dim > 0, v.radB_cube_dim),
        "mirror": (v.mirror["params"]["q"], v.mirror["params"]["a"], v.mirror["params"]["p"]),
        "pair_sums": (v.mirror["lemma_3_11"][0] == v.mirror["lemma_3_11"][1],
                      v.mirror["lemma_3_12"][0] == v.mirror["lemma_3_12"][1]),
        "L=R": ba.l_ideal == ba.reynolds,
    }
    want = {
        "dim_H": 8,
        "block_dims": [6, 1, 1],
        "chain": ["2|-", "1|1", "-|1,1"],
        "n_lambda": [1, 2, 1],
        "dim_L": [1, 1],
        "lambda_sets": True,
        "k": [0],
        "rad": (4, True, 0),
        "mirror": (4, [2, 0], 7),
        "pair_sums": (True, True),
        "L=R": True,
    }
    diff = {k: got[k] for k in want if got[k] != want[k]}
    ok = not diff and v.ok and dt < 10.0
    report(7, ok, f"{dt:.2f}s (limit 10s); mismatches: {diff or 'none'}")


def test_criterion_8_instance_b(report):
    t0 = time.perf_counter()
    params = AKParams.make(5, 4, (0, 0), 1)
    an = AlgebraAnalysis(params)
    v = verify_weight_one_block(params, (1, 0), analysis=an, strict=False)
    ba = an.block((1, 0))
    dt = time.perf_counter() - t0
    ok = (v.dim_B == 2 and v.dim_radB == 1 and v.radB_square_dim == 0
          and set(v.k_lambda.values()) == {0} and ba.l_ideal == ba.reynolds and v.ok and dt < 1.0)
    report(8, ok, f"dim B={v.dim_B}, rad={v.dim_radB}, rad^2={v.radB_square_dim}, {dt:.3f}s (limit 1s)")


STRUCTURE = [(7, 2, (0, 1), 1), (7, 2, (0, 1), 2), (7, 2, (0, 1), 3),
             (5, 4, (0, 0), 2), (5, 4, (0, 0), 3), (13, 3, (0, 2), 3), (11, 3, (1, 4), 2)]


def test_criterion_9_structural_identities(report):
    t0 = time.perf_counter()
    failures = {}
    for inst in STRUCTURE:
        rep = structure_report(*inst)
        bad = [k for k, ok in rep.items() if not ok]
        if bad:
            failures[inst] = bad
    dt = time.perf_counter() - t0
    ok = not failures and dt < 300
    report(9, ok, f"{len(STRUCTURE)} algebras, {dt:.1f}s (limit 300s); failures: {failures or 'none'}")


def test_criterion_10_certification(report):
    """rad B = I_B is certified through the pair-sum hypotheses and every
    consequence checked by the verdict, on both algebra instances."""
    results = {}
    for args, c in [((7, 2, (0, 1), 2), (1, 1, 0)), ((5, 4, (0, 0), 1), (1, 0))]:
        v = verify_weight_one_block(AKParams.make(*args), c, strict=False)
        results[args] = (v.mirror["pair_conditions_hold"], v.ok)
    ok = all(a and b for a, b in results.values())
    report(10, ok, f"pair conditions and corollaries: {results}")


def test_gram_rank_frozen_values():
    """Frozen Gram data of instance A (computed once, independently re-derived
    by the tests in test_akalgebra)."""
    an = AlgebraAnalysis(AKParams.make(7, 2, (0, 1), 2))
    ranks = {str(m): rank(g.G, 7) for m, g in an.grams.items()}
    assert ranks == {"2|-": 0, "1,1|-": 1, "1|1": 1, "-|2": 1, "-|1,1": 1}

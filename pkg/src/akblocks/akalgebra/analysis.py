"""Per-algebra and per-block analysis, and the weight-one block verdict."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..blocks import (
    ResidueParams,
    WeightOneReport,
    classify_weight_one,
    content,
    find_block,
    paired_sums,
    weight,
)
from ..errors import InternalError, PreconditionError, TheoremViolation
from ..linalg import Subspace, image, matmul
from ..partitions import count_standard_tableaux
from .cellular import Cellular, check_cellularity, djm_basis, gram_matrices, lambda_sets, trace_and_dual
from .hecke import DIM_CAP, AKAlgebra, AKParams, build_algebra
from .structure import (
    AlgebraBlock,
    cell_and_simple_modules,
    center,
    center_and_blocks,
    is_two_sided_ideal,
    nilpotency_index,
    products_span,
    radical,
    socle,
)


class AlgebraAnalysis:
    """Lazily computed structure of one algebra H_n(q, Q)."""

    def __init__(self, params: AKParams, cap: int = DIM_CAP):
        self.params = params
        self.cap = cap

    @cached_property
    def alg(self) -> AKAlgebra:
        return build_algebra(self.params, self.cap)

    @property
    def p(self) -> int:
        return self.params.p

    @cached_property
    def residue_params(self) -> ResidueParams:
        return ResidueParams(self.params.e, self.params.a)

    @cached_property
    def djm(self) -> Cellular:
        return djm_basis(self.alg)

    @cached_property
    def cellularity(self):
        chk = check_cellularity(self.djm)
        if not chk.ok:
            raise InternalError(f"DJM family is not cellular: {chk.witness}")
        return chk

    @cached_property
    def dual(self):
        return trace_and_dual(self.djm)

    @cached_property
    def grams(self) -> dict:
        return gram_matrices(self.djm, self.dual)

    @cached_property
    def lambda_sets(self) -> dict:
        return lambda_sets(self.grams, self.p)

    @cached_property
    def modules(self) -> dict:
        return cell_and_simple_modules(self.djm, self.cellularity, self.grams)

    @cached_property
    def radical(self) -> Subspace:
        rad = radical(self.alg, self.modules, self.lambda_sets[0])
        if not is_two_sided_ideal(self.alg, rad):
            raise InternalError("computed radical is not a two-sided ideal")
        nilpotency_index(self.alg, rad)
        return rad

    @cached_property
    def center(self) -> Subspace:
        return center(self.alg)

    @cached_property
    def blocks(self) -> list[AlgebraBlock]:
        return center_and_blocks(self.alg, self.modules, self.center)

    def block_content(self, blk: AlgebraBlock) -> tuple[int, ...]:
        labels = {content(lam, self.residue_params) for lam in blk.shapes}
        if len(labels) != 1:
            raise TheoremViolation("Remark 3.2", "block idempotent covers several residue contents",
                                   witness=[str(m) for m in blk.shapes])
        return labels.pop()

    @cached_property
    def adapted(self) -> Cellular:
        """DJM family multiplied by block idempotents, ``z_{B(λ)} C^λ_{ST}``."""
        p, cd = self.p, self.djm
        owner = {lam: blk for blk in self.blocks for lam in blk.shapes}
        rows = []
        for (lam, s, t) in cd.labels:
            rows.append(self.alg.mul(owner[lam].idempotent, cd.vector(lam, s, t)))
        return Cellular(self.alg, cd.shapes, cd.tableaux, cd.labels, np.array(rows) % p)

    def block(self, target_content) -> "BlockAnalysis":
        target = tuple(int(x) for x in target_content)
        for blk in self.blocks:
            if self.block_content(blk) == target:
                return BlockAnalysis(self, blk, target)
        raise PreconditionError(f"no block with content {list(target)}")

    def block_of(self, lam) -> "BlockAnalysis":
        return self.block(content(lam, self.residue_params))

    def wedderburn_defect(self) -> int:
        """``dim rad A - (dim A - Σ_{Λ₀} (dim L)^2)``; zero when consistent."""
        simple = sum(self.modules[lam].dim_simple ** 2 for lam in self.lambda_sets[0])
        return self.radical.dim - (self.alg.dim - simple)


class BlockAnalysis:
    def __init__(self, parent: AlgebraAnalysis, blk: AlgebraBlock, label):
        self.parent = parent
        self.blk = blk
        self.content = label

    @property
    def alg(self) -> AKAlgebra:
        return self.parent.alg

    @property
    def p(self) -> int:
        return self.parent.p

    @property
    def dim(self) -> int:
        return self.blk.dim

    @cached_property
    def shapes(self) -> list:
        return [lam for lam in self.parent.djm.shapes if lam in set(self.blk.shapes)]

    @cached_property
    def family(self) -> Cellular:
        fam = self.parent.adapted.restrict(self.shapes)
        if fam.span() != self.blk.space:
            raise InternalError("adapted cellular family does not span its block")
        chk = check_cellularity(fam)
        if not chk.ok:
            raise InternalError(f"block family is not cellular: {chk.witness}")
        return fam

    @cached_property
    def dual(self):
        return trace_and_dual(self.family)

    @cached_property
    def grams(self) -> dict:
        return gram_matrices(self.family, self.dual)

    @cached_property
    def lambda_sets(self) -> dict:
        return lambda_sets(self.grams, self.p)

    def restricted_global_sets(self) -> dict:
        keep = set(self.shapes)
        return {i: [lam for lam in v if lam in keep] for i, v in self.parent.lambda_sets.items()}

    @cached_property
    def radical(self) -> Subspace:
        rad = self.parent.radical & self.blk.space
        pushed = image(matmul(self.alg.left_matrix(self.blk.idempotent), self.parent.radical.basis.T, self.p),
                       self.p) if self.parent.radical.dim else Subspace.zero(self.alg.dim, self.p)
        if pushed != rad:
            raise InternalError("z_B rad A differs from rad A ∩ B")
        return rad

    @cached_property
    def radical_powers(self) -> tuple[int, int, int]:
        r1 = self.radical
        r2 = products_span(self.alg, r1, r1)
        r3 = products_span(self.alg, r2, r1)
        return r1.dim, r2.dim, r3.dim

    @cached_property
    def center(self) -> Subspace:
        return self.parent.center & self.blk.space

    @cached_property
    def socle(self) -> Subspace:
        return socle(self.alg, self.blk.space, self.radical)

    @cached_property
    def reynolds(self) -> Subspace:
        return self.center & self.socle

    def e_lambda(self, lam, t: int) -> np.ndarray:
        fam, d = self.family, self.dual.D
        out = np.zeros(self.alg.dim, dtype=np.int64)
        for s in range(len(fam.tableaux[lam])):
            out = (out + self.alg.mul(fam.vector(lam, s, t), d[fam.index[(lam, t, s)]])) % self.p
        return out

    @cached_property
    def e_lambdas(self) -> dict:
        return {lam: [self.e_lambda(lam, t) for t in range(len(self.family.tableaux[lam]))]
                for lam in self.shapes}

    @cached_property
    def e_lambda_independent_of_T(self) -> bool:
        return all(all(np.array_equal(v[0], x) for x in v) for v in self.e_lambdas.values())

    @cached_property
    def e_lambda_central(self) -> bool:
        return all(self.center.contains(x) for v in self.e_lambdas.values() for x in v)

    @cached_property
    def l_ideal(self) -> Subspace:
        """Ideal of Z(B) generated by all ``e_λ`` (every choice of ``T``)."""
        vecs = []
        for v in self.e_lambdas.values():
            for x in v:
                lm = self.alg.left_matrix(x)
                vecs.append(matmul(self.center.basis, lm.T, self.p))
        if not vecs:
            return Subspace.zero(self.alg.dim, self.p)
        return Subspace.span(np.vstack(vecs), self.alg.dim, self.p)

    @cached_property
    def higman(self) -> Subspace:
        """Image of ``a ↦ Σ_i C_i a C_i^∨`` on the block (dual under τ)."""
        fam, d = self.family, self.dual.D
        dual_of = fam.transpose_index()
        vecs = []
        for a in self.blk.space.basis:
            acc = np.zeros(self.alg.dim, dtype=np.int64)
            for i in range(fam.size):
                acc = (acc + self.alg.mul(self.alg.mul(fam.C[i], a), d[dual_of[i]])) % self.p
            vecs.append(acc)
        return Subspace.span(np.array(vecs), self.alg.dim, self.p)

    def dims_by_shape(self) -> dict:
        return {lam: (count_standard_tableaux(lam), int(self.parent.modules[lam].dim_simple))
                for lam in self.shapes}


# --- verdict ----------------------------------------------------------------

@dataclass
class BlockVerdict:
    params: dict
    content: list
    weight: int
    chain: list
    s: int
    dim_B: int
    dim_radB: int
    radB_square_dim: int
    radB_cube_dim: int
    lambda_sets: dict
    lambda_sets_expected: dict
    gram: dict
    k_lambda: dict
    mirror: dict
    checks: dict = field(default_factory=dict)
    central: dict = field(default_factory=dict)
    findings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "content": self.content,
            "weight": self.weight,
            "chain": self.chain,
            "s": self.s,
            "dim_B": self.dim_B,
            "dim_radB": self.dim_radB,
            "radB_square_dim": self.radB_square_dim,
            "radB_cube_dim": self.radB_cube_dim,
            "lambda_sets": self.lambda_sets,
            "lambda_sets_expected": self.lambda_sets_expected,
            "gram": self.gram,
            "k_lambda": self.k_lambda,
            "mirror": self.mirror,
            "checks": self.checks,
            "central": self.central,
            "findings": self.findings,
            "ok": self.ok,
        }


# Which published statement each check group stands for.
CHECK_STATEMENTS = {
    "chain": "Lemma 3.8",
    "blocks_match_contents": "Remark 3.2",
    "lambda_sets": "Lemma 3.9",
    "lambda_sets_restriction": "Lemma 2.1",
    "dims": "Lemma 3.8",
    "k_zero": "Lemma 3.9",
    "wedderburn": "rad A = ∩ Ann L(λ)",
    "rad_cube_zero": "Corollary 3.14(1)",
    "rad_square": "Corollary 3.14(2) / Remark 3.15(1)",
    "mirror_block": "Lemma 3.10",
    "mirror_lambda_sets": "Lemma 3.10",
    "lemma_3_11": "Lemma 3.11",
    "lemma_3_12": "Lemma 3.12",
    "L_equals_R": "Corollary (L(B) = R(B))",
}


def _names(lams):
    return [str(m) for m in lams]


def algebraic_report(ba: BlockAnalysis, chain) -> WeightOneReport:
    """A weight-one style report whose dimensions come from Gram ranks."""
    sets = ba.lambda_sets
    n_l = [count_standard_tableaux(m) for m in chain]
    dim_L = [int(ba.parent.modules[m].dim_simple) for m in chain]
    dim_rad = [n - d for n, d in zip(n_l, dim_L)]
    return WeightOneReport(list(chain), len(chain), sets, [], n_l, dim_L, dim_rad)


def _expected_sets(chain) -> dict:
    s = len(chain)
    return {0: chain[:s - 1], 1: chain[:1], 2: chain[1:s - 1], 3: chain[s - 1:], 4: chain[:1]}


def _same_sets(a: dict, b: dict) -> bool:
    return all(set(a[i]) == set(b[i]) for i in range(5))


def radical_powers(ba: BlockAnalysis, s: int | None = None) -> tuple[int, int, int]:
    """Dimensions of ``rad B``, ``(rad B)^2``, ``(rad B)^3``.

    With ``s`` given (the chain length of a weight-one block) the cube must
    vanish and the square must vanish exactly when ``s == 2``.
    """
    dims = ba.radical_powers
    if s is not None:
        if dims[2] != 0:
            raise TheoremViolation("Corollary 3.14(1)", "(rad B)^3 != 0", witness=dims)
        if s > 2 and dims[1] == 0:
            raise TheoremViolation("Corollary 3.14(2)", "(rad B)^2 = 0 although s > 2", witness=dims)
        if s == 2 and dims[1] != 0:
            raise TheoremViolation("Remark 3.15(1)", "(rad B)^2 != 0 although s = 2", witness=dims)
    return dims


def socle_and_central_ideals(ba: BlockAnalysis) -> dict:
    L, R = ba.l_ideal, ba.reynolds
    return {
        "dim_Z": ba.center.dim,
        "dim_soc": ba.socle.dim,
        "dim_L": L.dim,
        "dim_R": R.dim,
        "L_equals_R": L == R,
        "e_lambda_T_independent": ba.e_lambda_independent_of_T,
        "e_lambda_central": ba.e_lambda_central,
    }


def verify_weight_one_block(params: AKParams, target_content, cap: int = DIM_CAP,
                            analysis: AlgebraAnalysis | None = None,
                            mirror_analysis: AlgebraAnalysis | None = None,
                            strict: bool = True) -> BlockVerdict:
    """Check every consequence of ``rad B = I_B`` on one weight-one block.

    With ``strict`` the first failed check raises :class:`TheoremViolation`;
    otherwise failures are only recorded in the verdict.
    """
    rp = ResidueParams(params.e, params.a)
    target = tuple(int(x) for x in target_content)
    if len(target) != params.e:
        raise PreconditionError(f"content needs {params.e} entries, got {len(target)}")
    if params.dim > cap:
        from ..errors import CapExceeded
        raise CapExceeded(f"dim H = {params.dim} exceeds the cap {cap}")
    comb = find_block(params.n, rp, target)
    if comb.weight != 1:
        raise PreconditionError(f"block {list(target)} has weight {comb.weight}, not 1")
    report = classify_weight_one(comb, rp)
    chain = report.chain

    an = analysis or AlgebraAnalysis(params, cap)
    ba = an.block(target)
    checks: dict[str, bool] = {}
    findings: list[str] = []

    checks["chain"] = report.s <= params.e
    checks["blocks_match_contents"] = (
        len(an.blocks) == len({content(m, rp) for blk in an.blocks for m in blk.shapes})
        and set(ba.shapes) == set(comb.members))
    expected = _expected_sets(chain)
    checks["lambda_sets"] = _same_sets(ba.lambda_sets, expected)
    checks["lambda_sets_restriction"] = _same_sets(ba.lambda_sets, ba.restricted_global_sets())
    dims = ba.dims_by_shape()
    alg_dim_L = [dims[m][1] for m in chain]
    checks["dims"] = (alg_dim_L[:-1] == report.dim_L and alg_dim_L[-1] == 0
                      and [dims[m][0] - dims[m][1] for m in chain] == report.dim_rad_cell)
    ks = {str(m): ba.grams[m].k for m in reversed(chain)}
    checks["k_zero"] = all(v == 0 for v in ks.values())
    checks["wedderburn"] = an.wedderburn_defect() == 0

    pw = ba.radical_powers
    checks["rad_cube_zero"] = pw[2] == 0
    checks["rad_square"] = (pw[1] != 0) == (report.s > 2)
    if report.s == 2 and pw[1] != 0:
        findings.append("Remark 3.15(1): (rad B)^2 != 0 for s = 2")

    # mirror algebra with q^{-1} and reversed Q
    mparams = params.mirror()
    man = mirror_analysis or AlgebraAnalysis(mparams, cap)
    mrp = ResidueParams(mparams.e, mparams.a)
    mtarget = content(chain[0].conjugate(), mrp)
    mba = man.block(mtarget)
    mchain = [m.conjugate() for m in reversed(chain)]
    mweight = weight(mchain[0], mrp)
    checks["mirror_block"] = (set(mba.shapes) == set(mchain) and mweight == 1
                              and classify_weight_one(find_block(params.n, mrp, mtarget), mrp).chain == mchain)
    checks["mirror_lambda_sets"] = _same_sets(mba.lambda_sets, _expected_sets(mchain))
    rep_a = algebraic_report(ba, chain)
    rep_m = algebraic_report(mba, mchain)
    l311, l312 = paired_sums([rep_a, rep_m])
    checks["lemma_3_11"] = l311[0] == l311[1]
    checks["lemma_3_12"] = l312[0] == l312[1]

    central = socle_and_central_ideals(ba)
    checks["L_equals_R"] = central["L_equals_R"]
    if not central["e_lambda_T_independent"]:
        findings.append("e_λ depends on T; L(B) taken as the span over all T")
    if not ba.higman.dim or not (ba.l_ideal & ba.reynolds).contains_space(ba.higman):
        findings.append("Higman ideal is zero or not contained in L(B) ∩ R(B)")

    verdict = BlockVerdict(
        params=params.to_json(),
        content=list(target),
        weight=comb.weight,
        chain=_names(reversed(chain)),
        s=report.s,
        dim_B=ba.dim,
        dim_radB=pw[0],
        radB_square_dim=pw[1],
        radB_cube_dim=pw[2],
        lambda_sets={f"Lambda{i}": _names(v) for i, v in ba.lambda_sets.items()},
        lambda_sets_expected={f"Lambda{i}": _names(v) for i, v in expected.items()},
        gram={str(m): {"n": dims[m][0], "rank": dims[m][1],
                       "G": ba.grams[m].G.tolist()} for m in reversed(chain)},
        k_lambda=ks,
        mirror={
            "params": mparams.to_json(),
            "content": list(mtarget),
            "chain": _names(reversed(mchain)),
            "lambda_sets": {f"Lambda{i}": _names(v) for i, v in mba.lambda_sets.items()},
            "lemma_3_11": list(l311),
            "lemma_3_12": list(l312),
            "pair_conditions_hold": l311[0] == l311[1] and l312[0] == l312[1],
        },
        checks=checks,
        central=central,
        findings=findings,
    )
    if strict:
        for name, ok in checks.items():
            if not ok:
                raise TheoremViolation(CHECK_STATEMENTS[name], f"check {name!r} failed", witness=verdict.to_json())
    return verdict

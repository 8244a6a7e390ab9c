"""Command-line entry point: ``akblocks weight|blocks|verify|search|selftest``.

Exit codes: 0 success, 2 parse error, 3 precondition, 4 resource cap,
5 theorem violation.  Parameters may come from a ``key=value`` config file
(``--config``); flags given on the command line take precedence.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .blocks import ResidueParams, classify_weight_one, conjugate_params, partition_into_blocks, weight
from .errors import AKError, ParseError, PreconditionError, TheoremViolation
from .ffield import quantum_characteristic
from .partitions import parse_multipartition

log = logging.getLogger("akblocks")

CONFIG_KEYS = {"p", "q", "e", "r", "a", "n", "content", "out"}


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in str(text).split(",") if x.strip() != ""]
    except ValueError as exc:
        raise ParseError(f"expected a comma-separated integer list, got {text!r}") from exc


def _int(text, name: str) -> int:
    try:
        return int(text)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"--{name} expects an integer, got {text!r}") from exc


def read_config(path: str) -> dict[str, str]:
    out = {}
    for num, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().lstrip("-").replace("-", "_")
        if not sep or key not in CONFIG_KEYS:
            raise ParseError(f"{path}:{num}: expected key=value with key in {sorted(CONFIG_KEYS)}")
        out[key] = value.strip()
    return out


def _merge_config(args) -> None:
    if not getattr(args, "config", None):
        return
    try:
        cfg = read_config(args.config)
    except OSError as exc:
        raise ParseError(f"cannot read config: {exc}") from exc
    for key, value in cfg.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)


def _residue_params(args) -> ResidueParams:
    if args.e is None:
        if args.p is not None and args.q is not None:
            e = quantum_characteristic(_int(args.p, "p"), _int(args.q, "q"))
        else:
            raise PreconditionError("--e is required (or give --p and --q)")
    else:
        e = _int(args.e, "e")
    if args.a is None:
        raise PreconditionError("--a is required")
    a = _int_list(args.a)
    if args.r is not None and _int(args.r, "r") != len(a):
        raise PreconditionError(f"--r {args.r} does not match {len(a)} entries of --a")
    if e < 2:
        raise PreconditionError("e must be at least 2")
    if not a:
        raise PreconditionError("--a must have at least one entry")
    return ResidueParams(e, tuple(a))


def _emit(doc, args) -> None:
    text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_weight(args) -> int:
    rp = _residue_params(args)
    if args.multipartition is None:
        raise ParseError("a multipartition argument is required")
    lam = parse_multipartition(args.multipartition)
    if lam.r != rp.r:
        raise PreconditionError(f"multipartition has {lam.r} components but r = {rp.r}")
    if args.conjugate:
        lam = lam.conjugate()
    print(weight(lam, rp))
    return 0


def _block_json(blk) -> dict:
    members = blk.descending() if blk.is_chain else blk.members
    return {
        "content": list(blk.content),
        "weight": blk.weight,
        "members": [str(m) for m in members],
        "is_chain": blk.is_chain,
    }


def cmd_blocks(args) -> int:
    rp = _residue_params(args)
    if args.n is None:
        raise PreconditionError("--n is required")
    n = _int(args.n, "n")
    if n < 0:
        raise PreconditionError("n must be non-negative")
    params = conjugate_params(rp) if args.conjugate else rp
    doc = {
        "params": {"e": params.e, "r": params.r, "a": list(params.a), "n": n},
        "blocks": [_block_json(b) for b in partition_into_blocks(n, params)],
    }
    _emit(doc, args)
    return 0


def _ak_params(args):
    from .akalgebra import AKParams

    if args.p is None or args.a is None or args.n is None:
        raise PreconditionError("verify needs --p, --a and --n")
    p = _int(args.p, "p")
    q = None if args.q is None else _int(args.q, "q")
    e = None if args.e is None else _int(args.e, "e")
    a = _int_list(args.a)
    if args.r is not None and _int(args.r, "r") != len(a):
        raise PreconditionError(f"--r {args.r} does not match {len(a)} entries of --a")
    return AKParams.make(p, q, a, _int(args.n, "n"), e=e)


def cmd_verify(args) -> int:
    from .akalgebra import verify_weight_one_block
    from .akalgebra.analysis import CHECK_STATEMENTS

    params = _ak_params(args)
    if args.content is None:
        raise PreconditionError("--content is required")
    verdict = verify_weight_one_block(params, _int_list(args.content), strict=False)
    _emit(verdict.to_json(), args)
    failed = [name for name, ok in verdict.checks.items() if not ok]
    if failed:
        statements = sorted({CHECK_STATEMENTS[name] for name in failed})
        raise TheoremViolation("; ".join(statements), "failed checks " + ", ".join(failed))
    return 0


def _range(text: str) -> list[int]:
    """``"3"``, ``"1-4"`` or ``"2,3,5"``; an empty or reversed range is empty."""
    text = str(text).strip()
    if not text:
        return []
    if "-" in text and "," not in text:
        lo, _, hi = text.partition("-")
        return list(range(_int(lo, "range"), _int(hi, "range") + 1))
    return _int_list(text)


def cmd_search(args) -> int:
    from itertools import product
    from math import factorial

    found = []
    for r in _range(args.r_range):
        for e in _range(args.e_range):
            if e < 2 or r < 1:
                continue
            seen = set()
            for a in product(range(e), repeat=r):
                if args.a is not None and list(a) != _int_list(args.a):
                    continue
                for n in _range(args.n_range):
                    if n < 1:
                        continue
                    rp = ResidueParams(e, a)
                    for blk in partition_into_blocks(n, rp):
                        if blk.weight != 1:
                            continue
                        if weight(blk.members[0], rp) != 1:
                            raise AKError("search postcondition failed: weight is not 1")
                        key = (e, a, n, blk.content)
                        if key in seen:
                            continue
                        seen.add(key)
                        found.append({
                            "e": e, "r": r, "a": list(a), "n": n,
                            "content": list(blk.content),
                            "s": classify_weight_one(blk, rp).s,
                            "members": [str(m) for m in blk.descending()],
                            "algebra_dim": r ** n * factorial(n),
                        })
    _emit(found, args)
    return 0


def cmd_selftest(args) -> int:
    from . import selftest

    rows = selftest.run(quick=args.quick, fault=args.inject_fault)
    print(selftest.format_table(rows))
    return 0 if all(r.ok for r in rows) else 1


def _add_params(sp, *, p=True) -> None:
    if p:
        sp.add_argument("--p", help="prime characteristic of the field")
        sp.add_argument("--q", help="parameter q (smallest element of order e if omitted)")
    sp.add_argument("--e", help="quantum characteristic")
    sp.add_argument("--r", help="number of components (checked against --a)")
    sp.add_argument("--a", help="exponents a_1,...,a_r of Q_k = q^a_k")
    sp.add_argument("--config", help="key=value file; command-line flags override it")
    sp.add_argument("--out", help="write JSON here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="akblocks", description="Weights, blocks and radicals of Ariki-Koike algebras.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("weight", help="print the weight of a multipartition")
    _add_params(sp)
    sp.add_argument("--conjugate", action="store_true", help="use the conjugate multipartition")
    sp.add_argument("multipartition", nargs="?", help="e.g. 3,3,2|2,1|- (may start with '-')")
    sp.set_defaults(func=cmd_weight)

    sp = sub.add_parser("blocks", help="list the blocks of H_n as JSON")
    _add_params(sp)
    sp.add_argument("--n")
    sp.add_argument("--conjugate", action="store_true", help="use the reversed parameters a'_k = -a_{r+1-k}")
    sp.set_defaults(func=cmd_blocks)

    sp = sub.add_parser("verify", help="certify the radical structure of a weight-one block")
    _add_params(sp)
    sp.add_argument("--n")
    sp.add_argument("--content", help="residue content c_0,...,c_{e-1} of the block")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="find weight-one blocks over parameter ranges")
    sp.add_argument("--n", dest="n_range", default="1-3", help="range such as 1-3")
    sp.add_argument("--e", dest="e_range", default="2-3")
    sp.add_argument("--r", dest="r_range", default="2")
    sp.add_argument("--a", help="restrict to this exponent list")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("selftest", help="run the acceptance checks")
    sp.add_argument("--quick", action="store_true", help="combinatorial checks only")
    sp.add_argument("--inject-fault", choices=["gram"], help="corrupt one Gram entry (negative control)")
    sp.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # a multipartition such as "-|1" looks like an option to argparse
        if args.command == "weight" and args.multipartition is None and len(extra) == 1 and "|" in extra[0]:
            args.multipartition, extra = extra[0], []
        if extra or (args.command == "weight" and args.multipartition is None):
            parser.parse_args(argv)
    except SystemExit as exc:
        return ParseError.exit_code if exc.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        _merge_config(args)
        return args.func(args)
    except AKError as exc:
        print(f"akblocks: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"akblocks: {exc}", file=sys.stderr)
        return PreconditionError.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 on success and passing checks, 1 on a failing check
(counterexamples are printed), 2 on usage or parse errors.  All output is
deterministic: terms and trees are always listed in ascending code order.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dse, hopf, opbialg, ptrees, trees, wtypes
from .errors import DsetreeError

MAX_ORDER = 10
MAX_NODE_BOUND = 8
MAX_LEAF_BOUND = 10


def _load_signature(name: str) -> ptrees.Signature:
    if name == "identity":
        return ptrees.identity_signature()
    if name == "binary":
        return ptrees.binary_signature()
    if name.startswith("list"):
        k = int(name.partition(":")[2] or 4)
        return ptrees.list_signature(k)
    if name.startswith("stable"):
        k = int(name.partition(":")[2] or 4)
        return ptrees.stable_signature(k)
    with open(name, encoding="utf-8") as fh:
        data = json.load(fh)
    return ptrees.Signature(
        tuple(ptrees.Operation(op["name"], int(op["arity"])) for op in data["ops"])
    )


def _load_spec(name: str, order: int) -> dse.DSESpec:
    if name in dse.BUILTIN_SPECS:
        return dse.BUILTIN_SPECS[name](order)
    loaded = dse.load_spec(name)
    return dse.DSESpec(loaded.terms, order, name=loaded.name)


def _cmd_solve(args: argparse.Namespace) -> int:
    if not 0 <= args.order <= MAX_ORDER:
        raise SystemExit(_usage_error(f"--order must lie in 0..{MAX_ORDER}"))
    spec = _load_spec(args.spec, args.order)
    series = dse.solve(spec)
    if args.format == "structured":
        print(json.dumps(dse.series_to_dict(spec, series), indent=2, sort_keys=True))
    else:
        print(series.text())
    return 0


def _signature_for_enumeration(args: argparse.Namespace) -> ptrees.Signature:
    # The untruncated stable signature needs arity up to the leaf target.
    if args.signature == "stable" and args.by == "leaves":
        return ptrees.stable_signature(max(2, args.n))
    return _load_signature(args.signature)


def _cmd_enumerate(args: argparse.Namespace) -> int:
    _check_enum_bounds(args)
    if args.signature == "comb":
        if args.by != "nodes":
            raise SystemExit(_usage_error("combinatorial trees are enumerated by nodes"))
        codes = sorted(t.code for t in trees.enumerate_comb_trees(args.n))
    else:
        sig = _signature_for_enumeration(args)
        if args.by == "nodes":
            found = ptrees.enumerate_by_nodes(sig, args.n)
        else:
            found = ptrees.enumerate_by_leaves(sig, args.n, node_bound=args.node_bound)
        codes = [t.code for t in found]
    if args.format == "structured":
        print(json.dumps({"count": len(codes), "trees": codes}, indent=2))
    else:
        for code in codes:
            print(code)
        print(f"total: {len(codes)}")
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    _check_enum_bounds(args)
    sig = _signature_for_enumeration(args)
    census = ptrees.core_census(sig, args.n, by=args.by)
    items = sorted(census.items(), key=lambda kv: kv[0].code)
    if args.format == "structured":
        print(json.dumps({f.code: c for f, c in items}, indent=2, sort_keys=True))
    else:
        for forest, count in items:
            print(f"{forest.code} {count}")
    return 0


def _cmd_green(args: argparse.Namespace) -> int:
    if not 0 <= args.bound <= MAX_NODE_BOUND:
        raise SystemExit(_usage_error(f"--bound must lie in 0..{MAX_NODE_BOUND}"))
    sig = _load_signature(args.signature)
    series = opbialg.green(sig, args.bound)
    payload = {}
    for n in range(series.max_leaves() + 1):
        component = series.leaf_component(n)
        if component.terms:
            payload[f"g_{n}"] = sorted(f.code for f in component.terms)
    if args.format == "structured":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, codes in payload.items():
            print(f"{key} = " + " + ".join(codes))
    return 0


_HOPF_LAWS = {
    "coassoc": hopf.check_coassociativity,
    "counit": hopf.check_counit,
    "antipode": hopf.check_antipode,
    "cocycle": hopf.check_cocycle,
}


def _cmd_check(args: argparse.Namespace) -> int:
    law = args.law
    if law in _HOPF_LAWS:
        if not 0 <= args.degree <= MAX_NODE_BOUND:
            raise SystemExit(_usage_error(f"--degree must lie in 0..{MAX_NODE_BOUND}"))
        report = _HOPF_LAWS[law](args.degree)
        print(report.summary() + f" [degree <= {args.degree}]")
        return 0 if report.passed else 1
    if not 0 <= args.bound <= MAX_NODE_BOUND:
        raise SystemExit(_usage_error(f"--bound must lie in 0..{MAX_NODE_BOUND}"))
    sig = _load_signature(args.signature)
    if law == "op-coassoc":
        report = opbialg.check_op_coassociativity(sig, args.bound)
    elif law == "core-hom":
        report = opbialg.check_core_homomorphism(sig, args.bound)
    elif law == "faa-di-bruno":
        report = opbialg.check_faa_di_bruno(sig, args.bound)
    elif law == "lambek":
        report = wtypes.lambek_check(sig, args.bound)
    elif law == "computation":
        alg = _node_count_algebra(sig)
        report = wtypes.check_computation_rules(sig, alg, args.bound)
    elif law == "op-cocycle":
        witness = opbialg.cocycle_counterexample(sig, node_bound=args.bound)
        if witness is None:
            print(f"PASS (node-builder cocycle, bound {args.bound}): no counterexample found")
            return 0
        print(f"FAIL (node-builder cocycle): {witness.describe()}")
        return 1
    else:  # pragma: no cover - argparse restricts choices
        raise SystemExit(_usage_error(f"unknown law {law!r}"))
    print(report.summary() + f" [bound <= {args.bound}]")
    return 0 if report.passed else 1


def _node_count_algebra(sig: ptrees.Signature) -> wtypes.FoldAlgebra:
    return wtypes.FoldAlgebra(
        nil_value=0,
        interp={op.name: (lambda *vs: 1 + sum(vs)) for op in sig.ops},
    )


def _cmd_fold_demo(args: argparse.Namespace) -> int:
    if not 0 <= args.n <= MAX_NODE_BOUND:
        raise SystemExit(_usage_error(f"--n must lie in 0..{MAX_NODE_BOUND}"))
    if args.demo == "nat":
        sig = ptrees.identity_signature()
        alg = wtypes.FoldAlgebra(nil_value=0, interp={"s": lambda v: v + 1})
        ladder = ptrees.NIL
        print(f"{ladder.code} -> {wtypes.fold(sig, alg, ladder)}")
        for _ in range(args.n):
            ladder = ptrees.PTree(sig.op("s"), (ladder,))
            print(f"{ladder.code} -> {wtypes.fold(sig, alg, ladder)}")
        return 0
    sig = _load_signature(args.signature)
    if args.demo == "node-count":
        alg = _node_count_algebra(sig)
    else:
        alg = wtypes.FoldAlgebra(
            nil_value=1,
            interp={op.name: (lambda *vs: sum(vs)) for op in sig.ops},
        )
    for t in ptrees.enumerate_by_nodes(sig, args.n):
        print(f"{t.code} -> {wtypes.fold(sig, alg, t)}")
    return 0


def _check_enum_bounds(args: argparse.Namespace) -> None:
    if args.by == "leaves":
        if not 0 <= args.n <= MAX_LEAF_BOUND:
            raise SystemExit(_usage_error(f"--n must lie in 0..{MAX_LEAF_BOUND} for leaves"))
    else:
        if not 0 <= args.n <= MAX_NODE_BOUND:
            raise SystemExit(_usage_error(f"--n must lie in 0..{MAX_NODE_BOUND} for nodes"))


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsetree",
        description="Tree-valued fixpoint equations, operadic trees, and their bialgebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a fixpoint equation order by order")
    p.add_argument("--spec", required=True, help="builtin name (linear, quadratic, geometric) or JSON path")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("enumerate", help="enumerate trees of a given size")
    p.add_argument("--signature", required=True,
                   help="identity, binary, list[:K], stable[:K], comb, or JSON path")
    p.add_argument("--by", choices=["nodes", "leaves"], default="nodes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--node-bound", type=int, default=None,
                   help="required for leaf enumeration with nullary/unary operations")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("census", help="count trees of a given size grouped by core")
    p.add_argument("--signature", required=True)
    p.add_argument("--by", choices=["nodes", "leaves"], default="nodes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("green", help="Green function graded by leaf count")
    p.add_argument("--signature", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=_cmd_green)

    p = sub.add_parser("check", help="run an algebraic law check")
    p.add_argument("--law", required=True, choices=[
        "coassoc", "counit", "antipode", "cocycle",
        "op-coassoc", "core-hom", "faa-di-bruno", "op-cocycle",
        "lambek", "computation",
    ])
    p.add_argument("--degree", type=int, default=4, help="degree bound for forest laws")
    p.add_argument("--bound", type=int, default=3, help="node/stage bound for tree laws")
    p.add_argument("--signature", default="binary")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("fold-demo", help="evaluate sample fold algebras")
    p.add_argument("--demo", choices=["nat", "node-count", "leaf-count"], required=True)
    p.add_argument("--signature", default="binary")
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(func=_cmd_fold_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        return _usage_error(f"cannot open {exc.filename}")
    except (DsetreeError, ValueError, KeyError, json.JSONDecodeError) as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 = in core / core non-empty (result written), 1 = blocked /
core empty (certificate written for verify), 2 = usage or format error,
3 = method inapplicable or a resource cap was exceeded.  Result JSON goes
to stdout (and ``--out`` when given); diagnostics go to stderr as a single
``error: <reason>`` line.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import constant_players, couples, exhaustive, generators, serialize
from .errors import InputError, ResourceLimitError
from .games import (
    BlockCertificate,
    Instance,
    core_membership_by_enumeration,
    utility,
)
from .graphs import Matching

AUTO_CONST_PLAYERS = 6


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _emit(text: str, out: Optional[str]) -> None:
    sys.stdout.write(text)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _choose_method(inst: Instance, requested: str) -> str:
    if requested != "auto":
        if requested == "couples" and any(len(p) > 2 for p in inst.players):
            raise _MethodError("couples method needs all classes of size <= 2")
        return requested
    if all(len(p) <= 2 for p in inst.players):
        return "couples"
    if inst.num_players <= AUTO_CONST_PLAYERS:
        return "const"
    return "oracle"


class _MethodError(Exception):
    pass


def _verify(args) -> int:
    inst = serialize.instance_from_json(_read(args.instance))
    m = serialize.matching_from_json(_read(args.matching))
    m.validate_for(inst.graph)
    method = _choose_method(inst, args.method)
    cert: Optional[BlockCertificate]
    if method == "couples":
        cg = couples.normalize(inst)
        res = (
            couples.weak_membership(cg, m)
            if args.core == "weak"
            else couples.strong_membership(cg, m)
        )
        in_core, cert = res.in_core, res.certificate
    elif method == "const":
        res = core_membership_by_enumeration(inst, m, args.core)
        in_core, cert = res.in_core, res.certificate
    else:
        result = exhaustive.oracle_core(inst, args.core, cap=args.cap)
        u = utility(inst, m)
        if u in result.in_core:
            in_core, cert = True, None
        else:
            in_core = False
            _, coalition, witness = result.blocked[u]
            cert = BlockCertificate(
                coalition,
                witness,
                "strong" if args.core == "weak" else "weak",
            )
            cert.validate(inst, u)
    _emit(serialize.certificate_to_json(args.core, cert), args.out)
    return 0 if in_core else 1


def _solve(args) -> int:
    inst = serialize.instance_from_json(_read(args.instance))
    method = _choose_method(inst, args.method)
    found: Optional[Matching]
    if method == "couples":
        cg = couples.normalize(inst)
        found = (
            couples.weak_construct(cg)
            if args.core == "weak"
            else couples.strong_core_solve(cg)
        )
    elif method == "const":
        found = constant_players.core_empty(inst, args.core, budget=args.budget)
    else:
        result = exhaustive.oracle_core(inst, args.core, cap=args.cap)
        if result.in_core:
            best = max(result.in_core)
            found = result.in_core[best]
        else:
            found = None
    if found is None:
        sys.stderr.write(f"error: {args.core} core is empty\n")
        return 1
    _emit(serialize.matching_to_json(found), args.out)
    return 0


def _gen(args) -> int:
    if args.kind == "example1":
        gen = generators.gen_example1()
    elif args.kind == "random":
        inst = generators.gen_random(args.n, args.class_cap, args.edge_prob, args.seed)
        gen = generators.GeneratedInstance(inst, {})
    elif args.kind in ("x3c-weak", "x3c-strong"):
        if not args.input:
            raise InputError(f"gen {args.kind} requires --input with an exact-cover file")
        import json as _json

        obj = _json.loads(_read(args.input))
        x3c = generators.X3CInstance(
            elements=obj["elements"],
            sets=tuple(tuple(s) for s in obj["sets"]),
        )
        gen = (
            generators.gen_x3c_weak(x3c)
            if args.kind == "x3c-weak"
            else generators.gen_x3c_strong(x3c)
        )
    elif args.kind == "sat-weak":
        if not args.input:
            raise InputError("gen sat-weak requires --input with a clause file")
        import json as _json

        clauses = _json.loads(_read(args.input))
        gen = generators.gen_3sat_weak_emptiness(clauses)
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown generator {args.kind}")
    _emit(serialize.instance_to_json(gen.instance), args.out)
    if args.matching_out:
        if gen.matching is None:
            raise InputError(f"generator {args.kind} does not produce a matching")
        with open(args.matching_out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(serialize.matching_to_json(gen.matching))
    if args.map_out:
        with open(args.map_out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(serialize.name_map_to_json(gen.name_map))
    return 0


def _oracle(args) -> int:
    inst = serialize.instance_from_json(_read(args.instance))
    if args.what == "core":
        result = exhaustive.oracle_core(inst, args.core, cap=args.cap)
        payload = {
            "kind": args.core,
            "in_core_vectors": sorted(list(v) for v in result.in_core),
            "empty": result.empty,
        }
    else:
        payload = {"matchings": exhaustive.count_matchings(inst.graph, cap=args.cap)}
    import json as _json

    _emit(_json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _add_common(p, with_matching: bool) -> None:
    p.add_argument("--core", choices=("weak", "strong"), required=True)
    p.add_argument("--instance", required=True)
    if with_matching:
        p.add_argument("--matching", required=True)
    p.add_argument(
        "--method", choices=("auto", "couples", "const", "oracle"), default="auto"
    )
    p.add_argument("--out", default=None)
    p.add_argument("--budget", type=int, default=constant_players.DEFAULT_BUDGET)
    p.add_argument("--cap", type=int, default=exhaustive.DEFAULT_CAP)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ntumatch",
        description="Exact core solvers for partitioned matching games "
        "with non-transferable utilities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="test core membership of a matching")
    _add_common(p_verify, with_matching=True)
    p_verify.set_defaults(func=_verify)

    p_solve = sub.add_parser("solve", help="find a core matching if one exists")
    _add_common(p_solve, with_matching=False)
    p_solve.set_defaults(func=_solve)

    p_empty = sub.add_parser(
        "core-empty", help="decide core emptiness (alias of solve)"
    )
    _add_common(p_empty, with_matching=False)
    p_empty.set_defaults(func=_solve)

    p_gen = sub.add_parser("gen", help="generate a benchmark instance")
    p_gen.add_argument(
        "kind", choices=("example1", "x3c-weak", "x3c-strong", "sat-weak", "random")
    )
    p_gen.add_argument("--input", default=None, help="JSON input for reductions")
    p_gen.add_argument("--n", type=int, default=10)
    p_gen.add_argument("--class-cap", type=int, default=2)
    p_gen.add_argument("--edge-prob", type=float, default=0.3)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default=None)
    p_gen.add_argument("--matching-out", default=None)
    p_gen.add_argument("--map-out", default=None)
    p_gen.set_defaults(func=_gen)

    p_oracle = sub.add_parser("oracle", help="exhaustive ground-truth queries")
    p_oracle.add_argument("what", choices=("core", "matchings"))
    p_oracle.add_argument("--instance", required=True)
    p_oracle.add_argument("--core", choices=("weak", "strong"), default="weak")
    p_oracle.add_argument("--cap", type=int, default=exhaustive.DEFAULT_CAP)
    p_oracle.add_argument("--out", default=None)
    p_oracle.set_defaults(func=_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: input: {exc}\n")
        return 2
    except _MethodError as exc:
        sys.stderr.write(f"error: method: {exc}\n")
        return 3
    except ResourceLimitError as exc:
        sys.stderr.write(f"error: resource: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())

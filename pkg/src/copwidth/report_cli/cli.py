"""Command-line front end.

Subcommands: gen (emit a family graph), solve (exact game value or fixed-k
winner), certify (replay a family certificate), cw verify (expression vs
generator), report (the bound table for one family), suite (the seeded
cross-check suites).  Every verifying subcommand exits 0 iff everything it
checked verified.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from ..cliquewidth import verify_family_expr
from ..families import (
    gen_complete_bipartite,
    gen_cycle,
    gen_path,
    gen_random_digraph,
    gen_switch_all,
    gen_zadeh,
)
from ..graphs import GraphError, parse_graph, serialize_graph, to_dot
from ..pursuit import (
    DEFAULT_STATE_BUDGET,
    BudgetExceededError,
    GameConfig,
    Variant,
    dpw_sweep_certificate_switch_all,
    ent_strategy_switch_all,
    measure_detailed,
    solve_entanglement,
    solve_invisible,
    solve_visible,
    verify_ent_strategy,
    verify_sweep,
)
from .report import run_property_suites, run_report


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_gen(args) -> int:
    fam = args.family
    if fam == "switch-all":
        g = gen_switch_all(args.n)
    elif fam == "zadeh":
        g = gen_zadeh(args.n)
    elif fam == "bipartite":
        g = gen_complete_bipartite(args.n, args.k if args.k is not None else args.n)
    elif fam == "cycle":
        g = gen_cycle(args.n)
    elif fam == "path":
        g = gen_path(args.n)
    else:
        g = gen_random_digraph(args.n, args.p, args.seed)
    if args.format == "json":
        _emit(serialize_graph(g).decode("ascii"), args.out)
    else:
        _emit(to_dot(g), args.out)
    return 0


def _cmd_solve(args) -> int:
    with open(args.graph, "rb") as fh:
        g = parse_graph(fh.read())
    variant = Variant(args.measure)
    mono = not args.non_monotone
    t0 = time.perf_counter()
    if args.k is None:
        value, states = measure_detailed(
            g, variant, budget=args.budget, require_monotone=mono
        )
        result = {
            "measure": variant.value,
            "value": value,
            "states_explored": states,
            "seconds": round(time.perf_counter() - t0, 3),
        }
    else:
        if variant is Variant.ENT:
            out = solve_entanglement(g, args.k, budget=args.budget)
        elif variant in (Variant.KW, Variant.DPW):
            out = solve_invisible(
                g, GameConfig(variant, args.k, mono), budget=args.budget
            )
        else:
            out = solve_visible(
                g, GameConfig(variant, args.k, mono), budget=args.budget
            )
        result = {
            "measure": variant.value,
            "k": args.k,
            "winner": out.winner.value,
            "states_explored": out.states,
            "seconds": round(time.perf_counter() - t0, 3),
        }
    print(json.dumps(result))
    return 0


def _cmd_certify(args) -> int:
    g = gen_switch_all(args.n)
    if args.measure in ("dpw", "kw"):
        cert = dpw_sweep_certificate_switch_all(args.n)
        rep = verify_sweep(g, cert, Variant(args.measure))
        result = {
            "family": "switch-all",
            "n": args.n,
            "measure": args.measure,
            "cops": cert.cops,
            "steps": len(cert.placements),
            "cleared": rep.cleared,
            "monotone": rep.monotone,
            "step_of_first_violation": rep.step_of_first_violation,
            "ok": rep.ok,
        }
        print(json.dumps(result, indent=2))
        return 0 if rep.ok else 1
    rep = verify_ent_strategy(g, ent_strategy_switch_all(args.n), 3)
    result = {
        "family": "switch-all",
        "n": args.n,
        "measure": "ent",
        "cops": 3,
        "ok": rep.ok,
        "reason": rep.reason,
        "failure_position": rep.failure_position,
    }
    print(json.dumps(result, indent=2))
    return 0 if rep.ok else 1


def _cmd_cw_verify(args) -> int:
    rep = verify_family_expr(args.family, args.n)
    result = {
        "family": args.family,
        "n": args.n,
        "equal": rep.equal,
        "colour_count": rep.colour_count,
        "missing_edges": [list(e) for e in rep.missing_edges],
        "extra_edges": [list(e) for e in rep.extra_edges],
        "name_issues": list(rep.name_issues),
    }
    print(json.dumps(result, indent=2))
    return 0 if rep.equal else 1


def _cmd_report(args) -> int:
    rep = run_report(
        args.family, n_exact=args.n_exact, n_cert=args.n_cert, budget=args.budget
    )
    text = rep.to_json()
    if args.json is not None:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if rep.all_verified else 1


def _cmd_suite(args) -> int:
    summary = run_property_suites(args.seed)
    print(summary.to_json())
    return 0 if summary.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="copwidth",
        description="Pursuit-game width measures, counterexample families, "
        "certificates, and colouring expressions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a family graph")
    p.add_argument(
        "--family",
        required=True,
        choices=["switch-all", "zadeh", "bipartite", "cycle", "path", "random"],
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="second side for bipartite (default: n)")
    p.add_argument("--p", type=float, default=0.3, help="edge probability for random")
    p.add_argument("--seed", type=int, default=0, help="seed for random")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="solve a game exactly")
    p.add_argument(
        "--measure", required=True, choices=["tw", "dagw", "kw", "dpw", "ent"]
    )
    p.add_argument("--graph", required=True, help="graph file in the JSON format")
    p.add_argument("--k", type=int, help="decide at a fixed cop count instead")
    p.add_argument(
        "--non-monotone",
        action="store_true",
        help="drop the monotonicity requirement",
    )
    p.add_argument("--budget", type=int, default=DEFAULT_STATE_BUDGET)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("certify", help="replay a family certificate")
    p.add_argument("--measure", required=True, choices=["dpw", "kw", "ent"])
    p.add_argument("--family", required=True, choices=["switch-all"])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("cw", help="colouring-expression commands")
    cw_sub = p.add_subparsers(dest="cw_command", required=True)
    pv = cw_sub.add_parser("verify", help="compare expression against generator")
    pv.add_argument("--family", required=True, choices=["switch-all", "zadeh"])
    pv.add_argument("--n", type=int, required=True)
    pv.set_defaults(func=_cmd_cw_verify)

    p = sub.add_parser("report", help="verify the bound table for a family")
    p.add_argument("--family", required=True, choices=["switch-all", "zadeh"])
    p.add_argument("--n-exact", type=int, default=1)
    p.add_argument("--n-cert", type=int, default=8)
    p.add_argument("--budget", type=int, default=DEFAULT_STATE_BUDGET)
    p.add_argument("--json", help="also write the report JSON to this file")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("suite", help="run the seeded cross-check suites")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: state budget exceeded ({exc.budget} states)", file=sys.stderr)
        return 1
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 2 validation or file-format failure, 3 requested
method inapplicable to the input, 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from .errors import (
    BoxTooLarge,
    CompletionOverflow,
    NotBinarySystem,
    NotQuasiStable,
    NotSquarefree,
    NotSquarefreeStable,
    NotStable,
    NotStronglyStable,
    RelialgError,
    SystemFileError,
    TooManyComponents,
    TooManyGenerators,
)
from .families import (
    bridge_system,
    consecutive_k_out_of_n,
    k_out_of_n,
    random_probabilities,
    random_system,
    threshold_with_joker,
)
from .importance import (
    multiplicity_importance,
    permutation_compare,
    structural_importance,
)
from .involutive import janet_completion, pommaret_completion
from .reliability import (
    bonferroni_bounds,
    reliability_iie,
    reliability_sdp,
    summary_for_source,
)
from .resolution import ah_symbols, classical_ie_summary, ek_symbols
from .stability import (
    find_stable_orderings,
    is_stable_ideal,
    strongly_stable_closure,
    system_stability,
)
from .systems import (
    probability_model,
    reliability_ideal,
    reliability_oracle,
    validate,
)
from .sysfile import load_system, save_system

EX_OK = 0
EX_INVALID = 2
EX_INAPPLICABLE = 3
EX_USAGE = 64

_INAPPLICABLE = (
    NotStable,
    NotSquarefree,
    NotSquarefreeStable,
    NotStronglyStable,
    NotQuasiStable,
    NotBinarySystem,
    TooManyGenerators,
    TooManyComponents,
    BoxTooLarge,
    CompletionOverflow,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _load_checked(path):
    spec, model = load_system(path)
    problems = validate(spec)
    if problems:
        for p in problems:
            print(f"invalid system: {p}", file=sys.stderr)
        raise SystemExit(EX_INVALID)
    return spec, model


def _need_model(model):
    if model is None:
        print("system file carries no probabilities", file=sys.stderr)
        raise SystemExit(EX_INVALID)
    return model


def _cmd_reliability(args) -> int:
    spec, model = _load_checked(args.system)
    model = _need_model(model)
    if args.method == "oracle":
        res = reliability_oracle(spec, args.level, model)
    elif args.method == "iie":
        res = reliability_iie(spec, args.level, model, args.source)
    else:  # sdp and auto
        res = reliability_sdp(spec, args.level, model, args.division)
    _emit(
        args,
        {"value": res.value, "method": res.method, "termCount": res.term_count},
        f"value {res.value:.10f}  method {res.method}  terms {res.term_count}",
    )
    return EX_OK


def _cmd_bounds(args) -> int:
    spec, model = _load_checked(args.system)
    model = _need_model(model)
    value, kind = bonferroni_bounds(spec, args.level, model, args.t, args.source)
    _emit(
        args,
        {"value": value, "kind": kind, "t": args.t},
        f"t {args.t}  {kind} bound {value:.10f}",
    )
    return EX_OK


def _cmd_closure(args) -> int:
    spec, _ = _load_checked(args.system)
    ideal = reliability_ideal(spec, args.level)
    squarefree = args.squarefree or all(m == 1 for m in spec.component_levels)
    closed = strongly_stable_closure(ideal, args.kind, squarefree)
    _emit(
        args,
        {"generators": [list(g) for g in closed.gens]},
        "\n".join(" ".join(str(e) for e in g) for g in closed.gens),
    )
    return EX_OK


def _cmd_check(args) -> int:
    spec, _ = _load_checked(args.system)
    rep = system_stability(spec, args.level)
    payload = {
        "fullyStable": rep.fully_stable,
        "stronglyStable": rep.strongly_stable,
        "stable": rep.stable,
        "ordering": [t + 1 for t in rep.ordering],
        "witness": None
        if rep.witness is None
        else {
            "generator": list(rep.witness[0]),
            "i": rep.witness[1] + 1,
            "j": rep.witness[2] + 1,
        },
    }
    lines = [
        f"fully stable    {rep.fully_stable}",
        f"strongly stable {rep.strongly_stable}",
        f"stable          {rep.stable}",
    ]
    if rep.witness is not None:
        g, i, j = rep.witness
        lines.append(f"witness: generator {g} move {i + 1} -> {j + 1}")
    if args.all_orderings:
        found = find_stable_orderings(spec, args.level, args.kind)
        payload["orderings"] = [[t + 1 for t in tau] for tau in found]
        lines.append(f"{args.kind} orderings: {len(found)}")
        lines.extend("  " + " ".join(str(t + 1) for t in tau) for tau in found)
    _emit(args, payload, "\n".join(lines))
    return EX_OK


def _cmd_importance(args) -> int:
    spec, _ = _load_checked(args.system)
    if args.measure == "structural":
        vals = [structural_importance(spec, i) for i in range(spec.n)]
        ranked = sorted(range(spec.n), key=lambda i: (-vals[i], i))
        payload = {
            "measure": "structural",
            "values": [str(vals[i]) for i in range(spec.n)],
            "ranking": [i + 1 for i in ranked],
        }
        human = "\n".join(
            f"component {i + 1}  {vals[i]}" for i in ranked
        )
    elif args.measure == "multiplicity":
        vals = [multiplicity_importance(spec, args.level, i) for i in range(spec.n)]
        ranked = sorted(range(spec.n), key=lambda i: (-vals[i], i))
        payload = {
            "measure": "multiplicity",
            "level": args.level,
            "values": vals,
            "ranking": [i + 1 for i in ranked],
        }
        human = "\n".join(f"component {i + 1}  {vals[i]}" for i in ranked)
    else:
        rows = []
        for i in range(spec.n):
            for j in range(i + 1, spec.n):
                rows.append((i, j, permutation_compare(spec, i, j)))
        payload = {
            "measure": "permutation",
            "comparisons": [
                {"i": i + 1, "j": j + 1, "outcome": out} for i, j, out in rows
            ],
        }
        human = "\n".join(f"{i + 1} vs {j + 1}: {out}" for i, j, out in rows)
    _emit(args, payload, human)
    return EX_OK


def _cmd_basis(args) -> int:
    spec, _ = _load_checked(args.system)
    ideal = reliability_ideal(spec, args.level)
    if args.division == "janet":
        basis = janet_completion(ideal)
    else:
        basis = pommaret_completion(ideal)
    payload = {
        "division": basis.division,
        "size": basis.size,
        "elements": [
            {"exponents": list(e), "multiplicative": sorted(i + 1 for i in mult)}
            for e, mult in zip(basis.elements, basis.multiplicative)
        ],
    }
    human = "\n".join(
        " ".join(str(x) for x in e)
        + " ; "
        + " ".join(str(i + 1) for i in sorted(mult))
        for e, mult in zip(basis.elements, basis.multiplicative)
    )
    _emit(args, payload, human)
    return EX_OK


def _cmd_resolution(args) -> int:
    spec, _ = _load_checked(args.system)
    ideal = reliability_ideal(spec, args.level)
    if args.source == "ek":
        summary = ek_symbols(ideal)
    elif args.source == "ah":
        summary = ah_symbols(ideal)
    elif args.source == "classical":
        summary = classical_ie_summary(ideal)
    else:
        summary, _ = summary_for_source(ideal, "auto")
    payload = {
        "ranks": list(summary.ranks),
        "symbols": [
            {"generator": list(s.generator), "u": [i + 1 for i in s.indices]}
            for s in summary.symbols
        ],
    }
    lines = [
        "[" + " ".join(str(e) for e in s.generator) + " ; "
        + " ".join(str(i + 1) for i in s.indices) + "]"
        for s in summary.symbols
    ]
    lines.append("ranks: " + " ".join(str(r) for r in summary.ranks))
    _emit(args, payload, "\n".join(lines))
    return EX_OK


def _fill_probabilities(spec, p):
    rows = [[p**j for j in range(1, m + 1)] for m in spec.component_levels]
    return probability_model(rows)


def _cmd_generate(args) -> int:
    if args.family == "kofn":
        spec = k_out_of_n(args.n, args.k)
    elif args.family == "consecutive":
        spec = consecutive_k_out_of_n(args.n, args.k, cyclic=False)
    elif args.family == "cyclic":
        spec = consecutive_k_out_of_n(args.n, args.k, cyclic=True)
    elif args.family == "threshold":
        spec = threshold_with_joker(args.n, args.k, args.m)
    elif args.family == "bridge":
        spec = bridge_system()
    else:
        spec = random_system(args.seed, args.n, args.m, args.paths)
    if args.family == "random":
        model = random_probabilities(args.seed + 1, spec.component_levels)
    else:
        model = _fill_probabilities(spec, args.p)
    save_system(args.out, spec, model)
    print(f"wrote {args.out}")
    return EX_OK


def _cmd_bench(args) -> int:
    rows = []
    for chunk in args.rows.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        n, k, m = (int(x) for x in chunk.split(","))
        rows.append((n, k, m))
    table = []
    for n, k, m in rows:
        spec = threshold_with_joker(n, k, m)
        ideal = reliability_ideal(spec, 1)
        start = time.perf_counter()
        basis = janet_completion(ideal)
        wall = int((time.perf_counter() - start) * 1000)
        ek_size = ""
        if is_stable_ideal(ideal).stable:
            ek_size = sum(ek_symbols(ideal).ranks)
        table.append(
            {
                "n": n,
                "k": k,
                "M": m,
                "minGens": len(ideal.gens),
                "invSize": basis.size,
                "ekSize": ek_size,
                "wallMillis": wall,
            }
        )
    fields = ["n", "k", "M", "minGens", "invSize", "ekSize", "wallMillis"]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields)
            writer.writeheader()
            writer.writerows(table)
    for row in table:
        print("  ".join(f"{row[f]}" for f in fields))
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="relialg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--system", required=True, help="system JSON file")
        p.add_argument("--level", type=int, default=1)
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("reliability", help="evaluate level reliability")
    common(p)
    p.add_argument("--method", choices=["auto", "sdp", "iie", "oracle"], default="auto")
    p.add_argument("--division", choices=["janet", "pommaret"], default="janet")
    p.add_argument("--source", choices=["ek", "ah", "classical", "auto"], default="auto")
    p.set_defaults(func=_cmd_reliability)

    p = sub.add_parser("bounds", help="Bonferroni truncation bound")
    common(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--source", choices=["ek", "ah", "classical", "auto"], default="auto")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("closure", help="stable or strongly stable closure")
    common(p)
    p.add_argument("--kind", choices=["stable", "strongly-stable"],
                   default="strongly-stable")
    p.add_argument("--squarefree", action="store_true")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("check", help="stability report")
    common(p)
    p.add_argument("--all-orderings", action="store_true")
    p.add_argument("--kind", choices=["stable", "strongly-stable", "fully-stable"],
                   default="strongly-stable")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("importance", help="component importance measures")
    common(p)
    p.add_argument("--measure", choices=["structural", "multiplicity", "permutation"],
                   required=True)
    p.set_defaults(func=_cmd_importance)

    p = sub.add_parser("basis", help="dump an involutive basis")
    common(p)
    p.add_argument("--division", choices=["janet", "pommaret"], default="janet")
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("resolution", help="dump admissible symbols and ranks")
    common(p)
    p.add_argument("--source", choices=["ek", "ah", "classical", "auto"], default="auto")
    p.set_defaults(func=_cmd_resolution)

    p = sub.add_parser("generate", help="write a benchmark system file")
    p.add_argument("--family",
                   choices=["kofn", "consecutive", "cyclic", "threshold", "bridge",
                            "random"],
                   required=True)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--m", type=int, default=1, help="component level count - 1")
    p.add_argument("--p", type=float, default=0.9, help="level-1 probability fill")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--paths", type=int, default=4, help="random-family path budget")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("bench", help="Janet-basis size benchmark (CSV)")
    p.add_argument("--family", choices=["threshold"], default="threshold")
    p.add_argument("--rows", required=True, help='for example "10,2,2;10,2,6"')
    p.add_argument("--csv", help="output CSV path")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except SystemFileError as exc:
        print(f"relialg: {exc}", file=sys.stderr)
        return EX_INVALID
    except _INAPPLICABLE as exc:
        print(f"relialg: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return EX_INAPPLICABLE
    except (RelialgError, ValueError) as exc:
        print(f"relialg: {exc}", file=sys.stderr)
        return EX_INVALID


if __name__ == "__main__":
    sys.exit(main())

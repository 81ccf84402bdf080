"""Command-line interface.

Exit codes: 0 success or match, 1 usage or input error, 2 inconclusive
(node budget exhausted), 3 verification failure or mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import constructions, formulas, solve
from .certificates import (
    INVARIANTS,
    Certificate,
    coloring_from_json,
    coloring_to_json,
    instance_json,
    object_to_json,
    recheck,
    set_to_json,
)
from .families import FAMILIES, FamilySpec, generate
from .graph import Graph, GraphError, total_graph
from .textio import ParseError, digest, emit_graph, parse_graph
from .verify import ColoringError, check_coloring

EXIT_OK, EXIT_INPUT, EXIT_INCONCLUSIVE, EXIT_FAIL = 0, 1, 2, 3

SOLVERS = {
    "alpha": solve.independence_number,
    "alpha-mix": solve.mixed_independence_number,
    "gamma-t": solve.total_domination_number,
    "gamma-tm": solve.total_mixed_domination_number,
    "chi": solve.chromatic_number,
    "chi-t": solve.total_chromatic_number,
    "chi-dt": solve.tdc_number,
    "chi-dtt": solve.tdtc_number,
}

# largest total-graph order a sweep hands to each solver unless --cap says otherwise
DEFAULT_CAPS = {"chi-dtt": 24, "gamma-tm": 64, "alpha-mix": 64}


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ helpers


def _spec(args) -> FamilySpec | None:
    if getattr(args, "family", None) is None:
        return None
    if args.n is None:
        raise UsageError("--family needs --n")
    return FamilySpec(args.family, args.n, args.m)


def _graph(args) -> tuple[Graph, FamilySpec | None]:
    if getattr(args, "input", None):
        return parse_graph(Path(args.input).read_text()), None
    spec = _spec(args)
    if spec is None:
        raise UsageError("give a graph with --family/--n[/--m] or --in FILE")
    return generate(spec), spec


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like a..b, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _witness_json(res: solve.SolveResult, g: Graph) -> dict:
    tg = total_graph(g)
    on_total, kind, mode = INVARIANTS[res.invariant]
    if kind == "coloring":
        return coloring_to_json(res.witness, mode, tg)
    objects = res.witness.objects if isinstance(res.witness, solve.MixedSet) else res.witness
    return set_to_json(objects, tg)


# ------------------------------------------------------------------ commands


def cmd_gen(args) -> int:
    g, _ = _graph(args)
    _write(args, emit_graph(g))
    return EXIT_OK


def cmd_total(args) -> int:
    g, _ = _graph(args)
    tg = total_graph(g)
    lines = [f"# object {k + 1}: {tg.label(o)}" for k, o in enumerate(tg.objects)]
    _write(args, "\n".join(lines) + "\n" + emit_graph(tg.graph))
    return EXIT_OK


def cmd_formula(args) -> int:
    spec = _spec(args)
    if spec is None:
        raise UsageError("formula needs --family and --n")
    if args.invariant == "chi-dtt-offset":
        value = formulas.chi_dtt_gamma_offset(spec.family, spec.n)
    else:
        value = formulas.evaluate(args.invariant, spec.family, spec.n, spec.m)
    if args.json:
        print(json.dumps({"instance": spec.as_dict(), "invariant": args.invariant, "value": value}))
    else:
        print(value)
    return EXIT_OK


def _construction_params(args) -> dict:
    if args.n is None:
        raise UsageError("construct needs --n")
    params = {"n": args.n}
    if args.construction == "bipartite-tdtc":
        if args.m is None:
            raise UsageError("bipartite-tdtc needs --m")
        params["m"] = args.m
    if args.construction == "tkn-automorphism":
        if args.i is None:
            raise UsageError("tkn-automorphism needs --i")
        params["i"] = args.i
    return params


def cmd_construct(args) -> int:
    name = args.construction
    params = _construction_params(args)
    tg = constructions.total_graph_for(name, **params)
    out: dict = {"construction": name, "params": params}
    if name == "wheel-tdtc":
        coloring = constructions.wheel_tdtc(args.n)
    elif name == "bipartite-tdtc":
        coloring = constructions.bipartite_tdtc(args.m, args.n)
    elif name == "complete-tdtc-fixture":
        coloring = constructions.complete_tdtc_fixture(args.n)
    elif name == "extremal-order-n":
        _, coloring = constructions.extremal_order_n(args.n)
        out["graph"] = {"family": "complete-bipartite", "m": 1, "n": args.n - 1}
    elif name == "tkn-parts":
        parts = constructions.tkn_parts(args.n)
        out["parts"] = [set_to_json(p, tg) for p in parts]
        _write(args, json.dumps(out, indent=2) + "\n")
        return EXIT_OK
    else:
        phi = constructions.tkn_automorphism(args.n, args.i)
        out["map"] = [
            {"from": object_to_json(a, tg.base), "to": object_to_json(b, tg.base), "labels": [tg.label(a), tg.label(b)]}
            for a, b in phi.items()
        ]
        _write(args, json.dumps(out, indent=2) + "\n")
        return EXIT_OK
    out.update(coloring_to_json(coloring, "tdtc", tg))
    out["size"] = coloring.size
    _write(args, json.dumps(out, indent=2) + "\n")
    return EXIT_OK


def _certify(g: Graph, spec: FamilySpec | None, invariant: str, claimed: int | None, budget: int | None) -> Certificate:
    started = time.perf_counter()
    try:
        res = SOLVERS[invariant](g, budget=budget)
    except solve.SearchBudgetExceeded as exc:
        return Certificate(
            instance_json(g, spec), invariant, claimed, None, None, "inconclusive",
            {"nodes": exc.nodes, "seconds": round(time.perf_counter() - started, 4)},
        )
    if claimed is None:
        verdict = "verified-only"
    else:
        verdict = "match" if claimed == res.value else "mismatch"
    return Certificate(
        instance_json(g, spec), invariant, claimed, res.value, _witness_json(res, g), verdict,
        {"nodes": res.nodes, "seconds": round(time.perf_counter() - started, 4)},
    )


def _summary(cert: Certificate) -> str:
    value = cert.computed if cert.computed is not None else "?"
    parts = [f"{cert.invariant} = {value}", f"verdict: {cert.verdict}"]
    if cert.claimed is not None:
        parts.insert(1, f"claimed {cert.claimed}")
    parts.append(f"nodes: {cert.effort.get('nodes')}")
    return ", ".join(parts)


def cmd_solve(args) -> int:
    g, spec = _graph(args)
    cert = _certify(g, spec, args.invariant, None, args.budget)
    if args.json or args.out:
        _write(args, json.dumps(cert.to_dict(), indent=2) + "\n")
    if not args.json:
        print(_summary(cert))
        if cert.witness is not None:
            key = "labels"
            print("witness:", json.dumps(cert.witness[key]))
    return EXIT_INCONCLUSIVE if cert.verdict == "inconclusive" else EXIT_OK


def cmd_verify(args) -> int:
    if args.certificate:
        data = _load_json(args.certificate)
        cert = Certificate.from_dict(data)
        inst = cert.instance
        if "family" in inst:
            g = generate(FamilySpec(inst["family"], inst["n"], inst.get("m")))
        else:
            if not args.input:
                raise UsageError("certificate names an edge-list digest; pass the graph with --in")
            g = parse_graph(Path(args.input).read_text())
            if digest(g) != inst.get("edge_list"):
                print("graph digest does not match the certificate")
                return EXIT_FAIL
        verdict, problems = recheck(cert, g)
        print(f"verdict: {verdict}")
        for p in problems:
            print("  " + p)
        if verdict != cert.verdict:
            print(f"certificate states {cert.verdict!r}")
            return EXIT_FAIL
        return EXIT_FAIL if verdict == "mismatch" else EXIT_OK

    if not args.coloring:
        raise UsageError("verify needs --coloring FILE or --certificate FILE")
    g, _ = _graph(args)
    coloring, mode = coloring_from_json(_load_json(args.coloring), g, args.mode)
    target = total_graph(g) if mode in ("total", "tdtc") else g
    report = check_coloring(target, coloring, mode)
    if report.valid:
        print(f"valid {mode} coloring with {coloring.size} classes")
        return EXIT_OK
    print(f"invalid {mode} coloring ({len(report.violations)} violations)")
    for line in report.describe(target):
        print("  " + line)
    return EXIT_FAIL


# -------------------------------------------------------------------- sweep


def _instances(family: str, lo: int, hi: int, m: int | None) -> list[FamilySpec]:
    if family != "complete-bipartite":
        return [FamilySpec(family, n) for n in range(lo, hi + 1)]
    out = []
    for n in range(lo, hi + 1):
        ms = [m] if m is not None else list(range(1, n + 1))
        out += [FamilySpec(family, n, mm) for mm in ms if mm is not None and 1 <= mm <= n]
    return out


def _construction_for(spec: FamilySpec):
    if spec.family == "wheel":
        return constructions.wheel_tdtc(spec.n)
    if spec.family == "complete-bipartite":
        return constructions.bipartite_tdtc(spec.m, spec.n)
    if spec.family == "complete" and spec.n in constructions.COMPLETE_FIXTURES:
        return constructions.complete_tdtc_fixture(spec.n)
    return None


def run_instance(spec: FamilySpec, check: str, invariant: str, budget: int | None, cap: int) -> dict:
    """One sweep row plus its certificate; independent of every other instance."""
    g = generate(spec)
    row = {"n": spec.n, "m": spec.m, "claimed": None, "computed": None, "verdict": "skipped", "certificate": None}
    if check == "formula-vs-solver":
        claimed = formulas.evaluate(invariant, spec.family, spec.n, spec.m)
        row["claimed"] = claimed
        if g.n + g.m > cap:
            row["note"] = f"total graph order {g.n + g.m} above cap {cap}"
            return row
        cert = _certify(g, spec, invariant, claimed, budget)
    else:
        started = time.perf_counter()
        coloring = _construction_for(spec)
        if coloring is None:
            row["note"] = "no construction for this instance"
            return row
        claimed = formulas.chi_dtt(spec.family, spec.n, spec.m) if check == "formula-vs-construction" else None
        row["claimed"] = claimed
        tg = total_graph(g)
        valid = check_coloring(tg, coloring, "tdtc").valid
        if not valid:
            verdict = "mismatch"
        elif claimed is None:
            verdict = "verified-only"
        else:
            verdict = "match" if claimed == coloring.size else "mismatch"
        cert = Certificate(
            instance_json(g, spec), "chi-dtt", claimed, coloring.size, coloring_to_json(coloring, "tdtc", tg),
            verdict, {"nodes": 0, "seconds": round(time.perf_counter() - started, 4)},
            note="construction",
        )
    row.update(computed=cert.computed, verdict=cert.verdict, certificate=cert.to_dict())
    return row


def cmd_sweep(args) -> int:
    lo, hi = args.range
    invariant = args.invariant
    if args.check == "formula-vs-solver":
        invariant = invariant or "chi-dtt"
        if invariant not in formulas.INVARIANTS:
            raise UsageError(f"formula-vs-solver compares {', '.join(formulas.INVARIANTS)}")
        formulas.evaluate(invariant, args.family, max(lo, 3), args.m if args.m is not None else max(lo, 3))
    elif invariant not in (None, "chi-dtt"):
        raise UsageError(f"{args.check} checks chi-dtt constructions only")
    else:
        invariant = "chi-dtt"
    cap = args.cap if args.cap is not None else DEFAULT_CAPS.get(invariant, 64)
    specs = _instances(args.family, lo, hi, args.m)
    jobs = [(s, args.check, invariant, args.budget, cap) for s in specs]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(run_instance, *zip(*jobs)))
    else:
        rows = [run_instance(*j) for j in jobs]
    rows.sort(key=lambda r: (r["n"], r["m"] or 0))

    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print("\t".join(["n", "m", "claimed", "computed", "verdict"]))
        for r in rows:
            cells = [r["n"], r["m"], r["claimed"], r["computed"], r["verdict"]]
            print("\t".join("-" if c is None else str(c) for c in cells))
    if args.out:
        with open(args.out, "w") as fh:
            for r in rows:
                if r["certificate"] is not None:
                    fh.write(json.dumps(r["certificate"]) + "\n")

    verdicts = {r["verdict"] for r in rows}
    if "mismatch" in verdicts:
        return EXIT_FAIL
    if "inconclusive" in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ------------------------------------------------------------------- parser


def _graph_args(p: argparse.ArgumentParser, with_input: bool = True) -> None:
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    if with_input:
        p.add_argument("--in", dest="input", metavar="FILE", help="edge-list file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdtc", description="Total graphs and total dominator total colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a family graph as an edge list")
    _graph_args(p, with_input=False)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("total", help="emit the total graph as an edge list")
    _graph_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_total)

    p = sub.add_parser("formula", help="closed-form value for a family")
    _graph_args(p, with_input=False)
    p.add_argument("--invariant", required=True, choices=list(formulas.INVARIANTS) + ["chi-dtt-offset"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", help="emit an explicit construction as JSON")
    p.add_argument("--construction", required=True, choices=constructions.CONSTRUCTIONS)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("solve", help="solve an invariant exactly and emit a certificate")
    _graph_args(p)
    p.add_argument("--invariant", required=True, choices=list(SOLVERS))
    p.add_argument("--budget", type=int, help="node budget; exhausting it exits 2")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring file or a certificate")
    _graph_args(p)
    p.add_argument("--coloring", metavar="FILE")
    p.add_argument("--certificate", metavar="FILE")
    p.add_argument("--mode", choices=["proper", "total", "tdc", "tdtc"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="cross-check formulas against solver or constructions over a range")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--range", required=True, type=_range, metavar="a..b")
    p.add_argument("--m", type=int)
    p.add_argument("--check", required=True, choices=["formula-vs-solver", "formula-vs-construction", "construction-verify"])
    p.add_argument("--invariant", choices=list(formulas.INVARIANTS))
    p.add_argument("--budget", type=int)
    p.add_argument("--cap", type=int, help="skip solver instances whose total graph is larger")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write certificates as JSON lines")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, ColoringError, GraphError, formulas.NotCovered, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

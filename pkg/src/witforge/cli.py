"""Single entry point: the forge command.

Exit codes: 0 success, 1 domain error (the error class name is printed),
2 usage error, 10 satisfiable / member, 20 unsatisfiable / non-member.
Every subcommand accepts --json for a single machine-readable document on
stdout; identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bounds import parse_bound
from .circuits import (circuit_from_text, circuit_to_text, deserialize,
                       serialize, stats)
from .cnf import parse_dimacs_cnf
from .encoders import (clique_gadget_circuit, encode_clique, encode_sat,
                       exhaustive_clique_search, parse_dimacs_graph)
from .engine import (DecideDiagnostics, decide_bruteforce, decide_via_circuits,
                     parse_manifest, render_manifest, translation_transform,
                     padding_transform)
from .errors import ForgeError
from .machines import BUILTIN_NAMES, builtin
from .pstrings import parse_pstring
from .solver import LENIENT, STRICT, solve
from .tm import parse_tm, run, run_trace, tm_to_text
from .tradeoffs import (FLOAT, RATIONAL, required_k_for_epsilon,
                        speedup_schedule, tradeoff_table)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_SAT = 10
EXIT_UNSAT = 20


def _read_arg(value: str) -> str:
    """Inline string or path to a file holding it."""
    if os.path.exists(value):
        return Path(value).read_text().strip()
    return value


def _load_machine(ref: str):
    if ref.startswith("builtin:"):
        return builtin(ref.split(":", 1)[1])
    if ref in BUILTIN_NAMES:
        return builtin(ref)
    return parse_tm(Path(ref).read_text(), name=Path(ref).stem)


def _emit(args, doc: dict, human: str) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True, default=str))
    elif human:
        print(human)


def _precision_mode() -> str:
    return FLOAT if os.environ.get("FORGE_PRECISION") == "float" else RATIONAL


def cmd_tm(args) -> int:
    tm = _load_machine(args.machine)
    x = parse_pstring(_read_arg(args.input))
    if args.trace:
        tab = run_trace(tm, x, args.bound)
        lines = []
        for step, row in enumerate(tab.rows):
            tape = "".join(row.tape).rstrip("_") or "_"
            lines.append(f"{step:4d} {row.state:>12s} @{row.head:<4d} {tape}")
        doc = {"command": "tm", "verdict": tab.verdict, "steps": tab.steps,
               "rows": len(tab.rows)}
        _emit(args, doc, "\n".join(lines) + f"\n{tab.verdict} in {tab.steps} steps")
    else:
        res = run(tm, x, args.bound)
        doc = {"command": "tm", "verdict": res.verdict, "steps": res.steps}
        _emit(args, doc, f"{res.verdict} in {res.steps} steps")
    return EXIT_OK


def cmd_compile(args) -> int:
    from .compiler import compile_on_pstring

    tm = _load_machine(args.machine)
    x = parse_pstring(_read_arg(args.input))
    c = compile_on_pstring(tm, x, args.expose, args.bound)
    st = stats(c)
    Path(args.output).write_bytes(serialize(c))
    doc = {"command": "compile", "gates": st.gates, "inputs": st.inputs,
           "depth": st.depth, "output": args.output,
           "bytes": len(serialize(c))}
    _emit(args, doc, f"wrote {args.output}: m={st.gates} inputs={st.inputs} "
                     f"depth={st.depth}")
    return EXIT_OK


def _load_circuit(path: str):
    data = Path(path).read_bytes()
    try:
        text = data.decode()
    except UnicodeDecodeError:
        return deserialize(data)
    if "=" in text:
        return circuit_from_text(text)
    return deserialize(data)


def cmd_solve(args) -> int:
    c = _load_circuit(args.circuit)
    res = solve(c, mode=LENIENT if args.lenient else STRICT, jobs=args.jobs)
    doc = {"command": "solve", "satisfiable": res.satisfiable,
           "witness": res.witness, "evaluations": res.evaluations}
    _emit(args, doc, f"SAT {res.witness}" if res.satisfiable else "UNSAT")
    return EXIT_SAT if res.satisfiable else EXIT_UNSAT


def cmd_decide(args) -> int:
    inst = parse_manifest(Path(args.manifest).read_text(),
                          machine_loader=_load_machine)
    x = parse_pstring(_read_arg(args.input))
    doc = {"command": "decide", "via": args.via, "instance": inst.name}
    human = []
    if args.via == "bruteforce":
        diag = DecideDiagnostics()
        member = decide_bruteforce(inst, x, diagnostics=diag)
        doc.update(member=member, fillings=diag.fillings_tried,
                   timeouts=diag.timeouts)
        human.append(f"{'member' if member else 'non-member'} "
                     f"({diag.fillings_tried} fillings tried)")
    else:
        member, report = decide_via_circuits(inst, x, jobs=args.jobs)
        doc.update(member=member, in_universe=report.in_universe,
                   time_bound=report.time_bound,
                   family=[{"i": r.index, "gates": r.gates, "inputs": r.inputs,
                            "depth": r.depth} for r in report.family],
                   sat_index=report.sat_index, sat_witness=report.sat_witness,
                   evaluations=report.evaluations)
        human.append("member" if member else "non-member")
        for r in report.family:
            human.append(f"  C_{r.index}: m={r.gates} inputs={r.inputs} "
                         f"depth={r.depth}")
        if args.report:
            from .report import write_delimited
            write_delimited(args.report, ("i", "gates", "inputs", "depth"),
                            [(r.index, r.gates, r.inputs, r.depth)
                             for r in report.family])
            human.append(f"report written to {args.report}")
        if args.plot:
            from .report import plot_family
            plot_family(report, args.plot)
            human.append(f"figure written to {args.plot}")
    _emit(args, doc, "\n".join(human))
    return EXIT_SAT if doc["member"] else EXIT_UNSAT


def cmd_transform(args) -> int:
    text = Path(args.manifest).read_text()
    inst = parse_manifest(text, machine_loader=_load_machine)
    verifier_ref = "instance"
    for line in text.splitlines():
        if line.strip().startswith("verifier:"):
            verifier_ref = line.split(":", 1)[1].strip()
    if args.pad:
        expr = args.pad.split("=", 1)[1] if "=" in args.pad else args.pad
        inst = padding_transform(inst, parse_bound(expr))
    elif args.translate:
        spec = args.translate
        if ",w'=" not in spec or not spec.startswith("w="):
            raise ForgeError("expected --translate w=<expr>,w'=<expr>")
        w_text, wp_text = spec[2:].split(",w'=", 1)
        inst = translation_transform(inst, (parse_bound(w_text),
                                            parse_bound(wp_text)))
    else:
        raise ForgeError("nothing to do: pass --pad or --translate")
    rendered = render_manifest(inst, verifier_ref)
    if args.output:
        Path(args.output).write_text(rendered)
    doc = {"command": "transform", "manifest": rendered}
    _emit(args, doc, rendered.rstrip("\n") if not args.output
          else f"wrote {args.output}")
    return EXIT_OK


def cmd_tradeoff(args) -> int:
    mode = _precision_mode()
    alpha = Fraction(args.alpha) if mode == RATIONAL else float(args.alpha)
    rows = tradeoff_table(alpha, args.kmax, mode=mode)
    doc = {"command": "tradeoff", "mode": mode, "alpha": str(args.alpha),
           "rows": [{"k": r.k, "z": str(r.z), "exponent": str(r.exponent),
                     "ratio": str(r.ratio)} for r in rows]}
    lines = [f"{'k':>4} {'z':>18} {'exponent':>18} {'ratio':>18}"]
    for r in rows:
        lines.append(f"{r.k:>4} {_num(r.z):>18} {_num(r.exponent):>18} "
                     f"{_num(r.ratio):>18}")
    if args.epsilon is not None:
        k_eps = required_k_for_epsilon(Fraction(args.alpha), Fraction(args.epsilon))
        doc["required_k"] = k_eps
        lines.append(f"required k for epsilon={args.epsilon}: {k_eps}")
    if args.schedule:
        steps = speedup_schedule("L", alpha, args.kmax, mode=mode)
        doc["schedule"] = [{"k": s.k, "in": s.class_in, "translate": s.translation,
                            "pad": s.padding, "out": s.class_out} for s in steps]
        for s in steps:
            lines.append(f"step {s.k}: {s.class_in}")
            lines.append(f"        {s.translation}")
            lines.append(f"        {s.padding} => {s.class_out}")
    if args.csv:
        from .report import write_delimited
        write_delimited(args.csv, ("k", "z", "exponent", "ratio"),
                        [(r.k, r.z, r.exponent, r.ratio) for r in rows])
        lines.append(f"table written to {args.csv}")
    if args.plot:
        from .report import plot_tradeoff
        plot_tradeoff(rows, args.plot)
        lines.append(f"figure written to {args.plot}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def _num(value) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return f"{value:.10g}"


def cmd_encode(args) -> int:
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    if args.kind == "sat":
        formula = parse_dimacs_cnf(Path(args.source).read_text())
        x, inst = encode_sat(formula)
    else:
        graph = parse_dimacs_graph(Path(args.source).read_text())
        x, inst = encode_clique(graph, args.k)
    machine_path = outdir / "verifier.tm"
    machine_path.write_text(tm_to_text(inst.verifier))
    manifest_path = outdir / "instance.manifest"
    manifest_path.write_text(render_manifest(inst, str(machine_path)))
    input_path = outdir / "input.pstring"
    input_path.write_text(x.text() + "\n")
    doc = {"command": "encode", "kind": args.kind, "input": str(input_path),
           "manifest": str(manifest_path), "verifier": str(machine_path),
           "length": len(x), "placeholders": x.pcount(),
           "lint": inst.lint()}
    _emit(args, doc, f"wrote {manifest_path}, {input_path}, {machine_path} "
                     f"(|x|={len(x)}, {x.pcount()} placeholders)")
    return EXIT_OK


def cmd_clique(args) -> int:
    graph = parse_dimacs_graph(Path(args.graph).read_text())
    doc = {"command": "clique", "via": args.via, "k": args.k,
           "vertices": graph.vertex_count, "edges": graph.edge_count}
    if args.via == "subsets":
        witness = exhaustive_clique_search(graph, args.k)
        member = witness is not None
        doc.update(member=member,
                   witness=list(witness) if witness else None)
        human = f"{'clique' if member else 'no clique'}: {witness}"
    elif args.via == "gadget":
        c = clique_gadget_circuit(graph, args.k)
        res = solve(c, mode=LENIENT, jobs=args.jobs)
        member = res.satisfiable
        ids = _decode_witness(graph, args.k, res.witness) if member else None
        doc.update(member=member, witness=ids, gates=c.gate_count())
        human = f"{'clique' if member else 'no clique'}: {ids}"
    else:
        x, inst = encode_clique(graph, args.k)
        member, report = decide_via_circuits(inst, x, jobs=args.jobs)
        ids = _decode_witness(graph, args.k, report.sat_witness) \
            if member else None
        doc.update(member=member, witness=ids,
                   family=[{"i": r.index, "gates": r.gates}
                           for r in report.family])
        human = f"{'clique' if member else 'no clique'}: {ids}"
    _emit(args, doc, human)
    return EXIT_SAT if doc["member"] else EXIT_UNSAT


def _decode_witness(graph, k, bits):
    from .machines import clique_field_width
    if bits is None:
        return None
    L = clique_field_width(graph.vertex_count)
    return [int(bits[j * L:(j + 1) * L], 2) for j in range(k)
            if len(bits) >= (j + 1) * L]


def cmd_selftest(args) -> int:
    from .selftest import run_selftest
    failures, checks = run_selftest(seed=args.seed, verbose=not args.json)
    doc = {"command": "selftest", "checks": checks, "failures": failures}
    _emit(args, doc, f"{checks - failures}/{checks} checks passed")
    return EXIT_OK if failures == 0 else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forge",
        description="placeholder-string nondeterminism workbench")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit one JSON document on stdout")

    p = sub.add_parser("tm", help="run a verifier machine")
    tm_sub = p.add_subparsers(dest="tm_cmd", required=True)
    p_run = tm_sub.add_parser("run")
    p_run.add_argument("machine")
    p_run.add_argument("input")
    p_run.add_argument("--bound", type=int, required=True)
    p_run.add_argument("--trace", action="store_true")
    common(p_run)
    p_run.set_defaults(func=cmd_tm)

    p = sub.add_parser("compile", help="compile machine + input to a circuit")
    p.add_argument("machine")
    p.add_argument("--input", required=True)
    p.add_argument("--expose", type=int, default=0)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    common(p)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("solve", help="decide circuit satisfiability")
    p.add_argument("circuit")
    p.add_argument("--lenient", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decide", help="decide instance membership")
    p.add_argument("manifest")
    p.add_argument("input")
    p.add_argument("--via", choices=("circuits", "bruteforce"),
                   default="circuits")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write family stats as a delimited file")
    p.add_argument("--plot", help="write family stats as a PNG figure")
    common(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("transform", help="apply a structural construction")
    p.add_argument("manifest")
    p.add_argument("--pad", help="f=<expr>")
    p.add_argument("--translate", help="w=<expr>,w'=<expr>")
    p.add_argument("-o", "--output")
    common(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("tradeoff", help="speed-up trade-off table")
    p.add_argument("--alpha", required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--epsilon")
    p.add_argument("--schedule", action="store_true",
                   help="print the iterated construction steps")
    p.add_argument("--csv", help="write the table as a delimited file")
    p.add_argument("--plot", help="write the curves as a PNG figure")
    common(p)
    p.set_defaults(func=cmd_tradeoff)

    p = sub.add_parser("encode", help="encode a problem instance")
    p.add_argument("kind", choices=("sat", "clique"))
    p.add_argument("source")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("-o", "--output", default="encoded")
    common(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("clique", help="decide k-clique three ways")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--via", choices=("pipeline", "gadget", "subsets"),
                   default="pipeline")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser("selftest", help="run the cross-module oracle suites")
    p.add_argument("--seed", type=int, default=20240901)
    common(p)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ForgeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

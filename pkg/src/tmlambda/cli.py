"""Command-line driver: ``tmlambda {compile,run,simulate,verify,bench,lemma-check}``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import harness
from .compiler import compile_machine
from .machine import CORPUS, MachineError, MachineSyntaxError, corpus_machine, load_machine, run_machine, wrap
from .terms import size, to_str


def _machine(name):
    path = Path(name)
    if not path.exists() and name in CORPUS:
        return corpus_machine(name)
    return load_machine(path)


def _write_json(path, data):
    if path:
        Path(path).write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")


def cmd_compile(args):
    cm = compile_machine(_machine(args.machine))
    Path(args.out).write_text(to_str(cm.whole) + "\n", encoding="utf-8")
    print(f"size: {size(cm.whole)} nodes")
    return 0


def cmd_run(args):
    M = _machine(args.machine)
    out = harness.run_lambda(compile_machine(M), wrap(args.payload), args.fuel)
    if out.exhausted:
        print(f"fuel exhausted after {out.steps} beta-steps (possible divergence)")
        return 2
    value = "stuck" if out.value is None else str(out.value).lower()
    print(f"result: {value}")
    print(f"beta-steps: {out.steps}")
    return 0


def cmd_simulate(args):
    M = _machine(args.machine)
    r = run_machine(M, wrap(args.payload), args.max_steps)
    if r.halted:
        print(f"state: {r.final.state}")
        print(f"result: {str(r.accepted).lower()}")
    else:
        print("not halted" + (" (stuck: no rule applies)" if r.stuck else ""))
    print(f"steps: {r.steps}")
    print(f"work-space: {r.work_space}")
    return 0


def _print_rows(report):
    print(f"{'payload':>20} {'oracle':>6} {'lambda':>6} {'T':>6} {'n':>10} {'ratio':>8}")
    for r in report.rows:
        p = r.payload if len(r.payload) <= 20 else r.payload[:17] + "..."
        print(f"{p or 'ε':>20} {str(r.oracle):>6} {str(r.lam):>6} {r.machine_steps:>6} "
              f"{r.beta_steps:>10} {r.ratio:>8.3f}")


def cmd_verify(args):
    report = harness.verify(_machine(args.machine), args.max_len, args.fuel)
    _write_json(args.json, report.to_json())
    print(f"{report.machine}: {len(report.rows)} inputs, status {report.status}")
    print(f"ratio min {report.ratio_min:.3f} max {report.ratio_max:.3f}")
    for r in report.counterexamples[:1]:
        print(f"counterexample: payload {r.payload!r} oracle {r.oracle} lambda {r.lam}"
              + (" (fuel exhausted)" if r.exhausted else ""))
    return 0 if report.status == "pass" else 1


def cmd_bench(args):
    if args.sizes != sorted(args.sizes):
        raise ValueError("sizes must be ascending")
    report = harness.bench(_machine(args.machine), args.sizes, args.seed, args.fuel)
    _write_json(args.json, report.to_json())
    _print_rows(report)
    print(f"ratio min {report.ratio_min:.3f} max {report.ratio_max:.3f} "
          f"spread {report.ratio_max / report.ratio_min:.3f}")
    if report.rows and report.rows[-1].exhausted:
        print("fuel exhausted; table is partial")
        return 2
    return 0


def cmd_lemma_check(args):
    results = harness.lemma_check()
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<10} {r.detail}")
    ok = all(r.passed for r in results)
    _write_json(args.json, {"schema": harness.REPORT_SCHEMA, "lemmas": [asdict(r) for r in results],
                            "status": "pass" if ok else "fail"})
    return 0 if ok else 1


def build_parser():
    p = argparse.ArgumentParser(prog="tmlambda", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compile", help="write the compiled machine term")
    c.add_argument("machine", help=".tm file or corpus name")
    c.add_argument("out")
    c.set_defaults(func=cmd_compile)

    r = sub.add_parser("run", help="evaluate the compiled term on a payload")
    r.add_argument("machine")
    r.add_argument("payload", help="bits between the L and R markers, may be empty")
    r.add_argument("--fuel", type=int, default=harness.DEFAULT_FUEL)
    r.set_defaults(func=cmd_run)

    s = sub.add_parser("simulate", help="run the machine directly")
    s.add_argument("machine")
    s.add_argument("payload")
    s.add_argument("--max-steps", type=int, default=10**6)
    s.set_defaults(func=cmd_simulate)

    v = sub.add_parser("verify", help="compare both simulators on all short payloads")
    v.add_argument("machine")
    v.add_argument("--max-len", type=int, default=8)
    v.add_argument("--fuel", type=int, default=harness.DEFAULT_FUEL)
    v.add_argument("--json")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="beta-steps against (T+1)|i|log|i|")
    b.add_argument("machine")
    b.add_argument("sizes", nargs="+", type=int, help="ascending payload sizes")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--fuel", type=int, default=harness.DEFAULT_FUEL)
    b.add_argument("--json")
    b.set_defaults(func=cmd_bench)

    lc = sub.add_parser("lemma-check", help="step-count micro-suites")
    lc.add_argument("--json")
    lc.set_defaults(func=cmd_lemma_check)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MachineSyntaxError, MachineError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

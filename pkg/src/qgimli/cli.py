"""Command-line front end: build, stats, verify, selftest, sweep."""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from qgimli.builder import build_gimli_circuit, expected_counts
from qgimli.circuit import Gate, gate_counts
from qgimli.gimli_ref import DEFAULT_CONSTANT, Params, round_tweak
from qgimli.lowering import block_unitary, lower_toffoli, toffoli_sequence
from qgimli.qasm import export_json, export_qasm, materialize_swaps
from qgimli.report import REFERENCE, stats, sweep, write_csv
from qgimli.simulator import verify_equivalence


def _hex_int(text: str) -> int:
    return int(text, 16) if not text.lower().startswith("0x") else int(text, 0)


def _params(args) -> Params:
    return Params(args.rounds, args.word_len, args.constant)


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_build(args) -> int:
    circuit, _ = build_gimli_circuit(_params(args))
    if args.lower:
        circuit = lower_toffoli(circuit)
    swaps = materialize_swaps(circuit) if args.emit_swaps else None
    fmt = args.format or ("json" if args.out and args.out.endswith(".json") else "qasm")
    text = export_json(circuit, swaps) if fmt == "json" else export_qasm(circuit, swaps)
    _write(text, args.out)
    return 0


def cmd_stats(args) -> int:
    _write(json.dumps(stats(_params(args), lower=args.lower), indent=2) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    report = verify_equivalence(_params(args), trials=args.trials, seed=args.seed, check_inverse=True)
    _write(report.to_json(indent=2) + "\n", args.out)
    return 0 if report.ok else 1


def selftest_checks() -> list[tuple[str, bool, str]]:
    checks = []

    u = block_unitary(toffoli_sequence(0, 1, 2))
    ref = block_unitary([Gate("CCNOT", (0, 1, 2))])
    err = float(np.max(np.abs(u - ref)))
    checks.append(("toffoli decomposition unitary", err < 1e-12, f"max deviation {err:.2e}"))
    truth = all(
        np.isclose(abs(u[b ^ 1 if b >= 6 else b, b]), 1.0, atol=1e-12) for b in range(8)
    )
    checks.append(("toffoli decomposition truth table", bool(truth), "8 basis states"))

    params = Params()
    const_x = sum(bin(round_tweak(q, params)).count("1") for q in range(4, params.rounds + 1, 4))
    body_x = 20 * params.rounds * (params.word_len - 1)
    target = REFERENCE["ccnot"]["X"] - body_x
    checks.append(("constant reconciliation", const_x == target == 99,
                   f"constant-layer X = {const_x}, published X - circuit X = {target}"))

    circuit, _ = build_gimli_circuit(params)
    counts = gate_counts(circuit)
    ok = all(counts[k] == v for k, v in expected_counts(params).items())
    ok &= all(counts[k] == REFERENCE["ccnot"][k] for k in ("total", "X", "CCNOT", "CNOT"))
    checks.append(("table counts, ccnot form", ok, f"total {counts.total}"))
    low = gate_counts(lower_toffoli(circuit))
    ok = all(low[k] == REFERENCE["clifford_t"][k] for k in ("total", "X", "CNOT", "H", "T+TDG", "CCNOT"))
    checks.append(("table counts, clifford+t form", ok, f"total {low.total}"))
    return checks


def cmd_selftest(args) -> int:
    checks = selftest_checks()
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return 0 if all(ok for _, ok, _ in checks) else 1


def cmd_sweep(args) -> int:
    from qgimli.plotting import render_sweep

    rows = sweep(args.rounds_list, args.word_lens, args.constant, lowered_t_depth=args.t_depth)
    os.makedirs(args.out_dir, exist_ok=True)
    csv_path = os.path.join(args.out_dir, "sweep.csv")
    write_csv(rows, csv_path)
    for path in [csv_path, *render_sweep(rows, args.out_dir)]:
        print(path)
    bad = [row for row in rows if row.depth > row.depth_bound or not row.counts_match_formula]
    return 1 if bad else 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgimli", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-r", "--rounds", type=int, default=24)
    common.add_argument("-l", "--word-len", type=int, default=32)
    common.add_argument("-c", "--constant", type=_hex_int, default=DEFAULT_CONSTANT,
                        help="round constant in hex (default 0x9e377900)")
    common.add_argument("-o", "--out", default=None, help="output file (default stdout)")

    p = sub.add_parser("build", parents=[common], help="write the circuit gate list")
    p.add_argument("--lower", action="store_true", help="replace CCNOT with Clifford+T")
    p.add_argument("--emit-swaps", action="store_true",
                   help="append a SWAP layer restoring logical wire order")
    p.add_argument("--format", choices=["qasm", "json"], default=None)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("stats", parents=[common], help="print the resource report as JSON")
    p.add_argument("--lower", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", parents=[common], help="randomised check against the reference")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="decomposition and table reconciliation checks")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("sweep", help="resource sweep over rounds and word lengths, CSV plus figures")
    p.add_argument("--rounds-list", type=int, nargs="+", default=[4, 8, 12, 24, 48])
    p.add_argument("--word-lens", type=int, nargs="+", default=[8, 16, 32, 64])
    p.add_argument("-c", "--constant", type=_hex_int, default=DEFAULT_CONSTANT)
    p.add_argument("--t-depth", action="store_true", help="also lower each circuit and record T-depth")
    p.add_argument("--out-dir", default="sweep_out")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end with stable, golden-file friendly text output."""

import argparse
import sys

from . import dynamics, rmatrix, solitons
from .crystal import format_element
from .dynamics import State
from .rmatrix import format_affine
from .tensor import parse_tensor


class CliError(Exception):
    pass


def _check_n(n):
    if not 2 <= n <= 9:
        raise CliError(f"--n must be in 2..9 for the compact text format, got {n}")


def _capacity(text):
    if text == "inf":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"capacity must be a positive integer or 'inf', got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"capacity must be a positive integer or 'inf', got {text!r}")
    return value


def _read_lines(args):
    if getattr(args, "file", None):
        with open(args.file) as fh:
            raw = fh.read().splitlines()
    else:
        raw = sys.stdin.read().splitlines()
    return [(i, line) for i, line in enumerate(raw, start=1) if line.strip() and not line.lstrip().startswith("#")]


def _parse_states(args):
    states = []
    for lineno, line in _read_lines(args):
        try:
            states.append(State.from_text(line, args.n))
        except ValueError as exc:
            raise CliError(f"line {lineno}: {exc}")
    return states


def cmd_evolve(args):
    _check_n(args.n)
    first = True
    for state in _parse_states(args):
        if not first:
            print()
        first = False
        print(state.to_text())
        for trace in dynamics.trajectory(state, args.capacity, args.steps):
            print(trace.out_state.to_text())
            if args.show_h:
                print("# H=" + "".join(str(-h) for h in trace.h_values))
            state = trace.out_state
    return 0


def cmd_inverse(args):
    _check_n(args.n)
    first = True
    for state in _parse_states(args):
        if not first:
            print()
        first = False
        print(state.to_text())
        for _ in range(args.steps):
            state = dynamics.evolve_inverse(state, args.capacity)
            print(state.to_text())
    return 0


def cmd_energy(args):
    _check_n(args.n)
    first = True
    for state in _parse_states(args):
        if not first:
            print()
        first = False
        spec = dynamics.spectrum(state, args.lmax)
        if args.lmax:
            top = args.lmax
        else:
            top = 1
            while spec.e_values[top] != spec.e_values[top - 1]:
                top += 1
        print("l E N")
        for l in range(1, top + 1):
            print(f"{l} {spec.e_values[l]} {spec.n_values[l]}")
    return 0


def cmd_rmatrix(args):
    _check_n(args.n)
    inputs = [(0, args.pair)] if args.pair else _read_lines(args)
    for lineno, text in inputs:
        try:
            t = parse_tensor(text, args.n)
        except ValueError as exc:
            raise CliError(f"line {lineno}: {exc}")
        if len(t) != 2:
            raise CliError(f"line {lineno}: expected exactly two factors, got {len(t)}")
        (c1, c2), h = rmatrix.iso_with_energy(t[0], t[1], args.n)
        print(f"({format_element(c1, args.n)})|({format_element(c2, args.n)}) H={h}")
    return 0


def cmd_ybe(args):
    _check_n(args.n)
    try:
        sizes = tuple(int(x) for x in args.sizes.split(","))
    except ValueError:
        raise CliError(f"--sizes must be three comma-separated integers, got {args.sizes!r}")
    if len(sizes) != 3 or any(l < 1 for l in sizes):
        raise CliError(f"--sizes must be three positive integers, got {args.sizes!r}")
    report = rmatrix.yang_baxter_check(*sizes, args.n)
    if report.ok:
        print(f"PASS sizes={args.sizes} n={args.n} cases={report.cases}")
        return 0
    start, lhs, rhs = report.counterexample
    print(f"FAIL sizes={args.sizes} n={args.n}")
    print("input: " + " ".join(format_affine(x) for x in start))
    print("lhs:   " + " ".join(format_affine(x) for x in lhs))
    print("rhs:   " + " ".join(format_affine(x) for x in rhs))
    return 1


def cmd_scatter(args):
    _check_n(args.n)
    states = _parse_states(args)
    if not states:
        return 0
    status = 0
    first = True
    for state in states:
        if not first:
            print()
        first = False
        try:
            report = solitons.run_scattering(state, args.rule, args.max_steps)
        except (ValueError, solitons.ScatteringBudgetError) as exc:
            raise CliError(str(exc))
        print("in:  " + " ".join(format_affine(x) for x in report.in_labels))
        print("out: " + " ".join(format_affine(x) for x in report.out_labels_simulated))
        print("pred: " + " ".join(format_affine(x) for x in report.out_labels_predicted))
        print("MATCH" if report.match else "MISMATCH")
        print("tableau in:")
        print(solitons.format_tableau(report.tableau_in))
        print("tableau out:")
        print(solitons.format_tableau(report.tableau_out))
        if not report.match:
            status = 1
    return status


def cmd_tableau(args):
    _check_n(args.n)
    first = True
    for state in _parse_states(args):
        if not first:
            print()
        first = False
        rows = solitons.bump_tableau(state)
        print(solitons.format_tableau(rows) if rows else "(empty)")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="boxball", description="Box-ball system toolkit.")
    parser.add_argument("--seed", type=int, default=0, help="seed for scripted randomized sweeps (subcommands here are deterministic)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, required=True, help="alphabet size (vacuum letter is n)")
        p.add_argument("--file", help="read input from a file instead of stdin")

    p = sub.add_parser("evolve", help="apply the time evolution to states")
    common(p)
    p.add_argument("--capacity", type=_capacity, default=None, help="carrier capacity, or 'inf' (default)")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--show-h", action="store_true", help="print the local H values after each row")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("inverse", help="apply the inverse time evolution")
    common(p)
    p.add_argument("--capacity", type=int, required=True)
    p.add_argument("--steps", type=int, default=1)
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("energy", help="print the E_l / N_l table of states")
    common(p)
    p.add_argument("--lmax", type=int, default=None, help="print exactly rows 1..lmax (default: one past stabilization)")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("rmatrix", help="apply the combinatorial R-matrix to a pair")
    common(p)
    p.add_argument("pair", nargs="?", help="pair text like '1123|23' (default: read lines from stdin)")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("ybe", help="exhaustively check the Yang-Baxter equation")
    common(p)
    p.add_argument("--sizes", required=True, help="three comma-separated sizes, e.g. 3,2,1")
    p.set_defaults(func=cmd_ybe)

    p = sub.add_parser("scatter", help="run a scattering experiment and compare with the prediction")
    common(p)
    p.add_argument("--rule", type=_capacity, default=None, help="evolution capacity, or 'inf' (default)")
    p.add_argument("--max-steps", type=int, default=400)
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("tableau", help="print the row-bumping tableau of states")
    common(p)
    p.set_defaults(func=cmd_tableau)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 1


if __name__ == "__main__":
    sys.exit(main())

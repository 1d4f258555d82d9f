"""Command-line interface: ``vecpack {gen,pack,verify,oracle,compare,bench}``.

Exit codes: 0 ok, 1 verification failed, 2 usage or parse error,
3 infeasible input, 4 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import files
from .baselines import pack_ffd, pack_first_fit, pack_reference
from .bench import run_bench
from .core import (MalformedBoundaries, NotAPermutation, Packing,
                   PackingError, approximation_bound, verify)
from .generators import DISTRIBUTIONS, generate_weights
from .oracle import DEFAULT_LIMIT, InstanceTooLarge, lower_bound, optimal_bins
from .packdisks import InvariantViolation, pack
from .threedim import pack3, split_next_fit

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_INTERNAL = range(5)

ALGORITHMS = ("linear", "reference", "ff", "ffd")


class CommandError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def run_algorithm(instance, algorithm, debug=False):
    """Returns ``(Packing, Metrics or None)``.

    On 3-D input ``linear`` and ``reference`` run in two stages (2-D pack,
    then next fit on the third weight); ``ff``/``ffd`` use all weights.
    """
    if algorithm == "linear":
        if instance.dims == 3:
            return pack3(instance, debug=debug)
        return pack(instance, debug=debug)
    if algorithm == "reference":
        packing = pack_reference(instance)
        if instance.dims == 3:
            t = instance.weights[:, 2].tolist()
            bins = []
            for members in packing.bins():
                bins.extend(split_next_fit(t, members.tolist()))
            packing = Packing.from_bins(bins)
        return packing, None
    if algorithm == "ff":
        return pack_first_fit(instance), None
    if algorithm == "ffd":
        return pack_ffd(instance), None
    raise CommandError(EXIT_USAGE, f"unknown algorithm {algorithm!r}")


def build_report(instance, algorithm, packing, metrics, wall_nanos, config):
    rep = verify(instance, packing)
    out = {
        "algorithm": algorithm,
        "n": instance.n,
        "dims": instance.dims,
        "q": packing.q,
        "rho": instance.rho,
        "feasible": rep.feasible,
        "caseClass": rep.case_class,
        "perBin": [b.to_dict() for b in rep.per_bin],
        "metrics": None if metrics is None else metrics.to_dict(),
        "wallTimeNanos": wall_nanos,
        "config": config,
    }
    out.update(packing.to_dict())
    return out, rep


def _load(args):
    try:
        return files.read_instance(
            args.input, rho=getattr(args, "rho", None),
            cap_s=getattr(args, "cap_s", None),
            cap_l=getattr(args, "cap_l", None))
    except files.FormatError as exc:
        raise CommandError(EXIT_USAGE, str(exc))
    except PackingError as exc:
        raise CommandError(EXIT_INFEASIBLE, str(exc))
    except ValueError as exc:
        # bad --rho override
        raise CommandError(EXIT_USAGE, str(exc))
    except OSError as exc:
        raise CommandError(EXIT_USAGE, str(exc))


def _emit(text, path=None):
    if path:
        files.write_text(path, text)
    else:
        sys.stdout.write(text)


def cmd_gen(args):
    try:
        w = generate_weights(args.n, args.seed, args.rho_max, args.dist, args.dims)
    except ValueError as exc:
        raise CommandError(EXIT_USAGE, str(exc))
    _emit(files.format_instance(w), args.out)
    return EXIT_OK


def cmd_pack(args):
    instance = _load(args)
    t0 = time.perf_counter_ns()
    try:
        packing, metrics = run_algorithm(instance, args.algorithm,
                                         debug=args.debug_assertions)
    except InvariantViolation as exc:
        raise CommandError(EXIT_INTERNAL, f"internal assertion: {exc}")
    wall = time.perf_counter_ns() - t0
    config = {
        "input": args.input,
        "rhoOverride": args.rho,
        "debugAssertions": args.debug_assertions,
        "capS": args.cap_s,
        "capL": args.cap_l,
    }
    report, rep = build_report(instance, args.algorithm, packing, metrics,
                               wall, config)
    if not rep.feasible:
        raise CommandError(EXIT_INTERNAL, "packer produced an infeasible bin")
    _emit(files.dumps(report), args.out)
    if args.permuted_out:
        files.write_text(args.permuted_out,
                         files.format_instance(instance.weights[packing.order]))
    return EXIT_OK


def _read_packing(path, n):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        raise CommandError(EXIT_USAGE, f"cannot read {path}: {exc}")
    if isinstance(data, list):
        # bare 1-based boundaries over an already-permuted instance
        return Packing(list(range(n)), [b - 1 for b in data])
    if isinstance(data, dict) and "boundaries" in data:
        if "order" not in data:
            data = dict(data, order=list(range(1, n + 1)))
        return Packing.from_dict(data)
    raise CommandError(EXIT_USAGE, f"{path} holds neither a report nor boundaries")


def cmd_verify(args):
    instance = _load(args)
    packing = _read_packing(args.packing, instance.n)
    try:
        rep = verify(instance, packing, reference_bins=args.reference_bins)
    except (MalformedBoundaries, NotAPermutation) as exc:
        sys.stdout.write(files.dumps({"error": type(exc).__name__,
                                      "message": str(exc)}))
        return EXIT_USAGE
    sys.stdout.write(files.dumps(rep.to_dict()))
    if not rep.ok or rep.bound_ok is False:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_oracle(args):
    instance = _load(args)
    try:
        opt = optimal_bins(instance, limit=args.oracle_limit)
    except InstanceTooLarge as exc:
        raise CommandError(EXIT_USAGE, str(exc))
    _emit(files.dumps({
        "bins": opt.bins,
        "lowerBound": lower_bound(instance),
        "assignment": [b + 1 for b in opt.assignment],
        "n": instance.n,
        "rho": instance.rho,
    }), args.out)
    return EXIT_OK


def compare_rows(instance, algorithms, oracle=False, limit=DEFAULT_LIMIT):
    lb = lower_bound(instance)
    opt = None
    if oracle:
        opt = optimal_bins(instance, limit=limit).bins
    rows = []
    for name in algorithms:
        packing, metrics = run_algorithm(instance, name)
        rep = verify(instance, packing, reference_bins=opt)
        row = {
            "algorithm": name,
            "q": packing.q,
            "feasible": rep.feasible,
            "caseClass": rep.case_class,
            "lowerBound": lb,
            "ratioToLowerBound": packing.q / lb if lb else None,
            "metrics": None if metrics is None else metrics.to_dict(),
        }
        if oracle:
            row["optimum"] = opt
            row["boundLimit"] = approximation_bound(opt, instance.rho)
            row["certificate"] = (None if rep.bound_ok is None
                                  else ("PASS" if rep.bound_ok else "FAIL"))
        rows.append(row)
    return rows


def _table(rows, columns):
    def cell(v):
        if v is None:
            return "-"
        if isinstance(v, float):
            return f"{v:.4g}"
        return str(v)
    body = [[cell(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(c), *(len(b[i]) for b in body)) if body else len(c)
              for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(wd) for c, wd in zip(columns, widths))]
    lines += ["  ".join(v.ljust(wd) for v, wd in zip(b, widths)) for b in body]
    return "\n".join(lines) + "\n"


def cmd_compare(args):
    instance = _load(args)
    try:
        rows = compare_rows(instance, args.algorithms, args.oracle,
                            args.oracle_limit)
    except InstanceTooLarge as exc:
        raise CommandError(EXIT_USAGE, str(exc))
    if args.json:
        sys.stdout.write(files.dumps(rows))
    else:
        flat = []
        for r in rows:
            f = dict(r)
            for k, v in (r["metrics"] or {}).items():
                f[k] = v
            flat.append(f)
        cols = ["algorithm", "q", "feasible", "caseClass", "lowerBound",
                "ratioToLowerBound", "swaps", "cursorAdvances"]
        if args.oracle:
            cols += ["optimum", "boundLimit", "certificate"]
        sys.stdout.write(_table(flat, cols))
    return EXIT_OK


def cmd_bench(args):
    try:
        rows = run_bench(args.sizes, seed=args.seed, dist=args.dist,
                         repeats=args.repeats, rho_max=args.rho_max)
    except InvariantViolation as exc:
        raise CommandError(EXIT_INTERNAL, str(exc))
    if args.json:
        _emit(files.dumps(rows), args.out)
    else:
        _emit(_table(rows, ["n", "q", "medianNanos", "growth", "swaps",
                            "swapBudget", "cursorAdvances", "scanBudget",
                            "loopIterations"]), args.out)
    return EXIT_OK


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonnegative_int(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _fraction(text):
    v = float(text)
    if not 0 < v <= 1:
        raise argparse.ArgumentTypeError("must lie in (0, 1]")
    return v


def build_parser():
    p = argparse.ArgumentParser(prog="vecpack",
                                description="Two-dimensional vector packing.")
    sub = p.add_subparsers(dest="command", required=True)

    def instance_args(sp):
        sp.add_argument("input", help="instance CSV")
        sp.add_argument("--rho", type=float, default=None,
                        help="override rho (must be >= the largest weight)")
        sp.add_argument("--cap-s", type=float, default=None)
        sp.add_argument("--cap-l", type=float, default=None)

    g = sub.add_parser("gen", help="write a random instance CSV")
    g.add_argument("--n", type=_nonnegative_int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--rho-max", type=_fraction, default=0.5)
    g.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    g.add_argument("--dims", type=int, choices=(2, 3), default=2)
    g.add_argument("--out", default=None)
    g.set_defaults(func=cmd_gen)

    k = sub.add_parser("pack", help="pack an instance and write a JSON report")
    instance_args(k)
    k.add_argument("--algorithm", choices=ALGORITHMS, default="linear")
    k.add_argument("--debug-assertions", action="store_true")
    k.add_argument("--out", default=None)
    k.add_argument("--permuted-out", default=None,
                   help="also write the permuted instance CSV")
    k.set_defaults(func=cmd_pack)

    v = sub.add_parser("verify", help="check a packing against an instance")
    instance_args(v)
    v.add_argument("packing", help="pack report JSON or a JSON boundary list")
    v.add_argument("--reference-bins", type=_nonnegative_int, default=None)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact optimum for a small instance")
    instance_args(o)
    o.add_argument("--oracle-limit", type=_positive_int, default=DEFAULT_LIMIT)
    o.add_argument("--out", default=None)
    o.set_defaults(func=cmd_oracle)

    c = sub.add_parser("compare", help="run several algorithms side by side")
    instance_args(c)
    c.add_argument("--algorithms", nargs="+", choices=ALGORITHMS,
                   default=list(ALGORITHMS))
    c.add_argument("--oracle", action="store_true")
    c.add_argument("--oracle-limit", type=_positive_int, default=DEFAULT_LIMIT)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compare)

    b = sub.add_parser("bench", help="time the in-place packer")
    b.add_argument("--sizes", type=_positive_int, nargs="+",
                   default=[10_000, 20_000, 40_000, 80_000])
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    b.add_argument("--rho-max", type=_fraction, default=0.3)
    b.add_argument("--repeats", type=_positive_int, default=5)
    b.add_argument("--json", action="store_true")
    b.add_argument("--out", default=None)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"vecpack: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

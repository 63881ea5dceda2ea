"""Command-line front end.

Exit codes: 0 success, 1 a MATCH/MISMATCH verdict came out MISMATCH,
2 bad input.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import math
import sys
import time

import numpy as np

from . import scalars
from .demo import MAX_UNIVERSE, inclusion_exclusion, render
from .errors import IncompleteTable, LaplaceError
from .ground import MAX_DENSE, GroundSet, Subset, make_ground
from .inversion import invert_measure, invert_point, mobius_fast
from .oracle import oracle_base_measure, oracle_mobius_dense, oracle_zeta_dense
from .problem import format_rows, loads_problem, loads_table, parse_key
from .stone import BaseSet, PointMeasure, invert_base_measure
from .transform import TransformTable, zeta_fast, zeta_sparse

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2
BENCH_MIN, BENCH_MAX, BENCH_ORACLE_MAX = 4, 24, 16


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _full_table(values: dict, ground: GroundSet, kind: str) -> TransformTable:
    if len(values) != 1 << ground.size:
        raise IncompleteTable(f"table has {len(values)} of {1 << ground.size} rows")
    arr = np.empty(1 << ground.size, dtype=np.float64 if kind == scalars.FLOAT else object)
    for m, v in values.items():
        arr[m] = v
    return TransformTable(ground, arr, kind)


def cmd_transform(args) -> int:
    problem = loads_problem(_read(args.problem), close=args.close, scalar_kind=args.scalar)
    ground = problem.ground
    if args.all:
        table = zeta_fast(problem.weights)
        rows = [(ground.from_mask(m), table[m]) for m in range(len(table))]
    elif args.queries:
        qs = sorted({parse_key(ground, k).mask for k in args.queries})
        subsets = [ground.from_mask(m) for m in qs]
        rows = list(zip(subsets, zeta_sparse(problem.weights, subsets)))
    else:
        raise LaplaceError("give subset keys to evaluate or --all")
    sys.stdout.write(format_rows(rows))
    return EXIT_OK


def cmd_invert(args) -> int:
    ground = None
    if args.ground is not None:
        ground = make_ground(args.ground.split(",") if args.ground else [])
    table = loads_table(_read(args.table), scalar_kind=args.scalar, ground=ground)
    ground = table.ground

    def f(X: Subset):
        try:
            return table.values[X.mask]
        except KeyError:
            raise IncompleteTable(f"table has no row for {X}") from None

    if args.all:
        full = _full_table(table.values, ground, table.scalar_kind)
        phi = mobius_fast(full)
        sys.stdout.write(format_rows((ground.from_mask(m), phi[m]) for m in range(len(phi))))
        return EXIT_OK
    if not args.queries:
        raise LaplaceError("give subset keys to invert or --all")
    subsets = [parse_key(ground, k) for k in args.queries]
    if args.family:
        sys.stdout.write(scalars.fmt(invert_measure(f, subsets)) + "\n")
    else:
        sys.stdout.write(format_rows((A, invert_point(f, A)) for A in subsets))
    return EXIT_OK


def _agree(a, b, kind: str, scale) -> bool:
    if kind == scalars.RATIONAL:
        return a == b
    return math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-12 * max(1.0, abs(scale)))


def cmd_base_measure(args) -> int:
    problem = loads_problem(_read(args.problem), close=args.close, scalar_kind=args.scalar)
    ground = problem.ground
    V = BaseSet(parse_key(ground, args.F), tuple(parse_key(ground, k) for k in args.U))
    mu = PointMeasure(problem.family, problem.weights.values, problem.scalar_kind)
    if args.table:
        table = loads_table(_read(args.table), scalar_kind=problem.scalar_kind, ground=ground)
        f = _full_table(table.values, ground, table.scalar_kind)
    else:
        f = zeta_fast(problem.weights)
    value = invert_base_measure(f, V)
    reference = oracle_base_measure(mu, V)
    ok = _agree(value, reference, problem.scalar_kind, mu.total())
    sys.stdout.write(f"base\t{V}\n")
    sys.stdout.write(f"inverse\t{scalars.fmt(value)}\n")
    sys.stdout.write(f"oracle\t{scalars.fmt(reference)}\n")
    sys.stdout.write(("MATCH" if ok else "MISMATCH") + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def _time_ms(fn, reps: int) -> tuple[float, object]:
    best, out = math.inf, None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, (time.perf_counter() - t0) * 1000.0)
    return best, out


def cmd_bench(args) -> int:
    n, reps = args.n, args.reps
    if not BENCH_MIN <= n <= BENCH_MAX:
        raise LaplaceError(f"n must lie in [{BENCH_MIN}, {BENCH_MAX}], got {n}")
    if reps < 1:
        raise LaplaceError("reps must be positive")
    rng = np.random.default_rng(args.seed)
    phi = rng.uniform(-1.0, 1.0, 1 << n)
    t_zeta, table = _time_ms(lambda: zeta_fast(phi), reps)
    t_mob, back = _time_ms(lambda: mobius_fast(table), reps)
    lines = [f"zeta_fast,{n},{t_zeta:.3f}", f"mobius_fast,{n},{t_mob:.3f}"]
    scale = float(np.abs(phi).sum())
    ok = bool(np.allclose(back, phi, rtol=0, atol=1e-9 * scale))
    if n <= BENCH_ORACLE_MAX:
        t_zn, naive = _time_ms(lambda: oracle_zeta_dense(phi), reps)
        t_mn, naive_back = _time_ms(lambda: oracle_mobius_dense(table.values), reps)
        lines += [f"zeta_naive,{n},{t_zn:.3f}", f"mobius_naive,{n},{t_mn:.3f}"]
        ok = ok and bool(np.allclose(table.values, naive, rtol=0, atol=1e-9 * scale))
        ok = ok and bool(np.allclose(back, naive_back, rtol=0, atol=1e-9 * scale))
    sys.stdout.write("".join(line + "\n" for line in lines))
    if not ok:
        sys.stderr.write("fast and naive kernels disagree\n")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_demo_ie(args) -> int:
    sets = [frozenset(s.split(",")) if s else frozenset() for s in args.sets]
    universe = None
    if args.universe is not None:
        universe = frozenset(args.universe.split(",")) if args.universe else frozenset()
    if universe is not None and len(universe) > MAX_UNIVERSE:
        raise LaplaceError(f"universe size {len(universe)} exceeds {MAX_UNIVERSE}")
    report = inclusion_exclusion(sets, universe)
    sys.stdout.write(render(report) + "\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semilap",
        description="Laplace transform on semilattices of sets and its inverses.")
    sub = parser.add_subparsers(dest="command", required=True)
    parser.commands = sub.choices

    def scalar_flag(p):
        p.add_argument("--scalar", choices=scalars.KINDS, default=None,
                       help="override the scalar kind (default: from the input)")

    p = sub.add_parser("transform", help="evaluate f(X) = sum of weights of members inside X")
    p.add_argument("problem", help="problem file (JSON), or - for stdin")
    p.add_argument("queries", nargs="*", help="subset keys, e.g. 'a,b' ('' for the empty set)")
    p.add_argument("--all", action="store_true", help=f"every subset (ground size <= {MAX_DENSE})")
    p.add_argument("--close", action="store_true", help="close the family under union first")
    scalar_flag(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("invert", help="recover weights or family measures from a transform table")
    p.add_argument("table", help="table file with 'key<TAB>value' rows, or - for stdin")
    p.add_argument("queries", nargs="*", help="subset keys")
    p.add_argument("--all", action="store_true", help="invert every subset (needs a complete table)")
    p.add_argument("--family", action="store_true", help="treat the queries as one family and sum")
    p.add_argument("--ground", default=None,
                   help="comma-separated ground labels (default: order of first appearance)")
    scalar_flag(p)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("base-measure", help="measure of V(F; U1..Un) from the transform, with oracle check")
    p.add_argument("problem")
    p.add_argument("--F", required=True, help="subset key of the excluded set F")
    p.add_argument("--U", action="append", default=[], help="subset key of a required-hit set (repeatable)")
    p.add_argument("--table", default=None, help="use this transform table instead of computing one")
    p.add_argument("--close", action="store_true")
    scalar_flag(p)
    p.set_defaults(func=cmd_base_measure)

    p = sub.add_parser("bench", help="time the dense kernels against the naive oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("demo-ie", help="|A∪B∪C| by inclusion-exclusion and by inversion")
    p.add_argument("sets", nargs="+", help="sets as comma-separated element names (usually three)")
    p.add_argument("--universe", default=None, help="comma-separated universe (default: union of the sets)")
    p.set_defaults(func=cmd_demo_ie)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    if argv and argv[0] in parser.commands:
        # subcommand parsers allow flags between positional subset keys
        args = parser.commands[argv[0]].parse_intermixed_args(argv[1:])
    else:
        args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LaplaceError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front door.

    ringmul mul --a A.json --b B.json [--strategy auto] [--ring int|mod:P]
                [--out C.json] [--report]
    ringmul table --lmax L --nmax N --mmax M [--format csv|json]
    ringmul verify [--suite symbolic|random|counts|all] [--seed S]
                [--max-shape L,N,M]
    ringmul bench --shape l,n,m [--ring int:BITS|mod:P] [--reps R]
                [--format csv|json] [--strategy NAME]

Matrix files are JSON objects {"rows": R, "cols": C, "data": [...]} with
row-major integer entries (decimal strings are accepted and are required
beyond 53-bit magnitude); modular matrices carry an extra "modulus"
field.  A plain-text alternative is accepted on input: first line
"R C", then R whitespace-separated rows.

Exit codes: 0 success, 1 verification failure, 2 input/shape error,
3 capability error.  No environment variables are consulted; the
default seed is 0.
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time

from . import verify
from .dispatch import Strategy, choose_strategy, multiply, predict_count
from .errors import (
    CountMismatch,
    ExactHalveUnavailable,
    ShapeError,
    UnsupportedShape,
)
from .matrices import matrix_from_ints
from .rings import IntegerRing, ModularRing

_CONCRETE = [s for s in Strategy if s is not Strategy.AUTO]
_JSON_SAFE = 1 << 53


class _InputError(Exception):
    pass


def _parse_entry(v, where):
    if isinstance(v, bool):
        raise _InputError(f"{where}: boolean entry {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v, 10)
        except ValueError:
            raise _InputError(f"{where}: bad integer literal {v!r}") from None
    if isinstance(v, float):
        raise _InputError(f"{where}: non-integer entry {v!r} (exact arithmetic only)")
    raise _InputError(f"{where}: unsupported entry {v!r}")


def _load_matrix_file(path):
    """Parse a matrix file; returns (rows, cols, entries, modulus-or-None)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise _InputError(f"{path}: {e}") from None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise _InputError(f"{path}: invalid JSON ({e})") from None
        try:
            rows, cols, data = obj["rows"], obj["cols"], obj["data"]
        except (KeyError, TypeError):
            raise _InputError(f"{path}: need keys rows, cols, data") from None
        if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
            raise _InputError(f"{path}: rows/cols must be positive integers")
        if not isinstance(data, list) or len(data) != rows * cols:
            raise _InputError(f"{path}: data must hold {rows * cols} entries")
        entries = [_parse_entry(v, path) for v in data]
        modulus = obj.get("modulus")
        if modulus is not None and (not isinstance(modulus, int) or modulus < 2):
            raise _InputError(f"{path}: modulus must be an integer >= 2")
        return rows, cols, entries, modulus
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise _InputError(f"{path}: empty matrix file")
    head = lines[0].split()
    if len(head) != 2:
        raise _InputError(f"{path}: first line must be 'ROWS COLS'")
    try:
        rows, cols = int(head[0]), int(head[1])
    except ValueError:
        raise _InputError(f"{path}: first line must be 'ROWS COLS'") from None
    if rows < 1 or cols < 1 or len(lines) != rows + 1:
        raise _InputError(f"{path}: expected {rows} data rows")
    entries = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != cols:
            raise _InputError(f"{path}: row has {len(toks)} entries, expected {cols}")
        entries.extend(_parse_entry(t, path) for t in toks)
    return rows, cols, entries, None


def _encode_entry(v):
    return v if -_JSON_SAFE < v < _JSON_SAFE else str(v)


def _matrix_json(matrix, modulus=None):
    if modulus is None:
        data = [_encode_entry(v) for v in matrix.data]
        obj = {"rows": matrix.rows, "cols": matrix.cols, "data": data}
    else:
        data = [_encode_entry(v.value) for v in matrix.data]
        obj = {"rows": matrix.rows, "cols": matrix.cols, "modulus": modulus, "data": data}
    return json.dumps(obj)


def _fail(code, message):
    print(f"error: {message}", file=sys.stderr)
    return code


def cmd_mul(args):
    try:
        ra, ca, ea, mod_a = _load_matrix_file(args.a)
        rb, cb, eb, mod_b = _load_matrix_file(args.b)
    except _InputError as e:
        return _fail(2, str(e))

    if mod_a is not None and mod_b is not None and mod_a != mod_b:
        return _fail(2, f"moduli disagree: {mod_a} vs {mod_b}")
    file_mod = mod_a if mod_a is not None else mod_b

    if args.ring == "int":
        modulus = file_mod
    elif args.ring.startswith("mod:"):
        try:
            modulus = int(args.ring[4:], 10)
        except ValueError:
            return _fail(2, f"bad ring spec {args.ring!r}")
        if modulus < 2:
            return _fail(2, f"modulus must be >= 2, got {modulus}")
        if file_mod is not None and file_mod != modulus:
            return _fail(2, f"file modulus {file_mod} conflicts with --ring {args.ring}")
    else:
        return _fail(2, f"bad ring spec {args.ring!r} (use int or mod:P)")

    ring = ModularRing(modulus) if modulus is not None else IntegerRing()
    A = matrix_from_ints(ring, [ea[i * ca : (i + 1) * ca] for i in range(ra)])
    B = matrix_from_ints(ring, [eb[i * cb : (i + 1) * cb] for i in range(rb)])
    if ca != rb:
        return _fail(2, f"inner dimensions disagree: {ra}x{ca} times {rb}x{cb}")

    strategy = Strategy(args.strategy)
    try:
        product, report = multiply(A, B, strategy)
    except UnsupportedShape as e:
        return _fail(3, f"strategy {args.strategy} does not cover {ra}x{ca} times {rb}x{cb}: {e}")
    except ExactHalveUnavailable as e:
        return _fail(3, f"ring {ring.name} lacks a capability needed by {args.strategy}: {e}")

    payload = _matrix_json(product, modulus)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    if args.report:
        print(
            json.dumps(
                {
                    "strategy": report.strategy.value,
                    "l": report.l,
                    "n": report.n,
                    "m": report.m,
                    "predicted": report.predicted,
                    "observed": report.observed,
                }
            )
        )
    return 0


_TABLE_COLUMNS = ("l", "n", "m", "paper", "waksman_odd", "naive", "delta")


def table_rows(lmax, nmax, mmax):
    """Predicted-count comparison rows for every (l, odd n >= 3, m >= 3)."""
    rows = []
    for l in range(1, lmax + 1):
        for n in range(3, nmax + 1, 2):
            for m in range(3, mmax + 1):
                ours = predict_count(Strategy.GENERAL_ODD, l, n, m)
                wak = predict_count(Strategy.WAKSMAN_ODD, l, n, m)
                rows.append(
                    {
                        "l": l,
                        "n": n,
                        "m": m,
                        "paper": ours,
                        "waksman_odd": wak,
                        "naive": l * n * m,
                        "delta": wak - ours,
                    }
                )
    return rows


def cmd_table(args):
    if args.lmax < 1 or args.nmax < 1 or args.mmax < 1:
        return _fail(2, "table bounds must be >= 1")
    rows = table_rows(args.lmax, args.nmax, args.mmax)
    if args.format == "json":
        print(json.dumps(rows))
    else:
        print(",".join(_TABLE_COLUMNS))
        for row in rows:
            print(",".join(str(row[c]) for c in _TABLE_COLUMNS))
    return 0


def _parse_triple(text, flag):
    parts = text.split(",")
    if len(parts) != 3:
        raise _InputError(f"{flag} must be three comma-separated integers, got {text!r}")
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise _InputError(f"{flag} must be three comma-separated integers, got {text!r}") from None
    if any(v < 1 for v in vals):
        raise _InputError(f"{flag} values must be >= 1, got {text!r}")
    return vals


def _supported_shapes(lmax, nmax, mmax):
    for strategy in _CONCRETE:
        for l in range(1, lmax + 1):
            for n in range(1, nmax + 1):
                for m in range(1, mmax + 1):
                    try:
                        predict_count(strategy, l, n, m)
                    except UnsupportedShape:
                        continue
                    yield strategy, l, n, m


def _symbolic_shapes(lmax, nmax, mmax):
    for l in range(1, min(lmax, 4) + 1):
        yield Strategy.CORE3, l, 3, 3
    for l in range(1, min(lmax, 3) + 1):
        for n in range(3, min(nmax, 7) + 1, 2):
            for m in range(3, min(mmax, 7) + 1):
                yield Strategy.GENERAL_ODD, l, n, m
    small = range(1, min(lmax, 3, mmax) + 1)
    for n in range(2, min(nmax, 6) + 1, 2):
        for l in small:
            for m in small:
                yield Strategy.WAKSMAN_EVEN, l, n, m
                yield Strategy.WINOGRAD_EVEN, l, n, m
    for n in (3, 5):
        if n > nmax:
            continue
        for l in small:
            for m in small:
                yield Strategy.WAKSMAN_ODD, l, n, m


def _verify_counts(lmax, nmax, mmax, seed):
    checks = 0
    failures = []
    for strategy, l, n, m in _supported_shapes(lmax, nmax, mmax):
        checks += 1
        try:
            verify.count_audit(strategy, l, n, m, seed=seed)
        except CountMismatch as e:
            failures.append(
                {
                    "strategy": strategy.value,
                    "shape": [l, n, m],
                    "predicted": e.predicted,
                    "observed": e.observed,
                }
            )
    return checks, failures


def _verify_random(lmax, nmax, mmax, seed):
    checks = 0
    failures = []
    for strategy, l, n, m in _supported_shapes(lmax, nmax, mmax):
        checks += 1
        report = verify.randomized_check(strategy, l, n, m, trials=8, seed=seed)
        if not report.ok:
            failures.append(
                {
                    "strategy": strategy.value,
                    "shape": [l, n, m],
                    "witness": {
                        "a": report.mismatch.a_rows,
                        "b": report.mismatch.b_rows,
                        "got": report.mismatch.got_rows,
                        "want": report.mismatch.want_rows,
                    },
                }
            )
    return checks, failures


def _verify_symbolic(lmax, nmax, mmax, seed):
    checks = 0
    failures = []
    for strategy, l, n, m in _symbolic_shapes(lmax, nmax, mmax):
        checks += 1
        report = verify.symbolic_verify(strategy, l, n, m)
        if not report.ok:
            failures.append(
                {
                    "strategy": strategy.value,
                    "shape": [l, n, m],
                    "witness": {
                        "entry": list(report.entry),
                        "monomial": report.monomial,
                        "coefficient": report.coefficient,
                    },
                }
            )
    return checks, failures


def cmd_verify(args):
    try:
        lmax, nmax, mmax = _parse_triple(args.max_shape, "--max-shape")
    except _InputError as e:
        return _fail(2, str(e))
    runners = {
        "counts": _verify_counts,
        "random": _verify_random,
        "symbolic": _verify_symbolic,
    }
    wanted = list(runners) if args.suite == "all" else [args.suite]
    summary = {
        "seed": args.seed,
        "max_shape": [lmax, nmax, mmax],
        "suites": {},
        "ok": True,
    }
    for name in wanted:
        checks, failures = runners[name](lmax, nmax, mmax, args.seed)
        summary["suites"][name] = {
            "checks": checks,
            "failures": failures,
            "ok": not failures,
        }
        if failures:
            summary["ok"] = False
    print(json.dumps(summary, indent=2))
    return 0 if summary["ok"] else 1


def _bench_ring(spec):
    if spec.startswith("int:"):
        bits = int(spec[4:], 10)
        if bits < 1:
            raise _InputError(f"bad bit size in {spec!r}")
        ring = IntegerRing()
        return ring, lambda rng: rng.getrandbits(bits) - (1 << (bits - 1))
    if spec.startswith("mod:"):
        modulus = int(spec[4:], 10)
        if modulus < 2:
            raise _InputError(f"modulus must be >= 2 in {spec!r}")
        ring = ModularRing(modulus)
        return ring, lambda rng: ring.from_int(rng.randrange(modulus))
    raise _InputError(f"bad ring spec {spec!r} (use int:BITS or mod:P)")


def _needs_halving(strategy, n):
    if strategy is Strategy.WAKSMAN_EVEN:
        return True
    if strategy is Strategy.WAKSMAN_ODD:
        return n > 1
    if strategy is Strategy.GENERAL_ODD:
        return n > 3
    return False


def cmd_bench(args):
    try:
        l, n, m = _parse_triple(args.shape, "--shape")
        ring, draw = _bench_ring(args.ring)
    except (_InputError, ValueError) as e:
        return _fail(2, str(e))

    if args.strategy:
        strategy = Strategy(args.strategy)
        try:
            predict_count(strategy, l, n, m)
        except UnsupportedShape as e:
            return _fail(2, f"shape ({l},{n},{m}) unsupported by {args.strategy}: {e}")
        if _needs_halving(strategy, n) and not ring.supports_halving:
            return _fail(3, f"ring {ring.name} lacks exact halving needed by {args.strategy}")
        strategies = [strategy]
    else:
        strategies = []
        for s in _CONCRETE:
            try:
                predict_count(s, l, n, m)
            except UnsupportedShape:
                continue
            if _needs_halving(s, n) and not ring.supports_halving:
                continue
            strategies.append(s)

    rng = random.Random(0)
    from .matrices import Matrix

    A = Matrix(ring, l, n, [draw(rng) for _ in range(l * n)])
    B = Matrix(ring, n, m, [draw(rng) for _ in range(n * m)])

    from .dispatch import kernel_for

    rows = []
    for s in strategies:
        kernel = kernel_for(s)
        times = []
        for _ in range(args.reps):
            t0 = time.perf_counter()
            kernel(A, B)
            times.append(time.perf_counter() - t0)
        rows.append(
            {
                "strategy": s.value,
                "l": l,
                "n": n,
                "m": m,
                "reps": args.reps,
                "median_s": statistics.median(times),
                "spread_s": max(times) - min(times),
            }
        )
    columns = ("strategy", "l", "n", "m", "reps", "median_s", "spread_s")
    if args.format == "json":
        print(json.dumps(rows))
    else:
        print(",".join(columns))
        for row in rows:
            print(",".join(str(row[c]) for c in columns))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ringmul",
        description="Exact matrix products over commutative rings with "
        "audited multiplication counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    mul = sub.add_parser("mul", help="multiply two matrix files")
    mul.add_argument("--a", required=True, help="left matrix file (JSON or text)")
    mul.add_argument("--b", required=True, help="right matrix file (JSON or text)")
    mul.add_argument(
        "--strategy",
        default="auto",
        choices=[s.value for s in Strategy],
        help="multiplication schedule (default: auto)",
    )
    mul.add_argument("--ring", default="int", help="int (default) or mod:P")
    mul.add_argument("--out", help="write the product here instead of stdout")
    mul.add_argument("--report", action="store_true", help="also print the cost report")
    mul.set_defaults(func=cmd_mul)

    table = sub.add_parser("table", help="predicted-count comparison table")
    table.add_argument("--lmax", type=int, required=True)
    table.add_argument("--nmax", type=int, required=True)
    table.add_argument("--mmax", type=int, required=True)
    table.add_argument("--format", default="csv", choices=("csv", "json"))
    table.set_defaults(func=cmd_table)

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("--suite", default="all", choices=("symbolic", "random", "counts", "all"))
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--max-shape", default="3,7,6", help="L,N,M bounds for the suites")
    ver.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="wall-clock strategy comparison")
    bench.add_argument("--shape", required=True, help="l,n,m")
    bench.add_argument("--ring", default="int:64", help="int:BITS or mod:P")
    bench.add_argument("--reps", type=int, default=5)
    bench.add_argument("--format", default="csv", choices=("csv", "json"))
    bench.add_argument(
        "--strategy",
        default=None,
        choices=[s.value for s in _CONCRETE],
        help="bench a single strategy instead of all applicable ones",
    )
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ShapeError as e:
        return _fail(2, str(e))
    except ExactHalveUnavailable as e:
        return _fail(3, str(e))


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()

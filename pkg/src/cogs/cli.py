"""
Command line interface for cyclic orthonormal generators.

Vectors are read as JSON (``{"n": 3, "components": [...]}``) or as a
single CSV row; phases as JSON (``{"n": 3, "theta": [...]}``). Inputs
come from a file path or from stdin when the path is omitted or ``-``.
Machine-readable output goes to stdout, human-readable text to stderr.

Exit codes: 0 success or cog, 1 not a cog / constraint violation /
ambiguous projection, 2 usage or parse error, 3 internal invariant breach.
"""

import argparse
import csv
import io
import json
import math
import os
import statistics
import sys
import time

from . import __version__
from .core import TWO_PI, Tolerance, DEFAULT_ABS_TOL, DEFAULT_ANGLE_TOL
from .errors import (
    AmbiguousProjectionError,
    CogError,
    EnumerationTooLargeError,
    InvalidArgumentError,
    InvariantBreachError,
    NotACogError,
    PhaseConstraintError,
)
from .extract import canonical_form
from .space import SamplerConfig, distance, enumerate_grid, nearest_cog, sample_cogs
from .synth import Branch, FreePhaseParams, complete_phases, num_free_angles, synthesize, validate_phases
from .verify import is_cog_direct, is_cog_gram, is_cog_spectral, methods_agree

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

TOL_ENV_VAR = "COG_DEFAULT_TOL"
SIG_DIGITS = 12
# cog components lie in [-1, 1]; anything below this prints as 0
ZERO_SNAP = 5e-13


class UsageError(Exception):
    """Bad flags or unparseable input; maps to exit code 2."""


class NegativeResult(Exception):
    """Domain-negative outcome; maps to exit code 1."""


# ---------------------------------------------------------------- formatting

def _round_component(x):
    if abs(x) < ZERO_SNAP:
        return 0.0
    return float(f"{x:.{SIG_DIGITS}g}")


def _round_angle(x):
    y = float(f"{x:.{SIG_DIGITS}g}")
    return 0.0 if y >= TWO_PI else y


def format_number(x):
    return f"{x:.{SIG_DIGITS}g}"


def vector_to_csv(components):
    return ",".join(format_number(_round_component(x)) for x in components)


def vector_to_obj(components):
    comps = [_round_component(float(x)) for x in components]
    return {"n": len(comps), "components": comps}


def _dump(obj, out):
    json.dump(obj, out)
    out.write("\n")


# ---------------------------------------------------------------- parsing

def _read_text(path):
    if path is None or path == "-":
        return sys.stdin.read(), "<stdin>"
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read(), path
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _infer_format(path, text, override):
    if override:
        return override
    if path and path != "-":
        ext = os.path.splitext(path)[1].lower()
        if ext == ".json":
            return "json"
        if ext == ".csv":
            return "csv"
    return "json" if text.lstrip().startswith("{") else "csv"


def _finite(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise UsageError(f"{where}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise UsageError(f"{where}: value must be finite")
    return value


def _load_json_object(text, name):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{name}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise UsageError(f"{name}: top-level JSON value must be an object")
    return obj


def _json_array_field(obj, field, name):
    if field not in obj:
        raise UsageError(f"{name}: missing field '{field}'")
    arr = obj[field]
    if not isinstance(arr, list):
        raise UsageError(f"{name}: field '{field}' must be an array")
    values = [_finite(x, f"{name}: field '{field}'[{i}]") for i, x in enumerate(arr)]
    if "n" in obj:
        n = obj["n"]
        if isinstance(n, bool) or not isinstance(n, int):
            raise UsageError(f"{name}: field 'n' must be an integer")
        if n != len(values):
            raise UsageError(f"{name}: field 'n' is {n} but '{field}' has {len(values)} entries")
    return values


def parse_vector(text, name="<input>", fmt="csv"):
    """Parse a VectorFile payload into a list of floats."""
    if fmt == "json":
        return _json_array_field(_load_json_object(text, name), "components", name)
    rows = [(i, row) for i, row in enumerate(csv.reader(io.StringIO(text)), start=1)
            if any(cell.strip() for cell in row)]
    if not rows:
        raise UsageError(f"{name}: no data")
    if len(rows) > 1:
        raise UsageError(f"{name}: line {rows[1][0]}: expected a single row of numbers")
    lineno, row = rows[0]
    values = []
    for col, cell in enumerate(row, start=1):
        try:
            values.append(_finite(float(cell), f"{name}: line {lineno}, column {col}"))
        except ValueError:
            raise UsageError(f"{name}: line {lineno}, column {col}: cannot parse {cell.strip()!r} as a number") from None
    return values


def read_vector(path, fmt=None):
    text, name = _read_text(path)
    return parse_vector(text, name, _infer_format(path, text, fmt))


def read_phases(path):
    text, name = _read_text(path)
    return _json_array_field(_load_json_object(text, name), "theta", name)


def _tolerance(args):
    abs_tol = DEFAULT_ABS_TOL
    env = os.environ.get(TOL_ENV_VAR)
    if env is not None:
        try:
            abs_tol = float(env)
        except ValueError:
            raise UsageError(f"{TOL_ENV_VAR}={env!r} is not a decimal number") from None
    if getattr(args, "tol", None) is not None:
        abs_tol = args.tol
    angle_tol = getattr(args, "angle_tol", None) or DEFAULT_ANGLE_TOL
    try:
        return Tolerance(abs_tol=abs_tol, angle_tol=angle_tol)
    except InvalidArgumentError as exc:
        raise UsageError(str(exc)) from None


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def parse_free(spec, N, half_branch=None):
    """Parse ``"branch[,phi_1,...][,half_branch]"`` into FreePhaseParams.

    For even N the trailing half branch may be left out of ``spec`` and
    given as ``half_branch`` instead.
    """
    tokens = [t.strip() for t in spec.split(",") if t.strip()]
    M = num_free_angles(N)
    need = 1 + M + (1 if N % 2 == 0 else 0)
    if N % 2 == 0 and half_branch is not None and len(tokens) == need - 1:
        tokens.append(half_branch)
    if len(tokens) != need:
        shape = "branch" + ",phi" * M + (",half_branch" if N % 2 == 0 else "")
        raise UsageError(f"--free for N={N} expects {need} fields ({shape}), got {len(tokens)}")
    try:
        branch0 = Branch.parse(tokens[0])
        angles = tuple(_finite(float(t), f"--free field {i + 2}") for i, t in enumerate(tokens[1 : 1 + M]))
        half = Branch.parse(tokens[-1]) if N % 2 == 0 else None
    except (InvalidArgumentError, ValueError) as exc:
        raise UsageError(f"--free: {exc}") from None
    return FreePhaseParams(N, branch0, angles, half)


# ---------------------------------------------------------------- commands

def _emit_vectors(rows, as_json, out):
    """rows: iterable of (components, extra dict or None)."""
    if as_json:
        payload = []
        for comps, extra in rows:
            obj = vector_to_obj(comps)
            if extra:
                obj.update(extra)
            payload.append(obj)
        _dump(payload, out)
    else:
        for comps, _ in rows:
            out.write(vector_to_csv(comps) + "\n")


def cmd_verify(args, out, err):
    tol = _tolerance(args)
    v = read_vector(args.input, args.format)
    methods = ["direct", "spectral"] if args.method == "both" else [args.method]
    fns = {"direct": is_cog_direct, "spectral": is_cog_spectral, "gram": is_cog_gram}
    try:
        reports = {m: fns[m](v, tol) for m in methods}
    except InvalidArgumentError as exc:
        raise UsageError(str(exc)) from None
    for r in reports.values():
        err.write(r.summary() + "\n")
    authoritative = reports.get("direct") or next(iter(reports.values()))
    agree = True
    if len(reports) == 2:
        agree = methods_agree(reports["direct"], reports["spectral"])
    _dump({
        "is_cog": authoritative.is_cog,
        "methods_agree": agree,
        "reports": {m: r.to_dict() for m, r in reports.items()},
    }, out)
    if not agree:
        err.write("direct and spectral verification disagree outside the tolerance band\n")
        return EXIT_INTERNAL
    return EXIT_OK if authoritative.is_cog else EXIT_NEGATIVE


def cmd_extract(args, out, err):
    tol = _tolerance(args)
    v = read_vector(args.input, args.format)
    try:
        result = canonical_form(v, tol)
    except InvalidArgumentError as exc:
        raise UsageError(str(exc)) from None
    except NotACogError as exc:
        if exc.report is not None:
            err.write(json.dumps(exc.report.to_dict()) + "\n")
        raise NegativeResult(str(exc)) from None
    theta = [_round_angle(float(t)) for t in result.theta]
    _dump({"n": len(theta), "theta": theta}, out)
    return EXIT_OK


def cmd_synth(args, out, err):
    tol = _tolerance(args)
    if args.free is not None:
        if args.n is None:
            raise UsageError("--free requires --n")
        try:
            rep = complete_phases(parse_free(args.free, args.n, args.half_branch))
        except InvalidArgumentError as exc:
            raise UsageError(str(exc)) from None
    else:
        theta = read_phases(args.input)
        try:
            rep = validate_phases(theta, tol)
        except InvalidArgumentError as exc:
            raise UsageError(str(exc)) from None
        except PhaseConstraintError as exc:
            raise NegativeResult(f"{exc.kind} constraint violated at index {exc.index}: {exc}") from None
    cog = synthesize(rep, tol)
    _emit_single(cog.vector, args.json, out)
    return EXIT_OK


def _emit_single(components, as_json, out, extra=None):
    if as_json:
        obj = vector_to_obj(components)
        if extra:
            obj.update(extra)
        _dump(obj, out)
    else:
        out.write(vector_to_csv(components) + "\n")


def cmd_sample(args, out, err):
    tol = _tolerance(args)
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    try:
        cfg = SamplerConfig(args.n, args.seed, args.branch, args.half_branch)
    except InvalidArgumentError as exc:
        raise UsageError(str(exc)) from None
    rows = ((cog.vector, {"params": p.to_dict()}) for cog, p in sample_cogs(cfg, args.count, tol))
    _emit_vectors(rows, args.json, out)
    return EXIT_OK


def cmd_grid(args, out, err):
    tol = _tolerance(args)
    try:
        grid = enumerate_grid(args.n, args.points, args.branch, args.half_branch, cap=args.cap, tol=tol)
    except InvalidArgumentError as exc:
        raise UsageError(str(exc)) from None
    except EnumerationTooLargeError as exc:
        raise NegativeResult(str(exc)) from None
    _emit_vectors(((cog.vector, {"params": p.to_dict()}) for cog, p in grid), args.json, out)
    return EXIT_OK


def cmd_nearest(args, out, err):
    tol = _tolerance(args)
    v = read_vector(args.input, args.format)
    policy = args.ties.replace("-", "_")
    try:
        cog = nearest_cog(v, policy, tol)
    except InvalidArgumentError as exc:
        raise UsageError(str(exc)) from None
    except AmbiguousProjectionError as exc:
        raise NegativeResult(f"ambiguous projection at bin {exc.bin}: {exc}") from None
    dist = _round_component(distance(v, cog))
    err.write(f"distance {format_number(dist)}\n")
    _emit_single(cog.vector, args.json, out, {"distance": dist})
    return EXIT_OK


def _time_call(fn, *a):
    t0 = time.perf_counter()
    result = fn(*a)
    return time.perf_counter() - t0, result


def cmd_bench(args, out, err):
    tol = _tolerance(args)
    if not args.n_list or any(n < 2 for n in args.n_list):
        raise UsageError("--n-list values must all be at least 2")
    if args.reps < 1:
        raise UsageError("--reps must be at least 1")
    methods = ["direct", "spectral"] if args.method == "both" else [args.method]
    fns = {"direct": is_cog_direct, "spectral": is_cog_spectral}
    results = []
    all_agree = True
    for N in args.n_list:
        cog, _ = next(sample_cogs(SamplerConfig(N, args.seed), 1, tol))
        times = {m: [] for m in methods}
        agreed = 0
        for _ in range(args.reps):
            reports = {}
            for m in methods:
                dt, reports[m] = _time_call(fns[m], cog.vector, tol)
                times[m].append(dt)
            if len(methods) == 2:
                agreed += methods_agree(reports["direct"], reports["spectral"])
        row = {"n": N, "reps": args.reps}
        for m in methods:
            row[f"{m}_median_s"] = statistics.median(times[m])
        if len(methods) == 2:
            row["agreement"] = agreed / args.reps
            row["spectral_faster"] = row["spectral_median_s"] < row["direct_median_s"]
            all_agree &= agreed == args.reps
        results.append(row)
    err.write(_bench_table(results, methods))
    _dump({"method": args.method, "all_agree": all_agree, "results": results}, out)
    if not all_agree:
        err.write("verification methods disagreed on a synthesized cog\n")
        return EXIT_INTERNAL
    return EXIT_OK


def _bench_table(results, methods):
    head = f"{'N':>7}" + "".join(f"{m + ' median (s)':>22}" for m in methods)
    if len(methods) == 2:
        head += f"{'agreement':>12}{'faster':>10}"
    lines = [head]
    for row in results:
        line = f"{row['n']:>7}" + "".join(f"{row[m + '_median_s']:>22.6e}" for m in methods)
        if len(methods) == 2:
            faster = "spectral" if row["spectral_faster"] else "direct"
            line += f"{row['agreement']:>12.0%}{faster:>10}"
        lines.append(line)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- entry point

def build_parser():
    parser = argparse.ArgumentParser(
        prog="cog",
        description="Verify, extract, synthesize and sample cyclic orthonormal generators.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="input file, '-' or omitted for stdin")
            p.add_argument("--format", choices=("json", "csv"), help="input format (default: from extension)")
        p.add_argument("--tol", type=float, help=f"absolute tolerance (default {DEFAULT_ABS_TOL:g} or ${TOL_ENV_VAR})")
        p.add_argument("--angle-tol", type=float, help=f"angle tolerance in radians (default {DEFAULT_ANGLE_TOL:g})")

    p = sub.add_parser("verify", help="test whether a vector is a cog")
    common(p)
    p.add_argument("--method", choices=("direct", "spectral", "both", "gram"), default="both")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extract", help="print the phase representation of a cog")
    common(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("synth", help="build a cog from phases")
    p.add_argument("input", nargs="?", default="-", help="phase JSON file, '-' or omitted for stdin")
    p.add_argument("--free", help="chart coordinates 'branch[,phi_1,...][,half_branch]'")
    p.add_argument("--n", type=int, help="dimension, required with --free")
    p.add_argument("--half-branch", choices=("plus", "minus"),
                   help="theta_{N/2} branch for even N when not given in --free")
    p.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
    common(p, with_input=False)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("sample", help="draw random cogs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--branch", choices=("fixed_plus", "fixed_minus", "random"), default="random")
    p.add_argument("--half-branch", choices=("fixed_plus", "fixed_minus", "random"),
                   help="policy for theta_{N/2} when N is even (default: same as --branch)")
    p.add_argument("--json", action="store_true", help="emit a JSON array instead of CSV lines")
    common(p, with_input=False)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("grid", help="enumerate cogs on a regular lattice of the parameter chart")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", type=int, required=True, help="lattice points per free angle")
    p.add_argument("--branch", choices=("fixed_plus", "fixed_minus", "both"), default="both")
    p.add_argument("--half-branch", choices=("fixed_plus", "fixed_minus", "both"))
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("--json", action="store_true", help="emit a JSON array instead of CSV lines")
    common(p, with_input=False)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("nearest", help="project a vector onto the nearest cog")
    common(p)
    p.add_argument("--ties", choices=("error", "unit-phase"), default="error")
    p.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
    p.set_defaults(func=cmd_nearest)

    p = sub.add_parser("bench", help="time direct against spectral verification")
    p.add_argument("--n-list", type=_int_list, default=[64, 256, 1024])
    p.add_argument("--reps", type=int, default=10)
    p.add_argument("--method", choices=("both", "direct", "spectral"), default="both")
    p.add_argument("--seed", type=int, default=0)
    common(p, with_input=False)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, stdout=None, stderr=None):
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"cog {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except NegativeResult as exc:
        err.write(f"cog {args.command}: {exc}\n")
        return EXIT_NEGATIVE
    except InvariantBreachError as exc:
        err.write(f"cog {args.command}: internal invariant breach: {exc}\n")
        return EXIT_INTERNAL
    except CogError as exc:
        err.write(f"cog {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

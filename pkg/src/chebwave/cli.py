"""
Command-line interface.

    chebwave filter   --kind 2 --order 3
    chebwave response --kind 1 --order 3 --grid 512 > resp.csv
    chebwave check    --kind 2 --order 7
    chebwave cascade  --kind 2 --order 5 --iterations 4
    chebwave generate --signal bumps --length 4096 --snr 10 --seed 0 --clean-out clean.csv > noisy.csv
    chebwave dwt      noisy.csv --kind 2 --order 3 --levels 3 > tree.csv
    chebwave idwt     tree.csv > rec.csv
    chebwave denoise  noisy.csv --kind 2 --order 3 --levels 2 --reference clean.csv
    chebwave sweep    --kind 1 --max-order 63 --format md

Exit codes: 0 success, 1 usage or input error, 2 computation failure.
"""

import argparse
import sys

import numpy as np

from . import __version__
from .cascade import EigenSolverError, cascade_iterate, condition_e_sweep
from .denoise import DenoiseConfig, ThresholdMode, denoise
from .dwt import BoundaryMode, DecompositionTree, analyze, synthesize
from .filterbank import analyze_bank, build_bank
from .filters import frequency_response, make_filter
from .report import build_report, fmt_float
from .signals import SIGNALS, add_noise, snr_db

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt_data(x):
    """Shortest repr that round-trips the float exactly."""
    s = repr(float(x))
    return "0.0" if s == "-0.0" else s


# ---------------------------------------------------------------------------
# CSV I/O
# ---------------------------------------------------------------------------

def read_signal(path):
    """One sample per line; blank lines and ``#`` comments are skipped."""
    values = []
    with _open_in(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                v = float(line)
            except ValueError:
                raise UsageError(f"{path}:{lineno}: not a number: {line!r}") from None
            if not np.isfinite(v):
                raise UsageError(f"{path}:{lineno}: non-finite sample {line!r}")
            values.append(v)
    if not values:
        raise UsageError(f"{path}: no samples")
    return np.array(values)


def format_signal(x, header=None):
    lines = [f"# {header}"] if header else []
    lines.extend(fmt_data(v) for v in x)
    return "\n".join(lines) + "\n"


def format_tree(tree, kind, order, k):
    meta = (
        f"kind={kind} order={order} k={k} levels={tree.levels} "
        f"mode={tree.boundary_mode.value} original_length={tree.original_length} "
        f"lengths={';'.join(str(n) for n in tree.lengths)}"
    )
    lines = ["# chebwave dwt", f"# {meta}", "band,index,value"]
    bands = [(f"a{tree.levels}", tree.approximation)]
    bands += [(f"d{j + 1}", tree.details[j]) for j in reversed(range(tree.levels))]
    for name, coeffs in bands:
        lines.extend(f"{name},{i},{fmt_data(v)}" for i, v in enumerate(coeffs))
    return "\n".join(lines) + "\n"


def read_tree(path):
    meta = {}
    bands = {}
    with _open_in(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                for tok in line[1:].split():
                    if "=" in tok:
                        key, val = tok.split("=", 1)
                        meta[key] = val
                continue
            if line == "band,index,value":
                continue
            parts = line.split(",")
            try:
                name, idx, val = parts[0], int(parts[1]), float(parts[2])
                if len(parts) != 3 or name[0] not in "ad":
                    raise ValueError
            except (ValueError, IndexError):
                raise UsageError(f"{path}:{lineno}: malformed coefficient row {line!r}") from None
            band = bands.setdefault(name, {})
            band[idx] = val
    try:
        levels = int(meta["levels"])
        mode = BoundaryMode(meta["mode"])
        original_length = int(meta["original_length"])
        lengths = [int(n) for n in meta["lengths"].split(";")]
        kind, order, k = int(meta["kind"]), int(meta["order"]), int(meta.get("k", 0))
    except (KeyError, ValueError) as exc:
        raise UsageError(f"{path}: missing or invalid header field ({exc})") from None

    def band(name):
        if name not in bands:
            raise UsageError(f"{path}: missing band {name}")
        b = bands[name]
        if sorted(b) != list(range(len(b))):
            raise UsageError(f"{path}: band {name} has non-contiguous indices")
        return np.array([b[i] for i in range(len(b))])

    tree = DecompositionTree(
        band(f"a{levels}"),
        [band(f"d{j + 1}") for j in range(levels)],
        mode,
        original_length,
        lengths,
        0,
    )
    return tree, kind, order, k


class _open_in:
    def __init__(self, path):
        self.path = path

    def __enter__(self):
        if self.path == "-":
            self.fh = sys.stdin
            return self.fh
        try:
            self.fh = open(self.path, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {self.path}: {exc.strerror}") from None
        return self.fh

    def __exit__(self, *exc):
        if self.fh is not sys.stdin:
            self.fh.close()


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _filter(args):
    try:
        return make_filter(args.kind, args.order, getattr(args, "k", 0) or None)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_filter(args):
    taps = _filter(args)
    _emit(
        " ".join(str(c) for c in taps.coefficients) + "\n"
        + " ".join(fmt_float(c) for c in taps.as_float()) + "\n",
        args.output,
    )


def cmd_response(args):
    if args.grid < 2:
        raise UsageError("--grid must be at least 2")
    resp = frequency_response(_filter(args), args.grid)
    rows = ["omega,magnitude,phase"]
    rows += [f"{fmt_float(w)},{fmt_float(a)},{fmt_float(p)}"
             for w, a, p in zip(resp.omega, resp.magnitude, resp.phase)]
    _emit("\n".join(rows) + "\n", args.output)


def cmd_check(args):
    _filter(args)
    _emit(build_report(args.kind, args.order, args.k, args.tol).to_json(), args.output)


def cmd_cascade(args):
    try:
        res = cascade_iterate(_filter(args), args.iterations)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = ["t,phi,psi"]
    rows += [f"{fmt_float(t)},{fmt_float(p)},{fmt_float(q)}"
             for t, p, q in zip(res.t, res.phi_samples, res.psi_samples)]
    rows.append("# successive_l2_distances: " + " ".join(fmt_float(d) for d in res.successive_l2_distances))
    _emit("\n".join(rows) + "\n", args.output)


def cmd_generate(args):
    clean = SIGNALS[args.signal](args.length)
    rng = np.random.default_rng(args.seed)
    noisy = add_noise(clean, args.snr, rng) if args.snr is not None else clean
    if args.clean_out:
        _emit(format_signal(clean, f"{args.signal} n={args.length} clean"), args.clean_out)
    _emit(format_signal(noisy, f"{args.signal} n={args.length} snr={args.snr} seed={args.seed}"),
          args.output)


def cmd_dwt(args):
    taps = _filter(args)
    x = read_signal(args.input)
    try:
        tree = analyze(x, build_bank(taps), args.levels, BoundaryMode(args.mode))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(format_tree(tree, args.kind, args.order, args.k), args.output)


def cmd_idwt(args):
    tree, kind, order, k = read_tree(args.input)
    try:
        bank = build_bank(make_filter(kind, order, k or None))
        y = synthesize(tree, bank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(format_signal(y), args.output)


def _threshold(value):
    if value == "universal":
        return None
    try:
        t = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError("threshold must be 'universal' or a number") from None
    if not t >= 0:
        raise argparse.ArgumentTypeError("threshold must be nonnegative")
    return t


def cmd_denoise(args):
    x = read_signal(args.input)
    try:
        config = DenoiseConfig(
            levels=args.levels,
            mode=ThresholdMode(args.threshold_mode),
            threshold=args.threshold,
            kind=args.kind,
            order=args.order,
            k=args.k,
            boundary=BoundaryMode(args.mode),
        )
        y = denoise(x, config)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.reference:
        clean = read_signal(args.reference)
        if len(clean) != len(x):
            raise UsageError("reference and input lengths differ")
        before, after = snr_db(clean, x), snr_db(clean, y)
        sys.stderr.write(
            f"input SNR {before:.3f} dB, output SNR {after:.3f} dB, gain {after - before:.3f} dB\n"
        )
    _emit(format_signal(y), args.output)


def cmd_sweep(args):
    if args.max_order > args.bound:
        raise UsageError(f"--max-order must not exceed {args.bound}")
    verdicts = condition_e_sweep(args.kind, args.max_order, bound=args.bound, jobs=args.jobs)
    rows = []
    for m, cond in verdicts:
        rep = analyze_bank(make_filter(args.kind, m))
        rows.append((m, rep.perfect_reconstruction, rep.is_orthogonal, cond))
    yn = {True: "yes", False: "no"}
    if args.format == "csv":
        lines = ["order,perfect_reconstruction,orthogonal,condition_e"]
        lines += [f"{m},{str(pr).lower()},{str(o).lower()},{str(c).lower()}" for m, pr, o, c in rows]
    else:
        lines = ["| m | PR | orthogonal | condition E |", "|---|---|---|---|"]
        lines += [f"| {m} | {yn[pr]} | {yn[o]} | {yn[c]} |" for m, pr, o, c in rows]
    _emit("\n".join(lines) + "\n", args.output)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_bank_args(p, k=True):
    p.add_argument("--kind", type=int, choices=(1, 2), required=True,
                   help="1: first-kind (T_m) prototype, 2: second-kind (U_m)")
    p.add_argument("--order", type=int, required=True, help="odd polynomial order m")
    if k:
        p.add_argument("-k", type=int, default=0,
                       help="selectivity: upsample second-kind taps by 2k+1")


def build_parser():
    parser = _Parser(prog="chebwave", description="Chebyshev wavelet filter banks")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("filter", help="print prototype taps")
    _add_bank_args(p)
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("response", help="frequency response CSV")
    _add_bank_args(p)
    p.add_argument("--grid", type=int, default=512)
    p.set_defaults(func=cmd_response)

    p = sub.add_parser("check", help="JSON property report")
    _add_bank_args(p)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cascade", help="scaling function and wavelet samples")
    _add_bank_args(p)
    p.add_argument("--iterations", type=int, default=6)
    p.set_defaults(func=cmd_cascade)

    p = sub.add_parser("generate", help="synthetic test signal")
    p.add_argument("--signal", choices=sorted(SIGNALS), default="bumps")
    p.add_argument("--length", type=int, default=4096)
    p.add_argument("--snr", type=float, default=None, help="add Gaussian noise at this SNR (dB)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--clean-out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("dwt", help="multi-level decomposition")
    p.add_argument("input")
    _add_bank_args(p)
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--mode", choices=[m.value for m in BoundaryMode], default="periodic")
    p.set_defaults(func=cmd_dwt)

    p = sub.add_parser("idwt", help="reconstruct from a decomposition CSV")
    p.add_argument("input")
    p.set_defaults(func=cmd_idwt)

    p = sub.add_parser("denoise", help="wavelet shrinkage")
    p.add_argument("input")
    _add_bank_args(p)
    p.add_argument("--levels", type=int, default=2)
    p.add_argument("--mode", choices=[m.value for m in BoundaryMode], default="periodic")
    p.add_argument("--threshold-mode", choices=[m.value for m in ThresholdMode], default="soft")
    p.add_argument("--threshold", type=_threshold, default=None,
                   help="'universal' (default) or a nonnegative number")
    p.add_argument("--reference", default=None, help="clean signal; SNR is reported on stderr")
    p.set_defaults(func=cmd_denoise)

    p = sub.add_parser("sweep", help="per-order PR / orthogonality / condition E table")
    p.add_argument("--kind", type=int, choices=(1, 2), required=True)
    p.add_argument("--max-order", type=int, default=63)
    p.add_argument("--bound", type=int, default=255)
    p.add_argument("--format", choices=("md", "csv"), default="md")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    for action in sub.choices.values():
        action.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if getattr(args, "k", 0) is None:
        args.k = 0
    try:
        args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"chebwave {args.command}: {exc}\n")
        return EXIT_USAGE
    except EigenSolverError as exc:
        sys.stderr.write(f"chebwave {args.command}: eigenvalue computation failed: {exc}\n")
        return EXIT_COMPUTE
    except ArithmeticError as exc:
        sys.stderr.write(f"chebwave {args.command}: computation failed: {exc}\n")
        return EXIT_COMPUTE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

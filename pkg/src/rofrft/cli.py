"""Command-line frontend: ``rofrft {synthesize,transform,analytic,convolve,verify}``.

Exit codes: 0 success, 1 a verification gate failed, 2 bad arguments,
3 file I/O or format error, 4 singular angle, 5 grid mismatch.
"""

from __future__ import annotations

import argparse
import sys
import warnings

import numpy as np

from . import __version__
from .catalog import Delta, FAMILY_NAMES, analytic_rofrft, erratum_for, eval_time, parse_family
from .core import SampledSignal, UniformGrid, angle_from_order, grid_from_range, make_angle
from .exceptions import FamilySingularAngle, GridMismatch, ROFrFTError, SingularAngle
from .fracconv import ConvolutionPair, fractional_convolve
from .io import FileFormatError, atomic_write_text, read_signal, read_spectrum, spectrum_from_file, \
    spectrum_metadata, write_signal, write_spectrum
from .transform import inverse_rofrft, rofrft_at, rofrft_fast
from .verification import CHECK_NAMES, STANDARD_ANGLES, all_passed, dumps_report, format_table, run_suite

EXIT_OK = 0
EXIT_GATE = 1
EXIT_ARGS = 2
EXIT_IO = 3
EXIT_SINGULAR = 4
EXIT_GRID = 5


class UsageError(Exception):
    pass


def _add_angle(p, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--phi", type=float, help="rotation angle in radians")
    g.add_argument("--order", type=float, help="fractional order a (phi = a*pi/2)")


def _add_family(p):
    p.add_argument("family", choices=FAMILY_NAMES)
    p.add_argument("--tau", type=float, help="time shift")
    p.add_argument("--q", type=float, help="modulation frequency (rad/s)")
    p.add_argument("--rate", type=float, help="chirp or Gaussian rate parameter")
    p.add_argument("--sign", type=int, choices=(1, -1), default=1, help="branch of the +/- families")


def _add_u_grid(p):
    p.add_argument("--u-min", type=float)
    p.add_argument("--u-max", type=float)
    p.add_argument("--u-n", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rofrft", description="Reduced order fractional Fourier transform tools")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synthesize", help="sample a catalog signal family to CSV")
    _add_family(p)
    p.add_argument("--t0", type=float, required=True, help="first sample time")
    p.add_argument("--dt", type=float, required=True, help="sample spacing")
    p.add_argument("--n", type=int, required=True, help="number of samples")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("transform", help="forward (fast or quadrature) or inverse transform of a CSV file")
    p.add_argument("input")
    _add_angle(p, required=False)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--fast", action="store_const", dest="mode", const="fast")
    mode.add_argument("--quadrature", action="store_const", dest="mode", const="quadrature")
    mode.add_argument("--inverse", action="store_const", dest="mode", const="inverse")
    _add_u_grid(p)
    p.add_argument("--t0", type=float, help="inverse: first output time")
    p.add_argument("--dt", type=float, help="inverse: output spacing")
    p.add_argument("--n", type=int, help="inverse: number of output samples")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("analytic", help="closed-form transform of a catalog family")
    _add_family(p)
    _add_angle(p)
    _add_u_grid(p)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("convolve", help="fractional convolution of two signal files on a shared grid")
    p.add_argument("f")
    p.add_argument("g")
    _add_angle(p)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--angles", default=None,
                   help="comma-separated angles in radians (default: pi/6, pi/4, pi/3, 2pi/5, 3pi/4)")
    p.add_argument("--rules", default="all",
                   help=f"comma-separated checks or 'all'; checks: {', '.join(CHECK_NAMES)}")
    p.add_argument("--report", help="write the JSON report here ('-' for stdout)")
    return parser


def _angle(args):
    if args.phi is not None:
        return make_angle(args.phi)
    if args.order is not None:
        return angle_from_order(args.order)
    raise UsageError("one of --phi or --order is required")


def _family(args):
    try:
        return parse_family(args.family, tau=args.tau, q=args.q, rate=args.rate, sign=args.sign)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _u_points(args):
    if args.u_min is None or args.u_max is None or args.u_n is None:
        raise UsageError("--u-min, --u-max and --u-n are required")
    if args.u_n < 1:
        raise UsageError("--u-n must be at least 1")
    if args.u_n == 1:
        if args.u_max != args.u_min:
            raise UsageError("--u-n 1 needs --u-min == --u-max")
        return np.array([args.u_min])
    if not args.u_max > args.u_min:
        raise UsageError("--u-max must exceed --u-min")
    return grid_from_range(args.u_min, args.u_max, args.u_n).points


def cmd_synthesize(args) -> int:
    family = _family(args)
    grid = UniformGrid(args.t0, args.dt, args.n)
    if isinstance(family, Delta):
        k = int(round((family.tau - grid.start) / grid.step))
        if not 0 <= k < grid.count:
            raise UsageError(f"impulse at t={family.tau} lies outside the grid")
        samples = np.zeros(grid.count, dtype=np.complex128)
        samples[k] = 1.0 / grid.step
    else:
        samples = eval_time(family, grid.points)
    write_signal(args.output, SampledSignal(grid, samples))
    return EXIT_OK


def cmd_transform(args) -> int:
    mode = args.mode or "quadrature"
    if mode == "inverse":
        return _inverse(args)
    angle = _angle(args)
    x = read_signal(args.input)
    if mode == "fast":
        spec = rofrft_fast(x, angle)
        ignored = any(v is not None for v in (args.u_min, args.u_max, args.u_n))
        meta = spectrum_metadata(angle, spec.u, "transform --fast", method="fast", u_grid_flags_ignored=ignored)
        write_spectrum(args.output, spec.u, spec.values, meta)
        return EXIT_OK
    u = _u_points(args)
    values = rofrft_at(x, angle, u)
    meta = spectrum_metadata(angle, u, "transform --quadrature", method="quadrature")
    write_spectrum(args.output, u, values, meta)
    return EXIT_OK


def _inverse(args) -> int:
    if args.phi is None and args.order is None:
        _, _, meta = read_spectrum(args.input)
        if "phi" not in meta:
            raise UsageError("--inverse needs --phi/--order or a sidecar with 'phi'")
        angle = make_angle(meta["phi"])
    else:
        angle = _angle(args)
    if args.t0 is None or args.dt is None or args.n is None:
        raise UsageError("--inverse requires --t0, --dt and --n for the output grid")
    X = spectrum_from_file(args.input, angle)
    write_signal(args.output, inverse_rofrft(X, UniformGrid(args.t0, args.dt, args.n)))
    return EXIT_OK


def cmd_analytic(args) -> int:
    family = _family(args)
    angle = _angle(args)
    u = _u_points(args)
    result = analytic_rofrft(family, angle, u)
    erratum = erratum_for(family)
    meta = spectrum_metadata(angle, u, f"analytic {args.family}",
                             errata_applied=[erratum.id] if erratum else [],
                             formula_source=result.formula_source.value)
    write_spectrum(args.output, u, np.atleast_1d(result.value), meta)
    return EXIT_OK


def cmd_convolve(args) -> int:
    angle = _angle(args)
    f = read_signal(args.f)
    g = read_signal(args.g)
    out = fractional_convolve(ConvolutionPair(f, g, angle))
    write_signal(args.output, out)
    return EXIT_OK


def _parse_angles(text):
    if text is None:
        return list(STANDARD_ANGLES)
    try:
        return [float(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"--angles must be comma-separated numbers, got {text!r}") from None


def cmd_verify(args) -> int:
    angles = _parse_angles(args.angles)
    checks = [s.strip() for s in args.rules.split(",") if s.strip()]
    try:
        records = run_suite(angles, checks)
    except ROFrFTError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = dumps_report(records)
    table = format_table(records)
    if args.report == "-":
        sys.stdout.write(report)
        print(table, file=sys.stderr)
    else:
        if args.report:
            atomic_write_text(args.report, report)
        print(table)
    return EXIT_OK if all_passed(records) else EXIT_GATE


COMMANDS = {
    "synthesize": cmd_synthesize,
    "transform": cmd_transform,
    "analytic": cmd_analytic,
    "convolve": cmd_convolve,
    "verify": cmd_verify,
}


def _warn_to_stderr(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {category.__name__}: {message}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    warnings.showwarning = _warn_to_stderr
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except (SingularAngle, FamilySingularAngle) as exc:
        print(f"error: singular angle: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except GridMismatch as exc:
        print(f"error: grid mismatch: {exc}", file=sys.stderr)
        return EXIT_GRID
    except (OSError, FileFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ROFrFTError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())

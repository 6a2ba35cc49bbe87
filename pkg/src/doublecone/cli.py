"""Command-line front end.

    doublecone spectrum   --alpha 1 --B0 1 --m 0 --n 0..2 --j -2..2 --lambda +1 --s +1 --eta -1
    doublecone scar-scan  --s +1 --alpha 0.7 --j-grid -0.01,0,0.01
    doublecone wavefunction --kind landau --n 2 --j 1 --alpha 0.7 --B0 1
    doublecone fig3       --B-min 0.1 --B-max 10 --B-points 50
    doublecone verify     [--suite specfun] [--inject-fault drop-eta-term]

Exit codes: 0 ok, 1 verification failure, 2 usage error.  Output goes to
stdout unless ``--output`` is given; relative output paths are resolved
against ``$DOUBLECONE_OUTPUT_DIR`` when that variable is set.
"""
from __future__ import annotations

import argparse
import math
import os
import re
import sys
from pathlib import Path

import numpy as np

from . import __version__
from . import free_dynamics as fd
from . import landau as ld
from . import oracle, verification
from ._format import to_csv, to_json
from .errors import DoubleConeError
from .geometry import UnitSystem

OUTPUT_DIR_ENV = "DOUBLECONE_OUTPUT_DIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_range(text: str) -> list[int]:
    """'0..3' -> [0, 1, 2, 3]; '2' -> [2]; '0,2,5' -> [0, 2, 5]."""
    text = text.strip()
    m = re.fullmatch(r"([+-]?\d+)\.\.([+-]?\d+)", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if hi < lo:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer range: {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of numbers: {text!r}") from None


def _signs(text: str) -> list[int]:
    if text == "both":
        return [-1, 1]
    values = sorted({int(t) for t in text.split(",") if t.strip()}) if re.fullmatch(r"[+-]?1(,[+-]?1)*", text) else []
    if not values:
        raise argparse.ArgumentTypeError(f"expected +1, -1 or 'both', got {text!r}")
    return values


def _sign(text: str) -> int:
    values = _signs(text)
    if len(values) != 1:
        raise argparse.ArgumentTypeError(f"expected a single sign, got {text!r}")
    return values[0]


def _add_units(p):
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--e", type=float, default=1.0)


def _add_output(p, formats=("csv",)):
    p.add_argument("--output", "-o", default=None, help="output file (default: stdout)")
    p.add_argument("--format", choices=formats, default=formats[0])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="doublecone", description="Dirac particle on a double cone: spectra, profiles, checks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="Landau energies in a uniform axial field")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--B0", type=float, required=True)
    p.add_argument("--m", type=float, default=0.0)
    p.add_argument("--n", type=_int_range, default=[0])
    p.add_argument("--j", type=_int_range, default=[0])
    p.add_argument("--lambda", dest="lam", type=_signs, default=[1])
    p.add_argument("--s", type=_signs, default=[1])
    p.add_argument("--eta", type=_signs, default=[-1, 1])
    p.add_argument("--branch", choices=["+", "-"], default="+")
    _add_units(p)
    _add_output(p, ("csv", "json"))

    p = sub.add_parser("scar-scan", help="admissibility of negative-order Bessel branches versus j")
    p.add_argument("--s", type=_sign, default=1)
    p.add_argument("--alpha", type=float, default=0.7)
    p.add_argument("--j-grid", type=_float_list, required=True)
    _add_output(p, ("csv", "json"))

    p = sub.add_parser("wavefunction", help="radial profile samples l,psi")
    p.add_argument("--kind", choices=["landau", "free"], default="landau")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--j", type=float, default=0.0)
    p.add_argument("--lambda", dest="lam", type=_sign, default=1)
    p.add_argument("--s", type=_sign, default=1)
    p.add_argument("--eta", type=_sign, default=1)
    p.add_argument("--B0", type=float, default=1.0)
    p.add_argument("--K", type=float, default=1.0, help="free wavenumber")
    p.add_argument("--component", choices=["A", "B"], default="A")
    p.add_argument("--coeffs", type=_float_list, default=None, help="free-solution coefficient slots")
    p.add_argument("--parity", type=_sign, default=1)
    p.add_argument("--l-min", type=float, default=None)
    p.add_argument("--l-max", type=float, default=None)
    p.add_argument("--l-points", type=int, default=201)
    _add_units(p)
    _add_output(p, ("csv", "json"))

    p = sub.add_parser("fig3", help="E versus B for the E(B) comparison of alpha = 1 and 0.7")
    p.add_argument("--alpha-list", type=_float_list, default=[1.0, 0.7])
    p.add_argument("--n-list", type=_int_range, default=[0, 1, 2])
    p.add_argument("--j-list", type=_int_range, default=None, help="one j per n (default j = n)")
    p.add_argument("--m", type=float, default=0.0)
    p.add_argument("--B-grid", type=_float_list, default=None)
    p.add_argument("--B-min", type=float, default=0.1)
    p.add_argument("--B-max", type=float, default=10.0)
    p.add_argument("--B-points", type=int, default=100)
    _add_output(p, ("csv", "json"))

    p = sub.add_parser("verify", help="run the verification suites; JSON report")
    p.add_argument("--suite", action="append", choices=verification.SUITES, default=None)
    p.add_argument("--inject-fault", choices=verification.FAULTS, default=None)
    p.add_argument("--N", type=int, default=oracle.ACCEPTANCE_N)
    _add_output(p, ("json",))
    return parser


def _units(args) -> UnitSystem:
    return UnitSystem(hbar=args.hbar, c=args.c, e=args.e)


def _check_alpha(alpha):
    if not (0 < alpha <= 1):
        raise UsageError(f"alpha must lie in (0, 1], got {alpha}")


def cmd_spectrum(args):
    _check_alpha(args.alpha)
    if not args.B0 > 0:
        raise UsageError("Landau levels require B0 > 0")
    if args.m < 0:
        raise UsageError("m must be non-negative")
    units = _units(args)
    field_cfg = ld.FieldConfig(args.B0, args.m)
    branch = 1 if args.branch == "+" else -1
    rows = []
    for n in args.n:
        if n < 0:
            raise UsageError("n must be non-negative")
        for j in args.j:
            for eta in args.eta:
                for lam in args.lam:
                    for s in args.s:
                        state = ld.LandauState(n, j, fd.SpinChannel(s, lam), eta)
                        e2 = ld.energy_squared(state, args.alpha, field_cfg, units)
                        rows.append((args.alpha, n, j, lam, s, eta, args.B0, args.m, e2,
                                     branch * math.sqrt(e2), int(ld.is_nappe_degenerate(j, lam, s, args.alpha))))
    rows.sort(key=lambda r: (r[1], r[2], r[5], r[3], r[4]))
    header = ["alpha", "n", "j", "lambda", "s", "eta", "B0", "m", "E2", "E", "degenerate"]
    return header, rows


def cmd_scar_scan(args):
    _check_alpha(args.alpha)
    if not args.j_grid:
        raise UsageError("j grid is empty")
    if not all(math.isfinite(j) for j in args.j_grid):
        raise UsageError("j grid must be finite")
    rows = [tuple(r) for r in fd.scar_scan(args.s, args.alpha, args.j_grid)]
    return ["j", "nu_A", "nu_B", "neg_A_admissible", "neg_B_admissible"], rows


def cmd_wavefunction(args):
    _check_alpha(args.alpha)
    if args.l_points < 1:
        raise UsageError("--l-points must be positive")
    units = _units(args)
    if args.kind == "landau":
        if not args.B0 > 0:
            raise UsageError("Landau levels require B0 > 0")
        if args.n < 0 or not float(args.j).is_integer():
            raise UsageError("Landau states need n >= 0 and integer j")
        state = ld.LandauState(args.n, int(args.j), fd.SpinChannel(args.s, args.lam), args.eta)
        profile = ld.radial_profile(state, args.alpha, ld.FieldConfig(args.B0), units)
        l_min = 0.0 if args.l_min is None else args.l_min
        l_max = profile.cutoff if args.l_max is None else args.l_max
        evaluate = profile
    else:
        if not args.K > 0:
            raise UsageError("free profiles need K > 0")
        psi_a, psi_b = fd.free_solution(args.j, args.s, args.alpha, args.K)
        solution = psi_a if args.component == "A" else psi_b
        if args.coeffs is not None:
            if len(args.coeffs) != solution.basis_size:
                raise UsageError(f"this solution has {solution.basis_size} coefficient slots")
            solution = solution.with_coefficients(*args.coeffs)
        evaluate = solution.with_parity(args.parity)
        l_min = 0.1 if args.l_min is None else args.l_min
        l_max = 20.0 if args.l_max is None else args.l_max
    if l_max < l_min:
        raise UsageError("--l-max must not be below --l-min")
    grid = np.linspace(l_min, l_max, args.l_points)
    if args.kind == "free" and np.any(grid == 0):
        raise UsageError("free profiles are singular at the apex; exclude l = 0")
    return ["l", "psi"], [(float(l), float(evaluate(l))) for l in grid]


def cmd_fig3(args):
    for alpha in args.alpha_list:
        _check_alpha(alpha)
    if args.B_grid is not None:
        B = args.B_grid
    else:
        if args.B_points < 1 or not (0 < args.B_min <= args.B_max):
            raise UsageError("need 0 < B-min <= B-max and B-points >= 1")
        B = [float(b) for b in np.linspace(args.B_min, args.B_max, args.B_points)] if args.B_points > 1 else [args.B_min]
    if not B or any(b <= 0 for b in B) or any(b2 <= b1 for b1, b2 in zip(B, B[1:])):
        raise UsageError("B grid must be positive and strictly ascending")
    j_list = args.j_list if args.j_list is not None else list(args.n_list)
    if len(j_list) != len(args.n_list):
        raise UsageError("--j-list needs one entry per n")
    if any(n < 0 for n in args.n_list):
        raise UsageError("n must be non-negative")
    rows = ld.figure3_data(args.alpha_list, list(zip(args.n_list, j_list)), B, m=args.m)
    return ["alpha", "n", "j", "B", "E"], rows


def cmd_verify(args):
    if args.N < 10:
        raise UsageError("--N must be at least 10")
    suites = tuple(args.suite) if args.suite else verification.SUITES
    return verification.run(suites, N=args.N, fault=args.inject_fault)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    path = Path(output)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _table_json(header, rows) -> str:
    return to_json([dict(zip(header, row)) for row in rows])


def _worst_failure(report) -> str:
    for suite in report["suites"]:
        for check in suite["checks"]:
            if not check["passed"]:
                return f"{suite['suite']}/{check['name']}: value {check['value']:.3e} > {check['tolerance']:.1e} at {check['worst']}"
    return ""


def _normalize_argv(argv: list[str]) -> list[str]:
    """Glue values such as '-2..2' or '-0.01,0' to their option so argparse does not read them as flags."""
    out: list[str] = []
    for token in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and re.match(r"-[\d.]", token):
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


COMMANDS = {"spectrum": cmd_spectrum, "scar-scan": cmd_scar_scan, "wavefunction": cmd_wavefunction,
            "fig3": cmd_fig3, "verify": cmd_verify}


def main(argv=None) -> int:
    argv = _normalize_argv(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        if not argv:
            raise UsageError("a command is required (see --help)")
        args = parser.parse_args(argv)
        result = COMMANDS[args.command](args)
    except (UsageError, DoubleConeError) as exc:
        print(f"doublecone: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help, --version
        return int(exc.code or 0)

    if args.command == "verify":
        _emit(to_json(result), args.output)
        if not result["passed"]:
            print(f"doublecone: verification failed: {_worst_failure(result)}", file=sys.stderr)
            return 1
        return 0
    header, rows = result
    text = to_csv(header, rows) if args.format == "csv" else _table_json(header, rows)
    _emit(text, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: thresholds, tables, q-sweeps, spectra, verification.

All data output is CSV with a header row and ``\\n`` line endings; errors go
to standard error as one-line messages. Exit codes: 0 on success, 2 when a
criterion has no sign change on [0, 1), 1 on usage or runtime errors.
"""

from __future__ import annotations

import argparse
import sys
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from . import analytic, criteria
from .criteria import Criterion, curve, threshold, verify
from .entropy import sandwiched_matrix
from .exceptions import MultipleRoots, NoSignChange, QsepError
from .linalg import eigvals_hermitian
from .states import FAMILIES, PP_GHZ, PP_W, WL_GHZ, WL_W, StateFamily, build

TABLE_IDS = ("1", "2", "pp-ghz", "wl-ghz")
_TABLE_FAMILY = {"1": PP_W, "2": WL_W, "pp-ghz": PP_GHZ, "wl-ghz": WL_GHZ}

_ANALYTIC_SPECTRUM = {
    PP_W: analytic.pp_w_sandwich_eigs,
    PP_GHZ: analytic.pp_ghz_sandwich_eigs,
    WL_W: analytic.wl_w_sandwich_eigs,
    WL_GHZ: analytic.wl_ghz_sandwich_eigs,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on its own; remap to the documented code 1
    def error(self, message):
        raise UsageError(message)


def _fmt(value: float) -> str:
    """10 significant digits, plain decimal point."""
    return f"{value:.10g}"


def _round4(value: float) -> str:
    """Round half-up to 4 decimals, keeping trailing zeros."""
    return str(Decimal(repr(float(value))).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP))


def _parse_criterion(args) -> Criterion:
    if args.criterion in criteria.FINITE_Q_CRITERIA:
        if args.q is None:
            raise UsageError(f"criterion {args.criterion!r} requires --q")
        return Criterion(args.criterion, args.q)
    if args.q is not None:
        raise UsageError(f"criterion {args.criterion!r} does not take --q")
    return Criterion(args.criterion)


def cmd_threshold(args) -> int:
    result = threshold(args.family, args.n, _parse_criterion(args), tol=args.tol)
    q_field = _fmt(result.criterion.q) if result.criterion.q is not None else ""
    sys.stdout.write("family,n,criterion,q,x_threshold\n")
    sys.stdout.write(
        f"{result.family},{result.n_qubits},{result.criterion.kind},"
        f"{q_field},{_fmt(result.x_star)}\n"
    )
    return 0


def cmd_table(args) -> int:
    kind = _TABLE_FAMILY[args.id]
    if args.id in ("1", "2"):
        table = criteria.w_family_table(kind)
        lines = ["n,vn,ar,cstre,ppt"]
        for n in sorted(table):
            lines.append(f"{n}," + ",".join(_round4(v) for v in table[n]))
    else:
        table = criteria.ghz_family_table(kind)
        lines = ["n,threshold"]
        for n in sorted(table):
            lines.append(f"{n},{_round4(table[n])}")
    with open(args.out, "w", newline="") as handle:
        handle.write("\n".join(lines) + "\n")
    return 0


def cmd_curve(args) -> int:
    kinds = [c.strip() for c in args.criterion.split(",") if c.strip()]
    if not kinds or any(k not in criteria.FINITE_Q_CRITERIA for k in kinds):
        raise UsageError(
            f"--criterion must be a comma list drawn from {criteria.FINITE_Q_CRITERIA}"
        )
    if not 1.0 < args.q_min <= args.q_max:
        raise UsageError("need 1 < q-min <= q-max")
    if args.q_steps < 1:
        raise UsageError("need q-steps >= 1")
    if args.log_spacing:
        grid = np.geomspace(args.q_min, args.q_max, args.q_steps)
    else:
        grid = np.linspace(args.q_min, args.q_max, args.q_steps)
    lines = ["criterion,q,x_threshold"]
    for kind in kinds:
        for point in curve(args.family, args.n, kind, grid):
            x_field = _fmt(point.x_star) if point.x_star is not None else ""
            lines.append(f"{kind},{_fmt(point.q)},{x_field}")
    with open(args.out, "w", newline="") as handle:
        handle.write("\n".join(lines) + "\n")
    return 0


def cmd_eigs(args) -> int:
    if args.source == "numeric":
        if args.x == 1.0:
            sys.stderr.write(
                "warning: x = 1 is a pure endpoint; zero modes of the reduction "
                "are dropped by the support convention\n"
            )
        rho = build(StateFamily(args.family, args.n, args.x))
        values = eigvals_hermitian(sandwiched_matrix(rho, args.n, args.q))
        entries = [(float(v), 1) for v in np.sort(values)]
    else:
        spectrum = _ANALYTIC_SPECTRUM[args.family](args.n, args.x, args.q)
        entries = list(spectrum.sorted_entries())
    sys.stdout.write("eigenvalue,multiplicity\n")
    for value, mult in entries:
        sys.stdout.write(f"{_fmt(value)},{mult}\n")
    return 0


def cmd_verify(args) -> int:
    report = verify(args.n_max)
    sys.stdout.write(report.summary() + "\n")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qsep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_thr = sub.add_parser("threshold", help="solve one separability threshold")
    p_thr.add_argument("--family", required=True, choices=FAMILIES)
    p_thr.add_argument("--n", required=True, type=int, help="qubit count")
    p_thr.add_argument("--criterion", required=True, choices=criteria.CRITERIA)
    p_thr.add_argument("--q", type=float, help="entropic order (cstre/ar only)")
    p_thr.add_argument("--tol", type=float, default=criteria.DEFAULT_X_TOL)
    p_thr.set_defaults(func=cmd_threshold)

    p_tab = sub.add_parser("table", help="write a reference-table CSV")
    p_tab.add_argument("--id", required=True, choices=TABLE_IDS)
    p_tab.add_argument("--out", required=True)
    p_tab.set_defaults(func=cmd_table)

    p_cur = sub.add_parser("curve", help="threshold as a function of q")
    p_cur.add_argument("--family", required=True, choices=FAMILIES)
    p_cur.add_argument("--n", required=True, type=int)
    p_cur.add_argument("--criterion", required=True, help="comma list from: cstre,ar")
    p_cur.add_argument("--q-min", required=True, type=float)
    p_cur.add_argument("--q-max", required=True, type=float)
    p_cur.add_argument("--q-steps", required=True, type=int)
    p_cur.add_argument("--log-spacing", action="store_true")
    p_cur.add_argument("--out", required=True)
    p_cur.set_defaults(func=cmd_curve)

    p_eig = sub.add_parser("eigs", help="sandwich spectrum at one (family, n, x, q)")
    p_eig.add_argument("--family", required=True, choices=FAMILIES)
    p_eig.add_argument("--n", required=True, type=int)
    p_eig.add_argument("--x", required=True, type=float)
    p_eig.add_argument("--q", required=True, type=float)
    p_eig.add_argument("--source", required=True, choices=("numeric", "analytic"))
    p_eig.set_defaults(func=cmd_eigs)

    p_ver = sub.add_parser("verify", help="run the cross-validation report")
    p_ver.add_argument("--n-max", type=int, default=6)
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as err:
        sys.stderr.write(f"error: {err}\n")
        return 1
    except NoSignChange as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
    except MultipleRoots as err:
        sys.stderr.write(f"error: {err}\n")
        return 1
    except QsepError as err:
        sys.stderr.write(f"error: {err}\n")
        return 1
    except OSError as err:
        sys.stderr.write(f"error: {err}\n")
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

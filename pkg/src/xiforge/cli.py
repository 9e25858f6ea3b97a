"""Command-line surface: eval, verify, scan, zeros.

Machine-first output: one JSON record per eval/verify/zeros invocation
(CSV streams for scans), deterministic byte-for-byte under --no-meta.
Exit codes: 0 success, 1 domain error, 2 tolerance/convergence failure,
3 verification failure.  Quadrature and series tolerances come from
--abs-tol/--rel-tol/--tail-tol flags, falling back to the XIFORGE_ABS_TOL,
XIFORGE_REL_TOL and XIFORGE_TAIL_TOL environment variables.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import warnings as _warnings
from datetime import datetime, timezone

from .errors import ConvergenceError, CountMismatch, DomainError, FormError, ToleranceNotMet
from .hyper import hermite_mellin_poly
from .quad import QuadratureConfig
from .theta import SeriesControl, hermite_theta, hermite_theta_weighted
from .verify import SUITE_NAMES, run_suite
from .xi import (
    mellin_omega_integral,
    mellin_psi_integral,
    xi_direct,
    xi_split_real,
    xi_split_wedge,
)
from .zeros import find_zeros, verify_exhaustive
from .zeta import zeta_family


def parse_complex(text: str) -> complex:
    """Parse 're,im' (or bare 're') with '.' as the decimal point."""
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"cannot parse complex number from {text!r}")


def parse_range(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"range must be start:stop:step, got {text!r}")
    a, b, step = (float(p) for p in parts)
    if step <= 0.0 or b < a:
        raise ValueError(f"invalid range {text!r}")
    return a, b, step


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _env_float(name: str) -> float | None:
    raw = os.environ.get(name)
    return float(raw) if raw else None


def _quad_config(args) -> QuadratureConfig:
    abs_tol = args.abs_tol if args.abs_tol is not None else _env_float("XIFORGE_ABS_TOL")
    rel_tol = args.rel_tol if args.rel_tol is not None else _env_float("XIFORGE_REL_TOL")
    base = QuadratureConfig()
    return QuadratureConfig(
        abs_tol=abs_tol if abs_tol is not None else base.abs_tol,
        rel_tol=rel_tol if rel_tol is not None else base.rel_tol,
        max_subdivisions=base.max_subdivisions,
        ray_cutoff=base.ray_cutoff,
    )


def _series_control(args) -> SeriesControl:
    tail = args.tail_tol if args.tail_tol is not None else _env_float("XIFORGE_TAIL_TOL")
    base = SeriesControl()
    return SeriesControl(tail_tol=tail if tail is not None else base.tail_tol, max_terms=base.max_terms)


def _record(command: str, params: dict, value, err_estimate, warn_list, with_meta: bool) -> dict:
    rec = {
        "command": command,
        "params": params,
        "value": value,
        "err_estimate": err_estimate,
        "warnings": warn_list,
    }
    if with_meta:
        rec["meta"] = {"timestamp": datetime.now(timezone.utc).isoformat()}
    return rec


def _complex_out(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _emit(record: dict, as_csv: bool) -> None:
    if not as_csv:
        print(json.dumps(record))
        return
    value = record["value"]
    if isinstance(value, dict) and "re" in value:
        print("command,value_re,value_im,err_estimate")
        err = record["err_estimate"]
        print(
            f"{record['command']},{_fmt(value['re'])},{_fmt(value['im'])},"
            + (_fmt(err) if err is not None else "")
        )
    else:
        print(json.dumps(record))


def cmd_eval(args) -> int:
    qc = _quad_config(args)
    ctl = _series_control(args)
    params: dict = {}
    err_estimate = None
    with _warnings.catch_warnings(record=True) as caught:
        _warnings.simplefilter("always")
        target = args.target
        if target == "pq":
            s = parse_complex(args.s)
            params = {"q": args.q, "s": _complex_out(s)}
            value = hermite_mellin_poly(args.q, s)
        elif target == "zeta-family":
            s = parse_complex(args.s)
            params = {"q": args.q, "ell": args.ell, "s": _complex_out(s)}
            value = zeta_family(args.q, args.ell, s)
        elif target == "theta":
            x = parse_complex(args.x)
            n = args.n if args.n is not None else 2 * (args.j or 0)
            params = {"n": n, "ell": args.ell, "x": _complex_out(x)}
            res = hermite_theta_weighted(n, args.ell, x, ctl)
            value = res.value
            err_estimate = res.tail_bound
        elif target == "psi":
            x = parse_complex(args.x)
            params = {"j": args.j, "x": _complex_out(x)}
            value = hermite_theta(args.j, x, ctl)
        elif target == "xi-direct":
            s = parse_complex(args.s)
            params = {"s": _complex_out(s)}
            value = xi_direct(s)
        elif target == "xi-prop3":
            s = parse_complex(args.s)
            b = float(args.b)
            params = {"j": args.j, "b": b, "s": _complex_out(s)}
            res = xi_split_real(args.j, s, b, qc)
            value, err_estimate = res.value, res.err_estimate
        elif target == "xi-prop4":
            s = parse_complex(args.s)
            b = parse_complex(args.b)
            params = {"j": args.j, "b": _complex_out(b), "s": _complex_out(s), "form": args.form}
            res = xi_split_wedge(args.j, s, b, qc, form=args.form)
            value, err_estimate = res.value, res.err_estimate
        elif target == "mellin":
            s = parse_complex(args.s)
            if args.ell:
                q = args.q if args.q is not None else args.j
                params = {"q": q, "ell": args.ell, "s": _complex_out(s)}
                res = mellin_omega_integral(q, args.ell, s, qc)
            else:
                params = {"j": args.j, "s": _complex_out(s)}
                res = mellin_psi_integral(args.j, s, qc)
            value, err_estimate = res.value, res.err_estimate
        else:
            raise DomainError(f"unknown eval target {target!r}")
        warn_list = sorted(str(w.message) for w in caught)
    record = _record(f"eval {target}", params, _complex_out(complex(value)), err_estimate, warn_list, not args.no_meta)
    _emit(record, args.csv)
    return 0


def cmd_verify(args) -> int:
    params: dict = {}
    kwargs: dict = {}
    if args.qmax is not None:
        kwargs["qmax"] = args.qmax
        params["qmax"] = args.qmax
    if args.j is not None:
        kwargs["j_list"] = (args.j,)
        params["j"] = args.j
    if args.s is not None:
        kwargs["s_list"] = (parse_complex(args.s),)
        params["s"] = args.s
    if args.b_list is not None:
        kwargs["b_list"] = tuple(float(p) for p in args.b_list.split(","))
        params["b_list"] = args.b_list
    with _warnings.catch_warnings(record=True) as caught:
        _warnings.simplefilter("always")
        cases = run_suite(args.suite, **kwargs)
        warn_list = sorted(str(w.message) for w in caught)
    table = [c.as_dict() for c in cases]
    n_fail = sum(1 for c in cases if not c.ok)
    record = _record(f"verify {args.suite}", params, table, None, warn_list, not args.no_meta)
    _emit(record, False)
    for row in table:
        status = row["status"].upper()
        print(f"{status:4s} {row['case']}  dev={row['deviation']:.3e} tol={row['tolerance']:.1e}", file=sys.stderr)
    return 0 if n_fail == 0 else 3


def cmd_scan(args) -> int:
    if args.target == "pq-line":
        a, b, step = parse_range(args.t)
        print("t,re,im,section")
        k = 0
        while True:
            t = a + k * step
            if t > b + 1e-12:
                break
            v = hermite_mellin_poly(args.q, complex(0.5, t))
            section = v.real if args.q % 2 == 0 else v.imag
            print(f"{_fmt(t)},{_fmt(v.real)},{_fmt(v.imag)},{_fmt(section)}")
            k += 1
        return 0
    if args.target == "xi-line":
        a, b, step = parse_range(args.t)
        print("t,re,im")
        k = 0
        while True:
            t = a + k * step
            if t > b + 1e-12:
                break
            v = xi_direct(complex(0.5, t))
            print(f"{_fmt(t)},{_fmt(v.real)},{_fmt(v.imag)}")
            k += 1
        return 0
    if args.target == "psi-ray":
        ctl = _series_control(args)
        print("x,re,im")
        x = args.from_
        while x <= args.to + 1e-12:
            v = hermite_theta(args.j, complex(x), ctl)
            print(f"{_fmt(x)},{_fmt(v.real)},{_fmt(v.imag)}")
            x += args.step
        return 0
    raise DomainError(f"unknown scan target {args.target!r}")


def cmd_zeros(args) -> int:
    params = {"q": args.q, "t_max": args.t_max, "grid_step": args.grid_step}
    report = verify_exhaustive(args.q, t_max=args.t_max, grid_step=args.grid_step)
    value = [
        {"t": r.t, "residual": r.residual, "bracket_width": r.bracket_width}
        for r in report.zeros
    ]
    warn_list = [
        f"exhaustiveness: {'confirmed' if report.ok else 'FAILED'} "
        f"(multiplicity {report.found_with_multiplicity} vs degree {report.expected})"
    ]
    if report.min_gap is not None:
        warn_list.append(f"min ordinate gap {report.min_gap:.6g}")
    record = _record("zeros", params, value, None, warn_list, not args.no_meta)
    _emit(record, False)
    if not report.ok:
        print(report.detail, file=sys.stderr)
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xiforge",
        description="Hermite-theta zeta families and Riemann xi integral representations",
    )
    parser.add_argument("--abs-tol", type=float, default=None, help="quadrature absolute tolerance")
    parser.add_argument("--rel-tol", type=float, default=None, help="quadrature relative tolerance")
    parser.add_argument("--tail-tol", type=float, default=None, help="series tail tolerance")
    parser.add_argument("--no-meta", action="store_true", help="omit the timestamp block")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one operation")
    p_eval.add_argument(
        "target",
        choices=["pq", "zeta-family", "theta", "psi", "xi-direct", "xi-prop3", "xi-prop4", "mellin"],
    )
    p_eval.add_argument("--q", type=int, default=None)
    p_eval.add_argument("--j", type=int, default=0)
    p_eval.add_argument("--n", type=int, default=None)
    p_eval.add_argument("--ell", type=int, default=0)
    p_eval.add_argument("--s", type=str, default=None)
    p_eval.add_argument("--x", type=str, default=None)
    p_eval.add_argument("--b", type=str, default=None)
    p_eval.add_argument("--form", choices=["i", "ii"], default="i")
    p_eval.add_argument("--csv", action="store_true", help="emit a CSV row instead of JSON")
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="run a named invariant suite")
    p_verify.add_argument("suite", choices=list(SUITE_NAMES))
    p_verify.add_argument("--qmax", type=int, default=None)
    p_verify.add_argument("--j", type=int, default=None)
    p_verify.add_argument("--s", type=str, default=None)
    p_verify.add_argument("--b-list", type=str, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan", help="emit a CSV stream along a line or ray")
    p_scan.add_argument("target", choices=["pq-line", "xi-line", "psi-ray"])
    p_scan.add_argument("--q", type=int, default=0)
    p_scan.add_argument("--j", type=int, default=0)
    p_scan.add_argument("--t", type=str, default="0:30:0.05")
    p_scan.add_argument("--from", dest="from_", type=float, default=0.2)
    p_scan.add_argument("--to", type=float, default=5.0)
    p_scan.add_argument("--step", type=float, default=0.1)
    p_scan.set_defaults(func=cmd_scan)

    p_zeros = sub.add_parser("zeros", help="locate critical-line zeros and verify the count")
    p_zeros.add_argument("--q", type=int, required=True)
    p_zeros.add_argument("--t-max", type=float, default=45.0)
    p_zeros.add_argument("--grid-step", type=float, default=0.01)
    p_zeros.set_defaults(func=cmd_zeros)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, FormError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ToleranceNotMet, ConvergenceError) as exc:
        print(f"tolerance failure: {exc}", file=sys.stderr)
        return 2
    except CountMismatch as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

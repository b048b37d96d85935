"""Command line front end.

Subcommands:

  compute   evaluate link invariants for one or more links and odd orders
  verify    replay the identity check suites and report pass/fail
  asympt    exponential growth fit for the figure-eight value sequence
  bridge    residuals of the exact R-matrix bridge identities

Set QHLINK_THREADS to cap the BLAS thread pool; output for a fixed
command line is deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3


def _cap_threads():
    cap = os.environ.get("QHLINK_THREADS")
    if not cap:
        return
    for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS",
                "MKL_NUM_THREADS", "NUMEXPR_NUM_THREADS"):
        os.environ.setdefault(var, cap)


def _c_json(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _c_text(z):
    z = complex(z)
    return f"{z.real:.10g}{z.imag:+.10g}j"


def _emit(payload, rows, header, fmt, out):
    """payload: full json document; rows/header: the csv/text table."""
    if fmt == "json":
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
    elif fmt == "csv":
        out.write(",".join(header) + "\n")
        for r in rows:
            out.write(",".join(str(x) for x in r) + "\n")
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows
                  else len(str(h)) for i, h in enumerate(header)]
        out.write("  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip() + "\n")


def _add_common(p):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")


def _parse_orders(values, parser):
    orders = []
    for v in values:
        for piece in str(v).replace(",", " ").split():
            n = int(piece)
            if n < 3 or n % 2 == 0:
                parser.error(f"order must be odd and >= 3, got {n}")
            orders.append(n)
    return orders


def cmd_compute(args, parser, out):
    from . import links

    names = []
    for v in args.link:
        names.extend(str(v).replace(",", " ").split())
    for name in names:
        if name not in links.CATALOG:
            parser.error(f"unknown link {name!r}; "
                         f"catalog: {', '.join(sorted(links.CATALOG))}")
    orders = _parse_orders(args.n, parser) or [3]
    families = ["qh", "kashaev"] if args.family == "both" else [args.family]

    records = []
    for name in sorted(set(names)):
        for n in sorted(set(orders)):
            for fam in families:
                iv = links.invariant(name, n, family=fam, rtol=args.tol)
                records.append(iv)
    records.sort(key=lambda r: (r.link, r.N, r.family))
    rows = [(r.link, r.N, r.family, _c_text(r.value),
             f"{abs(r.value):.10g}", f"{r.proportionality_error:.3g}")
            for r in records]
    payload = {"schema": 1, "command": "compute",
               "records": [{"link": r.link, "N": r.N, "family": r.family,
                            "value": _c_json(r.value), "abs": abs(r.value),
                            "proportionality_error": r.proportionality_error}
                           for r in records]}
    _emit(payload, rows, ("link", "N", "family", "value", "abs", "prop_err"),
          args.format, out)
    return EXIT_OK


def cmd_verify(args, parser, out):
    from . import verify
    suites = args.suite or None
    for s in suites or ():
        if s not in verify.SUITES:
            parser.error(f"unknown suite {s!r}; "
                         f"suites: {', '.join(sorted(verify.SUITES))}")
    orders = _parse_orders(args.n, parser) or None
    records = verify.run_suites(suites, orders=orders, seed=args.seed)
    rows = [("PASS" if r.passed else "FAIL", r.suite, r.name,
             f"{r.residual:.3e}", f"{r.tol:.1e}") for r in records]
    payload = {"schema": 1, "command": "verify",
               "records": [{"suite": r.suite, "name": r.name,
                            "residual": r.residual, "tol": r.tol,
                            "passed": r.passed} for r in records]}
    _emit(payload, rows, ("verdict", "suite", "check", "residual", "tol"),
          args.format, out)
    n_fail = sum(not r.passed for r in records)
    if args.format == "text":
        out.write(f"{len(records) - n_fail}/{len(records)} checks passed\n")
    return EXIT_CHECK_FAILED if n_fail else EXIT_OK


def cmd_asympt(args, parser, out):
    from . import asympt
    ns = [n for n in range(args.n_min, args.n_max + 1, args.step) if n % 2 == 1]
    if len(ns) < 2:
        parser.error("need at least two odd orders in the window")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        fit = asympt.vc_sweep(ns, model=args.model)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    target = asympt.fig8_volume() / (2 * 3.141592653589793)
    rel = abs(fit.two_pi_slope / (2 * 3.141592653589793) - target) / target
    if args.format == "csv":
        out.write(asympt.sweep_csv(fit))
        return EXIT_OK
    payload = {"schema": 1, "command": "asympt", "model": fit.model,
               "orders": list(fit.n_values), "slope": fit.slope,
               "intercept": fit.intercept, "r_squared": fit.r_squared,
               "volume_estimate": fit.two_pi_slope,
               "volume": asympt.fig8_volume(), "relative_error": rel}
    rows = [(fit.model, f"{fit.slope:.12g}", f"{fit.two_pi_slope:.12g}",
             f"{asympt.fig8_volume():.12g}", f"{rel:.3e}", f"{fit.r_squared:.12f}")]
    _emit(payload, rows,
          ("model", "slope", "volume_estimate", "volume", "rel_err", "r2"),
          args.format, out)
    return EXIT_OK


def cmd_bridge(args, parser, out):
    from . import kashaev
    from .specfun import RootSystem
    orders = _parse_orders(args.n, parser) or [3, 5, 7]
    rows, recs, worst = [], [], 0.0
    for n in sorted(set(orders)):
        res = kashaev.bridge_residuals(RootSystem(n))
        for key in ("mixed_pp_pm", "dressed", "main", "phase"):
            rows.append((n, key, f"{res[key]:.3e}"))
            recs.append({"N": n, "identity": key, "residual": res[key]})
            worst = max(worst, res[key])
    payload = {"schema": 1, "command": "bridge", "records": recs}
    _emit(payload, rows, ("N", "identity", "residual"), args.format, out)
    return EXIT_CHECK_FAILED if worst > args.tol else EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="qhlink",
        description="quantum hyperbolic and Kashaev link invariants")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="evaluate link invariants")
    pc.add_argument("--link", action="append", required=True,
                    help="catalog name; repeatable or comma separated")
    pc.add_argument("--n", action="append", default=[],
                    help="odd order; repeatable or comma separated")
    pc.add_argument("--family", choices=("qh", "kashaev", "both"), default="qh")
    pc.add_argument("--tol", type=float, default=1e-7,
                    help="proportionality tolerance for the tangle scalar")
    _add_common(pc)
    pc.set_defaults(fn=cmd_compute)

    pv = sub.add_parser("verify", help="replay identity check suites")
    pv.add_argument("--suite", action="append",
                    help="suite name; repeatable (default: all)")
    pv.add_argument("--n", action="append", default=[],
                    help="override the per-suite default orders")
    pv.add_argument("--seed", type=int, default=0)
    _add_common(pv)
    pv.set_defaults(fn=cmd_verify)

    pa = sub.add_parser("asympt", help="growth fit for the figure-eight sequence")
    pa.add_argument("--n-min", type=int, default=201)
    pa.add_argument("--n-max", type=int, default=601)
    pa.add_argument("--step", type=int, default=50)
    pa.add_argument("--model", choices=("plain", "corrected"), default="corrected")
    _add_common(pa)
    pa.set_defaults(fn=cmd_asympt)

    pb = sub.add_parser("bridge", help="exact bridge identity residuals")
    pb.add_argument("--n", action="append", default=[],
                    help="odd order; repeatable (default: 3 5 7)")
    pb.add_argument("--tol", type=float, default=1e-8)
    _add_common(pb)
    pb.set_defaults(fn=cmd_bridge)
    return p


def main(argv=None):
    _cap_threads()
    parser = build_parser()
    args = parser.parse_args(argv)
    from .tensor import InfeasibleSizeError
    try:
        return args.fn(args, parser, sys.stdout)
    except InfeasibleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front-end.

Subcommands: params, bound, stencil, approx, verify.  Exit codes:

    0   success
    1   verify found a gated dominance failure
    2   params: requested accuracy infeasible under the window cap
    3   approx: one or more evaluation points had no full window
    64  usage error (bad flags)
    65  data/domain error (Nyquist violation, non-uniform input grid)
    74  I/O failure

Output format is text by default; --format json/csv where supported.  The
environment variable REGSHANNON_OUT supplies the default output directory
for verify reports.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import asdict

import numpy as np

from . import bounds as bnd
from . import params as prm
from . import verify as vfy
from .bounds import FunctionNorms, Window
from .errors import (NonUniformGridError, NyquistError, ParameterError,
                     RegShannonError, WindowExceedsDataError)
from .kernel import KernelParams
from .sampling import UniformSamples, approximate, build_stencil

EX_OK = 0
EX_DOMINANCE = 1
EX_INFEASIBLE = 2
EX_POINT_ERRORS = 3
EX_USAGE = 64
EX_DATAERR = 65
EX_IOERR = 74


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit 2; contract says 64
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(EX_USAGE)


def _kernel_params(args) -> KernelParams:
    if (args.r is None) == (args.sigma is None):
        raise ParameterError("exactly one of --r and --sigma must be given")
    if args.r is not None:
        return KernelParams.from_ratio(args.delta, args.r)
    return KernelParams(delta=args.delta, sigma=args.sigma)


def _emit(payload: dict, fmt: str):
    if fmt == "json":
        payload = {"schema_version": 1, **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif fmt == "csv":
        cols = list(payload)
        print(",".join(cols))
        print(",".join(repr(v) if isinstance(v, float) else str(v)
                       for v in payload.values()))
    else:
        for k, v in payload.items():
            print(f"{k} = {v!r}" if isinstance(v, float) else f"{k} = {v}")


def cmd_params(args) -> int:
    if args.eta <= 0:
        sys.stderr.write(f"error: --eta must be positive, got {args.eta}\n")
        return EX_USAGE
    try:
        choice = prm.choose(args.eta, args.band, args.delta,
                            safety=args.safety, m_cap=args.m_cap)
    except NyquistError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EX_DATAERR
    _emit(asdict(choice), args.format)
    return EX_OK if choice.feasible else EX_INFEASIBLE


def cmd_bound(args) -> int:
    params = _kernel_params(args)
    norms = FunctionNorms(norm_f=args.norm_f, norm_fs=args.norm_fs,
                          bandlimit=args.band)
    window = Window(m1=args.m1, m2=args.m2)
    try:
        bb = bnd.total_bound(args.s, norms, params, window)
    except NyquistError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EX_DATAERR
    _emit(asdict(bb), args.format)
    return EX_OK


def cmd_stencil(args) -> int:
    params = _kernel_params(args)
    window = Window(m1=args.m1, m2=args.m2)
    st = build_stencil(args.s, args.tau, params, window)
    lines = ["offset,weight"]
    for off, w in zip(st.offsets, st.weights):
        lines.append(f"{off},{float(w)!r}")
    text = "\n".join(lines) + "\n"
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            sys.stderr.write(f"error: cannot write {args.out}: {exc}\n")
            return EX_IOERR
    return EX_OK


def _read_samples(path: str) -> UniformSamples:
    try:
        if path.endswith(".npy"):
            arr = np.load(path)
            ts, vals = arr[:, 0], arr[:, 1]
        else:
            arr = np.genfromtxt(path, delimiter=",", names=True)
            ts, vals = arr["t"], arr["value"]
    except OSError:
        raise
    except Exception as exc:
        raise NonUniformGridError(f"cannot parse samples from {path}: {exc}")
    if ts.size < 2:
        raise NonUniformGridError("need at least two samples to infer spacing")
    steps = np.diff(ts)
    delta = float(np.mean(steps))
    if delta <= 0 or np.any(np.abs(steps - delta) > 1e-9 * abs(delta)):
        raise NonUniformGridError(
            f"input grid is not uniform to relative 1e-9 (spacing around {delta})")
    return UniformSamples(values=np.asarray(vals, dtype=float),
                          delta=delta, origin=float(ts[0]))


def cmd_approx(args) -> int:
    try:
        samples = _read_samples(args.input)
    except OSError as exc:
        sys.stderr.write(f"error: cannot read {args.input}: {exc}\n")
        return EX_IOERR
    except NonUniformGridError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EX_DATAERR
    params = _kernel_params(argparse.Namespace(
        r=args.r, sigma=args.sigma, delta=samples.delta))
    window = Window(m1=args.m1, m2=args.m2)
    points = [float(p) for p in args.at.split(",") if p.strip()]
    failures = 0
    rows = []
    for t in points:
        try:
            val = float(approximate(samples, t, args.s, params, window))
            rows.append((t, repr(val)))
        except WindowExceedsDataError as exc:
            failures += 1
            rows.append((t, f"error: {exc}"))
    if args.format == "json":
        print(json.dumps({"schema_version": 1,
                          "results": [{"t": t, "value": v} for t, v in rows]},
                         indent=2, sort_keys=True))
    else:
        print("t,value")
        for t, v in rows:
            print(f"{t!r},{v}")
    return EX_POINT_ERRORS if failures else EX_OK


def cmd_verify(args) -> int:
    out_dir = args.out or os.environ.get("REGSHANNON_OUT") or "."
    suite = vfy.builtin_suite(seed=args.seed)
    domain = (args.domain[0], args.domain[1])
    m_values = args.m_values
    r_values = args.r_values
    s_values = args.s_values

    reports = []
    for tf in suite:
        for s in s_values:
            for m in m_values:
                for r in r_values:
                    reports.append(vfy.run_case(
                        tf, s, KernelParams.from_ratio(args.delta, r),
                        Window.symmetric(m), domain=domain, mesh=args.mesh))
    if args.with_sweeps:
        # descriptive only: includes deliberately under-resolved settings
        sinc1 = next(tf for tf in suite if tf.name == "sinc_b1.0")
        reports.extend(vfy.sweep(sinc1, 0, args.delta,
                                 r_values=[1.0, 2.0, 3.2, 3.5],
                                 m_values=[4, 8, 33], domain=domain,
                                 mesh=args.mesh))

    truncs = []
    for tf in suite:
        for m in m_values:
            if m >= 3:
                truncs.append(vfy.truncation_comparison(
                    tf, args.delta, m, 3.2, domain=domain, mesh=args.mesh))

    oracle_ok = True
    rng = np.random.default_rng(args.seed)
    for tf in suite:
        for s in (1, 2):
            for t0 in rng.uniform(domain[0], domain[1], size=3):
                ref = vfy.fd_oracle(tf.eval, s, float(t0), h0=0.05)
                got = float(tf.eval_deriv(np.asarray(t0), s))
                if abs(got - ref) > 1e-6 * max(1.0, abs(ref)):
                    oracle_ok = False

    try:
        paths = vfy.write_reports(reports, truncs, out_dir, seed=args.seed)
    except OSError as exc:
        sys.stderr.write(f"error: cannot write reports to {out_dir}: {exc}\n")
        return EX_IOERR

    gated = [r for r in reports if r.hyp_passed]
    failures = [r for r in gated if r.ratio > 1.0]
    trunc_failures = [t for t in truncs if not t.plain_within_lemma4]
    worst = max((r.ratio for r in gated), default=0.0)
    verdict = "PASS" if not failures and not trunc_failures and oracle_ok else "FAIL"
    print(f"verify: {len(reports)} cases, {len(gated)} hypothesis-gated, "
          f"{len(failures)} dominance failures, worst gated ratio "
          f"{worst:.3e} -> {verdict}")
    for k, v in sorted(paths.items()):
        print(f"  wrote {v}")
    if failures:
        for r in failures:
            sys.stderr.write(f"dominance failure: {r.case_id} ratio={r.ratio:.3e}\n")
    if trunc_failures:
        for t in trunc_failures:
            sys.stderr.write(f"lemma4 violation: {t.function} m={t.m}\n")
    if not oracle_ok:
        sys.stderr.write("suite derivative oracle mismatch\n")
    return EX_OK if verdict == "PASS" else EX_DOMINANCE


def build_parser() -> _Parser:
    p = _Parser(prog="regshannon",
                description="Gaussian-regularized Shannon sampling toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def add_kernel_flags(sp, with_s=True):
        sp.add_argument("--delta", type=float, default=1.0,
                        help="grid spacing (default 1)")
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--r", type=float, default=None,
                       help="sigma/delta ratio (exclusive with --sigma)")
        g.add_argument("--sigma", type=float, default=None, help="Gaussian width")
        if with_s:
            sp.add_argument("--s", type=int, default=0, help="derivative order")
        sp.add_argument("--m1", type=int, default=32, help="right window count")
        sp.add_argument("--m2", type=int, default=32, help="left window count")

    sp = sub.add_parser("params", help="pick (r, m) for a target accuracy order")
    sp.add_argument("--eta", type=float, required=True, help="accuracy order: error ~ 10^-eta")
    sp.add_argument("--band", type=float, default=0.0, help="band limit B")
    sp.add_argument("--delta", type=float, default=1.0)
    sp.add_argument("--safety", type=float, default=prm.DEFAULT_SAFETY)
    sp.add_argument("--m-cap", type=int, default=prm.DEFAULT_M_CAP)
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("bound", help="evaluate the total error bound")
    add_kernel_flags(sp)
    sp.add_argument("--band", type=float, default=0.0, help="band limit B")
    sp.add_argument("--norm-f", dest="norm_f", type=float, default=1.0)
    sp.add_argument("--norm-fs", dest="norm_fs", type=float, default=1.0)
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("stencil", help="emit offset,weight rows for one stencil")
    add_kernel_flags(sp)
    sp.add_argument("--tau", type=float, default=0.0,
                    help="fractional offset in [0, delta)")
    sp.add_argument("--out", default=None, help="output CSV path (default stdout)")
    sp.set_defaults(func=cmd_stencil)

    sp = sub.add_parser("approx", help="approximate f^(s) at points from a sample file")
    sp.add_argument("--input", required=True, help="CSV with header t,value (or .npy)")
    sp.add_argument("--at", required=True, help="comma-separated evaluation points")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--r", type=float, default=None)
    g.add_argument("--sigma", type=float, default=None)
    sp.add_argument("--s", type=int, default=0)
    sp.add_argument("--m1", type=int, default=32)
    sp.add_argument("--m2", type=int, default=32)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_approx)

    sp = sub.add_parser("verify", help="run the verification harness and write reports")
    sp.add_argument("--out", default=None,
                    help="output directory (default $REGSHANNON_OUT or .)")
    sp.add_argument("--delta", type=float, default=1.0)
    sp.add_argument("--seed", type=int, default=vfy.DEFAULT_SUITE_SEED)
    sp.add_argument("--mesh", type=int, default=10)
    sp.add_argument("--domain", type=float, nargs=2, default=(-20.0, 20.0))
    sp.add_argument("--s-values", type=int, nargs="+", default=[0, 1, 2])
    sp.add_argument("--m-values", type=int, nargs="+", default=[8, 16, 32])
    sp.add_argument("--r-values", type=float, nargs="+", default=[2.8, 3.2, 3.8])
    sp.add_argument("--with-sweeps", action="store_true",
                    help="include descriptive parameter sweeps in the report")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NyquistError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EX_DATAERR
    except ParameterError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EX_USAGE
    except RegShannonError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EX_DATAERR


if __name__ == "__main__":
    sys.exit(main())

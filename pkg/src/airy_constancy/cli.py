"""Command line interface.

Exit codes: 0 success, 1 predictor/oracle mismatch or broken invariant,
2 bad arguments, 3 prediction unsupported (without --fallback-oracle).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import oracle, predictor, profile
from .numtheory import DomainError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3


@dataclass
class CliConfig:
    tolerance: float = 1e-9
    output_format: str = "csv"
    output_path: str | None = None
    figure_path: str | None = None


def fmt(v: float) -> str:
    """12 significant digits, with sub-1e-12 noise and negative zero flattened."""
    v = round(float(v), 12) + 0.0
    return format(v, ".12g")


def _csv(header: str, rows) -> str:
    lines = [header] + [",".join(map(str, r)) for r in rows]
    return "\n".join(lines) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, cfg: CliConfig):
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _time(p: int, q: int) -> profile.RationalTime:
    t = profile.RationalTime(p, q)
    if (t.p, t.q) != (p, q):
        print(f"# t = pi*{p}/{q} reduced to pi*{t}", file=sys.stderr)
    return t


def _warn(issues):
    for msg in issues:
        print(f"warning: {msg}", file=sys.stderr)
    return EXIT_MISMATCH if issues else EXIT_OK


def cmd_profile(p: int, q: int, cfg: CliConfig) -> int:
    t = _time(p, q)
    prof = profile.compute_profile(t)
    if cfg.output_format == "json":
        _emit(_json({"p": t.p, "q": t.q, "values": [float(fmt(v)) for v in prof.values]}), cfg)
    else:
        rows = [(j, fmt(j / t.q), fmt((j + 1) / t.q), fmt(a)) for j, a in enumerate(prof.values)]
        _emit(_csv("j,x_start,x_end,a_j", rows), cfg)
    if cfg.figure_path:
        from .plotting import plot_profile

        plot_profile(prof, cfg.figure_path)
    return _warn(profile.profile_violations(prof, cfg.tolerance))


def cmd_comb(p: int, q: int, cfg: CliConfig) -> int:
    t = _time(p, q)
    comb = profile.compute_comb(t)
    if cfg.output_format == "json":
        _emit(_json({"p": t.p, "q": t.q, "betas": [float(fmt(b)) for b in comb.betas]}), cfg)
    else:
        rows = [(l, fmt(l / t.q), fmt(b)) for l, b in enumerate(comb.betas)]
        _emit(_csv("l,x_node,beta", rows), cfg)
    if cfg.figure_path:
        from .plotting import plot_comb

        plot_comb(comb, cfg.figure_path)
    return _warn(profile.comb_violations(comb, cfg.tolerance))


def cmd_jumps(p: int, q: int, cfg: CliConfig) -> int:
    t = _time(p, q)
    jumps = [profile.compute_jump(t, j) for j in range(2 * t.q)]
    zeros = [jp.exact_zero for jp in jumps]
    ext = profile.extremal_jumps(t, tie_tol=cfg.tolerance)
    if cfg.output_format == "json":
        _emit(
            _json(
                {
                    "p": t.p,
                    "q": t.q,
                    "jumps": [
                        {"j": j, "value": float(fmt(jp.float_value)), "exact_zero": z}
                        for j, (jp, z) in enumerate(zip(jumps, zeros))
                    ],
                    "max": {"j": ext.j_max, "value": float(fmt(ext.value_max))},
                    "min": {"j": ext.j_min, "value": float(fmt(ext.value_min))},
                }
            ),
            cfg,
        )
    else:
        rows = [(j, fmt(jp.float_value), str(z).lower()) for j, (jp, z) in enumerate(zip(jumps, zeros))]
        text = _csv("j,value,exact_zero", rows)
        text += f"# max j={ext.j_max} value={fmt(ext.value_max)}; min j={ext.j_min} value={fmt(ext.value_min)}\n"
        _emit(text, cfg)
    if cfg.figure_path:
        from .plotting import plot_jumps

        plot_jumps(t, [jp.float_value for jp in jumps], zeros, cfg.figure_path)
    incoherent = [
        f"jump {j}: exact zero disagrees with float value {jp.float_value!r}"
        for j, (jp, z) in enumerate(zip(jumps, zeros))
        if z != (abs(jp.float_value) < 1e-6)
    ]
    return _warn(incoherent)


def _verify_rows(reports):
    for r in reports:
        agree = "na" if r.agree is None else str(r.agree).lower()
        yield (
            r.time.p,
            r.time.q,
            r.predicted.status,
            agree,
            " ".join(map(str, sorted(r.missing))),
            " ".join(map(str, sorted(r.spurious))),
        )


def cmd_predict(p: int, q: int, cfg: CliConfig, fallback: bool = False) -> int:
    t = _time(p, q)
    pred = predictor.predict(t)
    out = pred.to_json()
    if not pred.supported and fallback:
        out["oracle_members"] = list(oracle.oracle_pcset(t).members)
    _emit(_json(out), cfg)
    if not pred.supported and not fallback:
        return EXIT_UNSUPPORTED
    return EXIT_OK


def cmd_oracle(p: int, q: int, cfg: CliConfig) -> int:
    t = _time(p, q)
    pc = oracle.oracle_pcset(t)
    if cfg.output_format == "csv":
        _emit(_csv("j", ((j,) for j in pc.members)), cfg)
    else:
        _emit(_json({"p": t.p, "q": t.q, "members": list(pc.members)}), cfg)
    return EXIT_OK


def cmd_verify(p, q, cfg: CliConfig, q_max: int | None = None, fallback: bool = False) -> int:
    if q_max is not None:
        reports = oracle.verify_range(q_max)
    else:
        reports = [oracle.verify(_time(p, q))]
    mismatched = [r for r in reports if r.agree is False]
    unsupported = [r for r in reports if r.agree is None]
    if cfg.output_format == "csv":
        _emit(_csv("p,q,status,agree,missing,spurious", _verify_rows(reports)), cfg)
    elif q_max is None:
        _emit(_json(reports[0].to_json()), cfg)
    else:
        summary = {
            "q_max": q_max,
            "reports": len(reports),
            "agree": sum(r.agree is True for r in reports),
            "mismatch": [str(r.time) for r in mismatched],
            "unsupported": [str(r.time) for r in unsupported],
        }
        _emit(_json({"summary": summary, "reports": [r.to_json() for r in reports]}), cfg)
    print(
        f"# {len(reports)} reports: {len(reports) - len(mismatched) - len(unsupported)} agree, "
        f"{len(mismatched)} mismatch, {len(unsupported)} unsupported",
        file=sys.stderr,
    )
    if mismatched:
        return EXIT_MISMATCH
    # a sweep reports its rule gaps in the summary; a single time signals them
    if unsupported and q_max is None and not fallback:
        return EXIT_UNSUPPORTED
    return EXIT_OK


def cmd_render(p, q, cfg: CliConfig, terms: int = 20000, samples: int = 1200, irrational: float | None = None) -> int:
    if terms < 1 or samples < 2:
        raise DomainError("render needs --terms >= 1 and --samples >= 2")
    import numpy as np

    if irrational is not None:
        tau, title = irrational, rf"$t = \pi \cdot {irrational}$"
    else:
        t = _time(p, q)
        tau, title = Fraction(t.p, t.q), rf"$t = \pi \cdot {t}$"
    # cell-centred grid on [0, 2*pi], x reported in units of pi
    xs = (np.arange(samples) + 0.5) * (2.0 / samples)
    us = profile.fourier_eval(tau, xs * math.pi, terms)
    if cfg.output_format == "json":
        _emit(_json({"x": [float(fmt(x)) for x in xs], "u": [float(fmt(u)) for u in us]}), cfg)
    else:
        _emit(_csv("x,u", ((fmt(x), fmt(u)) for x, u in zip(xs, us))), cfg)
    if cfg.figure_path:
        from .plotting import plot_profile, plot_render

        if irrational is None:
            plot_profile(profile.compute_profile(t), cfg.figure_path, render=(xs, us))
        else:
            plot_render(xs, us, cfg.figure_path, title=title)
    return EXIT_OK


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be > 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive_float, default=argparse.SUPPRESS, help="float tolerance (default 1e-9)")
    common.add_argument("--format", choices=("csv", "json"), default=argparse.SUPPRESS, dest="format")
    common.add_argument("--out", default=argparse.SUPPRESS, metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--figure", default=argparse.SUPPRESS, metavar="PATH", help="also render a figure (needs matplotlib)")

    parser = argparse.ArgumentParser(
        prog="airy-constancy",
        parents=[common],
        description="Piecewise constant profiles of the periodic Airy equation at times pi*p/q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def timed(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)
        return sp

    timed("profile", "constant values on each interval")
    timed("jumps", "jumps at the nodes, with exact zero flags")
    timed("comb", "Dirac comb weights of the fundamental solution")
    timed("predict", "points of constancy from congruence rules").add_argument("--fallback-oracle", action="store_true")
    timed("oracle", "points of constancy from exact Kummer sum vanishing")

    v = sub.add_parser("verify", parents=[common], help="compare predictor and oracle")
    v.add_argument("p", type=int, nargs="?")
    v.add_argument("q", type=int, nargs="?")
    v.add_argument("--range", type=int, dest="q_max", metavar="N", help="sweep q = 2..N, all reduced p")
    v.add_argument("--fallback-oracle", action="store_true")

    r = sub.add_parser("render", parents=[common], help="partial Fourier sum sampled on [0, 2*pi]")
    r.add_argument("p", type=int, nargs="?")
    r.add_argument("q", type=int, nargs="?")
    r.add_argument("--irrational", type=float, metavar="X", help="render at t = pi*X instead of pi*p/q")
    r.add_argument("--terms", type=int, default=20000)
    r.add_argument("--samples", type=int, default=1200)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = CliConfig(
        tolerance=getattr(args, "tol", 1e-9),
        output_format=getattr(args, "format", "csv"),
        output_path=getattr(args, "out", None),
        figure_path=getattr(args, "figure", None),
    )
    cmd = args.command
    try:
        if cmd == "verify":
            if args.q_max is None and (args.p is None or args.q is None):
                parser.error("verify needs p q or --range N")
            if args.q_max is not None and args.q_max < 2:
                parser.error("--range needs N >= 2")
            if cfg.output_format == "csv" and getattr(args, "format", None) is None:
                cfg.output_format = "json"
            return cmd_verify(args.p, args.q, cfg, q_max=args.q_max, fallback=args.fallback_oracle)
        if cmd == "render":
            if args.irrational is None and (args.p is None or args.q is None):
                parser.error("render needs p q or --irrational X")
            return cmd_render(args.p, args.q, cfg, args.terms, args.samples, args.irrational)
        if cmd in ("predict", "oracle") and getattr(args, "format", None) is None:
            cfg.output_format = "json"
        if cmd == "predict":
            return cmd_predict(args.p, args.q, cfg, fallback=args.fallback_oracle)
        handler = {"profile": cmd_profile, "jumps": cmd_jumps, "comb": cmd_comb, "oracle": cmd_oracle}[cmd]
        return handler(args.p, args.q, cfg)
    except DomainError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

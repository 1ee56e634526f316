"""Command line front end: ``periodcheck <command> ...``.

Exit codes: 0 when nothing fails (expected-fail is allowed), 1 when some check
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import polylog
from .checks import CHECKS, DEFAULT_BIVARIATE_ORDER, SuiteOptions, run_suite
from .punctured import ExprSyntaxError, NotInvertible, chart_c, chart_h, expand_at, parse_expr
from .report import _jsonable
from .series import TruncatedSeries, is_prime
from .special import NamedSeriesId, named_series
from .tate import boundary, expand_in_q, q_coefficients

COMMANDS = ("verify", "series", "expand", "boundary", "moments", "planck", "zeta")


@dataclass
class RunConfig:
    command: str
    order: int | None = None
    prime: int = 2
    tol: float = 1e-10
    format: str = "text"
    perturb: bool = False
    bivariate_order: int = DEFAULT_BIVARIATE_ORDER

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.order is not None and self.order < 1:
            raise ValueError("--order must be >= 1")
        if self.bivariate_order < 1:
            raise ValueError("--bivariate-order must be >= 1")
        if not is_prime(self.prime):
            raise ValueError(f"--prime {self.prime} is not prime")
        if not self.tol > 0:
            raise ValueError("--tol must be positive")
        if self.format not in ("text", "json"):
            raise ValueError("--format must be text or json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="periodcheck", description="Exact and numerical checks for circle-action periods.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, order_default=None):
        p.add_argument("--order", type=int, default=order_default)
        p.add_argument("--prime", type=int, default=2)
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run named checks, or all of them")
    v.add_argument("names", nargs="*", default=["all"], metavar="name", help=f"one of: all, {', '.join(sorted(CHECKS))}")
    common(v)
    v.add_argument("--bivariate-order", type=int, default=DEFAULT_BIVARIATE_ORDER)
    v.add_argument("--perturb", action="store_true", help="inject a known fault (harness self-test)")

    s = sub.add_parser("series", help="print a named series")
    s.add_argument("name", choices=[n.value for n in NamedSeriesId])
    common(s, 16)

    e = sub.add_parser("expand", help="expand a function on the punctured line")
    e.add_argument("--expr", required=True)
    e.add_argument("--at", default="0", choices=("0", "1", "inf", "c", "h"))
    common(e, 8)

    b = sub.add_parser("boundary", help="Q table row, or the boundary of an expression in kappa")
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=int)
    g.add_argument("--expr", help="element of Z[k, 1/k, 1/(1-k)], written in the variable k")
    common(b, 16)

    m = sub.add_parser("moments", help="divided moment int x^(s-1)/(Gamma(s)(e^x-1))")
    m.add_argument("--s", type=float, required=True)
    common(m)

    pl = sub.add_parser("planck", help="reduced Planck density and the Stefan-Boltzmann integral")
    pl.add_argument("--eps", type=float, default=None)
    common(pl)

    z = sub.add_parser("zeta", help="Riemann zeta with an error estimate")
    z.add_argument("--s", type=float, required=True)
    common(z)
    return ap


def _series_text(f) -> str:
    if isinstance(f, list):
        return "\n".join(f"z^{k}: {c}" for k, c in enumerate(f))
    return str(f)


def _series_json(f) -> dict:
    if isinstance(f, TruncatedSeries):
        return f.to_dict()
    if isinstance(f, list):
        return {"coefficients_in_b": [str(c) for c in f]}
    return f.to_dict()


def _emit(fmt: str, payload: dict, text: str) -> None:
    print(json.dumps(_jsonable(payload), indent=2) if fmt == "json" else text)


def _run(args, cfg: RunConfig) -> int:
    if cfg.command == "verify":
        opts = SuiteOptions(cfg.order, cfg.bivariate_order, cfg.prime, cfg.tol, cfg.perturb)
        report = run_suite(args.names, opts)
        if cfg.format == "json":
            print(report.to_json())
        else:
            print(report.to_text())
        return report.exit_code

    if cfg.command == "series":
        f = named_series(args.name, cfg.order, cfg.prime)
        _emit(cfg.format, {"series": args.name, "order": cfg.order, **_series_json(f)}, _series_text(f))
        return 0

    if cfg.command == "expand":
        f = parse_expr(args.expr)
        if args.at == "c":
            g = chart_c(f, cfg.order)
        elif args.at == "h":
            g = chart_h(f, cfg.order)
        else:
            g = expand_at(f, args.at, cfg.order)
        _emit(cfg.format, {"expr": str(f), "at": args.at, **g.to_dict()}, str(g))
        return 0

    if cfg.command == "boundary":
        if args.k is not None:
            row = q_coefficients(args.k)
            _emit(cfg.format, {"k": args.k, "Q": row}, " ".join(str(c) for c in row))
        else:
            f = parse_expr(args.expr, var="k")
            q = expand_in_q(f, cfg.order)
            d = boundary(q)
            _emit(cfg.format, {"expr": str(f), "q_expansion": q.to_dict(), "boundary": list(d.coeffs)}, str(d))
        return 0

    if cfg.command == "moments":
        r = polylog.divided_moment(args.s, cfg.tol)
        text = f"{r.value!r} +- {r.est_error:.2e} ({r.status})"
        if r.status != "ok":
            text += f"\n{r.diagnostic}"
        _emit(cfg.format, {"s": args.s, **r.to_dict()}, text)
        return 0

    if cfg.command == "planck":
        sb = polylog.stefan_boltzmann(cfg.tol)
        payload = {"stefan_boltzmann": sb.to_dict(), "wien_peak": polylog.wien_peak()}
        text = f"int 2 eps^3/(e^eps-1) = {sb.value!r}   wien peak = {payload['wien_peak']!r}"
        if args.eps is not None:
            payload["density"] = polylog.planck_reduced(args.eps)
            text = f"density({args.eps}) = {payload['density']!r}\n" + text
        _emit(cfg.format, payload, text)
        return 0

    val, err = polylog.zeta_with_error(args.s)
    _emit(cfg.format, {"s": args.s, "value": val, "est_error": err}, f"{val!r} +- {err:.2e}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        args.command,
        args.order,
        args.prime,
        args.tol,
        args.format,
        getattr(args, "perturb", False),
        getattr(args, "bivariate_order", DEFAULT_BIVARIATE_ORDER),
    )
    try:
        cfg.validate()
        return _run(args, cfg)
    except (KeyError, ValueError, ExprSyntaxError, NotInvertible) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"periodcheck: error: {msg}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

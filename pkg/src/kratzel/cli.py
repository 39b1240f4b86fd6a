"""Command-line interface: point evaluation, coefficient dumps, tables.

Exit codes: 0 on success, 1 when evaluation fails (domain/convergence), 2 on
usage errors (argparse's default).
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import large_order, whittaker
from .errors import KratzelError
from .expansions import (convergent_series, expand_mellin_barnes,
                         expand_negative_p, expand_saddle, mb_coefficients,
                         saddle_coefficients)
from .quadrature import (QuadratureConfig, kratzel_quadrature,
                         whittaker_i_quadrature, whittaker_j_quadrature)
from .result import ExpansionResult
from .tables import RENDERERS, build_table

_INTEGRALS = ("kratzel", "whittaker-i", "whittaker-j")
_METHODS = ("quadrature", "saddle", "mb", "series", "negp-series",
            "negp-asym", "large-nu")
_FAMILIES = ("saddle", "mb", "large-order", "kernel", "edge", "diagonal")


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--quad-tol", type=float, default=1e-12,
                     help="relative tolerance of the quadrature oracle")
    sub.add_argument("--format", choices=("csv", "markdown", "json"),
                     default="markdown")
    sub.add_argument("--out", default=None,
                     help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kratzel",
        description="Evaluate the Kratzel and Bessel-kernel integrals by "
                    "quadrature, saddle-point and Mellin-Barnes routes")
    subs = parser.add_subparsers(dest="command", required=True)

    ev = subs.add_parser("eval", help="evaluate one integral")
    ev.add_argument("--integral", choices=_INTEGRALS, required=True)
    ev.add_argument("--method", choices=_METHODS, required=True)
    ev.add_argument("--p", type=float, default=None)
    ev.add_argument("--nu", type=float, default=None)
    ev.add_argument("--a", type=float, default=None)
    ev.add_argument("--b", type=float, default=None)
    ev.add_argument("--x-re", type=float, required=True)
    ev.add_argument("--x-im", type=float, default=0.0)
    ev.add_argument("--terms", type=int, default=5,
                    help="truncation index for expansion methods")
    ev.add_argument("--compare-oracle", action="store_true",
                    help="also report |value/oracle - 1|")
    _common_flags(ev)

    co = subs.add_parser("coeffs", help="dump a coefficient family")
    co.add_argument("--family", choices=_FAMILIES, required=True)
    co.add_argument("--p", type=float, default=None)
    co.add_argument("--nu", type=float, default=None)
    co.add_argument("--a", type=float, default=None)
    co.add_argument("--b", type=float, default=None)
    co.add_argument("--k", type=int, default=0,
                    help="edge family: offset of the endpoint exponent")
    co.add_argument("--count", type=int, default=6)
    _common_flags(co)

    ta = subs.add_parser("table", help="reproduce a reference table")
    ta.add_argument("--id", type=int, choices=(1, 2, 3, 4, 5), required=True)
    _common_flags(ta)
    return parser


def _need(args, names: tuple[str, ...]) -> list[float]:
    vals = []
    for name in names:
        v = getattr(args, name.replace("-", "_"))
        if v is None:
            print(f"usage error: --{name} is required here", file=sys.stderr)
            raise SystemExit(2)
        vals.append(v)
    return vals


def _eval_kratzel(args, x: complex, cfg: QuadratureConfig):
    method = args.method
    if method == "large-nu":
        (p, a) = _need(args, ("p", "a"))
        return large_order.expand_large_order(p, a, x, args.terms)
    (p, nu) = _need(args, ("p", "nu"))
    if method == "quadrature":
        return kratzel_quadrature(p, nu, x, cfg)
    if method == "saddle":
        return expand_saddle(p, nu, x, args.terms)
    if method == "mb":
        return expand_mellin_barnes(p, nu, x, args.terms)
    if method in ("series", "negp-series"):
        if method == "negp-series" and p >= 0:
            raise KratzelError("negp-series requires p < 0")
        return convergent_series(p, nu, x)
    if method == "negp-asym":
        return expand_negative_p(p, nu, x, args.terms)
    raise KratzelError(f"method {method} not available for kratzel")


def _eval_whittaker_i(args, z: complex, cfg: QuadratureConfig):
    (a, b, p, nu) = _need(args, ("a", "b", "p", "nu"))
    if args.method == "quadrature":
        return whittaker_i_quadrature(a, b, z, p, nu, cfg)
    if args.method == "saddle":
        params = whittaker.WhittakerParams(a=a, b=b, p=p, nu=nu)
        if z.real < 0:
            return whittaker.expand_i_negative(params, -z, args.terms)
        return whittaker.expand_i_positive(params, z, args.terms)
    raise KratzelError("whittaker-i supports methods quadrature and saddle")


def _eval_whittaker_j(args, z: complex, cfg: QuadratureConfig):
    (a, b, p) = _need(args, ("a", "b", "p"))
    if args.method == "quadrature":
        return whittaker_j_quadrature(a, b, z, p, cfg)
    if args.method == "saddle":
        if z.real >= 0:
            raise KratzelError("whittaker-j expansion requires Re z < 0")
        return whittaker.expand_j_negative(a, b, p, -z, args.terms)
    raise KratzelError("whittaker-j supports methods quadrature and saddle")


def _oracle(args, z: complex, cfg: QuadratureConfig) -> complex:
    if args.integral == "kratzel":
        if args.method == "large-nu":
            nu = large_order.derived_order(args.p, args.a, z)
        else:
            nu = args.nu
        return kratzel_quadrature(args.p, nu, z, cfg)
    if args.integral == "whittaker-i":
        return whittaker_i_quadrature(args.a, args.b, z, args.p, args.nu, cfg)
    return whittaker_j_quadrature(args.a, args.b, z, args.p, cfg)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_eval(args) -> int:
    cfg = QuadratureConfig(rel_tol=args.quad_tol)
    z = complex(args.x_re, args.x_im)
    dispatch = {"kratzel": _eval_kratzel, "whittaker-i": _eval_whittaker_i,
                "whittaker-j": _eval_whittaker_j}
    result = dispatch[args.integral](args, z, cfg)
    if isinstance(result, ExpansionResult):
        value = result.value
        diag = {
            "terms_abs": [abs(t) for t in result.terms],
            "last_term_ratio": result.last_term_ratio,
        }
    else:
        value = complex(result)
        diag = {}
    payload = {"integral": args.integral, "method": args.method,
               "value_re": value.real, "value_im": value.imag}
    payload.update(diag)
    if args.compare_oracle:
        oracle = _oracle(args, z, cfg)
        payload["oracle_re"] = oracle.real
        payload["oracle_im"] = oracle.imag
        payload["rel_error"] = abs(value / oracle - 1.0)
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [f"value = {value.real:.16e} {value.imag:+.16e}j"]
        if "terms_abs" in payload:
            terms = " ".join(f"{t:.3e}" for t in payload["terms_abs"])
            lines.append(f"per-term |t_k|: {terms}")
            lines.append(f"last term ratio: {payload['last_term_ratio']:.3e}")
        if "rel_error" in payload:
            lines.append(f"oracle = {payload['oracle_re']:.16e} "
                         f"{payload['oracle_im']:+.16e}j")
            lines.append(f"absolute relative error = "
                         f"{payload['rel_error']:.4e}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_coeffs(args) -> int:
    fam = args.family
    if fam == "saddle":
        (p, nu) = _need(args, ("p", "nu"))
        vals = saddle_coefficients(p, nu, args.count)
    elif fam == "mb":
        (p, nu) = _need(args, ("p", "nu"))
        vals = mb_coefficients(p, nu, args.count)
    elif fam == "large-order":
        (p, a) = _need(args, ("p", "a"))
        vals = np.array(
            large_order.expansion_coefficients(p, a, args.count).coefficients)
    elif fam == "kernel":
        (nu,) = _need(args, ("nu",))
        vals = whittaker.kernel_coefficients(nu, args.count)
    elif fam == "edge":
        (b, p) = _need(args, ("b", "p"))
        vals = whittaker.edge_coefficients(b, p, args.k, args.count)
    else:
        (a, b, p, nu) = _need(args, ("a", "b", "p", "nu"))
        params = whittaker.WhittakerParams(a=a, b=b, p=p, nu=nu)
        vals = whittaker.diagonal_coefficients(params, args.count)
    vals = np.asarray(vals, dtype=np.complex128)
    if args.format == "json":
        _emit(args, json.dumps({
            "family": fam,
            "values_re": [v.real for v in vals],
            "values_im": [v.imag for v in vals],
        }, indent=2) + "\n")
    else:
        lines = [f"{k},{v.real:.16e},{v.imag:.16e}"
                 for k, v in enumerate(vals)]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_table(args) -> int:
    cfg = QuadratureConfig(rel_tol=args.quad_tol)
    table = build_table(args.id, cfg)
    _emit(args, RENDERERS[args.format](table))
    return 1 if table["meta"].get("errors") else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"eval": _cmd_eval, "coeffs": _cmd_coeffs,
                "table": _cmd_table}
    try:
        return handlers[args.command](args)
    except KratzelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

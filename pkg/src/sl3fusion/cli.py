"""Command-line interface.

Subcommands::

    dim L1 L2                      dimension of the irreducible V(L)
    char L1 L2                     weight multiplicities of V(L)
    tensor L1 L2 M1 M2             irreducible components of V(L) (x) V(M)
    fusion-char L1 L2 M1 M2        graded decomposition of the fusion product
    graded-mult L1 L2 M1 M2 N1 N2  one graded multiplicity polynomial
    lr L1 L2 M1 M2 N1 N2           classical tensor multiplicity of V(N)
    verify                         consistency sweep over a grid of pairs

Output formats: ``text`` (default), ``json`` (canonical, byte-stable), and
``latex``.  Exit codes: 0 on success, 1 when ``verify`` finds failures, 2 on
usage or validation errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .characters import irrep_character, sorted_character_terms, tensor_decompose
from .closedform import graded_character, graded_multiplicity, lr_coefficient
from .fusion_oracle import graded_decomposition_oracle
from .qseries import (
    QP_ZERO,
    canonical_json,
    decomposition_to_json,
    qp_format,
    qp_format_latex,
    sorted_summands,
)
from .verification import CHECK_NAMES, SweepConfig, run_sweep
from .weights import weyl_dim

__all__ = ["main", "build_parser"]


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"weight coordinates are nonnegative, got {value}")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _evaluation_points(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"expected two comma-separated rationals (e.g. 0,1 or 2/3,5), got {text!r}"
        )
    try:
        z1, z2 = Fraction(parts[0]), Fraction(parts[1])
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"could not parse rationals from {text!r}")
    if z1 == z2:
        raise argparse.ArgumentTypeError("evaluation points must be distinct")
    return z1, z2


def _check_list(text: str) -> tuple[str, ...]:
    names = tuple(name.strip() for name in text.split(",") if name.strip())
    if not names:
        raise argparse.ArgumentTypeError("empty check list")
    for name in names:
        if name not in CHECK_NAMES:
            raise argparse.ArgumentTypeError(
                f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}"
            )
    return names


def _add_format(parser: argparse.ArgumentParser, choices=("text", "json", "latex")) -> None:
    parser.add_argument(
        "--format",
        choices=choices,
        default="text",
        help="output format (default: text)",
    )


def _poly_prefix_latex(poly) -> str:
    """Render a q-polynomial as a coefficient prefix for a V(...) term."""
    body = qp_format_latex(poly)
    if body == "1":
        return ""
    if "+" in body:
        body = f"({body})"
    return body + "\\,"


def _render_decomposition(dec, fmt: str) -> str:
    items = sorted_summands(dec)
    if fmt == "text":
        return " ; ".join(f"({nu[0]},{nu[1]}): {qp_format(poly)}" for nu, poly in items)
    pieces = [
        f"{_poly_prefix_latex(poly)}V({nu[0]},{nu[1]})" for nu, poly in items
    ]
    return " \\oplus ".join(pieces)


def _cmd_dim(args) -> int:
    lam = (args.coords[0], args.coords[1])
    value = weyl_dim(lam)
    if args.format == "json":
        print(canonical_json({"lambda": list(lam), "dim": value}))
    else:
        print(value)
    return 0


def _cmd_char(args) -> int:
    lam = (args.coords[0], args.coords[1])
    terms = sorted_character_terms(irrep_character(lam))
    if args.format == "json":
        payload = {
            "lambda": list(lam),
            "terms": [{"weight": list(w), "mult": m} for w, m in terms],
        }
        print(canonical_json(payload))
    elif args.format == "latex":
        pieces = [
            ("" if m == 1 else f"{m}\\,") + f"e^{{({w[0]},{w[1]})}}" for w, m in terms
        ]
        print(" + ".join(pieces))
    else:
        print(" ; ".join(f"({w[0]},{w[1]}): {m}" for w, m in terms))
    return 0


def _cmd_tensor(args) -> int:
    lam = (args.coords[0], args.coords[1])
    mu = (args.coords[2], args.coords[3])
    components = sorted_character_terms(tensor_decompose(lam, mu))
    if args.format == "json":
        payload = {
            "lambda": list(lam),
            "mu": list(mu),
            "components": [{"nu": list(nu), "mult": m} for nu, m in components],
        }
        print(canonical_json(payload))
    elif args.format == "latex":
        pieces = [
            f"V({nu[0]},{nu[1]})" + ("" if m == 1 else f"^{{\\oplus {m}}}")
            for nu, m in components
        ]
        print(" \\oplus ".join(pieces))
    else:
        print(" ; ".join(f"({nu[0]},{nu[1]}): {m}" for nu, m in components))
    return 0


def _fusion_decomposition(args, lam, mu):
    if args.oracle:
        return graded_decomposition_oracle(lam, mu, z=args.z, dim_bound=args.oracle_bound)
    return graded_character(lam, mu)


def _cmd_fusion_char(args) -> int:
    lam = (args.coords[0], args.coords[1])
    mu = (args.coords[2], args.coords[3])
    dec = _fusion_decomposition(args, lam, mu)
    if args.format == "json":
        print(canonical_json(decomposition_to_json(lam, mu, dec)))
    else:
        print(_render_decomposition(dec, args.format))
    return 0


def _cmd_graded_mult(args) -> int:
    lam = (args.coords[0], args.coords[1])
    mu = (args.coords[2], args.coords[3])
    nu = (args.coords[4], args.coords[5])
    if args.oracle:
        poly = _fusion_decomposition(args, lam, mu).get(nu, QP_ZERO)
    else:
        poly = graded_multiplicity(lam, mu, nu)
    if args.format == "json":
        payload = {
            "lambda": list(lam),
            "mu": list(mu),
            "nu": list(nu),
            "coeffs": list(poly),
        }
        print(canonical_json(payload))
    elif args.format == "latex":
        print(qp_format_latex(poly))
    else:
        print(qp_format(poly))
    return 0


def _cmd_lr(args) -> int:
    lam = (args.coords[0], args.coords[1])
    mu = (args.coords[2], args.coords[3])
    nu = (args.coords[4], args.coords[5])
    value = lr_coefficient(lam, mu, nu)
    if args.format == "json":
        payload = {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "lr": value}
        print(canonical_json(payload))
    else:
        print(value)
    return 0


def _cmd_verify(args) -> int:
    zs = tuple(args.z) if args.z else ((Fraction(0), Fraction(1)), (Fraction(2), Fraction(5)))
    config = SweepConfig(
        max_coord=args.max,
        oracle_dim_bound=args.oracle_bound,
        evaluation_params=zs,
        checks=args.checks,
        jobs=args.jobs,
    )
    report = run_sweep(config)
    if args.format == "json":
        print(canonical_json(report.to_payload()))
    else:
        for line in report.summary_lines():
            print(line)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl3fusion",
        description="Exact graded decompositions of sl3 fusion products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="dimension of the irreducible V(L1,L2)")
    p.add_argument("coords", nargs=2, type=_nonneg, metavar=("L1", "L2"))
    _add_format(p, choices=("text", "json"))
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("char", help="weight multiplicities of V(L1,L2)")
    p.add_argument("coords", nargs=2, type=_nonneg, metavar=("L1", "L2"))
    _add_format(p)
    p.set_defaults(func=_cmd_char)

    p = sub.add_parser("tensor", help="decompose V(L) (x) V(M) into irreducibles")
    p.add_argument("coords", nargs=4, type=_nonneg, metavar=("L1", "L2", "M1", "M2"))
    _add_format(p)
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser(
        "fusion-char", help="graded decomposition of the fusion product F(L, M)"
    )
    p.add_argument("coords", nargs=4, type=_nonneg, metavar=("L1", "L2", "M1", "M2"))
    _add_format(p)
    p.add_argument(
        "--oracle",
        action="store_true",
        help="compute via the evaluation-filtration oracle instead of the closed form",
    )
    p.add_argument(
        "--z",
        type=_evaluation_points,
        default=(Fraction(0), Fraction(1)),
        metavar="Z1,Z2",
        help="distinct rational evaluation points for --oracle (default: 0,1)",
    )
    p.add_argument(
        "--oracle-bound",
        type=_positive,
        default=400,
        metavar="D",
        help="largest product dimension the oracle accepts (default: 400)",
    )
    p.set_defaults(func=_cmd_fusion_char)

    p = sub.add_parser(
        "graded-mult", help="graded multiplicity polynomial [F(L, M) : V(N)]_q"
    )
    p.add_argument(
        "coords", nargs=6, type=_nonneg, metavar=("L1", "L2", "M1", "M2", "N1", "N2")
    )
    _add_format(p)
    p.add_argument("--oracle", action="store_true", help="use the filtration oracle")
    p.add_argument(
        "--z",
        type=_evaluation_points,
        default=(Fraction(0), Fraction(1)),
        metavar="Z1,Z2",
        help="distinct rational evaluation points for --oracle (default: 0,1)",
    )
    p.add_argument(
        "--oracle-bound", type=_positive, default=400, metavar="D",
        help="largest product dimension the oracle accepts (default: 400)",
    )
    p.set_defaults(func=_cmd_graded_mult)

    p = sub.add_parser("lr", help="tensor multiplicity of V(N) in V(L) (x) V(M)")
    p.add_argument(
        "coords", nargs=6, type=_nonneg, metavar=("L1", "L2", "M1", "M2", "N1", "N2")
    )
    _add_format(p, choices=("text", "json"))
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("verify", help="run the consistency sweep")
    p.add_argument(
        "--max", type=_nonneg, default=2, metavar="N",
        help="sweep all pairs with weight coordinates up to N (default: 2)",
    )
    p.add_argument(
        "--oracle-bound", type=_positive, default=100, metavar="D",
        help="skip oracle checks above this product dimension (default: 100)",
    )
    p.add_argument(
        "--jobs",
        type=_positive,
        default=max(1, int(os.environ.get("SL3FUSION_JOBS", "1") or 1)),
        metavar="K",
        help="worker processes (default: SL3FUSION_JOBS or 1)",
    )
    p.add_argument(
        "--z",
        type=_evaluation_points,
        action="append",
        metavar="Z1,Z2",
        help="evaluation points (repeatable; default: 0,1 and 2,5)",
    )
    p.add_argument(
        "--checks",
        type=_check_list,
        default=CHECK_NAMES,
        metavar="LIST",
        help="comma-separated subset of: " + ", ".join(CHECK_NAMES),
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

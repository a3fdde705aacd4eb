"""Command-line front end.

    coflag present A 3
    coflag groebner D 4 --order grevlex
    coflag basis A 2 --format json
    coflag poincare g2
    coflag top-class B 3
    coflag verify D 4
    coflag cartan-type --file restriction.json
    coflag factor-check --total "..." --base "..." --fiber "..."

Exit status: 0 on success (and all claims passing), 1 when a verification
fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .groebner import buchberger
from .poly import MonomialOrder, format_monomial, format_poly
from .quotient import InfiniteQuotientError, PoincarePolynomial
from .schema import (
    SCHEMA_VERSION,
    SchemaError,
    dumps,
    loads,
    presentation_from_json,
    presentation_to_json,
    restriction_from_json,
)
from .spaces import (
    CartanModel,
    SpacePresentation,
    cartan_model_poincare,
    cartan_type_check,
    fibration_factorization_check,
    flag_presentation,
    g2_flag_presentation,
    gss_presentation,
)
from .verify import verify_presentation

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SPACE_COMMANDS = ("present", "groebner", "basis", "poincare", "top-class", "verify")
GSS_SELECTORS = {"su-odd": "SU-odd", "su-even": "SU-even", "spin-even": "Spin-even"}


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coflag", description="Cohomology rings of flag manifolds and generalised symmetric spaces."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--order", choices=("lex", "grlex", "grevlex"), default=None)
    common.add_argument("--max-rank", type=int, default=8, help="refuse larger ranks (default 8)")
    common.add_argument("--file", type=Path, default=None, help="presentation or restriction JSON")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "present": "print the presentation",
        "groebner": "print the reduced Groebner basis",
        "basis": "list standard monomials by degree",
        "poincare": "print the Poincare polynomial",
        "top-class": "print the top-degree classes",
        "verify": "run the claim checks and report",
    }
    for name in SPACE_COMMANDS:
        sp = sub.add_parser(name, parents=[common], help=helps[name])
        sp.add_argument(
            "space",
            nargs="*",
            help="FAMILY RANK (A|B|C|D), g2, spin8, su-odd N, su-even N, spin-even N",
        )
        if name == "verify":
            sp.add_argument("--degree-cap", type=int, default=None, help="cap for complete-sum vanishing checks")
    sub.add_parser("cartan-type", parents=[common], help="Cartan-type test of restriction data")
    fc = sub.add_parser("factor-check", parents=[common], help="check total = base * fiber")
    fc.add_argument("--total", required=True)
    fc.add_argument("--base", required=True)
    fc.add_argument("--fiber", required=True)
    return parser


# ---------------------------------------------------------------------------
# space selection


def _read_doc(path: Path) -> dict:
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        return loads(text)
    except SchemaError as exc:
        raise UsageError(f"{path}: {exc}") from None


def select_space(args) -> SpacePresentation:
    selector = list(args.space or [])
    if bool(selector) == bool(args.file):
        raise UsageError("give exactly one space selector: FAMILY RANK, a named space, or --file PATH")
    if args.file:
        doc = _read_doc(args.file)
        try:
            p = presentation_from_json(doc)
        except SchemaError as exc:
            raise UsageError(f"{args.file}: {exc}") from None
        rank = p.nvars
    else:
        head = selector[0]
        if head.upper() in ("A", "B", "C", "D"):
            if len(selector) != 2:
                raise UsageError(f"family {head} needs exactly one rank argument")
            rank = _rank(selector[1])
            _cap(rank, args.max_rank)
            try:
                p = flag_presentation(head.upper(), rank)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        elif head.lower() in ("g2", "spin8"):
            if len(selector) != 1:
                raise UsageError(f"{head} takes no rank")
            p = g2_flag_presentation() if head.lower() == "g2" else gss_presentation("Spin8")
            rank = 2
        elif head.lower() in GSS_SELECTORS:
            if len(selector) != 2:
                raise UsageError(f"{head} needs exactly one rank argument")
            rank = _rank(selector[1])
            _cap(rank, args.max_rank)
            try:
                p = gss_presentation(GSS_SELECTORS[head.lower()], rank)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        else:
            raise UsageError(f"unknown space selector {' '.join(selector)!r}")
    _cap(rank, args.max_rank)
    if args.order and args.order != p.order.kind:
        p = p.with_order(MonomialOrder.of(args.order, p.nvars))
    return p


def _rank(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"rank must be an integer, got {text!r}") from None


def _cap(rank: int, cap: int):
    if rank > cap:
        raise UsageError(f"rank {rank} exceeds --max-rank {cap}")


# ---------------------------------------------------------------------------
# rendering


def _table(rows: list, header: tuple | None = None) -> str:
    rows = [tuple(str(c) for c in r) for r in rows]
    if header:
        rows = [tuple(header)] + rows
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(len(r) for r in rows))]
    lines = []
    for r in rows:
        cells = [c.ljust(widths[i]) if i < len(r) - 1 else c for i, c in enumerate(r)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _envelope(command: str, p: SpacePresentation | None, **payload) -> dict:
    doc = {"schema": SCHEMA_VERSION, "command": command}
    if p is not None:
        doc["space"] = p.name
    doc.update(payload)
    return doc


def cmd_present(p: SpacePresentation, args) -> tuple:
    if args.format == "json":
        return EXIT_OK, dumps(presentation_to_json(p))
    rows = [
        ("name", p.name),
        ("family", p.family),
        ("rank", p.rank),
        ("variables", ", ".join(p.variables)),
        ("order", str(p.order)),
        ("degrees_G", " ".join(map(str, p.degrees_G))),
        ("degrees_H", " ".join(map(str, p.degrees_H))),
        ("exterior_degrees", " ".join(map(str, p.exterior_degrees)) or "-"),
        ("dimension", p.manifold_dimension),
    ]
    gens = [(f"g{i}", format_poly(g, p.variables)) for i, g in enumerate(p.generators, start=1)]
    return EXIT_OK, _table(rows) + _table(gens)


def cmd_groebner(p: SpacePresentation, args) -> tuple:
    gb = buchberger(p.generators, p.order)
    polys = [format_poly(g, p.variables) for g in gb]
    if args.format == "json":
        return EXIT_OK, dumps(_envelope("groebner", p, order=str(p.order), basis=polys))
    return EXIT_OK, _table([(f"g{i}", s) for i, s in enumerate(polys, start=1)])


def cmd_basis(p: SpacePresentation, args) -> tuple:
    mons = p.quotient.standard_monomials()
    texts = [format_monomial(m, p.variables) for m in mons]
    if args.format == "json":
        return EXIT_OK, dumps(_envelope("basis", p, count=len(texts), monomials=texts))
    by_degree: dict = {}
    for m, t in zip(mons, texts):
        by_degree.setdefault(2 * sum(m), []).append(t)
    rows = [(d, len(ts), " ".join(ts)) for d, ts in sorted(by_degree.items())]
    return EXIT_OK, _table(rows, ("degree", "count", "monomials")) + f"total {len(texts)}\n"


def cmd_poincare(p: SpacePresentation, args) -> tuple:
    q = p.quotient.poincare_polynomial()
    total = cartan_model_poincare(CartanModel.of(p))
    if args.format == "json":
        return EXIT_OK, dumps(
            _envelope(
                "poincare",
                p,
                polynomial_part=list(q.coefficients),
                total=list(total.coefficients),
                text=str(total),
            )
        )
    rows = [("polynomial part", str(q))]
    if p.exterior_degrees:
        rows.append(("total", str(total)))
    return EXIT_OK, _table(rows)


def cmd_top_class(p: SpacePresentation, args) -> tuple:
    deg, mons = p.quotient.top_class()
    texts = [format_monomial(m, p.variables) for m in mons]
    if args.format == "json":
        return EXIT_OK, dumps(_envelope("top-class", p, degree=deg, monomials=texts))
    return EXIT_OK, _table([("degree", deg), ("monomials", " ".join(texts))])


def cmd_verify(p: SpacePresentation, args) -> tuple:
    report = verify_presentation(p, args.degree_cap)
    status = EXIT_OK if report.ok else EXIT_FAIL
    if args.format == "json":
        return status, dumps(_envelope("verify", p, **report.as_dict()))
    rows = [(c.status, c.id, c.anchor, c.witness or "") for c in report.claims]
    summary = f"{len(report) - len(report.failures())}/{len(report)} claims pass\n"
    return status, _table(rows, ("status", "claim", "anchor", "witness")) + summary


def cmd_cartan_type(args) -> tuple:
    if not args.file:
        raise UsageError("cartan-type needs --file PATH")
    doc = _read_doc(args.file)
    try:
        r, order = restriction_from_json(doc)
    except SchemaError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    _cap(r.nvars, args.max_rank)
    if args.order:
        order = MonomialOrder.of(args.order, r.nvars)
    result = cartan_type_check(r, order)
    if args.format == "json":
        return EXIT_OK, dumps(_envelope("cartan-type", None, name=r.name, cartan_type=result))
    return EXIT_OK, ("true" if result else "false") + "\n"


def cmd_factor_check(args) -> tuple:
    series = {}
    for key in ("total", "base", "fiber"):
        try:
            series[key] = PoincarePolynomial.parse(getattr(args, key))
        except ValueError as exc:
            raise UsageError(f"--{key}: {exc}") from None
    ok = fibration_factorization_check(series["total"], series["base"], series["fiber"])
    status = EXIT_OK if ok else EXIT_FAIL
    if args.format == "json":
        product = series["base"] * series["fiber"]
        return status, dumps(
            _envelope("factor-check", None, holds=ok, total=str(series["total"]), product=str(product))
        )
    return status, ("true" if ok else "false") + "\n"


COMMANDS = {
    "present": cmd_present,
    "groebner": cmd_groebner,
    "basis": cmd_basis,
    "poincare": cmd_poincare,
    "top-class": cmd_top_class,
    "verify": cmd_verify,
}


def run(argv: list | None = None) -> tuple:
    """Execute one request; returns ``(exit status, stdout text, stderr text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        if args.command == "cartan-type":
            status, out = cmd_cartan_type(args)
        elif args.command == "factor-check":
            status, out = cmd_factor_check(args)
        else:
            p = select_space(args)
            status, out = COMMANDS[args.command](p, args)
    except UsageError as exc:
        return EXIT_USAGE, "", f"coflag: error: {exc}\n"
    except InfiniteQuotientError as exc:
        return EXIT_USAGE, "", f"coflag: error: {exc}\n"
    return status, out, ""


def main(argv: list | None = None) -> int:
    status, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

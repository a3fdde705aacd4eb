"""Checkable algebraic claims about the presentations, as pass/fail reports.

Each ``verify_*`` function returns a :class:`VerificationReport`.  A failed
claim always carries a witness: a nonzero polynomial, a monomial-set
difference, or the two disagreeing values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .groebner import buchberger, groebner_witness, normal_form, reduce_modulo
from .poly import Polynomial, format_monomial, format_poly
from .quotient import PoincarePolynomial
from .spaces import (
    CLASSICAL,
    CartanModel,
    SpacePresentation,
    a_type_extended_generators,
    cartan_model_poincare,
    expected_basis,
    g2_relations,
    poincare_from_invariant_degrees,
    relation_families,
    weyl_order,
)
from .symfun import VariableSubset, monomial_sum

PASS, FAIL = "pass", "fail"


@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    status: str
    witness: str | None = None

    def __post_init__(self):
        if self.status not in (PASS, FAIL):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and not self.witness:
            raise ValueError(f"failed claim {self.id} has no witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "status": self.status, "witness": self.witness}


def _natural(s: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


@dataclass(frozen=True)
class VerificationReport:
    claims: tuple = ()

    def __post_init__(self):
        ids = [c.id for c in self.claims]
        dup = {i for i in ids if ids.count(i) > 1}
        if dup:
            raise ValueError(f"duplicate claim ids: {sorted(dup)}")
        object.__setattr__(self, "claims", tuple(sorted(self.claims, key=lambda c: _natural(c.id))))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def failures(self) -> list:
        return [c for c in self.claims if not c.passed]

    def __add__(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.claims + other.claims)

    def __len__(self):
        return len(self.claims)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "passed": sum(c.passed for c in self.claims),
            "failed": len(self.failures()),
            "claims": [c.as_dict() for c in self.claims],
        }


class _Builder:
    def __init__(self, prefix: str):
        self.prefix = prefix
        self.claims: list = []

    def check(self, cid: str, anchor: str, ok: bool, witness=None):
        w = None
        if not ok:
            w = witness() if callable(witness) else witness
            w = str(w) if w not in (None, "") else "<no detail>"
        self.claims.append(Claim(f"{self.prefix}/{cid}", anchor, PASS if ok else FAIL, w))

    def poly_zero(self, cid: str, anchor: str, f: Polynomial, names):
        self.check(cid, anchor, f.is_zero(), lambda: format_poly(f, names))

    def report(self) -> VerificationReport:
        return VerificationReport(tuple(self.claims))


def _prefix(p: SpacePresentation) -> str:
    if p.family in CLASSICAL:
        return f"{p.family}{p.rank}"
    if p.family == "G2-flag":
        return "G2"
    return p.name.replace(" ", "")


def _monomial_diff(expected, actual, names) -> str:
    e, a = set(expected), set(actual)
    missing = sorted(e - a)
    extra = sorted(a - e)
    parts = []
    if missing:
        parts.append("missing " + ", ".join(format_monomial(m, names) for m in missing[:10]))
    if extra:
        parts.append("unexpected " + ", ".join(format_monomial(m, names) for m in extra[:10]))
    return "; ".join(parts) or f"count {len(expected)} vs {len(actual)}"


# ---------------------------------------------------------------------------
# the displayed composition sums, built by direct enumeration


def _compositions(total: int, parts: int, minimum: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, minimum):
            yield (first,) + rest


def displayed_relation(kind: str, n: int, p: int, order=None) -> Polynomial:
    """Relation ``kind`` with index ``p`` as the displayed sum over i_1 + ... + i_p.

    ``x_{n-p+1}`` carries ``i_p``, ..., ``x_n`` carries ``i_1``.
    """
    if kind == "rel":
        total, minimum, expo = n - p + 2, 0, lambda i: i
    elif kind in ("rel1", "rel2"):
        total, minimum, expo = n - p + 1, 0, lambda i: 2 * i
    elif kind == "rel3":
        total, minimum, expo = n, 1, lambda i: 2 * i - 1
    else:
        raise ValueError(f"unknown relation kind {kind!r}")
    terms = {}
    for comp in _compositions(total, p, minimum):
        mono = [0] * n
        # comp = (i_1, ..., i_p); x_n gets i_1
        for j, i in enumerate(comp):
            mono[n - 1 - j] = expo(i)
        mono = tuple(mono)
        terms[mono] = terms.get(mono, 0) + 1
    return Polynomial(terms, n, order)


# ---------------------------------------------------------------------------
# claims


def verify_relations_in_ideal(p: SpacePresentation, relations: dict | None = None) -> VerificationReport:
    """Every relation of the applicable families lies in the presentation's ideal."""
    b = _Builder(_prefix(p))
    families = relations if relations is not None else relation_families(p)
    gb = p.groebner
    names = p.variables
    for kind, rels in families.items():
        for i, r in enumerate(rels, start=1):
            if kind == "g2":
                ref, anchor = g2_relations(p.order)[i - 1], f"g2 relation {i}: displayed form"
            else:
                ref, anchor = displayed_relation(kind, p.rank, i, p.order), f"{kind}, p={i}: displayed composition sum"
            b.poly_zero(f"{kind}/p{i}/form", anchor, r - ref, names)
            b.poly_zero(
                f"{kind}/p{i}/in-ideal", f"{kind}, p={i}: vanishes in cohomology", normal_form(r, gb), names
            )
    return b.report()


def verify_relations_are_groebner(p: SpacePresentation, relations: dict | None = None) -> VerificationReport:
    """The relation families form a Groebner basis of the presentation's ideal."""
    b = _Builder(_prefix(p))
    families = relations if relations is not None else relation_families(p)
    rels = [r for rs in families.values() for r in rs]
    names = p.variables
    if any(r.is_zero() for r in rels):
        b.check("groebner/nonzero", "relations are nonzero", False, "zero relation in family")
        return b.report()
    w = groebner_witness(rels, p.order)
    b.check(
        "groebner/s-pairs",
        "relation family is a Groebner basis",
        w is None,
        lambda: f"S({w[0][0] + 1},{w[0][1] + 1}) -> {format_poly(w[1], names)}",
    )
    gb = p.groebner
    for i, r in enumerate(rels, start=1):
        b.poly_zero(f"groebner/family-in-ideal/{i}", "family contained in the ideal", normal_form(r, gb), names)
    for i, g in enumerate(p.generators, start=1):
        b.poly_zero(
            f"groebner/ideal-in-family/{i}",
            "ideal generators reduce to zero by the family",
            reduce_modulo(g, rels, p.order),
            names,
        )
    if p.family == "A":
        _check_a_elimination(p, b)
    return b.report()


def _check_a_elimination(p: SpacePresentation, b: _Builder):
    # (n+1)-variable route: eliminating x0 from <sigma_1..sigma_{n+1}> recovers p's basis
    n = p.rank
    if not p.order.is_identity() or p.order.kind != "lex":
        return
    big = buchberger(a_type_extended_generators(n))
    names = [f"x{i}" for i in range(n + 1)]
    linear = Polynomial({tuple(1 if j == i else 0 for j in range(n + 1)): 1 for i in range(n + 1)}, n + 1)
    expected = [linear] + [
        Polynomial({(0,) + m: c for m, c in g.as_dict().items()}, n + 1) for g in p.groebner
    ]
    ok = list(big.generators) == expected
    b.check(
        "groebner/eliminate-x0",
        "x0 = -(x1+...+xn) elimination of the (n+1)-variable ideal",
        ok,
        lambda: "; ".join(format_poly(g, names) for g in big.generators),
    )


def verify_basis(p: SpacePresentation) -> VerificationReport:
    b = _Builder(_prefix(p))
    expected = expected_basis(p)
    actual = p.quotient.standard_monomials()
    b.check(
        "basis/monomials",
        "exponent-bounded monomials form a basis",
        set(expected) == set(actual) and len(expected) == len(actual),
        lambda: _monomial_diff(expected, actual, p.variables),
    )
    family = p.family if p.family in CLASSICAL or p.family == "G2-flag" else None
    if family is not None:
        w = weyl_order(family, p.rank)
        b.check("basis/weyl-order", "dimension equals the Weyl group order", len(actual) == w,
                f"{len(actual)} standard monomials, |W| = {w}")
    return b.report()


def _tail_from(n: int, k: int) -> VariableSubset:
    # x_{k-1}, ..., x_n in 1-based numbering
    return VariableSubset.tail(n, k - 2)


def verify_vanishing_identities(p: SpacePresentation, degree_cap: int | None = None) -> VerificationReport:
    """A: s_m(x_{k-1..n}) = 0 for m >= k up to the cap.  D: the staircase products vanish."""
    b = _Builder(_prefix(p))
    n, gb, names = p.rank, p.groebner, p.variables
    if p.family == "A":
        cap = 2 * n + 2 if degree_cap is None else degree_cap
        for k in range(2, n + 2):
            V = _tail_from(n, k)
            for m in range(k, cap + 1):
                f = monomial_sum(m, V, p.order)
                b.poly_zero(f"vanish/k{k}/m{m}", f"s_{m}(x_{k - 1},...,x_{n}) = 0", normal_form(f, gb), names)
    elif p.family == "D":
        for k in range(2, n):
            e = [0] * n
            e[k - 1] = 2 * k - 1
            for j in range(k + 1, n + 1):
                e[j - 1] = 2 * j - 3
            f = Polynomial.monomial(e, 1, p.order)
            b.poly_zero(f"vanish/addrel/k{k}", f"{format_monomial(tuple(e), names)} = 0", normal_form(f, gb), names)
        e = [0] * n
        e[-1] = 2 * n - 1
        f = Polynomial.monomial(e, 1, p.order)
        b.poly_zero("vanish/last-power", f"x{n}^{2 * n - 1} = 0", normal_form(f, gb), names)
    else:
        raise ValueError(f"vanishing identities are stated for families A and D, not {p.family!r}")
    return b.report()


def designated_top_monomial(p: SpacePresentation) -> tuple:
    n = p.rank
    if p.family == "A":
        return tuple(range(1, n + 1))
    if p.family in ("B", "C"):
        return tuple(2 * i - 1 for i in range(1, n + 1))
    if p.family == "D":
        return (0,) + tuple(2 * i - 2 for i in range(2, n + 1))
    if p.family == "G2-flag":
        return (1, 5)
    raise ValueError(f"no designated top monomial for {p.name}")


def verify_top_class(p: SpacePresentation) -> VerificationReport:
    b = _Builder(_prefix(p))
    m = designated_top_monomial(p)
    names = p.variables
    mono = format_monomial(m, names)
    nf = normal_form(Polynomial.monomial(m, 1, p.order), p.groebner)
    b.check("top/nonzero", f"{mono} is nonzero", not nf.is_zero(), f"{mono} reduces to 0")
    b.check(
        "top/degree",
        f"{mono} sits in the dimension of the manifold",
        2 * sum(m) == p.manifold_dimension,
        f"degree {2 * sum(m)} vs dimension {p.manifold_dimension}",
    )
    deg, tops = p.quotient.top_class()
    b.check(
        "top/generator",
        f"{mono} spans the top cohomology",
        deg == p.manifold_dimension and tops == [m],
        lambda: f"top degree {deg}: " + ", ".join(format_monomial(t, names) for t in tops),
    )
    return b.report()


def verify_poincare_consistency(p: SpacePresentation) -> VerificationReport:
    b = _Builder(_prefix(p))
    q_series = p.quotient.poincare_polynomial()
    inv_series = poincare_from_invariant_degrees(p.degrees_G, p.degrees_H, ())
    b.check(
        "poincare/routes-agree",
        "invariant-degree product equals the standard-monomial count",
        q_series == inv_series,
        f"quotient {q_series} vs degrees {inv_series}",
    )
    b.check("poincare/palindromic", "Poincare duality", q_series.is_palindromic(), str(q_series))
    b.check(
        "poincare/top-degree",
        "top degree equals the manifold dimension",
        q_series.degree == p.manifold_dimension,
        f"degree {q_series.degree} vs dimension {p.manifold_dimension}",
    )
    return b.report()


def verify_gss2_model(
    m: CartanModel,
    expected_total_dimension: int,
    expected_series: PoincarePolynomial | None = None,
) -> VerificationReport:
    """Series of (polynomial part) x (exterior part) against dimension and degree data."""
    p = m.polynomial_part
    b = _Builder(_prefix(p))
    series = cartan_model_poincare(m)
    b.check(
        "model/top-degree",
        "top degree equals the manifold dimension",
        series.degree == expected_total_dimension,
        f"degree {series.degree} vs {expected_total_dimension}",
    )
    b.check("model/palindromic", "Poincare duality", series.is_palindromic(), str(series))
    if p.degrees_G:
        src = tuple((d + 1) // 2 for d in m.exterior_degrees)
        try:
            closed = poincare_from_invariant_degrees(p.degrees_G, p.degrees_H, src)
            ok, detail = closed == series, f"model {series} vs degrees {closed}"
        except ValueError as exc:
            ok, detail = False, str(exc)
        b.check("model/degree-formula", "closed-form series from invariant degrees", ok, detail)
    if expected_series is not None:
        b.check(
            "model/expected-series",
            "tensor factorisation of the series",
            series == expected_series,
            f"model {series} vs expected {expected_series}",
        )
    return b.report()


def verify_presentation(p: SpacePresentation, degree_cap: int | None = None) -> VerificationReport:
    """All checks that apply to ``p``."""
    report = VerificationReport()
    if p.family in CLASSICAL or p.family == "G2-flag":
        report = report + verify_relations_in_ideal(p) + verify_relations_are_groebner(p)
    if p.pattern is not None:
        report = report + verify_basis(p)
    if p.family in ("A", "D"):
        report = report + verify_vanishing_identities(p, degree_cap)
    if p.family in CLASSICAL or p.family == "G2-flag":
        report = report + verify_top_class(p)
    if p.is_equal_rank() and p.degrees_G:
        report = report + verify_poincare_consistency(p)
    elif p.degrees_G:
        report = report + verify_gss2_model(CartanModel.of(p), p.manifold_dimension)
    return report


def mutate_coefficient(families: dict, kind: str, index: int, mono: tuple, delta=1) -> dict:
    """Copy of ``families`` with one relation coefficient shifted by ``delta``."""
    out = {k: list(v) for k, v in families.items()}
    r = out[kind][index]
    d = r.as_dict()
    d[mono] = d.get(mono, 0) + delta
    out[kind][index] = Polynomial(d, r.nvars, r.order)
    return out

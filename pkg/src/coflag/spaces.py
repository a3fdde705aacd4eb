"""Presentations of flag manifolds and related homogeneous spaces.

Every presentation is a quotient ``Q[x1..xn] / I`` with the variables in
cohomological degree 2, together with the invariant-degree data that drives
the closed-form Poincare series and, for spaces of unequal rank, the odd
degrees of the exterior factor.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .groebner import GroebnerBasis, buchberger, is_in_ideal
from .poly import MonomialOrder, Polynomial, default_names, lex, parse_poly
from .quotient import PoincarePolynomial, QuotientRing
from .symfun import (
    VariableSubset,
    complete_in_powers,
    elementary_sigma,
    monomial_sum,
    squared_sigma,
    top_product,
)

FAMILIES = ("A", "B", "C", "D", "G2-flag", "custom")
CLASSICAL = ("A", "B", "C", "D")
RELATION_KINDS = {"A": ("rel",), "B": ("rel1",), "C": ("rel1",), "D": ("rel2", "rel3")}


class NotPolynomialError(ValueError):
    """A quotient of series that should be a polynomial is not one."""


@dataclass(frozen=True)
class BasisPattern:
    """Monomials ``x^a`` with ``a_i <= bounds[i]``.

    With ``d_side_condition`` set, ``a_i = 2i-1`` (1-based ``i``) also forces
    ``a_{i+1} * ... * a_n = 0``.
    """

    bounds: tuple
    d_side_condition: bool = False

    def contains(self, m: Sequence[int]) -> bool:
        if len(m) != len(self.bounds) or any(e < 0 or e > b for e, b in zip(m, self.bounds)):
            return False
        if self.d_side_condition:
            for i, e in enumerate(m[:-1]):
                if e == 2 * i + 1 and all(m[i + 1 :]):
                    return False
        return True

    def monomials(self) -> list:
        out = [m for m in product(*(range(b + 1) for b in self.bounds)) if self.contains(m)]
        return out


@dataclass(frozen=True)
class SpacePresentation:
    name: str
    family: str
    rank: int
    generators: tuple
    order: MonomialOrder
    variables: tuple = ()
    pattern: BasisPattern | None = None
    degrees_G: tuple = ()
    degrees_H: tuple = ()
    exterior_degrees: tuple = ()
    manifold_dimension: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not self.generators:
            raise ValueError("a presentation needs at least one generator")
        n = self.order.arity
        if not self.variables:
            object.__setattr__(self, "variables", tuple(default_names(n)))
        if len(self.variables) != n:
            raise ValueError(f"{len(self.variables)} variable names for {n} variables")
        gens = tuple(g.with_order(self.order) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if any(d % 2 == 0 or d < 1 for d in self.exterior_degrees):
            raise ValueError(f"exterior degrees must be odd and positive: {self.exterior_degrees}")
        if self.manifold_dimension is None and self.degrees_G:
            object.__setattr__(self, "manifold_dimension", degree_bookkeeping(self))

    @property
    def nvars(self) -> int:
        return self.order.arity

    def is_equal_rank(self) -> bool:
        return not self.exterior_degrees

    @cached_property
    def groebner(self) -> GroebnerBasis:
        return buchberger(self.generators, self.order)

    @cached_property
    def quotient(self) -> QuotientRing:
        return QuotientRing(self.groebner)

    def exterior_source_degrees(self) -> tuple:
        """Invariant degrees feeding the exterior factor (odd degree ``2k-1`` from ``k``)."""
        return tuple((d + 1) // 2 for d in self.exterior_degrees)

    def with_order(self, order: MonomialOrder) -> "SpacePresentation":
        from dataclasses import replace

        return replace(self, order=order, generators=tuple(g.with_order(order) for g in self.generators))


@dataclass(frozen=True)
class RestrictionData:
    """Restricted invariant generators in the subgroup's coordinates.

    The first ``split_rank`` images generate the polynomial part.
    """

    images: tuple
    split_rank: int
    variables: tuple = ()
    name: str = ""

    def __post_init__(self):
        if not 1 <= self.split_rank <= len(self.images):
            raise ValueError(f"split rank {self.split_rank} outside 1..{len(self.images)}")
        arities = {p.nvars for p in self.images}
        if len(arities) != 1:
            raise ValueError("restriction images live in different rings")
        if not self.variables:
            object.__setattr__(self, "variables", tuple(default_names(arities.pop())))

    @property
    def nvars(self) -> int:
        return self.images[0].nvars


@dataclass(frozen=True)
class CartanModel:
    polynomial_part: SpacePresentation
    exterior_degrees: tuple = ()

    def __post_init__(self):
        if any(d % 2 == 0 or d < 1 for d in self.exterior_degrees):
            raise ValueError(f"exterior degrees must be odd and positive: {self.exterior_degrees}")

    @classmethod
    def of(cls, p: SpacePresentation) -> "CartanModel":
        return cls(p, tuple(p.exterior_degrees))


# ---------------------------------------------------------------------------
# invariant-degree tables


def invariant_degrees(family: str, n: int) -> tuple:
    if family == "A":
        return tuple(range(2, n + 2))
    if family in ("B", "C"):
        return tuple(range(2, 2 * n + 1, 2))
    if family == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    if family == "G2":
        return (2, 6)
    raise ValueError(f"no invariant degrees for family {family!r}")


def weyl_order(family: str, n: int) -> int:
    if family == "A":
        return math.factorial(n + 1)
    if family in ("B", "C"):
        return 2**n * math.factorial(n)
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if family in ("G2", "G2-flag"):
        return 12
    raise ValueError(f"no Weyl group for family {family!r}")


def flag_dimension(family: str, n: int) -> int:
    if family == "A":
        return n * n + n
    if family in ("B", "C"):
        return 2 * n * n
    if family == "D":
        return 2 * n * n - 2 * n
    raise ValueError(f"unknown family {family!r}")


def degree_bookkeeping(p: SpacePresentation) -> int:
    """Dimension predicted by the degree data: sum(2k - 2l) plus the exterior degrees."""
    matched = _multiset_minus(p.degrees_G, p.exterior_source_degrees())
    if matched is None or len(matched) != len(p.degrees_H):
        raise ValueError(
            f"{p.name}: exterior degrees {p.exterior_degrees} do not pair "
            f"{p.degrees_G} with {p.degrees_H}"
        )
    return sum(2 * k for k in matched) - sum(2 * l for l in p.degrees_H) + sum(p.exterior_degrees)


def _multiset_minus(a: Iterable[int], b: Iterable[int]) -> list | None:
    ca, cb = Counter(a), Counter(b)
    if any(cb[k] > ca[k] for k in cb):
        return None
    return sorted((ca - cb).elements())


# ---------------------------------------------------------------------------
# presentations


def _a_type_generators(n: int, order: MonomialOrder) -> list:
    # sigma_j(x0, x1..xn) with x0 = -(x1+..+xn) equals sigma_j - sigma_1*sigma_{j-1}
    V = VariableSubset.all(n)
    e = [elementary_sigma(j, V, order) for j in range(n + 1)] + [Polynomial.zero(n, order)]
    return [e[j] - e[1] * e[j - 1] for j in range(2, n + 2)]


def flag_presentation(family: str, n: int, order: MonomialOrder | None = None) -> SpacePresentation:
    """Cohomology presentation of the full flag manifold of type A, B, C or D and rank ``n``."""
    if family not in CLASSICAL:
        raise ValueError(f"flag presentations exist for A, B, C, D; got {family!r}")
    if not isinstance(n, int) or n < 1 or (family == "D" and n < 2):
        raise ValueError(f"invalid rank {n} for family {family}")
    order = order or lex(n)
    V = VariableSubset.all(n)
    if family == "A":
        gens = _a_type_generators(n, order)
        pattern = BasisPattern(tuple(range(1, n + 1)))
        name = f"SU({n + 1})/T^{n}"
    elif family in ("B", "C"):
        gens = [squared_sigma(j, V, order) for j in range(1, n + 1)]
        pattern = BasisPattern(tuple(2 * i - 1 for i in range(1, n + 1)))
        name = f"Spin({2 * n + 1})/T^{n}" if family == "B" else f"Sp({n})/T^{n}"
    else:
        gens = [squared_sigma(j, V, order) for j in range(1, n)] + [top_product(V, order)]
        bounds = tuple(2 * i - 1 for i in range(1, n)) + (2 * n - 2,)
        pattern = BasisPattern(bounds, d_side_condition=True)
        name = f"Spin({2 * n})/T^{n}"
    return SpacePresentation(
        name=name,
        family=family,
        rank=n,
        generators=tuple(gens),
        order=order,
        pattern=pattern,
        degrees_G=invariant_degrees(family, n),
        degrees_H=(1,) * n,
        exterior_degrees=(),
        manifold_dimension=flag_dimension(family, n),
    )


def g2_flag_presentation(order: MonomialOrder | None = None) -> SpacePresentation:
    """G2/T^2 on two degree-2 generators ``x, y``."""
    order = order or lex(2)
    names = ("x", "y")
    gens = (
        parse_poly("x^2 + 3*x*y + 3*y^2", names, order=order),
        parse_poly("x^6", names, order=order),
    )
    return SpacePresentation(
        name="G2/T^2",
        family="G2-flag",
        rank=2,
        generators=gens,
        order=order,
        variables=names,
        pattern=BasisPattern((1, 5)),
        degrees_G=(2, 6),
        degrees_H=(1, 1),
        exterior_degrees=(),
        manifold_dimension=12,
    )


def g2_relations(order: MonomialOrder | None = None) -> list:
    order = order or lex(2)
    names = ("x", "y")
    return [parse_poly(s, names, order=order) for s in ("x^2 + 3*x*y + 3*y^2", "x^6", "y^6")]


def a_type_extended_generators(n: int, order: MonomialOrder | None = None) -> list:
    """``sigma_1..sigma_{n+1}`` in the ``n+1`` variables ``x0..xn`` (before eliminating x0)."""
    order = order or lex(n + 1)
    V = VariableSubset.all(n + 1)
    return [elementary_sigma(j, V, order) for j in range(1, n + 2)]


# ---------------------------------------------------------------------------
# relation families


def relation_family(p: SpacePresentation, index: int, kind: str) -> Polynomial:
    """Member ``index`` (1..n) of a relation family.

    rel  (A):    s_{n-p+2}(x_{n-p+1}, ..., x_n)
    rel1 (B/C),
    rel2 (D):    s_{n-p+1}(x_{n-p+1}^2, ..., x_n^2)
    rel3 (D):    x_{n-p+1} ... x_n * s_{n-p}(x_{n-p+1}^2, ..., x_n^2)

    where ``s_k`` is the sum of all degree-k monomials and ``p = index``.
    """
    allowed = RELATION_KINDS.get(p.family, ())
    if kind not in allowed:
        raise ValueError(f"relation kind {kind!r} does not apply to family {p.family!r}")
    n = p.rank
    if not 1 <= index <= n:
        raise ValueError(f"relation index {index} outside 1..{n}")
    tail = VariableSubset.tail(n, n - index)
    if kind == "rel":
        return monomial_sum(n - index + 2, tail, p.order)
    if kind in ("rel1", "rel2"):
        return complete_in_powers(n - index + 1, tail, 2, p.order)
    return top_product(tail, p.order) * complete_in_powers(n - index, tail, 2, p.order)


def relation_families(p: SpacePresentation) -> dict:
    """All relation families that apply to ``p``, keyed by kind."""
    if p.family == "G2-flag":
        return {"g2": g2_relations(p.order)}
    return {
        kind: [relation_family(p, i, kind) for i in range(1, p.rank + 1)]
        for kind in RELATION_KINDS.get(p.family, ())
    }


def expected_basis(p: SpacePresentation) -> list:
    if p.pattern is None:
        raise ValueError(f"presentation {p.name!r} carries no basis pattern")
    return p.pattern.monomials()


# ---------------------------------------------------------------------------
# series


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(num: list, den: list) -> tuple:
    # exact integer long division; den[0] == 1 for every factor used here
    num = list(num)
    while len(den) > 1 and den[-1] == 0:
        den = den[:-1]
    lead = den[-1]
    if len(num) < len(den):
        return [0], num
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise NotPolynomialError("non-integral quotient")
        quot[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    return quot, num[: len(den) - 1]


def _one_minus(d: int) -> list:
    c = [0] * (d + 1)
    c[0], c[d] = 1, -1
    return c


def _one_plus(d: int) -> list:
    c = [0] * (d + 1)
    c[0] += 1
    c[d] += 1
    return c


def poincare_from_invariant_degrees(
    kG: Sequence[int], lH: Sequence[int], exterior_source: Sequence[int] | None = None
) -> PoincarePolynomial:
    """Closed-form series from invariant degrees.

    The invariant degrees of ``kG`` not listed in ``exterior_source`` are paired
    with ``lH`` in ``prod (1 - t^{2k}) / (1 - t^{2l})``; every degree in
    ``exterior_source`` contributes ``(1 + t^{2k-1})``.
    """
    kG, lH = list(kG), list(lH)
    if any(k < 1 for k in kG + lH):
        raise ValueError("invariant degrees must be positive")
    exterior_source = list(exterior_source or [])
    if len(lH) > len(kG):
        raise ValueError(f"subgroup has more invariants ({len(lH)}) than the group ({len(kG)})")
    matched = _multiset_minus(kG, exterior_source)
    if matched is None:
        raise ValueError(f"exterior degrees {exterior_source} are not a sub-multiset of {kG}")
    if len(matched) != len(lH):
        raise ValueError(
            f"{len(kG) - len(lH)} invariant degrees must feed the exterior part, "
            f"{len(exterior_source)} given"
        )
    num = [1]
    for k in matched:
        num = _poly_mul(num, _one_minus(2 * k))
    den = [1]
    for l in lH:
        den = _poly_mul(den, _one_minus(2 * l))
    quot, rem = _poly_divmod(num, den)
    if any(rem):
        raise NotPolynomialError(f"prod(1-t^2k)/prod(1-t^2l) is not a polynomial for k={matched}, l={lH}")
    if any(c < 0 for c in quot):
        raise NotPolynomialError(f"negative coefficient in series quotient for k={matched}, l={lH}")
    for k in exterior_source:
        quot = _poly_mul(quot, _one_plus(2 * k - 1))
    return PoincarePolynomial(quot)


def presentation_series(p: SpacePresentation) -> PoincarePolynomial:
    return poincare_from_invariant_degrees(p.degrees_G, p.degrees_H, p.exterior_source_degrees())


def exterior_series(degrees: Iterable[int]) -> PoincarePolynomial:
    out = PoincarePolynomial([1])
    for d in degrees:
        out = out * PoincarePolynomial(_one_plus(d))
    return out


def cartan_model_poincare(m: CartanModel) -> PoincarePolynomial:
    """Series of (polynomial quotient) tensor (exterior algebra)."""
    return m.polynomial_part.quotient.poincare_polynomial() * exterior_series(m.exterior_degrees)


def fibration_factorization_check(
    total: PoincarePolynomial, base: PoincarePolynomial, fiber: PoincarePolynomial
) -> bool:
    return total == base * fiber


def cartan_type_check(r: RestrictionData, order: MonomialOrder | None = None) -> bool:
    """True iff every image past ``split_rank`` lies in the ideal of the first ``split_rank``."""
    order = order or lex(r.nvars)
    head = [g.with_order(order) for g in r.images[: r.split_rank] if not g.is_zero()]
    tail = [g.with_order(order) for g in r.images[r.split_rank :]]
    if not head:
        return all(g.is_zero() for g in tail)
    gb = buchberger(head, order)
    return all(is_in_ideal(g, gb) for g in tail)


# ---------------------------------------------------------------------------
# unequal-rank generalised symmetric spaces


def _b_type_generators(n: int, order: MonomialOrder) -> tuple:
    V = VariableSubset.all(n)
    return tuple(squared_sigma(j, V, order) for j in range(1, n + 1))


def gss_presentation(kind: str, n: int = 2, order: MonomialOrder | None = None) -> SpacePresentation:
    """Presentations of the torus quotients of unequal rank.

    ``kind`` is one of ``SU-odd`` (SU(2n+1)/T^n), ``SU-even`` (SU(2n)/T^n),
    ``Spin-even`` (Spin(2n+2)/T^n) or ``Spin8`` (Spin(8)/T^2, ``n`` ignored).
    """
    if kind == "Spin8":
        g2 = g2_flag_presentation(order)
        return SpacePresentation(
            name="Spin(8)/T^2",
            family="custom",
            rank=2,
            generators=g2.generators,
            order=g2.order,
            variables=g2.variables,
            pattern=g2.pattern,
            degrees_G=(2, 4, 4, 6),
            degrees_H=(1, 1),
            exterior_degrees=(7, 7),
            manifold_dimension=26,
        )
    if n < 1:
        raise ValueError(f"invalid rank {n}")
    order = order or lex(n)
    if kind == "SU-odd":
        kG = tuple(range(2, 2 * n + 2))
        ext = tuple(2 * i - 1 for i in range(3, 2 * n + 2, 2))
        name, dim = f"SU({2 * n + 1})/T^{n}", (2 * n + 1) ** 2 - 1 - n
    elif kind == "SU-even":
        if n < 2:
            raise ValueError("SU(2n)/T^n needs n >= 2")
        kG = tuple(range(2, 2 * n + 1))
        ext = tuple(2 * i - 1 for i in range(3, 2 * n, 2))
        name, dim = f"SU({2 * n})/T^{n}", (2 * n) ** 2 - 1 - n
    elif kind == "Spin-even":
        if n < 2:
            raise ValueError("Spin(2n+2)/T^n needs n >= 2")
        kG = tuple(sorted(list(range(2, 2 * n + 1, 2)) + [n + 1]))
        ext = (2 * n + 1,)
        name, dim = f"Spin({2 * n + 2})/T^{n}", (n + 1) * (2 * n + 1) - n
    else:
        raise ValueError(f"unknown generalised symmetric space kind {kind!r}")
    return SpacePresentation(
        name=name,
        family="custom",
        rank=n,
        generators=_b_type_generators(n, order),
        order=order,
        pattern=BasisPattern(tuple(2 * i - 1 for i in range(1, n + 1))),
        degrees_G=kG,
        degrees_H=(1,) * n,
        exterior_degrees=ext,
        manifold_dimension=dim,
    )


def gss_model(kind: str, n: int = 2, order: MonomialOrder | None = None) -> CartanModel:
    return CartanModel.of(gss_presentation(kind, n, order))


def symmetric_base_series(kind: str, n: int) -> PoincarePolynomial:
    """Series of the symmetric base SU(2n+1)/SO(2n+1) or SU(2n)/Sp(n)."""
    if kind == "SU-odd":
        kG = list(range(2, 2 * n + 2))
        lH = list(range(2, 2 * n + 1, 2))
        ext = list(range(3, 2 * n + 2, 2))
    elif kind == "SU-even":
        kG = list(range(2, 2 * n + 1))
        lH = list(range(2, 2 * n + 1, 2))
        ext = list(range(3, 2 * n, 2))
    else:
        raise ValueError(f"no symmetric base recorded for {kind!r}")
    return poincare_from_invariant_degrees(kG, lH, ext)

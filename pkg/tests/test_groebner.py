import random
from itertools import permutations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from coflag.groebner import (
    buchberger,
    groebner_witness,
    ideal_equal,
    is_groebner_basis,
    is_in_ideal,
    normal_form,
)
from coflag.poly import MonomialOrder, Polynomial, format_poly, lex, parse_poly, spoly

from oracles import combine, in_span_of_multiples, random_homogeneous, random_ideal


def P(text, n=2, names=None):
    return parse_poly(text, names, nvars=None if names else n)


def strings(gb, names=None):
    return [format_poly(g, names) for g in gb]


@pytest.fixture(scope="module")
def gb_a2():
    return buchberger([P("x1^2 + x1*x2 + x2^2"), P("x1^2*x2 + x1*x2^2")], lex(2))


# ---------------------------------------------------------------------------
# worked examples


def test_elementary_symmetric_three_variables():
    names = ["x0", "x1", "x2"]
    gens = [P("x0 + x1 + x2", names=names), P("x0*x1 + x0*x2 + x1*x2", names=names), P("x0*x1*x2", names=names)]
    gb = buchberger(gens, lex(3))
    assert strings(gb, names) == ["x0 + x1 + x2", "x1^2 + x1*x2 + x2^2", "x2^3"]


def from_sympy(basis, names):
    # sympy returns primitive integer generators; compare monic forms
    order = MonomialOrder.of(basis.order.alias, len(names))
    return sorted(format_poly(parse_poly(str(g.as_expr()).replace("**", "^"), names, order=order).monic(), names) for g in basis)


def test_elementary_symmetric_matches_sympy():
    x0, x1, x2 = sympy.symbols("x0 x1 x2")
    theirs = sympy.groebner([x0 + x1 + x2, x0 * x1 + x0 * x2 + x1 * x2, x0 * x1 * x2], x0, x1, x2, order="lex")
    names = ["x0", "x1", "x2"]
    gens = [P("x0 + x1 + x2", names=names), P("x0*x1 + x0*x2 + x1*x2", names=names), P("x0*x1*x2", names=names)]
    assert sorted(strings(buchberger(gens, lex(3)), names)) == from_sympy(theirs, names)


def test_reduced_basis_is_fixed():
    gb = buchberger([P("x1^2 + x2^2"), P("x2^4")], lex(2))
    assert strings(gb) == ["x1^2 + x2^2", "x2^4"]
    gb = buchberger([P("2*x1^2 + 2*x2^2"), P("3*x2^4")], lex(2))
    assert strings(gb) == ["x1^2 + x2^2", "x2^4"]


def test_unit_ideal():
    gb = buchberger([Polynomial.constant(1, 2)], lex(2))
    assert gb.is_unit()
    assert strings(gb) == ["1"]
    gb = buchberger([P("x1*x2 - 1"), P("x1")], lex(2))
    assert gb.is_unit()


def test_normal_form_examples(gb_a2):
    assert strings(gb_a2) == ["x1^2 + x1*x2 + x2^2", "x2^3"]
    assert normal_form(P("x2^3"), gb_a2).is_zero()
    assert normal_form(P("x1*x2^2"), gb_a2) == P("x1*x2^2")
    assert normal_form(P("x1^2"), gb_a2) == P("-x1*x2 - x2^2")


def test_membership_examples():
    xy = ["x", "y"]
    gb = buchberger([P("x^2 + 3*x*y + 3*y^2", names=xy), P("x^6", names=xy)], lex(2))
    assert is_in_ideal(P("y^6", names=xy), gb)
    assert not is_in_ideal(P("x*y^5", names=xy), gb)
    assert is_in_ideal(Polynomial.zero(2), gb)


def test_is_groebner_basis_examples():
    names = ["x1", "x2", "x3"]
    rel = [P("x3^4", names=names), P("x2^3 + x2^2*x3 + x2*x3^2 + x3^3", names=names)]
    h2 = P("x1^2 + x1*x2 + x1*x3 + x2^2 + x2*x3 + x3^2", names=names)
    assert is_groebner_basis(rel + [h2], lex(3))
    assert not is_groebner_basis([P("x1^2 + x2^2"), P("x1*x2")], lex(2))
    assert is_groebner_basis([P("x1")], lex(2))


def test_witness_names_the_failing_pair():
    gens = [P("x1^2 + x2^2"), P("x1*x2")]
    (i, j), r = groebner_witness(gens, lex(2))
    assert {i, j} == {0, 1}
    assert r == P("x2^3")
    assert r == spoly(gens[0], gens[1], lex(2))


def test_ideal_equal_detects_difference():
    a = buchberger([P("x1^2"), P("x2")], lex(2))
    b = buchberger([P("x1^2 + x2"), P("x2")], lex(2))
    c = buchberger([P("x1^3"), P("x2")], lex(2))
    assert ideal_equal(a, b)
    assert not ideal_equal(a, c)


def test_output_is_reduced_and_monic():
    rng = random.Random(5)
    for _ in range(20):
        gens = [Polynomial(g, 3) for g in random_ideal(rng)]
        gb = buchberger(gens, MonomialOrder.of("grevlex", 3))
        leads = gb.leading_monomials()
        for k, g in enumerate(gb):
            assert g.leading_coefficient() == 1
            for m in g.as_dict():
                for t, lm in enumerate(leads):
                    if t != k:
                        assert not all(a >= b for a, b in zip(m, lm))
        assert is_groebner_basis(list(gb), gb.order)


# ---------------------------------------------------------------------------
# oracle equivalence


@pytest.mark.parametrize("seed", range(4))
def test_membership_agrees_with_linear_algebra(seed):
    rng = random.Random(1000 + seed)
    for _ in range(30):
        raw = random_ideal(rng)
        order = MonomialOrder.of(rng.choice(["lex", "grlex", "grevlex"]), 3)
        gb = buchberger([Polynomial(g, 3, order) for g in raw], order)
        for degree in range(1, 6):
            for f in (random_homogeneous(rng, 3, degree, 3), combine(rng, raw, 3, degree)):
                if not f:
                    continue
                expected = in_span_of_multiples(f, raw, 3, degree)
                assert is_in_ideal(Polynomial(f, 3, order), gb) == expected, (raw, f)


def test_inhomogeneous_members_are_found():
    rng = random.Random(77)
    for _ in range(30):
        raw = [
            {**random_homogeneous(rng, 3, rng.randint(1, 3)), **random_homogeneous(rng, 3, 0, 1)}
            for _ in range(2)
        ]
        gens = [Polynomial(g, 3) for g in raw]
        gb = buchberger(gens, lex(3))
        cofactors = [Polynomial(random_homogeneous(rng, 3, rng.randint(0, 2)), 3) for _ in gens]
        f = sum((c * g for c, g in zip(cofactors, gens)), Polynomial.zero(3))
        assert in_span_of_multiples(f.as_dict(), raw, 3, 5)
        assert is_in_ideal(f, gb)


# ---------------------------------------------------------------------------
# properties


def test_permutation_invariance():
    rng = random.Random(11)
    for _ in range(25):
        gens = [Polynomial(g, 3) for g in random_ideal(rng)]
        order = MonomialOrder.of(rng.choice(["lex", "grevlex"]), 3)
        reference = buchberger(gens, order).generators
        for perm in permutations(gens):
            assert buchberger(list(perm), order).generators == reference


small = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    st.integers(-4, 4),
    max_size=4,
).map(lambda d: Polynomial(d, 3))


@pytest.fixture(scope="module")
def gb_cubic():
    names = ["x1", "x2", "x3"]
    gens = [P("x1^2 + x1*x2 + x2^2 + x1*x3", names=names), P("x2^3 - x3^2", names=names), P("x3^3", names=names)]
    return buchberger(gens, MonomialOrder.of("grevlex", 3))


@settings(max_examples=60, deadline=None)
@given(small, small)
def test_normal_form_multiplicative(gb_cubic, f, g):
    gb = gb_cubic
    f, g = f.with_order(gb.order), g.with_order(gb.order)
    lhs = normal_form(f * g, gb)
    rhs = normal_form(normal_form(f, gb) * normal_form(g, gb), gb)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(small, small)
def test_normal_form_linear_and_idempotent(gb_cubic, f, g):
    gb = gb_cubic
    f, g = f.with_order(gb.order), g.with_order(gb.order)
    assert normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb)
    nf = normal_form(f, gb)
    assert normal_form(nf, gb) == nf


def test_random_bases_match_sympy():
    rng = random.Random(3)
    xs = sympy.symbols("x1 x2 x3")
    names = ["x1", "x2", "x3"]
    for _ in range(15):
        raw = random_ideal(rng)
        gens = [Polynomial(g, 3) for g in raw]
        ours = strings(buchberger(gens, MonomialOrder.of("grevlex", 3)), names)
        exprs = [sum(int(c) * sympy.prod([x**e for x, e in zip(xs, m)]) for m, c in g.items()) for g in raw]
        theirs = sympy.groebner(exprs, *xs, order="grevlex")
        assert sorted(ours) == from_sympy(theirs, names)

import pytest

from coflag.poly import MonomialOrder, Polynomial
from coflag.spaces import (
    CartanModel,
    flag_presentation,
    g2_flag_presentation,
    gss_model,
    relation_families,
)
from coflag.quotient import PoincarePolynomial
from coflag.verify import (
    Claim,
    VerificationReport,
    displayed_relation,
    mutate_coefficient,
    verify_basis,
    verify_gss2_model,
    verify_poincare_consistency,
    verify_presentation,
    verify_relations_are_groebner,
    verify_relations_in_ideal,
    verify_top_class,
    verify_vanishing_identities,
)


def ids(report):
    return [c.id for c in report.claims]


# ---------------------------------------------------------------------------
# report type


def test_failed_claim_needs_witness():
    with pytest.raises(ValueError):
        Claim("x", "anchor", "fail")
    with pytest.raises(ValueError):
        Claim("x", "anchor", "maybe")


def test_report_rejects_duplicate_ids():
    c = Claim("a/1", "anchor", "pass")
    with pytest.raises(ValueError):
        VerificationReport((c, c))


def test_report_orders_ids_naturally():
    claims = tuple(Claim(f"a/p{i}", "anchor", "pass") for i in (10, 2, 1))
    assert ids(VerificationReport(claims)) == ["a/p1", "a/p2", "a/p10"]


# ---------------------------------------------------------------------------
# individual verifiers


def test_relations_in_ideal_a3():
    report = verify_relations_in_ideal(flag_presentation("A", 3))
    assert report.ok
    assert sum(c.id.endswith("in-ideal") for c in report.claims) == 3


def test_relations_in_ideal_g2():
    report = verify_relations_in_ideal(g2_flag_presentation())
    assert report.ok
    assert sum(c.id.endswith("in-ideal") for c in report.claims) == 3


@pytest.mark.parametrize("family,n", [(f, n) for f in "AB" for n in range(2, 6)] + [("D", n) for n in range(2, 5)])
def test_relations_are_groebner(family, n):
    assert verify_relations_are_groebner(flag_presentation(family, n)).ok


def test_a_type_elimination_claim_present():
    report = verify_relations_are_groebner(flag_presentation("A", 3))
    assert "A3/groebner/eliminate-x0" in ids(report)


@pytest.mark.parametrize("family,n,count", [("A", 4, 120), ("C", 3, 48), ("D", 4, 192)])
def test_basis(family, n, count):
    p = flag_presentation(family, n)
    assert verify_basis(p).ok
    assert p.quotient.dimension() == count


def test_vanishing_a3_covers_s4():
    report = verify_vanishing_identities(flag_presentation("A", 3))
    assert report.ok
    assert "A3/vanish/k3/m4" in ids(report)
    # default cap is 2n + 2
    assert "A3/vanish/k2/m8" in ids(report)
    assert "A3/vanish/k2/m9" not in ids(report)


def test_vanishing_d():
    r4 = verify_vanishing_identities(flag_presentation("D", 4))
    assert r4.ok
    anchors = {c.id: c.anchor for c in r4.claims}
    assert anchors["D4/vanish/addrel/k2"].startswith("x2^3*x3^3*x4^5")
    r3 = verify_vanishing_identities(flag_presentation("D", 3))
    assert r3.ok and "D3/vanish/last-power" in ids(r3)


def test_vanishing_other_family_raises():
    with pytest.raises(ValueError):
        verify_vanishing_identities(flag_presentation("B", 2))


@pytest.mark.parametrize("p", [flag_presentation("A", 3), flag_presentation("D", 4), g2_flag_presentation()], ids=str)
def test_top_class(p):
    assert verify_top_class(p).ok


def test_poincare_consistency():
    for p in (flag_presentation("B", 2), flag_presentation("A", 1), g2_flag_presentation()):
        assert verify_poincare_consistency(p).ok
    assert str(flag_presentation("B", 2).quotient.poincare_polynomial()) == "1 + 2*t^2 + 2*t^4 + 2*t^6 + t^8"
    assert str(flag_presentation("A", 1).quotient.poincare_polynomial()) == "1 + t^2"


def test_gss2_models():
    assert verify_gss2_model(gss_model("Spin8"), 26).ok
    assert verify_gss2_model(gss_model("SU-odd", 2), 22).ok
    assert not verify_gss2_model(gss_model("SU-odd", 2), 24).ok
    p = flag_presentation("B", 3)
    assert verify_gss2_model(CartanModel.of(p), 18).ok


def test_gss2_expected_series_claim():
    base = PoincarePolynomial.parse("1 + t^5") * PoincarePolynomial.parse("1 + t^9")
    fiber = flag_presentation("B", 2).quotient.poincare_polynomial()
    assert verify_gss2_model(gss_model("SU-odd", 2), 22, base * fiber).ok


def test_displayed_relation_agrees_with_recursion():
    for family, kinds in (("A", ["rel"]), ("B", ["rel1"]), ("D", ["rel2", "rel3"])):
        for n in range(2, 5):
            p = flag_presentation(family, n)
            fam = relation_families(p)
            for kind in kinds:
                for i, r in enumerate(fam[kind], start=1):
                    assert r == displayed_relation(kind, n, i, p.order)


@pytest.mark.parametrize("family,n", [(f, n) for f in "ABC" for n in range(1, 6)] + [("D", n) for n in range(2, 6)])
def test_full_suite_passes(family, n):
    report = verify_presentation(flag_presentation(family, n))
    assert report.ok, [c.as_dict() for c in report.failures()]
    assert all(c.anchor for c in report.claims)


def test_full_suite_g2_all_orders():
    for kind in ("lex", "grlex", "grevlex"):
        assert verify_presentation(g2_flag_presentation(MonomialOrder.of(kind, 2))).ok


# ---------------------------------------------------------------------------
# mutation sensitivity


def _mutations(p):
    fam = relation_families(p)
    for kind, rels in fam.items():
        for idx, r in enumerate(rels):
            for m in list(r.as_dict()) + [(1,) * p.nvars]:
                for delta in (1, -1):
                    yield mutate_coefficient(fam, kind, idx, m, delta)


@pytest.mark.parametrize(
    "p",
    [flag_presentation(f, n) for f in "ABC" for n in range(1, 5)]
    + [flag_presentation("D", n) for n in range(2, 5)]
    + [g2_flag_presentation()],
    ids=lambda p: p.name,
)
def test_every_single_coefficient_mutation_is_caught(p):
    count = 0
    for fam in _mutations(p):
        report = verify_relations_in_ideal(p, fam) + verify_relations_are_groebner(p, fam)
        assert not report.ok
        for claim in report.failures():
            assert claim.witness and claim.witness != "0"
        count += 1
    assert count > 0


def test_mutation_witness_is_the_perturbation():
    p = flag_presentation("A", 2)
    fam = mutate_coefficient(relation_families(p), "rel", 0, (0, 3), 1)
    report = verify_relations_in_ideal(p, fam)
    failed = {c.id: c.witness for c in report.failures()}
    assert failed == {"A2/rel/p1/form": "x2^3"}


def test_unmutated_families_pass():
    p = flag_presentation("D", 3)
    fam = relation_families(p)
    assert (verify_relations_in_ideal(p, fam) + verify_relations_are_groebner(p, fam)).ok
    assert mutate_coefficient(fam, "rel2", 0, (0, 0, 6), 0)["rel2"][0] == fam["rel2"][0]
    assert isinstance(fam["rel3"][0], Polynomial)

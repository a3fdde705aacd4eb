import json

import pytest

from coflag.poly import MonomialOrder
from coflag.schema import (
    SchemaError,
    dumps,
    loads,
    presentation_from_json,
    presentation_to_json,
    restriction_from_json,
    restriction_to_json,
)
from coflag.spaces import RestrictionData, flag_presentation, g2_flag_presentation, gss_presentation


@pytest.mark.parametrize(
    "p",
    [flag_presentation("A", 3), flag_presentation("D", 4), g2_flag_presentation(), gss_presentation("SU-odd", 2),
     flag_presentation("B", 2, MonomialOrder.of("grevlex", 2, [1, 0]))],
    ids=lambda p: p.name,
)
def test_presentation_round_trip(p):
    doc = presentation_to_json(p)
    back = presentation_from_json(loads(dumps(doc)))
    assert back.generators == p.generators
    assert back.order == p.order
    assert back.variables == p.variables
    assert back.degrees_G == p.degrees_G and back.exterior_degrees == p.exterior_degrees
    assert back.manifold_dimension == p.manifold_dimension
    assert dumps(presentation_to_json(back)) == dumps(doc)


def test_restriction_round_trip():
    p = flag_presentation("C", 2)
    r = RestrictionData(p.generators, 2, p.variables, "torus")
    back, order = restriction_from_json(loads(dumps(restriction_to_json(r, p.order))))
    assert back == r
    assert order == p.order


def _doc(**changes):
    doc = presentation_to_json(flag_presentation("A", 2))
    doc.update(changes)
    return doc


@pytest.mark.parametrize(
    "doc,location",
    [
        (_doc(generators=["x1^2", "x1 + * x2"]), "generators[1]"),
        (_doc(generators=["x1^2", "x3"]), "generators[1]"),
        (_doc(generators=[3]), "generators[0]"),
        (_doc(order="revlex"), "order"),
        (_doc(order={"kind": "lex", "permutation": [0]}), "order"),
        (_doc(variables=["x1", "x1"]), "variables"),
        (_doc(degrees_G=[2, "3"]), "degrees_G"),
        (_doc(family="E"), "family"),
        (_doc(schema="coflag/9"), "schema"),
        (_doc(rank=3), "variables"),
    ],
)
def test_errors_carry_location(doc, location):
    with pytest.raises(SchemaError) as info:
        presentation_from_json(doc)
    assert info.value.location == location


def test_unknown_field_rejected():
    with pytest.raises(SchemaError):
        presentation_from_json(_doc(extra=1))


def test_json_syntax_error_location():
    with pytest.raises(SchemaError) as info:
        loads('{\n  "variables": [1,\n')
    assert info.value.location.startswith("line 3")


def test_restriction_needs_split_rank():
    doc = json.loads(dumps(restriction_to_json(RestrictionData(flag_presentation("B", 2).generators, 1))))
    doc["split_rank"] = None
    with pytest.raises(SchemaError) as info:
        restriction_from_json(doc)
    assert info.value.location == "split_rank"
    doc["split_rank"] = 5
    with pytest.raises(SchemaError):
        restriction_from_json(doc)

"""JSON documents for presentations and restriction data.

A document looks like::

    {
      "schema": "coflag/1",
      "name": "SU(3)/T^2",
      "family": "A",
      "rank": 2,
      "variables": ["x1", "x2"],
      "generators": ["x1^2 + x1*x2 + x2^2", "x1^2*x2 + x1*x2^2"],
      "order": "lex",
      "degrees_G": [2, 3],
      "degrees_H": [1, 1],
      "exterior_degrees": [],
      "split_rank": null
    }

``order`` is ``lex``/``grlex``/``grevlex`` or an object
``{"kind": ..., "permutation": [...]}``.  A restriction file uses the same
shape; its ``generators`` are the restricted invariants and ``split_rank``
is required.
"""

from __future__ import annotations

import json
from typing import Any

from .poly import MonomialOrder, PolynomialSyntaxError, format_poly, parse_poly
from .spaces import (
    CLASSICAL,
    FAMILIES,
    RestrictionData,
    SpacePresentation,
    flag_presentation,
)

SCHEMA_VERSION = "coflag/1"
FIELDS = (
    "name",
    "family",
    "rank",
    "variables",
    "generators",
    "order",
    "degrees_G",
    "degrees_H",
    "exterior_degrees",
    "split_rank",
)


class SchemaError(ValueError):
    """Malformed presentation document; ``location`` points at the offending field."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


def order_to_json(order: MonomialOrder):
    if order.is_identity():
        return order.kind
    return {"kind": order.kind, "permutation": list(order.permutation)}


def order_from_json(value, nvars: int) -> MonomialOrder:
    try:
        if isinstance(value, str):
            return MonomialOrder.of(value, nvars)
        if isinstance(value, dict):
            perm = value.get("permutation")
            if perm is not None and len(perm) != nvars:
                raise ValueError(f"permutation has {len(perm)} entries for {nvars} variables")
            return MonomialOrder.of(value.get("kind", "lex"), nvars, perm)
    except ValueError as exc:
        raise SchemaError(str(exc), "order") from None
    raise SchemaError("expected a string or an object", "order")


def presentation_to_json(p: SpacePresentation) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "name": p.name,
        "family": p.family,
        "rank": p.rank,
        "variables": list(p.variables),
        "generators": [format_poly(g, p.variables) for g in p.generators],
        "order": order_to_json(p.order),
        "degrees_G": list(p.degrees_G),
        "degrees_H": list(p.degrees_H),
        "exterior_degrees": list(p.exterior_degrees),
        "split_rank": None,
    }


def restriction_to_json(r: RestrictionData, order: MonomialOrder | None = None) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "name": r.name,
        "family": "custom",
        "rank": r.nvars,
        "variables": list(r.variables),
        "generators": [format_poly(g, r.variables) for g in r.images],
        "order": order_to_json(order or r.images[0].order),
        "degrees_G": [],
        "degrees_H": [],
        "exterior_degrees": [],
        "split_rank": r.split_rank,
    }


def _int_list(doc: dict, key: str) -> tuple:
    value = doc.get(key, [])
    if value is None:
        return ()
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise SchemaError("expected a list of integers", key)
    return tuple(value)


def _parse_common(doc: Any):
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    schema = doc.get("schema", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema {schema!r}", "schema")
    unknown = set(doc) - set(FIELDS) - {"schema"}
    if unknown:
        raise SchemaError(f"unknown fields {sorted(unknown)}")
    variables = doc.get("variables")
    if not isinstance(variables, list) or not variables or not all(isinstance(v, str) for v in variables):
        raise SchemaError("expected a non-empty list of variable names", "variables")
    if len(set(variables)) != len(variables):
        raise SchemaError("duplicate variable names", "variables")
    order = order_from_json(doc.get("order", "lex"), len(variables))
    texts = doc.get("generators")
    if not isinstance(texts, list) or not texts:
        raise SchemaError("expected a non-empty list of polynomial strings", "generators")
    gens = []
    for i, text in enumerate(texts):
        if not isinstance(text, str):
            raise SchemaError("expected a string", f"generators[{i}]")
        try:
            gens.append(parse_poly(text, variables, order=order))
        except PolynomialSyntaxError as exc:
            raise SchemaError(str(exc), f"generators[{i}]") from None
    return variables, order, gens


def presentation_from_json(doc: Any) -> SpacePresentation:
    variables, order, gens = _parse_common(doc)
    family = doc.get("family", "custom")
    if family not in FAMILIES:
        raise SchemaError(f"unknown family {family!r}", "family")
    rank = doc.get("rank", len(variables))
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        raise SchemaError("expected a positive integer", "rank")
    pattern = None
    if family in CLASSICAL:
        if rank != len(variables):
            raise SchemaError(f"family {family} needs {rank} variables", "variables")
        try:
            pattern = flag_presentation(family, rank).pattern
        except ValueError as exc:
            raise SchemaError(str(exc), "rank") from None
    elif family == "G2-flag":
        from .spaces import g2_flag_presentation

        pattern = g2_flag_presentation().pattern
    try:
        return SpacePresentation(
            name=str(doc.get("name", "")),
            family=family,
            rank=rank,
            generators=tuple(gens),
            order=order,
            variables=tuple(variables),
            pattern=pattern,
            degrees_G=_int_list(doc, "degrees_G"),
            degrees_H=_int_list(doc, "degrees_H"),
            exterior_degrees=_int_list(doc, "exterior_degrees"),
        )
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def restriction_from_json(doc: Any) -> tuple:
    """``(RestrictionData, order)`` from a document with ``split_rank`` set."""
    variables, order, gens = _parse_common(doc)
    k = doc.get("split_rank")
    if not isinstance(k, int) or isinstance(k, bool):
        raise SchemaError("restriction data needs an integer split_rank", "split_rank")
    try:
        r = RestrictionData(tuple(gens), k, tuple(variables), str(doc.get("name", "")))
    except ValueError as exc:
        raise SchemaError(str(exc), "split_rank") from None
    return r, order


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"

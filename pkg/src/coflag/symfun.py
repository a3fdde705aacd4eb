"""Symmetric-function constructors over subsets of the ring variables."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .poly import MonomialOrder, Polynomial, lex


@dataclass(frozen=True)
class VariableSubset:
    """Sorted subset of variable indices inside a ring of ``arity`` variables."""

    arity: int
    indices: tuple

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError(f"indices must be strictly increasing: {idx}")
        if idx and (idx[0] < 0 or idx[-1] >= self.arity):
            raise ValueError(f"indices {idx} out of range for {self.arity} variables")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of(cls, arity: int, indices: Iterable[int]) -> "VariableSubset":
        return cls(arity, tuple(sorted(indices)))

    @classmethod
    def all(cls, arity: int) -> "VariableSubset":
        return cls(arity, tuple(range(arity)))

    @classmethod
    def tail(cls, arity: int, start: int) -> "VariableSubset":
        """Variables ``start, start+1, ..., arity-1`` (0-based)."""
        return cls(arity, tuple(range(start, arity)))

    def __len__(self):
        return len(self.indices)

    def without_first(self) -> "VariableSubset":
        return VariableSubset(self.arity, self.indices[1:])


def _order(vars: VariableSubset, order: MonomialOrder | None) -> MonomialOrder:
    return order or lex(vars.arity)


def elementary_sigma(k: int, vars: VariableSubset, order: MonomialOrder | None = None) -> Polynomial:
    """Elementary symmetric polynomial of degree ``k`` in ``vars``."""
    if not 0 <= k <= len(vars):
        raise ValueError(f"sigma_{k} undefined on {len(vars)} variables")
    return _sigma(k, vars, False).with_order(_order(vars, order))


def squared_sigma(k: int, vars: VariableSubset, order: MonomialOrder | None = None) -> Polynomial:
    """``sigma_k`` evaluated at the squares of ``vars``."""
    if not 0 <= k <= len(vars):
        raise ValueError(f"sigma_{k} undefined on {len(vars)} variables")
    return _sigma(k, vars, True).with_order(_order(vars, order))


@lru_cache(maxsize=None)
def _sigma(k: int, vars: VariableSubset, squared: bool) -> Polynomial:
    # sigma_k(S) = x_j * sigma_{k-1}(S - x_j) + sigma_k(S - x_j)
    n = vars.arity
    if k == 0:
        return Polynomial.constant(1, n)
    if k > len(vars):
        return Polynomial.zero(n)
    rest = vars.without_first()
    e = [0] * n
    e[vars.indices[0]] = 2 if squared else 1
    head = _sigma(k - 1, rest, squared).mul_monomial(tuple(e))
    return head + _sigma(k, rest, squared)


def monomial_sum(k: int, vars: VariableSubset, order: MonomialOrder | None = None) -> Polynomial:
    """Sum of all degree-``k`` monomials in ``vars`` (complete homogeneous polynomial)."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    return _complete(k, vars, 1).with_order(_order(vars, order))


def complete_in_powers(
    k: int, vars: VariableSubset, power: int, order: MonomialOrder | None = None
) -> Polynomial:
    """Complete homogeneous polynomial of degree ``k`` evaluated at ``x**power``."""
    if k < 0 or power < 1:
        raise ValueError("need k >= 0 and power >= 1")
    return _complete(k, vars, power).with_order(_order(vars, order))


@lru_cache(maxsize=None)
def _complete(k: int, vars: VariableSubset, power: int) -> Polynomial:
    # s_k(S) = x_j * s_{k-1}(S) + s_k(S - x_j), x_j the smallest-index variable
    n = vars.arity
    if k == 0:
        return Polynomial.constant(1, n)
    if not vars.indices:
        return Polynomial.zero(n)
    e = [0] * n
    e[vars.indices[0]] = power
    return _complete(k - 1, vars, power).mul_monomial(tuple(e)) + _complete(
        k, vars.without_first(), power
    )


def top_product(vars: VariableSubset, order: MonomialOrder | None = None) -> Polynomial:
    """Product of all variables in ``vars``."""
    if not vars.indices:
        raise ValueError("top_product of an empty variable set")
    e = [0] * vars.arity
    for i in vars.indices:
        e[i] = 1
    return Polynomial.monomial(e, 1, _order(vars, order))

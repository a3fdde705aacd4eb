"""Zero-dimensional quotient rings: standard monomials, graded dimensions, top class."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from . import _kernels
from .groebner import GroebnerBasis, normal_form
from .poly import ArityError, Polynomial


class InfiniteQuotientError(ValueError):
    """The quotient ring is not finite-dimensional."""


class PoincarePolynomial:
    """Graded dimension series ``sum c_d t^d`` with non-negative integer coefficients.

    ``coefficients[d]`` is the coefficient of ``t^d``; trailing zeros are
    stripped so the zero series has no coefficients.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        if any(c < 0 for c in coeffs):
            raise ValueError(f"negative Betti number in {coeffs}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def from_mapping(cls, mapping: dict) -> "PoincarePolynomial":
        if not mapping:
            return cls()
        coeffs = [0] * (max(mapping) + 1)
        for d, c in mapping.items():
            coeffs[d] += c
        return cls(coeffs)

    @classmethod
    def parse(cls, text: str) -> "PoincarePolynomial":
        from .poly import parse_poly

        p = parse_poly(text, names=["t"])
        coeffs: dict = {}
        for (d,), c in p.as_dict().items():
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c} in {text!r}")
            coeffs[d] = int(c)
        return cls.from_mapping(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def total(self) -> int:
        return sum(self.coefficients)

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __getitem__(self, d: int) -> int:
        return self.coefficients[d] if 0 <= d < len(self.coefficients) else 0

    def __mul__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        if not isinstance(other, PoincarePolynomial):
            return NotImplemented
        if not self.coefficients or not other.coefficients:
            return PoincarePolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return PoincarePolynomial(out)

    def __eq__(self, other):
        if isinstance(other, PoincarePolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"PoincarePolynomial({str(self)!r})"

    def __str__(self):
        parts = []
        for d, c in enumerate(self.coefficients):
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                power = "t" if d == 1 else f"t^{d}"
                parts.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class QuotientRing:
    """``Q[x1..xn] / <gb>`` with each variable placed in cohomological degree ``weight``."""

    gb: GroebnerBasis
    weight: int = 2

    def __post_init__(self):
        if self.weight < 1:
            raise ValueError("cohomological weight must be positive")

    @property
    def nvars(self) -> int:
        return self.gb.nvars

    @cached_property
    def _leads(self) -> np.ndarray:
        lms = self.gb.leading_monomials()
        return np.array(lms, dtype=np.int64).reshape(len(lms), self.nvars)

    def pure_power_bounds(self) -> list | None:
        """Smallest ``b_i`` with ``x_i^b_i`` a leading monomial, or None if some is missing."""
        bounds = []
        for i in range(self.nvars):
            best = None
            for lm in self.gb.leading_monomials():
                if lm[i] and sum(lm) == lm[i]:
                    best = lm[i] if best is None else min(best, lm[i])
            if best is None:
                return None
            bounds.append(best)
        return bounds

    def is_zero_dimensional(self) -> bool:
        if self.gb.is_unit():
            return True
        return self.pure_power_bounds() is not None

    def _require_finite(self):
        if not self.is_zero_dimensional():
            raise InfiniteQuotientError("quotient ring is infinite-dimensional")

    @cached_property
    def _standard_array(self) -> np.ndarray:
        self._require_finite()
        if self.gb.is_unit():
            return np.zeros((0, self.nvars), dtype=_kernels.EXP_DTYPE)
        exps = _kernels.staircase(np.array(self.pure_power_bounds()), self._leads)
        return exps[_sort_permutation(exps, self.gb.order)]

    def standard_monomials(self) -> list:
        """Monomials outside the leading-term ideal, sorted by degree then by the order."""
        return [tuple(int(e) for e in row) for row in self._standard_array]

    def dimension(self) -> int:
        return int(self._standard_array.shape[0])

    def poincare_polynomial(self) -> PoincarePolynomial:
        hist = _kernels.degree_histogram(self._standard_array)
        coeffs = [0] * (self.weight * (len(hist) - 1) + 1) if len(hist) else []
        for d, c in enumerate(hist):
            coeffs[self.weight * d] = int(c)
        return PoincarePolynomial(coeffs)

    def top_class(self) -> tuple:
        """``(cohomological degree, standard monomials of maximal degree)``."""
        exps = self._standard_array
        if exps.shape[0] == 0:
            raise ValueError("zero ring has no top class")
        degs = exps.sum(axis=1)
        top = int(degs.max())
        mons = [tuple(int(e) for e in row) for row in exps[degs == top]]
        return self.weight * top, mons

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.gb)

    def coset_mul(self, f: Polynomial, g: Polynomial) -> Polynomial:
        if f.nvars != self.nvars or g.nvars != self.nvars:
            raise ArityError("coset_mul operands must live in the quotient's ring")
        return normal_form(normal_form(f, self.gb) * normal_form(g, self.gb), self.gb)


def _sort_permutation(exps: np.ndarray, order) -> np.ndarray:
    """Row permutation sorting by total degree, then ascending under ``order``."""
    if exps.shape[0] == 0:
        return np.arange(0)
    e = exps.astype(np.int64)
    cols = [e[:, i] for i in order.permutation]
    if order.kind == "grevlex":
        cols = [-e[:, i] for i in order.permutation[::-1]]
    deg = e.sum(axis=1)
    # np.lexsort treats the last key as primary
    keys = [deg] + cols
    return np.lexsort(tuple(reversed(keys)))


def standard_monomials(q: QuotientRing) -> list:
    return q.standard_monomials()


def poincare_polynomial(q: QuotientRing) -> PoincarePolynomial:
    return q.poincare_polynomial()


def coset_mul(f: Polynomial, g: Polynomial, q: QuotientRing) -> Polynomial:
    return q.coset_mul(f, g)


def top_class(q: QuotientRing) -> tuple:
    return q.top_class()


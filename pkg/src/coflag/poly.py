"""Sparse multivariate polynomials over the rationals.

Monomials are plain tuples of non-negative exponents, one slot per ring
variable.  A :class:`Polynomial` owns a dict ``monomial -> Fraction`` and
presents its terms sorted in descending order under a :class:`MonomialOrder`.
Values are immutable once built.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

Monomial = tuple  # tuple[int, ...]

ORDER_KINDS = ("lex", "grlex", "grevlex")


class ArityError(ValueError):
    """Raised when polynomials from rings of different arity are combined."""


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        super().__init__(f"{message} at column {pos + 1}: {text!r}")
        self.text = text
        self.pos = pos


# ---------------------------------------------------------------------------
# monomials


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exact quotient a / b; caller guarantees b | a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    """True when b divides a."""
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# orders


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on exponent vectors.

    ``permutation[0]`` is the index of the most significant variable, so the
    identity permutation gives x1 > x2 > ... > xn.
    """

    kind: str
    permutation: tuple
    key: Callable = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        perm = tuple(int(i) for i in self.permutation)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"not a permutation of 0..{len(perm) - 1}: {perm}")
        object.__setattr__(self, "permutation", perm)
        object.__setattr__(self, "key", _make_key(self.kind, perm))

    @property
    def arity(self) -> int:
        return len(self.permutation)

    @classmethod
    def of(cls, kind: str, nvars: int, permutation: Sequence[int] | None = None):
        if permutation is None:
            return _default_order(kind, nvars)
        return cls(kind, tuple(permutation))

    def is_identity(self) -> bool:
        return self.permutation == tuple(range(self.arity))

    def __str__(self):
        if self.is_identity():
            return self.kind
        return f"{self.kind}{list(self.permutation)}"


def _make_key(kind: str, perm: tuple) -> Callable[[Monomial], tuple]:
    identity = perm == tuple(range(len(perm)))
    if kind == "lex":
        if identity:
            return lambda m: m
        return lambda m: tuple(m[i] for i in perm)
    if kind == "grlex":
        if identity:
            return lambda m: (sum(m),) + m
        return lambda m: (sum(m),) + tuple(m[i] for i in perm)
    # grevlex: higher degree wins, then the smaller exponent in the least
    # significant variable wins
    rev = perm[::-1]
    return lambda m: (sum(m),) + tuple(-m[i] for i in rev)


@lru_cache(maxsize=None)
def _default_order(kind: str, nvars: int) -> MonomialOrder:
    return MonomialOrder(kind, tuple(range(nvars)))


def lex(nvars: int) -> MonomialOrder:
    return _default_order("lex", nvars)


def grlex(nvars: int) -> MonomialOrder:
    return _default_order("grlex", nvars)


def grevlex(nvars: int) -> MonomialOrder:
    return _default_order("grevlex", nvars)


# ---------------------------------------------------------------------------
# polynomials


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("_terms", "nvars", "order", "_sorted", "_hash")

    def __init__(
        self,
        terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] = (),
        nvars: int | None = None,
        order: MonomialOrder | None = None,
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict = {}
        for mono, c in items:
            mono = tuple(int(e) for e in mono)
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = _coerce(c)
            if c:
                data[mono] = data.get(mono, 0) + c
                if not data[mono]:
                    del data[mono]
        if nvars is None:
            if order is not None:
                nvars = order.arity
            elif data:
                nvars = len(next(iter(data)))
            else:
                raise ValueError("cannot infer arity of an empty polynomial")
        for mono in data:
            if len(mono) != nvars:
                raise ArityError(f"monomial {mono} does not have {nvars} slots")
        if order is None:
            order = lex(nvars)
        elif order.arity != nvars:
            raise ArityError(f"order of arity {order.arity} for {nvars} variables")
        self._terms = data
        self.nvars = nvars
        self.order = order
        self._sorted = None
        self._hash = None

    @classmethod
    def _raw(cls, data: dict, nvars: int, order: MonomialOrder) -> "Polynomial":
        # trusted constructor: data already normalized and owned by the caller
        p = object.__new__(cls)
        p._terms = data
        p.nvars = nvars
        p.order = order
        p._sorted = None
        p._hash = None
        return p

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, order: MonomialOrder | None = None):
        return cls._raw({}, nvars, order or lex(nvars))

    @classmethod
    def constant(cls, c, nvars: int, order: MonomialOrder | None = None):
        c = _coerce(c)
        data = {(0,) * nvars: c} if c else {}
        return cls._raw(data, nvars, order or lex(nvars))

    @classmethod
    def monomial(cls, mono: Sequence[int], coeff=1, order: MonomialOrder | None = None):
        return cls({tuple(mono): coeff}, len(mono), order)

    @classmethod
    def variable(cls, i: int, nvars: int, order: MonomialOrder | None = None):
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): Fraction(1)}, nvars, order or lex(nvars))

    @classmethod
    def gens(cls, nvars: int, order: MonomialOrder | None = None):
        return [cls.variable(i, nvars, order) for i in range(nvars)]

    # inspection -------------------------------------------------------------

    def as_dict(self) -> dict:
        return dict(self._terms)

    @property
    def terms(self) -> tuple:
        """``(monomial, coefficient)`` pairs, strictly descending under ``order``."""
        if self._sorted is None:
            self._sorted = tuple(
                sorted(self._terms.items(), key=lambda t: self.order.key(t[0]), reverse=True)
            )
        return self._sorted

    def monomials(self) -> list:
        return [m for m, _ in self.terms]

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=self.order.key)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    def leading_term(self) -> "Polynomial":
        m = self.leading_monomial()
        return Polynomial._raw({m: self._terms[m]}, self.nvars, self.order)

    def with_order(self, order: MonomialOrder) -> "Polynomial":
        if order.arity != self.nvars:
            raise ArityError(f"order of arity {order.arity} for {self.nvars} variables")
        if order == self.order:
            return self
        return Polynomial._raw(self._terms, self.nvars, order)

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.nvars, self.order)
        return Polynomial._raw({m: c * v for m, v in self._terms.items()}, self.nvars, self.order)

    def mul_monomial(self, mono: Monomial, c=1) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.nvars, self.order)
        return Polynomial._raw(
            {mono_mul(m, mono): c * v for m, v in self._terms.items()}, self.nvars, self.order
        )

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ArityError(f"expected {self.nvars} values, got {len(point)}")
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring map sending variable i to ``images[i]``."""
        if len(images) != self.nvars:
            raise ArityError(f"expected {self.nvars} images, got {len(images)}")
        target = images[0].nvars if images else 0
        out = Polynomial.zero(target, images[0].order if images else None)
        for m, c in self._terms.items():
            term = Polynomial.constant(c, target, out.order)
            for img, e in zip(images, m):
                if e:
                    term = term * img**e
            out = out + term
        return out

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ArityError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self.nvars, self.order)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        data = dict(self._terms)
        for m, c in other._terms.items():
            v = data.get(m, 0) + c
            if v:
                data[m] = v
            else:
                data.pop(m, None)
        return Polynomial._raw(data, self.nvars, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.nvars, self.order)

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        data: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                data[m] = data.get(m, 0) + c1 * c2
        data = {m: c for m, c in data.items() if c}
        return Polynomial._raw(data, self.nvars, self.order)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.nvars, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self._terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f * g


# ---------------------------------------------------------------------------
# division


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder | None = None):
    """Multivariate division of ``f`` by an ordered list of divisors.

    Returns ``(quotients, remainder)`` with ``f == sum(q*d) + r`` and no term of
    ``r`` divisible by a leading monomial of any divisor.  At every step the
    first divisor (in list order) whose leading monomial divides the current
    leading term is used.
    """
    order = order or f.order
    if order.arity != f.nvars:
        raise ArityError(f"order of arity {order.arity} for {f.nvars} variables")
    for d in divisors:
        f._check(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
    key = order.key
    leads = []
    for d in divisors:
        lm = max(d._terms, key=key)
        leads.append((lm, d._terms[lm]))
    quotients: list[dict] = [{} for _ in divisors]
    remainder: dict = {}
    p = dict(f._terms)
    while p:
        m = max(p, key=key)
        c = p[m]
        for i, (lm, lc) in enumerate(leads):
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                factor = c / lc
                quotients[i][q] = quotients[i].get(q, 0) + factor
                for dm, dc in divisors[i]._terms.items():
                    t = mono_mul(dm, q)
                    v = p.get(t, 0) - factor * dc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            remainder[m] = c
            del p[m]
    qs = [Polynomial._raw({k: v for k, v in q.items() if v}, f.nvars, order) for q in quotients]
    return qs, Polynomial._raw(remainder, f.nvars, order)


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """S-polynomial ``(L/lt(f))*f - (L/lt(g))*g`` with ``L = lcm(lm f, lm g)``."""
    f._check(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    order = order or f.order
    f = f.with_order(order)
    g = g.with_order(order)
    mf, mg = f.leading_monomial(), g.leading_monomial()
    lcm = mono_lcm(mf, mg)
    a = f.mul_monomial(mono_div(lcm, mf), 1 / f.leading_coefficient())
    b = g.mul_monomial(mono_div(lcm, mg), 1 / g.leading_coefficient())
    return a - b


# ---------------------------------------------------------------------------
# text serialization


def default_names(nvars: int, start: int = 1) -> list[str]:
    return [f"x{i}" for i in range(start, start + nvars)]


def format_monomial(m: Monomial, names: Sequence[str] | None = None) -> str:
    names = names or default_names(len(m))
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def format_poly(f: Polynomial, names: Sequence[str] | None = None) -> str:
    """Canonical text form, terms in descending order, e.g. ``x1^2 - 3/2*x2``."""
    names = names or default_names(f.nvars)
    if len(names) != f.nvars:
        raise ArityError(f"{len(names)} names for {f.nvars} variables")
    out = []
    for i, (m, c) in enumerate(f.terms):
        neg = c < 0
        a = -c if neg else c
        body = format_monomial(m, names)
        if body == "1":
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a}*{body}"
        if i == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out) or "0"


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))"
)


def parse_poly(
    text: str,
    names: Sequence[str] | None = None,
    nvars: int | None = None,
    order: MonomialOrder | None = None,
) -> Polynomial:
    """Parse the text form produced by :func:`format_poly`.

    Accepts sums of products of rational numbers, variables and ``^`` powers
    with optional parentheses.  Either ``names`` or ``nvars`` (``x1..xn``) must
    be given.
    """
    if names is None:
        if nvars is None:
            raise ValueError("parse_poly needs variable names or an arity")
        names = default_names(nvars)
    names = list(names)
    index = {n: i for i, n in enumerate(names)}
    n = len(names)
    order = order or lex(n)
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        mt = _TOKEN.match(stripped, pos)
        if not mt:
            raise PolynomialSyntaxError("unexpected character", text, pos)
        start = mt.start(mt.lastgroup)
        tokens.append((mt.lastgroup, mt.group(mt.lastgroup), start))
        pos = mt.end()
    tokens.append(("end", "", len(stripped)))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expr():
        kind, val, p = peek()
        sign = 1
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
        acc = term() * sign
        while True:
            kind, val, p = peek()
            if kind == "op" and val in "+-":
                take()
                t = term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term():
        acc = power()
        while True:
            kind, val, p = peek()
            if kind == "op" and val == "*":
                take()
                acc = acc * power()
            else:
                return acc

    def power():
        base = atom()
        kind, val, p = peek()
        if kind == "op" and val == "^":
            take()
            kind, val, p = take()
            if kind != "num" or "/" in val:
                raise PolynomialSyntaxError("expected a non-negative integer exponent", text, p)
            return base ** int(val)
        return base

    def atom():
        kind, val, p = take()
        if kind == "num":
            return Polynomial.constant(Fraction(val), n, order)
        if kind == "name":
            if val not in index:
                raise PolynomialSyntaxError(f"unknown variable {val!r}", text, p)
            return Polynomial.variable(index[val], n, order)
        if kind == "op" and val == "(":
            inner = expr()
            kind, val, p = take()
            if val != ")":
                raise PolynomialSyntaxError("expected ')'", text, p)
            return inner
        if kind == "op" and val == "-":
            return -atom()
        if kind == "end":
            raise PolynomialSyntaxError("unexpected end of input", text, p)
        raise PolynomialSyntaxError(f"unexpected {val!r}", text, p)

    result = expr()
    kind, val, p = peek()
    if kind != "end":
        raise PolynomialSyntaxError(f"unexpected {val!r}", text, p)
    return result

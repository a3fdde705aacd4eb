"""Buchberger's algorithm, normal forms and ideal membership.

The engine works on plain ``dict`` polynomials keyed by exponent tuples and
only wraps results in :class:`~coflag.poly.Polynomial` at the boundary.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .poly import (
    ArityError,
    MonomialOrder,
    Polynomial,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, interreduced, sorted by leading monomial (descending)."""

    generators: tuple
    order: MonomialOrder

    @property
    def nvars(self) -> int:
        return self.order.arity

    def leading_monomials(self) -> list:
        return [g.leading_monomial() for g in self.generators]

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


# ---------------------------------------------------------------------------
# dict-level kernels


class _Reducer:
    """Reduces dict polynomials modulo a list of monic divisors."""

    def __init__(self, order: MonomialOrder):
        self.key = order.key
        self.polys: list[dict] = []
        self.leads: list[tuple] = []

    def add(self, p: dict, lm: tuple):
        self.polys.append(p)
        self.leads.append(lm)

    def find(self, m: tuple) -> int:
        for i, lm in enumerate(self.leads):
            if all(a >= b for a, b in zip(m, lm)):
                return i
        return -1

    def reduce(self, f: dict) -> dict:
        """Full remainder of ``f``; no term of the result is divisible by a lead."""
        key = self.key
        p = dict(f)
        heap = [(_neg(key(m)), m) for m in p]
        heapq.heapify(heap)
        rem: dict = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = p.get(m)
            if c is None:
                continue
            i = self.find(m)
            if i < 0:
                rem[m] = c
                del p[m]
                continue
            del p[m]
            q = mono_div(m, self.leads[i])
            for gm, gc in self.polys[i].items():
                t = tuple(a + b for a, b in zip(gm, q))
                if t == m:
                    continue
                old = p.get(t)
                if old is None:
                    p[t] = -c * gc
                    heapq.heappush(heap, (_neg(key(t)), t))
                else:
                    v = old - c * gc
                    if v:
                        p[t] = v
                    else:
                        del p[t]
        return rem


def _neg(k: tuple) -> tuple:
    return tuple(-x for x in k)


def _lead(p: dict, key) -> tuple:
    return max(p, key=key)


def _monic(p: dict, key) -> dict:
    lc = p[_lead(p, key)]
    if lc == 1:
        return p
    inv = 1 / lc
    return {m: c * inv for m, c in p.items()}


def _spoly(f: dict, mf: tuple, g: dict, mg: tuple) -> dict:
    # f and g are monic
    lcm = mono_lcm(mf, mg)
    uf = mono_div(lcm, mf)
    ug = mono_div(lcm, mg)
    out: dict = {}
    for m, c in f.items():
        out[mono_mul(m, uf)] = c
    for m, c in g.items():
        t = mono_mul(m, ug)
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _degree(p: dict) -> int:
    return max(sum(m) for m in p)


# ---------------------------------------------------------------------------
# Buchberger


def _check_inputs(gens: Sequence[Polynomial], order: MonomialOrder):
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    n = order.arity
    for g in gens:
        if g.nvars != n:
            raise ArityError(f"generator in {g.nvars} variables, order has {n}")


def _unit(order: MonomialOrder) -> GroebnerBasis:
    return GroebnerBasis((Polynomial.constant(1, order.arity, order),), order)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are selected by the normal strategy (smallest lcm first) with sugar
    degree breaking ties; the Gebauer-Moeller update discards pairs covered by
    the coprime and chain criteria.
    """
    gens = list(gens)
    if order is None:
        order = gens[0].order if gens else None
    _check_inputs(gens, order)
    key = order.key
    n = order.arity

    polys: list[dict] = []
    leads: list[tuple] = []
    sugar: list[int] = []
    reducer = _Reducer(order)  # all polynomials ever added, for S-pair reduction

    active: list[int] = []
    pairs: dict = {}  # (i, j) -> (lcm key, sugar, lcm)

    def insert(p: dict, s: int):
        nonlocal active
        p = _monic(p, key)
        lm = _lead(p, key)
        h = len(polys)
        polys.append(p)
        leads.append(lm)
        sugar.append(s)
        reducer.add(p, lm)
        active, new_pairs = _gm_update(active, pairs, h, leads)
        for i in new_pairs:
            lcm = mono_lcm(leads[i], lm)
            ds = max(sugar[i] + sum(lcm) - sum(leads[i]), s + sum(lcm) - sum(lm))
            pairs[(i, h)] = (key(lcm), ds, lcm)

    # inter-reduce the input first so that trivially redundant generators vanish
    seed = sorted(
        ({m: c for m, c in g.as_dict().items()} for g in gens if not g.is_zero()),
        key=lambda p: key(_lead(p, key)),
    )
    for p in seed:
        r = reducer.reduce(p)
        if not r:
            continue
        if _is_constant(r, n):
            return _unit(order)
        insert(r, _degree(r))

    if not polys:
        return GroebnerBasis((), order)

    while pairs:
        (i, j), _ = min(pairs.items(), key=lambda kv: (kv[1][0], kv[1][1], kv[0]))
        _, s, _ = pairs.pop((i, j))
        sp = _spoly(polys[i], leads[i], polys[j], leads[j])
        if not sp:
            continue
        r = reducer.reduce(sp)
        if not r:
            continue
        if _is_constant(r, n):
            return _unit(order)
        insert(r, s)

    return _finalize([polys[i] for i in active], order)


def _is_constant(p: dict, n: int) -> bool:
    return len(p) == 1 and not any(next(iter(p)))


def _gm_update(active: list, pairs: dict, h: int, leads: list):
    """Gebauer-Moeller installation of polynomial ``h``.

    Mutates ``pairs`` (drops old pairs killed by the chain criterion) and
    returns the new active list plus the partners ``i`` for new pairs (i, h).
    """
    mh = leads[h]
    cands = list(active)
    lcms = {i: mono_lcm(leads[i], mh) for i in cands}
    keep = []
    for idx, i in enumerate(cands):
        li = lcms[i]
        if mono_coprime(leads[i], mh):
            keep.append(i)
            continue
        # drop (i, h) if another candidate's lcm properly divides lcm(i, h)
        dominated = False
        for j in cands:
            if j == i:
                continue
            lj = lcms[j]
            if mono_divides(lj, li) and (lj != li or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    new_pairs = [i for i in keep if not mono_coprime(leads[i], mh)]
    # chain criterion on existing pairs
    for (a, b) in list(pairs):
        lab = pairs[(a, b)][2]
        if (
            mono_divides(mh, lab)
            and mono_lcm(leads[a], mh) != lab
            and mono_lcm(leads[b], mh) != lab
        ):
            del pairs[(a, b)]
    new_active = [i for i in active if not mono_divides(mh, leads[i])]
    new_active.append(h)
    return new_active, new_pairs


def _finalize(polys: list[dict], order: MonomialOrder) -> GroebnerBasis:
    key = order.key
    n = order.arity
    items = [(p, _lead(p, key)) for p in polys]
    # minimal basis: drop elements whose leading monomial is divisible by another's
    items.sort(key=lambda t: key(t[1]))
    minimal = []
    for p, lm in items:
        if not any(mono_divides(lm2, lm) for _, lm2 in minimal):
            minimal.append((p, lm))
    reduced = []
    for idx, (p, lm) in enumerate(minimal):
        red = _Reducer(order)
        for jdx, (q, lq) in enumerate(minimal):
            if jdx != idx:
                red.add(q, lq)
        # the leading term is irreducible by minimality; reduce the tail
        tail = {m: c for m, c in p.items() if m != lm}
        r = red.reduce(tail) if tail else {}
        r[lm] = p[lm]
        reduced.append(_monic(r, key))
    gens = [Polynomial._raw(p, n, order) for p in reduced]
    gens.sort(key=lambda g: key(g.leading_monomial()), reverse=True)
    return GroebnerBasis(tuple(gens), order)


# ---------------------------------------------------------------------------
# queries


def _reducer_for(gb: GroebnerBasis) -> _Reducer:
    red = _Reducer(gb.order)
    for g in gb.generators:
        red.add(g.as_dict(), g.leading_monomial())
    return red


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of ``f`` modulo the ideal of ``gb``."""
    if f.nvars != gb.nvars:
        raise ArityError(f"polynomial in {f.nvars} variables, basis in {gb.nvars}")
    if gb.is_unit():
        return Polynomial.zero(f.nvars, gb.order)
    r = _reducer_for(gb).reduce(f.as_dict())
    return Polynomial._raw(r, f.nvars, gb.order)


def is_in_ideal(f: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(f, gb).is_zero()


def reduce_modulo(f: Polynomial, gens: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Full remainder of ``f`` modulo ``gens`` (first divisible generator wins)."""
    red = _Reducer(order)
    key = order.key
    for g in gens:
        if g.nvars != f.nvars:
            raise ArityError(f"arity mismatch: {g.nvars} vs {f.nvars}")
        d = g.as_dict()
        red.add(_monic(d, key), _lead(d, key))
    return Polynomial._raw(red.reduce(f.as_dict()), f.nvars, order)


def groebner_witness(gens: Sequence[Polynomial], order: MonomialOrder):
    """First S-polynomial (by pair index) with a nonzero remainder, or None."""
    if any(g.is_zero() for g in gens):
        raise ValueError("zero polynomial among generators")
    key = order.key
    red = _Reducer(order)
    dicts = []
    for g in gens:
        d = _monic(g.as_dict(), key)
        lm = _lead(d, key)
        dicts.append((d, lm))
        red.add(d, lm)
    for j in range(len(dicts)):
        for i in range(j):
            (f, mf), (g, mg) = dicts[i], dicts[j]
            sp = _spoly(f, mf, g, mg)
            if not sp:
                continue
            r = red.reduce(sp)
            if r:
                return (i, j), Polynomial._raw(r, order.arity, order)
    return None


def is_groebner_basis(gens: Sequence[Polynomial], order: MonomialOrder | None = None) -> bool:
    """True iff every pairwise S-polynomial reduces to zero modulo ``gens``."""
    gens = list(gens)
    if order is None:
        order = gens[0].order
    return groebner_witness(gens, order) is None


def ideal_equal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    return a.order == b.order and a.generators == b.generators

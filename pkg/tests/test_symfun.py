from itertools import combinations_with_replacement, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coflag.poly import Polynomial, format_poly, parse_poly
from coflag.symfun import (
    VariableSubset,
    complete_in_powers,
    elementary_sigma,
    monomial_sum,
    squared_sigma,
    top_product,
)


def V(n, *idx):
    return VariableSubset.of(n, idx)


def test_elementary_examples():
    assert format_poly(elementary_sigma(2, V(3, 0, 1, 2))) == "x1*x2 + x1*x3 + x2*x3"
    assert format_poly(elementary_sigma(1, V(1, 0))) == "x1"
    assert format_poly(elementary_sigma(3, V(3, 0, 1, 2))) == "x1*x2*x3"


def test_complete_examples():
    assert format_poly(monomial_sum(2, V(2, 0, 1))) == "x1^2 + x1*x2 + x2^2"
    assert monomial_sum(0, V(4, 1, 3)) == Polynomial.constant(1, 4)
    assert format_poly(monomial_sum(3, V(2, 1))) == "x2^3"


def test_squared_examples():
    assert format_poly(squared_sigma(1, V(2, 0, 1))) == "x1^2 + x2^2"
    assert format_poly(squared_sigma(2, V(2, 0, 1))) == "x1^2*x2^2"
    assert format_poly(squared_sigma(1, V(3, 0, 1, 2))) == "x1^2 + x2^2 + x3^2"


def test_top_product_examples():
    assert format_poly(top_product(V(2, 0, 1))) == "x1*x2"
    assert format_poly(top_product(V(1, 0))) == "x1"
    assert format_poly(top_product(V(4, 0, 1, 2, 3))) == "x1*x2*x3*x4"


def test_subset_validation():
    with pytest.raises(ValueError):
        VariableSubset(3, (1, 1))
    with pytest.raises(ValueError):
        VariableSubset(3, (0, 3))
    with pytest.raises(ValueError):
        top_product(VariableSubset(3, ()))
    with pytest.raises(ValueError):
        elementary_sigma(3, V(3, 0, 1))


def test_complete_matches_enumeration():
    n = 4
    subset = V(n, 0, 2, 3)
    for k in range(6):
        expected = {}
        for combo in combinations_with_replacement(subset.indices, k):
            e = [0] * n
            for i in combo:
                e[i] += 1
            expected[tuple(e)] = 1
        assert monomial_sum(k, subset) == Polynomial(expected, n)


def test_complete_in_powers_is_substitution():
    n = 3
    subset = V(n, 1, 2)
    for k in range(5):
        squares = [parse_poly(f"x{i + 1}^2", nvars=n) for i in range(n)]
        assert complete_in_powers(k, subset, 2) == monomial_sum(k, subset).substitute(squares)


subsets = st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(0, n - 1), min_size=1))
)


@given(subsets, st.integers(1, 6))
def test_complete_recursion(data, m):
    n, idx = data
    s = V(n, *idx)
    j = s.indices[0]
    xj = Polynomial.variable(j, n)
    assert monomial_sum(m, s) == xj * monomial_sum(m - 1, s) + monomial_sum(m, s.without_first())


@given(subsets, st.integers(0, 5), st.randoms())
def test_symmetry_under_permutation(data, k, rnd):
    n, idx = data
    s = V(n, *idx)
    images = list(range(n))
    shuffled = list(s.indices)
    rnd.shuffle(shuffled)
    for a, b in zip(s.indices, shuffled):
        images[a] = b
    subs = [Polynomial.variable(i, n) for i in images]
    assert monomial_sum(k, s).substitute(subs) == monomial_sum(k, s)
    if k <= len(s):
        assert elementary_sigma(k, s).substitute(subs) == elementary_sigma(k, s)
        assert squared_sigma(k, s).substitute(subs) == squared_sigma(k, s)


def test_generating_function_identity():
    # sum_{i} (-1)^i sigma_i h_{k-i} = 0 for k >= 1
    n = 4
    s = VariableSubset.all(n)
    for k in range(1, 7):
        total = Polynomial.zero(n)
        for i in range(0, min(k, n) + 1):
            total = total + (-1) ** i * elementary_sigma(i, s) * monomial_sum(k - i, s)
        assert total.is_zero()


def test_elementary_matches_product_expansion():
    n = 3
    for perm in permutations(range(n)):
        s = VariableSubset.of(n, perm)
        assert elementary_sigma(2, s) == elementary_sigma(2, VariableSubset.all(n))

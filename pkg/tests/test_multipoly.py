from __future__ import annotations

import itertools
import random

import pytest

from finquot.fields import PFieldElem
from finquot.multipoly import MultiPoly, mp_divexact, mp_gcd, substitution_exponents
from finquot.unipoly import UniPoly


def var(i, char=0, nvars=2):
    return MultiPoly.variable(char, nvars, i)


def const(c, char=0, nvars=2):
    return MultiPoly.const(char, nvars, c)


def random_poly(rng, char, nvars, max_terms=5, max_exp=3, max_coeff=6):
    while True:
        terms = {}
        for _ in range(rng.randrange(1, max_terms + 1)):
            mono = tuple(rng.randrange(max_exp + 1) for _ in range(nvars))
            terms[mono] = rng.randrange(-max_coeff, max_coeff + 1) or 1
        f = MultiPoly(char, nvars, terms)
        if not f.is_zero():
            return f


def test_construction_drops_zero_terms():
    f = MultiPoly(0, 2, {(1, 0): 0, (0, 1): 3})
    assert f.terms == {(0, 1): 3}
    assert MultiPoly(3, 1, {(2,): 6}).is_zero()


def test_basic_identities():
    x1, x2 = var(0), var(1)
    assert (x1 - x2) + x2 == x1
    assert (x1 * x2).terms == {(1, 1): 1}
    assert x1 * (x2 + const(1)) == x1 * x2 + x1


def test_frobenius_char2():
    x1 = var(0, char=2, nvars=1)
    one = const(1, char=2, nvars=1)
    assert (x1 + one) * (x1 + one) == x1 * x1 + one


def test_total_degree():
    assert MultiPoly.zero(0, 2).total_degree() == -1
    assert const(5).total_degree() == 0
    f = MultiPoly(0, 2, {(2, 1): 1, (1, 0): 1})
    assert f.total_degree() == 3
    assert f.var_degree(0) == 2
    assert f.var_degree(1) == 1


def test_evaluate():
    f = var(0) * var(1) - const(1)
    assert f.evaluate([2, 3], int) == 5
    g = MultiPoly(3, 1, {(2,): 1})
    assert g.evaluate([PFieldElem.of(3, 2)], lambda c: PFieldElem.of(3, c)).value == 1


def test_substitute_powers_examples():
    x1, x2 = var(0), var(1)
    assert (x1 - x2).substitute_powers((1, 0)) == UniPoly(0, (-1, 1))
    f = MultiPoly(0, 2, {(2, 1): 3, (0, 0): -2})
    assert f.substitute_powers((0, 0)) == UniPoly(0, (f.evaluate([1, 1], int),))
    assert (x1 * x2).substitute_powers((2, 3)) == UniPoly(0, (0, 0, 0, 0, 0, 1))


def test_substitute_sparse_matches_dense():
    rng = random.Random(23)
    for char in (0, 2, 5):
        for _ in range(60):
            nvars = rng.randrange(1, 4)
            f = random_poly(rng, char, nvars)
            exps = tuple(rng.randrange(6) for _ in range(nvars))
            sparse = f.substitute_sparse(exps)
            dense = f.substitute_powers(exps)
            rebuilt = [0] * (max(sparse, default=-1) + 1)
            for deg, c in sparse.items():
                rebuilt[deg] = c
            assert UniPoly(char, tuple(rebuilt)) == dense
            assert all(c != 0 for c in sparse.values())


def test_substitution_is_ring_hom():
    rng = random.Random(29)
    for _ in range(40):
        char = rng.choice((0, 2, 3))
        f = random_poly(rng, char, 2)
        g = random_poly(rng, char, 2)
        exps = (rng.randrange(5), rng.randrange(5))
        sf, sg = f.substitute_powers(exps), g.substitute_powers(exps)
        assert (f + g).substitute_powers(exps) == sf + sg
        assert (f * g).substitute_powers(exps) == sf * sg


def test_exponent_choice_for_constants():
    choice = substitution_exponents(const(5))
    assert choice.exponents == (0, 0)
    assert choice.method == "recursion"
    empty = substitution_exponents(MultiPoly.const(3, 0, 2))
    assert empty.exponents == ()


def test_exponent_choice_rejects_zero():
    with pytest.raises(ValueError):
        substitution_exponents(MultiPoly.zero(0, 2))


def test_exponent_choice_difference_of_variables():
    choice = substitution_exponents(var(0) - var(1))
    n1, n2 = choice.exponents
    assert n1 != n2
    assert (var(0) - var(1)).substitute_sparse(choice.exponents)


def test_exponent_choice_bound_example():
    f = var(0) * var(1) - const(1)  # degree 2, s = 2, bound 2^4 = 16
    choice = substitution_exponents(f)
    assert all(0 <= n <= 16 for n in choice.exponents)
    assert choice.bound_respected


def test_exponent_choice_seeded_sweep():
    rng = random.Random(31)
    for _ in range(200):
        char = rng.choice((0, 0, 2, 3))
        s = rng.randrange(1, 4)
        f = random_poly(rng, char, s, max_terms=6, max_exp=5)
        choice = substitution_exponents(f)
        assert f.substitute_sparse(choice.exponents)
        if choice.method == "recursion":
            d = f.total_degree()
            assert all(n <= max(d, 1) ** (2 * s) for n in choice.exponents)
            assert choice.bound_respected


def test_kronecker_fallback_is_injective_on_monomials():
    from finquot.multipoly import _kronecker_exponents

    rng = random.Random(37)
    for _ in range(80):
        f = random_poly(rng, rng.choice((0, 2, 3)), rng.randrange(1, 4))
        exps = _kronecker_exponents(f)
        sub = f.substitute_sparse(exps)
        assert sub
        # the radix map keeps every monomial in its own degree slot
        assert len(sub) == len(f.terms)
        assert sorted(sub.values()) == sorted(f.terms.values())


def test_mp_gcd_and_divexact():
    x, y = var(0), var(1)
    a = x * x - y * y
    b = x - y
    g = mp_gcd(a, b)
    assert g.terms in ({(1, 0): 1, (0, 1): -1}, {(1, 0): -1, (0, 1): 1})
    assert mp_divexact(a, b) * b == a
    assert mp_gcd(x * y, x).terms == {(1, 0): 1}


def test_mp_gcd_char_p():
    x = var(0, char=3, nvars=1)
    one = const(1, char=3, nvars=1)
    f = (x + one) * (x + one) * x
    g = (x + one) * x * x
    h = mp_gcd(f, g)
    assert mp_divexact(f, h).total_degree() == 1
    assert mp_divexact(g, h).total_degree() == 1


def test_render():
    x1, x2 = var(0), var(1)
    f = x1 * x1 * x2 - const(3)
    assert f.render(("t", "u")) == "t^2*u - 3"
    assert MultiPoly.zero(0, 2).render(("t", "u")) == "0"

"""Polynomial arithmetic and the divided-difference operators."""

import pytest
from hypothesis import given, settings, strategies as st

from zeroone.perms import Permutation, all_permutations, parse_permutation
from zeroone.poly import (
    Polynomial,
    coefficientwise_geq,
    configure_cache,
    demazure,
    divided_difference,
    is_zero_one,
    max_coefficient,
    schubert_all,
    schubert_classic,
    swap_variables,
)


@st.composite
def polynomials(draw, min_vars=2, max_vars=5, max_exp=4, max_terms=6):
    n = draw(st.integers(min_vars, max_vars))
    exps = st.tuples(*([st.integers(0, max_exp)] * n))
    terms = draw(st.dictionaries(exps, st.integers(-9, 9).filter(bool), max_size=max_terms))
    return Polynomial(n, terms)


def x(i, n):
    return Polynomial.variable(i, n)


def test_polynomial_canonical():
    f = Polynomial(2, {(1, 0): 1, (0, 1): 0})
    assert (0, 1) not in f.terms
    assert f == x(1, 2)
    assert (f - f).is_zero()
    with pytest.raises(ValueError):
        Polynomial(2, {(1, 0, 0): 1})


def test_divided_difference_basics():
    n = 3
    assert divided_difference(1, x(1, n)) == Polynomial.one(n)
    assert divided_difference(1, x(1, n) * x(2, n)).is_zero()
    assert divided_difference(1, x(1, n) * x(1, n) * x(2, n)) == x(1, n) * x(2, n)
    with pytest.raises(ValueError):
        divided_difference(3, x(1, n))


@given(polynomials(), st.data())
def test_divided_difference_exact_quotient(f, data):
    # multiply-back oracle: (x_i - x_{i+1}) * d_i(f) == f - s_i(f)
    i = data.draw(st.integers(1, f.nvars - 1))
    lhs = (x(i, f.nvars) - x(i + 1, f.nvars)) * divided_difference(i, f)
    assert lhs == f - swap_variables(i, f)


@given(polynomials(), st.data())
def test_divided_difference_squares_to_zero(f, data):
    i = data.draw(st.integers(1, f.nvars - 1))
    assert divided_difference(i, divided_difference(i, f)).is_zero()


@given(polynomials(min_vars=3, max_vars=5), st.data())
@settings(max_examples=50)
def test_braid_relation(f, data):
    i = data.draw(st.integers(1, f.nvars - 2))
    left = divided_difference(i, divided_difference(i + 1, divided_difference(i, f)))
    right = divided_difference(i + 1, divided_difference(i, divided_difference(i + 1, f)))
    assert left == right


@given(polynomials(), st.data())
def test_demazure_idempotent(f, data):
    i = data.draw(st.integers(1, f.nvars - 1))
    once = demazure(i, f)
    assert demazure(i, once) == once


def test_demazure_examples():
    n = 2
    assert demazure(1, Polynomial.one(n)) == Polynomial.one(n)
    assert demazure(1, x(1, n)) == x(1, n) + x(2, n)


def test_demazure_operator_formula_for_31542():
    # x1 * pi_2(pi_3(x1 x2 x3 * pi_1(x1)))
    n = 5
    inner = demazure(1, x(1, n))
    f = x(1, n) * demazure(2, demazure(3, x(1, n) * x(2, n) * x(3, n) * inner))
    assert f == schubert_classic(parse_permutation("31542"))


SCHUBERT_31542 = {
    (3, 1, 1, 0, 0): 1,
    (3, 1, 0, 1, 0): 1,
    (3, 0, 1, 1, 0): 1,
    (2, 2, 1, 0, 0): 1,
    (2, 1, 2, 0, 0): 1,
    (2, 2, 0, 1, 0): 1,
    (2, 1, 1, 1, 0): 1,
    (2, 0, 2, 1, 0): 1,
}


def test_schubert_paper_example():
    assert schubert_classic(parse_permutation("31542")).terms == SCHUBERT_31542


def test_schubert_longest_and_identity():
    assert schubert_classic(Permutation.longest(4)) == Polynomial.monomial((3, 2, 1, 0))
    assert schubert_classic(Permutation.identity(4)) == Polynomial.one(4)
    assert schubert_classic(Permutation.identity(1)) == Polynomial.one(1)


def test_schubert_strategies_agree():
    for w in all_permutations(5):
        assert schubert_classic(w, "leftmost") == schubert_classic(w, "rightmost")
    with pytest.raises(ValueError):
        schubert_classic(Permutation.identity(2), "middle")


def test_schubert_contains_code_monomial():
    # independent anchor: x^{code(w)} always appears with coefficient 1
    def code(entries):
        n = len(entries)
        return tuple(
            sum(1 for j in range(i + 1, n) if entries[j] < entries[i]) for i in range(n)
        )

    for w, f in schubert_all(5):
        assert f.coefficient(code(w.entries)) == 1


def test_schubert_all_matches_classic():
    table = dict(schubert_all(4))
    assert len(table) == 24
    for w, f in table.items():
        assert f == schubert_classic(w)


def test_cache_configuration():
    configure_cache(2)
    for w in all_permutations(3):
        schubert_classic(w)
    assert schubert_classic(parse_permutation("321")) == Polynomial.monomial((2, 1, 0))
    configure_cache(200_000)


def test_coefficient_predicates():
    s = schubert_classic(parse_permutation("31542"))
    assert is_zero_one(s)
    assert max_coefficient(s) == 1
    assert max_coefficient(Polynomial.zero(3)) == 0
    d = schubert_classic(parse_permutation("12543"))
    assert not is_zero_one(d)
    assert max_coefficient(d) == 2
    assert coefficientwise_geq(s, Polynomial.zero(5))
    assert coefficientwise_geq(s, s)
    assert not coefficientwise_geq(Polynomial.zero(5), s)


@given(polynomials(), polynomials())
def test_coefficientwise_geq_matches_subtraction(f, g):
    if f.nvars != g.nvars:
        return
    expected = all(c >= 0 for c in (f - g).terms.values())
    assert coefficientwise_geq(f, g) == expected


def test_format_graded_lex():
    f = schubert_classic(parse_permutation("31542"))
    assert str(f) == (
        "x1^3*x2*x3 + x1^3*x2*x4 + x1^3*x3*x4 + x1^2*x2^2*x3 + x1^2*x2^2*x4"
        " + x1^2*x2*x3^2 + x1^2*x2*x3*x4 + x1^2*x3^2*x4"
    )
    assert str(Polynomial.zero(2)) == "0"
    assert str(Polynomial.one(2) * -3) == "-3"
    assert str(x(2, 3) * x(2, 3) * -1) == "-x2^2"
    # higher degree first, then lexicographically larger exponent vector
    g = Polynomial(2, {(0, 1): 2, (1, 1): 1, (1, 0): 1})
    assert str(g) == "x1*x2 + x1 + 2*x2"


def test_reindex_and_substitute():
    f = x(1, 2) * x(2, 2)
    lifted = f.reindex((1, 3), 3)
    assert lifted == x(1, 3) * x(3, 3)
    assert lifted.substitute_zero(3).is_zero()
    assert lifted.substitute_zero(2) == lifted

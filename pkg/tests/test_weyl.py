"""Flagged Weyl module characters, exact ranks, and dominance."""

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from zeroone.perms import (
    Diagram,
    Permutation,
    all_permutations,
    has_northwest_property,
    parse_permutation,
    rothe_diagram,
)
from zeroone.poly import Polynomial, schubert_classic
from zeroone.weyl import (
    SizeLimitError,
    column_leq,
    diagram_leq,
    dual_character,
    matrix_rank,
    minor,
    pattern_dominance_check,
    schubert_pattern_inequality,
    _column_choices,
)


def test_column_leq():
    assert column_leq((1, 3), (2, 3))
    assert column_leq((1, 3), (1, 3))
    assert not column_leq((2,), (1,))
    assert not column_leq((1,), (1, 2))
    assert column_leq((), ())


def test_diagram_leq_columnwise():
    d = rothe_diagram(parse_permutation("321"))
    c = Diagram(((1, 2), (1,), ()))
    assert diagram_leq(c, d)
    assert not diagram_leq(Diagram(((1, 3), (1,), ())), d)


def test_minor_examples():
    assert dict(minor((1,), (2,))) == {frozenset({((1, 2), 1)}): 1}
    assert minor((2,), (1,)) == ()
    diag = dict(minor((1, 2, 3), (1, 2, 3)))
    assert diag == {frozenset({((1, 1), 1), ((2, 2), 1), ((3, 3), 1)}): 1}
    with pytest.raises(ValueError):
        minor((1, 2), (1,))


def test_minor_antisymmetry_signs():
    # rows {1,2}, cols {2,3}: y12 y23 - y13 y22
    terms = dict(minor((1, 2), (2, 3)))
    assert terms[frozenset({((1, 2), 1), ((2, 3), 1)})] == 1
    assert terms[frozenset({((1, 3), 1), ((2, 2), 1)})] == -1


def rank_by_fractions(rows):
    """Plain Gaussian elimination over Q as an independent oracle."""
    mat = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


@given(
    st.lists(
        st.lists(st.integers(-6, 6), min_size=1, max_size=5),
        min_size=1,
        max_size=5,
    ).filter(lambda rows: len({len(r) for r in rows}) == 1)
)
@settings(max_examples=200)
def test_matrix_rank_matches_fraction_oracle(rows):
    assert matrix_rank(rows) == rank_by_fractions(rows)


def test_column_choices():
    assert _column_choices(()) == [()]
    assert _column_choices((3,)) == [(1,), (2,), (3,)]
    assert _column_choices((1, 2)) == [(1, 2)]
    assert set(_column_choices((2, 3))) == {(1, 2), (1, 3), (2, 3)}


def test_dual_character_trivial_diagrams():
    assert dual_character(Diagram(((), (), ()))) == Polynomial.one(3)
    single = Diagram(((1, 2, 3), (), ()))
    assert dual_character(single) == Polynomial.monomial((1, 1, 1))


def test_dual_character_is_schubert_S4():
    for w in all_permutations(4):
        assert dual_character(rothe_diagram(w)) == schubert_classic(w)


def test_dual_character_size_limit():
    big = Diagram(tuple(() for _ in range(7)))
    with pytest.raises(SizeLimitError):
        dual_character(big)
    assert dual_character(big, limit=7) == Polynomial.one(7)


def _random_northwest_diagram(rng, n=4):
    boxes = {(rng.randint(1, n), rng.randint(1, n)) for _ in range(rng.randint(0, 6))}
    changed = True
    while changed:
        changed = False
        for (r, cp), (rp, c) in product(list(boxes), repeat=2):
            if r < rp and c < cp and (r, c) not in boxes:
                boxes.add((r, c))
                changed = True
    return Diagram.from_boxes(n, boxes)


def test_dual_character_support_and_coefficient_bounds():
    rng = random.Random(20250808)
    diagrams = [rothe_diagram(w) for w in all_permutations(4)]
    diagrams += [_random_northwest_diagram(rng) for _ in range(20)]
    for d in diagrams:
        assert has_northwest_property(d)
        chi = dual_character(d)
        expected_support = set()
        group_sizes = {}
        for choice in product(*[_column_choices(col) for col in d.columns]):
            wt = [0] * d.n
            for col in choice:
                for i in col:
                    wt[i - 1] += 1
            expected_support.add(tuple(wt))
            group_sizes[tuple(wt)] = group_sizes.get(tuple(wt), 0) + 1
        assert set(chi.terms) == expected_support
        for e, c in chi.terms.items():
            assert 1 <= c <= group_sizes[e]


def test_pattern_dominance_check_empty_hook():
    d = rothe_diagram(parse_permutation("31542"))
    result = pattern_dominance_check(d, 5, 3)  # row 5 and column 3 hold no boxes
    assert result.monomial == Polynomial.one(5)
    chi = dual_character(d)
    assert result.remainder == chi - chi.substitute_zero(5)
    assert result.ok


def test_pattern_dominance_check_rothe_matches_theorem():
    w = parse_permutation("2143")
    d = rothe_diagram(w)
    for k in range(1, 5):
        result = pattern_dominance_check(d, k, w[k])
        assert result.ok
    with pytest.raises(ValueError):
        pattern_dominance_check(d, 0, 1)


def test_pattern_dominance_check_all_S4():
    for w in all_permutations(4):
        d = rothe_diagram(w)
        for k in range(1, 5):
            for l in range(1, 5):
                assert pattern_dominance_check(d, k, l).ok


def test_pattern_dominance_check_general_diagrams():
    # the inequality needs no northwest hypothesis
    rng = random.Random(99)
    for _ in range(15):
        n = rng.randint(2, 4)
        boxes = {(rng.randint(1, n), rng.randint(1, n)) for _ in range(rng.randint(0, 5))}
        d = Diagram.from_boxes(n, boxes)
        for k, l in product(range(1, n + 1), repeat=2):
            assert pattern_dominance_check(d, k, l).ok, (d.columns, k, l)


def test_schubert_pattern_inequality_examples():
    assert schubert_pattern_inequality(Permutation.identity(4), 2)
    for w in all_permutations(5):
        for k in range(1, 6):
            assert schubert_pattern_inequality(w, k)


def test_max_coefficient_monotone_under_one_step(schubert_table_5, schubert_table_6):
    from zeroone.perms import one_step_pattern
    from zeroone.poly import max_coefficient

    for entries, f in schubert_table_6.items():
        w = Permutation(entries)
        for k in range(1, 7):
            sigma = one_step_pattern(w, k)
            assert max_coefficient(schubert_table_5[sigma.entries]) <= max_coefficient(f)

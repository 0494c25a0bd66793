"""Dual characters of flagged Weyl modules via exact determinant ranks.

For a diagram D inside [n] x [n], the candidate subdiagrams are all C with
C_j <= D_j columnwise (same size, k-th least element dominated).  Grouping
the C by weight monomial, the coefficient of a monomial in the dual
character is the rank over Q of the span of the products of minors
det(Y[C_j rows; D_j cols]) of the generic upper-triangular matrix Y.  Ranks
are computed exactly by fraction-free (Bareiss) elimination on integer
coefficient matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .perms import Diagram, Permutation, delete_row_col, one_step_pattern, rothe_diagram
from .poly import Polynomial, coefficientwise_geq, schubert_classic

__all__ = [
    "column_leq",
    "diagram_leq",
    "minor",
    "dual_character",
    "pattern_dominance_check",
    "schubert_pattern_inequality",
    "DominanceResult",
    "SizeLimitError",
    "DEFAULT_SIZE_LIMIT",
]

DEFAULT_SIZE_LIMIT = 6

# A Y-polynomial maps frozensets of ((row, col), exponent) pairs to ints.
YPoly = dict[frozenset, int]


class SizeLimitError(ValueError):
    """Diagram too large for the configured dual-character limit."""


def column_leq(r: tuple[int, ...] | frozenset, s: tuple[int, ...] | frozenset) -> bool:
    """R <= S: equal size and the k-th least element of R is at most that of S."""
    rs, ss = sorted(r), sorted(s)
    return len(rs) == len(ss) and all(a <= b for a, b in zip(rs, ss))


def diagram_leq(c: Diagram, d: Diagram) -> bool:
    if c.n != d.n:
        return False
    return all(column_leq(cj, dj) for cj, dj in zip(c.columns, d.columns))


@lru_cache(maxsize=65536)
def minor(rows: tuple[int, ...], cols: tuple[int, ...]) -> tuple[tuple[frozenset, int], ...]:
    """Determinant of the upper-triangular generic matrix restricted to
    the given rows and columns, as a tuple of (monomial, coefficient) pairs.

    The entry in position (i, j) is y_ij for i <= j and 0 otherwise, so the
    determinant vanishes unless rows <= cols elementwise sorted.
    """
    if len(rows) != len(cols):
        raise ValueError("minor needs equally many rows and columns")
    rows = tuple(sorted(rows))
    cols = tuple(sorted(cols))
    out = _minor_expand(rows, cols)
    return tuple(sorted(out.items(), key=lambda kv: sorted(kv[0])))


def _minor_expand(rows: tuple[int, ...], cols: tuple[int, ...]) -> YPoly:
    if not rows:
        return {frozenset(): 1}
    out: YPoly = {}
    first = rows[0]
    for idx, col in enumerate(cols):
        if first > col:
            continue
        sub = _minor_expand(rows[1:], cols[:idx] + cols[idx + 1 :])
        sign = -1 if idx % 2 else 1
        var = (first, col)
        for mono, coeff in sub.items():
            bumped = dict(mono)
            bumped[var] = bumped.get(var, 0) + 1
            key = frozenset(bumped.items())
            val = out.get(key, 0) + sign * coeff
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def _ypoly_mul(a: YPoly, b: YPoly) -> YPoly:
    out: YPoly = {}
    for m1, c1 in a.items():
        d1 = dict(m1)
        for m2, c2 in b.items():
            merged = dict(d1)
            for var, e in m2:
                merged[var] = merged.get(var, 0) + e
            key = frozenset(merged.items())
            val = out.get(key, 0) + c1 * c2
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def _det_product(columns: tuple[tuple[int, ...], ...], dcols: tuple[tuple[int, ...], ...]) -> YPoly:
    prod: YPoly = {frozenset(): 1}
    for cj, dj in zip(columns, dcols):
        if not dj:
            continue
        prod = _ypoly_mul(prod, dict(minor(cj, dj)))
    return prod


def matrix_rank(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    mat = [row[:] for row in rows]
    nrows = len(mat)
    if nrows == 0:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pivot = mat[rank][col]
        top = mat[rank]
        for r in range(rank + 1, nrows):
            factor = mat[r][col]
            row = mat[r]
            for c in range(col + 1, ncols):
                row[c] = (row[c] * pivot - factor * top[c]) // prev
            row[col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def _column_choices(col: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All sorted tuples S with S <= col, elementwise on sorted entries."""
    target = sorted(col)
    results: list[tuple[int, ...]] = []

    def rec(pos: int, prev: int, acc: list[int]):
        if pos == len(target):
            results.append(tuple(acc))
            return
        for v in range(prev + 1, target[pos] + 1):
            acc.append(v)
            rec(pos + 1, v, acc)
            acc.pop()

    rec(0, 0, [])
    return results


def _weight_groups(d: Diagram) -> dict[tuple[int, ...], list[tuple[tuple[int, ...], ...]]]:
    """All C <= D, grouped by weight exponent vector."""
    n = d.n
    per_column = [_column_choices(col) for col in d.columns]
    groups: dict[tuple[int, ...], list[tuple[tuple[int, ...], ...]]] = {}
    for choice in product(*per_column):
        wt = [0] * n
        for col in choice:
            for i in col:
                wt[i - 1] += 1
        groups.setdefault(tuple(wt), []).append(choice)
    return groups


def _group_rank(members: list[tuple[tuple[int, ...], ...]], dcols: tuple[tuple[int, ...], ...]) -> int:
    if len(members) == 1:
        return 1
    polys = [_det_product(choice, dcols) for choice in members]
    basis: dict[frozenset, int] = {}
    for p in polys:
        for mono in p:
            if mono not in basis:
                basis[mono] = len(basis)
    mat = []
    for p in polys:
        row = [0] * len(basis)
        for mono, coeff in p.items():
            row[basis[mono]] = coeff
        mat.append(row)
    return matrix_rank(mat)


def dual_character(d: Diagram, limit: int = DEFAULT_SIZE_LIMIT) -> Polynomial:
    """The dual character of the flagged Weyl module of d.

    Every coefficient is the exact rank of the span of determinant products
    for one weight group; for inversion diagrams this recovers the Schubert
    polynomial.
    """
    if d.n > limit:
        raise SizeLimitError(
            f"diagram size {d.n} exceeds limit {limit}; raise the limit explicitly to proceed"
        )
    dcols = d.columns
    terms = {}
    for wt, members in _weight_groups(d).items():
        terms[wt] = _group_rank(members, dcols)
    return Polynomial(d.n, terms)


@dataclass(frozen=True)
class DominanceResult:
    monomial: Polynomial
    remainder: Polynomial
    ok: bool


def _hook_monomial(d: Diagram, k: int, l: int) -> Polynomial:
    """Weight of the boxes of d lying in row k or column l, each box once."""
    n = d.n
    e = [0] * n
    for j in range(1, n + 1):
        if k in d.column(j):
            e[k - 1] += 1
    for i in d.column(l):
        if i != k:
            e[i - 1] += 1
    return Polynomial.monomial(tuple(e))


def pattern_dominance_check(
    d: Diagram, k: int, l: int, limit: int = DEFAULT_SIZE_LIMIT
) -> DominanceResult:
    """Check chi_D >= M * chi_{D-hat}(x_k := 0) coefficientwise.

    D-hat keeps the [n] x [n] frame and drops the boxes in row k or column
    l; M is the weight of the dropped boxes.  Also asserts, group by group,
    that the coefficient of M*m in chi_D dominates the coefficient of m in
    chi_{D-hat}, and (for n <= 4) that augmenting any row-k-free C <= D-hat
    by the dropped boxes lands below D.
    """
    n = d.n
    if not (1 <= k <= n and 1 <= l <= n):
        raise ValueError(f"row/column ({k}, {l}) out of range for n={n}")
    chi = dual_character(d, limit=limit)
    dhat = delete_row_col(d, k, l, reindex=False)
    chi_hat = dual_character(dhat, limit=limit)
    m_poly = _hook_monomial(d, k, l)
    chi_hat0 = chi_hat.substitute_zero(k)
    remainder = chi - m_poly * chi_hat0
    ok = all(c >= 0 for c in remainder.terms.values())

    m_exp = next(iter(m_poly.terms))
    for e, coeff in chi_hat0.terms.items():
        shifted = tuple(a + b for a, b in zip(e, m_exp))
        if chi.coefficient(shifted) < coeff:
            ok = False

    if n <= 4:
        _assert_augmentation(d, dhat, k, l)
    return DominanceResult(monomial=m_poly, remainder=remainder, ok=ok)


def _assert_augmentation(d: Diagram, dhat: Diagram, k: int, l: int):
    row_boxes = [(k, j) for j in range(1, d.n + 1) if k in d.column(j)]
    col_boxes = [(i, l) for i in d.column(l)]
    for choice in product(*[_column_choices(col) for col in dhat.columns]):
        if any(k in col for col in choice):
            continue
        boxes = [(i, j) for j, col in enumerate(choice, start=1) for i in col]
        aug = Diagram.from_boxes(d.n, boxes + row_boxes + col_boxes)
        if not diagram_leq(aug, d):
            raise AssertionError(
                f"augmented subdiagram escapes the ambient diagram: {choice}"
            )


def schubert_pattern_inequality(w: Permutation, k: int) -> bool:
    """schubert(w) - M * schubert(sigma) (reindexed) has no negative coefficient,
    where sigma is the one-step pattern at position k."""
    n = w.n
    if not 1 <= k <= n:
        raise ValueError(f"position {k} out of range for n={n}")
    sigma = one_step_pattern(w, k)
    d = rothe_diagram(w)
    m_poly = _hook_monomial(d, k, w[k])
    positions = tuple(p for p in range(1, n + 1) if p != k)
    lifted = schubert_classic(sigma).reindex(positions, n)
    return coefficientwise_geq(schubert_classic(w), m_poly * lifted)

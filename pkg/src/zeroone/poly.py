"""Exact multivariate polynomials and the divided-difference calculus.

Polynomials live in Z[x_1..x_n] with a fixed number of variables; terms map
exponent vectors (length-n tuples) to nonzero Python ints, so all arithmetic
is exact.  The divided difference of a monomial is computed as a geometric
sum, never through rational functions:

    (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p) / (x_i - x_{i+1})
        = sum_{a=q}^{p-1} x_i^a x_{i+1}^{p+q-1-a}          (p > q)

which is the exact quotient of the antisymmetrized numerator.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from itertools import permutations as it_perms
from typing import Iterator

from .perms import Permutation

__all__ = [
    "Polynomial",
    "divided_difference",
    "swap_variables",
    "demazure",
    "schubert_classic",
    "schubert_all",
    "is_zero_one",
    "max_coefficient",
    "coefficientwise_geq",
    "configure_cache",
]


class Polynomial:
    """Immutable polynomial over Z with a fixed variable count."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        object.__setattr__(self, "nvars", nvars)
        clean = {}
        if terms:
            for e, c in terms.items():
                if c == 0:
                    continue
                if len(e) != nvars:
                    raise ValueError(f"exponent vector {e} has wrong length (nvars={nvars})")
                clean[e] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial(nvars, {})

    @staticmethod
    def one(nvars: int) -> "Polynomial":
        return Polynomial(nvars, {(0,) * nvars: 1})

    @staticmethod
    def monomial(exponents: tuple[int, ...], coefficient: int = 1) -> "Polynomial":
        return Polynomial(len(exponents), {tuple(exponents): coefficient})

    @staticmethod
    def variable(i: int, nvars: int) -> "Polynomial":
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range")
        e = [0] * nvars
        e[i - 1] = 1
        return Polynomial(nvars, {tuple(e): 1})

    # -- ring operations ----------------------------------------------

    def _check_compatible(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials over different variable counts")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Polynomial(self.nvars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check_compatible(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exponents), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def substitute_zero(self, k: int) -> "Polynomial":
        """Set x_k := 0, dropping every term where x_k appears."""
        return Polynomial(self.nvars, {e: c for e, c in self.terms.items() if e[k - 1] == 0})

    def reindex(self, positions: tuple[int, ...], nvars: int) -> "Polynomial":
        """Send variable t to x_{positions[t-1]} inside a ring with nvars variables."""
        if len(positions) != self.nvars:
            raise ValueError("positions must name every old variable")
        out = {}
        for e, c in self.terms.items():
            new = [0] * nvars
            for old, exp in enumerate(e):
                if exp:
                    new[positions[old] - 1] = exp
            out[tuple(new)] = c
        return Polynomial(nvars, out)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for idx, exp in enumerate(e, start=1):
                if exp == 1:
                    factors.append(f"x{idx}")
                elif exp > 1:
                    factors.append(f"x{idx}^{exp}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.terms!r})"


def swap_variables(i: int, f: Polynomial) -> Polynomial:
    """The action of s_i: exchange x_i and x_{i+1}."""
    if not 1 <= i < f.nvars:
        raise ValueError(f"variable index {i} out of range for nvars={f.nvars}")
    out = {}
    for e, c in f.terms.items():
        if e[i - 1] != e[i]:
            le = list(e)
            le[i - 1], le[i] = le[i], le[i - 1]
            e = tuple(le)
        out[e] = out.get(e, 0) + c
    return Polynomial(f.nvars, out)


def divided_difference(i: int, f: Polynomial) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), exactly."""
    if not 1 <= i < f.nvars:
        raise ValueError(f"variable index {i} out of range for nvars={f.nvars}")
    out: dict[tuple[int, ...], int] = {}
    a_pos, b_pos = i - 1, i
    for e, c in f.terms.items():
        p, q = e[a_pos], e[b_pos]
        if p == q:
            continue
        lo, hi = (q, p) if p > q else (p, q)
        sgn = c if p > q else -c
        le = list(e)
        for a in range(lo, hi):
            le[a_pos] = a
            le[b_pos] = lo + hi - 1 - a
            key = tuple(le)
            s = out.get(key, 0) + sgn
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return Polynomial(f.nvars, out)


def demazure(i: int, f: Polynomial) -> Polynomial:
    """pi_i(f) = d_i(x_i * f)."""
    shifted = {}
    for e, c in f.terms.items():
        le = list(e)
        le[i - 1] += 1
        shifted[tuple(le)] = c
    return divided_difference(i, Polynomial(f.nvars, shifted))


# -- the classical recursion ------------------------------------------

_cache_lock = threading.Lock()
_cache: OrderedDict[tuple, Polynomial] = OrderedDict()
_cache_maxsize = 200_000


def configure_cache(maxsize: int) -> None:
    """Bound (and clear) the memo used by schubert_classic."""
    global _cache_maxsize
    with _cache_lock:
        _cache_maxsize = maxsize
        _cache.clear()


def _cache_get(key):
    with _cache_lock:
        value = _cache.get(key)
        if value is not None:
            _cache.move_to_end(key)
        return value


def _cache_put(key, value):
    with _cache_lock:
        _cache[key] = value
        while len(_cache) > _cache_maxsize:
            _cache.popitem(last=False)


def _longest_monomial(n: int) -> Polynomial:
    return Polynomial.monomial(tuple(n - i for i in range(1, n + 1)))


def schubert_classic(w: Permutation, strategy: str = "leftmost") -> Polynomial:
    """Schubert polynomial via divided differences, descending from w_0.

    The ascent used at each step is chosen by `strategy` ("leftmost" or
    "rightmost"); the braid relations make the result independent of the
    choice, which the test suite exercises.  Results are memoized per
    (one-line notation, strategy).
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    key = (w.entries, strategy)
    hit = _cache_get(key)
    if hit is not None:
        return hit
    ascents = w.ascents()
    if not ascents:
        result = _longest_monomial(w.n)
    else:
        i = ascents[0] if strategy == "leftmost" else ascents[-1]
        result = divided_difference(i, schubert_classic(w.swap_positions(i), strategy))
    _cache_put(key, result)
    return result


def schubert_all(n: int) -> Iterator[tuple[Permutation, Polynomial]]:
    """Yield (w, schubert(w)) for every w in S_n, by descending inversion count.

    Keeps only two adjacent inversion levels in memory, so full sweeps over
    S_7 stay small.  Within a level the order is lexicographic.
    """
    by_inv: dict[int, list[tuple[int, ...]]] = {}
    for e in it_perms(range(1, n + 1)):
        w = Permutation(e)
        by_inv.setdefault(w.inversions(), []).append(e)
    top = n * (n - 1) // 2
    level: dict[tuple[int, ...], Polynomial] = {
        Permutation.longest(n).entries: _longest_monomial(n)
    }
    yield Permutation.longest(n), level[Permutation.longest(n).entries]
    for inv in range(top - 1, -1, -1):
        nxt: dict[tuple[int, ...], Polynomial] = {}
        for e in by_inv.get(inv, []):
            w = Permutation(e)
            i = w.ascents()[0]
            parent = w.swap_positions(i)
            nxt[e] = divided_difference(i, level[parent.entries])
            yield w, nxt[e]
        level = nxt


# -- coefficient predicates -------------------------------------------

def is_zero_one(f: Polynomial) -> bool:
    """True iff every coefficient is 0 or 1."""
    return all(c == 1 for c in f.terms.values())


def max_coefficient(f: Polynomial) -> int:
    return max(f.terms.values(), default=0)


def coefficientwise_geq(f: Polynomial, g: Polynomial) -> bool:
    """True iff f - g has no negative coefficient."""
    f._check_compatible(g)
    for e, c in g.terms.items():
        if f.terms.get(e, 0) < c:
            return False
    return all(c >= 0 for e, c in f.terms.items() if e not in g.terms)

"""Permutations, their inversion diagrams, and pattern containment.

Everything is 1-based: a permutation of [n] is stored in one-line notation
as a tuple of the values (w_1, ..., w_n), and a diagram is a sequence of n
column subsets of [n].  Box (i, j) means row i, column j, read as in a
matrix (i grows downward, j rightward).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

__all__ = [
    "Permutation",
    "Diagram",
    "rothe_diagram",
    "has_northwest_property",
    "contains_pattern",
    "delete_row_col",
    "one_step_pattern",
    "parse_permutation",
    "parse_diagram",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation.

    >>> w = Permutation((3, 1, 5, 4, 2))
    >>> w.n, w.inverse().entries
    (5, (2, 5, 1, 4, 3))
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        n = len(self.entries)
        if sorted(self.entries) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {self.entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        """Value w_i, 1-based."""
        return self.entries[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.entries, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def swap_positions(self, i: int) -> "Permutation":
        """Right multiplication by s_i: exchange the entries in positions i, i+1."""
        if not 1 <= i < self.n:
            raise ValueError(f"position index {i} out of range for n={self.n}")
        e = list(self.entries)
        e[i - 1], e[i] = e[i], e[i - 1]
        return Permutation(tuple(e))

    def inversions(self) -> int:
        e = self.entries
        return sum(1 for i, j in combinations(range(self.n), 2) if e[i] > e[j])

    def ascents(self) -> list[int]:
        """Positions i with w_i < w_{i+1}."""
        e = self.entries
        return [i for i in range(1, self.n) if e[i - 1] < e[i]]

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def longest(n: int) -> "Permutation":
        return Permutation(tuple(range(n, 0, -1)))

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.entries)
        return ",".join(str(v) for v in self.entries)


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation: digits for n <= 9, comma-separated otherwise."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if "," in text:
        values = tuple(int(part) for part in text.split(","))
    else:
        if not text.isdigit():
            raise ValueError(f"bad permutation text: {text!r}")
        values = tuple(int(ch) for ch in text)
    return Permutation(values)


@dataclass(frozen=True)
class Diagram:
    """A sequence of n column subsets of [n], stored as sorted tuples."""

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.columns)
        norm = []
        for col in self.columns:
            col = tuple(sorted(set(col)))
            if col and not (1 <= col[0] and col[-1] <= n):
                raise ValueError(f"row index out of [{n}] in column {col}")
            norm.append(col)
        object.__setattr__(self, "columns", tuple(norm))

    @property
    def n(self) -> int:
        return len(self.columns)

    def column(self, j: int) -> tuple[int, ...]:
        return self.columns[j - 1]

    def boxes(self) -> Iterator[tuple[int, int]]:
        """All boxes (i, j), column by column."""
        for j, col in enumerate(self.columns, start=1):
            for i in col:
                yield (i, j)

    def box_count(self) -> int:
        return sum(len(col) for col in self.columns)

    def __contains__(self, box: tuple[int, int]) -> bool:
        i, j = box
        return 1 <= j <= self.n and i in self.columns[j - 1]

    def nonempty_columns(self) -> list[int]:
        return [j for j, col in enumerate(self.columns, start=1) if col]

    @staticmethod
    def from_boxes(n: int, boxes) -> "Diagram":
        cols: list[set[int]] = [set() for _ in range(n)]
        for i, j in boxes:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"box {(i, j)} outside [{n}]x[{n}]")
            cols[j - 1].add(i)
        return Diagram(tuple(tuple(sorted(c)) for c in cols))

    def __str__(self) -> str:
        lines = []
        for j, col in enumerate(self.columns, start=1):
            if col:
                lines.append(f"{j}: " + " ".join(str(i) for i in col))
            else:
                lines.append(f"{j}:")
        return "\n".join(lines)


def parse_diagram(text: str) -> Diagram:
    """Parse the one-line-per-column format emitted by Diagram.__str__."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty diagram text")
    cols = []
    for expected_j, line in enumerate(lines, start=1):
        head, _, tail = line.partition(":")
        if not head.strip().isdigit() or int(head) != expected_j:
            raise ValueError(f"expected column label {expected_j} in line {line!r}")
        rows = tail.split()
        if not all(r.isdigit() for r in rows):
            raise ValueError(f"bad row indices in line {line!r}")
        cols.append(tuple(int(r) for r in rows))
    return Diagram(tuple(cols))


def rothe_diagram(w: Permutation) -> Diagram:
    """Inversion diagram of w: box (i, j) present iff i < (w^-1)_j and j < w_i."""
    inv = w.inverse().entries
    cols = []
    for j in range(1, w.n + 1):
        wj_pos = inv[j - 1]
        cols.append(tuple(i for i in range(1, wj_pos) if j < w[i]))
    return Diagram(tuple(cols))


def has_northwest_property(d: Diagram) -> bool:
    """True iff (r, c') and (r', c) in D with r < r', c < c' force (r, c) in D.

    Equivalent columnwise test: whenever column c has a box strictly below
    some box of column c' > c, row r of column c' must appear in column c.
    """
    cols = [set(col) for col in d.columns]
    for c in range(d.n):
        for cp in range(c + 1, d.n):
            for r in cols[cp]:
                if r not in cols[c] and any(rp > r for rp in cols[c]):
                    return False
    return True


def contains_pattern(w: Permutation, sigma: Permutation) -> Optional[tuple[int, ...]]:
    """Lexicographically least realization of sigma in w, or None.

    A realization is an index sequence j_1 < ... < j_m such that the values
    w_{j_1}, ..., w_{j_m} are in the same relative order as sigma.  Patterns
    of different lengths are never identified: sigma must occur with its
    exact length.
    """
    m, n = sigma.n, w.n
    if m > n:
        return None
    target = sigma.entries
    e = w.entries
    for idxs in combinations(range(n), m):
        vals = [e[i] for i in idxs]
        order = sorted(range(m), key=vals.__getitem__)
        ranks = [0] * m
        for rank, pos in enumerate(order, start=1):
            ranks[pos] = rank
        if tuple(ranks) == target:
            return tuple(i + 1 for i in idxs)
    return None


def one_step_pattern(w: Permutation, k: int) -> Permutation:
    """The pattern in S_{n-1} obtained by deleting entry w_k and flattening."""
    if not 1 <= k <= w.n:
        raise ValueError(f"position {k} out of range for n={w.n}")
    removed = w[k]
    rest = [v if v < removed else v - 1 for i, v in enumerate(w.entries, start=1) if i != k]
    return Permutation(tuple(rest))


def delete_row_col(d: Diagram, k: int, l: int, reindex: bool) -> Diagram:
    """Remove the boxes in row k and column l.

    With reindex=True the row and column are removed entirely and the
    remaining indices are relabeled order-preservingly into [n-1] (the
    diagram of a one-step pattern).  With reindex=False only the boxes are
    dropped and the [n] x [n] frame is kept.
    """
    n = d.n
    if not (1 <= k <= n and 1 <= l <= n):
        raise ValueError(f"row/column ({k}, {l}) out of range for n={n}")
    if reindex:
        cols = []
        for j in range(1, n + 1):
            if j == l:
                continue
            col = tuple(i if i < k else i - 1 for i in d.column(j) if i != k)
            cols.append(col)
        return Diagram(tuple(cols))
    cols = []
    for j in range(1, n + 1):
        if j == l:
            cols.append(())
        else:
            cols.append(tuple(i for i in d.column(j) if i != k))
    return Diagram(tuple(cols))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    from itertools import permutations as it_perms

    for e in it_perms(range(1, n + 1)):
        yield Permutation(e)

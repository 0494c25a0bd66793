"""Orthodontic sequences, intermediate diagrams, and the operator formula.

The straightening algorithm works on an inversion diagram: first every
interval column [j] is counted (the k's) and emptied; then, repeatedly, the
leftmost nonempty column determines a smallest missing tooth i (i absent,
i+1 present), rows i and i+1 are swapped everywhere, and the interval
columns [i] so created are counted (the m's) and emptied.  Columns keep
their original index throughout; emptied columns simply become empty.

Internally columns are bitmasks (bit p = row p+1 present), which makes the
exhaustive sweeps over S_8 cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .perms import Diagram, Permutation, rothe_diagram
from .poly import Polynomial, demazure

__all__ = [
    "OrthodonticTrace",
    "orthodontic_sequence",
    "build_D_im",
    "column_equivalent",
    "schubert_orthodontic",
    "impact",
    "is_multiplicity_free",
]


def _columns_to_masks(d: Diagram) -> list[int]:
    return [reduce(lambda acc, i: acc | (1 << (i - 1)), col, 0) for col in d.columns]


def _mask_to_column(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _is_interval(mask: int) -> bool:
    return mask != 0 and mask & (mask + 1) == 0


def _smallest_missing_tooth(mask: int) -> int:
    """Least i with row i absent and row i+1 present; 0 if none."""
    teeth = ~mask & (mask >> 1)
    if teeth == 0:
        return 0
    return (teeth & -teeth).bit_length()


def _swap_rows(mask: int, i: int) -> int:
    """Exchange rows i and i+1 (bits i-1 and i)."""
    lo = mask >> (i - 1) & 1
    hi = mask >> i & 1
    if lo == hi:
        return mask
    return mask ^ (0b11 << (i - 1))


def _engine(masks: list[int], n: int):
    """Run the straightening on column masks.

    Returns (k, i, m, stages, removed, impacts) where stages[r] is the mask
    list after the first r row swaps (stage 0 is the input), removed[r]
    lists the 1-based indices of the columns emptied right after stage r,
    and impacts[r-1] lists the columns holding a box in row i_r + 1 at the
    moment swap r executes.
    """
    k = [0] * n
    stages = [tuple(masks)]
    removed: list[tuple[int, ...]] = []
    work = list(masks)
    rec = []
    for j, mask in enumerate(work):
        if _is_interval(mask):
            k[mask.bit_length() - 1] += 1
            work[j] = 0
            rec.append(j + 1)
    removed.append(tuple(rec))
    i_seq: list[int] = []
    m_seq: list[int] = []
    impacts: list[tuple[int, ...]] = []
    while True:
        first = next((j for j, mask in enumerate(work) if mask), None)
        if first is None:
            break
        tooth = _smallest_missing_tooth(work[first])
        if tooth == 0:
            raise AssertionError("leftmost nonempty column has no missing tooth")
        i_seq.append(tooth)
        impacts.append(tuple(j + 1 for j, mask in enumerate(work) if mask >> tooth & 1))
        work = [_swap_rows(mask, tooth) for mask in work]
        stages.append(tuple(work))
        target = (1 << tooth) - 1
        rec = []
        count = 0
        for j, mask in enumerate(work):
            if mask == target:
                count += 1
                work[j] = 0
                rec.append(j + 1)
            elif _is_interval(mask):
                raise AssertionError("unexpected interval column during straightening")
        m_seq.append(count)
        removed.append(tuple(rec))
    return tuple(k), tuple(i_seq), tuple(m_seq), tuple(stages), tuple(removed), tuple(impacts)


@dataclass(frozen=True)
class OrthodonticTrace:
    """Sequence data (i, k, m) together with the full straightening trace."""

    perm: Permutation
    i: tuple[int, ...]
    k: tuple[int, ...]
    m: tuple[int, ...]
    _stage_masks: tuple[tuple[int, ...], ...]
    removed: tuple[tuple[int, ...], ...]
    impacts: tuple[frozenset[int], ...]

    @property
    def length(self) -> int:
        return len(self.i)

    def stage(self, r: int) -> Diagram:
        """The intermediate diagram after the first r row swaps, with the
        original column indexing (emptied columns stay at their index)."""
        if not 0 <= r <= self.length:
            raise ValueError(f"stage {r} out of range 0..{self.length}")
        return Diagram(tuple(_mask_to_column(mask) for mask in self._stage_masks[r]))

    def stage_minus(self, r: int) -> Diagram:
        """stage(r) with the interval columns recorded at step r emptied;
        this is the working diagram the next row swap acts on."""
        if not 0 <= r <= self.length:
            raise ValueError(f"stage {r} out of range 0..{self.length}")
        gone = set(self.removed[r])
        cols = tuple(
            () if j + 1 in gone else _mask_to_column(mask)
            for j, mask in enumerate(self._stage_masks[r])
        )
        return Diagram(cols)


def orthodontic_sequence(w: Permutation) -> OrthodonticTrace:
    d = rothe_diagram(w)
    k, i, m, stages, removed, impacts = _engine(_columns_to_masks(d), w.n)
    return OrthodonticTrace(
        perm=w,
        i=i,
        k=k,
        m=m,
        _stage_masks=stages,
        removed=removed,
        impacts=tuple(frozenset(im) for im in impacts),
    )


def build_D_im(trace: OrthodonticTrace, n: int | None = None) -> Diagram:
    """Rebuild the diagram k_1*[1] + ... + k_n*[n] + sum_j m_j * s_{i_1}...s_{i_j}[i_j].

    Zero multiplicities contribute no column; the result is column-equivalent
    to the inversion diagram the trace came from.
    """
    if n is None:
        n = len(trace.k)
    cols: list[tuple[int, ...]] = []
    for j, kj in enumerate(trace.k, start=1):
        cols.extend([tuple(range(1, j + 1))] * kj)
    for r, mr in enumerate(trace.m, start=1):
        if mr == 0:
            continue
        col = set(range(1, trace.i[r - 1] + 1))
        for t in range(r, 0, -1):
            it = trace.i[t - 1]
            col = {it if v == it + 1 else it + 1 if v == it else v for v in col}
        cols.extend([tuple(sorted(col))] * mr)
    if len(cols) > n:
        raise AssertionError("more columns than the ambient size")
    cols.extend([()] * (n - len(cols)))
    return Diagram(tuple(cols))


def column_equivalent(d1: Diagram, d2: Diagram) -> bool:
    """Equality of the multisets of nonempty columns."""
    left = sorted(col for col in d1.columns if col)
    right = sorted(col for col in d2.columns if col)
    return left == right


def impact(w: Permutation, j: int, trace: OrthodonticTrace | None = None) -> frozenset[int]:
    """Columns receiving a box in row i_j + 1 when swap j executes."""
    if trace is None:
        trace = orthodontic_sequence(w)
    if not 1 <= j <= trace.length:
        raise ValueError(f"step {j} out of range 1..{trace.length}")
    return trace.impacts[j - 1]


def is_multiplicity_free(w: Permutation, trace: OrthodonticTrace | None = None) -> bool:
    """Every repeated letter of i must have all its impacts equal to one
    common singleton column."""
    if trace is None:
        trace = orthodontic_sequence(w)
    seen: dict[int, frozenset[int]] = {}
    repeated: set[int] = set()
    for letter, imp in zip(trace.i, trace.impacts):
        if letter in seen:
            repeated.add(letter)
            if len(imp) != 1 or imp != seen[letter]:
                return False
        else:
            seen[letter] = imp
    return all(len(seen[letter]) == 1 for letter in repeated)


def schubert_orthodontic(w: Permutation) -> Polynomial:
    """Evaluate the nested Demazure-operator formula
    omega_1^{k_1}...omega_n^{k_n} pi_{i_1}(omega_{i_1}^{m_1} pi_{i_2}(...)).
    """
    trace = orthodontic_sequence(w)
    n = w.n
    cur = Polynomial.one(n)
    for r in range(trace.length, 0, -1):
        cur = _omega_power(trace.i[r - 1], trace.m[r - 1], n) * cur
        cur = demazure(trace.i[r - 1], cur)
    for j in range(n, 0, -1):
        if trace.k[j - 1]:
            cur = _omega_power(j, trace.k[j - 1], n) * cur
    return cur


def _omega_power(j: int, power: int, n: int) -> Polynomial:
    """(x_1 x_2 ... x_j)^power as a monomial."""
    e = [power] * j + [0] * (n - j)
    return Polynomial.monomial(tuple(e))

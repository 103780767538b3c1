"""Young diagrams, semistandard tableaux and their readings.

Partitions are plain tuples of ints.  A tableau is stored row by row with
1-based entries; row ``k`` of the tableau is ``rows[k-1]``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .cartan import Weight
from .errors import DomainError, NoDescentError, ReconstructionError


# -- partitions --------------------------------------------------------------

def normalize_partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Validate a partition and strip trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise DomainError(f"not a partition: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    parts = normalize_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > k) for k in range(parts[0]))


def partitions(total: int, max_parts: int | None = None,
               max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` in reverse lexicographic order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        rest = None if max_parts is None else max_parts - 1
        for tail in partitions(total - first, rest, first):
            yield (first,) + tail


def transpose_factorial(mu: Sequence[int]) -> int:
    """Product of factorials of the parts of the conjugate partition."""
    return math.prod(math.factorial(c) for c in conjugate(mu))


# -- tableaux ----------------------------------------------------------------

@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows) -> Tableau:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entry(self, row: int, col: int) -> int:
        """Entry in the given 1-based row and column."""
        return self.rows[row - 1][col - 1]

    def key(self) -> str:
        """Canonical serialization, used for deduplication and ordering."""
        return "/".join(",".join(map(str, r)) for r in self.rows)

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data) -> Tableau:
        if isinstance(data, str):
            data = json.loads(data)
        rows = [list(r) for r in data["rows"]]
        shape = data.get("shape")
        if shape is not None:
            shape = [s for s in shape if s]
            if [len(r) for r in rows if r] != list(shape):
                raise DomainError(f"rows {rows} do not match shape {data['shape']}")
        return cls.from_rows(rows)

    def replace_entry(self, row: int, col: int, value: int) -> Tableau:
        rows = [list(r) for r in self.rows]
        rows[row - 1][col - 1] = value
        return Tableau.from_rows(rows)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


def highest_weight_tableau(shape: Sequence[int]) -> Tableau:
    """The tableau whose k-th row is filled with k."""
    shape = normalize_partition(shape)
    return Tableau(tuple((k,) * length for k, length in enumerate(shape, start=1)))


def _check_shape(T: Tableau) -> None:
    lengths = T.shape
    if any(a < b for a, b in zip(lengths, lengths[1:])) or any(x == 0 for x in lengths):
        raise DomainError(f"ragged rows: lengths {lengths} do not form a Young diagram")


def validate_ssyt(T: Tableau, n: int) -> bool:
    """True iff rows weakly increase, columns strictly increase, entries in 1..n+1."""
    _check_shape(T)
    for r in T.rows:
        if any(x < 1 or x > n + 1 for x in r):
            return False
        if any(a > b for a, b in zip(r, r[1:])):
            return False
    for upper, lower in zip(T.rows, T.rows[1:]):
        if any(upper[c] >= lower[c] for c in range(len(lower))):
            return False
    return True


def _require_ssyt(T: Tableau, n: int | None = None) -> int:
    if n is None:
        n = max((max(r) for r in T.rows), default=1) - 1
        n = max(n, 1)
    if not validate_ssyt(T, n):
        raise DomainError(f"not semistandard with entries <= {n + 1}:\n{T}")
    return n


def tableau_weight(T: Tableau, n: int) -> Weight:
    """Weight sum of eps_{entry}; <h_i, wt> = #i - #(i+1)."""
    counts = [0] * (n + 2)
    for r in T.rows:
        for x in r:
            counts[x] += 1
    return Weight(tuple(counts[i] - counts[i + 1] for i in range(1, n + 1)))


# -- readings ----------------------------------------------------------------
# Positions are (row, col), 1-based.  The first position is the first
# tensor factor.

def middle_eastern_positions(T: Tableau) -> list[tuple[int, int]]:
    """Across the rows right to left, rows top to bottom."""
    return [(r, c) for r in range(1, len(T.rows) + 1)
            for c in range(len(T.rows[r - 1]), 0, -1)]


def far_eastern_positions(T: Tableau) -> list[tuple[int, int]]:
    """Down the columns top to bottom, columns right to left."""
    shape = T.shape
    width = shape[0] if shape else 0
    return [(r, c) for c in range(width, 0, -1)
            for r in range(1, len(shape) + 1) if shape[r - 1] >= c]


def middle_eastern_reading(T: Tableau) -> tuple[int, ...]:
    return tuple(T.entry(r, c) for r, c in middle_eastern_positions(T))


def far_eastern_reading(T: Tableau) -> tuple[int, ...]:
    return tuple(T.entry(r, c) for r, c in far_eastern_positions(T))


READINGS = {
    "middle": middle_eastern_positions,
    "far": far_eastern_positions,
}


# -- row-excess partitions ---------------------------------------------------

def excess_partitions(T: Tableau, n: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Row k read right to left, minus k, as a partition of length lambda_k.

    Trailing zeros are kept: the j-th part of the k-th partition is the
    j-th entry from the right in row k, minus k.
    """
    _require_ssyt(T, n)
    return tuple(tuple(x - k for x in reversed(row))
                 for k, row in enumerate(T.rows, start=1))


def tableau_from_excess(shape: Sequence[int], mus: Sequence[Sequence[int]],
                        n: int) -> Tableau:
    """Inverse of excess_partitions; raises ReconstructionError off the image."""
    shape = normalize_partition(shape)
    if len(mus) != len(shape):
        raise DomainError(f"need {len(shape)} partitions, got {len(mus)}")
    rows = []
    for k, (length, mu) in enumerate(zip(shape, mus), start=1):
        mu = tuple(mu)
        if len(mu) != length:
            raise DomainError(f"partition {mu} for row {k} must have length {length}")
        rows.append(tuple(m + k for m in reversed(mu)))
    T = Tableau(tuple(rows))
    if not validate_ssyt(T, n):
        raise ReconstructionError(f"{list(map(tuple, mus))} is not the image of a "
                                  f"semistandard tableau of shape {shape} with n={n}")
    return T


# -- counting ----------------------------------------------------------------

def hook_content_count(shape: Sequence[int], m: int) -> int:
    """Number of SSYT of the shape with entries in 1..m (hook-content formula)."""
    shape = normalize_partition(shape)
    conj = conjugate(shape)
    value = Fraction(1)
    for r, length in enumerate(shape):
        for c in range(length):
            hook = (length - c - 1) + (conj[c] - r - 1) + 1
            value *= Fraction(m + c - r, hook)
    assert value.denominator == 1
    return int(value)


def enumerate_ssyt(shape: Sequence[int], m: int) -> Iterator[Tableau]:
    """All SSYT of the shape with entries in 1..m, row by row."""
    shape = normalize_partition(shape)

    def rec(k, prev, acc):
        if k == len(shape):
            yield Tableau(tuple(acc))
            return
        for row in _rows_strictly_below(prev, shape[k], m):
            acc.append(row)
            yield from rec(k + 1, row, acc)
            acc.pop()

    yield from rec(0, None, [])


def _count_by_rows(shape: tuple[int, ...], m: int) -> int:
    @lru_cache(maxsize=None)
    def count(k, prev):
        if k == len(shape):
            return 1
        total = 0
        for row in _rows_strictly_below(prev, shape[k], m):
            total += count(k + 1, row)
        return total
    return count(0, None)


def _rows_strictly_below(prev, length, m):
    def build(prefix, c):
        if c == length:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 1
        if prev is not None:
            lo = max(lo, prev[c] + 1)
        for x in range(lo, m + 1):
            prefix.append(x)
            yield from build(prefix, c + 1)
            prefix.pop()
    return build([], 0)


def count_ssyt(shape: Sequence[int], m: int, cross_check: bool = True) -> int:
    """Count SSYT of the shape with entries in 1..m.

    The hook-content product is the primary value.  For shapes with at
    most 12 boxes it is compared with a row-by-row enumeration, and a
    disagreement raises RuntimeError.
    """
    if m < 1:
        raise DomainError("max entry must be at least 1")
    shape = normalize_partition(shape)
    if len(shape) > m:
        return 0
    value = hook_content_count(shape, m)
    if cross_check and sum(shape) <= 12:
        brute = _count_by_rows(shape, m)
        if brute != value:
            raise RuntimeError(f"count mismatch for {shape}, m={m}: "
                               f"product {value} vs enumeration {brute}")
    return value


# -- lowest descent ----------------------------------------------------------

def lowest_descent(T: Tableau, n: int, check: bool = True):
    """Return (i_T, eps, T_plus) for a non-highest-weight tableau.

    i_T is the smallest value of (part + k - 1) over positive parts of the
    k-th excess partition, eps counts the parts attaining it, and T_plus
    replaces every entry i_T + 1 by i_T in rows 1..i_T.  With ``check``
    the tableau crystal must confirm e_{i_T}^eps T = T_plus and
    eps = eps_{i_T}(T).
    """
    mus = excess_partitions(T, n)
    candidates = [part + k - 1 for k, mu in enumerate(mus, start=1)
                  for part in mu if part > 0]
    if not candidates:
        raise NoDescentError("highest weight tableau has no descent")
    i_T = min(candidates)
    eps = candidates.count(i_T)
    rows = [tuple(i_T if (k <= i_T and x == i_T + 1) else x for x in row)
            for k, row in enumerate(T.rows, start=1)]
    T_plus = Tableau(tuple(rows))
    if check:
        from .crystal import tableau_e, tableau_epsilon
        assert tableau_epsilon(T, i_T) == eps, "formula and crystal disagree on eps"
        S = T
        for _ in range(eps):
            S = tableau_e(S, i_T)
        assert S == T_plus, f"e_{i_T}^{eps} T differs from T_plus:\n{S}\nvs\n{T_plus}"
    return i_T, eps, T_plus

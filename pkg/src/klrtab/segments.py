"""Segment modules, their induced characters, and the tableau-to-module checks.

A segment (a; l) is the one-dimensional module supported on the word
(a, a+1, ..., a+l-1).  A tableau T gives an ordered list of segments
(one per box that differs from the highest weight tableau), and the
character of the module induced from that list is a shuffle of segment
words.
"""
from __future__ import annotations

import enum
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .cartan import RootVector, partition_weight
from .crystal import generate_crystal
from .errors import DomainError, NoDescentError
from .qshuffle import (
    QChar,
    SerreResult,
    epsilon_i,
    serre_check,
    shuffle_all,
)
from .tableaux import (
    Tableau,
    conjugate,
    excess_partitions,
    highest_weight_tableau,
    lowest_descent,
    normalize_partition,
    tableau_weight,
    transpose_factorial,
)

# Above this many interleavings the induced character is not materialized.
INTERLEAVING_BUDGET = 20_000


class Segment(NamedTuple):
    a: int
    length: int

    @property
    def end(self) -> int:
        return self.a + self.length - 1


def check_segment(s: Segment, n: int | None = None) -> Segment:
    s = Segment(int(s[0]), int(s[1]))
    if s.a < 1 or s.length < 0:
        raise DomainError(f"invalid segment {tuple(s)}")
    if n is not None and s.length and s.end > n:
        raise DomainError(f"segment {tuple(s)} ends at {s.end} > n={n}")
    return s


def segment_word(s: Segment, n: int | None = None) -> tuple[int, ...]:
    s = check_segment(s, n)
    return tuple(range(s.a, s.a + s.length))


def segment_rootvec(segs: Iterable[Segment], n: int) -> RootVector:
    counts = [0] * n
    for s in segs:
        for x in segment_word(s, n):
            counts[x - 1] += 1
    return RootVector(tuple(counts))


def _clean(segs: Iterable[Segment], n: int | None) -> list[Segment]:
    return [check_segment(s, n) for s in segs if s[1] > 0]


# -- segment lists built from partitions -------------------------------------------

def row_segments(mu: Sequence[int], k: int, n: int | None = None) -> list[Segment]:
    """(k; mu_1), (k; mu_2), ... with zero parts dropped."""
    mu = normalize_partition(mu)
    if mu and n is not None and k + mu[0] - 1 > n:
        raise DomainError(f"segments of {mu} starting at {k} pass n={n}")
    return _clean((Segment(k, m) for m in mu), n)


def row_segments_reversed(mu: Sequence[int], k: int, n: int | None = None) -> list[Segment]:
    return row_segments(mu, k, n)[::-1]


def hook_segments(mu: Sequence[int], k: int, n: int | None = None) -> list[Segment]:
    """(k - mu_1 + 1; mu_1), (k - mu_2 + 1; mu_2), ...: every segment ends at k."""
    mu = normalize_partition(mu)
    if mu and k - mu[0] + 1 < 1:
        raise DomainError(f"segments of {mu} ending at {k} start below 1")
    return _clean((Segment(k - m + 1, m) for m in mu), n)


def hook_segments_reversed(mu: Sequence[int], k: int, n: int | None = None) -> list[Segment]:
    return hook_segments(mu, k, n)[::-1]


def tableau_segments(T: Tableau, n: int) -> list[Segment]:
    """Rows from the bottom up, each row's excess partition as row segments."""
    mus = excess_partitions(T, n)
    out: list[Segment] = []
    for k in range(len(mus), 0, -1):
        out.extend(row_segments(mus[k - 1], k, n))
    return out


def ml_tableau_segments(T) -> list[Segment]:
    """Same construction for a marginally large tableau (n rows)."""
    from .binfinity import ml_excess_partitions

    mus = ml_excess_partitions(T)
    out: list[Segment] = []
    for k in range(T.n, 0, -1):
        out.extend(row_segments(mus[k - 1], k, T.n))
    return out


def segments_to_json(segs: Sequence[Segment]) -> list[list[int]]:
    return [[s.a, s.length] for s in segs]


def parse_segments(text: str) -> list[Segment]:
    """Parse "a,l;a,l;..." into segments."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise DomainError(f"malformed segment {chunk!r}, expected 'a,l'")
        try:
            out.append(check_segment(Segment(int(parts[0]), int(parts[1]))))
        except ValueError as exc:
            raise DomainError(f"malformed segment {chunk!r}") from exc
    return out


# -- characters ----------------------------------------------------------------------

def induced_char(segs: Sequence[Segment], n: int, graded: bool = False) -> QChar:
    segs = _clean(segs, n)
    return shuffle_all((QChar.from_word(segment_word(s), n) for s in segs), n, graded)


def interleavings(segs: Sequence[Segment]) -> int:
    """Number of shuffles of the segment words (multinomial coefficient)."""
    lengths = [s.length for s in segs if s.length]
    out = math.factorial(sum(lengths))
    for length in lengths:
        out //= math.factorial(length)
    return out


def distinguished_word(mu: Sequence[int], k: int, n: int | None = None) -> tuple[int, ...]:
    """c_1 letters k, then c_2 letters k+1, ..., for the conjugate (c_1, c_2, ...)."""
    mu = normalize_partition(mu)
    if mu and n is not None and k + mu[0] - 1 > n:
        raise DomainError(f"distinguished word of {mu} at {k} passes n={n}")
    word: list[int] = []
    for t, c in enumerate(conjugate(mu)):
        word.extend([k + t] * c)
    return tuple(word)


def multiplicity_certificate(mu: Sequence[int], k: int, n: int) -> bool:
    """Coefficient of the distinguished word equals the transpose factorial."""
    ch = induced_char(row_segments(mu, k, n), n).at_one()
    return ch.get(distinguished_word(mu, k, n), 0) == transpose_factorial(mu)


class Linking(enum.Enum):
    DISJOINT = "Disjoint"
    NESTED = "Nested"
    NEITHER = "Neither"


def linking_case(s1: Segment, s2: Segment, n: int | None = None) -> Linking:
    """Classify a pair of segments by the two commuting conditions.

    Disjoint: s1 ends before s2 starts.  Nested: s2 lies inside s1 and
    starts no earlier.  For these cases both induction orders must give
    the same ungraded character, which is asserted.
    """
    s1, s2 = check_segment(s1, n), check_segment(s2, n)
    if s1.a + s1.length - 1 < s2.a:
        case = Linking.DISJOINT
    elif s2.a >= s1.a and s1.a + s1.length >= s2.a + s2.length:
        case = Linking.NESTED
    else:
        return Linking.NEITHER
    rank = max(n or 0, s1.end, s2.end, 1)
    assert induced_char([s1, s2], rank).at_one() == induced_char([s2, s1], rank).at_one()
    return case


# -- the descent step ----------------------------------------------------------------

@dataclass(frozen=True)
class MinSplit:
    mubar: tuple[tuple[int, ...], ...]
    mu_min: tuple[int, ...]
    i_T: int


def split_min_parts(T: Tableau, n: int) -> MinSplit:
    """Separate the parts attaining the lowest descent from the rest.

    A part m of the k-th excess partition attains it when m + k - 1 = i_T.
    The attaining parts, sorted, form ``mu_min``; the others stay in place
    (zeros included) as ``mubar``.
    """
    mus = excess_partitions(T, n)
    positive = [(m, k) for k, mu in enumerate(mus, start=1) for m in mu if m > 0]
    if not positive:
        raise NoDescentError("highest weight tableau has no descent")
    i_T = min(m + k - 1 for m, k in positive)
    mubar = tuple(tuple(m for m in mu if not (m > 0 and m + k - 1 == i_T))
                  for k, mu in enumerate(mus, start=1))
    attaining = [(m, k) for m, k in positive if m + k - 1 == i_T]
    for m, k in attaining:
        for m2, k2 in positive:
            if k2 < k:
                assert m2 + k2 >= m + k, "ordering condition on minimal parts fails"
    mu_min = tuple(sorted((m for m, _ in attaining), reverse=True))
    return MinSplit(mubar, mu_min, i_T)


def _mubar_segments(split: MinSplit, n: int) -> list[Segment]:
    out: list[Segment] = []
    for k in range(len(split.mubar), 0, -1):
        out.extend(row_segments_reversed(split.mubar[k - 1], k, n))
    return out


def rearranged_segments(T: Tableau, n: int, check: bool = True) -> list[Segment]:
    """Reversed rows of the non-minimal parts, then the reversed hook of mu_min."""
    split = split_min_parts(T, n)
    out = _mubar_segments(split, n) + hook_segments_reversed(split.mu_min, split.i_T, n)
    if check:
        original = tableau_segments(T, n)
        assert Counter(out) == Counter(original)
        if interleavings(original) <= INTERLEAVING_BUDGET:
            assert induced_char(out, n).at_one() == induced_char(original, n).at_one()
    return out


def rearranged_segments_plus(T: Tableau, n: int) -> list[Segment]:
    """As rearranged_segments, with every minimal part shortened by one."""
    split = split_min_parts(T, n)
    shorter = tuple(m - 1 for m in split.mu_min)
    return _mubar_segments(split, n) + hook_segments_reversed(shorter, split.i_T - 1, n)


# -- the shuffle automaton -----------------------------------------------------------

class SegmentShuffle:
    """Ungraded shuffle of segment words as a weighted automaton.

    A state records, for each distinct segment, how many copies have read
    0, 1, ..., l letters.  Reading a letter x advances one copy whose next
    letter is x; the weight is the number of such copies.  The coefficient
    of a word in the induced character is the total weight of its paths.
    """

    def __init__(self, segs: Sequence[Segment], n: int):
        segs = _clean(segs, n)
        counts = Counter(segs)
        self.n = n
        self.types = sorted(counts)
        self.start = tuple((counts[t],) + (0,) * t.length for t in self.types)
        self.final = tuple((0,) * t.length + (counts[t],) for t in self.types)
        self.letters = sorted({x for t in self.types for x in segment_word(t)})

    def step(self, state, x: int) -> list[tuple[tuple, int]]:
        out = []
        for idx, t in enumerate(self.types):
            p = x - t.a
            if 0 <= p < t.length and state[idx][p]:
                c = state[idx][p]
                row = list(state[idx])
                row[p] -= 1
                row[p + 1] += 1
                out.append((state[:idx] + (tuple(row),) + state[idx + 1:], c))
        return out

    def back_step(self, state, x: int) -> list[tuple[tuple, int]]:
        out = []
        for idx, t in enumerate(self.types):
            p = x - t.a + 1
            if 1 <= p <= t.length and state[idx][p]:
                c = state[idx][p]
                row = list(state[idx])
                row[p] -= 1
                row[p - 1] += 1
                out.append((state[:idx] + (tuple(row),) + state[idx + 1:], c))
        return out

    def _read(self, dist: dict, word: Sequence[int]) -> dict:
        for x in word:
            nxt: dict = {}
            for s, w in dist.items():
                for s2, c in self.step(s, x):
                    nxt[s2] = nxt.get(s2, 0) + w * c
            dist = nxt
        return dist

    def coefficient(self, word: Sequence[int]) -> int:
        return self._read({self.start: 1}, word).get(self.final, 0)

    def states(self) -> list[tuple]:
        seen = {self.start}
        frontier = [self.start]
        while frontier:
            nxt = []
            for s in frontier:
                for x in self.letters:
                    for s2, _ in self.step(s, x):
                        if s2 not in seen:
                            seen.add(s2)
                            nxt.append(s2)
            frontier = nxt
        return sorted(seen)

    def epsilon(self, i: int) -> int:
        """Longest run of trailing letters i over words in the support."""
        if not self.types:
            return 0
        layer = {self.final}
        k = 0
        while True:
            nxt = {s2 for s in layer for s2, _ in self.back_step(s, i)}
            if not nxt:
                return k
            layer = nxt
            k += 1

    def to_counts(self) -> dict[tuple[int, ...], int]:
        layer: dict = {self.start: {(): 1}}
        for _ in range(sum(t.length * row[0] for t, row in zip(self.types, self.start))):
            nxt: dict = {}
            for s, words in layer.items():
                for x in self.letters:
                    for s2, c in self.step(s, x):
                        bucket = nxt.setdefault(s2, {})
                        for w, v in words.items():
                            key = w + (x,)
                            bucket[key] = bucket.get(key, 0) + v * c
            layer = nxt
        return dict(layer.get(self.final, {(): 1} if not self.types else {}))

    def serre_certificate(self) -> SerreResult:
        """Sufficient proof of the q=1 Serre relations for the full character.

        Write M_x for the transition operator of letter x.  The relations
        hold in every context as soon as M_x M_y = M_y M_x for distant
        letters and [M_x, [M_x, M_y]] = 0 for adjacent ones.  Copies of
        different segments act on different tensor factors, so M_x is a
        sum of commuting pieces and both brackets split into one bracket
        per distinct segment.  Each distinct segment is checked on its
        own state space, state by state.
        """
        for t, row in zip(self.types, self.start):
            piece = SegmentShuffle([t] * row[0], self.n)
            result = piece._local_serre()
            if not result:
                return result
        return SerreResult(True)

    def _local_serre(self) -> SerreResult:
        letters = self.letters
        for s in self.states():
            start = {s: 1}
            for x in letters:
                for y in letters:
                    if y - x > 1:
                        if self._read(start, (x, y)) != self._read(start, (y, x)):
                            return SerreResult(False, f"state {s}: {x},{y} do not commute")
                    if abs(x - y) == 1:
                        mid = self._read(start, (x, y, x))
                        left = self._read(start, (y, x, x))
                        right = self._read(start, (x, x, y))
                        for t in set(mid) | set(left) | set(right):
                            if 2 * mid.get(t, 0) != left.get(t, 0) + right.get(t, 0):
                                return SerreResult(False, f"state {s}: relation for "
                                                          f"i={x}, j={y} fails locally")
        return SerreResult(True)


# -- verification of the tableau-to-module correspondence ----------------------------

def _check_tableau(args) -> dict:
    T, shape, n, budget = args
    lam = partition_weight(shape, n)
    segs = tableau_segments(T, n)
    record: dict = {"tableau": T.key(), "segments": segments_to_json(segs)}
    failures: list[str] = []
    small = interleavings(segs) <= budget
    record["route"] = "materialized" if small else "automaton"
    ch = induced_char(segs, n) if small else None
    auto = None if small else SegmentShuffle(segs, n)

    serre = serre_check(ch) if small else auto.serre_certificate()
    if not serre:
        failures.append(f"serre: {serre.witness}")

    rootvec = segment_rootvec(segs, n)
    if ch is not None and ch.rootvec != rootvec:
        failures.append("weight: character weight differs from segment weight")
    if rootvec.to_weight() != lam - tableau_weight(T, n):
        failures.append("weight: lambda - wt(T) differs from the segment weight")

    if T != highest_weight_tableau(shape):
        i_T, eps, T_plus = lowest_descent(T, n)
        record.update(i_T=i_T, epsilon=eps)
        got = epsilon_i(ch, i_T) if small else auto.epsilon(i_T)
        if got != eps:
            failures.append(f"epsilon: character gives {got}, tableau gives {eps}")
        split = split_min_parts(T, n)
        rearranged_segments(T, n)
        expected = Counter(_mubar_segments(split, n)
                           + hook_segments(tuple(m - 1 for m in split.mu_min),
                                           split.i_T - 1, n))
        if Counter(tableau_segments(T_plus, n)) != expected:
            failures.append("segments: T_plus segments differ from the shortened split")
    record["failures"] = failures
    return record


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("KLR_THREADS", "1")))
    except ValueError:
        return 1


def verify_tableau_modules(shape: Sequence[int], n: int,
                           tableaux: Iterable[Tableau] | None = None,
                           budget: int = INTERLEAVING_BUDGET) -> dict:
    """Run the character and certificate checks on every tableau of the shape.

    Checks per tableau: the Serre relations for the induced character,
    epsilon at the lowest descent, the segment bookkeeping between T and
    its raised tableau T_plus, and the weight.  Failures are collected,
    never raised.
    """
    shape = normalize_partition(shape)
    if len(shape) > n + 1:
        raise DomainError(f"shape {shape} has more than {n + 1} rows")
    if tableaux is None:
        tableaux = generate_crystal(shape, n).vertices
    jobs = [(T, shape, n, budget) for T in tableaux]
    workers = _workers()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_check_tableau, jobs, chunksize=16))
    else:
        records = [_check_tableau(job) for job in jobs]
    records.sort(key=lambda r: r["tableau"])
    failed = [r for r in records if r["failures"]]
    return {
        "shape": list(shape),
        "n": n,
        "tableaux": len(records),
        "passed": len(records) - len(failed),
        "ok": not failed,
        "failures": [{"tableau": r["tableau"], "problems": r["failures"]} for r in failed],
        "records": records,
    }

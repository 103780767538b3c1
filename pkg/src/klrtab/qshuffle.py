"""q-characters of KLR modules and the quantum shuffle product.

A q-character is a finite map from words over 1..n to Laurent
polynomials in q.  Induction of modules corresponds to the shuffle
product; in the graded version, each time a letter j of the right factor
ends up to the left of a letter i of the left factor the term picks up
q^{-(alpha_i|alpha_j)}.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .cartan import RootVector, bilinear, cartan_entry, weight_of_word
from .errors import DomainError

Word = tuple[int, ...]


class LaurentPoly:
    """Sparse integer Laurent polynomial in q; no zero coefficients are stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> LaurentPoly:
        return cls({exp: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def at_one(self) -> int:
        return sum(self._terms.values())

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPoly:
        return cls({int(e): c for e, c in data.items()})

    def __repr__(self):
        return f"LaurentPoly({self.to_json()})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts)


def q_integer(k: int) -> LaurentPoly:
    """Balanced quantum integer q^{k-1} + q^{k-3} + ... + q^{1-k}."""
    return LaurentPoly({k - 1 - 2 * t: 1 for t in range(k)})


def q_factorial(k: int) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for t in range(1, k + 1):
        out = out * q_integer(t)
    return out


ONE = LaurentPoly.const(1)


@dataclass
class QChar:
    """Word -> Laurent polynomial, all words of weight ``rootvec``."""

    rootvec: RootVector
    terms: dict[Word, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(w): c for w, c in self.terms.items() if c}
        for w in self.terms:
            if weight_of_word(w, self.rootvec.n) != self.rootvec:
                raise DomainError(f"word {w} does not have weight {self.rootvec.coeffs}")

    @property
    def n(self) -> int:
        return self.rootvec.n

    @classmethod
    def zero(cls, rootvec: RootVector) -> QChar:
        return cls(rootvec, {})

    @classmethod
    def unit(cls, n: int) -> QChar:
        """Character of the trivial module: the empty word."""
        return cls(RootVector.zero(n), {(): ONE})

    @classmethod
    def from_word(cls, word: Sequence[int], n: int, coeff: LaurentPoly = ONE) -> QChar:
        return cls(weight_of_word(word, n), {tuple(word): coeff})

    @classmethod
    def from_counts(cls, counts: Mapping[Sequence[int], int], n: int) -> QChar:
        items = {tuple(w): LaurentPoly.const(c) for w, c in counts.items()}
        if not items:
            raise DomainError("from_counts needs at least one word")
        return cls(weight_of_word(next(iter(items)), n), items)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, QChar) and self.rootvec == other.rootvec
                and self.terms == other.terms)

    def coefficient(self, word: Sequence[int]) -> LaurentPoly:
        return self.terms.get(tuple(word), LaurentPoly())

    def __add__(self, other: QChar) -> QChar:
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.rootvec != other.rootvec:
            raise DomainError("cannot add characters of different weights")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return QChar(self.rootvec, out)

    def scale(self, c: LaurentPoly | int) -> QChar:
        if isinstance(c, int):
            c = LaurentPoly.const(c)
        return QChar(self.rootvec, {w: v * c for w, v in self.terms.items()})

    def shift(self, k: int) -> QChar:
        return QChar(self.rootvec, {w: v.shift(k) for w, v in self.terms.items()})

    def at_one(self) -> dict[Word, int]:
        """Ungraded character; words whose coefficient vanishes at q=1 are dropped."""
        out = {}
        for w, c in self.terms.items():
            v = c.at_one()
            if v:
                out[w] = v
        return out

    def ungraded(self) -> QChar:
        return QChar(self.rootvec, {w: LaurentPoly.const(v) for w, v in self.at_one().items()})

    def normalized(self) -> QChar:
        """Shift so the lowest q-power occurring anywhere is 0."""
        if not self.terms:
            return self
        low = min(c.min_degree() for c in self.terms.values())
        return self.shift(-low)

    def sorted_terms(self) -> list[tuple[Word, LaurentPoly]]:
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        return {
            "alpha": list(self.rootvec.coeffs),
            "terms": [{"word": list(w), "coeff": c.to_json()} for w, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data) -> QChar:
        if isinstance(data, str):
            data = json.loads(data)
        rootvec = RootVector(tuple(data["alpha"]))
        return cls(rootvec, {tuple(t["word"]): LaurentPoly.from_json(t["coeff"])
                             for t in data["terms"]})

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for w, c in self.sorted_terms():
            word = "(" + ",".join(map(str, w)) + ")"
            if c == ONE:
                lines.append(word)
            elif len(c.terms) == 1:
                lines.append(f"{c} * {word}")
            else:
                lines.append(f"({c}) * {word}")
        return "\n".join(lines)


# -- products ---------------------------------------------------------------------

def concat(A: QChar, B: QChar) -> QChar:
    if A.n != B.n:
        raise DomainError("rank mismatch")
    out: dict[Word, LaurentPoly] = {}
    for u, a in A.terms.items():
        for v, b in B.terms.items():
            w = u + v
            c = a * b
            out[w] = out[w] + c if w in out else c
    return QChar(A.rootvec + B.rootvec, out)


def _pairing_with_prefix(letter: int, prefix_counts: Sequence[int]) -> int:
    """(alpha_letter | weight of a word with the given letter counts)."""
    total = 0
    for j in (letter - 1, letter, letter + 1):
        if 1 <= j <= len(prefix_counts):
            total += cartan_entry(letter, j) * prefix_counts[j - 1]
    return total


def shuffle_words(u: Word, v: Word, n: int, graded: bool = True) -> dict[Word, LaurentPoly]:
    """All interleavings of u and v with their (graded) multiplicities.

    Built by appending letters: if the last letter comes from u, every
    letter of v already lies to its left and contributes its crossing.
    """
    layer: dict[int, dict[Word, LaurentPoly]] = {0: {(): ONE}}
    # v_counts[b] = letter counts of v[:b]
    v_counts = [[0] * n]
    for x in v:
        nxt = list(v_counts[-1])
        nxt[x - 1] += 1
        v_counts.append(nxt)
    for total in range(1, len(u) + len(v) + 1):
        new_layer: dict[int, dict[Word, LaurentPoly]] = {}
        for a in range(max(0, total - len(v)), min(len(u), total) + 1):
            b = total - a
            acc: dict[Word, LaurentPoly] = {}
            if a > 0 and a - 1 in layer:
                letter = u[a - 1]
                exp = -_pairing_with_prefix(letter, v_counts[b]) if graded else 0
                for w, c in layer[a - 1].items():
                    key = w + (letter,)
                    c = c.shift(exp) if exp else c
                    acc[key] = acc[key] + c if key in acc else c
            if b > 0 and a in layer:
                letter = v[b - 1]
                for w, c in layer[a].items():
                    key = w + (letter,)
                    acc[key] = acc[key] + c if key in acc else c
            new_layer[a] = acc
        layer = new_layer
    return layer.get(len(u), {(): ONE})


def shuffle(A: QChar, B: QChar, graded: bool = False) -> QChar:
    if A.n != B.n:
        raise DomainError("rank mismatch")
    out: dict[Word, LaurentPoly] = {}
    for u, a in A.terms.items():
        for v, b in B.terms.items():
            ab = a * b
            for w, c in shuffle_words(u, v, A.n, graded).items():
                c = c * ab
                out[w] = out[w] + c if w in out else c
    return QChar(A.rootvec + B.rootvec, out)


def shuffle_all(chars: Iterable[QChar], n: int, graded: bool = False) -> QChar:
    """Left-fold shuffle; the empty product is the empty-word character."""
    out = QChar.unit(n)
    for c in chars:
        out = shuffle(out, c, graded)
    return out


# -- Serre relations ----------------------------------------------------------------

@dataclass(frozen=True)
class SerreResult:
    ok: bool
    witness: str | None = None

    def __bool__(self):
        return self.ok


def serre_check(A: QChar | Mapping[Word, int]) -> SerreResult:
    """Check the q=1 Serre relations on every context of every support word.

    Distant letters must commute: c(..ij..) = c(..ji..).  Adjacent letters
    must satisfy 2 c(..iji..) = c(..jii..) + c(..iij..).  Any triple of
    words involved in a relation with a nonzero member has one of them in
    the support, so scanning the support is exhaustive.
    """
    coeffs = A.at_one() if isinstance(A, QChar) else dict(A)
    coeffs = {w: c for w, c in coeffs.items() if c}
    get = coeffs.get
    for w in sorted(coeffs):
        for p in range(len(w) - 1):
            x, y = w[p], w[p + 1]
            if abs(x - y) > 1:
                swapped = w[:p] + (y, x) + w[p + 2:]
                if get(w, 0) != get(swapped, 0):
                    return SerreResult(False, f"c{w}={get(w, 0)} but c{swapped}={get(swapped, 0)}")
            if p + 2 < len(w):
                window = w[p:p + 3]
                letters = sorted(set(window))
                if len(letters) != 2 or letters[1] - letters[0] != 1:
                    continue
                i = max(letters, key=window.count)
                j = min(letters, key=window.count)
                pre, post = w[:p], w[p + 3:]
                mid = get(pre + (i, j, i) + post, 0)
                left = get(pre + (j, i, i) + post, 0)
                right = get(pre + (i, i, j) + post, 0)
                if 2 * mid != left + right:
                    return SerreResult(False, f"context {pre}|{post}, i={i}, j={j}: "
                                              f"2*{mid} != {left} + {right}")
    return SerreResult(True)


# -- restriction functors -----------------------------------------------------------

def epsilon_i(A: QChar, i: int) -> int:
    """Largest k such that a word ending in k letters i has nonzero coefficient."""
    if not A.terms:
        raise DomainError("epsilon of the zero character is undefined")
    best = 0
    for w in A.terms:
        k = 0
        while k < len(w) and w[-1 - k] == i:
            k += 1
        best = max(best, k)
    return best


def e_i(A: QChar, i: int) -> QChar:
    """Keep the words ending in i and strip that letter."""
    out = {w[:-1]: c for w, c in A.terms.items() if w and w[-1] == i}
    return QChar(A.rootvec - RootVector.simple(i, A.n), out)


def e_i_power(A: QChar, i: int, k: int) -> QChar:
    for _ in range(k):
        A = e_i(A, i)
    return A


def nilhecke_char(i: int, m: int, n: int) -> QChar:
    """Character of the unique simple module over the nilHecke algebra on i^m.

    The coefficient is the q^2-Poincare polynomial of the symmetric group,
    normalized so the lowest power is q^0; its value at q=1 is m!.
    """
    if not 1 <= i <= n:
        raise DomainError(f"letter {i} out of range 1..{n}")
    if m < 0:
        raise DomainError("m must be nonnegative")
    coeff = ONE
    for k in range(1, m + 1):
        coeff = coeff * LaurentPoly({2 * t: 1 for t in range(k)})
    assert coeff.at_one() == math.factorial(m)
    return QChar.from_word((i,) * m, n, coeff)


def ei_exactness_check(A: QChar, B: QChar, i: int, graded: bool = False) -> bool:
    """e_i(A * B) against its two-term decomposition.

    Ungraded: e_i(A*B) = A*e_i(B) + e_i(A)*B.  Graded, the second term
    carries q^{-(alpha_i|wt B)}.
    """
    lhs = e_i(shuffle(A, B, graded), i)
    t1 = shuffle(A, e_i(B, i), graded)
    t2 = shuffle(e_i(A, i), B, graded)
    if graded:
        t2 = t2.shift(-bilinear(RootVector.simple(i, A.n), B.rootvec))
        return (t1 + t2).terms == lhs.terms
    return (t1 + t2).at_one() == lhs.at_one()

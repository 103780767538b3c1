"""Crystals of type A_n: boxes, tensor words, tableaux and crystal graphs.

Tensor words follow the convention that the first letter is the first
tensor factor.  Kashiwara operators on words are computed with the
signature rule: letters i get a ``+``, letters i+1 a ``-``, and every
``+`` is cancelled against the nearest uncancelled ``-`` to its right.
``e_i`` acts on the rightmost surviving ``-``; ``f_i`` on the leftmost
surviving ``+``.

The recursive two-factor tensor rule is kept as an independent oracle
(:class:`TensorElement`).
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Protocol, Sequence

from .cartan import Weight
from .errors import DomainError
from .tableaux import (
    READINGS,
    Tableau,
    highest_weight_tableau,
    normalize_partition,
    tableau_weight,
    validate_ssyt,
)

NEG_INF = -math.inf


class CrystalElement(Protocol):
    def weight(self) -> Weight: ...
    def epsilon(self, i: int) -> float: ...
    def phi(self, i: int) -> float: ...
    def e(self, i: int) -> CrystalElement | None: ...
    def f(self, i: int) -> CrystalElement | None: ...


# -- the vector representation -------------------------------------------------

def box_ops(entry: int, i: int):
    """(e_i b, f_i b, eps_i b, phi_i b) for the box b holding ``entry``.

    ``None`` stands for the zero element.
    """
    e = i if entry == i + 1 else None
    f = i + 1 if entry == i else None
    return e, f, int(entry == i + 1), int(entry == i)


@dataclass(frozen=True)
class BoxElement:
    entry: int
    n: int

    def __post_init__(self):
        if not 1 <= self.entry <= self.n + 1:
            raise DomainError(f"box entry {self.entry} out of range 1..{self.n + 1}")

    def weight(self) -> Weight:
        return Weight(tuple(int(self.entry == i) - int(self.entry == i + 1)
                            for i in range(1, self.n + 1)))

    def epsilon(self, i):
        return box_ops(self.entry, i)[2]

    def phi(self, i):
        return box_ops(self.entry, i)[3]

    def e(self, i):
        new = box_ops(self.entry, i)[0]
        return None if new is None else BoxElement(new, self.n)

    def f(self, i):
        new = box_ops(self.entry, i)[1]
        return None if new is None else BoxElement(new, self.n)


@dataclass(frozen=True)
class TElement:
    """The one-element crystal of weight ``wt`` with eps = phi = -inf."""

    wt: Weight

    def weight(self):
        return self.wt

    def epsilon(self, i):
        return NEG_INF

    def phi(self, i):
        return NEG_INF

    def e(self, i):
        return None

    def f(self, i):
        return None


@dataclass(frozen=True)
class CElement:
    """The one-element crystal of weight 0 with eps = phi = 0."""

    n: int

    def weight(self):
        return Weight.zero(self.n)

    def epsilon(self, i):
        return 0

    def phi(self, i):
        return 0

    def e(self, i):
        return None

    def f(self, i):
        return None


@dataclass(frozen=True)
class TensorElement:
    """b_1 (x) b_2 (x) ... evaluated with the two-factor tensor rule.

    The product is bracketed as b_1 (x) (b_2 (x) (...)); the result does
    not depend on the bracketing.
    """

    factors: tuple

    def _split(self):
        head = self.factors[0]
        tail = self.factors[1:]
        rest = tail[0] if len(tail) == 1 else TensorElement(tail)
        return head, rest

    def weight(self):
        wt = self.factors[0].weight()
        for b in self.factors[1:]:
            wt = wt + b.weight()
        return wt

    def epsilon(self, i):
        if len(self.factors) == 1:
            return self.factors[0].epsilon(i)
        b1, b2 = self._split()
        return max(b1.epsilon(i), b2.epsilon(i) - b1.weight().pair(i))

    def phi(self, i):
        if len(self.factors) == 1:
            return self.factors[0].phi(i)
        b1, b2 = self._split()
        return max(b2.phi(i), b1.phi(i) + b2.weight().pair(i))

    def _rebuild(self, head, rest):
        if head is None or rest is None:
            return None
        tail = rest.factors if isinstance(rest, TensorElement) and len(self.factors) > 2 \
            else (rest,)
        return TensorElement((head,) + tuple(tail))

    def e(self, i):
        if len(self.factors) == 1:
            new = self.factors[0].e(i)
            return None if new is None else TensorElement((new,))
        b1, b2 = self._split()
        if b1.phi(i) >= b2.epsilon(i):
            return self._rebuild(b1.e(i), b2)
        return self._rebuild(b1, b2.e(i))

    def f(self, i):
        if len(self.factors) == 1:
            new = self.factors[0].f(i)
            return None if new is None else TensorElement((new,))
        b1, b2 = self._split()
        if b1.phi(i) > b2.epsilon(i):
            return self._rebuild(b1.f(i), b2)
        return self._rebuild(b1, b2.f(i))


# -- signature rule on words ----------------------------------------------------

def signature(word: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Positions of the uncancelled ``-`` and ``+`` signs, left to right."""
    minus: list[int] = []
    plus: list[int] = []
    for pos, letter in enumerate(word):
        if letter == i:
            plus.append(pos)
        elif letter == i + 1:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
    return minus, plus


def tensor_e(word: Sequence[int], i: int) -> tuple[int, ...] | None:
    minus, _ = signature(word, i)
    if not minus:
        return None
    pos = minus[-1]
    return tuple(word[:pos]) + (i,) + tuple(word[pos + 1:])


def tensor_f(word: Sequence[int], i: int) -> tuple[int, ...] | None:
    _, plus = signature(word, i)
    if not plus:
        return None
    pos = plus[0]
    return tuple(word[:pos]) + (i + 1,) + tuple(word[pos + 1:])


def word_epsilon(word: Sequence[int], i: int) -> int:
    return len(signature(word, i)[0])


def word_phi(word: Sequence[int], i: int) -> int:
    return len(signature(word, i)[1])


def tensor_rule_e(word: Sequence[int], i: int, n: int) -> tuple[int, ...] | None:
    """e_i on a word via the recursive two-factor rule (oracle)."""
    if not word:
        return None
    out = TensorElement(tuple(BoxElement(x, n) for x in word)).e(i)
    return None if out is None else tuple(b.entry for b in out.factors)


def tensor_rule_f(word: Sequence[int], i: int, n: int) -> tuple[int, ...] | None:
    if not word:
        return None
    out = TensorElement(tuple(BoxElement(x, n) for x in word)).f(i)
    return None if out is None else tuple(b.entry for b in out.factors)


# -- tableau crystals -----------------------------------------------------------

def reading_op(T: Tableau, i: int, raising: bool, reading: str) -> Tableau | None:
    """e_i (``raising``) or f_i on T through a single reading word."""
    positions = READINGS[reading](T)
    word = [T.entry(r, c) for r, c in positions]
    minus, plus = signature(word, i)
    if raising:
        if not minus:
            return None
        r, c = positions[minus[-1]]
        return T.replace_entry(r, c, i)
    if not plus:
        return None
    r, c = positions[plus[0]]
    return T.replace_entry(r, c, i + 1)


def _tableau_op(T: Tableau, i: int, raising: bool, reading: str) -> Tableau | None:
    out = reading_op(T, i, raising, reading)
    other = "far" if reading == "middle" else "middle"
    assert reading_op(T, i, raising, other) == out, \
        f"readings disagree on {'e' if raising else 'f'}_{i} at {T.key()}"
    if out is not None:
        top = max(max(row) for row in out.rows)
        assert validate_ssyt(out, max(top - 1, i)), \
            f"operator left the tableau crystal:\n{out}"
    return out


def tableau_e(T: Tableau, i: int, reading: str = "middle") -> Tableau | None:
    return _tableau_op(T, i, True, reading)


def tableau_f(T: Tableau, i: int, reading: str = "middle") -> Tableau | None:
    return _tableau_op(T, i, False, reading)


def tableau_epsilon(T: Tableau, i: int, reading: str = "middle") -> int:
    positions = READINGS[reading](T)
    return word_epsilon([T.entry(r, c) for r, c in positions], i)


def tableau_phi(T: Tableau, i: int, reading: str = "middle") -> int:
    positions = READINGS[reading](T)
    return word_phi([T.entry(r, c) for r, c in positions], i)


@dataclass(frozen=True)
class TableauElement:
    """Adapter giving a tableau the crystal-element interface."""

    tableau: Tableau
    n: int
    reading: str = "middle"

    def weight(self):
        return tableau_weight(self.tableau, self.n)

    def epsilon(self, i):
        return tableau_epsilon(self.tableau, i, self.reading)

    def phi(self, i):
        return tableau_phi(self.tableau, i, self.reading)

    def e(self, i):
        out = tableau_e(self.tableau, i, self.reading)
        return None if out is None else TableauElement(out, self.n, self.reading)

    def f(self, i):
        out = tableau_f(self.tableau, i, self.reading)
        return None if out is None else TableauElement(out, self.n, self.reading)


# -- crystal graphs -------------------------------------------------------------

@dataclass
class CrystalGraph:
    n: int
    vertices: list[Tableau]
    weights: list[Weight]
    edges: list[tuple[int, int, int]]
    source: int = 0
    _out: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._out = {(s, i): t for s, i, t in self.edges}

    def __len__(self):
        return len(self.vertices)

    def successor(self, v: int, i: int) -> int | None:
        return self._out.get((v, i))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "source": self.source,
            "vertices": [{"tableau": T.to_json(), "weight": list(w.coeffs)}
                         for T, w in zip(self.vertices, self.weights)],
            "edges": [list(e) for e in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for k, (T, w) in enumerate(zip(self.vertices, self.weights)):
            label = f"{T.key()}\\nwt=({','.join(map(str, w.coeffs))})"
            lines.append(f'  v{k} [label="{label}"];')
        for s, i, t in self.edges:
            lines.append(f'  v{s} -> v{t} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def dumps(self, fmt: str = "json") -> str:
        if fmt == "dot":
            return self.to_dot()
        return json.dumps(self.to_json(), indent=1) + "\n"


def generate_crystal(hw, n: int, reading: str = "middle") -> CrystalGraph:
    """Closure of the highest weight tableau under the f_i.

    ``hw`` is either a highest weight tableau or a partition.  Vertices
    are numbered level by level; inside a level by serialization.
    """
    if isinstance(hw, Tableau):
        T0 = hw
    else:
        T0 = highest_weight_tableau(normalize_partition(hw))
    if len(T0.rows) > n + 1:
        raise DomainError(f"shape {T0.shape} has more than {n + 1} rows")
    if any(tableau_e(T0, i, reading) is not None for i in range(1, n + 1)):
        raise DomainError("generate_crystal needs a highest weight tableau")
    index = {T0: 0}
    vertices = [T0]
    edges = []
    level = [T0]
    while level:
        found = {}
        pending = []
        for T in level:
            for i in range(1, n + 1):
                S = tableau_f(T, i, reading)
                if S is None:
                    continue
                if S not in index and S not in found:
                    found[S] = None
                pending.append((T, i, S))
        nxt = sorted(found, key=Tableau.key)
        for S in nxt:
            index[S] = len(vertices)
            vertices.append(S)
        edges.extend((index[T], i, index[S]) for T, i, S in pending)
        level = nxt
    weights = [tableau_weight(T, n) for T in vertices]
    return CrystalGraph(n=n, vertices=vertices, weights=weights, edges=edges)


def crystal_isomorphic(G1: CrystalGraph, G2: CrystalGraph) -> bool:
    """Label- and weight-preserving isomorphism matching the sources.

    Both graphs are connected from their source, so such a map is unique
    if it exists; it is built by walking the two graphs in parallel.
    """
    if len(G1) != len(G2) or G1.n != G2.n or len(G1.edges) != len(G2.edges):
        return False
    mapping = {G1.source: G2.source}
    queue = deque([G1.source])
    while queue:
        v = queue.popleft()
        w = mapping[v]
        if G1.weights[v] != G2.weights[w]:
            return False
        for i in range(1, G1.n + 1):
            a, b = G1.successor(v, i), G2.successor(w, i)
            if (a is None) != (b is None):
                return False
            if a is None:
                continue
            if a in mapping:
                if mapping[a] != b:
                    return False
            else:
                mapping[a] = b
                queue.append(a)
    return len(mapping) == len(G1) and len(set(mapping.values())) == len(G2)


def check_crystal_axioms(G: CrystalGraph, reading: str = "middle") -> list[str]:
    """Problems found among the crystal axioms on every vertex (empty if none)."""
    from .cartan import RootVector

    problems = []
    n = G.n
    incoming = set()
    for k, T in enumerate(G.vertices):
        wt = G.weights[k]
        for i in range(1, n + 1):
            alpha = RootVector.simple(i, n).to_weight()
            up = tableau_e(T, i, reading)
            down = tableau_f(T, i, reading)
            if up is not None and tableau_f(up, i, reading) != T:
                problems.append(f"f_{i} e_{i} != id at {T.key()}")
            if down is not None:
                incoming.add(G.vertices.index(down) if down in G.vertices else -1)
                if tableau_e(down, i, reading) != T:
                    problems.append(f"e_{i} f_{i} != id at {T.key()}")
                if tableau_weight(down, n) != wt - alpha:
                    problems.append(f"wt(f_{i} b) != wt(b) - alpha_{i} at {T.key()}")
            k_max, S = 0, T
            while (S := tableau_e(S, i, reading)) is not None:
                k_max += 1
            eps = tableau_epsilon(T, i, reading)
            if eps != k_max:
                problems.append(f"eps_{i} != max e-string at {T.key()}")
            if tableau_phi(T, i, reading) != eps + wt.pair(i):
                problems.append(f"phi_{i} != eps_{i} + <h_{i}, wt> at {T.key()}")
    sources = [k for k in range(len(G)) if k not in incoming]
    if sources != [G.source]:
        problems.append(f"expected a unique source {G.source}, found {sources}")
    return problems

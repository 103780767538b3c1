"""B(infinity) realized by marginally large tableaux.

A marginally large tableau has n rows; row i starts with a run of i's
that is exactly one box longer than row i+1, followed by finitely many
larger entries.  Only those larger entries are stored (``excess``); the
length of each i-run is recomputed from the rows below.  Because rows
are left-justified and row i+1 sits entirely under the i-run of row i,
columns are automatically strict.

The left-infinite extension adds copies of the column 1, 2, ..., n.  For
i < n such a column contributes a cancelling ``+ -`` pair to the
i-signature; for i = n it contributes a single ``+``.  One sentinel
column after the finite reading is therefore enough to compute every
signature.
"""
from __future__ import annotations

import bisect
import json
from dataclasses import dataclass
from typing import Sequence

from .cartan import RootVector, Weight, partition_weight
from .crystal import signature, tableau_e, tableau_epsilon, tableau_f, tableau_phi
from .errors import DomainError
from .tableaux import Tableau, excess_partitions, far_eastern_positions, validate_ssyt


@dataclass(frozen=True)
class MLTableau:
    n: int
    excess: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        excess = tuple(tuple(int(x) for x in row) for row in self.excess)
        object.__setattr__(self, "excess", excess)
        if self.n < 1:
            raise DomainError(f"rank must be positive, got {self.n}")
        if len(excess) != self.n:
            raise DomainError(f"need {self.n} excess rows, got {len(excess)}")
        for i, row in enumerate(excess, start=1):
            if any(x <= i or x > self.n + 1 for x in row):
                raise DomainError(f"row {i} excess {row} must lie in {i + 1}..{self.n + 1}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise DomainError(f"row {i} excess {row} is not weakly increasing")

    @classmethod
    def highest(cls, n: int) -> MLTableau:
        """The highest weight element (all excess rows empty)."""
        return cls(n, ((),) * n)

    # -- explicit rows ------------------------------------------------------

    def prefix_counts(self) -> tuple[int, ...]:
        """Number of i's in row i, for i = 1..n."""
        counts = [0] * self.n
        below = 0
        for i in range(self.n, 0, -1):
            counts[i - 1] = below + 1
            below = counts[i - 1] + len(self.excess[i - 1])
        return tuple(counts)

    def rows(self) -> list[tuple[int, ...]]:
        """The finite marginally large tableau, row by row."""
        return [(i,) * c + self.excess[i - 1]
                for i, c in enumerate(self.prefix_counts(), start=1)]

    def to_tableau(self) -> Tableau:
        return Tableau(tuple(self.rows()))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int) -> MLTableau:
        """Parse an explicit finite marginally large tableau."""
        rows = [tuple(r) for r in rows]
        if len(rows) != n:
            raise DomainError(f"a marginally large tableau has {n} rows, got {len(rows)}")
        T = Tableau(tuple(rows))
        if not validate_ssyt(T, n):
            raise DomainError("rows do not form a semistandard tableau")
        excess = []
        for i, row in enumerate(rows, start=1):
            below = len(rows[i]) if i < n else 0
            if row.count(i) != below + 1:
                raise DomainError(f"row {i} has {row.count(i)} entries {i}, "
                                  f"expected {below + 1}")
            excess.append(tuple(x for x in row if x > i))
        return cls(n, tuple(excess))

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "excess": [list(r) for r in self.excess]}

    @classmethod
    def from_json(cls, data) -> MLTableau:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple(tuple(r) for r in data["excess"]))

    def key(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.excess)

    # -- crystal structure --------------------------------------------------

    def _reading(self, i: int):
        """(row, entry) pairs of the Far-Eastern reading plus a sentinel column."""
        T = self.to_tableau()
        cells = [(r, T.entry(r, c)) for r, c in far_eastern_positions(T)]
        cells.extend((r, r) for r in range(1, self.n + 1))
        return cells

    def _signature(self, i: int):
        cells = self._reading(i)
        minus, plus = signature([x for _, x in cells], i)
        return cells, minus, plus

    def f(self, i: int) -> MLTableau:
        _check_index(i, self.n)
        cells, _, plus = self._signature(i)
        row, entry = cells[plus[0]]
        assert entry == i and row <= i
        excess = [list(r) for r in self.excess]
        target = excess[row - 1]
        if row < i:
            target.remove(i)
        bisect.insort(target, i + 1)
        out = MLTableau(self.n, tuple(map(tuple, excess)))
        _assert_marginally_large(out)
        return out

    def e(self, i: int) -> MLTableau | None:
        _check_index(i, self.n)
        cells, minus, _ = self._signature(i)
        if not minus:
            return None
        row, entry = cells[minus[-1]]
        assert entry == i + 1
        # the run of i+1's in row i+1 always sits under a cancelling i
        assert row <= i, "raising operator reached the prefix of row i+1"
        excess = [list(r) for r in self.excess]
        target = excess[row - 1]
        target.remove(i + 1)
        if row < i:
            bisect.insort(target, i)
        out = MLTableau(self.n, tuple(map(tuple, excess)))
        _assert_marginally_large(out)
        return out

    def epsilon(self, i: int) -> int:
        _check_index(i, self.n)
        return len(self._signature(i)[1])

    def phi(self, i: int) -> int:
        return self.epsilon(i) + self.weight().pair(i)

    def root_weight(self) -> RootVector:
        """wt as a root vector: minus the boxes in rows <= j with entry > j."""
        coeffs = []
        for j in range(1, self.n + 1):
            coeffs.append(-sum(1 for r in range(j) for x in self.excess[r] if x > j))
        return RootVector(tuple(coeffs))

    def weight(self) -> Weight:
        return self.root_weight().to_weight()


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise DomainError(f"index {i} out of range 1..{n}")


def _assert_marginally_large(T: MLTableau) -> None:
    rows = T.rows()
    for i, row in enumerate(rows, start=1):
        below = len(rows[i]) if i < T.n else 0
        assert row.count(i) == below + 1, f"row {i} lost marginal largeness"
    assert validate_ssyt(T.to_tableau(), T.n)


def ml_excess_partitions(T: MLTableau) -> tuple[tuple[int, ...], ...]:
    """Row k read right to left minus k, zero parts dropped."""
    return tuple(tuple(x - k for x in reversed(row))
                 for k, row in enumerate(T.excess, start=1))


def embed_tableau(T: Tableau, n: int) -> MLTableau:
    """The marginally large tableau T_ml with T -> T_ml (x) t_lambda (x) c.

    Extending each row of T on the left by its own index until the tableau
    is marginally large leaves the entries larger than the row index
    untouched, so those are exactly the excess lists.
    """
    if not validate_ssyt(T, n):
        raise DomainError(f"not semistandard with entries <= {n + 1}:\n{T}")
    rows = list(T.rows) + [()] * (n - len(T.rows))
    return MLTableau(n, tuple(tuple(x for x in row if x > i)
                              for i, row in enumerate(rows[:n], start=1)))


def padded_excess(T: Tableau, n: int) -> tuple[tuple[int, ...], ...]:
    """Row-excess partitions of T with zero parts dropped, padded to n rows."""
    mus = [tuple(p for p in mu if p) for mu in excess_partitions(T, n)][:n]
    return tuple(mus) + ((),) * (n - len(mus))


# -- B(infinity) (x) T^lambda (x) C, via the tensor rule -------------------------

@dataclass(frozen=True)
class MLElement:
    """Crystal-element adapter around MLTableau."""

    tableau: MLTableau

    def weight(self):
        return self.tableau.weight()

    def epsilon(self, i):
        return self.tableau.epsilon(i)

    def phi(self, i):
        return self.tableau.phi(i)

    def e(self, i):
        out = self.tableau.e(i)
        return None if out is None else MLElement(out)

    def f(self, i):
        return MLElement(self.tableau.f(i))


def embedded_element(T: Tableau, shape: Sequence[int], n: int):
    """iota(T) as a three-factor tensor element evaluated by the tensor rule."""
    from .crystal import CElement, TElement, TensorElement

    return TensorElement((MLElement(embed_tableau(T, n)),
                          TElement(partition_weight(shape, n)), CElement(n)))


def embedding_problems(T: Tableau, shape: Sequence[int], n: int) -> list[str]:
    """Discrepancies between B(lambda) at T and its image under the embedding."""
    problems = []
    image = embedded_element(T, shape, n)
    ml = image.factors[0].tableau
    lam = partition_weight(shape, n)
    from .tableaux import tableau_weight

    if ml.weight() != tableau_weight(T, n) - lam:
        problems.append("wt(T_ml) != wt(T) - lambda")
    if image.weight() != tableau_weight(T, n):
        problems.append("wt(iota T) != wt(T)")
    for i in range(1, n + 1):
        if image.epsilon(i) != tableau_epsilon(T, i):
            problems.append(f"eps_{i} differs")
        if image.phi(i) != tableau_phi(T, i):
            problems.append(f"phi_{i} differs")
        if ml.epsilon(i) < tableau_epsilon(T, i):
            problems.append(f"eps_{i}(T_ml) below eps_{i}(T)")
        for op, tab_op in (("e", tableau_e), ("f", tableau_f)):
            want = tab_op(T, i)
            got = getattr(image, op)(i)
            if want is None:
                if got is not None:
                    problems.append(f"{op}_{i} T = 0 but image is nonzero")
                continue
            if got is None or got.factors[0].tableau != embed_tableau(want, n):
                problems.append(f"iota({op}_{i} T) != {op}_{i} iota(T)")
    if ml_excess_partitions(ml) != padded_excess(T, n):
        problems.append("row-excess partitions of T_ml and T differ")
    return [f"{T.key()}: {p}" for p in problems]

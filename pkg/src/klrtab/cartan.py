"""Cartan datum of type A_n.

Weights are stored in fundamental-weight coordinates, so the pairing
<h_i, wt> is a plain index lookup.  Root-lattice vectors are stored in
simple-root coordinates.  Letters and indices are 1-based throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError


@lru_cache(maxsize=None)
def cartan_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    if n < 1:
        raise DomainError(f"rank must be positive, got {n}")
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


def cartan_entry(i: int, j: int) -> int:
    """a_ij for 1-based simple indices (independent of the rank)."""
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


@dataclass(frozen=True)
class Weight:
    """Element of the weight lattice; coeffs[i-1] = <h_i, wt>."""

    coeffs: tuple[int, ...]

    @classmethod
    def zero(cls, n: int) -> Weight:
        return cls((0,) * n)

    @classmethod
    def fundamental(cls, i: int, n: int) -> Weight:
        _check_index(i, n)
        return cls(tuple(int(k == i - 1) for k in range(n)))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def pair(self, i: int) -> int:
        return self.coeffs[i - 1]

    def __add__(self, other: Weight) -> Weight:
        _same_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Weight) -> Weight:
        _same_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coeffs))

    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.coeffs)


@dataclass(frozen=True)
class RootVector:
    """Element of the root lattice; coeffs[i-1] is the coefficient of alpha_i."""

    coeffs: tuple[int, ...]

    @classmethod
    def zero(cls, n: int) -> RootVector:
        return cls((0,) * n)

    @classmethod
    def simple(cls, i: int, n: int) -> RootVector:
        _check_index(i, n)
        return cls(tuple(int(k == i - 1) for k in range(n)))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def is_positive(self) -> bool:
        """Membership in Q+ (the zero vector included)."""
        return all(c >= 0 for c in self.coeffs)

    def __add__(self, other: RootVector) -> RootVector:
        _same_rank(self, other)
        return RootVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: RootVector) -> RootVector:
        _same_rank(self, other)
        return RootVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> RootVector:
        return RootVector(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> RootVector:
        return RootVector(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def to_weight(self) -> Weight:
        """Image in P: <h_i, sum_j c_j alpha_j> = sum_j a_ij c_j."""
        n = self.n
        return Weight(
            tuple(sum(cartan_entry(i, j) * self.coeffs[j - 1] for j in range(1, n + 1))
                  for i in range(1, n + 1))
        )


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise DomainError(f"index {i} out of range 1..{n}")


def _same_rank(a, b) -> None:
    if len(a.coeffs) != len(b.coeffs):
        raise DomainError(f"rank mismatch: {len(a.coeffs)} vs {len(b.coeffs)}")


def dominant_to_partition(a: Sequence[int]) -> tuple[int, ...]:
    """Partition (lambda_1 >= ... >= lambda_n) of a dominant weight sum a_i w_i.

    lambda_i = a_i + ... + a_n; trailing zeros are kept so the result has
    length n.
    """
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a):
        raise DomainError(f"dominant weight needs nonnegative coefficients, got {a}")
    out = []
    total = 0
    for x in reversed(a):
        total += x
        out.append(total)
    return tuple(reversed(out))


def partition_to_dominant(parts: Sequence[int], n: int) -> tuple[int, ...]:
    """Inverse of dominant_to_partition: a_i = lambda_i - lambda_{i+1}.

    A row n+1 is accepted; full columns of height n+1 carry weight zero.
    """
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if len(parts) > n + 1:
        raise DomainError(f"partition {parts} has more than {n + 1} rows")
    if any(p < q for p, q in zip(parts, parts[1:])) or any(p < 0 for p in parts):
        raise DomainError(f"not a partition: {parts}")
    padded = parts + (0,) * (n + 1 - len(parts))
    return tuple(padded[i] - padded[i + 1] for i in range(n))


def partition_weight(parts: Sequence[int], n: int) -> Weight:
    return Weight(partition_to_dominant(parts, n))


def bilinear(beta: RootVector, gamma: RootVector) -> int:
    """(beta | gamma) with (alpha_i | alpha_j) = a_ij."""
    _same_rank(beta, gamma)
    n = beta.n
    total = 0
    for i in range(n):
        if beta.coeffs[i] == 0:
            continue
        for j in range(max(0, i - 1), min(n, i + 2)):
            total += beta.coeffs[i] * gamma.coeffs[j] * cartan_entry(i + 1, j + 1)
    return total


def weight_of_word(word: Iterable[int], n: int) -> RootVector:
    """Root-lattice weight alpha_{i_1} + ... + alpha_{i_d} of a word."""
    counts = [0] * n
    for letter in word:
        if not 1 <= letter <= n:
            raise DomainError(f"letter {letter} out of range 1..{n}")
        counts[letter - 1] += 1
    return RootVector(tuple(counts))

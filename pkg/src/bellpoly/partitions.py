"""Partition vectors of n into exactly k parts.

A partition is stored by multiplicities: ``parts[j-1]`` is how many parts equal
``j``. Two shapes are used:

* lambda vectors have length n-k+1 (no part can exceed n-k+1);
* theta vectors have length n, with the last k-1 entries forced to zero.

Both are built by direct enumeration and by the k-1 -> k recurrences, so the
two constructions can be checked against each other.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

LAMBDA = "lambda"
THETA = "theta"


@dataclass(frozen=True, order=True)
class PartitionVector:
    parts: tuple[int, ...]
    n: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    def is_valid(self, kind: str = LAMBDA) -> bool:
        length = self.n - self.k + 1 if kind == LAMBDA else self.n
        p = self.parts
        if len(p) != length or any(c < 0 for c in p):
            return False
        if sum(p) != self.k or sum((j + 1) * c for j, c in enumerate(p)) != self.n:
            return False
        if kind == THETA and self.k >= 2 and any(p[self.n - self.k + 1:]):
            return False
        return True


def _check_range(n: int, k: int) -> None:
    if not (isinstance(n, int) and isinstance(k, int)) or not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


def _multiplicities(n: int, k: int, length: int) -> list[tuple[int, ...]]:
    """All length-``length`` multiplicity vectors with count k and weight n."""
    out: list[tuple[int, ...]] = []
    prefix = [0] * length

    def descend(j: int, count: int, weight: int) -> None:
        # j is the 0-based slot, part size j+1
        if j == length:
            if count == 0 and weight == 0:
                out.append(tuple(prefix))
            return
        size = j + 1
        # parts left must be >= size each: count*size <= weight
        hi = min(count, weight // size)
        for c in range(hi + 1):
            rest_count = count - c
            rest_weight = weight - c * size
            if rest_count and rest_weight < rest_count * (size + 1):
                continue
            if rest_count == 0 and rest_weight:
                continue
            prefix[j] = c
            descend(j + 1, rest_count, rest_weight)
        prefix[j] = 0

    descend(0, k, n)
    out.sort()
    return out


@lru_cache(maxsize=None)
def _lambda_parts(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_multiplicities(n, k, n - k + 1))


def enum_lambda(n: int, k: int) -> list[PartitionVector]:
    """Lambda vectors of (n, k), sorted lexicographically."""
    _check_range(n, k)
    return [PartitionVector(p, n, k) for p in _lambda_parts(n, k)]


def enum_theta(n: int, k: int) -> list[PartitionVector]:
    """Theta vectors of (n, k), enumerated over full length n."""
    _check_range(n, k)
    return [PartitionVector(p, n, k) for p in _multiplicities(n, k, n)]


def embed_lambda_in_theta(v: PartitionVector) -> PartitionVector:
    """Pad a lambda vector with k-1 trailing zeros."""
    if not v.is_valid(LAMBDA):
        raise ValueError(f"not a valid lambda vector: {v}")
    return PartitionVector(v.parts + (0,) * (v.k - 1), v.n, v.k)


def _lambda_base(n: int, k: int) -> list[tuple[int, ...]] | None:
    if k == 1:
        return [(0,) * (n - 1) + (1,)]
    if k == n:
        return [(n,)]
    return None


def lambda_branches(n: int, k: int) -> tuple[list[PartitionVector], list[PartitionVector]]:
    """The two pieces of the lambda recurrence for 2 <= k <= n.

    First piece: bump k_1 of every vector of (n-1, k-1). Second piece, only when
    k <= n // 2: every vector of (n-k, k) prefixed by 0 and followed by k-1 zeros.
    """
    if n < 2 or not 2 <= k <= n:
        raise ValueError(f"recurrence needs n >= 2 and 2 <= k <= n, got n={n}, k={k}")
    first = [PartitionVector((v[0] + 1,) + v[1:], n, k) for v in _lambda_rec(n - 1, k - 1)]
    second = []
    if k <= n // 2:
        second = [PartitionVector((0,) + v + (0,) * (k - 1), n, k) for v in _lambda_rec(n - k, k)]
    return first, second


@lru_cache(maxsize=None)
def _lambda_rec(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    base = _lambda_base(n, k)
    if base is not None:
        return tuple(base)
    first, second = lambda_branches(n, k)
    return tuple(sorted(v.parts for v in first + second))


def lambda_via_recurrence(n: int, k: int) -> list[PartitionVector]:
    _check_range(n, k)
    return [PartitionVector(p, n, k) for p in _lambda_rec(n, k)]


def _theta_base(n: int, k: int) -> list[tuple[int, ...]] | None:
    if k == 1:
        return [(0,) * (n - 1) + (1,)]
    if k == n:
        return [(n,) + (0,) * (n - 1)]
    return None


def theta_branches(n: int, k: int) -> tuple[list[PartitionVector], list[PartitionVector]]:
    """Theta analogue of :func:`lambda_branches`; every vector has length n."""
    if n < 2 or not 2 <= k <= n:
        raise ValueError(f"recurrence needs n >= 2 and 2 <= k <= n, got n={n}, k={k}")
    first = [PartitionVector((v[0] + 1,) + v[1:] + (0,), n, k) for v in _theta_rec(n - 1, k - 1)]
    second = []
    if k <= n // 2:
        second = [PartitionVector((0,) + v + (0,) * (k - 1), n, k) for v in _theta_rec(n - k, k)]
    return first, second


@lru_cache(maxsize=None)
def _theta_rec(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    base = _theta_base(n, k)
    if base is not None:
        return tuple(base)
    first, second = theta_branches(n, k)
    return tuple(sorted(v.parts for v in first + second))


def theta_via_recurrence(n: int, k: int) -> list[PartitionVector]:
    _check_range(n, k)
    return [PartitionVector(p, n, k) for p in _theta_rec(n, k)]


@lru_cache(maxsize=None)
def _count(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return _count(n - 1, k - 1) + _count(n - k, k)


def partition_count(n: int, k: int) -> int:
    """p(n, k) from p(n, k) = p(n-1, k-1) + p(n-k, k)."""
    _check_range(n, k)
    return _count(n, k)

"""Integer partitions, permutations and closed-form counting functions.

Partitions are plain tuples of positive ints in weakly decreasing order.
Scalars are :class:`fractions.Fraction`; counts are Python ints.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Literal, Sequence

Partition = tuple[int, ...]
Permutation = tuple[int, ...]

Filter = Literal["all", "odd", "strict"]


def make_partition(parts: Sequence[int]) -> Partition:
    """Canonical form: zeros stripped, parts sorted weakly decreasing."""
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {tuple(parts)!r}")
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def is_partition(lam: Sequence[int]) -> bool:
    return all(p > 0 for p in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


def is_odd(lam: Partition) -> bool:
    return all(p % 2 == 1 for p in lam)


def is_strict(lam: Partition) -> bool:
    return all(lam[i] > lam[i + 1] for i in range(len(lam) - 1))


def multiplicities(lam: Partition) -> dict[int, int]:
    """m_i(lambda) for each part size i that occurs."""
    return dict(Counter(lam))


def _gen_partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen_partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    return tuple(_gen_partitions(n, n))


def partitions_of(n: int, filter: Filter = "all") -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> partitions_of(3)
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    parts = _partitions(n)
    if filter == "all":
        return list(parts)
    if filter == "odd":
        return [lam for lam in parts if is_odd(lam)]
    if filter == "strict":
        return [lam for lam in parts if is_strict(lam)]
    raise ValueError(f"unknown filter {filter!r}")


@lru_cache(maxsize=None)
def z_lambda(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``lam``."""
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


def multinomial(n: int, ks: Sequence[int]) -> int:
    if sum(ks) != n or any(k < 0 for k in ks):
        raise ValueError(f"bad multinomial {n}; {tuple(ks)}")
    out = factorial(n)
    for k in ks:
        out //= factorial(k)
    return out


def krew(lam: Partition) -> int:
    """Kreweras number: sorted parking functions of shape ``lam``."""
    n, ell = sum(lam), len(lam)
    if n < 1:
        raise ValueError("krew needs a partition of n >= 1")
    ms = list(Counter(lam).values()) + [n - ell]
    num = multinomial(n, ms)
    q, r = divmod(num, n - ell + 1)
    assert r == 0
    return q


def okrew(lam: Partition) -> int:
    """Odd Kreweras number of an odd partition ``lam``."""
    if not is_odd(lam):
        raise ValueError(f"okrew needs an odd partition, got {lam!r}")
    n, ell = sum(lam), len(lam)
    if n < 1:
        raise ValueError("okrew needs a partition of n >= 1")
    tail = prod(range(n + ell - 1, n - ell + 2, -2))
    value = Fraction(2**ell, factorial(ell)) * multinomial(ell, list(Counter(lam).values())) * tail
    assert value.denominator == 1
    return int(value)


def okrew_ratio_check(lam: Partition) -> bool:
    if not is_odd(lam):
        raise ValueError(f"okrew_ratio_check needs an odd partition, got {lam!r}")
    n, ell = sum(lam), len(lam)
    half = (n + ell) // 2
    return okrew(lam) * comb(n, half) == krew(lam) * comb(n + ell, half)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def schroeder(n: int) -> int:
    """Large Schroeder numbers via s_n = 3 s_{n-1} + sum_{k=1}^{n-2} s_k s_{n-k-1}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    if n == 1:
        return 2
    return 3 * schroeder(n - 1) + sum(schroeder(k) * schroeder(n - k - 1) for k in range(1, n - 1))


def class_representative(lam: Partition) -> Permutation:
    """Permutation (one-line, 1-based images) with consecutive cycles of lengths ``lam``."""
    images: list[int] = []
    start = 0
    for part in lam:
        block = list(range(start + 1, start + part + 1))
        images.extend(block[1:] + block[:1])
        start += part
    return tuple(images)


def cycles(w: Permutation) -> list[list[int]]:
    seen = [False] * (len(w) + 1)
    out = []
    for i in range(1, len(w) + 1):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = w[j - 1]
        out.append(cyc)
    return out


def cycle_type(w: Permutation) -> Partition:
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation: {w!r}")
    return make_partition([len(c) for c in cycles(w)])


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u o v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        out[wi - 1] = i
    return tuple(out)


def act(w: Permutation, a: Sequence) -> tuple:
    """Right action on tuples: (w.a)_j = a_{w(j)}."""
    return tuple(a[w[j] - 1] for j in range(len(w)))


def sign(w: Permutation) -> int:
    return -1 if sum(len(c) - 1 for c in cycles(w)) % 2 else 1

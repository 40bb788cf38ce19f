"""Parking functions, naive shifted parking functions and Schroeder paths."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterator, Sequence

from .core import Partition, make_partition

SignVector = tuple[int, ...]


@dataclass(frozen=True, order=True)
class SortedNaiveShifted:
    """A sorted parking function ``p`` with reduced signs ``sbar``.

    ``sbar[k-1]`` is the product of the signs sitting on value ``k``,
    or 0 when ``k`` does not occur in ``p``.
    """

    p: tuple[int, ...]
    sbar: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.p) != len(self.sbar):
            raise ValueError("p and sbar must have equal length")
        if tuple(sorted(self.p)) != self.p or not is_parking(self.p):
            raise ValueError(f"not a sorted parking function: {self.p!r}")
        alpha = content(self.p)
        for a, s in zip(alpha, self.sbar):
            if (a == 0) != (s == 0) or s not in (-1, 0, 1):
                raise ValueError(f"bad reduced signs {self.sbar!r} for {self.p!r}")

    @property
    def n(self) -> int:
        return len(self.p)


def is_parking(t: Sequence[int]) -> bool:
    if any(x < 1 for x in t):
        raise ValueError(f"entries must be positive: {tuple(t)!r}")
    return all(x <= i for i, x in enumerate(sorted(t), start=1))


def sort_pf(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(p))


def content(p: Sequence[int]) -> tuple[int, ...]:
    """alpha(p): multiplicity of each value 1..n."""
    alpha = [0] * len(p)
    for x in p:
        alpha[x - 1] += 1
    return tuple(alpha)


def shape(p: Sequence[int]) -> Partition:
    return make_partition(content(p))


def area(p: Sequence[int]) -> int:
    """binom(n+1, 2) - sum(p); zero exactly on permutations of [n]."""
    n = len(p)
    return comb(n + 1, 2) - sum(p)


def enumerate_sorted_pf(n: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing parking functions in lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 1
        for v in range(lo, i + 2):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def _multiset_permutations(items: list[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a sorted list, lexicographic."""
    a = list(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1 :] = reversed(a[i + 1 :])


def enumerate_pf(n: int) -> Iterator[tuple[int, ...]]:
    """All parking functions of size ``n``, in lexicographic order."""
    return iter(sorted(x for s in enumerate_sorted_pf(n) for x in _multiset_permutations(list(s))))


def sort_naive(p: Sequence[int], sigma: Sequence[int]) -> SortedNaiveShifted:
    if len(p) != len(sigma):
        raise ValueError("length mismatch between p and sigma")
    sbar = [0] * len(p)
    for x, s in zip(p, sigma):
        if s not in (-1, 1):
            raise ValueError(f"signs must be +-1: {tuple(sigma)!r}")
        sbar[x - 1] = s if sbar[x - 1] == 0 else sbar[x - 1] * s
    return SortedNaiveShifted(sort_pf(p), tuple(sbar))


def sign_patterns(p: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All reduced-sign vectors compatible with the occupied values of ``p``."""
    alpha = content(p)
    occupied = [k for k, a in enumerate(alpha) if a]
    for signs in product((1, -1), repeat=len(occupied)):
        sbar = [0] * len(p)
        for k, s in zip(occupied, signs):
            sbar[k] = s
        yield tuple(sbar)


def enumerate_sorted_naive(n: int) -> Iterator[SortedNaiveShifted]:
    for p in enumerate_sorted_pf(n):
        for sbar in sign_patterns(p):
            yield SortedNaiveShifted(p, sbar)


def naive_class_members(x: SortedNaiveShifted) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (p, sigma) in NShPf(n) whose sort is ``x``."""
    out = []
    for q in _multiset_permutations(list(x.p)):
        slots: dict[int, list[int]] = {}
        for j, v in enumerate(q):
            slots.setdefault(v, []).append(j)
        for sigma in product((1, -1), repeat=len(q)):
            if all(_parity(sigma, idx) == x.sbar[v - 1] for v, idx in slots.items()):
                out.append((q, sigma))
    return out


def _parity(sigma: Sequence[int], idx: list[int]) -> int:
    s = 1
    for j in idx:
        s *= sigma[j]
    return s


# Schroeder paths: U = (0,1), R = (1,0), D = (1,1).

def to_schroeder_path(x: SortedNaiveShifted) -> str:
    steps = []
    for a, s in zip(content(x.p), x.sbar):
        if s == -1:
            steps.append("U" * (a - 1) + "D")
        else:
            steps.append("U" * a + "R")
    return "".join(steps)


def is_schroeder_path(path: str, n: int) -> bool:
    x = y = 0
    for c in path:
        if c == "U":
            y += 1
        elif c == "R":
            x += 1
        elif c == "D":
            x += 1
            y += 1
        else:
            return False
        if y < x:
            return False
    return (x, y) == (n, n)


def enumerate_schroeder_paths(n: int) -> Iterator[str]:
    """Direct generator of all large Schroeder paths from (0,0) to (n,n)."""

    def rec(x: int, y: int, acc: list[str]) -> Iterator[str]:
        if (x, y) == (n, n):
            yield "".join(acc)
            return
        if y < n:
            acc.append("U")
            yield from rec(x, y + 1, acc)
            acc.pop()
        if x < y:
            acc.append("R")
            yield from rec(x + 1, y, acc)
            acc.pop()
        if x < n and y < n and x + 1 <= y + 1:
            acc.append("D")
            yield from rec(x + 1, y + 1, acc)
            acc.pop()

    yield from rec(0, 0, [])

"""Matching paths, garages and odd shifted parking functions.

Matching paths are strings over ``U`` (0,1), ``R`` (1,0), ``P`` (the
positive diagonal step) and ``N`` (the negative diagonal step).  Step and
value indices are 1-based throughout, matching the combinatorial objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .core import is_odd
from .parking import (
    SortedNaiveShifted,
    area,
    content,
    enumerate_sorted_pf,
    is_parking,
    shape,
    sort_naive,
    sort_pf,
)

Arc = tuple[int, int]
Matching = tuple[Arc, ...]


@dataclass(frozen=True, order=True)
class SortedOddShifted:
    p: tuple[int, ...]
    sbar: tuple[int, ...]
    tau: Matching

    def __post_init__(self) -> None:
        if not is_sorted_odd(self.p, self.sbar, self.tau):
            raise ValueError(f"not a sorted odd shifted parking function: {self!r}")

    @property
    def n(self) -> int:
        return len(self.p)


@dataclass(frozen=True)
class OddShifted:
    p: tuple[int, ...]
    sigma: tuple[int, ...]
    tau: Matching

    def __post_init__(self) -> None:
        if not is_odd_shifted(self.p, self.sigma, self.tau):
            raise ValueError(f"not an odd shifted parking function: {self!r}")

    def sort(self) -> SortedOddShifted:
        x = sort_naive(self.p, self.sigma)
        return SortedOddShifted(x.p, x.sbar, self.tau)


def _pairs(tau: Iterable[Sequence[int]]) -> Matching:
    return tuple(sorted((int(a), int(b)) for a, b in tau))


def upsilon(x: SortedNaiveShifted) -> tuple[int, ...]:
    """0 for an absent value, 1 for odd multiplicity, 2 for positive even."""
    return tuple(0 if a == 0 else (1 if a % 2 else 2) for a in content(x.p))


def matching_path(x: SortedNaiveShifted) -> str:
    steps = []
    h = 0  # y - x at the current position
    for u, s in zip(upsilon(x), x.sbar):
        if u == 1:
            step = "P"
        elif u == 2:
            step = "U" if s == 1 else "R"
        elif h < 0:
            step = "U"
        elif h > 0:
            step = "R"
        else:
            step = "N"
        steps.append(step)
        h += {"U": 1, "R": -1}.get(step, 0)
    return "".join(steps)


def path_matching(path: str) -> Matching:
    """tau(L): pair each step away from the diagonal with the next step back
    across the same level.  Diagonal steps are never matched."""
    stack: list[int] = []
    arcs = []
    h = 0
    for i, step in enumerate(path, start=1):
        if step == "U":
            if h >= 0:
                stack.append(i)
            else:
                arcs.append((stack.pop(), i))
            h += 1
        elif step == "R":
            if h <= 0:
                stack.append(i)
            else:
                arcs.append((stack.pop(), i))
            h -= 1
        elif step not in "PN":
            raise ValueError(f"bad step {step!r}")
        if h == 0:
            assert not stack
    return tuple(sorted(arcs))


def path_matching_geometric(path: str) -> Matching:
    """tau(L) straight from the definition: i < k both cross the same line
    y - x = c + 1/2 and no step in between does."""
    crossings: dict[int, list[int]] = {}
    h = 0
    for i, step in enumerate(path, start=1):
        if step == "U":
            crossings.setdefault(2 * h + 1, []).append(i)
            h += 1
        elif step == "R":
            crossings.setdefault(2 * h - 1, []).append(i)
            h -= 1
    arcs = []
    for idx in crossings.values():
        arcs.extend(zip(idx[0::2], idx[1::2]))
    return tuple(sorted(arcs))


def toward_steps(path: str) -> list[int]:
    """1-based indices of steps moving toward the main diagonal."""
    out = []
    h = 0
    for i, step in enumerate(path, start=1):
        if step == "U":
            if h < 0:
                out.append(i)
            h += 1
        elif step == "R":
            if h > 0:
                out.append(i)
            h -= 1
    return out


def is_garage(x: SortedNaiveShifted) -> bool:
    """Every matched right endpoint of tau(L) is an absent value."""
    ups = upsilon(x)
    return all(ups[k - 1] == 0 for _, k in path_matching(matching_path(x)))


def is_garage_by_steps(x: SortedNaiveShifted) -> bool:
    ups = upsilon(x)
    return all(ups[i - 1] == 0 for i in toward_steps(matching_path(x)))


def is_garage_by_word(x: SortedNaiveShifted) -> bool:
    """Word form: for i < j with upsilon 2 whose in-between word is a balanced
    Dyck word in 2's (opening) and 0's (closing), the reduced signs agree."""
    ups = upsilon(x)
    n = len(ups)
    for i in range(n):
        if ups[i] != 2:
            continue
        bal = 0
        for j in range(i + 1, n):
            if ups[j] == 2 and bal == 0 and x.sbar[i] != x.sbar[j]:
                return False
            if ups[j] == 2:
                bal += 1
            elif ups[j] == 0:
                bal -= 1
                if bal < 0:
                    break
    return True


def _from_content(alpha: Sequence[int]) -> tuple[int, ...]:
    return tuple(v for v, a in enumerate(alpha, start=1) for _ in range(a))


def garage_of(x: SortedNaiveShifted) -> SortedNaiveShifted:
    """The unique garage garage-equivalent to ``x``."""
    alpha = list(content(x.p))
    sbar = list(x.sbar)
    for i, k in path_matching(matching_path(x)):
        alpha[i - 1] += alpha[k - 1]
        alpha[k - 1] = 0
        sbar[k - 1] = 0
    return SortedNaiveShifted(_from_content(alpha), tuple(sbar))


def phi(p: Sequence[int], sigma: Sequence[int]) -> SortedNaiveShifted:
    return garage_of(sort_naive(p, sigma))


def garage_class(g: SortedNaiveShifted) -> list[SortedNaiveShifted]:
    """All sorted naive shifted parking functions garage equivalent to ``g``."""
    if not is_garage(g):
        raise ValueError(f"not a garage: {g!r}")
    arcs = path_matching(matching_path(g))
    alpha0 = content(g.p)
    choices = [range(1, alpha0[i - 1] // 2 + 1) for i, _ in arcs]
    out = []
    for js in product(*choices):
        alpha = list(alpha0)
        sbar = list(g.sbar)
        for (i, k), j in zip(arcs, js):
            ell = alpha0[i - 1] // 2
            alpha[i - 1] = 2 * j
            alpha[k - 1] = 2 * ell - 2 * j
            sbar[k - 1] = -g.sbar[i - 1] if j != ell else 0
        out.append(SortedNaiveShifted(_from_content(alpha), tuple(sbar)))
    return out


def enumerate_garages(n: int) -> Iterator[SortedNaiveShifted]:
    from .parking import enumerate_sorted_naive

    return (x for x in enumerate_sorted_naive(n) if is_garage(x))


# ---- odd shifted parking functions ------------------------------------

def _check_matching(tau: Matching, present: set[int]) -> None:
    ends: list[int] = []
    for a, b in tau:
        if not a < b:
            raise ValueError(f"arc {(a, b)} must satisfy a < b")
        if a not in present or b not in present:
            raise ValueError(f"arc {(a, b)} uses a value absent from p")
        ends += [a, b]
    if len(set(ends)) != len(ends):
        raise ValueError(f"arcs share endpoints: {tau!r}")
    for a, d in tau:
        for b, c in tau:
            if a < b < d < c:
                raise ValueError(f"crossing arcs {(a, d)} and {(b, c)}")


def _conditions_hold(alpha: Sequence[int], sbar: Sequence[int], tau: Matching) -> bool:
    for a, b in tau:
        if sbar[a - 1] != -sbar[b - 1]:
            return False
        if any(alpha[v - 1] == 0 for v in range(a + 1, b)):
            return False
    for a, d in tau:
        for b, c in tau:
            if a < b < c < d and sbar[a - 1] != sbar[b - 1]:
                return False
    return True


def is_odd_shifted(p: Sequence[int], sigma: Sequence[int], tau: Iterable[Sequence[int]]) -> bool:
    p = tuple(p)
    tau = _pairs(tau)
    if len(sigma) != len(p) or any(s not in (-1, 1) for s in sigma):
        raise ValueError("sigma must be a +-1 vector of the same length as p")
    if not is_parking(p):
        return False
    _check_matching(tau, set(p))
    if not is_odd(shape(p)):
        return False
    return _conditions_hold(content(p), sort_naive(p, sigma).sbar, tau)


def is_sorted_odd(p: Sequence[int], sbar: Sequence[int], tau: Iterable[Sequence[int]]) -> bool:
    p = tuple(p)
    tau = _pairs(tau)
    if tuple(sorted(p)) != p or len(sbar) != len(p) or not is_parking(p):
        return False
    alpha = content(p)
    if any((a == 0) != (s == 0) or s not in (-1, 0, 1) for a, s in zip(alpha, sbar)):
        return False
    _check_matching(tau, set(p))
    return is_odd(shape(p)) and _conditions_hold(alpha, sbar, tau)


def noncrossing_matchings(points: Sequence[int]) -> Iterator[Matching]:
    """All noncrossing partial matchings on an increasing list of points."""
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    yield from noncrossing_matchings(rest)
    for j in range(len(rest)):
        for inner in noncrossing_matchings(rest[:j]):
            for outer in noncrossing_matchings(rest[j + 1 :]):
                yield ((first, rest[j]),) + inner + outer


def _runs(values: Sequence[int]) -> list[list[int]]:
    runs: list[list[int]] = []
    for v in values:
        if runs and runs[-1][-1] == v - 1:
            runs[-1].append(v)
        else:
            runs.append([v])
    return runs


def enumerate_sorted_odd(n: int) -> Iterator[SortedOddShifted]:
    """Sorted odd shifted parking functions built directly from the conditions."""
    for p in enumerate_sorted_pf(n):
        if not is_odd(shape(p)):
            continue
        alpha = content(p)
        occupied = [v for v, a in enumerate(alpha, start=1) if a]
        # arcs may only span runs of consecutive occupied values
        per_run = [list(noncrossing_matchings(run)) for run in _runs(occupied)]
        for parts in product(*per_run):
            tau = tuple(sorted(arc for part in parts for arc in part))
            for signs in product((1, -1), repeat=len(occupied)):
                sbar = [0] * n
                for v, s in zip(occupied, signs):
                    sbar[v - 1] = s
                if _conditions_hold(alpha, sbar, tau):
                    yield SortedOddShifted(p, tuple(sbar), tau)


def phi_o(x: SortedOddShifted | OddShifted) -> SortedNaiveShifted:
    """Send every right endpoint value b of an arc (a, b) to a."""
    if isinstance(x, OddShifted):
        x = x.sort()
    right_to_left = {b: a for a, b in x.tau}
    p2 = sort_pf(right_to_left.get(v, v) for v in x.p)
    sbar = tuple(0 if v in right_to_left else s for v, s in enumerate(x.sbar, start=1))
    return SortedNaiveShifted(p2, sbar)


def odd_class(g: SortedNaiveShifted) -> list[SortedOddShifted]:
    """The fiber of ``phi_o`` over the garage ``g``."""
    if not is_garage(g):
        raise ValueError(f"not a garage: {g!r}")
    arcs = path_matching(matching_path(g))
    alpha0 = content(g.p)
    choices = [range(1, alpha0[i - 1] // 2 + 1) for i, _ in arcs]
    out = []
    for js in product(*choices):
        alpha = list(alpha0)
        sbar = list(g.sbar)
        for (i, k), j in zip(arcs, js):
            m = alpha0[i - 1] // 2
            alpha[i - 1] = 2 * j - 1
            alpha[k - 1] = 2 * (m - j) + 1
            sbar[k - 1] = -g.sbar[i - 1]
        out.append(SortedOddShifted(_from_content(alpha), tuple(sbar), arcs))
    return out


def naive_to_odd(x: SortedNaiveShifted) -> SortedOddShifted:
    """Move one car from i to j along each arc (i, j) of tau(L)."""
    tau = path_matching(matching_path(x))
    alpha = list(content(x.p))
    sbar = list(x.sbar)
    for i, j in tau:
        alpha[i - 1] -= 1
        alpha[j - 1] += 1
        sbar[j - 1] = -x.sbar[i - 1]
    return SortedOddShifted(_from_content(alpha), tuple(sbar), tau)


def odd_to_naive(y: SortedOddShifted) -> SortedNaiveShifted:
    alpha = list(content(y.p))
    sbar = list(y.sbar)
    for i, j in y.tau:
        alpha[i - 1] += 1
        alpha[j - 1] -= 1
        if alpha[j - 1] == 0:
            sbar[j - 1] = 0
    return SortedNaiveShifted(_from_content(alpha), tuple(sbar))


def area_o(y: SortedOddShifted) -> int:
    return area(y.p) + sum(j - i for i, j in y.tau)


def odd_class_members(y: SortedOddShifted) -> list[tuple[tuple[int, ...], tuple[int, ...], Matching]]:
    """All unsorted triples sorting to ``y``; tau is carried along unchanged."""
    from .parking import naive_class_members

    return [(q, s, y.tau) for q, s in naive_class_members(SortedNaiveShifted(y.p, y.sbar))]

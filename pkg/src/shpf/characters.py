"""Class functions, the Frobenius and spin characteristic maps, and trace
oracles for the modules built on parking functions.

Permutations act on tuples by ``(w.a)_j = a_{w(j)}``.  A naive shifted
parking function ``(p, sigma)`` stands for ``p (x) v_I`` in C[Pf] (x) Wedge(C^n),
with ``I`` the positions where ``sigma`` is -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Literal, Mapping, Sequence

from .core import (
    Partition,
    act,
    class_representative,
    cycles,
    is_odd,
    make_partition,
    partitions_of,
    z_lambda,
)
from .parking import SortedNaiveShifted, content, enumerate_pf, enumerate_sorted_pf, shape
from .scalars import QSqrt2
from .symfunc import SymFunc, r_func, sh_symfunc, sum_of, v_func

Kind = Literal["ordinary", "spin"]


@dataclass(frozen=True)
class ClassFunction:
    """Values on cycle types.  Spin class functions carry values only on odd
    partitions (the positive class representatives)."""

    degree: int
    kind: Kind
    values: Mapping[Partition, Fraction | QSqrt2] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind == "ordinary":
            vals = {make_partition(k): Fraction(v) for k, v in self.values.items()}
            missing = set(partitions_of(self.degree)) - set(vals)
            if missing:
                raise ValueError(f"ordinary class function missing values at {sorted(missing)}")
        elif self.kind == "spin":
            vals = {make_partition(k): QSqrt2.coerce(v) for k, v in self.values.items()}
            bad = [lam for lam in vals if not is_odd(lam)]
            if bad:
                raise ValueError(f"spin class function has non-odd classes {bad}")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")
        for lam in vals:
            if sum(lam) != self.degree:
                raise ValueError(f"{lam} is not a partition of {self.degree}")
        order = {lam: i for i, lam in enumerate(partitions_of(self.degree))}
        object.__setattr__(self, "values", dict(sorted(vals.items(), key=lambda kv: order[kv[0]])))

    def __getitem__(self, lam: Partition):
        return self.values.get(make_partition(lam), Fraction(0) if self.kind == "ordinary" else QSqrt2())

    def __mul__(self, other: ClassFunction) -> ClassFunction:
        if (self.degree, self.kind) != (other.degree, other.kind):
            raise ValueError("pointwise product needs matching degree and kind")
        return ClassFunction(
            self.degree, self.kind, {lam: v * other[lam] for lam, v in self.values.items()}
        )

    def __add__(self, other: ClassFunction) -> ClassFunction:
        if (self.degree, self.kind) != (other.degree, other.kind):
            raise ValueError("sum needs matching degree and kind")
        keys = list(self.values) + [k for k in other.values if k not in self.values]
        return ClassFunction(self.degree, self.kind, {k: self[k] + other[k] for k in keys})


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, "ordinary", {lam: 1 for lam in partitions_of(n)})


def sign_character(n: int) -> ClassFunction:
    return ClassFunction(n, "ordinary", {lam: (-1) ** (n - len(lam)) for lam in partitions_of(n)})


def regular_character(n: int) -> ClassFunction:
    from math import factorial

    return ClassFunction(
        n, "ordinary", {lam: factorial(n) if lam == (1,) * n else 0 for lam in partitions_of(n)}
    )


def frobenius(chi: ClassFunction) -> SymFunc:
    if chi.kind != "ordinary":
        raise ValueError("frobenius needs an ordinary class function")
    return SymFunc(chi.degree, {lam: v / z_lambda(lam) for lam, v in chi.values.items()})


def spin_characteristic_terms(psi: ClassFunction) -> dict[Partition, QSqrt2]:
    """ch'(psi) as exact Q(sqrt 2) coefficients on p_lambda, lambda odd."""
    if psi.kind != "spin":
        raise ValueError("spin_characteristic needs a spin class function")
    out = {}
    for lam in partitions_of(psi.degree, "odd"):
        c = QSqrt2.sqrt2_power(len(lam)) * psi[lam] * Fraction(1, z_lambda(lam))
        if c:
            out[lam] = c
    return out


def spin_characteristic(psi: ClassFunction) -> SymFunc:
    terms = spin_characteristic_terms(psi)
    irrational = [lam for lam, c in terms.items() if not c.is_rational()]
    if irrational:
        raise ValueError(f"spin characteristic has irrational coefficients at {irrational}")
    return SymFunc(psi.degree, {lam: c.a for lam, c in terms.items()})


# ---- parking function and exterior characters --------------------------

def _count_cycle_assignments(lengths: tuple[int, ...], alpha: tuple[int, ...]) -> int:
    """Maps cycles -> values such that value v receives total length alpha_v."""

    @lru_cache(maxsize=None)
    def rec(idx: int, remaining: tuple[int, ...]) -> int:
        if idx == len(lengths):
            return int(not any(remaining))
        total = 0
        c = lengths[idx]
        for v, r in enumerate(remaining):
            if r >= c:
                nxt = remaining[:v] + (r - c,) + remaining[v + 1 :]
                total += rec(idx + 1, nxt)
        return total

    return rec(0, alpha)


@lru_cache(maxsize=None)
def pf_character(n: int) -> ClassFunction:
    """Number of parking functions fixed by a permutation of each cycle type,
    i.e. those constant on its cycles."""
    contents = [content(p) for p in enumerate_sorted_pf(n)]
    values = {}
    for lam in partitions_of(n):
        values[lam] = sum(_count_cycle_assignments(lam, alpha) for alpha in contents)
    return ClassFunction(n, "ordinary", values)


def pf_character_by_scan(n: int) -> ClassFunction:
    """Fixed points counted over all of Pf(n); exponential, for cross-checks."""
    pfs = list(enumerate_pf(n))
    values = {}
    for lam in partitions_of(n):
        w = class_representative(lam)
        values[lam] = sum(1 for p in pfs if act(w, p) == p)
    return ClassFunction(n, "ordinary", values)


def exterior_character(n: int) -> ClassFunction:
    """Trace on Wedge(C^n): prod over cycles of (1 + (-1)^(c-1))."""
    return ClassFunction(
        n, "ordinary", {lam: 2 ** len(lam) if is_odd(lam) else 0 for lam in partitions_of(n)}
    )


def _restricted_sign(w: Sequence[int], subset: frozenset[int]) -> int:
    s = 1
    for cyc in cycles(tuple(w)):
        if cyc[0] in subset and len(cyc) % 2 == 0:
            s = -s
    return s


def exterior_character_by_subsets(n: int, parity: int | None = None) -> ClassFunction:
    """Signed fixed-point trace over the wedge basis v_I; ``parity`` restricts to
    |I| even (0) or odd (1)."""
    from itertools import combinations

    values = {}
    for lam in partitions_of(n):
        w = class_representative(lam)
        total = 0
        for k in range(n + 1):
            if parity is not None and k % 2 != parity:
                continue
            for sub in combinations(range(1, n + 1), k):
                s = frozenset(sub)
                if {w[i - 1] for i in s} == s:
                    total += _restricted_sign(w, s)
        values[lam] = total
    return ClassFunction(n, "ordinary", values)


def naive_character(n: int) -> ClassFunction:
    """Character of C[NShPf(n)] = C[Pf(n)] (x) Wedge(C^n)."""
    return pf_character(n) * exterior_character(n)


# ---- signed fixed-point trace oracle -----------------------------------

Label = tuple[tuple[int, ...], tuple[int, ...]]


def _strip(member) -> Label:
    return (tuple(member[0]), tuple(member[1]))


def class_trace(members: Iterable, w: Sequence[int], check_closed: bool = True) -> Fraction:
    """Trace of ``w`` on the span of ``members`` (pairs (p, sigma), or triples
    whose third entry is left untouched by the action)."""
    labels = [_strip(m) for m in members]
    w = tuple(w)
    if check_closed:
        present = set(labels)
        for p, s in labels:
            if (act(w, p), act(w, s)) not in present:
                raise ValueError(f"member list is not closed under {w}: {(p, s)}")
    total = 0
    for p, s in labels:
        if act(w, p) == p and act(w, s) == s:
            total += _restricted_sign(w, frozenset(i for i, x in enumerate(s, 1) if x == -1))
    return Fraction(total)


def oracle_character(members: Sequence, n: int) -> ClassFunction:
    members = list(members)
    values = {}
    for lam in partitions_of(n):
        values[lam] = class_trace(members, class_representative(lam))
    return ClassFunction(n, "ordinary", values)


def naive_character_by_oracle(n: int) -> ClassFunction:
    from itertools import product

    members = [(p, s) for p in enumerate_pf(n) for s in product((1, -1), repeat=n)]
    return oracle_character(members, n)


@dataclass
class CharacterReport:
    n: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_class_characters(n: int) -> CharacterReport:
    """Oracle characters of every sorted naive class, every sorted odd class,
    and both fibers over every garage, compared with V and R functions."""
    from .parking import enumerate_sorted_naive, naive_class_members
    from .shifted import enumerate_garages, enumerate_sorted_odd, garage_class, odd_class, odd_class_members

    report = CharacterReport(n)
    naive_chars: dict[SortedNaiveShifted, ClassFunction] = {}
    for x in enumerate_sorted_naive(n):
        chi = oracle_character(naive_class_members(x), n)
        naive_chars[x] = chi
        report.checked += 1
        if frobenius(chi) != v_func(shape(x.p)):
            report.failures.append(f"naive class {x}: character is not V_{shape(x.p)}")
    odd_chars = {}
    for y in enumerate_sorted_odd(n):
        chi = oracle_character(odd_class_members(y), n)
        odd_chars[y] = chi
        report.checked += 1
        if frobenius(chi) != v_func(shape(y.p)):
            report.failures.append(f"odd class {y}: character is not V_{shape(y.p)}")
    for g in enumerate_garages(n):
        target = r_func(shape(g.p))
        naive_fiber = sum_of((frobenius(naive_chars[x]) for x in garage_class(g)), n)
        odd_fiber = sum_of((frobenius(odd_chars[y]) for y in odd_class(g)), n)
        report.checked += 2
        if naive_fiber != target:
            report.failures.append(f"naive fiber over garage {g} is not R_{shape(g.p)}")
        if odd_fiber != target:
            report.failures.append(f"odd fiber over garage {g} is not R_{shape(g.p)}")
    total = ClassFunction(n, "ordinary", {lam: 0 for lam in partitions_of(n)})
    for chi in odd_chars.values():
        total = total + chi
    if total != naive_character(n):
        report.failures.append("sum of odd class characters differs from the naive character")
    return report


# ---- spin characters ---------------------------------------------------

def clifford_character(n: int) -> ClassFunction:
    from .clifford import clifford_trace_value

    return ClassFunction(
        n, "spin", {lam: clifford_trace_value(lam).to_qsqrt2() for lam in partitions_of(n, "odd")}
    )


def spin_naive_character(n: int) -> ClassFunction:
    """Spin character of C[Pf(n)] (x) C_n on positive class representatives."""
    chi = pf_character(n)
    cliff = clifford_character(n)
    return ClassFunction(n, "spin", {lam: cliff[lam] * chi[lam] for lam in partitions_of(n, "odd")})


def spin_naive_matches(n: int) -> bool:
    """ch'(spin_naive_character(n)) == 2^(n/2) SH_n, over Q(sqrt 2)."""
    got = spin_characteristic_terms(spin_naive_character(n))
    scale = QSqrt2.sqrt2_power(n)
    return got == {lam: scale * c for lam, c in sh_symfunc(n).coeffs.items()}

"""Homogeneous symmetric functions stored in the power-sum basis.

Every function here (h, e, P, V, R, PF_n, SH_n) is materialized as an exact
sparse map ``Partition -> Fraction`` over the power sums ``p_lambda``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .core import (
    Partition,
    is_odd,
    krew,
    make_partition,
    partitions_of,
    z_lambda,
)

Scalar = Fraction | int


def _order_key(n: int):
    index = {lam: i for i, lam in enumerate(partitions_of(n))}
    return index.__getitem__


@dataclass(frozen=True)
class SymFunc:
    degree: int
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for lam, c in self.coeffs.items():
            lam = make_partition(lam)
            if sum(lam) != self.degree:
                raise ValueError(f"{lam} is not a partition of {self.degree}")
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        key = _order_key(self.degree)
        ordered = {lam: clean[lam] for lam in sorted(clean, key=key) if clean[lam]}
        object.__setattr__(self, "coeffs", ordered)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.degree == other.degree and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash((self.degree, tuple(self.coeffs.items())))

    def __add__(self, other: SymFunc) -> SymFunc:
        return add(self, other)

    def __sub__(self, other: SymFunc) -> SymFunc:
        return add(self, scale(-1, other))

    def __mul__(self, other: SymFunc | Scalar) -> SymFunc:
        if isinstance(other, SymFunc):
            return mul(self, other)
        return scale(other, self)

    __rmul__ = __mul__

    def __neg__(self) -> SymFunc:
        return scale(-1, self)

    def __getitem__(self, lam: Partition) -> Fraction:
        return self.coeffs.get(make_partition(lam), Fraction(0))

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"SymFunc(0, degree={self.degree})"
        terms = " + ".join(f"{c}*p{list(lam)}" for lam, c in self.coeffs.items())
        return f"SymFunc({terms})"

    def is_zero(self) -> bool:
        return not self.coeffs


def is_symp(f: SymFunc) -> bool:
    return all(is_odd(lam) for lam in f.coeffs)


def zero(n: int) -> SymFunc:
    return SymFunc(n, {})


def one() -> SymFunc:
    return SymFunc(0, {(): Fraction(1)})


def p_monomial(lam: Iterable[int]) -> SymFunc:
    lam = make_partition(tuple(lam))
    return SymFunc(sum(lam), {lam: Fraction(1)})


def add(f: SymFunc, g: SymFunc) -> SymFunc:
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    out = dict(f.coeffs)
    for lam, c in g.coeffs.items():
        out[lam] = out.get(lam, 0) + c
    return SymFunc(f.degree, out)


def scale(c: Scalar, f: SymFunc) -> SymFunc:
    c = Fraction(c)
    return SymFunc(f.degree, {lam: c * v for lam, v in f.coeffs.items()})


def mul(f: SymFunc, g: SymFunc) -> SymFunc:
    out: dict[Partition, Fraction] = {}
    for lam, a in f.coeffs.items():
        for mu, b in g.coeffs.items():
            key = tuple(sorted(lam + mu, reverse=True))
            out[key] = out.get(key, 0) + a * b
    return SymFunc(f.degree + g.degree, out)


def sum_of(fs: Iterable[SymFunc], degree: int) -> SymFunc:
    out: dict[Partition, Fraction] = {}
    for f in fs:
        if f.degree != degree:
            raise ValueError(f"degree mismatch: {f.degree} vs {degree}")
        for lam, c in f.coeffs.items():
            out[lam] = out.get(lam, 0) + c
    return SymFunc(degree, out)


def product_of(fs: Iterable[SymFunc]) -> SymFunc:
    out = one()
    for f in fs:
        out = mul(out, f)
    return out


def hall_inner(f: SymFunc, g: SymFunc) -> Fraction:
    """<p_lambda, p_mu> = delta * z_lambda."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    return sum((z_lambda(lam) * c * g[lam] for lam, c in f.coeffs.items()), Fraction(0))


def kronecker(f: SymFunc, g: SymFunc) -> SymFunc:
    """Kronecker (inner) product, diagonal on power sums with weight z_lambda."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    return SymFunc(f.degree, {lam: z_lambda(lam) * c * g[lam] for lam, c in f.coeffs.items()})


@lru_cache(maxsize=None)
def h(n: int) -> SymFunc:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return SymFunc(n, {lam: Fraction(1, z_lambda(lam)) for lam in partitions_of(n)})


@lru_cache(maxsize=None)
def e(n: int) -> SymFunc:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return SymFunc(
        n, {lam: Fraction((-1) ** (n - len(lam)), z_lambda(lam)) for lam in partitions_of(n)}
    )


@lru_cache(maxsize=None)
def h_prod(lam: Partition) -> SymFunc:
    return product_of(h(k) for k in make_partition(lam))


@lru_cache(maxsize=None)
def e_prod(lam: Partition) -> SymFunc:
    return product_of(e(k) for k in make_partition(lam))


def shift(f: SymFunc) -> SymFunc:
    """Shiftification: p_lambda -> 2^len(lambda) p_lambda for odd lambda, else 0."""
    return SymFunc(
        f.degree, {lam: c * 2 ** len(lam) for lam, c in f.coeffs.items() if is_odd(lam)}
    )


@lru_cache(maxsize=None)
def big_p(k: int) -> SymFunc:
    """Single-part Schur P function, P_k = sh(h_k) / 2 (and P_0 = 1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return one()
    return scale(Fraction(1, 2), shift(h(k)))


def p_def_forms(k: int) -> bool:
    """Check P_k against its three h/e sum forms."""
    target = big_p(k)
    terms = [mul(h(i), e(k - i)) for i in range(k + 1)]
    half = scale(Fraction(1, 2), sum_of(terms, k))
    odd_i = sum_of((t for i, t in enumerate(terms) if i % 2), k)
    even_i = sum_of((t for i, t in enumerate(terms) if i % 2 == 0), k)
    return half == target and odd_i == target and even_i == target


@lru_cache(maxsize=None)
def v_func(lam: Partition) -> SymFunc:
    return product_of(big_p(k) for k in make_partition(lam))


@lru_cache(maxsize=None)
def r_single(m: int) -> SymFunc:
    if m % 2:
        return big_p(m)
    return sum_of((mul(big_p(2 * i), big_p(m - 2 * i)) for i in range(1, m // 2 + 1)), m)


@lru_cache(maxsize=None)
def r_func(lam: Partition) -> SymFunc:
    return product_of(r_single(m) for m in make_partition(lam))


def p_relation_check(k: int) -> bool:
    even = sum_of((mul(big_p(2 * i), big_p(2 * k - 2 * i)) for i in range(1, k + 1)), 2 * k)
    odd = sum_of((mul(big_p(2 * i - 1), big_p(2 * k - 2 * i + 1)) for i in range(1, k + 1)), 2 * k)
    return even == odd


class SingularSystemError(ArithmeticError):
    pass


def solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over Q with full pivoting on nonzero entries."""
    size = len(matrix)
    a = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    col_perm = list(range(size))
    for r in range(size):
        pivot = next(
            ((i, j) for i in range(r, size) for j in range(r, size) if a[i][j] != 0), None
        )
        if pivot is None:
            raise SingularSystemError("matrix is singular")
        i, j = pivot
        a[r], a[i] = a[i], a[r]
        if j != r:
            for row in a:
                row[r], row[j] = row[j], row[r]
            col_perm[r], col_perm[j] = col_perm[j], col_perm[r]
        piv = a[r][r]
        for i2 in range(size):
            if i2 != r and a[i2][r]:
                factor = a[i2][r] / piv
                a[i2] = [x - factor * y for x, y in zip(a[i2], a[r])]
    x = [Fraction(0)] * size
    for r in range(size):
        x[col_perm[r]] = a[r][size] / a[r][r]
    return x


def expand_odd_v(f: SymFunc) -> dict[Partition, Fraction]:
    """Coefficients of ``f`` in the basis {V_lambda : lambda odd}."""
    if not is_symp(f):
        raise ValueError("expand_odd_v needs an element of SymP")
    odd = partitions_of(f.degree, "odd")
    columns = [v_func(lam) for lam in odd]
    matrix = [[col[mu] for col in columns] for mu in odd]
    coeffs = solve_exact(matrix, [f[mu] for mu in odd])
    result = {lam: c for lam, c in zip(odd, coeffs) if c}
    rebuilt = sum_of((scale(c, v_func(lam)) for lam, c in result.items()), f.degree)
    if rebuilt != f:
        raise ArithmeticError("V-expansion failed to reconstruct its input")
    return result


def combine_v(coeffs: Mapping[Partition, Scalar], degree: int) -> SymFunc:
    return sum_of((scale(c, v_func(make_partition(lam))) for lam, c in coeffs.items()), degree)


@lru_cache(maxsize=None)
def pf_symfunc(n: int) -> SymFunc:
    """PF_n, computed twice (Kreweras closed form, direct sum) and compared."""
    from .parking import enumerate_sorted_pf, shape

    closed = sum_of((scale(krew(lam), h_prod(lam)) for lam in partitions_of(n)), n)
    shapes = Counter(shape(p) for p in enumerate_sorted_pf(n))
    direct = sum_of((scale(c, h_prod(lam)) for lam, c in shapes.items()), n)
    if closed != direct:
        raise ArithmeticError(f"PF_{n}: Kreweras form disagrees with direct summation")
    return closed


@lru_cache(maxsize=None)
def sh_symfunc(n: int) -> SymFunc:
    return shift(pf_symfunc(n))


def naive_v_expansion(n: int) -> dict[Partition, Fraction]:
    return {lam: Fraction(2 ** len(lam) * krew(lam)) for lam in partitions_of(n)}


# ---- t-graded functions -----------------------------------------------

def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class TPoly:
    """Dense polynomial in t: coeffs[i] multiplies t**i."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> TPoly:
        return cls((0,) * degree + (c,))

    def __add__(self, other: TPoly) -> TPoly:
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return TPoly(tuple(x + y for x, y in zip(a, b)))

    def scale(self, c: Scalar) -> TPoly:
        return TPoly(tuple(Fraction(c) * x for x in self.coeffs))

    def __call__(self, t: Scalar) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * t + c
        return out

    def __bool__(self) -> bool:
        return bool(self.coeffs)


@dataclass(frozen=True)
class TSymFunc:
    degree: int
    coeffs: Mapping[Partition, TPoly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        key = _order_key(self.degree)
        clean = {make_partition(lam): c for lam, c in self.coeffs.items() if c}
        for lam in clean:
            if sum(lam) != self.degree:
                raise ValueError(f"{lam} is not a partition of {self.degree}")
        object.__setattr__(self, "coeffs", {lam: clean[lam] for lam in sorted(clean, key=key)})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TSymFunc):
            return NotImplemented
        return self.degree == other.degree and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash((self.degree, tuple(self.coeffs.items())))

    def evaluate(self, t: Scalar) -> SymFunc:
        return SymFunc(self.degree, {lam: poly(t) for lam, poly in self.coeffs.items()})


def t_weighted_sum(terms: Iterable[tuple[int, SymFunc]], degree: int) -> TSymFunc:
    """sum of t**k * f over (k, f) pairs."""
    acc: dict[Partition, dict[int, Fraction]] = {}
    for k, f in terms:
        for lam, c in f.coeffs.items():
            slot = acc.setdefault(lam, {})
            slot[k] = slot.get(k, 0) + c
    out = {}
    for lam, by_deg in acc.items():
        top = max(by_deg)
        out[lam] = TPoly(tuple(by_deg.get(i, 0) for i in range(top + 1)))
    return TSymFunc(degree, out)


def t_graded(n: int) -> tuple[TSymFunc, TSymFunc]:
    """SH_n(1, t) summed over sorted naive objects weighted by area, and the
    same sum over sorted odd objects weighted by area_o.

    Both specialize to SH_n at t = 1; use :func:`t_graded_agree` to compare
    them coefficientwise.
    """
    from .parking import area, enumerate_sorted_naive, shape
    from .shifted import area_o, enumerate_sorted_odd

    naive = t_weighted_sum(
        ((area(x.p), v_func(shape(x.p))) for x in enumerate_sorted_naive(n)), n
    )
    odd = t_weighted_sum(((area_o(y), v_func(shape(y.p))) for y in enumerate_sorted_odd(n)), n)
    return naive, odd


def t_graded_agree(n: int) -> bool:
    naive, odd = t_graded(n)
    return naive == odd


def t_graded_h_pairing(f: TSymFunc) -> TPoly:
    """<f, h_n> taken coefficientwise in t."""
    out = TPoly()
    for poly in f.coeffs.values():
        out = out + poly
    return out

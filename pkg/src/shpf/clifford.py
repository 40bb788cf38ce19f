"""The Clifford algebra C_n over Q(i, sqrt 2) and the spin double cover.

Basis monomials xi_I are keyed by bitmask: bit ``i-1`` set means xi_i is a
factor.  Generators square to 1 and pairwise anticommute.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .core import Partition, is_odd, partitions_of
from .scalars import INV_SQRT2, I, RingQI2


def blade_sign(x: int, y: int) -> int:
    """Sign of xi_X * xi_Y = sign * xi_{X xor Y}: counts the transpositions
    needed to move each factor of Y left past the larger factors of X."""
    swaps = 0
    x >>= 1
    while x:
        swaps += bin(x & y).count("1")
        x >>= 1
    return -1 if swaps & 1 else 1


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class CliffordElement:
    n: int
    terms: Mapping[int, RingQI2] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for m, c in self.terms.items():
            if m >> self.n:
                raise ValueError(f"blade {indices_of(m)} exceeds n={self.n}")
            c = RingQI2.coerce(c)
            if c:
                clean[m] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def scalar(cls, n: int, c=1) -> CliffordElement:
        return cls(n, {0: RingQI2.coerce(c)})

    @classmethod
    def xi(cls, n: int, *indices: int) -> CliffordElement:
        """The product xi_{i1} xi_{i2} ... in the given order."""
        out = cls.scalar(n)
        for i in indices:
            if not 1 <= i <= n:
                raise ValueError(f"generator index {i} out of range for n={n}")
            out = out * cls(n, {1 << (i - 1): RingQI2(1)})
        return out

    def coefficient(self, indices: Iterable[int] = ()) -> RingQI2:
        return self.terms.get(mask_of(indices), RingQI2())

    def __add__(self, other: CliffordElement) -> CliffordElement:
        _same_n(self, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, RingQI2()) + c
        return CliffordElement(self.n, out)

    def __neg__(self) -> CliffordElement:
        return CliffordElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: CliffordElement) -> CliffordElement:
        return self + (-other)

    def __mul__(self, other) -> CliffordElement:
        if isinstance(other, CliffordElement):
            return clifford_mul(self, other)
        c = RingQI2.coerce(other)
        return CliffordElement(self.n, {m: c * v for m, v in self.terms.items()})

    def __rmul__(self, other) -> CliffordElement:
        return self * other


def _same_n(x: CliffordElement, y: CliffordElement) -> None:
    if x.n != y.n:
        raise ValueError(f"generator count mismatch: {x.n} vs {y.n}")


def clifford_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    _same_n(x, y)
    out: dict[int, RingQI2] = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            key = mx ^ my
            term = cx * cy
            if blade_sign(mx, my) < 0:
                term = -term
            out[key] = out.get(key, RingQI2()) + term
    return CliffordElement(x.n, out)


def embed_generator(i: int, n: int) -> CliffordElement:
    """Image of s_i: (i / sqrt 2) (xi_i - xi_{i+1})."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator s_{i} does not exist for n={n}")
    return (CliffordElement.xi(n, i) - CliffordElement.xi(n, i + 1)) * (I * INV_SQRT2)


def positive_rep_generators(lam: Partition) -> list[int]:
    """Generator indices whose product is the positive class representative:
    s_{r+1} s_{r+2} ... s_{r+lam_j-1} on each consecutive block."""
    out: list[int] = []
    r = 0
    for part in lam:
        out.extend(range(r + 1, r + part))
        r += part
    return out


def embed_positive_rep(lam: Partition, n: int | None = None) -> CliffordElement:
    if not is_odd(lam):
        raise ValueError(f"positive representatives need an odd partition, got {lam!r}")
    n = sum(lam) if n is None else n
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    out = CliffordElement.scalar(n)
    for i in positive_rep_generators(lam):
        out = out * embed_generator(i, n)
    return out


def trace_left_mul(x: CliffordElement) -> RingQI2:
    """Trace of left multiplication: only the xi_empty part has fixed points."""
    return x.coefficient(()) * (2**x.n)


def left_mul_matrix(x: CliffordElement) -> list[list[RingQI2]]:
    """Explicit 2^n x 2^n matrix of left multiplication in the xi_I basis."""
    size = 1 << x.n
    mat = [[RingQI2() for _ in range(size)] for _ in range(size)]
    for col in range(size):
        for m, c in x.terms.items():
            row = m ^ col
            mat[row][col] = mat[row][col] + (c if blade_sign(m, col) > 0 else -c)
    return mat


def matrix_trace(mat: list[list[RingQI2]]) -> RingQI2:
    out = RingQI2()
    for i, row in enumerate(mat):
        out = out + row[i]
    return out


def clifford_trace_value(lam: Partition) -> RingQI2:
    return trace_left_mul(embed_positive_rep(lam))


@dataclass
class CliffordReport:
    n: int
    traces: dict[Partition, RingQI2]
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_clifford_spin(n: int) -> CliffordReport:
    """Check trace(pi_lambda) = 2^((n + l)/2) for each odd lambda, and that the
    spin characteristic of C_n is 2^(n/2 + 1) P_n."""
    from .characters import ClassFunction, spin_characteristic_terms
    from .scalars import QSqrt2
    from .symfunc import big_p

    traces = {}
    failures = []
    for lam in partitions_of(n, "odd"):
        t = clifford_trace_value(lam)
        traces[lam] = t
        expected = RingQI2(Fraction(2) ** ((n + len(lam)) // 2))
        if t != expected:
            failures.append(f"trace at {lam}: got {t}, expected {expected}")
    psi = ClassFunction(n, "spin", {lam: t.to_qsqrt2() for lam, t in traces.items()})
    got = spin_characteristic_terms(psi)
    scale = QSqrt2.sqrt2_power(n + 2)
    want = {lam: scale * c for lam, c in big_p(n).coeffs.items()}
    if got != want:
        failures.append(f"spin characteristic of C_{n} differs from 2^(n/2+1) P_{n}")
    return CliffordReport(n, traces, failures)

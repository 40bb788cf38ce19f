"""Exact quadratic scalar rings: Q(sqrt 2) and Q(i, sqrt 2)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class QSqrt2:
    """a + b*sqrt(2) with rational a, b."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def coerce(cls, x) -> QSqrt2:
        return x if isinstance(x, QSqrt2) else cls(Fraction(x), Fraction(0))

    @classmethod
    def sqrt2_power(cls, k: int) -> QSqrt2:
        """sqrt(2)**k for any integer k."""
        q, r = divmod(k, 2)
        base = Fraction(2) ** q
        return cls(base, 0) if r == 0 else cls(0, base)

    def __add__(self, other) -> QSqrt2:
        o = QSqrt2.coerce(other)
        return QSqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> QSqrt2:
        return QSqrt2(-self.a, -self.b)

    def __sub__(self, other) -> QSqrt2:
        return self + (-QSqrt2.coerce(other))

    def __mul__(self, other) -> QSqrt2:
        o = QSqrt2.coerce(other)
        return QSqrt2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            o = QSqrt2.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt2"


@dataclass(frozen=True)
class RingQI2:
    """a + b*i + c*sqrt(2) + d*i*sqrt(2)."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def coerce(cls, x) -> RingQI2:
        if isinstance(x, RingQI2):
            return x
        if isinstance(x, QSqrt2):
            return cls(x.a, 0, x.b, 0)
        return cls(Fraction(x))

    @property
    def real(self) -> QSqrt2:
        return QSqrt2(self.a, self.c)

    @property
    def imag(self) -> QSqrt2:
        return QSqrt2(self.b, self.d)

    @classmethod
    def from_parts(cls, re: QSqrt2, im: QSqrt2) -> RingQI2:
        return cls(re.a, im.a, re.b, im.b)

    def __add__(self, other) -> RingQI2:
        o = RingQI2.coerce(other)
        return RingQI2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self) -> RingQI2:
        return RingQI2(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other) -> RingQI2:
        return self + (-RingQI2.coerce(other))

    def __mul__(self, other) -> RingQI2:
        o = RingQI2.coerce(other)
        x, y, u, v = self.real, self.imag, o.real, o.imag
        return RingQI2.from_parts(x * u - y * v, x * v + y * u)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            o = RingQI2.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.d)

    def to_qsqrt2(self) -> QSqrt2:
        if self.b or self.d:
            raise ValueError(f"{self} has a nonzero imaginary part")
        return QSqrt2(self.a, self.c)

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*i + {self.c}*sqrt2 + {self.d}*i*sqrt2"


I = RingQI2(0, 1)
SQRT2 = RingQI2(0, 0, 1)
INV_SQRT2 = RingQI2(0, 0, Fraction(1, 2))

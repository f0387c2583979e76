"""Exact arithmetic in Q(q), the rationals extended by a primitive cube root of unity.

The generator satisfies q**3 == 1 and 1 + q + q**2 == 0, so every element is
uniquely a + b*q with rational a, b, and products reduce by q**2 == -1 - q.
"""

from __future__ import annotations

from fractions import Fraction


class CycQ:
    """An element a + b*q of Q(q), stored as two exact fractions."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0) -> None:
        # arithmetic results are Fractions already; skip re-wrapping them
        self._a = a if type(a) is Fraction else Fraction(a)
        self._b = b if type(b) is Fraction else Fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def from_int(cls, n: int) -> CycQ:
        return cls(n, 0)

    def is_zero(self) -> bool:
        return not self._a and not self._b

    def is_rational(self) -> bool:
        return not self._b

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycQ(other)
        if isinstance(other, CycQ):
            return self._a == other._a and self._b == other._b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __neg__(self) -> CycQ:
        return CycQ(-self._a, -self._b)

    def __add__(self, other: CycQ | int | Fraction) -> CycQ:
        if isinstance(other, (int, Fraction)):
            other = CycQ(other)
        if not isinstance(other, CycQ):
            return NotImplemented
        return CycQ(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other: CycQ | int | Fraction) -> CycQ:
        if isinstance(other, (int, Fraction)):
            other = CycQ(other)
        if not isinstance(other, CycQ):
            return NotImplemented
        return CycQ(self._a - other._a, self._b - other._b)

    def __rsub__(self, other: int | Fraction) -> CycQ:
        return (-self) + other

    def __mul__(self, other: CycQ | int | Fraction) -> CycQ:
        if isinstance(other, (int, Fraction)):
            other = CycQ(other)
        if not isinstance(other, CycQ):
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        # the q**2 cross term folds back onto {1, q} via q**2 == -1 - q
        cross = b1 * b2
        return CycQ(a1 * a2 - cross, a1 * b2 + b1 * a2 - cross)

    __rmul__ = __mul__

    def conjugate(self) -> CycQ:
        """The image under q -> q**2, namely (a - b) - b*q."""
        return CycQ(self._a - self._b, -self._b)

    def norm(self) -> Fraction:
        """Rational norm a**2 - a*b + b**2; positive except at zero."""
        return self._a * self._a - self._a * self._b + self._b * self._b

    def inverse(self) -> CycQ:
        n = self.norm()
        if not n:
            raise ZeroDivisionError("0 has no inverse in Q(q)")
        conj = self.conjugate()
        return CycQ(conj._a / n, conj._b / n)

    def __truediv__(self, other: CycQ | int | Fraction) -> CycQ:
        if isinstance(other, (int, Fraction)):
            other = CycQ(other)
        if not isinstance(other, CycQ):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> CycQ:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("negative exponent")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        if not self._b:
            return str(self._a)
        if not self._a:
            if self._b == 1:
                return "q"
            if self._b == -1:
                return "-q"
            return f"{self._b}*q"
        sign = "+" if self._b > 0 else "-"
        return f"{self._a}{sign}{abs(self._b)}*q"

    def __repr__(self) -> str:
        return f"CycQ({self._a}, {self._b})"


def as_cycq(value: CycQ | int | Fraction) -> CycQ:
    if isinstance(value, CycQ):
        return value
    if isinstance(value, (int, Fraction)):
        return CycQ(value)
    raise TypeError(f"cannot interpret {value!r} as a Q(q) scalar")


ZERO = CycQ(0)
ONE = CycQ(1)
Q = CycQ(0, 1)

_Q_POWERS = (ONE, Q, CycQ(-1, -1))


def q_power(n: int) -> CycQ:
    """q**n, reduced by q**3 == 1."""
    return _Q_POWERS[n % 3]

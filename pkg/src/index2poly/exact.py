"""Exact arithmetic over the quadratic fields Q(sqrt(2)) and Q(sqrt(5)).

Every coordinate, distance-squared and matrix entry in this package is a
``QuadExt`` value ``a + b*sqrt(D)`` with rational ``a, b`` and a fixed
square-free radicand ``D`` in {1, 2, 5}.  ``D == 1`` denotes a plain
rational (``b`` is forced to 0) so rationals mix freely with either field.
Values from *different* irrational fields never meet in this problem
domain, and attempting to combine them raises.

Comparisons, and hence every geometric predicate downstream, are exact:
the sign of ``a + b*sqrt(D)`` is decided by comparing ``a**2`` with
``D * b**2`` in the appropriate quadrant, never by floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence, Union

Rat = Union[int, Fraction]

_ALLOWED_D = (1, 2, 5)


@total_ordering
class QuadExt:
    """a + b*sqrt(D) with exact rational a, b."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a: Rat = 0, b: Rat = 0, D: int = 1):
        if D not in _ALLOWED_D:
            raise ValueError(f"unsupported radicand {D}")
        a = Fraction(a)
        b = Fraction(b)
        if D == 1:
            # fold sqrt(1) into the rational part so rationals are canonical
            a, b = a + b, Fraction(0)
        elif b == 0:
            D = 1
        self.a = a
        self.b = b
        self.D = D

    # -- field plumbing ------------------------------------------------

    @staticmethod
    def _coerce(x: "QuadExt | Rat") -> "QuadExt":
        if isinstance(x, QuadExt):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadExt(x)
        return NotImplemented  # type: ignore[return-value]

    def _join(self, other: "QuadExt") -> int:
        """Common radicand for a binary op; rationals adapt to anything."""
        if self.D == 1:
            return other.D
        if other.D == 1 or other.D == self.D:
            return self.D
        raise ValueError(f"cannot mix sqrt({self.D}) with sqrt({other.D})")

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        D = self._join(other)
        return QuadExt(self.a + other.a, self.b + other.b, D)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.D)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        D = self._join(other)
        a = self.a * other.a + D * self.b * other.b
        b = self.a * other.b + self.b * other.a
        return QuadExt(a, b, D)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        # (a + b√D)(a - b√D) = a² - D b², nonzero unless self == 0
        n = self.a * self.a - self.D * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadExt(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadExt(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "QuadExt":
        """Galois conjugate a - b*sqrt(D)."""
        return QuadExt(self.a, -self.b, self.D)

    # -- order ----------------------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # a and b have opposite signs: sign(a + b√D) = sign(a) iff a² > D b²
        if a * a > self.D * b * b:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.a != other.a:
            return False
        if self.b == other.b == 0:
            return True
        return self.b == other.b and self._join(other) >= 1

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- misc -------------------------------------------------------------

    def is_rational(self) -> bool:
        return self.b == 0

    def sqrt(self) -> "QuadExt":
        """Exact square root when one exists in the same field.

        Handles the cases this package needs: rational squares, rational
        multiples of sqrt(D), and full a+b√D squares found by solving
        (x+y√D)² = self for rational x, y.
        """
        if self.sign() < 0:
            raise ValueError("negative value has no real square root")
        if self.b == 0:
            r = _frac_sqrt(self.a)
            if r is not None:
                return QuadExt(r)
            for D in (2, 5):
                r = _frac_sqrt(self.a / D)
                if r is not None:
                    return QuadExt(0, r, D)
            raise ValueError(f"{self} has no square root in a supported field")
        # (x + y√D)² = x² + D y² + 2xy√D  =>  x² + D y² = a, 2xy = b
        # so x² is a root of t² - a t + D (b/2)² = 0
        a, b, D = self.a, self.b, self.D
        disc = a * a - D * b * b
        rdisc = _frac_sqrt(disc)
        if rdisc is not None:
            for x2 in ((a + rdisc) / 2, (a - rdisc) / 2):
                x = _frac_sqrt(x2)
                if x is not None and x != 0:
                    y = b / (2 * x)
                    cand = QuadExt(x, y, D)
                    if cand.sign() < 0:
                        cand = -cand
                    if cand * cand == self:
                        return cand
        raise ValueError(f"{self} has no square root in Q(sqrt({self.D}))")

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def __repr__(self):
        if self.b == 0:
            return f"{self.a}"
        if self.a == 0:
            return f"{self.b}*sqrt({self.D})"
        op = "+" if self.b > 0 else "-"
        return f"({self.a} {op} {abs(self.b)}*sqrt({self.D}))"


def _frac_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    pn = math.isqrt(q.numerator)
    pd = math.isqrt(q.denominator)
    if pn * pn == q.numerator and pd * pd == q.denominator:
        return Fraction(pn, pd)
    return None


ZERO = QuadExt(0)
ONE = QuadExt(1)
SQRT2 = QuadExt(0, 1, 2)
SQRT5 = QuadExt(0, 1, 5)
PHI = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)  # golden ratio


def as_quad(x: "QuadExt | Rat") -> QuadExt:
    out = QuadExt._coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an exact number")
    return out


class Vec3(tuple):
    """Immutable 3-vector of QuadExt entries; hashable, so usable as dict keys."""

    def __new__(cls, xs: Iterable["QuadExt | Rat"]):
        entries = tuple(as_quad(x) for x in xs)
        if len(entries) != 3:
            raise ValueError("Vec3 needs exactly three entries")
        return super().__new__(cls, entries)

    def __add__(self, other):
        return Vec3(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return Vec3(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Vec3(-a for a in self)

    def scale(self, k) -> "Vec3":
        k = as_quad(k)
        return Vec3(k * a for a in self)

    def dot(self, other) -> QuadExt:
        return sum((a * b for a, b in zip(self, other)), ZERO)

    def cross(self, other) -> "Vec3":
        ax, ay, az = self
        bx, by, bz = other
        return Vec3((ay * bz - az * by, az * bx - ax * bz, ax * by - ay * bx))

    def norm2(self) -> QuadExt:
        return self.dot(self)

    def __repr__(self):
        return "Vec3(%s, %s, %s)" % self


def triple(u: Vec3, v: Vec3, w: Vec3) -> QuadExt:
    """Determinant det[u v w] (rows); orientation predicate workhorse."""
    return u.dot(v.cross(w))


class Mat3:
    """3x3 exact matrix acting on column vectors."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence["QuadExt | Rat"]]):
        self.rows = tuple(tuple(as_quad(x) for x in r) for r in rows)
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("Mat3 needs a 3x3 grid")

    @staticmethod
    def identity() -> "Mat3":
        return Mat3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    @staticmethod
    def from_columns(cols: Sequence[Vec3]) -> "Mat3":
        return Mat3([[cols[j][i] for j in range(3)] for i in range(3)])

    def column(self, j: int) -> Vec3:
        return Vec3(self.rows[i][j] for i in range(3))

    def apply(self, v: Vec3) -> Vec3:
        return Vec3(sum((r[i] * v[i] for i in range(3)), ZERO) for r in self.rows)

    def __matmul__(self, other: "Mat3") -> "Mat3":
        return Mat3(
            [
                [
                    sum((self.rows[i][k] * other.rows[k][j] for k in range(3)), ZERO)
                    for j in range(3)
                ]
                for i in range(3)
            ]
        )

    def __neg__(self) -> "Mat3":
        return Mat3([[-x for x in r] for r in self.rows])

    def transpose(self) -> "Mat3":
        return Mat3([[self.rows[j][i] for j in range(3)] for i in range(3)])

    def det(self) -> QuadExt:
        return triple(self.column(0), self.column(1), self.column(2))

    def trace(self) -> QuadExt:
        return sum((self.rows[i][i] for i in range(3)), ZERO)

    def inverse(self) -> "Mat3":
        d = self.det()
        if d.sign() == 0:
            raise ZeroDivisionError("singular matrix")
        r = self.rows
        cof = [
            [
                r[(i + 1) % 3][(j + 1) % 3] * r[(i + 2) % 3][(j + 2) % 3]
                - r[(i + 1) % 3][(j + 2) % 3] * r[(i + 2) % 3][(j + 1) % 3]
                for j in range(3)
            ]
            for i in range(3)
        ]
        inv_d = d.inverse()
        # adjugate = transpose of cofactor matrix
        return Mat3([[cof[j][i] * inv_d for j in range(3)] for i in range(3)])

    def is_orthogonal(self) -> bool:
        prod = self @ self.transpose()
        return prod == Mat3.identity()

    def __eq__(self, other):
        return isinstance(other, Mat3) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Mat3(%r)" % (self.rows,)

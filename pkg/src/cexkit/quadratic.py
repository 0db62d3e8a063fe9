"""Exact arithmetic in quadratic fields Q(√d) and small dense linear algebra
over any exact field (Fraction or QuadraticNumber entries)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact import scalar


def squarefree_part(q) -> int:
    """Squarefree integer s with q = s·r² for a rational r."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero has no squarefree part")
    m = q.numerator * q.denominator
    sign = -1 if m < 0 else 1
    m = abs(m)
    out, f = 1, 2
    while f * f <= m:
        while m % (f * f) == 0:
            m //= f * f
        if m % f == 0:
            out *= f
            m //= f
        f += 1
    return sign * out * m


class QuadraticNumber:
    """a + b√d with a, b rational and d a squarefree integer other than 0, 1."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = -1):
        if d in (0, 1) or squarefree_part(d) != d:
            raise ValueError(f"d = {d} is not a squarefree integer other than 0, 1")
        self.a = scalar(a)
        self.b = scalar(b)
        self.d = d

    def _lift(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise ValueError("numbers from different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def conjugate(self):
        return QuadraticNumber(self.a, -self.b, self.d)

    def inverse(self):
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticNumber(self.a / nm, -self.b / nm, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadraticNumber(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d) or (not self.b and not other.b
                                                                               and self.a == other.a)
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash(self.a) if not self.b else hash((self.a, self.b, self.d))

    def is_rational(self) -> bool:
        return not self.b

    def __str__(self):
        root = "i" if self.d == -1 else f"√{self.d}"
        if not self.b:
            return str(self.a)
        coef = "" if self.b == 1 else "-" if self.b == -1 else f"{self.b}·"
        if not self.a:
            return f"{coef}{root}"
        sign = "+" if self.b > 0 else "-"
        babs = abs(self.b)
        coef = "" if babs == 1 else f"{babs}·"
        return f"{self.a}{sign}{coef}{root}"

    __repr__ = __str__


def is_zero(x) -> bool:
    return not x


def field_rref(rows: Sequence[Sequence], width: int):
    """(T, R, pivots) with T·rows = R in reduced echelon form, zero rows last."""
    m = len(rows)
    one, zero = Fraction(1), Fraction(0)
    aug = [list(r) + [one if i == j else zero for j in range(m)] for i, r in enumerate(rows)]
    pivots = []
    pr = 0
    for col in range(width):
        sel = next((r for r in range(pr, m) if aug[r][col]), None)
        if sel is None:
            continue
        aug[pr], aug[sel] = aug[sel], aug[pr]
        inv = 1 / aug[pr][col]
        aug[pr] = [v * inv for v in aug[pr]]
        for r in range(m):
            if r != pr and aug[r][col]:
                c = aug[r][col]
                aug[r] = [a - c * b for a, b in zip(aug[r], aug[pr])]
        pivots.append(col)
        pr += 1
        if pr == m:
            break
    return [r[width:] for r in aug], [r[:width] for r in aug], pivots


def field_rank(rows: Sequence[Sequence], width: int) -> int:
    return len(field_rref(rows, width)[2]) if rows else 0


def field_solve(a_rows: Sequence[Sequence], rhs: Sequence, width: int):
    """(particular solution, kernel basis) of a·x = rhs, or (None, []) if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(a_rows, rhs)]
    _, red, piv = field_rref(aug, width + 1) if aug else ([], [], [])
    if width in piv:
        return None, []
    sol = [Fraction(0)] * width
    for r, c in enumerate(piv):
        sol[c] = red[r][width]
    free = [c for c in range(width) if c not in piv]
    kernel = []
    for f in free:
        v = [Fraction(0)] * width
        v[f] = Fraction(1)
        for r, c in enumerate(piv):
            v[c] = -red[r][f]
        kernel.append(v)
    return sol, kernel


def field_inverse(m: Sequence[Sequence]):
    n = len(m)
    t, red, piv = field_rref(m, n)
    if len(piv) != n:
        raise ZeroDivisionError("matrix is singular")
    return t


def field_matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = Fraction(0)
            for k, x in enumerate(row):
                if x and b[k][j]:
                    acc = acc + x * b[k][j]
            new.append(acc)
        out.append(new)
    return out


def split_parts(x):
    """(a, b) with x = a + b√d; rationals give b = 0."""
    if isinstance(x, QuadraticNumber):
        return x.a, x.b
    return scalar(x), Fraction(0)

"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields F_p (p >= 7).

Scalars are plain values supporting the usual operators: rationals are
gmpy2.mpq (fractions.Fraction as fallback), prime-field elements are GFElement.
Both are normalized on construction (lowest terms / representative in [0, p)),
so `==` is canonical equality. All generic code goes through a Field object
for zero/one/parsing and otherwise uses operators directly.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _rat

from .errors import FieldCharacteristicError, ParseError


class GFElement:
    """Residue in F_p. Supports mixed arithmetic with int (coerced mod p)."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _lift(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other.v
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        w = self._lift(other)
        if w is NotImplemented:
            return NotImplemented
        return GFElement(self.p, self.v + w)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._lift(other)
        if w is NotImplemented:
            return NotImplemented
        return GFElement(self.p, self.v - w)

    def __rsub__(self, other):
        w = self._lift(other)
        if w is NotImplemented:
            return NotImplemented
        return GFElement(self.p, w - self.v)

    def __mul__(self, other):
        w = self._lift(other)
        if w is NotImplemented:
            return NotImplemented
        return GFElement(self.p, self.v * w)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElement(self.p, -self.v)

    def __truediv__(self, other):
        w = self._lift(other)
        if w is NotImplemented:
            return NotImplemented
        if w == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return GFElement(self.p, self.v * pow(w, self.p - 2, self.p))

    def __rtruediv__(self, other):
        w = self._lift(other)
        if w is NotImplemented:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return GFElement(self.p, w * pow(self.v, self.p - 2, self.p))

    def __pow__(self, n):
        return GFElement(self.p, pow(self.v, n, self.p))

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __lt__(self, other):
        w = self._lift(other)
        if w is NotImplemented:
            return NotImplemented
        return self.v < w

    def __repr__(self):
        return f"{self.v}"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """The field Q with exact arbitrary-precision arithmetic."""

    characteristic = 0
    name = "Q"

    def __init__(self):
        self.zero = _rat(0)
        self.one = _rat(1)

    def from_int(self, n: int):
        return _rat(n)

    def coerce(self, x):
        if isinstance(x, int):
            return _rat(x)
        if isinstance(x, GFElement):
            raise ParseError("prime-field element used over Q")
        return _rat(x)

    def parse(self, s):
        if isinstance(s, int):
            return _rat(s)
        try:
            return _rat(str(s).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational coefficient {s!r}") from exc

    def fmt(self, x) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field F_p for a prime p >= 7 (characteristic 2, 3, 5 rejected)."""

    name = "Fp"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldCharacteristicError(f"{p} is not prime")
        if p in (2, 3, 5):
            raise FieldCharacteristicError(f"characteristic {p} not supported (must differ from 2, 3, 5)")
        self.p = p
        self.characteristic = p
        self.zero = GFElement(p, 0)
        self.one = GFElement(p, 1)

    def from_int(self, n: int):
        return GFElement(self.p, n)

    def coerce(self, x):
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise ParseError(f"element of F_{x.p} used over F_{self.p}")
            return x
        if isinstance(x, int):
            return GFElement(self.p, x)
        raise ParseError(f"cannot coerce {x!r} into F_{self.p}")

    def parse(self, s):
        if isinstance(s, int):
            return GFElement(self.p, s)
        text = str(s).strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return GFElement(self.p, int(num)) / GFElement(self.p, int(den))
            return GFElement(self.p, int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad F_{self.p} coefficient {s!r}") from exc

    def fmt(self, x) -> str:
        return str(x.v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F_{self.p}"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)

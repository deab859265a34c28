"""Exact scalar arithmetic over the rationals and over prime fields GF(p).

A field is represented by a :class:`Field` object; scalars are plain Python
values (``fractions.Fraction`` over Q, canonical residues ``0..p-1`` over
GF(p)).  Both representations are canonical, so ``==`` on values is structural
equality and values hash correctly as dict keys.  No rounding ever occurs.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    """Invalid field construction or scalar/field mismatch."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface: the rationals (``QQ``) or a prime field (``GF(p)``)."""

    kind: str  # "Q" or "GF"

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        raise NotImplementedError

    # -- element constructors ------------------------------------------------

    def of(self, value):
        """Coerce an int, Fraction or scalar-literal string to a field element."""
        raise NotImplementedError

    def parse(self, text: str):
        """Parse a scalar literal: an integer like ``-3`` or a fraction ``3/2``.

        Floating point is rejected.
        """
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            return self.div(self.parse(num), self.parse(den))
        try:
            n = int(text)
        except ValueError:
            raise FieldError(f"invalid scalar literal {text!r}")
        return self.of(n)

    def format(self, a) -> str:
        return str(a)

    # -- arithmetic ------------------------------------------------------------

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        return self.div(self.one, self.zero if a is None else a)

    def pow(self, a, e: int):
        if e < 0:
            return self.inv(self.pow(a, -e))
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def nth_root(self, a, n: int):
        """Some r with r**n = a, or None if no such element exists.

        Deterministic: over GF(p) the smallest canonical residue is returned
        (exhaustive search, intended for p up to ~10**4); over Q only exact
        rational roots are found.
        """
        raise NotImplementedError

    def elements(self):
        """Iterate all field elements (finite fields only)."""
        raise FieldError(f"{self} is not finite")


class RationalField(Field):
    kind = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def key(self):
        return ("Q",)

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return "Q"

    def of(self, value):
        if isinstance(value, bool) or isinstance(value, float):
            raise FieldError(f"not an exact rational: {value!r}")
        if isinstance(value, str):
            return self.parse(value)
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def neg(self, a):
        return -a

    def nth_root(self, a, n: int):
        if n < 1:
            raise ValueError("root index must be >= 1")
        a = Fraction(a)
        if n == 1:
            return a
        if a == 0:
            return Fraction(0)
        if a < 0:
            if n % 2 == 0:
                return None
            r = self.nth_root(-a, n)
            return None if r is None else -r
        num = _int_nth_root(a.numerator, n)
        den = _int_nth_root(a.denominator, n)
        if num is None or den is None:
            return None
        return Fraction(num, den)


def _int_nth_root(m: int, n: int):
    """Exact n-th root of a positive integer, or None."""
    lo, hi = 0, 1
    while hi**n < m:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**n < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**n == m else None


class PrimeField(Field):
    kind = "GF"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"modulus {p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def key(self):
        return ("GF", self.p)

    def __repr__(self):
        return f"GF({self.p})"

    __str__ = __repr__

    def of(self, value):
        if isinstance(value, bool) or isinstance(value, float):
            raise FieldError(f"not an exact value: {value!r}")
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return value % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero")
        return (a * pow(b, -1, self.p)) % self.p

    def neg(self, a):
        return (-a) % self.p

    def nth_root(self, a, n: int):
        if n < 1:
            raise ValueError("root index must be >= 1")
        a %= self.p
        for r in range(self.p):  # exhaustive: fine for the small p used here
            if pow(r, n, self.p) == a:
                return r
        return None

    def elements(self):
        return range(self.p)


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    f = _gf_cache.get(p)
    if f is None:
        f = _gf_cache[p] = PrimeField(p)
    return f


def parse_field(text: str) -> Field:
    """Field spec syntax used by the CLI and file format: ``Q`` or ``GF(p)``."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("GF(") and text.endswith(")"):
        try:
            p = int(text[3:-1])
        except ValueError:
            raise FieldError(f"bad field spec {text!r}")
        return GF(p)
    # bare prime, e.g. "--field 7"
    try:
        return GF(int(text))
    except (ValueError, FieldError):
        raise FieldError(f"bad field spec {text!r}")

"""Prime field arithmetic and the quantum characteristic of ``q``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .errors import PreconditionError


class ContextMismatch(ValueError):
    pass


def is_prime(p: int) -> bool:
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


@total_ordering
class FieldElement:
    """An element of F_p, stored as its least non-negative residue."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = int(value) % p

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ContextMismatch(f"cannot combine F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def _make(self, v: int) -> "FieldElement":
        return FieldElement(v, self.p)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.value)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return self._make(pow(self.value, -1, self.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * self._make(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._make(o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return self._make(pow(self.value, k, self.p))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __lt__(self, other):
        return self.value < self._coerce(other)

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElement({self.value}, p={self.p})"


# Functional spellings of the arithmetic operators.
def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def neg(x: FieldElement) -> FieldElement:
    return -x


def inverse(x: FieldElement) -> FieldElement:
    return x.inverse()


def quantum_characteristic(p: int, q) -> int:
    """Least ``e >= 1`` with ``1 + q + ... + q^(e-1) == 0`` in F_p.

    For ``q != 1`` this is the multiplicative order of ``q``; for ``q == 1``
    the sum is ``e`` itself, so the answer is ``p``.
    """
    q = int(q) % p
    if q == 0:
        raise PreconditionError("q must be nonzero")
    total, power = 0, 1
    for e in range(1, p + 1):
        total = (total + power) % p
        if total == 0:
            return e
        power = power * q % p
    raise AssertionError("unreachable for prime p")  # pragma: no cover


def multiplicative_order(p: int, x: int) -> int:
    x %= p
    if x == 0:
        raise PreconditionError("0 has no multiplicative order")
    k, y = 1, x
    while y != 1:
        y = y * x % p
        k += 1
    return k


def smallest_of_order(p: int, e: int) -> int:
    """Smallest ``q`` in ``2..p-1`` whose multiplicative order is ``e``."""
    if e < 2 or (p - 1) % e:
        raise PreconditionError(f"F_{p} has no element of order {e}; need e | p-1")
    for q in range(2, p):
        if multiplicative_order(p, q) == e:
            return q
    raise PreconditionError(f"F_{p} has no element of order {e}")  # pragma: no cover


@dataclass(frozen=True)
class FieldContext:
    """The field F_p together with the quantum parameter ``q`` and its ``e``."""

    p: int
    q: int
    e: int = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise PreconditionError(f"{self.p} is not prime")
        if self.p >= 2**31:
            raise PreconditionError("modulus must be below 2**31")
        q = self.q % self.p
        if q in (0, 1):
            raise PreconditionError("q must differ from 0 and 1")
        object.__setattr__(self, "q", q)
        e = quantum_characteristic(self.p, q)
        if self.e and self.e != e:
            raise PreconditionError(f"q={q} has quantum characteristic {e}, not {self.e}")
        object.__setattr__(self, "e", e)

    @classmethod
    def with_order(cls, p: int, e: int) -> "FieldContext":
        return cls(p, smallest_of_order(p, e), e)

    def element(self, value: int) -> FieldElement:
        return FieldElement(value, self.p)

    def inv(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(value, -1, self.p)

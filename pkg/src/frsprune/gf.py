"""Prime field arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DivisionByZero, NotPrime


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def inv(a: int, q: int) -> int:
    """Inverse of ``a`` modulo ``q`` by the extended Euclidean algorithm."""
    a %= q
    if a == 0:
        raise DivisionByZero(f"0 has no inverse in F_{q}")
    r0, r1 = q, a
    t0, t1 = 0, 1
    while r1:
        quot = r0 // r1
        r0, r1 = r1, r0 - quot * r1
        t0, t1 = t1, t0 - quot * t1
    return t0 % q


def multiplicative_order(a: int, q: int) -> int:
    a %= q
    if a == 0:
        raise DivisionByZero("0 has no multiplicative order")
    order = q - 1
    for p in prime_factors(q - 1):
        while order % p == 0 and pow(a, order // p, q) == 1:
            order //= p
    return order


@lru_cache(maxsize=None)
def _primitive_root(q: int) -> int:
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    factors = prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in factors):
            return g
    raise NotPrime(f"no primitive root modulo {q}")  # unreachable for prime q >= 3


@dataclass(frozen=True)
class FieldElement:
    """An element of F_q, stored as its canonical representative in [0, q)."""

    value: int
    q: int

    def __post_init__(self):
        if not 0 <= self.value < self.q:
            object.__setattr__(self, "value", self.value % self.q)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.q != self.q:
                raise ValueError(f"modulus mismatch: F_{self.q} vs F_{other.q}")
            return other.value
        if isinstance(other, int):
            return other % self.q
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement((self.value + b) % self.q, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement((self.value - b) % self.q, self.q)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement((b - self.value) % self.q, self.q)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.value * b % self.q, self.q)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.value * inv(b, self.q) % self.q, self.q)

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(b * inv(self.value, self.q) % self.q, self.q)

    def __neg__(self):
        return FieldElement(-self.value % self.q, self.q)

    def __pow__(self, e: int):
        if e < 0:
            return FieldElement(pow(inv(self.value, self.q), -e, self.q), self.q)
        return FieldElement(pow(self.value, e, self.q), self.q)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def inverse(self) -> FieldElement:
        return FieldElement(inv(self.value, self.q), self.q)

    def order(self) -> int:
        return multiplicative_order(self.value, self.q)

    def __str__(self):
        return str(self.value)


class PrimeField:
    """F_q for a prime q; a thin factory for :class:`FieldElement`."""

    def __init__(self, q: int):
        if not is_prime(q):
            raise NotPrime(f"{q} is not prime")
        self.q = q

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.q, self.q)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("F", self.q))

    def __repr__(self):
        return f"PrimeField({self.q})"

    def elements(self):
        return [FieldElement(v, self.q) for v in range(self.q)]


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply ``op`` (one of add, sub, mul, div) to two elements of the same field."""
    if a.q != b.q:
        raise ValueError(f"modulus mismatch: F_{a.q} vs F_{b.q}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field op {op!r}")


def primitive_element(q: int) -> FieldElement:
    """Smallest generator of F_q^*; raises NotPrime for composite q."""
    if q < 3:
        if not is_prime(q):
            raise NotPrime(f"{q} is not prime")
        raise ValueError("primitive_element needs q >= 3")
    return FieldElement(_primitive_root(q), q)

"""Dense univariate polynomials over F_q."""

from __future__ import annotations

from collections.abc import Sequence

from .errors import DegreeTooHigh, OrderTooSmall
from .gf import FieldElement, multiplicative_order


class Polynomial:
    """Coefficients low-degree first, normalized to drop trailing zeros.

    ``degree_bound`` (if given) is an exclusive bound: the coefficient list
    may have at most that many entries.
    """

    __slots__ = ("coeffs", "q", "degree_bound")

    def __init__(self, coeffs: Sequence[int], q: int, degree_bound: int | None = None):
        c = [int(x) % q for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        if degree_bound is not None and len(c) > degree_bound:
            raise DegreeTooHigh(f"degree {len(c) - 1} not below bound {degree_bound}")
        self.coeffs = tuple(c)
        self.q = q
        self.degree_bound = degree_bound

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, Polynomial) and (self.q, self.coeffs) == (other.q, other.coeffs)

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)}, q={self.q})"

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)], self.q)

    def scale(self, a: int) -> Polynomial:
        return Polynomial([a * x for x in self.coeffs], self.q)

    def __call__(self, x) -> int:
        return eval_poly(self, x)

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    @classmethod
    def from_text(cls, text: str, q: int, degree_bound: int | None = None) -> Polynomial:
        return cls([int(tok) for tok in text.split()], q, degree_bound)


def eval_poly(f: Polynomial, x) -> int:
    """Horner evaluation; returns a plain int in [0, q)."""
    q = f.q
    x = int(x) % q
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * x + c) % q
    return acc


def evaluate(f: Polynomial, x) -> FieldElement:
    return FieldElement(eval_poly(f, x), f.q)


def eval_geometric(f: Polynomial, gamma, n: int) -> list[int]:
    """[f(1), f(gamma), ..., f(gamma^(n-1))]."""
    q = f.q
    g = int(gamma) % q
    if n > 1 and (g == 0 or multiplicative_order(g, q) < n):
        raise OrderTooSmall(f"order of {g} in F_{q} is below {n}")
    out = []
    x = 1
    for _ in range(n):
        out.append(eval_poly(f, x))
        x = x * g % q
    return out

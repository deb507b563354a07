"""Folded Reed-Solomon codes: parameters, words, encoding and the channel."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import BadParams, DegreeTooHigh, ShapeMismatch, TooManyErrors
from .gf import is_prime, multiplicative_order, primitive_element
from .poly import Polynomial


@dataclass(frozen=True)
class FrsParams:
    q: int
    n: int
    m: int
    Rn: int
    gamma: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise BadParams(f"q={self.q} is not prime")
        if self.m < 1 or self.n % self.m:
            raise BadParams(f"m={self.m} must divide n={self.n}")
        if self.q <= self.n:
            raise BadParams(f"need q > n, got q={self.q}, n={self.n}")
        if not 1 <= self.Rn < self.n:
            raise BadParams(f"need 1 <= Rn < n, got Rn={self.Rn}")
        if multiplicative_order(self.gamma, self.q) < self.n:
            raise BadParams(f"gamma={self.gamma} has order below n={self.n}")

    @classmethod
    def create(cls, q: int, n: int, m: int, Rn: int) -> FrsParams:
        return cls(q, n, m, Rn, int(primitive_element(q)))

    @property
    def N(self) -> int:
        return self.n // self.m

    @property
    def R(self) -> Fraction:
        return Fraction(self.Rn, self.n)

    @property
    def design_distance(self) -> Fraction:
        """1 - R; a lower bound on the true folded distance."""
        return 1 - self.R

    @property
    def true_distance(self) -> Fraction:
        return 1 - Fraction((self.Rn - 1) // self.m, self.N)

    @cached_property
    def points(self) -> np.ndarray:
        """gamma^t for t < n, shaped (N, m) so points[i, j] = gamma^(i*m + j)."""
        out = np.empty(self.n, dtype=np.int64)
        x = 1
        for t in range(self.n):
            out[t] = x
            x = x * self.gamma % self.q
        return out.reshape(self.N, self.m)


class FoldedWord:
    """An element of (F_q^m)^N held as a read-only (N, m) int64 array."""

    __slots__ = ("symbols", "q", "_key")

    def __init__(self, symbols, q: int):
        arr = np.array(symbols, dtype=np.int64) % q
        if arr.ndim != 2:
            raise ShapeMismatch(f"expected a 2-d (N, m) array, got shape {arr.shape}")
        arr.setflags(write=False)
        self.symbols = arr
        self.q = q
        self._key = None

    @property
    def N(self) -> int:
        return self.symbols.shape[0]

    @property
    def m(self) -> int:
        return self.symbols.shape[1]

    def key(self) -> bytes:
        """Canonical byte serialization; equal words have equal keys."""
        if self._key is None:
            self._key = self.q.to_bytes(8, "little") + self.symbols.tobytes()
        return self._key

    def __eq__(self, other):
        return isinstance(other, FoldedWord) and self.symbols.shape == other.symbols.shape and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        cols = ", ".join("(" + ",".join(str(x) for x in col) + ")" for col in self.symbols)
        return f"FoldedWord([{cols}], q={self.q})"

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.symbols[i])

    def __add__(self, other: FoldedWord) -> FoldedWord:
        _check_shape(self, other)
        return FoldedWord(self.symbols + other.symbols, self.q)

    def __sub__(self, other: FoldedWord) -> FoldedWord:
        _check_shape(self, other)
        return FoldedWord(self.symbols - other.symbols, self.q)

    def scale(self, a: int) -> FoldedWord:
        return FoldedWord(self.symbols * (a % self.q), self.q)

    def is_zero(self) -> bool:
        return not self.symbols.any()

    @classmethod
    def zeros(cls, N: int, m: int, q: int) -> FoldedWord:
        return cls(np.zeros((N, m), dtype=np.int64), q)


def _check_shape(u: FoldedWord, v: FoldedWord):
    if u.symbols.shape != v.symbols.shape or u.q != v.q:
        raise ShapeMismatch(f"shape {u.symbols.shape}/F_{u.q} vs {v.symbols.shape}/F_{v.q}")


def encode_many(params: FrsParams, coeffs) -> np.ndarray:
    """Encode a batch of messages, one per row of ``coeffs`` (shape (M, Rn)).

    Returns an (M, N, m) array. Horner evaluation keeps every intermediate
    below q^2, so int64 is safe for any q < 2^31.
    """
    coeffs = np.asarray(coeffs, dtype=np.int64) % params.q
    if coeffs.ndim != 2 or coeffs.shape[1] > params.Rn:
        raise DegreeTooHigh(f"messages need at most {params.Rn} coefficients")
    x = params.points.reshape(-1)
    acc = np.zeros((coeffs.shape[0], params.n), dtype=np.int64)
    for j in range(coeffs.shape[1] - 1, -1, -1):
        acc = (acc * x + coeffs[:, j : j + 1]) % params.q
    return acc.reshape(-1, params.N, params.m)


def encode(params: FrsParams, f: Polynomial) -> FoldedWord:
    if f.q != params.q:
        raise BadParams(f"polynomial over F_{f.q}, code over F_{params.q}")
    if len(f.coeffs) > params.Rn:
        raise DegreeTooHigh(f"deg f = {f.degree} is not below Rn = {params.Rn}")
    if f.is_zero():
        return FoldedWord.zeros(params.N, params.m, params.q)
    return FoldedWord(encode_many(params, [list(f.coeffs)])[0], params.q)


def agreement(u: FoldedWord, v: FoldedWord) -> int:
    """Number of folded positions where u and v agree."""
    _check_shape(u, v)
    return int(np.all(u.symbols == v.symbols, axis=1).sum())


def folded_distance(u: FoldedWord, v: FoldedWord) -> Fraction:
    return Fraction(u.N - agreement(u, v), u.N)


def corrupt(c: FoldedWord, e: int, rng_seed: int) -> FoldedWord:
    """Replace exactly ``e`` uniformly chosen symbols by different uniform symbols."""
    if not 0 <= e <= c.N:
        raise TooManyErrors(f"cannot corrupt {e} of {c.N} symbols")
    rng = np.random.default_rng(rng_seed)
    out = c.symbols.copy()
    for i in sorted(rng.choice(c.N, size=e, replace=False).tolist()):
        while True:
            col = rng.integers(0, c.q, size=c.m)
            if not np.array_equal(col, c.symbols[i]):
                break
        out[i] = col
    return FoldedWord(out, c.q)


def decoding_radius(s: int, m: int, R) -> Fraction:
    """s/(s+1) * (1 - mR/(m - s + 1)) as an exact rational."""
    R = Fraction(R)
    if not 1 <= s <= m:
        raise BadParams(f"need 1 <= s <= m, got s={s}, m={m}")
    if not 0 < R < 1:
        raise BadParams(f"need 0 < R < 1, got {R}")
    return Fraction(s, s + 1) * (1 - m * R / (m - s + 1))


# word file: header "q n m N", then N lines of m decimal integers


def format_word(word: FoldedWord, n: int | None = None) -> str:
    n = word.N * word.m if n is None else n
    lines = [f"{word.q} {n} {word.m} {word.N}"]
    lines += [" ".join(str(int(x)) for x in col) for col in word.symbols]
    return "\n".join(lines) + "\n"


def parse_word(text: str) -> FoldedWord:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ShapeMismatch("empty word file")
    try:
        q, n, m, N = (int(t) for t in lines[0].split())
    except ValueError as exc:
        raise ShapeMismatch(f"bad header {lines[0]!r}; expected 'q n m N'") from exc
    if n != m * N:
        raise ShapeMismatch(f"header says n={n} but m*N={m * N}")
    rows = [[int(t) for t in ln.split()] for ln in lines[1:]]
    if len(rows) != N or any(len(r) != m for r in rows):
        raise ShapeMismatch(f"expected {N} lines of {m} integers")
    if any(not 0 <= x < q for r in rows for x in r):
        raise ShapeMismatch(f"symbol entries must lie in [0, {q})")
    return FoldedWord(np.array(rows, dtype=np.int64).reshape(N, m), q)


def write_word(path, word: FoldedWord) -> None:
    Path(path).write_text(format_word(word))


def read_word(path) -> FoldedWord:
    return parse_word(Path(path).read_text())


def message_of(params: FrsParams, word: FoldedWord):
    """Coefficients (length Rn) of the message encoding to ``word``, or None."""
    from .linalg import reduce_system, solve_affine

    q, Rn = params.q, params.Rn
    flat = word.symbols.reshape(-1)
    xs = params.points.reshape(-1)
    rows = []
    for t in range(Rn):
        x = int(xs[t])
        rows.append(tuple(pow(x, j, q) for j in range(Rn)) + (int(flat[t]),))
    red = reduce_system(rows, Rn, q)
    coeffs, _ = solve_affine(red, Rn, q)
    if not np.array_equal(encode_many(params, [coeffs])[0], word.symbols):
        return None
    return coeffs


def is_codeword(params: FrsParams, word: FoldedWord) -> bool:
    return word.q == params.q and word.symbols.shape == (params.N, params.m) and message_of(params, word) is not None

"""Affine subspaces of a code, kept in basis form and RREF constraint form.

An :class:`Ambient` fixes a base point h0 and independent directions
h1..hK. Every :class:`AffineSubspace` over it is the solution set of an RREF
system in the coefficients (alpha_1, ..., alpha_K), so two subspaces of the
same ambient are equal exactly when their RREF rows are equal.
"""

from __future__ import annotations

import itertools
import os
import struct
from pathlib import Path

import numpy as np

from .errors import AmbientMismatch, BadParams, BudgetExceeded, ShapeMismatch
from .frs import FoldedWord, format_word, parse_word
from .linalg import rank, reduce_system, solve_affine

DEFAULT_BUDGET = 10**6


def enumeration_budget(default: int = DEFAULT_BUDGET) -> int:
    """Budget for brute-force enumeration; ``FRS_BUDGET`` overrides it."""
    env = os.environ.get("FRS_BUDGET")
    return int(env) if env else default


class EmptySpace:
    """The empty affine space. Its dimension compares below every integer."""

    _instance = None
    dim = float("-inf")

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EMPTY"

    def __bool__(self):
        return False

    def key(self) -> bytes:
        return EMPTY_KEY


EMPTY = EmptySpace()
EMPTY_KEY = b"empty"


def is_empty(H) -> bool:
    return H is EMPTY


class Ambient:
    """Outer basis h0 + sum alpha_r h_r that all derived subspaces refer to."""

    def __init__(self, base: FoldedWord, directions, params=None, check: bool = True):
        directions = tuple(directions)
        for d in directions:
            if d.symbols.shape != base.symbols.shape or d.q != base.q:
                raise ShapeMismatch("directions must match the base point's shape and field")
        self.q = base.q
        self.base = base
        self.directions = directions
        self.params = params
        self.N, self.m = base.symbols.shape
        self.K = len(directions)
        self.dir_array = (
            np.stack([d.symbols for d in directions]) if directions else np.zeros((0, self.N, self.m), dtype=np.int64)
        )
        if check and self.K and rank(self.dir_array.reshape(self.K, -1), self.q) != self.K:
            raise BadParams("direction words are linearly dependent")
        self._coord_cache: dict[bytes, list] = {}

    def point(self, alphas) -> FoldedWord:
        arr = self.base.symbols.copy()
        for a, d in zip(alphas, self.dir_array):
            if a:
                arr = arr + int(a) * d
        return FoldedWord(arr, self.q)

    def coordinates_of(self, word: FoldedWord):
        """alphas with point(alphas) == word, or None if word is off the ambient."""
        target = (word.symbols - self.base.symbols).reshape(-1) % self.q
        if self.K == 0:
            return () if not target.any() else None
        A = self.dir_array.reshape(self.K, -1).T
        rows = [tuple(int(x) for x in A[t]) + (int(target[t]),) for t in range(A.shape[0])]
        red = reduce_system(rows, self.K, self.q)
        if red is None:
            return None
        particular, _ = solve_affine(red, self.K, self.q)
        return particular

    def coordinate_rows(self, g: FoldedWord) -> list:
        """Per coordinate i, the RREF rows of {alphas : point(alphas)(i) = g(i)} (None if empty)."""
        if g.symbols.shape != self.base.symbols.shape or g.q != self.q:
            raise ShapeMismatch("received word does not match the ambient shape")
        key = g.key()
        cached = self._coord_cache.get(key)
        if cached is not None:
            return cached
        rhs = (g.symbols - self.base.symbols) % self.q
        out = []
        for i in range(self.N):
            rows = []
            for j in range(self.m):
                coeffs = tuple(int(self.dir_array[r, i, j]) for r in range(self.K))
                rows.append(coeffs + (int(rhs[i, j]),))
            out.append(reduce_system(rows, self.K, self.q))
        if len(self._coord_cache) > 8:
            self._coord_cache.clear()
        self._coord_cache[key] = out
        return out

    def full(self) -> AffineSubspace:
        return AffineSubspace(self, ())


class AffineSubspace:
    """Solution set of an RREF system ``rows`` in the ambient's alpha variables."""

    __slots__ = ("ambient", "rows", "_key", "_basis")

    def __init__(self, ambient: Ambient, rows=()):
        self.ambient = ambient
        self.rows = tuple(rows)
        self._key = None
        self._basis = None

    @property
    def dim(self) -> int:
        return self.ambient.K - len(self.rows)

    @property
    def q(self) -> int:
        return self.ambient.q

    def key(self) -> bytes:
        if self._key is None:
            K = self.ambient.K
            flat = [x for row in self.rows for x in row]
            self._key = struct.pack(f"<II{len(flat)}q", K, len(self.rows), *flat)
        return self._key

    def __eq__(self, other):
        return isinstance(other, AffineSubspace) and other.ambient is self.ambient and other.rows == self.rows

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"AffineSubspace(dim={self.dim}, K={self.ambient.K}, rows={list(self.rows)})"

    def alpha_basis(self):
        """(particular alphas, direction alpha-vectors) describing this space."""
        return solve_affine(self.rows, self.ambient.K, self.q)

    def basis(self) -> tuple[FoldedWord, list[FoldedWord]]:
        """Base point and independent direction words of this subspace."""
        if self._basis is None:
            amb = self.ambient
            particular, dirs = self.alpha_basis()
            base = amb.point(particular)
            zero = Ambient(FoldedWord.zeros(amb.N, amb.m, amb.q), amb.directions, check=False)
            self._basis = (base, [zero.point(d) for d in dirs])
        return self._basis

    def unique_point(self) -> FoldedWord:
        if self.dim != 0:
            raise ValueError(f"space has dimension {self.dim}, not 0")
        return self.basis()[0]

    def contains(self, word: FoldedWord) -> bool:
        alphas = self.ambient.coordinates_of(word)
        if alphas is None:
            return False
        q = self.q
        K = self.ambient.K
        return all(sum(c * a for c, a in zip(row[:K], alphas)) % q == row[K] for row in self.rows)

    def as_ambient(self) -> Ambient:
        """A fresh ambient whose full space is this subspace."""
        base, dirs = self.basis()
        return Ambient(base, dirs, params=self.ambient.params, check=False)


def from_basis(base: FoldedWord, directions, params=None) -> AffineSubspace:
    return Ambient(base, directions, params).full()


def _same_ambient(H1: AffineSubspace, H2: AffineSubspace):
    if H1.ambient is not H2.ambient:
        raise AmbientMismatch("subspaces are expressed over different ambient bases")


def restrict(H: AffineSubspace, rows):
    """H intersected with extra constraint rows (in H's ambient variables)."""
    if not rows:
        return H
    red = reduce_system(H.rows + tuple(rows), H.ambient.K, H.q)
    if red is None:
        return EMPTY
    return AffineSubspace(H.ambient, red)


def condition(H, g: FoldedWord, i: int):
    """{h in H : h(i) = g(i)} or EMPTY."""
    if H is EMPTY:
        return EMPTY
    if not 0 <= i < H.ambient.N:
        raise IndexError(f"coordinate {i} out of range [0, {H.ambient.N})")
    rows_i = H.ambient.coordinate_rows(g)[i]
    if rows_i is None:
        return EMPTY
    return restrict(H, rows_i)


def condition_all(H, g: FoldedWord) -> list:
    """condition(H, g, i) for every coordinate i."""
    if H is EMPTY:
        return [EMPTY] * g.N
    coord = H.ambient.coordinate_rows(g)
    out = []
    for rows_i in coord:
        out.append(EMPTY if rows_i is None else restrict(H, rows_i))
    return out


def intersect(H1, H2):
    if H1 is EMPTY or H2 is EMPTY:
        return EMPTY
    _same_ambient(H1, H2)
    if H1.rows == H2.rows:
        return H1
    return restrict(H1, H2.rows)


def canonical_key(H) -> bytes:
    """Serialized RREF system; equal keys iff equal sets within one ambient."""
    if H is EMPTY:
        return EMPTY_KEY
    return H.key()


def enumerate_points(H, budget: int | None = None) -> set[FoldedWord]:
    """All q^dim points of H."""
    if H is EMPTY:
        return set()
    budget = enumeration_budget() if budget is None else budget
    q, k = H.q, H.dim
    if q**k > budget:
        raise BudgetExceeded(f"{q}^{k} points exceed the enumeration budget {budget}")
    base, dirs = H.basis()
    if k == 0:
        return {base}
    D = np.stack([d.symbols for d in dirs])
    coeffs = np.array(list(itertools.product(range(q), repeat=k)), dtype=np.int64)
    pts = (base.symbols[None] + np.tensordot(coeffs, D, axes=1)) % q
    return {FoldedWord(p, q) for p in pts}


def span_dimension(words, q: int) -> int:
    """Dimension of the affine span of ``words`` (-1 for an empty collection)."""
    words = list(words)
    if not words:
        return -1
    base = words[0].symbols.reshape(-1)
    diffs = np.array([w.symbols.reshape(-1) - base for w in words[1:]], dtype=np.int64) % q
    return rank(diffs, q) if len(diffs) else 0


# subspace file: header "q k", then k+1 word blocks (base point, then directions)


def format_subspace(H) -> str:
    if H is EMPTY:
        raise ValueError("the empty space has no basis to serialize")
    base, dirs = H.basis()
    parts = [f"{H.q} {len(dirs)}\n", format_word(base)]
    parts += [format_word(d) for d in dirs]
    return "".join(parts)


def parse_subspace(text: str, params=None) -> AffineSubspace:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    try:
        q, k = (int(t) for t in lines[0].split())
    except (ValueError, IndexError) as exc:
        raise ShapeMismatch("bad subspace header; expected 'q k'") from exc
    words = []
    pos = 1
    for _ in range(k + 1):
        if pos >= len(lines):
            raise ShapeMismatch("subspace file is truncated")
        N = int(lines[pos].split()[3])
        words.append(parse_word("\n".join(lines[pos : pos + N + 1])))
        pos += N + 1
    if any(w.q != q for w in words):
        raise ShapeMismatch("word field does not match subspace header")
    return from_basis(words[0], words[1:], params)


def write_subspace(path, H) -> None:
    Path(path).write_text(format_subspace(H))


def read_subspace(path, params=None) -> AffineSubspace:
    return parse_subspace(Path(path).read_text(), params)

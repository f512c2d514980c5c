"""Binary linear codes in standard form and their binomial ideals.

Words are tuples of 0/1 ints; coordinate 1 is the leftmost entry and
corresponds to the variable X1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .algebra import LEX, GroebnerBasis, Polynomial
from .errors import (
    DimensionError,
    DomainError,
    NotStandardizableError,
    RankDeficiencyError,
    ResourceLimitError,
)

Word = tuple[int, ...]

DEFAULT_ENUMERATION_CAP = 24


def parse_word(bits: str, length: int | None = None) -> Word:
    bits = bits.strip()
    if not bits or any(ch not in "01" for ch in bits):
        raise ValueError(f"not a bit string: {bits!r}")
    if length is not None and len(bits) != length:
        raise DimensionError(f"expected {length} bits, got {len(bits)}")
    return tuple(int(ch) for ch in bits)


def format_word(w: Sequence[int]) -> str:
    return "".join(str(b) for b in w)


def support(w: Sequence[int]) -> set[int]:
    """1-based positions of the nonzero entries."""
    return {i for i, b in enumerate(w, 1) if b}


def weight(w: Sequence[int]) -> int:
    return sum(1 for b in w if b)


def xor(a: Sequence[int], b: Sequence[int]) -> Word:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return tuple(x ^ y for x, y in zip(a, b))


def distance(a: Sequence[int], b: Sequence[int]) -> int:
    return weight(xor(a, b))


def unit_word(i: int, n: int) -> Word:
    """Word with a single 1 at 1-based position i."""
    return tuple(int(j == i) for j in range(1, n + 1))


def word_to_int(w: Sequence[int]) -> int:
    """Pack a word into an int, coordinate 1 most significant."""
    v = 0
    for b in w:
        v = (v << 1) | b
    return v


def int_to_word(v: int, n: int) -> Word:
    return tuple((v >> (n - 1 - i)) & 1 for i in range(n))


def to_monomial(w: Sequence[int]) -> Polynomial:
    """X^w; the zero word maps to the constant 1."""
    if any(b not in (0, 1) for b in w):
        raise DomainError(f"not a binary word: {w}")
    return Polynomial.monomial(tuple(w))


def from_monomial(m: Sequence[int]) -> Word:
    if any(e not in (0, 1) for e in m):
        raise DomainError(f"monomial {tuple(m)} is not squarefree")
    return tuple(m)


def word_binomial(w: Sequence[int]) -> Polynomial:
    """X^w - 1, which is the zero polynomial for the zero word."""
    n = len(w)
    return to_monomial(w) + Polynomial.one(n)


@dataclass(frozen=True)
class LinearCode:
    """Binary [n, k] code given by a generator matrix (I_k | M)."""

    n: int
    generator: tuple[Word, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(b) for b in row) for row in self.generator)
        object.__setattr__(self, "generator", rows)
        for row in rows:
            if len(row) != self.n:
                raise DimensionError(f"row of length {len(row)} in a length-{self.n} code")
            if any(b not in (0, 1) for b in row):
                raise ValueError("generator entries must be 0 or 1")
        if len(rows) > self.n:
            raise DimensionError("more rows than columns")

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def parity(self) -> tuple[Word, ...]:
        """The k x (n - k) block M."""
        return tuple(row[self.k:] for row in self.generator)

    def is_standard_form(self) -> bool:
        k = self.k
        return all(row[:k] == unit_word(i, k) for i, row in enumerate(self.generator, 1))

    def encode(self, message: Sequence[int]) -> Word:
        return encode(message, self)

    @cached_property
    def _distance(self) -> tuple[int, int]:
        return min_distance(self)

    @property
    def d(self) -> int:
        return self._distance[0]

    @property
    def t(self) -> int:
        return self._distance[1]

    def codewords(self):
        """Iterate all 2^k codewords in message order."""
        for v in range(2 ** self.k):
            yield self.encode(int_to_word(v, self.k))


def standardize(raw: Sequence[Sequence[int]], n: int | None = None) -> LinearCode:
    """Row-reduce a k x n bit matrix over F_2 into the form (I_k | M).

    Only row operations are used, so the code (the row space) is unchanged.
    """
    rows = [list(int(b) for b in r) for r in raw]
    if n is None:
        if not rows:
            raise ValueError("cannot infer n from an empty matrix")
        n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DimensionError("rows have different lengths")
    k = len(rows)
    if k > n:
        raise RankDeficiencyError(f"{k} rows cannot be independent in length {n}")
    if _rank(rows) < k:
        raise RankDeficiencyError("generator rows are linearly dependent")
    for col in range(k):
        pivot = next((r for r in range(col, k) if rows[r][col]), None)
        if pivot is None:
            raise NotStandardizableError(
                f"column {col + 1} has no pivot; the first {k} columns are singular "
                "(column permutations are not supported)"
            )
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(k):
            if r != col and rows[r][col]:
                rows[r] = [a ^ b for a, b in zip(rows[r], rows[col])]
    return LinearCode(n, tuple(tuple(r) for r in rows))


def _rank(rows: list[list[int]]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        v = word_to_int(r)
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def parse_matrix(text: str) -> list[Word]:
    """Rows of a matrix file: one row per non-blank line, spaces ignored."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.replace(" ", "").strip()
        if not line:
            continue
        if any(ch not in "01" for ch in line):
            raise ValueError(f"line {lineno}: only 0 and 1 are allowed")
        rows.append(tuple(int(ch) for ch in line))
    if not rows:
        raise ValueError("matrix file has no rows")
    if len({len(r) for r in rows}) != 1:
        raise ValueError("matrix rows have different lengths")
    return rows


def read_matrix(path: str | Path) -> LinearCode:
    return standardize(parse_matrix(Path(path).read_text(encoding="utf-8")))


def encode(message: Sequence[int], code: LinearCode) -> Word:
    if len(message) != code.k:
        raise DimensionError(f"message must have {code.k} bits, got {len(message)}")
    c = [0] * code.n
    for bit, row in zip(message, code.generator):
        if bit:
            c = [a ^ b for a, b in zip(c, row)]
    return tuple(c)


def ideal_generators(code: LinearCode) -> list[Polynomial]:
    """Row binomials X^r - 1 followed by the field binomials X_j^2 - 1."""
    n = code.n
    gens = [word_binomial(row) for row in code.generator if any(row)]
    gens += [Polynomial.variable(j, n, 2) + Polynomial.one(n) for j in range(1, n + 1)]
    return gens


def closed_form_basis(code: LinearCode) -> GroebnerBasis:
    """Reduced lex basis {X_i + X^{m_i}}_{i<=k} U {X_j^2 + 1}_{j>k} of the code ideal."""
    if not code.is_standard_form():
        raise DomainError("closed form needs a generator matrix in standard form")
    n, k = code.n, code.k
    one = Polynomial.one(n)
    elements = []
    for i, row in enumerate(code.generator, 1):
        tail = (0,) * k + tuple(row[k:])
        elements.append(Polynomial.variable(i, n) + Polynomial.monomial(tail))
    for j in range(k + 1, n + 1):
        elements.append(Polynomial.variable(j, n, 2) + one)
    if not elements:
        raise DomainError("length-0 code has an empty ring")
    return GroebnerBasis(tuple(elements), LEX, reduced=True)


def codeword_table(code: LinearCode, cap: int = DEFAULT_ENUMERATION_CAP):
    """All codewords packed as ints (coordinate 1 most significant), indexed by message.

    Message value v has bit k-1-i set iff message bit i+1 is 1, so index order
    is lexicographic order of messages.
    """
    if code.k > cap:
        raise ResourceLimitError(
            f"k = {code.k} exceeds the enumeration cap {cap}; pass an explicit --t"
        )
    rows = [word_to_int(r) for r in code.generator]
    if code.n <= 64:
        table = np.zeros(1, dtype=np.uint64)
        for r in reversed(rows):
            table = np.concatenate([table, table ^ np.uint64(r)])
        return table
    table = [0]
    for r in reversed(rows):
        table = table + [c ^ r for c in table]
    return table


def popcounts(table) -> np.ndarray:
    if isinstance(table, np.ndarray):
        return np.bitwise_count(table).astype(np.int64)
    return np.array([c.bit_count() for c in table], dtype=np.int64)


def min_distance(code: LinearCode, cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[int, int]:
    """(d, t) by enumerating all nonzero codewords; t = (d - 1) // 2."""
    if code.k == 0:
        raise DomainError("the zero code has no minimum distance")
    d = int(popcounts(codeword_table(code, cap))[1:].min())
    return d, (d - 1) // 2


def random_standard_code(n: int, k: int, rng) -> LinearCode:
    """Standard-form code with uniformly random parity block (``rng`` is a numpy Generator)."""
    parity = rng.integers(0, 2, size=(k, n - k))
    rows = [unit_word(i, k) + tuple(int(b) for b in parity[i - 1]) for i in range(1, k + 1)]
    return LinearCode(n, tuple(rows))


def words(n: int) -> Iterable[Word]:
    """All 2^n words of length n in lexicographic order."""
    for v in range(2 ** n):
        yield int_to_word(v, n)

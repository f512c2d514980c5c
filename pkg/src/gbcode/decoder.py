"""Decoding received words by remainders modulo the closed-form code basis."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .algebra import Polynomial
from .code import LinearCode, Word, unit_word, weight, xor
from .errors import DecodeFailure, DimensionError, DomainError

SIMPLE = "simple"
SEARCH = "search"
SINGLE_ERROR = "single_error"


@dataclass(frozen=True)
class DecodeResult:
    codeword: Word
    error: Word
    message: Word
    path: str
    search_v: Optional[Word] = None


def remainder_word(u: Sequence[int], code: LinearCode) -> Word:
    """Word e with normal_form(X^u - 1) == X^e - 1 under the closed-form basis.

    Reducing by X_i + X^{m_i} replaces each head variable by its parity row,
    and X_j^2 + 1 cancels repeated tail variables, so
    e = (0^k | u_tail + u_head * M).
    """
    n, k = code.n, code.k
    if len(u) != n:
        raise DimensionError(f"received word must have {n} bits, got {len(u)}")
    tail = list(u[k:])
    for bit, row in zip(u[:k], code.generator):
        if bit:
            tail = [a ^ b for a, b in zip(tail, row[k:])]
    return (0,) * k + tuple(tail)


def binomial_weight(r: Polynomial) -> int:
    """Weight of the word a + b represented by a remainder X^a - X^b (0 for r = 0)."""
    if not r:
        return 0
    if len(r) != 2:
        raise DomainError(f"{r} is not a binomial")
    a, b = r.terms
    if any(e > 1 for e in a + b):
        raise DomainError(f"{r} has a non-squarefree term")
    return sum(x ^ y for x, y in zip(a, b))


def search_space(k: int, t: int, n: int | None = None) -> Iterator[Word]:
    """Words supported on the first k coordinates with weight <= t.

    Ordered by weight, then lexicographically by positions; starts with 0.
    """
    n = k if n is None else n
    for w in range(min(t, k) + 1):
        for positions in combinations(range(k), w):
            v = [0] * n
            for p in positions:
                v[p] = 1
            yield tuple(v)


def _result(c: Word, u: Sequence[int], k: int, path: str, v: Optional[Word] = None):
    return DecodeResult(c, xor(c, u), c[:k], path, v)


def decode(u: Sequence[int], code: LinearCode, t: Optional[int] = None) -> DecodeResult:
    """Decode u to a codeword within distance t.

    Scans v over the search space (v = 0 first) and accepts the first v with
    weight(remainder_word(u + v)) <= t - weight(v). ``t`` defaults to the
    code's error-correcting radius.
    """
    u = tuple(u)
    if len(u) != code.n:
        raise DimensionError(f"received word must have {code.n} bits, got {len(u)}")
    if t is None:
        t = code.t
    if t < 0:
        raise ValueError("t must be nonnegative")
    for v in search_space(code.k, t, code.n):
        shifted = xor(u, v)
        r = remainder_word(shifted, code)
        if weight(r) <= t - weight(v):
            c = xor(shifted, r)
            if any(v):
                return _result(c, u, code.k, SEARCH, v)
            return _result(c, u, code.k, SIMPLE)
    raise DecodeFailure(f"no codeword within distance {t}; more than {t} errors")


def decode_single_error(u: Sequence[int], code: LinearCode) -> DecodeResult:
    """Shortcut for one-error-correcting codes.

    A heavy remainder must equal the remainder of a unit vector v_i with
    i <= k, in which case the error is v_i.
    """
    u = tuple(u)
    r = remainder_word(u, code)
    if weight(r) <= 1:
        return _result(xor(u, r), u, code.k, SIMPLE)
    for i in range(1, code.k + 1):
        v = unit_word(i, code.n)
        if remainder_word(v, code) == r:
            return _result(xor(u, v), u, code.k, SINGLE_ERROR, v)
    raise DecodeFailure("remainder matches no single head error; more than one error")

"""Brute-force references: exhaustive nearest codeword and the S-pair criterion.

Nothing here goes through the decoder or the division routine in ``algebra``,
so the two can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import GroebnerBasis
from .code import (
    DEFAULT_ENUMERATION_CAP,
    LinearCode,
    Word,
    codeword_table,
    int_to_word,
    popcounts,
    word_to_int,
)
from .errors import DimensionError


@dataclass(frozen=True)
class NearestResult:
    codeword: Word
    distance: int
    unique: bool


def nearest_codeword(
    u: Sequence[int], code: LinearCode, cap: int = DEFAULT_ENUMERATION_CAP
) -> NearestResult:
    """Closest codeword by scanning all 2^k of them; ties go to the smallest message."""
    if len(u) != code.n:
        raise DimensionError(f"received word must have {code.n} bits, got {len(u)}")
    table = codeword_table(code, cap)
    target = word_to_int(u)
    if isinstance(table, np.ndarray):
        dists = popcounts(table ^ np.uint64(target))
    else:
        dists = popcounts([c ^ target for c in table])
    best = int(dists.argmin())
    dist = int(dists[best])
    unique = int((dists == dist).sum()) == 1
    return NearestResult(int_to_word(int(table[best]), code.n), dist, unique)


def _naive_spoly(f: dict, g: dict, key) -> dict:
    """S-polynomial with terms as a dict monomial -> coefficient mod 2."""
    lf, lg = max(f, key=key), max(g, key=key)
    gamma = tuple(max(a, b) for a, b in zip(lf, lg))
    out: dict = {}
    for poly, lead in ((f, lf), (g, lg)):
        shift = tuple(c - a for a, c in zip(lead, gamma))
        for t in poly:
            m = tuple(a + b for a, b in zip(t, shift))
            out[m] = (out.get(m, 0) + 1) % 2
    return {m: c for m, c in out.items() if c}


def _fully_reduces_to_zero(f: dict, basis: list[dict], key) -> bool:
    # Rewrite any term divisible by any leading monomial until none is left.
    leads = [max(g, key=key) for g in basis]
    f = dict(f)
    while f:
        for t in sorted(f, key=key, reverse=True):
            hit = next(
                (i for i, lm in enumerate(leads) if all(a <= b for a, b in zip(lm, t))),
                None,
            )
            if hit is not None:
                break
        else:
            return False
        shift = tuple(b - a for a, b in zip(leads[hit], t))
        for s in basis[hit]:
            m = tuple(a + b for a, b in zip(s, shift))
            f[m] = (f.get(m, 0) + 1) % 2
            if not f[m]:
                del f[m]
    return True


def verify_groebner(gb: GroebnerBasis) -> bool:
    """True iff every pairwise S-polynomial reduces to zero modulo gb."""
    key = gb.order.key
    basis = [{t: 1 for t in g.terms} for g in gb.elements]
    for j in range(len(basis)):
        for i in range(j):
            s = _naive_spoly(basis[i], basis[j], key)
            if not _fully_reduces_to_zero(s, basis, key):
                return False
    return True


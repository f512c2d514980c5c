"""Shared generators and brute-force helpers for the test suite."""

import random

from gbcode.algebra import GRLEX, LEX, Polynomial, buchberger
from gbcode.code import LinearCode

HAMMING_ROWS = (
    (1, 0, 0, 0, 1, 1, 1),
    (0, 1, 0, 0, 0, 1, 1),
    (0, 0, 1, 0, 1, 0, 1),
    (0, 0, 0, 1, 1, 1, 0),
)
HAMMING = LinearCode(7, HAMMING_ROWS)

# [10,2] code with parity rows 11110000 / 00001111
D5_ROWS = (
    (1, 0, 1, 1, 1, 1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 1, 1, 1, 1),
)
D5 = LinearCode(10, D5_ROWS)

PAPER_BASIS = [
    "X1 + X5*X6*X7",
    "X2 + X6*X7",
    "X3 + X5*X7",
    "X4 + X5*X6",
    "X5^2 + 1",
    "X6^2 + 1",
    "X7^2 + 1",
]


def paper_basis_polys():
    return [Polynomial.parse(s, 7) for s in PAPER_BASIS]


def random_polynomial(rng: random.Random, n: int, max_terms: int = 5, max_exp: int = 2):
    terms = {tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(rng.randint(0, max_terms))}
    return Polynomial(n, frozenset(terms))


def random_nonzero(rng, n, max_terms=4, max_exp=2):
    while True:
        p = random_polynomial(rng, n, max_terms, max_exp)
        if p:
            return p


def random_ideal(rng: random.Random, n: int):
    """Generators of a zero-dimensional ideal: random extras plus field-type equations."""
    if rng.random() < 0.5:
        gens = [random_nonzero(rng, n, 4, 1) for _ in range(rng.randint(1, 3))]
        gens += [Polynomial.variable(i, n, 2) + Polynomial.variable(i, n) for i in range(1, n + 1)]
    else:
        gens = [p for p in (random_polynomial(rng, n, 2, 1) for _ in range(rng.randint(1, 3))) if len(p) == 2]
        gens += [Polynomial.variable(i, n, 2) + Polynomial.one(n) for i in range(1, n + 1)]
    return gens


def random_groebner(rng: random.Random, n: int):
    order = rng.choice([LEX, GRLEX])
    gens = random_ideal(rng, n)
    return gens, buchberger(gens, order)


def expand(f, divisors, quotients):
    """sum(q_i * F_i) computed term by term with an explicit parity count."""
    counts = {}
    for q, g in zip(quotients, divisors):
        for a in q.terms:
            for b in g.terms:
                m = tuple(x + y for x, y in zip(a, b))
                counts[m] = counts.get(m, 0) + 1
    return Polynomial(f.nvars, frozenset(m for m, c in counts.items() if c % 2))


def span(rows, n):
    """Row space of a bit matrix by enumerating all combinations."""
    out = set()
    for mask in range(2 ** len(rows)):
        w = [0] * n
        for i, r in enumerate(rows):
            if mask >> i & 1:
                w = [a ^ b for a, b in zip(w, r)]
        out.add(tuple(w))
    return out


def random_code(rng: random.Random, n: int, k: int) -> LinearCode:
    rows = []
    for i in range(k):
        rows.append(tuple(int(j == i) for j in range(k)) + tuple(rng.randint(0, 1) for _ in range(n - k)))
    return LinearCode(n, tuple(rows))

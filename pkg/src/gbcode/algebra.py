"""Multivariate polynomials over GF(2), monomial orders, division and Groebner bases.

Polynomials are sets of exponent vectors: a term is present iff its
coefficient is 1, so addition and subtraction are both symmetric difference.
Variables are X1 > X2 > ... > Xn for every order.
"""

from __future__ import annotations

import enum
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, NotGroebnerError, ResourceLimitError, ZeroPolynomialError

Exps = tuple[int, ...]

DEFAULT_MAX_INSERTIONS = 10_000


class MonomialOrder(str, enum.Enum):
    LEX = "lex"
    GRLEX = "grlex"

    def key(self, a: Exps):
        """Sort key realizing the order; larger key means larger monomial."""
        if self is MonomialOrder.LEX:
            return a
        return (sum(a), a)


LEX = MonomialOrder.LEX
GRLEX = MonomialOrder.GRLEX


def _check_dims(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} vs {len(b)}")


def compare(a: Exps, b: Exps, order: MonomialOrder = LEX) -> int:
    """Return -1, 0 or 1 as a is less than, equal to, or greater than b."""
    _check_dims(a, b)
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    return (ka > kb) - (ka < kb)


def lcm_monomial(a: Exps, b: Exps) -> Exps:
    _check_dims(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_divides(a: Exps, b: Exps) -> bool:
    """True if X^a divides X^b."""
    return all(x <= y for x, y in zip(a, b))


def _mul(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def _quo(b: Exps, a: Exps) -> Exps:
    return tuple(y - x for x, y in zip(a, b))


def render_monomial(a: Exps) -> str:
    factors = [f"X{i}" if e == 1 else f"X{i}^{e}" for i, e in enumerate(a, 1) if e]
    return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class Polynomial:
    """A polynomial over GF(2) in ``nvars`` variables, stored as its set of terms."""

    nvars: int
    terms: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.terms, frozenset):
            object.__setattr__(self, "terms", frozenset(self.terms))
        for t in self.terms:
            if len(t) != self.nvars:
                raise DimensionError(f"term {t} has wrong length for {self.nvars} variables")
            if any(e < 0 for e in t):
                raise ValueError(f"negative exponent in {t}")

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> Polynomial:
        return cls(nvars, frozenset([(0,) * nvars]))

    @classmethod
    def monomial(cls, exps: Iterable[int]) -> Polynomial:
        exps = tuple(exps)
        return cls(len(exps), frozenset([exps]))

    @classmethod
    def variable(cls, i: int, nvars: int, power: int = 1) -> Polynomial:
        """X_i**power, with i counted from 1."""
        exps = [0] * nvars
        exps[i - 1] = power
        return cls.monomial(exps)

    @classmethod
    def parse(cls, text: str, nvars: int) -> Polynomial:
        """Parse the canonical rendering, e.g. ``"X1 + X5*X6*X7"`` or ``"X5^2 + 1"``.

        Repeated terms cancel, as they would over GF(2).
        """
        text = text.strip()
        if text == "0":
            return cls.zero(nvars)
        terms: set = set()
        for chunk in text.split("+"):
            chunk = chunk.strip()
            exps = [0] * nvars
            if chunk != "1":
                for factor in chunk.split("*"):
                    m = re.fullmatch(r"X(\d+)(?:\^(\d+))?", factor.strip())
                    if not m:
                        raise ValueError(f"cannot parse factor {factor!r}")
                    i = int(m.group(1))
                    if not 1 <= i <= nvars:
                        raise DimensionError(f"variable X{i} outside X1..X{nvars}")
                    exps[i - 1] += int(m.group(2) or 1)
            terms ^= {tuple(exps)}
        return cls(nvars, frozenset(terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: Polynomial) -> Polynomial:
        return add(self, other)

    __sub__ = __add__

    def mul_monomial(self, m: Exps) -> Polynomial:
        return mul_monomial(self, m)

    def leading_term(self, order: MonomialOrder = LEX) -> Exps:
        return leading_term(self, order)

    def sorted_terms(self, order: MonomialOrder = LEX) -> list[Exps]:
        return sorted(self.terms, key=order.key, reverse=True)

    def render(self, order: MonomialOrder = LEX) -> str:
        if not self.terms:
            return "0"
        return " + ".join(render_monomial(t) for t in self.sorted_terms(order))

    def __str__(self) -> str:
        return self.render()


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.nvars != g.nvars:
        raise DimensionError(f"dimension mismatch: {f.nvars} vs {g.nvars}")
    return Polynomial(f.nvars, f.terms ^ g.terms)


def mul_monomial(f: Polynomial, m: Exps) -> Polynomial:
    _check_dims(m, (0,) * f.nvars)
    return Polynomial(f.nvars, frozenset(_mul(t, m) for t in f.terms))


def leading_term(f: Polynomial, order: MonomialOrder = LEX) -> Exps:
    """Leading exponent vector (the multidegree); over GF(2) lt = lm."""
    if not f.terms:
        raise ZeroPolynomialError("the zero polynomial has no leading term")
    return max(f.terms, key=order.key)


multideg = leading_term


def total_degree(f: Polynomial, order: MonomialOrder = LEX) -> int:
    """Total degree of the leading monomial."""
    return sum(leading_term(f, order))


def divide(
    f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = LEX
) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division of f by an ordered list of divisors.

    At every step the current leading term is reduced by the first divisor
    (in list order) whose leading term divides it; otherwise it moves to the
    remainder. Returns ``(quotients, remainder)`` with
    ``f == sum(q_i * F_i) + remainder``.
    """
    n = f.nvars
    for g in divisors:
        if g.nvars != n:
            raise DimensionError(f"divisor has {g.nvars} variables, dividend has {n}")
        if not g:
            raise ZeroPolynomialError("cannot divide by the zero polynomial")
    key = order.key
    leads = [max(g.terms, key=key) for g in divisors]
    quotients: list[set] = [set() for _ in divisors]
    remainder: set = set()
    p = set(f.terms)
    while p:
        lt = max(p, key=key)
        for i, lead in enumerate(leads):
            if monomial_divides(lead, lt):
                m = _quo(lt, lead)
                quotients[i].add(m)
                p.symmetric_difference_update(_mul(t, m) for t in divisors[i].terms)
                break
        else:
            remainder.add(lt)
            p.remove(lt)
    return [Polynomial(n, frozenset(q)) for q in quotients], Polynomial(n, frozenset(remainder))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = LEX) -> Polynomial:
    lf, lg = leading_term(f, order), leading_term(g, order)
    gamma = lcm_monomial(lf, lg)
    return add(mul_monomial(f, _quo(gamma, lf)), mul_monomial(g, _quo(gamma, lg)))


@dataclass(frozen=True)
class GroebnerBasis:
    """Ordered basis elements together with the order they are a basis for."""

    elements: tuple[Polynomial, ...]
    order: MonomialOrder = LEX
    reduced: bool = False

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "order", MonomialOrder(self.order))
        if not self.elements:
            raise ValueError("a basis needs at least one element")
        n = self.elements[0].nvars
        for g in self.elements:
            if not g:
                raise ZeroPolynomialError("basis elements must be nonzero")
            if g.nvars != n:
                raise DimensionError("basis elements live in different rings")

    @property
    def nvars(self) -> int:
        return self.elements[0].nvars

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def leading_terms(self) -> list[Exps]:
        return [leading_term(g, self.order) for g in self.elements]

    def render(self) -> list[str]:
        return [g.render(self.order) for g in self.elements]


def _coprime(a: Exps, b: Exps) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(
    generators: Sequence[Polynomial],
    order: MonomialOrder = LEX,
    max_insertions: int = DEFAULT_MAX_INSERTIONS,
) -> GroebnerBasis:
    """Complete ``generators`` to a Groebner basis of the ideal they generate.

    Pairs are processed FIFO; pairs with coprime leading terms are skipped.
    Raises ResourceLimitError once more than ``max_insertions`` new elements
    would be added.
    """
    order = MonomialOrder(order)
    if not generators:
        raise ValueError("need at least one generator")
    basis = list(generators)
    n = basis[0].nvars
    for g in basis:
        if not g:
            raise ZeroPolynomialError("generators must be nonzero")
        if g.nvars != n:
            raise DimensionError("generators live in different rings")
    leads = [leading_term(g, order) for g in basis]
    pairs = deque((i, j) for j in range(len(basis)) for i in range(j))
    insertions = 0
    while pairs:
        i, j = pairs.popleft()
        if _coprime(leads[i], leads[j]):
            continue
        _, r = divide(s_polynomial(basis[i], basis[j], order), basis, order)
        if not r:
            continue
        insertions += 1
        if insertions > max_insertions:
            raise ResourceLimitError(
                f"Buchberger completion exceeded {max_insertions} basis insertions"
            )
        pairs.extend((a, len(basis)) for a in range(len(basis)))
        basis.append(r)
        leads.append(leading_term(r, order))
    return GroebnerBasis(tuple(basis), order, reduced=False)


def satisfies_criterion(gb: GroebnerBasis) -> bool:
    """S-pair criterion: every S-polynomial has zero remainder modulo gb."""
    elems = gb.elements
    leads = gb.leading_terms()
    for j in range(len(elems)):
        for i in range(j):
            if _coprime(leads[i], leads[j]):
                continue
            if divide(s_polynomial(elems[i], elems[j], gb.order), elems, gb.order)[1]:
                return False
    return True


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced Groebner basis, sorted by descending leading term."""
    if not satisfies_criterion(gb):
        raise NotGroebnerError("input basis fails the S-pair criterion")
    order = gb.order
    key = order.key
    minimal: list[Polynomial] = []
    minimal_leads: list[Exps] = []
    for g in sorted(gb.elements, key=lambda h: key(leading_term(h, order))):
        lt = leading_term(g, order)
        if not any(monomial_divides(m, lt) for m in minimal_leads):
            minimal.append(g)
            minimal_leads.append(lt)
    reduced = [
        divide(g, minimal[:i] + minimal[i + 1:], order)[1] for i, g in enumerate(minimal)
    ]
    reduced.sort(key=lambda h: key(leading_term(h, order)), reverse=True)
    return GroebnerBasis(tuple(reduced), order, reduced=True)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of f modulo gb; independent of element order when gb is Groebner."""
    return divide(f, gb.elements, gb.order)[1]


def is_member(f: Polynomial, gb: GroebnerBasis) -> bool:
    return not normal_form(f, gb)

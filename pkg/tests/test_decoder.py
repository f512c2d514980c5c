import itertools
import random

import pytest

from gbcode.algebra import GroebnerBasis, LEX, Polynomial, normal_form
from gbcode.code import closed_form_basis, support, to_monomial, unit_word, weight, word_binomial, words, xor
from gbcode.decoder import (
    SEARCH,
    SIMPLE,
    SINGLE_ERROR,
    binomial_weight,
    decode,
    decode_single_error,
    remainder_word,
    search_space,
)
from gbcode.errors import DecodeFailure, DimensionError, DomainError
from gbcode.oracle import nearest_codeword
from helpers import D5, HAMMING, random_code

P7 = lambda s: Polynomial.parse(s, 7)  # noqa: E731


def error_patterns(n, t):
    for w in range(t + 1):
        for pos in itertools.combinations(range(n), w):
            yield tuple(int(i in pos) for i in range(n))


def test_remainder_word_paper():
    assert remainder_word((1, 0, 0, 1, 1, 0, 0), HAMMING) == (0, 0, 0, 0, 1, 0, 1)
    assert remainder_word((1, 1, 0, 1, 0, 1, 1), HAMMING) == (0, 0, 0, 0, 0, 0, 1)
    for c in HAMMING.codewords():
        assert remainder_word(c, HAMMING) == (0,) * 7
    with pytest.raises(DimensionError):
        remainder_word((1, 0), HAMMING)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_remainder_word_matches_normal_form(seed):
    rng = random.Random(seed)
    k = rng.randint(1, 5)
    code = random_code(rng, rng.randint(k + 1, 10), k)
    gb = closed_form_basis(code)
    for u in words(code.n):
        e = remainder_word(u, code)
        assert word_binomial(e) == normal_form(word_binomial(u), gb)
        assert not any(e[: code.k])


def test_binomial_weight():
    assert binomial_weight(P7("X5*X7 + 1")) == 2
    assert binomial_weight(Polynomial.zero(7)) == 0
    # X^a - X^b with a = e5 + e7, b = e5
    assert weight(xor((0, 0, 0, 0, 1, 0, 1), (0, 0, 0, 0, 1, 0, 0))) == 1
    assert binomial_weight(P7("X5*X7 + X5")) == 1
    with pytest.raises(DomainError):
        binomial_weight(P7("X1 + X2 + X3"))
    with pytest.raises(DomainError):
        binomial_weight(P7("X1^2 + 1"))


def test_binomial_weight_on_word_differences():
    # normal form of X^u - X^v relates to the remainder words of u and v
    gb = closed_form_basis(HAMMING)
    rng = random.Random(4)
    for _ in range(200):
        u = tuple(rng.randint(0, 1) for _ in range(7))
        v = tuple(rng.randint(0, 1) for _ in range(7))
        r = normal_form(to_monomial(u) + to_monomial(v), gb)
        expected = weight(xor(remainder_word(u, HAMMING), remainder_word(v, HAMMING)))
        assert binomial_weight(r) == expected


def test_search_space():
    space = list(search_space(4, 1, 7))
    assert space[0] == (0,) * 7
    assert space[1:] == [unit_word(i, 7) for i in range(1, 5)]
    for k, t in [(4, 2), (5, 3), (3, 5), (6, 0)]:
        got = list(search_space(k, t))
        expected = {w for w in itertools.product((0, 1), repeat=k) if sum(w) <= t}
        assert len(got) == len(set(got)) == len(expected)
        assert set(got) == expected
        assert [sum(w) for w in got] == sorted(sum(w) for w in got)


def test_decode_paper_examples():
    res = decode((1, 1, 0, 1, 0, 1, 1), HAMMING)
    assert res.codeword == (1, 1, 0, 1, 0, 1, 0)
    assert res.path == SIMPLE
    assert res.error == (0, 0, 0, 0, 0, 0, 1)
    assert res.message == (1, 1, 0, 1)

    res = decode((1, 0, 0, 1, 1, 0, 0), HAMMING)
    assert res.codeword == (1, 0, 1, 1, 1, 0, 0)
    assert res.path == SEARCH
    assert res.search_v == (0, 0, 1, 0, 0, 0, 0)
    assert support(res.error) == {3}


def test_decode_d5_example():
    u = (0, 0, 1, 1, 1, 1, 0, 0, 0, 1)
    res = decode(u, D5)
    assert res.search_v == (1,) + (0,) * 9
    assert remainder_word(xor(u, res.search_v), D5) == (0,) * 9 + (1,)
    assert res.codeword == (1, 0, 1, 1, 1, 1, 0, 0, 0, 0)
    oracle = nearest_codeword(u, D5)
    assert oracle.codeword == res.codeword and oracle.unique and oracle.distance == 2


def test_decode_codeword_is_fixed_point():
    for c in HAMMING.codewords():
        res = decode(c, HAMMING)
        assert res.codeword == c and res.error == (0,) * 7 and res.path == SIMPLE


def test_decode_failure_and_override():
    u = (0, 0, 1, 1, 1, 0, 1, 1, 1, 0)
    near = nearest_codeword(u, D5)
    assert near.distance > D5.t
    with pytest.raises(DecodeFailure):
        decode(u, D5)
    # an overridden radius beyond the code's own still yields a word within it
    res = decode(u, D5, t=near.distance)
    assert weight(res.error) == near.distance
    with pytest.raises(DecodeFailure):
        decode((0, 0, 1, 0, 0, 0, 0, 0, 0, 0), D5, t=0)
    with pytest.raises(DimensionError):
        decode((1, 0), HAMMING)


@pytest.mark.parametrize("code", [HAMMING, D5], ids=["hamming74", "d5"])
def test_decode_within_radius_exhaustive(code):
    for c in code.codewords():
        for e in error_patterns(code.n, code.t):
            res = decode(xor(c, e), code)
            assert (res.codeword, res.error) == (c, e)


def test_decode_within_radius_random_codes():
    rng = random.Random(21)
    for _ in range(12):
        k = rng.randint(1, 5)
        code = random_code(rng, rng.randint(k + 2, 12), k)
        if code.t == 0:
            continue
        for c in code.codewords():
            for e in error_patterns(code.n, code.t):
                res = decode(xor(c, e), code)
                assert (res.codeword, res.error) == (c, e)


def test_decode_agrees_with_oracle_everywhere():
    for code in (HAMMING, D5):
        for u in words(code.n):
            near = nearest_codeword(u, code)
            try:
                res = decode(u, code)
            except DecodeFailure:
                assert near.distance > code.t
                continue
            assert weight(res.error) <= code.t
            assert res.codeword == near.codeword and near.unique


def test_dichotomy_head_errors():
    # remainder is light iff the true error avoids the first k coordinates
    for code in (HAMMING, D5):
        for c in code.codewords():
            for e in error_patterns(code.n, code.t):
                light = weight(remainder_word(xor(c, e), code)) <= code.t
                assert light == (not any(e[: code.k]))


def test_search_minimality():
    for u in words(D5.n):
        try:
            res = decode(u, D5)
        except DecodeFailure:
            continue
        accepted = [
            xor(v, remainder_word(xor(u, v), D5))
            for v in search_space(D5.k, D5.t, D5.n)
            if weight(remainder_word(xor(u, v), D5)) <= D5.t - weight(v)
        ]
        assert weight(res.error) == min(weight(e) for e in accepted)


def test_decode_single_error_paper():
    res = decode_single_error((1, 0, 0, 1, 1, 0, 0), HAMMING)
    assert res.path == SINGLE_ERROR
    assert res.search_v == unit_word(3, 7)
    assert remainder_word(unit_word(3, 7), HAMMING) == (0, 0, 0, 0, 1, 0, 1)
    assert res.codeword == (1, 0, 1, 1, 1, 0, 0)

    res = decode_single_error((1, 1, 0, 1, 0, 1, 1), HAMMING)
    assert res.path == SIMPLE and res.codeword == (1, 1, 0, 1, 0, 1, 0)

    c = HAMMING.encode((0, 1, 1, 0))
    assert decode_single_error(c, HAMMING).codeword == c


def test_decode_single_error_agrees_with_decode():
    for c in HAMMING.codewords():
        for e in error_patterns(7, 1):
            u = xor(c, e)
            a, b = decode(u, HAMMING), decode_single_error(u, HAMMING)
            assert a.codeword == b.codeword == c


def test_decode_single_error_failure():
    # a code whose parity rows do not cover every heavy remainder
    from gbcode.code import LinearCode

    code = LinearCode(6, ((1, 0, 1, 1, 1, 0), (0, 1, 0, 1, 1, 1)))
    u = (0, 0, 1, 1, 0, 0)
    assert weight(remainder_word(u, code)) == 2
    with pytest.raises(DecodeFailure):
        decode_single_error(u, code)


def test_generic_basis_shuffle_does_not_change_remainders():
    gb = closed_form_basis(HAMMING)
    rng = random.Random(9)
    elems = list(gb.elements)
    for _ in range(5):
        rng.shuffle(elems)
        shuffled = GroebnerBasis(tuple(elems), LEX)
        for u in words(7):
            assert normal_form(word_binomial(u), shuffled) == word_binomial(remainder_word(u, HAMMING))

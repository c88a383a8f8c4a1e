import numpy as np
import pytest

from hopfbench.errors import ParseError
from hopfbench.freealg import (
    Alphabet,
    NcPoly,
    Ordering,
    compare_deglex,
    format_poly,
    nc_combine,
    nc_mul,
    parse_poly,
)
from hopfbench.gf import make_field


@pytest.fixture
def alphabet():
    # z < y < x < h < g
    return Alphabet.from_names(("g", "h", "x", "y", "z"), ("z", "y", "x", "h", "g"))


def word(alphabet, text):
    return alphabet.parse_word(text)


def test_compare_deglex_examples(alphabet):
    assert compare_deglex(word(alphabet, "gx"), word(alphabet, "xg"), alphabet) is Ordering.GREATER
    assert compare_deglex(word(alphabet, "g"), word(alphabet, "xg"), alphabet) is Ordering.LESS
    assert compare_deglex(word(alphabet, "yz"), word(alphabet, "zy"), alphabet) is Ordering.GREATER
    assert compare_deglex(word(alphabet, "hx"), word(alphabet, "hx"), alphabet) is Ordering.EQUAL


def test_deglex_is_multiplicative(alphabet):
    rng = np.random.default_rng(5)
    for _ in range(200):
        u, v, a, b = (tuple(int(i) for i in rng.integers(0, 5, rng.integers(0, 4))) for _ in range(4))
        before = compare_deglex(u, v, alphabet)
        after = compare_deglex(a + u + b, a + v + b, alphabet)
        assert before is after


def test_default_precedence_makes_last_name_largest():
    a = Alphabet.from_names(("x", "g"))
    assert compare_deglex((1,), (0,), a) is Ordering.GREATER


def test_alphabet_validation():
    with pytest.raises(ParseError):
        Alphabet.from_names(("x", "x"))
    with pytest.raises(ParseError):
        Alphabet.from_names(("x", "y"), ("x",))
    with pytest.raises(ParseError):
        Alphabet.from_names(("1x",))


def test_word_round_trip(alphabet):
    w = word(alphabet, "g^3hx")
    assert w == (0, 0, 0, 1, 2)
    assert alphabet.format_word(w) == "g^3hx"
    assert alphabet.format_word(()) == "1"
    assert word(alphabet, "1") == ()


def test_multi_letter_names_parse_longest_first():
    a = Alphabet.from_names(("x", "x1", "g"))
    assert a.parse_word("x1x") == (1, 0)
    with pytest.raises(ParseError):
        a.parse_word("xq")


def test_combine_cancels(alphabet):
    F2 = make_field(2)
    f = parse_poly("x + 1", alphabet, F2)
    assert nc_combine("add", f, f).is_zero()
    g1 = parse_poly("gx + g", alphabet, F2)
    g2 = parse_poly("xg + g", alphabet, F2)
    assert nc_combine("add", g1, g2) == parse_poly("gx + xg", alphabet, F2)


def test_scale_over_gf4(alphabet):
    F4 = make_field(2, 2)
    x = parse_poly("x", alphabet, F4)
    assert nc_combine("scale", x, 2).terms == {word(alphabet, "x"): 2}
    assert nc_combine("scale", x, 0).is_zero()


def test_mul_examples(alphabet):
    F2 = make_field(2)
    g = parse_poly("g", alphabet, F2)
    x = parse_poly("x", alphabet, F2)
    assert nc_mul(g, x) == NcPoly.word(F2, word(alphabet, "gx"))
    one_x = parse_poly("x + 1", alphabet, F2)
    assert nc_mul(one_x, one_x) == parse_poly("x^2 + 1", alphabet, F2)
    assert nc_mul(parse_poly("g - g^2", alphabet, F2), g) == parse_poly("g^2 + g^3", alphabet, F2)


def test_mul_is_associative_and_unital(alphabet):
    F3 = make_field(3)
    rng = np.random.default_rng(9)

    def random_poly():
        terms = {}
        for _ in range(3):
            w = tuple(int(i) for i in rng.integers(0, 5, rng.integers(0, 3)))
            terms[w] = int(rng.integers(1, 3))
        return NcPoly(F3, terms)

    one = NcPoly.one(F3)
    for _ in range(20):
        a, b, c = random_poly(), random_poly(), random_poly()
        assert (a * b) * c == a * (b * c)
        assert a * one == a == one * a
        assert a * (b + c) == a * b + a * c


def test_parse_commutator_equation_and_powers(alphabet):
    F3 = make_field(3)
    assert parse_poly("[x,y]", alphabet, F3) == parse_poly("xy - yx", alphabet, F3)
    assert parse_poly("x^2 = y", alphabet, F3) == parse_poly("x^2 - y", alphabet, F3)
    assert parse_poly("2*x*g", alphabet, F3) == parse_poly("2xg", alphabet, F3)
    assert parse_poly("-(g - 1)", alphabet, F3) == parse_poly("1 - g", alphabet, F3)
    assert parse_poly("g(1 - g)", alphabet, F3) == parse_poly("g - g^2", alphabet, F3)
    assert parse_poly("(1 + x)^3", alphabet, F3) == parse_poly("1 + x^3", alphabet, F3)


def test_parse_errors(alphabet):
    F2 = make_field(2)
    with pytest.raises(ParseError):
        parse_poly("2x", alphabet, F2)
    with pytest.raises(ParseError):
        parse_poly("x +* y", alphabet, F2)
    with pytest.raises(ParseError):
        parse_poly("x^y", alphabet, F2)
    with pytest.raises(ParseError):
        parse_poly("(x", alphabet, F2)
    with pytest.raises(ParseError):
        parse_poly("q", alphabet, F2)


def test_format_poly_descending(alphabet):
    F3 = make_field(3)
    f = parse_poly("1 + 2x + gx", alphabet, F3)
    assert format_poly(f, alphabet) == "gx + 2x + 1"
    assert format_poly(NcPoly.zero(F3), alphabet) == "0"
    assert parse_poly(format_poly(f, alphabet), alphabet, F3) == f


def test_leading_word(alphabet):
    F2 = make_field(2)
    lead, c = parse_poly("gx - xg - g + g^2", alphabet, F2).leading(alphabet)
    assert alphabet.format_word(lead) == "g^2"
    with pytest.raises(ValueError):
        NcPoly.zero(F2).leading(alphabet)

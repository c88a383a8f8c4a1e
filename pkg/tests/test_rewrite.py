import numpy as np
import pytest

from hopfbench.errors import InconsistentRelations
from hopfbench.freealg import Alphabet, NcPoly, parse_poly
from hopfbench.rewrite import (
    AmbiguityKind,
    CompletionStatus,
    RewriteSystem,
    complete,
    enumerate_basis,
    find_ambiguities,
    interreduce,
    orient,
    resolve_ambiguity,
)


def system_of(names, precedence, relations, F):
    alphabet = Alphabet.from_names(names, precedence)
    polys = [parse_poly(r, alphabet, F) for r in relations]
    return RewriteSystem.from_relations(alphabet, F, polys)


@pytest.fixture
def square_system(F2):
    # x^2 -> z, xz -> zx + x
    return system_of(("x", "z"), ("z", "x"), ["x^2 - z", "xz - zx - x"], F2)


def test_orient_makes_monic_rule(F3):
    alphabet = Alphabet.from_names(("x", "y"))
    rule = orient(parse_poly("2yx - x", alphabet, F3), alphabet)
    assert alphabet.format_word(rule.lead) == "yx"
    assert rule.tail == parse_poly("2x", alphabet, F3)
    assert rule.relation() == parse_poly("yx - 2x", alphabet, F3)


def test_orient_constant_is_inconsistent(F2):
    alphabet = Alphabet.from_names(("x",))
    with pytest.raises(InconsistentRelations):
        orient(NcPoly.one(F2), alphabet)


def test_normal_form(square_system):
    alphabet = square_system.alphabet
    F = square_system.field
    assert square_system.normal_form(parse_poly("x^2", alphabet, F)) == parse_poly("z", alphabet, F)
    assert square_system.normal_form(parse_poly("xz", alphabet, F)) == parse_poly("zx + x", alphabet, F)
    assert square_system.normal_form_word(alphabet.parse_word("zx")) == {alphabet.parse_word("zx"): 1}


def test_find_ambiguities(square_system):
    alphabet = square_system.alphabet
    found = find_ambiguities(square_system)
    assert all(a.kind is AmbiguityKind.OVERLAP for a in found)
    assert {alphabet.format_word(a.superword) for a in found} == {"x^3", "x^2z"}
    assert alphabet.format_word(found[0].superword) == "x^2z"


def test_resolve_overlap_leaves_x(square_system):
    alphabet = square_system.alphabet
    overlap = next(a for a in find_ambiguities(square_system) if a.superword == alphabet.parse_word("x^3"))
    assert resolve_ambiguity(overlap, square_system) == parse_poly("x", alphabet, square_system.field)


def test_completion_collapses_square_system(square_system):
    system, status = complete(square_system)
    assert status is CompletionStatus.CONFLUENT
    words, finite = enumerate_basis(system)
    assert finite
    assert words == [()]
    assert find_ambiguities(system) == [] or all(
        resolve_ambiguity(a, system).is_zero() for a in find_ambiguities(system)
    )


def test_interreduce_drops_redundant_leads(F2):
    alphabet = Alphabet.from_names(("x",))
    rules = [orient(parse_poly(r, alphabet, F2), alphabet) for r in ("x^2", "x^3")]
    reduced = interreduce(alphabet, F2, rules)
    assert len(reduced) == 1
    assert alphabet.format_word(reduced[0].lead) == "x^2"


def test_inconsistent_relations(F2):
    with pytest.raises(InconsistentRelations):
        system_of(("x",), None, ["x - 1", "x"], F2)


def test_klein_four_group_algebra(F2):
    system = system_of(("g", "h"), ("h", "g"), ["g^2 - 1", "h^2 - 1", "gh - hg"], F2)
    system, status = complete(system)
    assert status is CompletionStatus.CONFLUENT
    words, finite = enumerate_basis(system)
    assert finite
    assert [system.alphabet.format_word(w) for w in words] == ["1", "h", "g", "hg"]


def test_cyclic_group_algebra_over_gf3(F3):
    system, status = complete(system_of(("g",), None, ["g^4 - 1"], F3))
    words, finite = enumerate_basis(system)
    assert status is CompletionStatus.CONFLUENT
    assert finite and len(words) == 4


def test_exterior_like_algebra(F5):
    system, status = complete(system_of(("x", "y"), None, ["x^2", "y^2", "yx + xy"], F5))
    words, finite = enumerate_basis(system)
    assert status is CompletionStatus.CONFLUENT
    assert finite and len(words) == 4
    F = F5
    xy = parse_poly("xy", system.alphabet, F)
    assert system.normal_form(parse_poly("yx", system.alphabet, F)) == -xy


def test_infinite_basis_is_reported(F3):
    system, status = complete(system_of(("x", "y"), None, ["yx - xy - x"], F3))
    assert status is CompletionStatus.CONFLUENT
    words, finite = enumerate_basis(system, cap=50)
    assert not finite
    assert len(words) == 50


def test_braid_relation_hits_degree_cap(F2):
    # the positive braid monoid on two strands has no finite deg-lex completion
    system = system_of(("a", "b"), None, ["aba - bab"], F2)
    _, status = complete(system, degree_cap=6, max_rules=50)
    assert status is CompletionStatus.CAP_EXCEEDED


def reduce_in_random_order(system, poly, rng):
    """Rewrite at a randomly chosen redex until none is left."""
    while True:
        hits = [
            (w, pos, rule)
            for w in sorted(poly.terms)
            for rule in system.rules
            for pos in range(len(w) - len(rule.lead) + 1)
            if w[pos:pos + len(rule.lead)] == rule.lead
        ]
        if not hits:
            return poly
        w, pos, rule = hits[int(rng.integers(len(hits)))]
        pre = NcPoly.word(system.field, w[:pos])
        post = NcPoly.word(system.field, w[pos + len(rule.lead):])
        poly = poly - (pre * rule.relation() * post).scale(poly.terms[w])


@pytest.fixture
def twisted_system(F3):
    system, status = complete(system_of(("g", "x"), ("x", "g"), ["g^2 - 1", "gx + xg", "x^2"], F3))
    assert status is CompletionStatus.CONFLUENT
    return system


def random_poly(F, rng, letters=2, terms=4, length=6):
    acc = NcPoly.zero(F)
    for _ in range(terms):
        word = tuple(int(a) for a in rng.integers(letters, size=int(rng.integers(length + 1))))
        acc = acc + NcPoly.word(F, word, int(rng.integers(1, F.p)))
    return acc


def test_normal_form_is_idempotent(twisted_system):
    rng = np.random.default_rng(5)
    for _ in range(20):
        nf = twisted_system.normal_form(random_poly(twisted_system.field, rng))
        assert twisted_system.normal_form(nf) == nf
        assert all(twisted_system.is_irreducible(w) for w in nf.terms)


def test_normal_form_ignores_reduction_order(twisted_system):
    rng = np.random.default_rng(17)
    for _ in range(20):
        poly = random_poly(twisted_system.field, rng)
        assert reduce_in_random_order(twisted_system, poly, rng) == twisted_system.normal_form(poly)

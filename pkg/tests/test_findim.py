import numpy as np
import pytest

from hopfbench.errors import HopfbenchError, InfiniteBasis
from hopfbench.findim import FinAlgebra, generated_subspace_dim, tensor_square
from hopfbench.freealg import Alphabet, parse_poly
from hopfbench.gf import _ints
from hopfbench.rewrite import RewriteSystem, complete


def algebra_of(names, relations, F, precedence=None):
    alphabet = Alphabet.from_names(names, precedence)
    polys = [parse_poly(r, alphabet, F) for r in relations]
    system, _ = complete(RewriteSystem.from_relations(alphabet, F, polys))
    return FinAlgebra.from_confluent(system)


def same(a, b):
    return np.array_equal(_ints(a), _ints(b))


def random_vector(F, n, rng):
    return F.array(rng.integers(0, F.q, n))


@pytest.fixture
def klein(F2):
    return algebra_of(("g", "h"), ["g^2 - 1", "h^2 - 1", "gh - hg"], F2, ("h", "g"))


def test_truncated_polynomials(F2):
    A = algebra_of(("x",), ["x^3"], F2)
    assert A.dim == 3
    x = A.element("x")
    assert same(A.mul(x, x), A.element("x^2"))
    assert A.is_zero(A.mul(x, A.element("x^2")))
    assert A.is_zero(A.word_vector((0, 0, 0)))
    assert same(A.element("1"), A.unit())
    assert A.format_vector(A.element("1 + x")) == "x + 1"


def test_inverse_of_unipotent(F3):
    A = algebra_of(("x",), ["x^3"], F3)
    inv = A.inverse(A.element("1 + x"))
    assert same(inv, A.element("1 - x + x^2"))
    assert same(A.mul(inv, A.element("1 + x")), A.unit())


def test_nilpotent_is_not_invertible(F3):
    A = algebra_of(("x",), ["x^3"], F3)
    with pytest.raises(HopfbenchError):
        A.inverse(A.element("x"))


def test_power_and_commutator(klein):
    g, h = klein.element("g"), klein.element("h")
    assert same(klein.power(g, 2), klein.unit())
    assert same(klein.power(g, -1), g)
    assert klein.is_zero(klein.commutator(g, h))
    assert same(klein.product([g, h, g]), h)


def test_multiplication_matrices_agree(klein, F2):
    rng = np.random.default_rng(3)
    for _ in range(10):
        a = random_vector(F2, klein.dim, rng)
        b = random_vector(F2, klein.dim, rng)
        assert same(b @ klein.left_mult_matrix(a), a @ klein.right_mult_matrix(b))


def test_group_algebra_is_associative(klein):
    assert klein.check_associativity() is None


def test_associativity_failure_is_located(F2):
    table = np.zeros((3, 3, 3), dtype=np.int64)
    for i in range(3):
        table[0, i, i] = table[i, 0, i] = 1
    table[1, 1, 2] = 1
    table[2, 1, 1] = 1
    A = FinAlgebra(F2, [(), (0,), (0, 0)], F2.GF(table))
    assert A.check_associativity() == (1, 1, 1)


def test_infinite_quotient_is_rejected(F3):
    alphabet = Alphabet.from_names(("x", "y"))
    system, _ = complete(RewriteSystem.from_relations(alphabet, F3, [parse_poly("yx - xy", alphabet, F3)]))
    with pytest.raises(InfiniteBasis):
        FinAlgebra.from_confluent(system, cap=30)


def test_tensor_square_matches_materialized(klein, F2):
    T = tensor_square(klein)
    big = T.materialize()
    assert big.dim == T.dim == 16
    assert same(big.unit(), T.unit().reshape(-1))
    rng = np.random.default_rng(11)
    d = klein.dim
    for _ in range(10):
        X = random_vector(F2, d * d, rng).reshape(d, d)
        Y = random_vector(F2, d * d, rng).reshape(d, d)
        assert same(T.mul(X, Y).reshape(-1), big.mul(X.reshape(-1), Y.reshape(-1)))


def test_mul_pure_matches_mul(klein, F2):
    T = tensor_square(klein)
    rng = np.random.default_rng(12)
    d = klein.dim
    for _ in range(10):
        X = random_vector(F2, d * d, rng).reshape(d, d)
        u, v = random_vector(F2, d, rng), random_vector(F2, d, rng)
        assert same(T.mul_pure(X, u, v), T.mul(X, T.pure(u, v)))


def test_generated_subspace_dim(klein, F2):
    assert generated_subspace_dim([klein.element("g")], klein) == 2
    assert generated_subspace_dim([klein.element("g"), klein.element("h")], klein) == 4
    A = algebra_of(("x",), ["x^3"], F2)
    assert generated_subspace_dim([A.element("x")], A) == 3

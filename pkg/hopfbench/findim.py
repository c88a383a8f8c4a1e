"""Finite-dimensional algebras given by structure constants."""

import logging

import numpy as np

from hopfbench.errors import HopfbenchError, InfiniteBasis
from hopfbench.freealg import NcPoly, format_poly, parse_poly
from hopfbench.gf import EchelonBasis, _ints
from hopfbench.rewrite import enumerate_basis

logger = logging.getLogger(__name__)


class FinAlgebra:
    """An associative unital algebra with basis e_0..e_{d-1}.

    ``mult[i, j, k]`` is the coefficient of e_k in e_i e_j. Elements are
    coordinate row vectors.
    """

    def __init__(self, field, basis, mult, alphabet=None, system=None, unit_label=()):
        self.field = field
        self.basis = tuple(basis)
        self.mult = mult
        self.alphabet = alphabet
        self.system = system
        self.index = {w: i for i, w in enumerate(self.basis)}
        self.unit_label = unit_label
        self._right = {}

    @classmethod
    def from_confluent(cls, system, cap=None):
        """Structure constants of k<X>/I from a confluent rewriting system."""
        words, finite = enumerate_basis(system, cap)
        if not finite:
            raise InfiniteBasis(f"basis did not close below {len(words)} words")
        F = system.field
        d = len(words)
        index = {w: i for i, w in enumerate(words)}
        table = np.zeros((d, d, d), dtype=np.int64)
        for i, u in enumerate(words):
            for j, v in enumerate(words):
                for w, c in system.normal_form_word(u + v).items():
                    table[i, j, index[w]] = c
        logger.debug("structure constants built for dimension %d", d)
        return cls(F, words, F.GF(table), system.alphabet, system)

    @property
    def dim(self):
        return len(self.basis)

    def unit(self):
        return self.field.basis_vector(self.dim, self.index[self.unit_label])

    def basis_element(self, i):
        return self.field.basis_vector(self.dim, i)

    def word_vector(self, word):
        return self.vector(self.system.normal_form_word(tuple(word)))

    def vector(self, coords):
        v = self.field.zeros(self.dim)
        for w, c in coords.items():
            v[self.index[w]] = c
        return v

    def element(self, poly):
        """Coordinates of a free-algebra polynomial in the quotient."""
        if isinstance(poly, str):
            poly = parse_poly(poly, self.alphabet, self.field)
        return self.vector(self.system.normal_form(poly).terms)

    def to_poly(self, v):
        return NcPoly(self.field, {self.basis[i]: int(c) for i, c in enumerate(_ints(v)) if c})

    def left_mult_matrix(self, a):
        """L_a with (a b) = b @ L_a."""
        d = self.dim
        return (a @ self.mult.reshape(d, d * d)).reshape(d, d)

    def right_mult_matrix(self, b):
        """R_b with (a b) = a @ R_b."""
        d = self.dim
        return (self.mult.transpose(0, 2, 1).reshape(d * d, d) @ b).reshape(d, d)

    def cached_right(self, b):
        key = tuple(_ints(b).tolist())
        R = self._right.get(key)
        if R is None:
            R = self._right[key] = self.right_mult_matrix(b)
        return R

    def mul(self, a, b):
        return b @ self.left_mult_matrix(a)

    def product(self, elements):
        result = self.unit()
        for e in elements:
            result = self.mul(result, e)
        return result

    def power(self, a, n):
        if n < 0:
            return self.power(self.inverse(a), -n)
        result = self.unit()
        for _ in range(n):
            result = self.mul(result, a)
        return result

    def commutator(self, a, b):
        return self.mul(a, b) - self.mul(b, a)

    def inverse(self, a):
        try:
            return np.linalg.solve(self.left_mult_matrix(a).T, self.unit())
        except np.linalg.LinAlgError as e:
            raise HopfbenchError("element is not invertible") from e

    def is_zero(self, v):
        return not np.any(_ints(v))

    def check_associativity(self):
        """Return None, or the first basis triple (i, j, k) that fails."""
        d = self.dim
        M = self.mult
        flat = M.reshape(d * d, d)
        for i in range(d):
            left = M[i] @ M.reshape(d, d * d)
            right = (flat @ M[i]).reshape(d, d * d)
            bad = np.argwhere(_ints(left) != _ints(right))
            if bad.size:
                j, km = bad[0]
                return i, int(j), int(km) // d
        return None

    def format_vector(self, v):
        return format_poly(self.to_poly(v), self.alphabet) if self.alphabet else str(_ints(v).tolist())


class TensorSquare:
    """A ⊗ A without materializing its structure constants.

    An element sum X[i, j] e_i ⊗ e_j is stored as the d x d matrix X.
    """

    def __init__(self, algebra):
        self.algebra = algebra
        self.field = algebra.field

    @property
    def dim(self):
        return self.algebra.dim**2

    def unit(self):
        u = self.algebra.unit()
        return self.pure(u, u)

    def pure(self, u, v):
        return u[:, None] * v[None, :]

    def mul_pure(self, X, u, v):
        """X · (u ⊗ v)."""
        A = self.algebra
        return A.cached_right(u).T @ X @ A.cached_right(v)

    def mul(self, X, Y):
        d = self.algebra.dim
        M = self.algebra.mult
        first = M.transpose(1, 2, 0).reshape(d * d, d) @ X
        second = first.reshape(d, d, d).transpose(1, 2, 0).reshape(d * d, d) @ Y
        return second.reshape(d, d * d) @ M.reshape(d * d, d)

    def materialize(self):
        """The tensor square as a FinAlgebra, for d <= 16 only."""
        A = self.algebra
        d = A.dim
        if d > 16:
            raise HopfbenchError(f"tensor square of dimension {d * d} is too large to materialize")
        M = A.mult
        big = (M[:, None, :, None, :, None] * M[None, :, None, :, None, :]).reshape(d * d, d * d, d * d)
        basis = [(u, v) for u in A.basis for v in A.basis]
        return FinAlgebra(A.field, basis, big, unit_label=((), ()))


def tensor_square(algebra):
    return TensorSquare(algebra)


def generated_subspace_dim(generators, algebra):
    """Dimension of the unital subalgebra generated by the given elements."""
    span = EchelonBasis(algebra.field, algebra.dim)
    unit = algebra.unit()
    span.add(unit)
    queue = [unit]
    while queue:
        v = queue.pop()
        for g in generators:
            w = algebra.mul(v, g)
            if span.add(w):
                queue.append(w)
    return span.rank

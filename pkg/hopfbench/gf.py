"""Exact arithmetic in GF(p^k) and the dense linear algebra built on it.

Field elements travel through the package as plain ints: the integer
encoding of galois, i.e. the coefficient vector of the element over the
Conway modulus read as a base-p number, lowest coefficient first. Vectors
and matrices are galois ``FieldArray`` instances.
"""

import functools
import logging

import galois
import numpy as np

from hopfbench.errors import FieldError, ParseError

logger = logging.getLogger(__name__)

# largest extension degree per characteristic
SUPPORTED_DEGREES = {2: 8, 3: 8, 5: 5}
MAX_ORDER = 6561
# fields up to this order get precomputed scalar tables
TABLE_ORDER = 256


def _ints(arr):
    return np.asarray(arr.view(np.ndarray), dtype=np.int64)


class Field:
    """A finite field GF(p^k) with int-encoded scalar operations."""

    def __init__(self, p, k, GF):
        self.p = p
        self.k = k
        self.q = p**k
        self.GF = GF
        if k == 1:
            self.modulus = (0, 1)
        else:
            self.modulus = tuple(int(c) for c in reversed(GF.irreducible_poly.coeffs))
        self._add = self._mul = self._neg = self._inv = None
        if self.q <= TABLE_ORDER:
            elems = GF.elements
            self._add = _ints(elems[:, None] + elems[None, :]).tolist()
            self._mul = _ints(elems[:, None] * elems[None, :]).tolist()
            self._neg = _ints(-elems).tolist()
            self._inv = [0] + _ints(elems[1:] ** -1).tolist()

    @property
    def name(self):
        return f"GF({self.q})"

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    def __reduce__(self):
        return (make_field, (self.p, self.k))

    # scalar operations

    def add(self, a, b):
        if self._add is not None:
            return self._add[a][b]
        return int(self.GF(a) + self.GF(b))

    def neg(self, a):
        if self._neg is not None:
            return self._neg[a]
        return int(-self.GF(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._mul is not None:
            return self._mul[a][b]
        return int(self.GF(a) * self.GF(b))

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.name}")
        if self._inv is not None:
            return self._inv[a]
        return int(self.GF(a) ** -1)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def from_int(self, n):
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def elements(self):
        return range(self.q)

    def prime_subfield(self):
        return range(self.p)

    def nonzero(self):
        return range(1, self.q)

    # arrays

    def array(self, data):
        return self.GF(np.asarray(data, dtype=np.int64))

    def zeros(self, shape):
        return self.GF.Zeros(shape)

    def identity(self, n):
        return self.GF.Identity(n)

    def basis_vector(self, n, i):
        v = self.GF.Zeros(n)
        v[i] = 1
        return v


@functools.lru_cache(maxsize=None)
def make_field(p, k=1):
    """Construct GF(p^k) over the Conway modulus."""
    if p not in SUPPORTED_DEGREES or not 1 <= k <= SUPPORTED_DEGREES[p] or p**k > MAX_ORDER:
        raise FieldError(f"unsupported field GF({p}^{k})")
    try:
        if k == 1:
            GF = galois.GF(p)
        else:
            GF = galois.GF(p**k, irreducible_poly=galois.conway_poly(p, k))
    except LookupError as e:
        raise FieldError(f"no modulus available for GF({p}^{k}): {e}") from e
    logger.debug("built field GF(%d^%d)", p, k)
    return Field(p, k, GF)


def parse_field(text):
    """Parse ``"p,k"`` or ``"p"`` into a field."""
    try:
        parts = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as e:
        raise ParseError(f"bad field specification {text!r}") from e
    if len(parts) == 1:
        parts.append(1)
    if len(parts) != 2:
        raise ParseError(f"bad field specification {text!r}")
    return make_field(*parts)


_OPS = {
    "add": lambda F, a, b: F.add(a, b),
    "sub": lambda F, a, b: F.sub(a, b),
    "mul": lambda F, a, b: F.mul(a, b),
    "div": lambda F, a, b: F.div(a, b),
    "neg": lambda F, a, b: F.neg(a),
    "inv": lambda F, a, b: F.inv(a),
    "pow": lambda F, a, n: F.pow(a, n),
}


def field_arith(F, op, a, b=None):
    """Apply a named scalar operation; inv and neg ignore b, pow reads it as the exponent."""
    if op not in _OPS:
        raise ValueError(f"unknown field operation {op!r}")
    return _OPS[op](F, a, b)


def rank_nullspace(M):
    """Rank of M and a basis (rows) of its right null space."""
    rows, cols = M.shape
    GF = type(M)
    if cols == 0:
        return 0, GF.Zeros((0, 0))
    if rows == 0:
        return 0, GF.Identity(cols)
    rank = int(np.linalg.matrix_rank(M))
    return rank, M.null_space()


def left_nullspace(M):
    rows, cols = M.shape
    if cols == 0:
        return type(M).Identity(rows)
    if rows == 0:
        return type(M).Zeros((0, 0))
    return M.left_null_space()


def roots_univariate(coeffs, F):
    """Roots in F of the polynomial with little-endian coefficients."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise ValueError("polynomial has degree < 1")
    poly = galois.Poly(list(reversed(coeffs)), field=F.GF)
    values = poly(F.GF.elements)
    return {int(i) for i in np.flatnonzero(_ints(values) == 0)}


def kron(A, B):
    a0, a1 = A.shape
    b0, b1 = B.shape
    return (A[:, None, :, None] * B[None, :, None, :]).reshape(a0 * b0, a1 * b1)


def block_rank(M):
    """Rank of M computed blockwise over its connected row/column support."""
    rows, cols = M.shape
    if rows == 0 or cols == 0:
        return 0
    mask = _ints(M) != 0
    parent = list(range(cols))

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    row_lead = []
    for r in range(rows):
        nz = np.flatnonzero(mask[r])
        if nz.size == 0:
            row_lead.append(-1)
            continue
        root = find(int(nz[0]))
        for c in nz[1:]:
            other = find(int(c))
            if other != root:
                parent[other] = root
        row_lead.append(int(nz[0]))

    blocks = {}
    for r, lead in enumerate(row_lead):
        if lead >= 0:
            blocks.setdefault(find(lead), [[], []])[0].append(r)
    for c in range(cols):
        root = find(c)
        if root in blocks:
            blocks[root][1].append(c)
    return sum(int(np.linalg.matrix_rank(M[np.ix_(rs, cs)])) for rs, cs in blocks.values())


class EchelonBasis:
    """Incrementally maintained reduced row echelon basis of a subspace."""

    def __init__(self, F, dim):
        self.field = F
        self.dim = dim
        self._rows = []

    @property
    def rank(self):
        return len(self._rows)

    def reduce(self, v):
        v = v.copy()
        for pivot, row in self._rows:
            c = v[pivot]
            if c != 0:
                v = v - c * row
        return v

    def contains(self, v):
        return not np.any(_ints(self.reduce(v)))

    def add(self, v):
        """Insert v; return True iff it enlarged the span."""
        v = self.reduce(v)
        nz = np.flatnonzero(_ints(v))
        if nz.size == 0:
            return False
        pivot = int(nz[0])
        v = v / v[pivot]
        self._rows = [(p, row - row[pivot] * v) if row[pivot] != 0 else (p, row) for p, row in self._rows]
        self._rows.append((pivot, v))
        return True

    def matrix(self):
        if not self._rows:
            return self.field.zeros((0, self.dim))
        return type(self._rows[0][1])(np.stack([_ints(row) for _, row in self._rows]))

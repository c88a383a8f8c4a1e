"""Braided vector spaces and graded dimensions of their Nichols algebras.

The degree-n component of B(V) is the image of the quantum symmetrizer
Ω_n = Σ_σ ϱ(σ) on V^{⊗n}, where ϱ lifts a permutation along one reduced
word and sends s_i to c acting on tensor factors i, i+1. Matrices act on
column vectors; e_i ⊗ e_j has index i*m + j.
"""

import enum
import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np
from tqdm import tqdm

from hopfbench import config
from hopfbench.errors import BraidEquationError, BudgetExceeded, ParseError, YdCompatibilityError
from hopfbench.gf import _ints, block_rank, kron

logger = logging.getLogger(__name__)


def _apply_right(X, c, i, n, m):
    """X @ c_i, where c_i is c on factors i, i+1 of V^{⊗n} (1-based)."""
    rows = X.shape[0]
    a, b = m ** (i - 1), m ** (n - i - 1)
    Y = X.reshape(rows, a, m * m, b).transpose(0, 1, 3, 2).reshape(rows * a * b, m * m) @ c
    return Y.reshape(rows, a, b, m * m).transpose(0, 1, 3, 2).reshape(rows, m**n)


class BraidedSpace:
    """A finite-dimensional space V with an invertible solution c of the braid equation."""

    def __init__(self, field, dim, c, label=""):
        self.field = field
        self.dim = dim
        self.c = c
        self.label = label
        if c.shape != (dim * dim, dim * dim):
            raise BraidEquationError(f"braiding must be {dim * dim} x {dim * dim}, got {c.shape}")
        if int(np.linalg.matrix_rank(c)) != dim * dim:
            raise BraidEquationError(f"braiding {label} is not invertible")
        if not check_braid_equation(self):
            raise BraidEquationError(f"braiding {label} fails the braid equation")

    def __repr__(self):
        return f"BraidedSpace({self.label or self.dim})"


def check_braid_equation(V):
    c12 = braid_operator(V, 3, 1)
    c23 = braid_operator(V, 3, 2)
    return bool(np.all(_ints(c12 @ c23 @ c12) == _ints(c23 @ c12 @ c23)))


def braid_operator(V, n, i):
    """c acting on factors i, i+1 of V^{⊗n}."""
    if not 1 <= i < n:
        raise ValueError(f"braid generator {i} out of range for n = {n}")
    return _apply_right(V.field.identity(V.dim**n), V.c, i, n, V.dim)


def braiding_from_actions(F, actions):
    """c(v_a ⊗ v_b) = deg(v_a)·v_b ⊗ v_a, with deg(v_a) acting by actions[a]."""
    m = len(actions)
    c = np.zeros((m * m, m * m), dtype=np.int64)
    for a, D in enumerate(actions):
        D = _ints(D)
        for b in range(m):
            for k in range(m):
                c[k * m + a, a * m + b] = D[k, b]
    return F.GF(c)


def diagonal(F, q, label=""):
    """c(x_i ⊗ x_j) = q_ij x_j ⊗ x_i."""
    m = len(q)
    c = np.zeros((m * m, m * m), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            c[j * m + i, i * m + j] = q[i][j]
    return BraidedSpace(F, m, F.GF(c), label or "diagonal")


def trivial(F, m):
    return diagonal(F, [[1] * m for _ in range(m)], label=f"trivial:{m}")


def jordan(F, s, m=2):
    """c(x_i ⊗ x_j) = (s x_j + x_{j-1}) ⊗ x_i."""
    J = np.zeros((m, m), dtype=np.int64)
    for j in range(m):
        J[j, j] = s
        if j:
            J[j - 1, j] = 1
    return BraidedSpace(F, m, braiding_from_actions(F, [F.GF(J)] * m), f"jordan:{s},{m}")


@dataclass(frozen=True, eq=False)
class YdModule:
    """A Yetter-Drinfeld module over the abelian group C_{n_1} x ... x C_{n_r}.

    ``actions[i]`` is the matrix of the i-th cyclic generator (column
    convention), ``degrees[b]`` the exponent vector of the degree of v_b.
    """

    field: object
    group_orders: tuple
    actions: tuple
    degrees: tuple
    label: str = ""

    def __post_init__(self):
        F = self.field
        m = len(self.degrees)
        mats = [_ints(A) for A in self.actions]
        if len(mats) != len(self.group_orders):
            raise YdCompatibilityError("one action matrix per group generator is required")
        for A, order in zip(self.actions, self.group_orders):
            if A.shape != (m, m):
                raise YdCompatibilityError(f"action matrix must be {m} x {m}")
            if np.any(_ints(_matrix_power(F, A, order)) != _ints(F.identity(m))):
                raise YdCompatibilityError(f"action does not have order dividing {order}")
        for A, B in itertools.combinations(self.actions, 2):
            if np.any(_ints(A @ B) != _ints(B @ A)):
                raise YdCompatibilityError("actions of an abelian group must commute")
        for A in mats:
            for b in range(m):
                for j in np.flatnonzero(A[:, b]):
                    if self._degree(j) != self._degree(b):
                        raise YdCompatibilityError(f"action moves v_{b} out of its degree")

    def _degree(self, b):
        return tuple(e % n for e, n in zip(self.degrees[b], self.group_orders))

    @property
    def dim(self):
        return len(self.degrees)

    def degree_action(self, b):
        F = self.field
        result = F.identity(self.dim)
        for A, e in zip(self.actions, self.degrees[b]):
            result = result @ _matrix_power(F, A, e)
        return result

    def braided(self):
        return from_yd(self)


def _matrix_power(F, A, n):
    result = F.identity(A.shape[0])
    for _ in range(n):
        result = result @ A
    return result


def from_yd(module):
    actions = [module.degree_action(b) for b in range(module.dim)]
    return BraidedSpace(module.field, module.dim, braiding_from_actions(module.field, actions), module.label)


def cyclic_module(F, i, r, order):
    """M_{i,r}: the r-dimensional Jordan block over C_order in degree g^i."""
    J = np.eye(r, dtype=np.int64)
    for t in range(1, r):
        J[t - 1, t] = 1
    return YdModule(F, (order,), (F.GF(J),), tuple((i,) for _ in range(r)), f"M_{i},{r}")


def onedim(F, group_orders, degree, label=""):
    actions = tuple(F.identity(1) for _ in group_orders)
    return YdModule(F, tuple(group_orders), actions, (tuple(degree),), label or f"k_{degree}")


def direct_sum(first, second):
    if first.group_orders != second.group_orders or first.field != second.field:
        raise YdCompatibilityError("direct sum needs modules over the same group and field")
    F = first.field
    m1, m2 = first.dim, second.dim
    actions = []
    for A, B in zip(first.actions, second.actions):
        block = np.zeros((m1 + m2, m1 + m2), dtype=np.int64)
        block[:m1, :m1] = _ints(A)
        block[m1:, m1:] = _ints(B)
        actions.append(F.GF(block))
    label = f"{first.label}+{second.label}"
    return YdModule(F, first.group_orders, tuple(actions), first.degrees + second.degrees, label)


def bashev(F, k, l, lam):
    """Two-dimensional module over C2 x C2: g·y = y + x, h·y = y + λx, degree g^k h^l."""
    G = F.array([[1, 1], [0, 1]])
    H = F.array([[1, lam], [0, 1]])
    return YdModule(F, (2, 2), (G, H), ((k, l), (k, l)), f"bashev:{k},{l},{lam}")


class BraidingType(enum.Enum):
    DIAGONAL = "diagonal"
    JORDAN = "jordan"


def classify_bashev(F, k, l, lam):
    """The degree acts trivially exactly when k + lλ = 0; then c is the flip."""
    t = F.add(F.from_int(k), F.mul(F.from_int(l), lam))
    return BraidingType.DIAGONAL if t == 0 else BraidingType.JORDAN


def _ints_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as e:
        raise ParseError(f"expected integers in {text!r}") from e


def make_braided(text, F):
    """Parse ``diagonal:``, ``trivial:``, ``jordan:``, ``yd-cyclic:`` or ``bashev:`` descriptions."""
    kind, sep, body = text.partition(":")
    kind = kind.strip().lower()
    if not sep:
        raise ParseError(f"braiding description {text!r} has no ':'")
    if kind == "diagonal":
        rows = [_ints_list(row) for row in body.split(";")]
        if any(len(r) != len(rows) for r in rows) or any(v >= F.q for r in rows for v in r):
            raise ParseError(f"bad diagonal braiding matrix {body!r}")
        return diagonal(F, rows, label=text)
    if kind == "trivial":
        (m,) = _ints_list(body)
        return trivial(F, m)
    if kind == "jordan":
        values = _ints_list(body)
        if len(values) not in (1, 2):
            raise ParseError(f"jordan expects s[,m], got {body!r}")
        return jordan(F, *values)
    if kind == "yd-cyclic":
        modules = []
        for part in body.split(";"):
            values = _ints_list(part)
            if len(values) != 3:
                raise ParseError(f"yd-cyclic expects i,r,order, got {part!r}")
            modules.append(cyclic_module(F, *values))
        module = modules[0]
        for other in modules[1:]:
            module = direct_sum(module, other)
        return from_yd(module)
    if kind == "bashev":
        values = _ints_list(body)
        if len(values) != 3:
            raise ParseError(f"bashev expects k,l,lambda, got {body!r}")
        return from_yd(bashev(F, *values))
    raise ParseError(f"unknown braiding kind {kind!r}")


def lehmer_code(perm):
    n = len(perm)
    return [sum(1 for j in range(i + 1, n) if perm[j] < perm[i]) for i in range(n)]


def apply_word(word, n):
    """Apply s_{w_1}, s_{w_2}, ... in turn to the identity arrangement."""
    seq = list(range(n))
    for i in word:
        seq[i - 1], seq[i] = seq[i], seq[i - 1]
    return tuple(seq)


def reduced_word(perm, method="insertion"):
    """A reduced word (1-based adjacent transpositions) with apply_word(word) == perm."""
    seq = list(perm)
    swaps = []
    if method == "insertion":
        for i in range(1, len(seq)):
            j = i
            while j > 0 and seq[j - 1] > seq[j]:
                seq[j - 1], seq[j] = seq[j], seq[j - 1]
                swaps.append(j)
                j -= 1
    elif method == "bubble":
        changed = True
        while changed:
            changed = False
            for j in range(len(seq) - 1):
                if seq[j] > seq[j + 1]:
                    seq[j], seq[j + 1] = seq[j + 1], seq[j]
                    swaps.append(j + 1)
                    changed = True
    else:
        raise ValueError(f"unknown reduced word method {method!r}")
    return tuple(reversed(swaps))


def _symmetrizers(V, n_max, budget):
    F, m = V.field, V.dim
    omega = F.identity(1)
    yield omega
    for k in range(1, n_max + 1):
        if m**k > budget:
            raise BudgetExceeded(f"dim V^⊗{k} = {m ** k} exceeds the symmetrizer budget {budget}")
        ext = kron(omega, F.identity(m))
        total = cur = ext
        for j in range(k - 1, 0, -1):
            cur = _apply_right(cur, V.c, j, k, m)
            total = total + cur
        omega = total
        yield omega


def quantum_symmetrizer(V, n, budget=None):
    """Ω_n via Ω_n = (Ω_{n-1} ⊗ id)(1 + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}⋯c_1)."""
    budget = budget or config.SYMMETRIZER_BUDGET
    for k, omega in enumerate(_symmetrizers(V, n, budget)):
        if k == n:
            return omega


def symmetrizer_by_permutations(V, n):
    """Ω_n summed over S_n directly, one reduced word per permutation."""
    F, m = V.field, V.dim
    total = F.zeros((m**n, m**n))
    for perm in itertools.permutations(range(n)):
        mat = F.identity(m**n)
        for i in reduced_word(perm):
            mat = _apply_right(mat, V.c, i, n, m)
        total = total + mat
    return total


@dataclass(frozen=True)
class NicholsDims:
    graded: tuple
    total: int
    closed: bool

    def describe(self):
        bound = "" if self.closed else ">= "
        return f"graded={list(self.graded)} total={bound}{self.total}"


def default_degree(m, budget):
    if m <= 2:
        return 8
    if m == 3:
        return 6
    return max(1, int(math.log(budget) / math.log(m)))


def nichols_dims(V, n_max=None, budget=None):
    """Graded dimensions of B(V) up to n_max.

    Every degree up to n_max is computed. ``closed`` means the dimensions
    vanish from some degree on through n_max, so the total is taken as
    exact; otherwise the total is a lower bound.
    """
    budget = budget or config.SYMMETRIZER_BUDGET
    if n_max is None:
        n_max = default_degree(V.dim, budget)
    graded = []
    for n, omega in enumerate(
        tqdm(_symmetrizers(V, n_max, budget), total=n_max + 1, desc=V.label or "nichols",
             disable=not config.PROGRESS, leave=False)
    ):
        rank = block_rank(omega) if n else 1
        graded.append(rank)
        logger.debug("%s: degree %d has dimension %d", V.label, n, rank)
    first_zero = graded.index(0) if 0 in graded else None
    closed = first_zero is not None and not any(graded[first_zero:])
    if first_zero is not None and not closed:
        logger.info("%s: degree %d vanishes but a higher degree does not", V.label, first_zero)
    return NicholsDims(tuple(graded), sum(graded), closed)

"""Hopf presentations and the finite-dimensional Hopf algebras they define.

A presentation is an algebra presentation in which every generator is
tagged either group-like, Δ(g) = g ⊗ g, or (1, u)-skew primitive,
Δ(x) = x ⊗ 1 + u ⊗ x for a word u in the group-like generators. Building
one completes the relations, computes structure constants, extends Δ and
ε multiplicatively and derives the antipode.
"""

import enum
import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np
from tqdm import tqdm

from hopfbench import config
from hopfbench.errors import (
    AntipodeError,
    BudgetExceeded,
    HopfbenchError,
    InconsistentRelations,
    NotGrouplike,
    ParseError,
    PresentationError,
    YdCompatibilityError,
)
from hopfbench.findim import FinAlgebra, TensorSquare, generated_subspace_dim
from hopfbench.freealg import Alphabet, NcPoly, format_poly, parse_poly
from hopfbench.gf import EchelonBasis, _ints, left_nullspace, make_field
from hopfbench.rewrite import CompletionStatus, RewriteSystem, complete

logger = logging.getLogger(__name__)

# largest dimension for which the dense dim²-unknown antipode system is built
DENSE_SOLVE_DIM = 32


class TagKind(enum.Enum):
    GROUPLIKE = "grouplike"
    SKEW = "skewprim"


@dataclass(frozen=True)
class CoalgebraTag:
    kind: TagKind
    over: tuple = ()

    @classmethod
    def grouplike(cls):
        return cls(TagKind.GROUPLIKE)

    @classmethod
    def skew(cls, over=()):
        return cls(TagKind.SKEW, tuple(over))


@dataclass(frozen=True)
class HopfPresentation:
    field: object
    alphabet: Alphabet
    tags: tuple
    relations: tuple
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "tags", tuple(self.tags))
        object.__setattr__(self, "relations", tuple(self.relations))
        names = self.alphabet.names
        if len(self.tags) != len(names):
            raise PresentationError("every generator needs exactly one coalgebra tag")
        for name, tag in zip(names, self.tags):
            if tag.kind is TagKind.GROUPLIKE and tag.over:
                raise PresentationError(f"group-like {name} cannot carry a skew word")
            for letter in tag.over:
                if self.tags[letter].kind is not TagKind.GROUPLIKE:
                    raise PresentationError(
                        f"{name} is skew over {self.alphabet.format_word(tag.over)}, "
                        f"which uses the non-group-like {names[letter]}"
                    )
        for r in self.relations:
            if r.field != self.field:
                raise PresentationError("relation over a different field")

    @classmethod
    def build(cls, F, generators, tags, relations, precedence=None, name=""):
        """Convenience constructor from texts.

        ``tags`` maps each generator to None (group-like) or to the word it
        is skew primitive over (``"1"`` for primitive).
        """
        alphabet = Alphabet.from_names(generators, precedence)
        tag_list = []
        for g in alphabet.names:
            if g not in tags:
                raise PresentationError(f"generator {g} has no coalgebra tag")
            over = tags[g]
            if over is None:
                tag_list.append(CoalgebraTag.grouplike())
            else:
                tag_list.append(CoalgebraTag.skew(alphabet.parse_word(over)))
        polys = [parse_poly(r, alphabet, F) for r in relations]
        return cls(F, alphabet, tag_list, polys, name)

    def grouplike_letters(self):
        return [i for i, t in enumerate(self.tags) if t.kind is TagKind.GROUPLIKE]

    def skew_letters(self):
        return [i for i, t in enumerate(self.tags) if t.kind is TagKind.SKEW]

    def to_text(self):
        a = self.alphabet
        lines = []
        if self.name:
            lines.append(f"name: {self.name}")
        lines.append(f"field: {self.field.p} {self.field.k}")
        lines.append("generators: " + " ".join(a.names))
        lines.append("order: " + " ".join(a.precedence))
        groups = [a.names[i] for i in self.grouplike_letters()]
        if groups:
            lines.append("grouplike: " + " ".join(groups))
        for i in self.skew_letters():
            lines.append(f"skewprim: {a.names[i]} over {a.format_word(self.tags[i].over)}")
        for r in self.relations:
            lines.append(f"relation: {format_poly(r, a)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        entries = {"generators": None, "order": None, "field": None, "name": ""}
        grouplike, skew, relations = [], {}, []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition(":")
            if not sep:
                raise ParseError(f"line {lineno}: expected 'key: value'")
            key, value = key.strip().lower(), value.strip()
            if key in ("generators", "order", "field", "name"):
                entries[key] = value
            elif key == "grouplike":
                grouplike.extend(value.split())
            elif key == "skewprim":
                parts = value.split()
                if len(parts) != 3 or parts[1] != "over":
                    raise ParseError(f"line {lineno}: expected 'skewprim: x over u'")
                skew[parts[0]] = parts[2]
            elif key == "relation":
                relations.append(value)
            else:
                raise ParseError(f"line {lineno}: unknown key {key!r}")
        if entries["field"] is None or entries["generators"] is None:
            raise ParseError("presentation needs 'field:' and 'generators:' lines")
        try:
            p, k = (int(t) for t in entries["field"].replace(",", " ").split())
        except ValueError as e:
            raise ParseError(f"bad field line {entries['field']!r}") from e
        generators = entries["generators"].split()
        precedence = entries["order"].split() if entries["order"] else None
        tags = {g: None for g in grouplike}
        for g, over in skew.items():
            if g in tags:
                raise PresentationError(f"{g} is tagged twice")
            tags[g] = over
        return cls.build(make_field(p, k), generators, tags, relations, precedence, entries["name"])

    @classmethod
    def load(cls, path):
        return cls.from_text(Path(path).read_text())


class CollapseKind(enum.Enum):
    DIMENSION_DROP = "dimension-drop"
    NON_COIDEAL = "non-coideal"
    ANTIPODE_FAILURE = "antipode-failure"


@dataclass
class CollapseReport:
    kind: CollapseKind
    reason: str
    dim: int = 0
    claimed_dim: int = None


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: str = None
    scope: str = "basis"  # or "generators" when only the generators were checked


@dataclass
class AxiomReport:
    results: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def partial(self):
        return [r.name for r in self.results if r.scope != "basis"]


class HopfAlgebra:
    """A finite-dimensional Hopf algebra in coordinates.

    ``delta[b]`` is the d x d matrix of Δ(e_b), ``counit[b]`` is ε(e_b) and
    row i of ``antipode`` holds S(e_i).
    """

    def __init__(self, presentation, algebra, delta, counit, letter_terms, antipode=None):
        self.presentation = presentation
        self.algebra = algebra
        self.delta = delta
        self.counit = counit
        self.letter_terms = letter_terms
        self.antipode = antipode

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def name(self):
        return self.presentation.name

    def generator(self, name):
        return self.algebra.word_vector((self.presentation.alphabet.index(name),))

    def delta_of(self, v):
        d = self.dim
        return (v @ self.delta.reshape(d, d * d)).reshape(d, d)

    def counit_of(self, v):
        return int(v @ self.counit)

    def antipode_of(self, v):
        return v @ self.antipode

    def word_label(self, b):
        return self.algebra.alphabet.format_word(self.algebra.basis[b])

    @cached_property
    def group_elements(self):
        """The group generated by the group-like generators."""
        A = self.algebra
        gens = [A.word_vector((a,)) for a in self.presentation.grouplike_letters()]
        unit = A.unit()
        seen = {_key(unit): unit}
        queue = [unit]
        while queue:
            v = queue.pop()
            for g in gens:
                w = A.mul(v, g)
                if _key(w) not in seen:
                    seen[_key(w)] = w
                    queue.append(w)
        return list(seen.values())

    @cached_property
    def c1_basis(self):
        """Rows spanning the group elements and all (g, h)-skew primitives."""
        span = EchelonBasis(self.field, self.dim)
        group = self.group_elements
        for g in group:
            span.add(g)
        for g in group:
            for h in group:
                for row in skew_primitive_space(self, g, h):
                    span.add(row)
        return span.matrix()


def _key(v):
    return tuple(_ints(v).tolist())


def _delta_word(tensor, terms, word, memo):
    X = memo.get(word)
    if X is None:
        prev = _delta_word(tensor, terms, word[:-1], memo)
        X = None
        for u, v in terms[word[-1]]:
            step = tensor.mul_pure(prev, u, v)
            X = step if X is None else X + step
        memo[word] = X
    return X


def build_hopf(presentation, degree_cap=None, claimed_dim=None, basis_cap=None):
    """Build the Hopf algebra of a presentation, or report why it collapses.

    Raises BudgetExceeded when completion stops at its cap and InfiniteBasis
    when the quotient is not finite dimensional.
    """
    P = presentation
    F, alphabet = P.field, P.alphabet
    try:
        system = RewriteSystem.from_relations(alphabet, F, P.relations)
        system, status = complete(system, degree_cap)
    except InconsistentRelations as e:
        logger.info("%s: %s", P.name or "presentation", e)
        return CollapseReport(CollapseKind.DIMENSION_DROP, str(e), 0, claimed_dim)
    if status is CompletionStatus.CAP_EXCEEDED:
        raise BudgetExceeded(f"completion of {P.name or 'presentation'} exceeded its cap")
    cap = basis_cap or (4 * claimed_dim if claimed_dim else None)
    A = FinAlgebra.from_confluent(system, cap)
    d = A.dim
    if claimed_dim is not None and d < claimed_dim:
        return CollapseReport(CollapseKind.DIMENSION_DROP, f"dimension {d} < {claimed_dim}", d, claimed_dim)

    unit = A.unit()
    terms, eps_letter = {}, {}
    for a, tag in enumerate(P.tags):
        xa = A.word_vector((a,))
        if tag.kind is TagKind.GROUPLIKE:
            terms[a] = [(xa, xa)]
            eps_letter[a] = 1
        else:
            terms[a] = [(xa, unit), (A.word_vector(tag.over), xa)]
            eps_letter[a] = 0

    tensor = TensorSquare(A)
    memo = {(): tensor.unit()}
    for r in P.relations:
        X = F.zeros((d, d))
        e = 0
        for w, c in r.terms.items():
            X = X + F.GF(c) * _delta_word(tensor, terms, w, memo)
            if all(eps_letter[a] for a in w):
                e = F.add(e, c)
        if np.any(_ints(X)) or e:
            reason = f"relation {format_poly(r, alphabet)} does not generate a Hopf ideal"
            logger.info("%s: %s", P.name or "presentation", reason)
            return CollapseReport(CollapseKind.NON_COIDEAL, reason, d, claimed_dim)

    delta = F.zeros((d, d, d))
    counit = F.zeros(d)
    for b, w in enumerate(A.basis):
        delta[b] = _delta_word(tensor, terms, w, memo)
        counit[b] = int(all(eps_letter[a] for a in w))

    H = HopfAlgebra(P, A, delta, counit, terms)
    try:
        H.antipode = compute_antipode(H)
    except AntipodeError as e:
        return CollapseReport(CollapseKind.ANTIPODE_FAILURE, str(e), d, claimed_dim)
    logger.info("built %s of dimension %d", P.name or "Hopf algebra", d)
    return H


def _antipode_failures(H, S):
    """First basis indices where m(S⊗id)Δ and m(id⊗S)Δ differ from ηε."""
    A = H.algebra
    d = A.dim
    D = H.delta
    M2 = A.mult.reshape(d * d, d)
    expected = _ints(H.counit[:, None] * A.unit()[None, :])
    left = (S.T @ D.transpose(1, 0, 2).reshape(d, d * d)).reshape(d, d, d).transpose(1, 0, 2).reshape(d, d * d) @ M2
    right = (D.reshape(d * d, d) @ S).reshape(d, d * d) @ M2
    found = []
    for value in (left, right):
        bad = np.flatnonzero(np.any(_ints(value) != expected, axis=1))
        found.append(int(bad[0]) if bad.size else None)
    return found


def antipode_from_generators(H):
    """S from its values on generators, extended anti-multiplicatively.

    Group-likes go to their inverses and a (1, u)-skew primitive x to
    -S(u)x. Only used to cross-check ``compute_antipode``.
    """
    A = H.algebra
    P = H.presentation
    F = A.field
    d = A.dim
    S_letter = {}
    for a in P.grouplike_letters():
        try:
            S_letter[a] = A.inverse(A.word_vector((a,)))
        except HopfbenchError as e:
            raise AntipodeError(f"group-like {P.alphabet.names[a]} is not invertible") from e
    for a in P.skew_letters():
        su = A.unit()
        for letter in P.tags[a].over:
            su = A.mul(S_letter[letter], su)
        S_letter[a] = -A.mul(su, A.word_vector((a,)))
    S = F.zeros((d, d))
    for b, w in enumerate(A.basis):
        if not w:
            S[b] = A.unit()
        else:
            S[b] = A.mul(S_letter[w[-1]], S[A.index[w[:-1]]])
    return S


def convolution_system(H):
    """Matrix K with vec(S) @ K = vec(m(S⊗id)Δ).

    Unknowns are indexed (i, k) for S[i, k], equations (b, l) for the
    coefficient of e_l in m(S⊗id)Δ(e_b).
    """
    A = H.algebra
    d = A.dim
    # K[(i, k), (b, l)] = sum_j delta[b, i, j] mult[k, j, l]
    DT = H.delta.transpose(1, 0, 2).reshape(d * d, d)
    MT = A.mult.transpose(1, 0, 2).reshape(d, d * d)
    return (DT @ MT).reshape(d, d, d, d).transpose(0, 2, 1, 3).reshape(d * d, d * d)


def _substitution_order(H):
    """Order in which each equation b introduces only the unknown row S[b], or None."""
    D = _ints(H.delta)
    d = D.shape[0]
    deps = [set(np.flatnonzero(np.any(D[b] != 0, axis=1)).tolist()) - {b} for b in range(d)]
    waiting = {b: len(deps[b]) for b in range(d)}
    users = [[] for _ in range(d)]
    for b, ds in enumerate(deps):
        for i in ds:
            users[i].append(b)
    ready = [b for b in range(d) if not deps[b]]
    order = []
    while ready:
        b = ready.pop()
        order.append(b)
        for u in users[b]:
            waiting[u] -= 1
            if waiting[u] == 0:
                ready.append(u)
    return order if len(order) == d else None


def _solve_by_substitution(H, order):
    A = H.algebra
    D = H.delta
    S = A.field.zeros((A.dim, A.dim))
    for b in order:
        try:
            pivot = A.inverse(D[b, b])
        except HopfbenchError:
            return None
        rhs = H.counit[b] * A.unit()
        for i in np.flatnonzero(np.any(_ints(D[b]) != 0, axis=1)):
            if i != b:
                rhs = rhs - A.mul(S[i], D[b, i])
        S[b] = A.mul(rhs, pivot)
    return S


def compute_antipode(H):
    """The convolution inverse of the identity, as a matrix whose row i is S(e_i).

    Solves m(S⊗id)Δ = uε for the dim² unknowns of S. When the equations are
    block triangular with invertible pivots they are solved by substitution,
    otherwise the dense system is solved directly.
    """
    A = H.algebra
    d = A.dim
    order = _substitution_order(H)
    S = _solve_by_substitution(H, order) if order is not None else None
    if S is None:
        if d > DENSE_SOLVE_DIM:
            raise BudgetExceeded(f"dense antipode system of size {d * d} exceeds the limit")
        logger.debug("solving the dense antipode system for dimension %d", d)
        target = (H.counit[:, None] * A.unit()[None, :]).reshape(d * d)
        try:
            S = np.linalg.solve(convolution_system(H).T, target).reshape(d, d)
        except np.linalg.LinAlgError as e:
            raise AntipodeError("identity is not convolution-invertible") from e
    left, right = _antipode_failures(H, S)
    if left is not None or right is not None:
        where = left if left is not None else right
        raise AntipodeError(f"antipode axiom fails on {H.word_label(where)}")
    return S


def check_axioms(H, full_coassociativity=None):
    """Check coassociativity, counit, multiplicativity and antipode axioms.

    Above dimension 32 coassociativity is by default only checked on the
    generators, which suffices once Δ is multiplicative; the result is then
    marked with scope "generators".
    """
    A = H.algebra
    d = A.dim
    D = H.delta
    Dflat = D.reshape(d, d * d)
    report = AxiomReport()
    label = H.word_label

    if full_coassociativity is None:
        full_coassociativity = d <= 32
    if full_coassociativity:
        indices, scope = range(d), "basis"
    else:
        indices, scope = [A.index[w] for w in A.basis if len(w) <= 1], "generators"
    witness = None
    for b in indices:
        first = (Dflat.T @ D[b]).reshape(-1)
        second = (D[b] @ Dflat).reshape(-1)
        if np.any(_ints(first) != _ints(second)):
            witness = label(b)
            break
    report.results.append(AxiomResult("coassociativity", witness is None, witness, scope))

    identity = _ints(A.field.identity(d))
    left = (D.transpose(0, 2, 1).reshape(d * d, d) @ H.counit).reshape(d, d)
    right = (D.reshape(d * d, d) @ H.counit).reshape(d, d)
    bad = np.flatnonzero(np.any((_ints(left) != identity) | (_ints(right) != identity), axis=1))
    report.results.append(AxiomResult("counit", bad.size == 0, label(int(bad[0])) if bad.size else None))

    tensor = TensorSquare(A)
    witness = None
    eps_witness = None
    for a, pairs in H.letter_terms.items():
        xa = A.word_vector((a,))
        R = A.right_mult_matrix(xa)
        products = R @ Dflat
        eps_products = _ints(R @ H.counit)
        eps_a = H.counit_of(xa)
        for b in range(d):
            expected = None
            for u, v in pairs:
                step = tensor.mul_pure(D[b], u, v)
                expected = step if expected is None else expected + step
            if witness is None and np.any(_ints(products[b]) != _ints(expected).reshape(-1)):
                witness = f"{label(b)}·{A.alphabet.names[a]}"
            if eps_witness is None and eps_products[b] != A.field.mul(int(H.counit[b]), eps_a):
                eps_witness = f"{label(b)}·{A.alphabet.names[a]}"
    report.results.append(AxiomResult("delta-multiplicative", witness is None, witness))
    report.results.append(AxiomResult("counit-multiplicative", eps_witness is None, eps_witness))

    if H.antipode is None:
        report.results.append(AxiomResult("antipode-left", False, "missing"))
        report.results.append(AxiomResult("antipode-right", False, "missing"))
    else:
        left, right = _antipode_failures(H, H.antipode)
        report.results.append(AxiomResult("antipode-left", left is None, None if left is None else label(left)))
        report.results.append(AxiomResult("antipode-right", right is None, None if right is None else label(right)))
    return report


def is_grouplike(H, v):
    if not np.any(_ints(v)) or H.counit_of(v) != 1:
        return False
    return bool(np.all(_ints(H.delta_of(v)) == _ints(v[:, None] * v[None, :])))


def skew_primitive_space(H, g, h):
    """Basis (rows) of P_{g,h} = {c : Δ(c) = c ⊗ g + h ⊗ c}."""
    for v in (g, h):
        if not is_grouplike(H, v):
            raise NotGrouplike(f"{H.algebra.format_vector(v)} is not group-like")
    d = H.dim
    identity = H.field.identity(d)
    K = (
        H.delta.reshape(d, d * d)
        - (identity[:, :, None] * g[None, None, :]).reshape(d, d * d)
        - (h[None, :, None] * identity[:, None, :]).reshape(d, d * d)
    )
    return left_nullspace(K)


def grouplikes(H, mode="verify", elements=None, budget=None):
    """Group-like elements of H.

    ``verify`` filters the given elements (default: the generated group);
    ``enumerate`` scans every vector of H and is budget guarded.
    """
    if mode == "verify":
        candidates = H.group_elements if elements is None else elements
        return [v for v in candidates if is_grouplike(H, v)]
    if mode != "enumerate":
        raise ValueError(f"unknown mode {mode!r}")
    budget = budget or config.GROUPLIKE_BUDGET
    F, d = H.field, H.dim
    total = F.q**d
    if total > budget:
        raise BudgetExceeded(f"{total} vectors exceed the group-like budget {budget}")
    Dflat = H.delta.reshape(d, d * d)
    powers = F.q ** np.arange(d, dtype=np.int64)
    chunk = 4096
    found = []
    for start in tqdm(range(0, total, chunk), desc="group-likes", disable=not config.PROGRESS, leave=False):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        V = F.GF((idx[:, None] // powers[None, :]) % F.q)
        lhs = _ints(V @ Dflat)
        rhs = _ints((V[:, :, None] * V[:, None, :]).reshape(len(idx), d * d))
        ok = np.all(lhs == rhs, axis=1) & (_ints(V @ H.counit) == 1)
        found.extend(V[i] for i in np.flatnonzero(ok))
    return found


def coinvariants(H):
    """Rows spanning the right coinvariants of the projection onto the group part.

    The projection keeps basis words made of group-like letters and kills
    every word containing a skew primitive letter.
    """
    A = H.algebra
    d = A.dim
    skew = set(H.presentation.skew_letters())
    mask = H.field.array([0 if any(a in skew for a in w) else 1 for w in A.basis])
    identity = H.field.identity(d)
    K = (H.delta * mask[None, None, :]).reshape(d, d * d) - (identity[:, :, None] * A.unit()[None, None, :]).reshape(
        d, d * d
    )
    return left_nullspace(K)


@dataclass
class HopfMorphism:
    source: HopfAlgebra
    target: HopfAlgebra
    images: dict  # generator name -> vector in target
    matrix: object  # row b is the image of the source basis element e_b

    def apply(self, v):
        return v @ self.matrix


def _closure_size(A, gens, limit):
    unit = A.unit()
    seen = {_key(unit)}
    queue = [unit]
    while queue and len(seen) <= limit:
        v = queue.pop()
        for g in gens:
            w = A.mul(v, g)
            if _key(w) not in seen:
                seen.add(_key(w))
                queue.append(w)
    return len(seen)


def _certify(H1, H2, images):
    A1, A2 = H1.algebra, H2.algebra
    d = A1.dim
    Phi = H1.field.zeros((d, d))
    for b, w in enumerate(A1.basis):
        if not w:
            Phi[b] = A2.unit()
        else:
            Phi[b] = A2.mul(Phi[A1.index[w[:-1]]], images[w[-1]])
    if int(np.linalg.matrix_rank(Phi)) != d:
        return None
    c1 = H1.c1_basis
    if c1.shape[0] and int(np.linalg.matrix_rank(c1 @ Phi)) != c1.shape[0]:
        return None
    if generated_subspace_dim(list(images.values()), A2) != A2.dim:
        return None
    names = H1.presentation.alphabet.names
    return HopfMorphism(H1, H2, {names[a]: v for a, v in images.items()}, Phi)


def iso_search(H1, H2, limit=None, budget=None):
    """Hopf isomorphisms H1 -> H2 found by backtracking over generator images.

    Group-like generators go to group-likes of H2, a (1, u)-skew primitive to
    a nonzero element of P_{1, φ(u)}(H2). A relation is tested as soon as its
    last generator has an image.
    """
    budget = budget or config.ISO_BUDGET
    if H1.dim != H2.dim or H1.field != H2.field:
        return []
    G2 = H2.group_elements
    if len(H1.group_elements) != len(G2):
        return []
    P = H1.presentation
    A2 = H2.algebra
    F = H1.field
    group_letters = P.grouplike_letters()
    order = group_letters + P.skew_letters()
    if len(G2) ** len(group_letters) > budget:
        raise BudgetExceeded("too many group-like assignments")
    position = {a: i for i, a in enumerate(order)}
    checks = [[] for _ in order]
    for r in P.relations:
        letters = {a for w in r.terms for a in w}
        checks[max((position[a] for a in letters), default=0)].append(r)

    spaces = {}
    images = {}
    found = []
    visited = 0

    def evaluate(r):
        acc = F.zeros(A2.dim)
        for w, c in r.terms.items():
            acc = acc + F.GF(c) * A2.product(images[a] for a in w)
        return acc

    def candidates(a):
        tag = P.tags[a]
        if tag.kind is TagKind.GROUPLIKE:
            return G2
        target = A2.product(images[b] for b in tag.over)
        key = _key(target)
        if key not in spaces:
            spaces[key] = skew_primitive_space(H2, A2.unit(), target)
        basis = spaces[key]
        k = basis.shape[0]
        if F.q**k - 1 > budget:
            raise BudgetExceeded(f"skew primitive space of dimension {k} is too large to enumerate")
        return [F.GF(list(c)) @ basis for c in itertools.product(range(F.q), repeat=k) if any(c)]

    def search(step):
        nonlocal visited
        if step == len(order):
            morphism = _certify(H1, H2, images)
            if morphism is not None:
                found.append(morphism)
            return
        a = order[step]
        for v in candidates(a):
            visited += 1
            if visited > budget:
                raise BudgetExceeded("isomorphism search exceeded its budget")
            images[a] = v
            if all(A2.is_zero(evaluate(r)) for r in checks[step]):
                if step == len(group_letters) - 1:
                    gens = [images[g] for g in group_letters]
                    if _closure_size(A2, gens, len(G2)) != len(G2):
                        continue
                search(step + 1)
            if limit and len(found) >= limit:
                break
        images.pop(a, None)

    search(0)
    logger.debug("iso search %s -> %s: %d found, %d nodes", H1.name, H2.name, len(found), visited)
    return found


def bosonize(group, vector_names, action, coaction, nichols_relations=(), name=""):
    """Presentation of B(V) # kG for a Yetter-Drinfeld module V over kG.

    ``group`` is a presentation with only group-like generators. ``action``
    maps each group generator to the matrix A with g·v_b = Σ_j A[j, b] v_j,
    ``coaction`` maps each vector name to its degree as a word.
    """
    F = group.field
    if group.skew_letters():
        raise PresentationError("the group presentation may only have group-like generators")
    m = len(vector_names)
    gnames = group.alphabet.names
    alphabet = Alphabet.from_names(
        gnames + tuple(vector_names), tuple(reversed(vector_names)) + group.alphabet.precedence
    )
    mats = {}
    for gname in gnames:
        if gname not in action:
            raise YdCompatibilityError(f"no action given for {gname}")
        mats[group.alphabet.index(gname)] = F.array(action[gname])

    system, status = complete(RewriteSystem.from_relations(group.alphabet, F, group.relations))
    if status is not CompletionStatus.CONFLUENT:
        raise BudgetExceeded("group presentation did not complete")
    G = FinAlgebra.from_confluent(system)

    # the action must respect the group relations
    for r in group.relations:
        acc = F.zeros((m, m))
        for w, c in r.terms.items():
            mat = F.identity(m)
            for a in w:
                mat = mat @ mats[a]
            acc = acc + F.GF(c) * mat
        if np.any(_ints(acc)):
            raise YdCompatibilityError(f"action violates {format_poly(r, group.alphabet)}")

    degrees = []
    for vname in vector_names:
        if vname not in coaction:
            raise YdCompatibilityError(f"no degree given for {vname}")
        degrees.append(G.word_vector(group.alphabet.parse_word(coaction[vname])))
    for a, mat in mats.items():
        ga = G.word_vector((a,))
        ga_inv = G.inverse(ga)
        for b in range(m):
            conj = G.mul(G.mul(ga, degrees[b]), ga_inv)
            for j in np.flatnonzero(_ints(mat[:, b])):
                if _key(conj) != _key(degrees[j]):
                    raise YdCompatibilityError(
                        f"{gnames[a]}·{vector_names[b]} has a component outside degree "
                        f"{gnames[a]}·deg({vector_names[b]})·{gnames[a]}^-1"
                    )

    n = len(gnames)
    relations = list(group.relations)
    for a, mat in mats.items():
        for b in range(m):
            terms = {(a, n + b): 1}
            for j in np.flatnonzero(_ints(mat[:, b])):
                terms[(n + int(j), a)] = F.neg(int(mat[j, b]))
            relations.append(NcPoly(F, terms))
    relations.extend(parse_poly(r, alphabet, F) for r in nichols_relations)
    tags = [CoalgebraTag.grouplike() for _ in gnames]
    tags += [CoalgebraTag.skew(group.alphabet.parse_word(coaction[v])) for v in vector_names]
    return HopfPresentation(F, alphabet, tags, relations, name)

"""Machine-readable catalog of the classified pointed Hopf algebras.

Three scopes are covered: the 35 families of dimension p^4 whose
coradical is C_p and whose space of skew primitives has dimension three
(``T3.7-n``), the 197 families of dimension 16 in characteristic 2
(``T4.2-n``), and the parametric presentations behind them whose
resolvability is decided by a polynomial condition (``L3.5``, ``L3.9``,
``L3.10-mu0``, ``L3.10-munz``, ``L3.11``).

Relations are templates: ``{p}`` is the characteristic, ``{name}`` a
parameter (field values are substituted in parentheses, integer choices
bare). For every pair of generators that no relation template commutes
explicitly, ``[a,b]`` is added: the written presentations use ``k[...]``,
tensor products and bare power relations for commuting generators.
"""

import itertools
import logging
import re
from dataclasses import dataclass, field

from hopfbench.errors import CatalogError
from hopfbench.gf import roots_univariate
from hopfbench.hopf import HopfPresentation

logger = logging.getLogger(__name__)

PRECEDENCE = ("z", "y", "x", "k", "h", "g")


@dataclass(frozen=True)
class ParamSpec:
    name: str
    domain: object  # "field", "prime", "exponent" (1..p-1) or a tuple of ints

    def values(self, F):
        if self.domain == "field":
            return list(F.elements())
        if self.domain == "prime":
            return list(F.prime_subfield())
        if self.domain == "exponent":
            return list(range(1, F.p))
        return list(self.domain)

    def is_choice(self):
        return self.domain not in ("field", "prime")


@dataclass(frozen=True)
class FamilySpec:
    id: str
    source: str
    group: str
    generators: tuple
    tags: tuple  # (generator, skew word template or None)
    relations: tuple
    params: tuple = ()
    claimed_dim: object = None  # callable (p, values) -> int
    characteristic: int = None
    derived: tuple = ()  # (name, callable (values, F) -> int or str)
    ambiguity: object = None  # callable (values, F) -> bool
    ambiguity_text: str = ""
    iso: object = None  # callable (values1, values2, F) -> bool
    iso_text: str = ""
    label: str = ""
    notes: str = ""
    vacuous_primes: frozenset = frozenset()  # primes where the overlap obstruction vanishes identically
    item: int = None
    implied: tuple = field(default=(), compare=False)

    @property
    def precedence(self):
        return tuple(n for n in PRECEDENCE if n in self.generators)

    @property
    def param_names(self):
        return tuple(p.name for p in self.params)


_COMMUTATOR = re.compile(r"\[\s*([a-z])\s*,\s*([a-z])\s*\]")
_SWAP = re.compile(r"^\s*([a-z])([a-z])\s*-")


def implied_commutators(generators, relations):
    """``[a,b]`` for every generator pair no relation commutes explicitly."""
    covered = set()
    for r in relations:
        for a, b in _COMMUTATOR.findall(r):
            covered.add(frozenset((a, b)))
        m = _SWAP.match(r)
        if m:
            covered.add(frozenset(m.groups()))
    return tuple(
        f"[{a},{b}]" for a, b in itertools.combinations(generators, 2) if frozenset((a, b)) not in covered
    )


def _spec(**kwargs):
    spec = FamilySpec(**kwargs)
    implied = implied_commutators(spec.generators, spec.relations)
    return FamilySpec(**{**kwargs, "implied": implied})


# field helpers for the predicates


def _prime_elements(F):
    # roots of x^p - x
    coeffs = [0] * (F.p + 1)
    coeffs[1] = F.neg(1)
    coeffs[F.p] = 1
    return sorted(roots_univariate(coeffs, F))


def _same(key="lam"):
    return lambda a, b, F: a[key] == b[key]


def _shift(a, b, F):
    return a == b or a == F.add(b, 1)


def _shift_lam(a, b, F):
    return _shift(a["lam"], b["lam"], F)


def _iso_h2(a, b, F):
    lam, gam = a["lam"], b["lam"]
    for a1, a2, b1, b2 in itertools.product(_prime_elements(F), repeat=4):
        det = F.sub(F.mul(a1, b2), F.mul(a2, b1))
        if det and F.mul(F.add(a1, F.mul(b1, lam)), gam) == F.add(a2, F.mul(b2, lam)):
            return True
    return False


def _iso_h3(a, b, F):
    lam, gam, mu, nu = a["lam"], a["gam"], b["lam"], b["gam"]
    for a1, a2, b1, b2 in itertools.product(_prime_elements(F), repeat=4):
        if not F.sub(F.mul(a1, b2), F.mul(a2, b1)):
            continue
        if F.add(F.mul(lam, a1), F.mul(gam, b1)) == mu and F.add(F.mul(lam, a2), F.mul(gam, b2)) == nu:
            return True
    return False


def _scaled(a, b, F):
    return any(F.mul(a["lam"], alpha) == b["lam"] for alpha in _prime_elements(F) if alpha)


def _iso_h4(a, b, F):
    return a["i"] == b["i"] and _scaled(a, b, F)


def _iso_t42_9(a, b, F):
    lam, gam = a["lam"], b["lam"]
    if _shift(lam, gam, F):
        return True
    return any(F.mul(F.sub(lam, j), F.sub(gam, i)) == 1 for i in (0, 1) for j in (0, 1))


def _iso_t42_18(a, b, F):
    if a["mu"] != b["mu"]:
        return False
    lam, gam = a["lam"], b["lam"]
    if a["mu"] == 1:
        return lam == gam
    return lam == gam or F.mul(lam, gam) == F.add(lam, gam)


def _iso_t42_25(a, b, F):
    lam, gam = a["lam"], b["lam"]
    if F.mul(lam, gam) == F.add(lam, gam) or F.mul(F.add(1, lam), gam) == 1 or _shift(lam, gam, F):
        return True
    return any(F.add(1, F.mul(i, gam)) == F.mul(lam, gam) for i in (0, 1))


def _iso_t42_26(a, b, F):
    l1, l2, g1, g2 = a["lam"], a["gam"], b["lam"], b["gam"]
    for q, r, nu, iota in itertools.product((0, 1), repeat=4):
        if (q * iota + r * nu) % 2 != 1:
            continue
        if F.add(F.mul(q, g1), F.mul(r, g2)) == l1 and F.add(F.mul(nu, g1), F.mul(iota, g2)) == l2:
            return True
    return False


def _iso_t42_91(a, b, F):
    return _shift(a["lam"], b["lam"], F) and a["gam"] == b["gam"]


# ambiguity conditions


def _cond_l35(v, F):
    lhs = F.mul(v["l2"], v["l5"])
    rhs = F.add(F.mul(v["l3"], v["l4"]), F.mul(v["l1"], v["l6"]))
    return lhs == rhs


def _cond_l39(v, F):
    if F.p != 2:
        raise CatalogError("L3.9 declares its condition in characteristic 2 only")
    m, a, s = F.mul, F.add, F.sub
    l1, l2, l3, l4, l5, l6 = (v[f"l{i}"] for i in range(1, 7))
    c1, c2, c3, c4, c5, c6 = (v[f"c{i}"] for i in range(1, 7))
    equalities = [
        (m(l6, c1), m(l3, c4)),
        (m(l6, c2), m(l3, c5)),
        (m(l6, c3), m(l3, c6)),
        (m(l1, c1), m(l2, c2)),
        (m(l6, c2), 0),
        (m(l1, c4), m(l2, c5)),
        (m(l6, c4), 0),
        (m(l6, c4), m(l4, c1)),
        (m(l6, c5), m(l4, c2)),
        (m(l6, c6), m(l4, c3)),
        (a(m(s(l5, c1), c1), m(c2, c4)), 0),
        (a(m(s(l5, c1), c2), m(c2, c5)), 0),
        (a(m(s(l5, c1), c3), m(c2, c6)), 0),
        (a(m(s(l5, c5), c4), m(c1, c4)), 0),
        (a(m(s(l5, c5), c5), m(c2, c4)), 0),
        (a(m(s(l5, c5), c6), m(c3, c4)), 0),
        (m(l3, c1), 0),
        (m(l3, c2), 0),
        (m(l3, c3), 0),
        (m(l4, c4), 0),
        (m(l4, c5), 0),
        (m(l4, c6), 0),
        (m(l6, c1), m(l6, c5)),
    ]
    return all(x == y for x, y in equalities)


def _cond_l310_mu0(v, F):
    m1, m2, m3, m4 = v["m1"], v["m2"], v["m3"], v["m4"]
    p = F.p
    return (
        F.mul(m1, m3) == 0
        and F.mul(m1, m4) == 0
        and F.mul(m2, m3) == F.pow(m3, p)
        and F.mul(m2, m4) == F.mul(F.pow(m3, p - 1), m4)
        and F.mul(v["l1"], m3) == 0
        and F.mul(m3, v["l3"]) == 0
    )


def _cond_l310_munz(v, F):
    if (v["mu"] + 1) % F.p == 0:
        return True
    return F.mul(v["l1"], v["l4"]) == 0 and F.mul(v["l2"], v["l3"]) == 0


def _cond_l311(v, F):
    if F.p != 2:
        raise CatalogError("L3.11 declares its condition in characteristic 2 only")
    t = F.add(v["l1"], v["l2"])
    u = F.sub(v["l3"], v["l4"])
    return all(F.mul(f, x) == 0 for f in (t, u) for x in (v["l3"], v["l2"], v["l5"]))


# T3.7: g group-like of order p, x in P_{1,g}, y and z primitive

_LAM = (ParamSpec("lam", "field"),)

T37 = [
    (1, ["[x,y] - {lam}x", "[x,z]", "[y,z] - z", "x^{p}", "y^{p} - y", "z^{p}"], _LAM, _same(), "λ = γ", "H1(λ)"),
    (2, ["[x,y] - x", "[x,z] - (1 - g)", "[y,z] - z", "x^{p}", "y^{p} - y", "z^{p}"]),
    (3, ["gx - xg - g(1 - g)", "x^{p} - x", "y^{p} - y", "z^{p}", "[y,z] - z"]),
    (4, ["x^{p}", "y^{p} - y", "z^{p} - z"]),
    (5, ["x^{p} - y - {lam}z", "y^{p} - y", "z^{p} - z"], _LAM, _iso_h2,
     "(α1 + β1λ)γ = α2 + β2λ for some α, β in F_p with α1β2 - α2β1 != 0", "H2(λ)"),
    (6, ["[x,y] - x", "[x,z]", "[y,z]", "x^{p}", "y^{p} - y", "z^{p} - z"]),
    (7, ["[x,y] - x", "[x,z]", "[y,z]", "x^{p} - z", "y^{p} - y", "z^{p} - z"]),
    (8, ["[g,x] - g(1 - g)", "[x,y]", "[x,z]", "[y,z]", "x^{p} - x - {lam}y - {gam}z", "y^{p} - y", "z^{p} - z"],
     (ParamSpec("lam", "field"), ParamSpec("gam", "field")), _iso_h3,
     "λα1 + γβ1 = μ and λα2 + γβ2 = ν for some α, β in F_p with α1β2 - α2β1 != 0", "H3(λ,γ)"),
    (9, ["x^{p}", "y^{p} - y", "z^{p}"]),
    (10, ["x^{p} - z", "y^{p} - y", "z^{p}"]),
    (11, ["x^{p} - y", "y^{p} - y", "z^{p}"]),
    (12, ["x^{p} - y - z", "y^{p} - y", "z^{p}"]),
    (13, ["[x,y]", "[x,z] - (1 - g)", "[y,z]", "x^{p}", "y^{p} - y", "z^{p}"]),
    (14, ["[x,y]", "[x,z] - (1 - g)", "[y,z]", "x^{p} - y", "y^{p} - y", "z^{p}"]),
    (15, ["[x,y] - x", "[x,z]", "[y,z]", "x^{p}", "y^{p} - y", "z^{p}"]),
    (16, ["[x,y] - x", "[x,z]", "[y,z]", "x^{p} - z", "y^{p} - y", "z^{p}"]),
    (17, ["[g,x] - g(1 - g)", "[x,y]", "[x,z]", "[y,z]", "x^{p} - x - {lam}y - {i}z", "y^{p} - y", "z^{p}"],
     (ParamSpec("lam", "field"), ParamSpec("i", (0, 1))), _iso_h4,
     "i = j and λα = γ for some nonzero α in F_p", "H4(λ,i)"),
    (18, ["[g,x] - g(1 - g)", "[x,y]", "[x,z] - (1 - g)", "[y,z]", "x^{p} - x - {lam}y", "y^{p} - y", "z^{p}"],
     _LAM, _scaled, "λα = γ for some nonzero α in F_p", "H5(λ)"),
    (19, ["x^{p}", "y^{p} - z", "z^{p}"]),
    (20, ["x^{p} - z", "y^{p} - z", "z^{p}"]),
    (21, ["x^{p} - y", "y^{p} - z", "z^{p}"]),
    (22, ["[x,y] - (1 - g)", "[y,z]", "[x,z]", "x^{p}", "y^{p} - z", "z^{p}"]),
    (23, ["[x,y] - (1 - g)", "[y,z]", "[x,z]", "x^{p} - z", "y^{p} - z", "z^{p}"]),
    (24, ["gx - xg - g(1 - g)", "x^{p} - x", "y^{p} - z", "z^{p}"]),
    (25, ["gx - xg - g(1 - g)", "[x,y]", "[x,z]", "[y,z]", "x^{p} - x - z", "y^{p} - z", "z^{p}"]),
    (26, ["gx - xg - g(1 - g)", "[x,y]", "[x,z]", "[y,z]", "x^{p} - x - y", "y^{p} - z", "z^{p}"]),
    (27, ["gx - xg - g(1 - g)", "[x,y] - (1 - g)", "[x,z]", "[y,z]", "x^{p} - x - {lam}z", "y^{p} - z", "z^{p}"],
     _LAM, _same(), "λ = γ", "H6(λ)"),
    (28, ["x^{p}", "y^{p}", "z^{p}"]),
    (29, ["gx - xg - g(1 - g)", "x^{p} - x", "y^{p}", "z^{p}"]),
    (30, ["x^{p} - y", "y^{p}", "z^{p}"]),
    (31, ["gx - xg - g(1 - g)", "[x,y]", "[x,z]", "[y,z]", "x^{p} - x - y", "y^{p}", "z^{p}"]),
    (32, ["[x,y] - (1 - g)", "[x,z]", "[y,z]", "x^{p}", "y^{p}", "z^{p}"]),
    (33, ["[x,y] - (1 - g)", "[x,z]", "[y,z]", "x^{p} - z", "y^{p}", "z^{p}"]),
    (34, ["gx - xg - g(1 - g)", "[x,y] - (1 - g)", "[x,z]", "[y,z]", "x^{p} - x", "y^{p}", "z^{p}"]),
    (35, ["gx - xg - g(1 - g)", "[x,y] - (1 - g)", "[x,z]", "[y,z]", "x^{p} - x - z", "y^{p}", "z^{p}"]),
]

_T37_TAGS = (("g", None), ("x", "g"), ("y", "1"), ("z", "1"))


def _t37_entry(row):
    n, rels, params, iso, iso_text, label = (tuple(row) + (None,) * 6)[:6]
    return n, rels, params or (), iso, iso_text or "", label or ""


def _p4(p, values):
    return p**4


def _t37_families():
    families = []
    for row in T37:
        n, rels, params, iso, iso_text, label = _t37_entry(row)
        families.append(
            _spec(
                id=f"T3.7-{n}",
                source="T3.7",
                group="C_p",
                generators=("g", "x", "y", "z"),
                tags=_T37_TAGS,
                relations=("g^{p} - 1",) + tuple(rels),
                params=params,
                claimed_dim=_p4,
                iso=iso,
                iso_text=iso_text,
                label=label,
                item=n,
            )
        )
    return families


# T4.2: dimension 16 in characteristic 2

BLOCKS = {
    "D4": (("g", "h"), ("g^4 - 1", "h^2 - 1", "hg - g^3h")),
    "Q8": (("g", "h"), ("g^4 - 1", "hg - g^3h", "g^2 - h^2")),
    "C8": (("g",), ("g^8 - 1",)),
    "C4xC2": (("g", "h"), ("g^4 - 1", "h^2 - 1")),
    "C2^3": (("g", "h", "k"), ("g^2 - 1", "h^2 - 1", "k^2 - 1")),
    "C4": (("g",), ("g^4 - 1",)),
    "C2xC2": (("g", "h"), ("g^2 - 1", "h^2 - 1")),
    "C2": (("g",), ("g^2 - 1",)),
}

_MU124 = (ParamSpec("mu", (1, 2, 4)),)
_MU14 = (ParamSpec("mu", (1, 4)),)
_MU12 = (ParamSpec("mu", (1, 2)),)
_LAMGAM = (ParamSpec("lam", "field"), ParamSpec("gam", "field"))
_MU12LAM = (ParamSpec("mu", (1, 2)), ParamSpec("lam", "field"))
_CMU = (("c", lambda v, F: v["mu"] % 2),)

P1 = {"x": "1"}
P2 = {"x": "1", "y": "1"}
P3 = {"x": "1", "y": "1", "z": "1"}

_C4_JORDAN = ["[g,x]", "gy - (y + x)g"]
_C22_BASHEV = ["[g,x]", "gy - (y + x)g", "[h,x]", "hy - (y + {lam}x)h"]
_C2_JORDAN = ["[g,x]", "[g,y]", "gz - (z + y)g"]
_C22_XG = ["[g,h]", "[g,x]", "[g,y]", "[h,y]"]
_C22_88 = ["[g,h]", "[g,x] - g(1 - g)", "[h,x] - {lam}h(1 - g)", "[g,y]", "[h,y]"]
_C2_XY = ["[g,x]", "[g,y]", "[g,z]"]
_C2_GX = ["[g,x] - g(1 - g)", "[g,y]", "[g,z]"]

# restricted Lie relations shared by the three-generator primitive blocks
_RLIE3 = [
    ["[x,y]", "[x,z]", "[y,z]", "x^2", "y^2", "z^2"],
    ["[x,y]", "[x,z]", "[y,z]", "x^2 - x", "y^2 - y", "z^2 - z"],
    ["[x,y]", "[x,z]", "[y,z]", "x^2 - y", "y^2 - z", "z^2"],
    ["[x,y]", "[x,z]", "[y,z]", "x^2", "y^2 - z", "z^2"],
    ["[x,y]", "[x,z]", "[y,z]", "x^2", "y^2", "z^2 - z"],
    ["[x,y]", "[x,z]", "[y,z]", "x^2", "y^2 - y", "z^2 - z"],
    ["[x,y]", "[x,z]", "[y,z]", "x^2 - y", "y^2", "z^2 - z"],
    ["[x,y] - z", "[x,z]", "[y,z]", "x^2", "y^2", "z^2"],
    ["[x,y] - z", "[x,z]", "[y,z]", "x^2", "y^2", "z^2 - z"],
    ["[x,y] - y", "[x,z]", "[y,z]", "x^2 - x", "y^2", "z^2"],
    ["[x,y] - y", "[x,z]", "[y,z]", "x^2 - x", "y^2 - z", "z^2"],
    ["[x,y] - y", "[x,z]", "[y,z]", "x^2 - x", "y^2", "z^2 - z"],
    ["[x,y] - y", "[x,z]", "[y,z]", "x^2 - x", "y^2 - z", "z^2 - z"],
    ["[x,y]", "[x,z] - x", "[y,z] - y", "x^2", "y^2", "z^2 - z"],
]

# restricted Lie relations of the two-generator primitive blocks
_RLIE2 = [
    ["x^2", "y^2"],
    ["x^2 - x", "y^2"],
    ["x^2 - y", "y^2"],
    ["x^2 - x", "y^2 - y"],
    ["[x,y] - y", "x^2 - x", "y^2"],
]
_RLIE2_JORDAN = [
    ["[x,y]", "x^2", "y^2"],
    ["[x,y]", "x^2 - x", "y^2"],
    ["[x,y]", "x^2 - y", "y^2"],
    ["[x,y]", "x^2 - x", "y^2 - y"],
    ["[x,y] - y", "x^2 - x", "y^2"],
]

# (item, block, skew tags, relations[, options])
T42 = [
    (1, "D4", P1, ["x^2"]),
    (2, "D4", P1, ["x^2 - x"]),
    (3, "D4", {"x": "g^2"}, ["[g,x]", "[h,x]", "x^2"]),
    (4, "D4", {"x": "g^2"}, ["[g,x]", "[h,x] - h(1 - g^2)", "x^2"]),
    (5, "D4", {"x": "g^2"}, ["[g,x] - g(1 - g^2)", "[h,x] - {lam}h(1 - g^2)", "x^2"],
     dict(params=_LAM, iso=_shift_lam, iso_text="λ = γ + i, i in {0, 1}", label="H~1(λ)")),
    (6, "Q8", P1, ["x^2"]),
    (7, "Q8", P1, ["x^2 - x"]),
    (8, "Q8", {"x": "g^2"}, ["[g,x]", "[h,x]", "x^2"]),
    (9, "Q8", {"x": "g^2"}, ["[g,x] - g(1 - g^2)", "[h,x] - {lam}h(1 - g^2)", "x^2"],
     dict(params=_LAM, iso=_iso_t42_9, iso_text="λ = γ + i or (λ - j)(γ - i) = 1, i, j in {0, 1}",
          label="H~2(λ)")),
    (10, "C8", P1, ["x^2"]),
    (11, "C8", P1, ["x^2 - x"]),
    (12, "C8", {"x": "g^{mu}"}, ["x^2"], dict(params=_MU124)),
    (13, "C8", {"x": "g^{mu}"}, ["[g,x] - g(1 - g^{mu})", "x^2 - {c}x"], dict(params=_MU14, derived=_CMU)),
    (14, "C4xC2", P1, ["x^2"]),
    (15, "C4xC2", P1, ["x^2 - x"]),
    (16, "C4xC2", {"x": "g^{mu}"}, ["x^2"], dict(params=_MU12)),
    (17, "C4xC2", {"x": "g^{mu}"}, ["[g,h]", "[g,x]", "[h,x] - h(1 - g^{mu})", "x^2"], dict(params=_MU12)),
    (18, "C4xC2", {"x": "g^{mu}"},
     ["[g,h]", "[g,x] - g(1 - g^{mu})", "[h,x] - {lam}h(1 - g^{mu})", "x^2 - {c}x"],
     dict(params=_MU12LAM, derived=_CMU, iso=_iso_t42_18,
          iso_text="same μ; λ = γ for μ = 1; λ = γ or λγ = λ + γ for μ = 2", label="H~3,μ(λ)")),
    (19, "C4xC2", {"x": "h"}, ["x^2"]),
    (20, "C4xC2", {"x": "h"}, ["[g,h]", "[g,x] - g(1 - h)", "[h,x]", "x^2"]),
    (21, "C4xC2", {"x": "h"}, ["[g,h]", "[g,x] - {lam}g(1 - h)", "[h,x] - h(1 - h)", "x^2 - x"],
     dict(params=_LAM, iso=_shift_lam, iso_text="λ = γ + i, i in {0, 1}", label="H~4(λ)")),
    (22, "C2^3", P1, ["x^2"]),
    (23, "C2^3", P1, ["x^2 - x"]),
    (24, "C2^3", {"x": "g"}, ["x^2"]),
    (25, "C2^3", {"x": "g"},
     ["[g,h]", "[g,k]", "[h,k]", "[g,x]", "[h,x] - h(1 - g)", "[k,x] - {lam}k(1 - g)", "x^2"],
     dict(params=_LAM, iso=_iso_t42_25,
          iso_text="λγ = λ + γ, (1 + λ)γ = 1, λ = γ + i or 1 + iγ = λγ, i in {0, 1}", label="H~5(λ)")),
    (26, "C2^3", {"x": "g"},
     ["[g,h]", "[g,k]", "[h,k]", "[g,x] - g(1 - g)", "[h,x] - {lam}h(1 - g)", "[k,x] - {gam}k(1 - g)", "x^2 - x"],
     dict(params=_LAMGAM, iso=_iso_t42_26,
          iso_text="qγ1 + rγ2 = λ1 and νγ1 + ιγ2 = λ2 for some q, r, ν, ι in {0, 1} with qι + rν = 1",
          label="H~6(λ,γ)")),
]

T42 += [(26 + i, "C4", P2, rels) for i, rels in enumerate(_RLIE2, 1)]
T42 += [
    (32, "C4", {"x": "1", "y": "g"}, ["x^2", "y^2"]),
    (33, "C4", {"x": "1", "y": "g"}, ["[g,x]", "[g,y]", "x^2", "y^2", "[x,y] - (1 - g)"]),
    (34, "C4", {"x": "1", "y": "g"}, ["x^2 - x", "y^2"]),
    (35, "C4", {"x": "1", "y": "g"}, ["[g,x]", "[g,y]", "x^2 - x", "y^2", "[x,y] - y"]),
    (36, "C4", {"x": "1", "y": "g"}, ["[g,y] - g(1 - g)", "y^2 - y", "x^2"]),
    (37, "C4", {"x": "1", "y": "g"}, ["[g,y] - g(1 - g)", "y^2 - y", "x^2 - x"]),
    (38, "C4", {"x": "1", "y": "g^2"}, ["y^2", "x^2"]),
    (39, "C4", {"x": "1", "y": "g^2"}, ["[g,y] - g(1 - g^2)", "y^2", "x^2"]),
    (40, "C4", {"x": "1", "y": "g^2"}, ["x^2", "y^2 - x"]),
    (41, "C4", {"x": "1", "y": "g^2"}, ["[g,x]", "[g,y] - g(1 - g^2)", "x^2", "y^2 - x", "[x,y]"]),
    (42, "C4", {"x": "1", "y": "g^2"}, ["[g,x]", "[g,y]", "x^2", "y^2", "[x,y] - (1 - g^2)"]),
    (43, "C4", {"x": "1", "y": "g^2"}, ["[g,x]", "[g,y] - g(1 - g^2)", "x^2", "y^2", "[x,y] - (1 - g^2)"]),
    (44, "C4", {"x": "1", "y": "g^2"}, ["y^2", "x^2 - x"]),
    (45, "C4", {"x": "1", "y": "g^2"}, ["x^2 - x", "y^2 - x"]),
    (46, "C4", {"x": "1", "y": "g^2"}, ["[g,x]", "[g,y] - g(1 - g^2)", "x^2 - x", "y^2 - {lam}x", "[x,y]"],
     dict(params=_LAM, iso=_same(), iso_text="λ = γ", label="H~7(λ)")),
    (47, "C4", {"x": "1", "y": "g^2"}, ["[g,x]", "[g,y]", "x^2 - x", "y^2", "[x,y] - y"]),
    (48, "C4", {"x": "1", "y": "g^2"}, ["[g,x]", "[g,y] - g(1 - g^2)", "x^2 - x", "y^2", "[x,y] - y"]),
    (49, "C4", {"x": "g", "y": "g"}, ["x^2", "y^2"]),
    (50, "C4", {"x": "g", "y": "g"}, ["[g,x]", "[g,y]", "x^2", "y^2", "[x,y] - (1 - g^2)"]),
    (51, "C4", {"x": "g", "y": "g"}, ["[g,x] - g(1 - g)", "[g,y]", "x^2 - x", "y^2", "[x,y] + y"]),
    (52, "C4", {"x": "g", "y": "g"}, ["[g,x] - g(1 - g)", "[g,y]", "x^2 - x", "y^2", "[x,y] + y - (1 - g^2)"]),
    (53, "C4", {"x": "g", "y": "g^2"}, ["x^2", "y^2"]),
    (54, "C4", {"x": "g", "y": "g^2"}, ["x^2 - y", "y^2"]),
    (55, "C4", {"x": "g", "y": "g^2"}, ["[g,x]", "[g,y]", "x^2", "y^2", "[x,y] - (1 - g^3)"]),
    (56, "C4", {"x": "g", "y": "g^2"}, ["[g,x] - g(1 - g)", "[g,y]", "x^2 - x", "y^2", "[x,y]"]),
    (57, "C4", {"x": "g", "y": "g^2"}, ["[g,x] - g(1 - g)", "[g,y]", "x^2 - x - y", "y^2", "[x,y]"]),
    (58, "C4", {"x": "g", "y": "g^2"}, ["[g,x] - g(1 - g)", "[g,y]", "x^2 - x", "y^2", "[x,y] - (1 - g^3)"]),
    (59, "C4", {"x": "g", "y": "g^3"}, ["x^2", "y^2"]),
    (60, "C4", {"x": "g", "y": "g^3"}, ["[g,x] - g(1 - g)", "[g,y]", "x^2 - x", "y^2", "[x,y] + y"]),
    (61, "C4", {"x": "g", "y": "g^3"},
     ["[g,x] - g(1 - g)", "[g,y] - g(1 - g^3)", "x^2 - x", "y^2 - y", "[x,y] + y - x"]),
    (62, "C4", {"x": "g^2", "y": "g^2"}, ["x^2", "y^2"]),
    (63, "C4", {"x": "g^2", "y": "g^2"}, ["[g,x] - g(1 - g^2)", "[g,y]", "x^2", "y^2", "[x,y]"]),
]
T42 += [(63 + i, "C4", P2, _C4_JORDAN + rels) for i, rels in enumerate(_RLIE2_JORDAN, 1)]
T42 += [
    (69, "C4", {"x": "g^2", "y": "g^2"}, ["[g,x]", "gy - (y + x)g", "[x,y]", "x^2", "y^2"]),
    (70, "C4", {"x": "g^2", "y": "g^2"}, ["[g,x] - g(1 - g^2)", "gy - (y + x)g", "[x,y]", "x^2", "y^2"]),
]
T42 += [(70 + i, "C2xC2", P2, rels) for i, rels in enumerate(_RLIE2, 1)]

_XG = {"x": "g", "y": "1"}
T42 += [
    (76, "C2xC2", _XG, ["x^2", "y^2"]),
    (77, "C2xC2", _XG, ["x^2 - y", "y^2"]),
    (78, "C2xC2", _XG, _C22_XG + ["[h,x] - h(1 - g)", "x^2", "y^2", "[x,y]"]),
    (79, "C2xC2", _XG, _C22_XG + ["[h,x] - h(1 - g)", "x^2 - y", "y^2", "[x,y]"]),
    (80, "C2xC2", _XG, _C22_XG + ["[h,x]", "x^2", "y^2", "[x,y] - (1 - g)"]),
    (81, "C2xC2", _XG, _C22_XG + ["[h,x] - h(1 - g)", "x^2", "y^2", "[x,y] - (1 - g)"]),
    (82, "C2xC2", _XG, ["x^2", "y^2 - y"]),
    (83, "C2xC2", _XG, _C22_XG + ["[h,x] - h(1 - g)", "x^2", "y^2 - y", "[x,y]"]),
    (84, "C2xC2", _XG, _C22_XG + ["[h,x]", "x^2 - y", "y^2 - y", "[x,y]"]),
    (85, "C2xC2", _XG, _C22_XG + ["[h,x] - h(1 - g)", "x^2 - y", "y^2 - y", "[x,y]"]),
    (86, "C2xC2", _XG, _C22_XG + ["[h,x]", "x^2", "y^2 - y", "[x,y] - x"]),
    (87, "C2xC2", _XG, _C22_XG + ["[h,x]", "x^2 - y", "y^2 - y", "[x,y] - x"]),
    (88, "C2xC2", _XG, _C22_88 + ["x^2 - x", "y^2", "[x,y]"],
     dict(params=_LAM, iso=_shift_lam, iso_text="λ = γ + i, i in {0, 1}", label="H~8(λ)")),
    (89, "C2xC2", _XG, _C22_88 + ["x^2 - x - y", "y^2", "[x,y]"],
     dict(params=_LAM, iso=_shift_lam, iso_text="λ = γ + i, i in {0, 1}", label="H~9(λ)")),
    (90, "C2xC2", _XG, _C22_88 + ["x^2 - x", "y^2", "[x,y] - (1 - g)"],
     dict(params=_LAM, iso=_shift_lam, iso_text="λ = γ + i, i in {0, 1}", label="H~10(λ)")),
    (91, "C2xC2", _XG, _C22_88 + ["x^2 - x - {gam}y", "y^2 - y", "[x,y]"],
     dict(params=_LAMGAM, iso=_iso_t42_91, iso_text="λ = γ + i, i in {0, 1}, and μ = ν", label="H~11(λ,μ)")),
    (92, "C2xC2", {"x": "g", "y": "g"}, ["x^2", "y^2"]),
    (93, "C2xC2", {"x": "g", "y": "g"}, _C22_XG + ["[h,x] - h(1 - g)", "x^2", "y^2", "[x,y]"]),
    (94, "C2xC2", {"x": "g", "y": "g"},
     ["[g,h]", "[g,x] - g(1 - g)", "[g,y]", "[h,x] - {lam}h(1 - g)", "[h,y]", "x^2 - x", "y^2", "[x,y] + y"],
     dict(params=_LAM, iso=_shift_lam, iso_text="λ = γ + i, i in {0, 1}", label="H~12(λ)")),
    (95, "C2xC2", {"x": "g", "y": "g"},
     ["[g,h]", "[g,x] - g(1 - g)", "[g,y]", "[h,x] - {lam}h(1 - g)", "[h,y] - h(1 - g)", "x^2 - x", "y^2",
      "[x,y] + y"],
     dict(params=_LAM, iso=_shift_lam, iso_text="λ = γ + i, i in {0, 1}", label="H~13(λ)")),
    (96, "C2xC2", {"x": "g", "y": "h"}, ["x^2", "y^2"]),
    (97, "C2xC2", {"x": "g", "y": "h"},
     ["[g,h]", "[g,x]", "[g,y]", "[h,x]", "[h,y]", "x^2", "y^2", "[x,y] - (1 - gh)"]),
    (98, "C2xC2", {"x": "g", "y": "h"},
     ["[g,h]", "[g,x] - g(1 - g)", "[g,y]", "[h,x]", "[h,y]", "x^2 - x", "y^2", "[x,y]"]),
    (99, "C2xC2", {"x": "g", "y": "h"},
     ["[g,h]", "[g,x] - g(1 - g)", "[g,y]", "[h,x] - h(1 - g)", "[h,y]", "x^2 - x", "y^2", "[x,y] + y"]),
    (100, "C2xC2", {"x": "g", "y": "h"},
     ["[g,h]", "[g,x] - g(1 - g)", "[g,y]", "[h,x]", "[h,y] - h(1 - h)", "x^2 - x", "y^2 - y", "[x,y]"]),
    (101, "C2xC2", {"x": "g", "y": "h"},
     ["[g,h]", "[g,x] - g(1 - g)", "[g,y] - g(1 - h)", "[h,x] - h(1 - g)", "[h,y] - h(1 - h)", "x^2 - x",
      "y^2 - y", "[x,y] - x + y"]),
]
T42 += [
    (101 + i, "C2xC2", P2, ["[g,h]"] + _C22_BASHEV + rels, dict(params=_LAM))
    for i, rels in enumerate(_RLIE2_JORDAN, 1)
]
T42 += [
    (107, "C2xC2", {"x": "h", "y": "h"},
     ["[g,h]", "[g,x]", "[h,x]", "gy - (y + x)g", "[h,y]", "[x,y]", "x^2", "y^2"]),
    (108, "C2xC2", {"x": "h", "y": "h"},
     ["[g,h]", "[g,x]", "[h,x]", "gy - (y + x)g", "[h,y] - h(1 - h)", "[x,y] - x", "x^2", "y^2 - y"]),
]
T42 += [(108 + i, "C2", P3, rels) for i, rels in enumerate(_RLIE3, 1)]

_XYG = {"x": "g", "y": "g", "z": "1"}
T42 += [
    (123, "C2", {"x": "g", "y": "g", "z": "g"}, ["x^2", "y^2", "z^2"]),
    (124, "C2", {"x": "g", "y": "g", "z": "g"},
     ["[g,x] - g(1 - g)", "[g,y]", "[g,z]", "[x,y] - y", "[x,z] - z", "[y,z]", "x^2 - x", "y^2", "z^2"],
     dict(notes="the group relation is read as g^2 - 1")),
    (125, "C2", _XYG, _C2_XY + ["[x,y] - z", "[x,z]", "[y,z]", "x^2", "y^2", "z^2"]),
    (126, "C2", _XYG, _C2_XY + ["[x,y] - z", "[x,z]", "[y,z]", "x^2", "y^2", "z^2 - z"]),
    (127, "C2", _XYG, ["x^2", "y^2", "z^2"]),
    (128, "C2", _XYG, _C2_XY + ["[x,y]", "[x,z] - (1 - g)", "[y,z]", "x^2", "y^2", "z^2"]),
    (129, "C2", _XYG, _C2_XY + ["[x,y]", "[x,z] - y", "[y,z]", "x^2", "y^2", "z^2"]),
    (130, "C2", _XYG, ["x^2", "y^2", "z^2 - z"]),
    (131, "C2", _XYG, _C2_XY + ["[x,y]", "[x,z] - x", "[y,z]", "x^2", "y^2", "z^2 - z"]),
    (132, "C2", _XYG, _C2_XY + ["[x,y]", "[x,z] - x", "[y,z] - y", "x^2", "y^2", "z^2 - z"]),
    (133, "C2", _XYG, ["x^2 - z", "y^2", "z^2"]),
    (134, "C2", _XYG, ["x^2 - z", "y^2", "z^2 - z"]),
    (135, "C2", _XYG, _C2_XY + ["[x,y] - z", "[y,z]", "[x,z]", "x^2 - z", "y^2", "z^2"]),
    (136, "C2", _XYG, _C2_XY + ["[x,y] - z", "[y,z]", "[x,z]", "x^2 - z", "y^2", "z^2 - z"]),
    (137, "C2", _XYG, _C2_GX + ["[x,y] - y - z", "[x,z]", "[y,z]", "x^2 - x", "y^2", "z^2"]),
    (138, "C2", _XYG, _C2_GX + ["[x,y] - y - z", "[x,z]", "[y,z]", "x^2 - x", "y^2", "z^2 - z"]),
    (139, "C2", _XYG, ["[g,x] - g(1 - g)", "[g,y]", "[x,y] - y", "x^2 - x", "y^2", "z^2"]),
    (140, "C2", _XYG, _C2_GX + ["[x,y] - y", "[x,z]", "[y,z] - (1 - g)", "x^2 - x", "y^2", "z^2"]),
    (141, "C2", _XYG, _C2_GX + ["[x,y] - y", "[x,z] - (1 - g)", "[y,z]", "x^2 - x", "y^2", "z^2"]),
    (142, "C2", _XYG, _C2_GX + ["[x,y] - y", "[x,z] - y", "[y,z]", "x^2 - x", "y^2", "z^2"]),
    (143, "C2", _XYG, _C2_GX + ["[x,y] - y", "[x,z]", "[y,z]", "x^2 - x - z", "y^2", "z^2"]),
    (144, "C2", _XYG, _C2_GX + ["[x,y] - y", "[x,z]", "[y,z] - y", "x^2 - x", "y^2", "z^2 - z"]),
    (145, "C2", _XYG, _C2_GX + ["[x,y] - y", "[x,z]", "[y,z]", "x^2 - x - {lam}z", "y^2", "z^2 - z"],
     dict(params=_LAM, iso=_same(), iso_text="λ = γ", label="H~14(λ)")),
    (146, "C2", _XYG, _C2_GX + ["[x,y] - y", "[x,z]", "[y,z]", "x^2 - x", "y^2 - z", "z^2"]),
    (147, "C2", _XYG, _C2_GX + ["[x,y] - y - z", "[x,z]", "[y,z]", "x^2 - x", "y^2 - z", "z^2"]),
    (148, "C2", _XYG, _C2_GX + ["[x,y] - y - {lam}z", "[x,z]", "[y,z]", "x^2 - x", "y^2 - z", "z^2 - z"],
     dict(params=_LAM, iso=_same(), iso_text="λ = γ", label="H~15(λ)")),
]

# 149-183 are the p^4 families in characteristic 2
_T37_LABELS = {1: "H~16(λ)", 5: "H~17(λ)", 8: "H~18(λ,γ)", 17: "H~19(λ,i)", 18: "H~20(λ)", 27: "H~21(λ)"}
for _row in T37:
    _n, _rels, _params, _iso, _iso_text, _ = _t37_entry(_row)
    T42.append(
        (148 + _n, "C2", {"x": "g", "y": "1", "z": "1"}, [r.replace("{p}", "2") for r in _rels],
         dict(params=_params, iso=_iso, iso_text=_iso_text, label=_T37_LABELS.get(_n, ""),
              notes=f"T3.7-{_n} at p = 2"))
    )
T42 += [(183 + i, "C2", P3, _C2_JORDAN + rels) for i, rels in enumerate(_RLIE3, 1)]


def _t42_families():
    families = []
    for row in sorted(T42, key=lambda r: r[0]):
        item, block, skew, rels = row[:4]
        options = row[4] if len(row) > 4 else {}
        group_gens, group_rels = BLOCKS[block]
        skew_names = tuple(n for n in ("x", "y", "z") if n in skew)
        tags = tuple((g, None) for g in group_gens) + tuple((n, skew[n]) for n in skew_names)
        families.append(
            _spec(
                id=f"T4.2-{item}",
                source="T4.2",
                group=block,
                generators=group_gens + skew_names,
                tags=tags,
                relations=tuple(group_rels) + tuple(rels),
                claimed_dim=lambda p, values: 16,
                characteristic=2,
                item=item,
                **options,
            )
        )
    return families


# parametric presentations with a resolvability condition

_BIN = (0, 1)


def _lemma_families():
    l35_params = tuple(ParamSpec(f"l{i}", _BIN) for i in (1, 2, 3)) + tuple(
        ParamSpec(f"l{i}", "field") for i in (4, 5, 6)
    )
    l39_params = (
        tuple(ParamSpec(f"l{i}", _BIN) for i in (1, 2))
        + tuple(ParamSpec(f"l{i}", "field") for i in (3, 4, 5, 6))
        + tuple(ParamSpec(f"c{i}", "field") for i in range(1, 7))
    )
    return [
        _spec(
            id="L3.5",
            source="lemma",
            group="C_p",
            generators=("g", "x", "y", "z"),
            tags=(("g", None), ("x", "g"), ("y", "g"), ("z", "g")),
            relations=(
                "g^{p} - 1",
                "gx - xg - {l1}g(1 - g)",
                "gy - yg - {l2}g(1 - g)",
                "gz - zg - {l3}g(1 - g)",
                "x^{p} - {l1}x",
                "y^{p} - {l2}y",
                "z^{p} - {l3}z",
                "xy - yx - {l2}x + {l1}y - {l4}(1 - g^2)",
                "xz - zx - {l3}x + {l1}z - {l5}(1 - g^2)",
                "yz - zy - {l3}y + {l2}z - {l6}(1 - g^2)",
            ),
            params=l35_params,
            claimed_dim=_p4,
            ambiguity=_cond_l35,
            ambiguity_text="λ2λ5 = λ3λ4 + λ1λ6",
            vacuous_primes=frozenset({2, 3}),
            notes="three skew primitives over g; the condition only binds for p > 3",
        ),
        _spec(
            id="L3.9",
            source="lemma",
            group="C_p",
            generators=("g", "x", "y", "z"),
            tags=(("g", None), ("x", "g"), ("y", "g"), ("z", "1")),
            relations=(
                "g^{p} - 1",
                "gx - xg - {l1}g(1 - g)",
                "gy - yg - {l2}g(1 - g)",
                "gz - zg",
                "x^{p} - {l1}x - {l3}z",
                "y^{p} - {l2}y - {l4}z",
                "z^{p} - {l5}z",
                "xz - zx - {c1}x - {c2}y - {c3}(1 - g)",
                "yz - zy - {c4}x - {c5}y - {c6}(1 - g)",
                "xy - yx - {l2}x + {l1}y - {xyrhs}",
            ),
            params=l39_params,
            claimed_dim=_p4,
            derived=(("xyrhs", lambda v, F: f"({v['l6']})z" if F.p == 2 else f"({v['l6']})(1 - g^2)"),),
            ambiguity=_cond_l39,
            ambiguity_text="twenty-three bilinear equalities in λ and γ (p = 2)",
            notes="l6 multiplies z when p = 2 and 1 - g^2 otherwise",
        ),
        _spec(
            id="L3.10-mu0",
            source="lemma",
            group="C_p x C_p^n",
            generators=("g", "h", "x", "y"),
            tags=(("g", None), ("h", None), ("x", "g"), ("y", "1")),
            relations=(
                "g^{p} - 1",
                "h^{hexp} - 1",
                "gx - xg - {l1}g(1 - g)",
                "[g,y]",
                "hx - xh - {l3}h(1 - g)",
                "[h,y]",
                "x^{p} - {l1}x - {m1}y",
                "y^{p} - {m2}y",
                "xy - yx - {m3}x - {m4}(1 - g)",
            ),
            params=(ParamSpec("n", (1, 2)), ParamSpec("l1", _BIN), ParamSpec("l3", "field"))
            + tuple(ParamSpec(f"m{i}", "field") for i in range(1, 5)),
            claimed_dim=lambda p, v: p ** (3 + v["n"]),
            derived=(("hexp", lambda v, F: F.p ** v["n"]),),
            ambiguity=_cond_l310_mu0,
            ambiguity_text="μ1μ3 = μ1μ4 = 0, μ2μ3 = μ3^p, μ2μ4 = μ3^(p-1)μ4, λ1μ3 = μ3λ3 = 0",
        ),
        _spec(
            id="L3.10-munz",
            source="lemma",
            group="C_p x C_p^n",
            generators=("g", "h", "x", "y"),
            tags=(("g", None), ("h", None), ("x", "g"), ("y", "g^{mu}")),
            relations=(
                "g^{p} - 1",
                "h^{hexp} - 1",
                "gx - xg - {l1}g(1 - g)",
                "gy - yg - {l2}g(1 - g^{mu})",
                "hx - xh - {l3}h(1 - g)",
                "hy - yh - {l4}h(1 - g^{mu})",
                "x^{p} - {l1}x",
                "y^{p} - {l2}y",
                "xy - yx + {mul1}y - {l2}x - {l5}(1 - g^{mu1})",
            ),
            params=(
                ParamSpec("n", (1, 2)),
                ParamSpec("mu", "exponent"),
                ParamSpec("l1", _BIN),
                ParamSpec("l2", _BIN),
                ParamSpec("l3", "field"),
                ParamSpec("l4", "field"),
                ParamSpec("l5", "field"),
            ),
            claimed_dim=lambda p, v: p ** (3 + v["n"]),
            derived=(
                ("hexp", lambda v, F: F.p ** v["n"]),
                ("mul1", lambda v, F: F.mul(F.from_int(v["mu"]), v["l1"])),
                ("mu1", lambda v, F: v["mu"] + 1),
            ),
            ambiguity=_cond_l310_munz,
            ambiguity_text="λ1λ4 = 0 = λ2λ3 unless p divides μ + 1",
        ),
        _spec(
            id="L3.11",
            source="lemma",
            group="C_p x C_p",
            generators=("g", "h", "x", "y"),
            tags=(("g", None), ("h", None), ("x", "g"), ("y", "h^{mu}")),
            relations=(
                "g^{p} - 1",
                "h^{p} - 1",
                "gx - xg - {l1}g(1 - g)",
                "hx - xh - {l2}h(1 - g)",
                "x^{p} - {l1}x",
                "gy - yg - {l3}g(1 - h^{mu})",
                "hy - yh - {l4}h(1 - h^{mu})",
                "y^{p} - {l4}y",
                "xy - yx - {l3}x + {mul2}y - {l5}(1 - gh^{mu})",
            ),
            params=(
                ParamSpec("mu", "exponent"),
                ParamSpec("l1", _BIN),
                ParamSpec("l4", _BIN),
                ParamSpec("l2", "field"),
                ParamSpec("l3", "field"),
                ParamSpec("l5", "field"),
            ),
            claimed_dim=_p4,
            derived=(("mul2", lambda v, F: F.mul(F.from_int(v["mu"]), v["l2"])),),
            ambiguity=_cond_l311,
            ambiguity_text="(λ1 + λ2)·(λ3, λ2, λ5) = 0 and (λ3 - λ4)·(λ3, λ2, λ5) = 0 (p = 2)",
        ),
    ]


FAMILIES = {spec.id: spec for spec in _t37_families() + _t42_families() + _lemma_families()}

SCOPES = ("T3.7", "T4.2", "lemmas", "all")


def list_families(scope="all"):
    if scope not in SCOPES:
        raise CatalogError(f"unknown scope {scope!r}; expected one of {', '.join(SCOPES)}")
    if scope == "all":
        return list(FAMILIES.values())
    source = "lemma" if scope == "lemmas" else scope
    return [spec for spec in FAMILIES.values() if spec.source == source]


def get_family(family_id):
    if isinstance(family_id, FamilySpec):
        return family_id
    try:
        return FAMILIES[family_id]
    except KeyError as e:
        raise CatalogError(f"unknown family {family_id!r}") from e


def check_params(spec, F, params):
    """Validate parameter names and domains."""
    params = dict(params or {})
    missing = set(spec.param_names) - set(params)
    extra = set(params) - set(spec.param_names)
    if missing or extra:
        raise CatalogError(
            f"{spec.id} takes parameters {list(spec.param_names)}, got {sorted(params)}"
        )
    for p in spec.params:
        if params[p.name] not in p.values(F):
            raise CatalogError(f"{spec.id}: {p.name} = {params[p.name]} is outside its domain over {F.name}")
    return params


def format_params(params):
    return ",".join(f"{k}={v}" for k, v in params.items()) if params else "-"


def instantiate(family_id, F, params=None):
    """Concrete presentation of a family member over F."""
    spec = get_family(family_id)
    if spec.characteristic is not None and F.p != spec.characteristic:
        raise CatalogError(f"{spec.id} lives in characteristic {spec.characteristic}, not {F.p}")
    params = check_params(spec, F, params)
    mapping = {"p": str(F.p)}
    for p in spec.params:
        v = params[p.name]
        mapping[p.name] = str(v) if p.is_choice() else f"({v})"
    for name, fn in spec.derived:
        mapping[name] = str(fn(params, F))
    try:
        relations = [t.format(**mapping) for t in spec.relations + spec.implied]
        tags = {g: None if over is None else over.format(**mapping) for g, over in spec.tags}
    except KeyError as e:
        raise CatalogError(f"{spec.id}: template refers to unknown name {e}") from e
    name = spec.id if not params else f"{spec.id}[{format_params(params)}]"
    return HopfPresentation.build(F, spec.generators, tags, relations, spec.precedence, name)


def claimed_dimension(family_id, F, params=None):
    spec = get_family(family_id)
    return spec.claimed_dim(F.p, dict(params or {}))


def ambiguity_condition(family_id, F, params):
    spec = get_family(family_id)
    if spec.ambiguity is None:
        raise CatalogError(f"{spec.id} has no resolvability condition")
    return bool(spec.ambiguity(check_params(spec, F, params), F))


def iso_predicate(family_id, F, params1, params2):
    spec = get_family(family_id)
    if spec.iso is None:
        raise CatalogError(f"{spec.id} has no isomorphism criterion")
    return bool(spec.iso(check_params(spec, F, params1), check_params(spec, F, params2), F))


def to_text(spec):
    """Human-readable summary of a family."""
    lines = [f"family: {spec.id}" + (f"  {spec.label}" if spec.label else "")]
    lines.append(f"source: {spec.source}  coradical: {spec.group}")
    lines.append("generators: " + " ".join(spec.generators))
    for g, over in spec.tags:
        lines.append(f"  {g}: " + ("group-like" if over is None else f"skew primitive over {over}"))
    if spec.params:
        lines.append("parameters: " + ", ".join(
            f"{p.name} in {p.domain if isinstance(p.domain, str) else set(p.domain)}" for p in spec.params))
    for r in spec.relations:
        lines.append(f"relation: {r}")
    for r in spec.implied:
        lines.append(f"relation: {r}  (implied)")
    if spec.ambiguity_text:
        lines.append(f"condition: {spec.ambiguity_text}")
    if spec.iso_text:
        lines.append(f"isomorphism: {spec.iso_text}")
    if spec.notes:
        lines.append(f"notes: {spec.notes}")
    return "\n".join(lines)

"""Free associative algebra: words, deg-lex order and sparse polynomials."""

import enum
import re
from dataclasses import dataclass, field

from hopfbench.errors import ParseError

Word = tuple


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Alphabet:
    """Generator names plus a total precedence, listed smallest first.

    Words are tuples of indices into ``names``; deg-lex compares length
    first and then letter ranks left to right.
    """

    names: tuple
    precedence: tuple
    _rank: tuple = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)
    _token: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        precedence = tuple(self.precedence)
        if len(set(names)) != len(names) or not names:
            raise ParseError(f"generator names must be distinct and non-empty: {names}")
        if sorted(precedence) != sorted(names):
            raise ParseError(f"precedence {precedence} is not a permutation of {names}")
        for name in names:
            if not re.fullmatch(r"[A-Za-z][A-Za-z_]*\d*", name):
                raise ParseError(f"bad generator name {name!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "precedence", precedence)
        object.__setattr__(self, "_rank", tuple(precedence.index(n) for n in names))
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})
        longest_first = sorted(names, key=len, reverse=True)
        object.__setattr__(self, "_token", re.compile("|".join(re.escape(n) for n in longest_first)))

    @classmethod
    def from_names(cls, names, precedence=None):
        names = tuple(names)
        return cls(names, tuple(precedence) if precedence is not None else names)

    def __len__(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError as e:
            raise ParseError(f"unknown generator {name!r}") from e

    def rank(self, letter):
        return self._rank[letter]

    def key(self, word):
        rank = self._rank
        return (len(word), tuple(rank[a] for a in word))

    def compare(self, u, v):
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return Ordering.LESS
        if ku > kv:
            return Ordering.GREATER
        return Ordering.EQUAL

    def format_word(self, word):
        if not word:
            return "1"
        out = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = self.names[word[i]]
            out.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "".join(out)

    def parse_word(self, text):
        text = text.replace(" ", "")
        if text in ("", "1"):
            return ()
        word = []
        pos = 0
        while pos < len(text):
            m = self._token.match(text, pos)
            if m is None:
                raise ParseError(f"cannot parse word {text!r} at position {pos}")
            letter = self._index[m.group()]
            pos = m.end()
            power = re.compile(r"\^(\d+)").match(text, pos)
            n = 1
            if power:
                n = int(power.group(1))
                pos = power.end()
            word.extend([letter] * n)
        return tuple(word)

    def format_key(self):
        return " < ".join(self.precedence)


def compare_deglex(u, v, alphabet):
    return alphabet.compare(u, v)


class NcPoly:
    """A noncommutative polynomial: a sparse map from words to field ints."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, F):
        return cls(F)

    @classmethod
    def one(cls, F):
        return cls(F, {(): 1})

    @classmethod
    def constant(cls, F, c):
        return cls(F, {(): c})

    @classmethod
    def word(cls, F, word, c=1):
        return cls(F, {tuple(word): c})

    def is_zero(self):
        return not self.terms

    def words(self):
        return self.terms.keys()

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def leading(self, alphabet):
        """Deg-lex largest word and its coefficient."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading word")
        lead = max(self.terms, key=alphabet.key)
        return lead, self.terms[lead]

    def scale(self, c):
        F = self.field
        return NcPoly(F, {w: F.mul(c, d) for w, d in self.terms.items()})

    def __add__(self, other):
        F = self.field
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = F.add(terms.get(w, 0), c)
        return NcPoly(F, terms)

    def __neg__(self):
        F = self.field
        return NcPoly(F, {w: F.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        F = self.field
        terms = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                terms[w] = F.add(terms.get(w, 0), F.mul(a, b))
        return NcPoly(F, terms)

    def __pow__(self, n):
        result = NcPoly.one(self.field)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        return isinstance(other, NcPoly) and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"NcPoly({self.terms!r})"


def nc_combine(op, f, g):
    """``add``/``sub`` two polynomials, or ``scale`` f by the field int g."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown operation {op!r}")


def nc_mul(f, g):
    return f * g


def format_poly(f, alphabet):
    if f.is_zero():
        return "0"
    parts = []
    for w in sorted(f.terms, key=alphabet.key, reverse=True):
        c = f.terms[w]
        if not w:
            parts.append(str(c))
        elif c == 1:
            parts.append(alphabet.format_word(w))
        else:
            parts.append(f"{c}{alphabet.format_word(w)}")
    return " + ".join(parts)


class _Parser:
    """Recursive descent over ``+ - * ^n ( ) [a,b]`` and juxtaposition."""

    _symbols = re.compile(r"\s*(?:(\d+)|([-+*^()\[\],=]))")

    def __init__(self, text, alphabet, F):
        self.text = text
        self.alphabet = alphabet
        self.field = F
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text):
        tokens = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = self._symbols.match(text, pos)
            if m:
                if m.group(1) is not None:
                    tokens.append(("num", int(m.group(1))))
                else:
                    tokens.append(("sym", m.group(2)))
                pos = m.end()
                continue
            m = self.alphabet._token.match(text, pos)
            if m is None:
                raise ParseError(f"unexpected character {text[pos]!r} in {text!r}")
            tokens.append(("name", m.group()))
            pos = m.end()
        return tokens

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, sym=None):
        tok = self.peek()
        if tok[0] is None or (sym is not None and tok != ("sym", sym)):
            raise ParseError(f"expected {sym or 'token'} in {self.text!r}")
        self.pos += 1
        return tok

    def relation(self):
        lhs = self.expr()
        if self.peek() == ("sym", "="):
            self.take("=")
            lhs = lhs - self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return lhs

    def expr(self):
        F = self.field
        sign = None
        if self.peek() in (("sym", "-"), ("sym", "+")):
            sign = self.take()[1]
        result = self.term()
        if sign == "-":
            result = -result
        while self.peek() in (("sym", "-"), ("sym", "+")):
            op = self.take()[1]
            rhs = self.term()
            result = result - rhs if op == "-" else result + rhs
        return result if result is not None else NcPoly.zero(F)

    def _starts_factor(self):
        kind, value = self.peek()
        return kind in ("num", "name") or value in ("(", "[")

    def term(self):
        result = self.factor()
        while True:
            if self.peek() == ("sym", "*"):
                self.take("*")
                result = result * self.factor()
            elif self._starts_factor():
                result = result * self.factor()
            else:
                return result

    def factor(self):
        base = self.atom()
        while self.peek() == ("sym", "^"):
            self.take("^")
            kind, n = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            base = base**n
        return base

    def atom(self):
        F = self.field
        kind, value = self.take()
        if kind == "num":
            if value >= F.q:
                raise ParseError(f"literal {value} is not an element of {F.name}")
            return NcPoly.constant(F, value)
        if kind == "name":
            return NcPoly.word(F, (self.alphabet.index(value),))
        if value == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if value == "[":
            a = self.expr()
            self.take(",")
            b = self.expr()
            self.take("]")
            return a * b - b * a
        raise ParseError(f"unexpected {value!r} in {self.text!r}")


def parse_poly(text, alphabet, F):
    """Parse a polynomial; ``lhs = rhs`` yields ``lhs - rhs``.

    Numeric literals are field elements in integer encoding.
    """
    return _Parser(text, alphabet, F).relation()

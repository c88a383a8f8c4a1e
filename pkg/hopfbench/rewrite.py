"""Word rewriting systems, the diamond lemma and Knuth-Bendix style completion.

A rule ``lead -> tail`` replaces an occurrence of the word ``lead`` by the
polynomial ``tail``, whose words are all deg-lex smaller than ``lead``.
"""

import enum
import heapq
import logging
from dataclasses import dataclass

from hopfbench import config
from hopfbench.errors import InconsistentRelations
from hopfbench.freealg import NcPoly, format_poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Rule:
    lead: tuple
    tail: NcPoly

    def relation(self):
        """The polynomial ``lead - tail`` this rule encodes."""
        return NcPoly.word(self.tail.field, self.lead) - self.tail


class AmbiguityKind(enum.Enum):
    OVERLAP = "overlap"
    INCLUSION = "inclusion"


@dataclass(frozen=True)
class Ambiguity:
    kind: AmbiguityKind
    rules: tuple  # (i, j) indices into the system's rules
    superword: tuple
    offset: int  # where rule j's lead starts inside the superword


class CompletionStatus(enum.Enum):
    CONFLUENT = "confluent"
    CAP_EXCEEDED = "cap-exceeded"


def _neg_key(key):
    return (-key[0], tuple(-r for r in key[1]))


def _occurrences(big, small):
    n, m = len(big), len(small)
    return [i for i in range(n - m + 1) if big[i:i + m] == small]


class RewriteSystem:
    """An ordered set of rules over one alphabet and field."""

    def __init__(self, alphabet, field, rules=()):
        self.alphabet = alphabet
        self.field = field
        self.rules = tuple(rules)
        self._leads = {}
        for rule in self.rules:
            self._leads.setdefault(rule.lead, rule)
        self._lengths = sorted({len(lead) for lead in self._leads})
        self._nf_cache = {}

    @classmethod
    def from_relations(cls, alphabet, field, relations):
        """Orient and interreduce a list of relation polynomials."""
        rules = [orient(r, alphabet) for r in relations if not r.is_zero()]
        return cls(alphabet, field, interreduce(alphabet, field, rules))

    def __len__(self):
        return len(self.rules)

    def max_degree(self):
        return max((len(r.lead) for r in self.rules), default=0)

    def find_reducer(self, word):
        """Leftmost position where some rule's lead occurs, with that rule."""
        leads = self._leads
        n = len(word)
        for pos in range(n):
            for length in self._lengths:
                if pos + length > n:
                    break
                rule = leads.get(word[pos:pos + length])
                if rule is not None:
                    return pos, rule
        return None

    def is_irreducible(self, word):
        return self.find_reducer(word) is None

    def has_lead_suffix(self, word):
        n = len(word)
        for length in self._lengths:
            if length > n:
                break
            if word[n - length:] in self._leads:
                return True
        return False

    def normal_form_word(self, word):
        cached = self._nf_cache.get(word)
        if cached is None:
            cached = self._reduce({word: 1})
            self._nf_cache[word] = cached
        return cached

    def _reduce(self, start):
        # largest word first: every rewrite only produces smaller words
        F = self.field
        key = self.alphabet.key
        pending = dict(start)
        heap = [(_neg_key(key(w)), w) for w in pending]
        heapq.heapify(heap)
        result = {}
        while heap:
            _, w = heapq.heappop(heap)
            c = pending.pop(w, 0)
            if not c:
                continue
            cached = self._nf_cache.get(w)
            if cached is not None:
                for u, d in cached.items():
                    result[u] = F.add(result.get(u, 0), F.mul(c, d))
                continue
            hit = self.find_reducer(w)
            if hit is None:
                result[w] = F.add(result.get(w, 0), c)
                continue
            pos, rule = hit
            pre, post = w[:pos], w[pos + len(rule.lead):]
            for t, d in rule.tail.terms.items():
                nw = pre + t + post
                if nw in pending:
                    pending[nw] = F.add(pending[nw], F.mul(c, d))
                else:
                    pending[nw] = F.mul(c, d)
                    heapq.heappush(heap, (_neg_key(key(nw)), nw))
        return {u: d for u, d in result.items() if d}

    def normal_form(self, poly):
        F = self.field
        acc = {}
        for w, c in poly.terms.items():
            for u, d in self.normal_form_word(w).items():
                acc[u] = F.add(acc.get(u, 0), F.mul(c, d))
        return NcPoly(F, acc)

    def format_rules(self):
        fmt = self.alphabet.format_word
        return [f"{fmt(r.lead)} -> {format_poly(r.tail, self.alphabet)}" for r in self.rules]


def orient(poly, alphabet, system=None):
    """Turn a nonzero relation into a monic rule from its leading word."""
    lead, c = poly.leading(alphabet)
    if not lead:
        raise InconsistentRelations("relations imply 1 = 0", system=system)
    F = poly.field
    monic = poly.scale(F.inv(c))
    return Rule(lead, NcPoly.word(F, lead) - monic)


def interreduce(alphabet, field, rules):
    """Remove rules whose lead contains another lead and normalize tails."""
    rules = list(dict.fromkeys(rules))
    while True:
        for i, rule in enumerate(rules):
            others = rules[:i] + rules[i + 1:]
            if any(_occurrences(rule.lead, o.lead) for o in others):
                rest = RewriteSystem(alphabet, field, others)
                remainder = rest.normal_form(rule.relation())
                rules = others
                if not remainder.is_zero():
                    rules.append(orient(remainder, alphabet, system=rest))
                break
        else:
            break
    system = RewriteSystem(alphabet, field, rules)
    reduced = [Rule(r.lead, system.normal_form(r.tail)) for r in rules]
    return sorted(reduced, key=lambda r: alphabet.key(r.lead))


def find_ambiguities(system):
    """All overlap and inclusion ambiguities, smallest superword first."""
    found = []
    rules = system.rules
    for i, ri in enumerate(rules):
        a = ri.lead
        for j, rj in enumerate(rules):
            b = rj.lead
            for k in range(1, min(len(a), len(b))):
                if a[-k:] == b[:k]:
                    found.append(Ambiguity(AmbiguityKind.OVERLAP, (i, j), a + b[k:], len(a) - k))
            if i != j and len(b) <= len(a):
                for pos in _occurrences(a, b):
                    found.append(Ambiguity(AmbiguityKind.INCLUSION, (i, j), a, pos))
    key = system.alphabet.key
    found.sort(key=lambda amb: (key(amb.superword), amb.rules, amb.offset))
    return found


def resolve_ambiguity(amb, system):
    """Normal form of the difference of the two one-step reductions."""
    F = system.field
    ri, rj = system.rules[amb.rules[0]], system.rules[amb.rules[1]]
    w = amb.superword
    prefix = NcPoly.word(F, w[:amb.offset])
    suffix = NcPoly.word(F, w[amb.offset + len(rj.lead):])
    if amb.kind is AmbiguityKind.OVERLAP:
        first = ri.tail * NcPoly.word(F, w[len(ri.lead):])
    else:
        first = ri.tail
    second = prefix * rj.tail * suffix
    return system.normal_form(first - second)


def complete(system, degree_cap=None, max_rules=None):
    """Complete to a confluent system, or stop once a cap is exceeded.

    Returns ``(system, status)``. Raises InconsistentRelations when the
    ideal turns out to contain a nonzero constant.
    """
    alphabet, F = system.alphabet, system.field
    if degree_cap is None:
        degree_cap = 2 + 2 * system.max_degree()
    max_rules = max_rules or config.MAX_RULES
    rules = interreduce(alphabet, F, system.rules)
    resolved = set()
    while True:
        current = RewriteSystem(alphabet, F, rules)
        new_rule = None
        # a full pass with no skipping certifies confluence
        for full in (False, True):
            for amb in find_ambiguities(current):
                marker = (current.rules[amb.rules[0]], current.rules[amb.rules[1]], amb.kind, amb.offset)
                if not full and marker in resolved:
                    continue
                remainder = resolve_ambiguity(amb, current)
                if remainder.is_zero():
                    resolved.add(marker)
                    continue
                new_rule = orient(remainder, alphabet, system=current)
                logger.debug(
                    "ambiguity at %s adds rule with lead %s",
                    alphabet.format_word(amb.superword),
                    alphabet.format_word(new_rule.lead),
                )
                break
            if new_rule is not None:
                break
        if new_rule is None:
            logger.info("completion confluent with %d rules", len(current))
            return current, CompletionStatus.CONFLUENT
        if len(new_rule.lead) > degree_cap:
            logger.info("completion stopped: new lead of degree %d exceeds cap %d", len(new_rule.lead), degree_cap)
            return RewriteSystem(alphabet, F, rules + [new_rule]), CompletionStatus.CAP_EXCEEDED
        rules = interreduce(alphabet, F, rules + [new_rule])
        if len(rules) > max_rules:
            logger.info("completion stopped: %d rules exceed %d", len(rules), max_rules)
            return RewriteSystem(alphabet, F, rules), CompletionStatus.CAP_EXCEEDED


def enumerate_basis(system, cap=None):
    """Irreducible words in deg-lex order and whether the list is complete."""
    cap = cap or config.BASIS_CAP
    n = len(system.alphabet)
    words = [()]
    level = [()]
    while level:
        nxt = []
        for w in level:
            for a in range(n):
                nw = w + (a,)
                if not system.has_lead_suffix(nw):
                    nxt.append(nw)
        if len(words) + len(nxt) > cap:
            words.extend(nxt[:cap - len(words)])
            return sorted(words, key=system.alphabet.key), False
        words.extend(nxt)
        level = nxt
    return sorted(words, key=system.alphabet.key), True

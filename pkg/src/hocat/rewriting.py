"""Typed string rewriting for localizations of finite categories.

Words are paths of letters.  A letter is ``(0, m)`` for a forward morphism
``m`` or ``(1, w)`` for the formal reversal of a weak equivalence ``w``.
Words are stored in path order: ``(l1, l2)`` means ``l1`` first, then ``l2``.
Identity morphisms are not letters; they are the empty word.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .fincat import Budget, FinCategory, _budget

FWD, INV = 0, 1

Letter = tuple[int, int]
Word = tuple[Letter, ...]


class NonConfluent(RuntimeError):
    """Normal forms are ambiguous; refuse rather than guess."""


def letter_ends(c: FinCategory, letter: Letter) -> tuple[int, int]:
    kind, m = letter
    return (c.dom[m], c.cod[m]) if kind == FWD else (c.cod[m], c.dom[m])


def letter_name(c: FinCategory, letter: Letter) -> str:
    kind, m = letter
    return c.mor_names[m] if kind == FWD else c.mor_names[m] + "^-1"


def word_name(c: FinCategory, word: Word) -> str:
    """Composition-order name, e.g. ``g o w^-1``."""
    return " o ".join(letter_name(c, l) for l in reversed(word))


def shortlex(word: Word) -> tuple:
    return (len(word), word)


@dataclass
class RewriteSystem:
    """Oriented rules over the letters of ``(c, W)``.

    The generating rules are the composition table (``f, g -> g o f``), and
    ``w, w^-1 -> ()`` and ``w^-1, w -> ()``.  Identity letters never occur.
    """

    c: FinCategory
    W: frozenset
    rules: dict = field(default_factory=dict)
    generators: list = field(default_factory=list)
    completed: bool = False

    def __post_init__(self):
        c = self.c
        fwd = [(FWD, m) for m in c.morphisms if not c.is_identity(m)]
        inv = [(INV, w) for w in sorted(self.W) if not c.is_identity(w)]
        self.alphabet: tuple[Letter, ...] = tuple(fwd + inv)
        self.out: dict[int, list[Letter]] = {x: [] for x in c.objects}
        for l in self.alphabet:
            self.out[letter_ends(c, l)[0]].append(l)
        gens = []
        for (_, f) in fwd:
            for (_, g) in fwd:
                gf = c.comp[g][f]
                if gf >= 0:
                    gens.append((((FWD, f), (FWD, g)), self.embed(gf)))
        for (_, w) in inv:
            gens.append((((FWD, w), (INV, w)), ()))
            gens.append((((INV, w), (FWD, w)), ()))
        self.generators = gens
        if not self.rules:
            for l, r in gens:
                self.rules[l] = r
        self._lengths = sorted({len(l) for l in self.rules})

    def embed(self, m: int) -> Word:
        """The word of a morphism of ``c``."""
        return () if self.c.is_identity(m) else ((FWD, m),)

    def _add(self, lhs: Word, rhs: Word) -> None:
        self.rules[lhs] = rhs
        if len(lhs) not in self._lengths:
            self._lengths = sorted(set(self._lengths) | {len(lhs)})

    def find_redex(self, word: Word):
        for i in range(len(word)):
            for k in self._lengths:
                if i + k > len(word):
                    break
                sub = word[i:i + k]
                if sub in self.rules:
                    return i, k
        return None

    def normal_form(self, word: Word, budget: Budget | None = None) -> Word:
        word = tuple(word)
        while True:
            if budget is not None:
                budget.tick()
            hit = self.find_redex(word)
            if hit is None:
                return word
            i, k = hit
            word = word[:i] + self.rules[word[i:i + k]] + word[i + k:]

    def is_irreducible(self, word: Word) -> bool:
        return self.find_redex(word) is None

    def one_step(self, word: Word, rules: Iterable[tuple[Word, Word]]) -> Iterator[Word]:
        for lhs, rhs in rules:
            k = len(lhs)
            for i in range(len(word) - k + 1):
                if word[i:i + k] == lhs:
                    yield word[:i] + rhs + word[i + k:]

    def complete(self, budget: Budget | None = None) -> None:
        """Knuth-Bendix completion with the shortlex order."""
        budget = _budget(budget)
        pending = deque(sorted(self.rules.items(), key=lambda kv: shortlex(kv[0])))
        self.rules = {}
        self._lengths = []
        done_pairs = set()
        while pending:
            budget.tick()
            lhs, rhs = pending.popleft()
            lhs, rhs = self.normal_form(lhs, budget), self.normal_form(rhs, budget)
            if lhs == rhs:
                continue
            if shortlex(lhs) < shortlex(rhs):
                lhs, rhs = rhs, lhs
            # inter-reduce the existing rules against the new one
            for l2 in list(self.rules):
                if _contains(l2, lhs):
                    pending.append((l2, self.rules.pop(l2)))
            self._lengths = sorted({len(l) for l in self.rules})
            self._add(lhs, rhs)
            for l2 in list(self.rules):
                r2 = self.rules[l2]
                nr = self.normal_form(r2, budget)
                if nr != r2:
                    self.rules[l2] = nr
            for l2, r2 in list(self.rules.items()):
                for a, b in ((lhs, l2), (l2, lhs)):
                    key = (a, b)
                    if key in done_pairs:
                        continue
                    done_pairs.add(key)
                    for p, q in _critical_pairs(a, self.rules.get(a), b, self.rules.get(b)):
                        budget.tick()
                        if p != q:
                            pending.append((p, q))
        self.completed = True


def _contains(word: Word, sub: Word) -> bool:
    k = len(sub)
    return any(word[i:i + k] == sub for i in range(len(word) - k + 1))


def _critical_pairs(l1: Word, r1: Word | None, l2: Word, r2: Word | None):
    if r1 is None or r2 is None:
        return
    n1, n2 = len(l1), len(l2)
    # suffix of l1 overlaps prefix of l2
    for k in range(1, min(n1, n2)):
        if l1[n1 - k:] == l2[:k]:
            yield r1 + l2[k:], l1[:n1 - k] + r2
    # l2 strictly inside l1
    if n2 < n1 or (n2 == n1 and l1 != l2):
        for i in range(n1 - n2 + 1):
            if l1[i:i + n2] == l2:
                yield r1, l1[:i] + r2 + l1[i + n2:]


@dataclass
class Quotient:
    """Irreducible words grouped by endpoints, with the stabilization length."""

    words: list            # (src, tgt, word) in canonical order
    stabilized_at: int


def irreducible_words(rs: RewriteSystem, budget: Budget | None = None) -> Quotient:
    """All irreducible typed words, by increasing length.

    Subwords of irreducible words are irreducible, so growing by one letter at
    a time finds all of them.  Counts are tracked per hom-set; the enumeration
    stops once two successive length increments add nothing.
    """
    budget = _budget(budget)
    c = rs.c
    level = [(x, x, ()) for x in c.objects]
    found = list(level)
    n = 0
    quiet = 0
    while quiet < 2:
        n += 1
        nxt = []
        for src, tgt, w in level:
            for l in rs.out[tgt]:
                budget.tick()
                w2 = w + (l,)
                if not _suffix_redex(rs, w2):
                    nxt.append((src, letter_ends(c, l)[1], w2))
        found.extend(nxt)
        quiet = quiet + 1 if not nxt else 0
        level = nxt
    return Quotient(found, n)


def _suffix_redex(rs: RewriteSystem, word: Word) -> bool:
    n = len(word)
    return any(k <= n and word[n - k:] in rs.rules for k in rs._lengths)


def all_words(c: FinCategory, alphabet, max_len: int, budget: Budget | None = None):
    """Every composable typed word of length at most ``max_len``."""
    budget = _budget(budget)
    out = {x: [] for x in c.objects}
    for l in alphabet:
        out[letter_ends(c, l)[0]].append(l)
    level = [(x, x, ()) for x in c.objects]
    yield from level
    for _ in range(max_len):
        nxt = []
        for src, tgt, w in level:
            for l in out[tgt]:
                budget.tick()
                nxt.append((src, letter_ends(c, l)[1], w + (l,)))
        yield from nxt
        level = nxt


def check_confluence(rs: RewriteSystem, max_len: int, budget: Budget | None = None):
    """Every one-step rewrite (generating or completed rule) of every word up
    to ``max_len`` keeps its normal form.  Returns the first failure or None."""
    budget = _budget(budget)
    rules = list(rs.rules.items()) + list(rs.generators)
    for src, tgt, w in all_words(rs.c, rs.alphabet, max_len, budget):
        nf = rs.normal_form(w, budget)
        for w2 in rs.one_step(w, rules):
            if rs.normal_form(w2, budget) != nf:
                return (src, tgt, w, w2)
    return None

"""Tiny regular-expression engine over edge labels.

Expressions are built from literals, concatenation, union and star, and
compiled to epsilon-NFAs by the textbook construction.  Membership is by
subset simulation.  No pattern-matching library is involved, so these
automata can serve as one side of a dual-route check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import Label


class Regex:
    def then(self, other: "Regex") -> "Regex":
        return Cat(self, other)

    def alt(self, other: "Regex") -> "Regex":
        return Alt(self, other)

    def star(self) -> "Regex":
        return Star(self)


@dataclass(frozen=True)
class Eps(Regex):
    pass


@dataclass(frozen=True)
class Lit(Regex):
    label: Label


@dataclass(frozen=True)
class Cat(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Alt(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Star(Regex):
    inner: Regex


def lit(label: Label) -> Regex:
    return Lit(label)


def cat(*parts: Regex) -> Regex:
    out: Regex = Eps()
    for p in parts:
        out = Cat(out, p) if not isinstance(out, Eps) else p
    return out


def union(*parts: Regex) -> Regex:
    assert parts
    out = parts[0]
    for p in parts[1:]:
        out = Alt(out, p)
    return out


class Nfa:
    """Epsilon-NFA with integer states; state 0 is initial."""

    def __init__(self):
        self.eps: list[list[int]] = []
        self.step: list[list[tuple[Label, int]]] = []
        self.accepting: set[int] = set()

    def new_state(self) -> int:
        self.eps.append([])
        self.step.append([])
        return len(self.eps) - 1

    def closure(self, states) -> frozenset[int]:
        seen = set(states)
        stack = list(states)
        while stack:
            s = stack.pop()
            for t in self.eps[s]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    def advance(self, states: frozenset[int], label: Label) -> frozenset[int]:
        nxt = {t for s in states for (lab, t) in self.step[s] if lab == label}
        return self.closure(nxt)

    def start(self) -> frozenset[int]:
        return self.closure([0])

    def accepts_set(self, states: frozenset[int]) -> bool:
        return any(s in self.accepting for s in states)

    def accepts(self, word: Sequence[Label]) -> bool:
        states = self.start()
        for label in word:
            states = self.advance(states, label)
            if not states:
                return False
        return self.accepts_set(states)


def compile_regex(expr: Regex) -> Nfa:
    nfa = Nfa()
    start = nfa.new_state()

    def build(e: Regex, src: int) -> int:
        """Wire e between src and a fresh sink state; return the sink."""
        if isinstance(e, Eps):
            dst = nfa.new_state()
            nfa.eps[src].append(dst)
            return dst
        if isinstance(e, Lit):
            dst = nfa.new_state()
            nfa.step[src].append((e.label, dst))
            return dst
        if isinstance(e, Cat):
            mid = build(e.left, src)
            return build(e.right, mid)
        if isinstance(e, Alt):
            dst = nfa.new_state()
            for branch in (e.left, e.right):
                end = build(branch, src)
                nfa.eps[end].append(dst)
            return dst
        if isinstance(e, Star):
            hub = nfa.new_state()
            nfa.eps[src].append(hub)
            end = build(e.inner, hub)
            nfa.eps[end].append(hub)
            return hub
        raise TypeError(f"not a regex node: {e!r}")

    nfa.accepting.add(build(expr, start))
    return nfa


def reduction_closure(nfa: Nfa) -> Nfa:
    """Automaton for the descendants of L(nfa) under iterated deletion of
    adjacent open-then-close factors.

    Saturation: add an epsilon edge p -> q whenever p reads an opening
    label into r, r reaches s by epsilon moves, and s reads the matching
    closing label into q.  Deleting a factor a.w.abar with w already
    deletable is covered because w's deletion shows up as epsilon moves.
    A reduced word is accepted iff it is the normal form of some word in
    the original language.
    """
    clo = Nfa()
    clo.eps = [list(edges) for edges in nfa.eps]
    clo.step = [list(edges) for edges in nfa.step]
    clo.accepting = set(nfa.accepting)
    changed = True
    while changed:
        changed = False
        for p in range(len(clo.step)):
            for lab, r in clo.step[p]:
                if lab.bar or lab.base == "dot":
                    continue
                close = lab.matched()
                for s in clo.closure([r]):
                    for lab2, q in clo.step[s]:
                        if lab2 == close and q not in clo.eps[p]:
                            clo.eps[p].append(q)
                            changed = True
    return clo


def brute_matches(expr: Regex, word: Sequence[Label]) -> bool:
    """Reference semantics by structural recursion over all splits; usable
    only on short words, kept independent of the NFA path."""
    word = tuple(word)
    n = len(word)

    from functools import lru_cache

    @lru_cache(maxsize=None)
    def match(e: Regex, i: int, j: int) -> bool:
        if isinstance(e, Eps):
            return i == j
        if isinstance(e, Lit):
            return j == i + 1 and word[i] == e.label
        if isinstance(e, Cat):
            return any(match(e.left, i, k) and match(e.right, k, j)
                       for k in range(i, j + 1))
        if isinstance(e, Alt):
            return match(e.left, i, j) or match(e.right, i, j)
        if isinstance(e, Star):
            if i == j:
                return True
            return any(match(e.inner, i, k) and match(e, k, j)
                       for k in range(i + 1, j + 1))
        raise TypeError(f"not a regex node: {e!r}")

    return match(expr, 0, n)


def enumerate_accepted(nfa: Nfa, alphabet: Sequence[Label],
                       max_len: int) -> Iterator[tuple[Label, ...]]:
    """All accepted words of length <= max_len, shortest first, each length
    in label order."""
    frontier = [((), nfa.start())]
    for _ in range(max_len + 1):
        nxt = []
        for word, states in frontier:
            if nfa.accepts_set(states):
                yield word
            for label in alphabet:
                adv = nfa.advance(states, label)
                if adv:
                    nxt.append((word + (label,), adv))
        frontier = nxt

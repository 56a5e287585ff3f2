"""Bracket-reachability solvers by pair-set saturation.

``solve_dyck`` computes the set of vertex pairs joined by a path whose
label is a balanced word, as the least set containing all ``(x, x)`` and
closed under two rules:

* wrap: ``(u', v')`` in the set, edges ``(u, q, u')`` and ``(v', q-bar, v)``
  for an opening label ``q``  =>  ``(u, v)``;
* concatenation: ``(u, w)`` and ``(w, v)``  =>  ``(u, v)``.

``solve_dyck_wrap_only`` omits the concatenation rule; it under-approximates
(e.g. it misses the chain labeled l1 l1bar l2 l2bar) and is kept so the gap
itself is observable.  ``solve_cfl`` is an independent engine driven by a
grammar in binary normal form and must agree with ``solve_dyck`` when given
the bracket grammar.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Alphabet, Instance, Label, UpdateOp, apply_update, DOT


class AlphabetMismatchError(ValueError):
    pass


class FingerprintMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class ReachIndex:
    pairs: frozenset[tuple[int, int]]
    fingerprint: int

    def query(self, u: int, v: int) -> bool:
        return (u, v) in self.pairs


def _edge_indexes(inst: Instance):
    """out_by[(u, label)] -> targets, in_by[(v, label)] -> sources,
    over the directed view of the graph."""
    out_by: dict[tuple[int, Label], list[int]] = {}
    in_by: dict[tuple[int, Label], list[int]] = {}
    for u, lab, v in inst.graph.directed_edges():
        out_by.setdefault((u, lab), []).append(v)
        in_by.setdefault((v, lab), []).append(u)
    return out_by, in_by


class _Saturator:
    """Worklist closure over Dyck pairs; reusable for incremental re-solve."""

    def __init__(self, inst: Instance, concat: bool = True):
        if inst.graph.alphabet.kind != "dyck":
            raise AlphabetMismatchError("solver requires a dyck alphabet")
        self.inst = inst
        self.concat = concat
        self.n = inst.graph.vertex_count
        self.out_by, self.in_by = _edge_indexes(inst)
        self.opens = list(inst.graph.alphabet.open_labels())
        self.pairs: set[tuple[int, int]] = set()
        self.succ: dict[int, set[int]] = {}
        self.pred: dict[int, set[int]] = {}
        self.work: list[tuple[int, int]] = []

    def add(self, u: int, v: int):
        if (u, v) not in self.pairs:
            self.pairs.add((u, v))
            self.succ.setdefault(u, set()).add(v)
            self.pred.setdefault(v, set()).add(u)
            self.work.append((u, v))

    def seed_identity(self):
        for x in range(self.n):
            self.add(x, x)

    def seed_pairs(self, pairs):
        # Pre-closed pairs: record them without queueing for re-processing.
        for u, v in pairs:
            self.pairs.add((u, v))
            self.succ.setdefault(u, set()).add(v)
            self.pred.setdefault(v, set()).add(u)

    def seed_new_edge(self, u: int, lab: Label, v: int):
        """Queue the consequences of a single new directed edge against the
        current (closed) pair set."""
        consequences = []
        if lab.is_open:
            close = lab.matched()
            for vp in self.succ.get(v, ()):
                for w in self.out_by.get((vp, close), ()):
                    consequences.append((u, w))
        else:
            opening = lab.matched()
            for up in self.pred.get(u, ()):
                for w in self.in_by.get((up, opening), ()):
                    consequences.append((w, v))
        for u2, v2 in consequences:
            self.add(u2, v2)

    def run(self):
        work = self.work
        while work:
            u, v = work.pop()
            # wrap rule: extend (u, v) outward by a matched bracket pair
            for lab in self.opens:
                close = lab.matched()
                srcs = self.in_by.get((u, lab))
                if not srcs:
                    continue
                dsts = self.out_by.get((v, close))
                if not dsts:
                    continue
                for a in srcs:
                    for b in dsts:
                        self.add(a, b)
            if self.concat:
                for w in tuple(self.succ.get(v, ())):
                    self.add(u, w)
                for w in tuple(self.pred.get(u, ())):
                    self.add(w, v)

    def index(self) -> ReachIndex:
        return ReachIndex(frozenset(self.pairs), self.inst.fingerprint())


def solve_dyck(inst: Instance) -> ReachIndex:
    sat = _Saturator(inst, concat=True)
    sat.seed_identity()
    sat.run()
    return sat.index()


def solve_dyck_wrap_only(inst: Instance) -> ReachIndex:
    """The saturation loop with the wrap rule only (no concatenation)."""
    sat = _Saturator(inst, concat=False)
    sat.seed_identity()
    sat.run()
    return sat.index()


def resolve_after_update(index: ReachIndex, inst: Instance,
                         op: UpdateOp) -> ReachIndex:
    """Re-solve after one update.  Insertions continue the old fixpoint
    (only newly derivable pairs are processed); deletions recompute from
    scratch, which is the expected regime for this problem family."""
    if index.fingerprint != inst.fingerprint():
        raise FingerprintMismatchError("index does not match the instance")
    if op.op == "query":
        return index
    new_inst = apply_update(inst, op)
    if op.op == "del":
        return solve_dyck(new_inst)
    sat = _Saturator(new_inst, concat=True)
    sat.seed_pairs(index.pairs)
    sat.seed_new_edge(op.u, op.label, op.v)
    if not new_inst.graph.directed and op.u != op.v:
        sat.seed_new_edge(op.v, op.label, op.u)
    sat.run()
    return sat.index()


# ---------------------------------------------------------------------------
# Generic engine over grammars in binary normal form

@dataclass(frozen=True)
class Grammar:
    """Context-free grammar in binary normal form: every production is
    A -> epsilon, A -> a, or A -> B C."""

    nonterminals: tuple[str, ...]
    start: str
    nullable: frozenset[str]
    terminal_rules: tuple[tuple[str, Label], ...]  # (A, a) for A -> a
    binary_rules: tuple[tuple[str, str, str], ...]  # (A, B, C) for A -> B C
    alphabet: Alphabet

    def __post_init__(self):
        nts = set(self.nonterminals)
        if self.start not in nts:
            raise ValueError("start symbol is not a nonterminal")
        for a, _, _ in self.binary_rules:
            if a not in nts:
                raise ValueError(f"unknown nonterminal {a!r}")
        for a, lab in self.terminal_rules:
            if a not in nts or not self.alphabet.contains(lab):
                raise ValueError(f"bad terminal rule {a} -> {lab.token()}")


def dyck_grammar(n: int) -> Grammar:
    """Bracket grammar over n pairs, normalized by a fixed table:
    S -> eps | S S | O_k K_k ;  K_k -> S C_k ;  O_k -> l_k ;  C_k -> l_k-bar.
    """
    nts = ["S"]
    terminal, binary = [], [("S", "S", "S")]
    for k in range(1, n + 1):
        o, c, kk = f"O{k}", f"C{k}", f"K{k}"
        nts += [o, c, kk]
        terminal += [(o, Label("l", k, False)), (c, Label("l", k, True))]
        binary += [("S", o, kk), (kk, "S", c)]
    return Grammar(tuple(nts), "S", frozenset({"S"}), tuple(terminal),
                   tuple(binary), Alphabet("dyck", n))


def near_dyck_grammar(vertex_count: int) -> Grammar:
    """Per-vertex bracket grammar with the neutral symbol:
    S -> eps | S S | dot | V_i K_i ;  K_i -> S C_i ;  V_i -> v_i ;
    C_i -> v_i-bar."""
    nts = ["S", "D"]
    terminal = [("D", DOT)]
    binary = [("S", "S", "S"), ("S", "D", "S")]
    # D alone derives a single dot; S -> D S with nullable S covers it too,
    # so "S -> dot" is expressed as the pair of rules above plus S -> eps.
    for i in range(vertex_count):
        o, c, k = f"V{i}", f"C{i}", f"K{i}"
        nts += [o, c, k]
        terminal += [(o, Label("v", i, False)), (c, Label("v", i, True))]
        binary += [("S", o, k), (k, "S", c)]
    return Grammar(tuple(nts), "S", frozenset({"S"}), tuple(terminal),
                   tuple(binary), Alphabet("neardyck", vertex_count))


def solve_cfl(inst: Instance, grammar: Grammar) -> dict[str, frozenset[tuple[int, int]]]:
    """All-pairs grammar reachability: for each nonterminal A, the pairs
    (u, v) joined by a path whose label derives from A."""
    if inst.graph.alphabet != grammar.alphabet:
        raise AlphabetMismatchError("grammar terminals do not match the instance")
    n = inst.graph.vertex_count
    pairs: dict[str, set[tuple[int, int]]] = {a: set() for a in grammar.nonterminals}
    succ: dict[tuple[str, int], set[int]] = {}
    pred: dict[tuple[str, int], set[int]] = {}
    work: list[tuple[str, int, int]] = []

    by_left: dict[str, list[tuple[str, str]]] = {}
    by_right: dict[str, list[tuple[str, str]]] = {}
    for a, b, c in grammar.binary_rules:
        by_left.setdefault(b, []).append((a, c))
        by_right.setdefault(c, []).append((a, b))
    by_label: dict[Label, list[str]] = {}
    for a, lab in grammar.terminal_rules:
        by_label.setdefault(lab, []).append(a)

    def add(a: str, u: int, v: int):
        if (u, v) not in pairs[a]:
            pairs[a].add((u, v))
            succ.setdefault((a, u), set()).add(v)
            pred.setdefault((a, v), set()).add(u)
            work.append((a, u, v))

    for a in grammar.nullable:
        for x in range(n):
            add(a, x, x)
    for u, lab, v in inst.graph.directed_edges():
        for a in by_label.get(lab, ()):
            add(a, u, v)

    while work:
        b, u, v = work.pop()
        for a, c in by_left.get(b, ()):
            for w in tuple(succ.get((c, v), ())):
                add(a, u, w)
        for a, c in by_right.get(b, ()):
            for w in tuple(pred.get((c, u), ())):
                add(a, w, v)

    return {a: frozenset(p) for a, p in pairs.items()}

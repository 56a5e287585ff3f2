"""Bounded mechanical verification suites.

Each suite checks one family of word- or path-level facts on desk-scale
instances and returns a :class:`SuiteResult`; the CLI prints them, the
test suite asserts them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import automata, words
from .graphs import Alphabet, Instance, Label, LabeledGraph
from .one_letter import prop1_check
from .oracle import (EnumerationBudget, enumerate_nominal_paths,
                     enumerate_paths, factor_of_dyck_oracle)
from .reductions import CompiledReduction, compile_dyck2_to_undirected
from .saturate import solve_dyck
from .words import (ZO_ALPHABET, in_q, in_q_init, is_dyck, is_dyck_prefix,
                    mu, nominal_decompose, reduce_word,
                    reduced_language_nfa, regular_nfa)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str):
        self.checked += 1
        if not condition:
            self.failures.append(message)

    def summary(self) -> str:
        verdict = "pass" if self.ok else "FAIL"
        out = f"suite={self.name} checked={self.checked} verdict={verdict}"
        for key, value in sorted(self.info.items()):
            out += f" {key}={value}"
        for f in self.failures[:10]:
            out += f"\n  counterexample: {f}"
        return out


# ---------------------------------------------------------------------------

def _all_words(max_len: int):
    import itertools
    for length in range(max_len + 1):
        yield from itertools.product(ZO_ALPHABET, repeat=length)


def suite_q_validate(max_len: int = 8) -> SuiteResult:
    """The reduced-shape characterizations of the factor and prefix
    languages against brute-force oracles, for every word up to max_len."""
    res = SuiteResult("q-validate")
    for w in _all_words(max_len):
        claim_q = in_q(w)
        claim_init = in_q_init(w)
        res.check(claim_init == is_dyck_prefix(w),
                  f"prefix-language mismatch on {words.zo_str(w)}")
        # the factor oracle is expensive; reuse the prefix fact when decisive
        if claim_q != (claim_init or factor_of_dyck_oracle(w)):
            res.check(False, f"factor-language mismatch on {words.zo_str(w)}")
        else:
            res.checked += 1
    return res


def _varpi_words(max_len: int) -> list[tuple[Label, ...]]:
    return list(automata.enumerate_accepted(regular_nfa("varpi"),
                                            ZO_ALPHABET, max_len))


def suite_lemma5(max_len: int = 10) -> SuiteResult:
    """If 1.0.rho stays a factor word for rho in varpi, its reduction is in
    1.0.varpi+; dually for rho.0bar.1bar and varpi-."""
    res = SuiteResult("lemma5")
    one, zero = words.ONE, words.ZERO
    zbar, obar = words.ZERO_BAR, words.ONE_BAR
    plus = regular_nfa("varpi+")
    minus = regular_nfa("varpi-")
    for rho in _varpi_words(max_len):
        w = (one, zero) + rho
        if in_q(w):
            r = reduce_word(w)
            res.check(len(r) >= 2 and r[0] == one and r[1] == zero
                      and plus.accepts(r[2:]),
                      f"reduction of 1 0 {words.zo_str(rho)} leaves 1 0 varpi+")
        else:
            res.checked += 1
        w2 = rho + (zbar, obar)
        if in_q(w2):
            r = reduce_word(w2)
            res.check(len(r) >= 2 and r[-2] == zbar and r[-1] == obar
                      and minus.accepts(r[:-2]),
                      f"reduction of {words.zo_str(rho)} 0bar 1bar leaves varpi- 0bar 1bar")
        else:
            res.checked += 1
    return res


# languages of reduced chain-traversal labels, per source-edge label
def _lemma6_regex(lab: Label) -> automata.Regex:
    r = automata
    L = lambda tok: r.lit(words.word(tok)[0])
    vp = words.REGULAR_EXPRS["varpi"]
    wp = words.REGULAR_EXPRS["omega+"]
    wm = words.REGULAR_EXPRS["omega-"]
    if lab == Label("l", 1, False):
        return r.cat(vp, L("1"), L("1"), L("0"), L("0"), wp, L("1"), L("0"))
    if lab == Label("l", 2, False):
        return r.cat(vp, L("1"), wp, L("0"), L("0"), L("1"), L("1"), wp, L("0"))
    if lab == Label("l", 1, True):
        return r.cat(L("0bar"), L("1bar"), wm, L("0bar"), L("0bar"),
                     L("1bar"), L("1bar"), vp)
    if lab == Label("l", 2, True):
        return r.cat(L("0bar"), wm, L("1bar"), L("1bar"), L("0bar"),
                     L("0bar"), wm, L("1bar"), vp)
    raise ValueError(lab)


_LEMMA6_NFAS: dict[Label, automata.Nfa] = {}


def lemma6_nfa(lab: Label) -> automata.Nfa:
    if lab not in _LEMMA6_NFAS:
        _LEMMA6_NFAS[lab] = automata.compile_regex(_lemma6_regex(lab))
    return _LEMMA6_NFAS[lab]


def default_gadget_source() -> Instance:
    """A 2-vertex directed two-pair instance carrying all four edge labels,
    so every chain shape occurs in its compiled gadget."""
    alph = Alphabet("dyck", 2)
    edges = [(0, Label("l", 1, False), 1), (1, Label("l", 1, True), 0),
             (0, Label("l", 2, False), 1), (1, Label("l", 2, True), 0)]
    return Instance(LabeledGraph.build(True, 2, alph, edges), 0, 0)


def suite_lemma6(red: CompiledReduction | None = None,
                 budget: EnumerationBudget | None = None) -> SuiteResult:
    """Reduced labels of enumerated nominal paths lie in the per-tag
    languages: stutter loops in varpi, chain traversals in the four
    composite languages."""
    res = SuiteResult("lemma6")
    if red is None:
        red = compile_dyck2_to_undirected(default_gadget_source())
    if budget is None:
        budget = EnumerationBudget(40, 2000)
    source = _source_of(red)
    varpi = regular_nfa("varpi")
    for x in range(source.graph.vertex_count):
        labels, _trunc = enumerate_nominal_paths(red, ("loop", x), budget)
        for w in labels:
            res.check(varpi.accepts(reduce_word(w)),
                      f"loop at {x}: reduction of {words.zo_str(w)} not in varpi")
    for x, lab, y in sorted(source.graph.edges):
        labels, _trunc = enumerate_nominal_paths(red, ("edge", x, lab, y), budget)
        nfa = lemma6_nfa(lab)
        for w in labels:
            res.check(nfa.accepts(reduce_word(w)),
                      f"chain ({x},{lab.token()},{y}): reduction of "
                      f"{words.zo_str(w)} outside its language")
    return res


def _source_of(red: CompiledReduction) -> Instance:
    """Recover the source edge set of an undirected-gadget target from its
    dynamic edges (each present chain spells one source edge)."""
    inst = red.target
    chains = set()
    for u, lab, v in inst.graph.edges:
        for vid in (u, v):
            name = red.vertex_name(vid)
            if len(name) == 4:
                chains.add((name[0], name[1], name[2]))
    n = sum(1 for name in red.names if len(name) == 1)
    graph = LabeledGraph.build(True, n, Alphabet("dyck", 2), sorted(chains))
    return Instance(graph, inst.source, inst.sink)


def suite_lemma7(red: CompiledReduction | None = None,
                 budget: EnumerationBudget | None = None,
                 varpi_max_len: int = 6,
                 sample_cap: int = 40,
                 seed: int = 0) -> SuiteResult:
    """Consecution discipline of chain labels: a matched open/close pair
    around a varpi word reduces to the reduction of some varpi word; a
    mismatched pair never stays a factor word; closing chains cannot start
    a balanced prefix.

    The matched-pair clause is checked against the reduction closure of
    varpi, not against varpi itself: literal membership is false (a chain
    label may backtrack between its locks, and the cross-junction
    cancellation then strands closing letters outside the block shape of
    varpi), and only the closure reading is consistent with chaining
    facts like "reduces into 1.0.0bar.1bar, hence into the empty word".
    The count of words passing only under the closure reading is reported
    in ``strict_misses``.
    """
    res = SuiteResult("lemma7")
    if red is None:
        red = compile_dyck2_to_undirected(default_gadget_source())
    if budget is None:
        budget = EnumerationBudget(36, 400)
    rng = random.Random(seed)
    source = _source_of(red)
    varpi = regular_nfa("varpi")
    varpi_red = reduced_language_nfa("varpi")
    res.info["strict_misses"] = 0

    by_label: dict[Label, list[tuple[Label, ...]]] = {}
    for x, lab, y in sorted(source.graph.edges):
        labels, _ = enumerate_nominal_paths(red, ("edge", x, lab, y), budget)
        pool = by_label.setdefault(lab, [])
        pool.extend(labels)
    for lab, pool in by_label.items():
        if len(pool) > sample_cap:
            by_label[lab] = rng.sample(pool, sample_cap)

    rhos = [r for r in _varpi_words(varpi_max_len)]
    if len(rhos) > sample_cap:
        rhos = rng.sample(rhos, sample_cap)

    def pairs(open_k: int, close_k: int):
        for w1 in by_label.get(Label("l", open_k, False), ()):
            for w3 in by_label.get(Label("l", close_k, True), ()):
                yield w1, w3

    for k in (1, 2):
        for w1, w3 in pairs(k, k):
            for rho in rhos:
                w = w1 + rho + w3
                if in_q(w):
                    r = reduce_word(w)
                    res.check(varpi_red.accepts(r),
                              f"matched pair {k}: reduction of a factor word "
                              f"escapes even the closure of varpi: {words.zo_str(r)}")
                    if not varpi.accepts(r):
                        res.info["strict_misses"] += 1
                else:
                    res.checked += 1
    for k, other in ((1, 2), (2, 1)):
        for w1, w3 in pairs(k, other):
            for rho in rhos:
                res.check(not in_q(w1 + rho + w3),
                          f"mismatched pair {k}/{other}: factor word survived")
    for k in (1, 2):
        for w3 in by_label.get(Label("l", k, True), ()):
            for rho in rhos:
                res.check(not in_q_init(rho + w3),
                          f"closing chain {k} started a balanced prefix")
    return res


def suite_lemma4(red: CompiledReduction | None = None,
                 budget: EnumerationBudget | None = None) -> SuiteResult:
    """Every enumerated balanced path between the marked vertices of an
    undirected-gadget target has an ancestor with zero bracket balance."""
    res = SuiteResult("lemma4")
    if red is None:
        red = compile_dyck2_to_undirected(default_gadget_source())
    if budget is None:
        budget = EnumerationBudget(40, 500)
    inst = red.target
    enum = enumerate_paths(inst, inst.source, inst.sink, budget,
                           predicate=is_dyck, prefix_ok=in_q_init)
    for path in enum.paths:
        if not path:
            continue
        decomp = nominal_decompose(path, red)
        ancestor_label = [lab for _, lab, _ in decomp.ancestor]
        res.check(mu(ancestor_label) == 0,
                  f"ancestor balance {mu(ancestor_label)} != 0 for a path of "
                  f"length {len(path)}")
    if not enum.paths:
        res.checked += 1  # vacuous but recorded
    return res


def random_undirected_one_pair(rng: random.Random, max_vertices: int = 6) -> Instance:
    n = rng.randint(1, max_vertices)
    alph = Alphabet("dyck", 1)
    edges = []
    for u in range(n):
        for v in range(u, n):
            for lab in (Label("l", 1, False), Label("l", 1, True)):
                if rng.random() < 0.3:
                    edges.append((u, lab, v))
    graph = LabeledGraph.build(False, n, alph, edges)
    return Instance(graph, rng.randrange(n), rng.randrange(n))


def suite_prop1(samples: int = 300, seed: int = 0,
                max_vertices: int = 6) -> SuiteResult:
    """The three-condition characterization against the saturation solver
    on random undirected one-pair instances."""
    res = SuiteResult("prop1")
    rng = random.Random(seed)
    for _ in range(samples):
        inst = random_undirected_one_pair(rng, max_vertices)
        fast = prop1_check(inst)
        slow = solve_dyck(inst).query(inst.source, inst.sink)
        res.check(fast == slow,
                  f"mismatch on {inst.source}->{inst.sink} with edges "
                  f"{sorted(inst.graph.edges)}")
    return res


SUITES = {
    "q-validate": suite_q_validate,
    "lemma4": suite_lemma4,
    "lemma5": suite_lemma5,
    "lemma6": suite_lemma6,
    "lemma7": suite_lemma7,
    "prop1": suite_prop1,
}

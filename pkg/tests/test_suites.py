"""The bounded verification suites, plus the pinned witness that the
matched-pair consecution fact needs the reduction-closure reading."""

from dycklab import (Alphabet, EnumerationBudget, Instance, Label,
                     LabeledGraph, PHI_UNDIRECTED, in_q, reduce_word,
                     reduced_language_nfa)
from dycklab.oracle import enumerate_nominal_paths
from dycklab.suites import (SUITES, default_gadget_source, suite_lemma4,
                            suite_lemma5, suite_lemma6, suite_lemma7,
                            suite_prop1, suite_q_validate)
from dycklab.reductions import compile_dyck2_to_undirected
from dycklab.words import regular_nfa

L2BAR = Label("l", 2, True)


def test_suite_registry():
    assert set(SUITES) == {"q-validate", "lemma4", "lemma5", "lemma6",
                           "lemma7", "prop1"}


def test_q_validate_short():
    res = suite_q_validate(max_len=5)
    assert res.ok, res.failures
    assert res.checked > 0
    assert "pass" in res.summary()


def test_lemma5_short():
    res = suite_lemma5(max_len=6)
    assert res.ok, res.failures


def test_lemma4_small_budget():
    res = suite_lemma4(budget=EnumerationBudget(24, 200))
    assert res.ok, res.failures


def test_lemma4_vacuous_on_empty_source():
    g = LabeledGraph.build(True, 2, Alphabet("dyck", 2), [])
    red = compile_dyck2_to_undirected(Instance(g, 0, 1))
    res = suite_lemma4(red, EnumerationBudget(12, 50))
    assert res.ok
    assert res.checked >= 1


def test_lemma6_small_budget():
    res = suite_lemma6(budget=EnumerationBudget(24, 300))
    assert res.ok, res.failures


def test_lemma6_self_loop_source():
    # on a self-loop chain a walk can return to its start without touching
    # the second pair; that is a stutter loop, not a chain traversal
    g = LabeledGraph.build(True, 1, Alphabet("dyck", 2),
                           [(0, Label("l", 1, False), 0)])
    red = compile_dyck2_to_undirected(Instance(g, 0, 0))
    labels, _ = enumerate_nominal_paths(
        red, ("edge", 0, Label("l", 1, False), 0), EnumerationBudget(12, 100))
    assert all(any(lab.index == 2 for lab in w) for w in labels)
    res = suite_lemma6(red, EnumerationBudget(24, 300,
                                              max_expansions=20_000))
    assert res.ok, res.failures


def test_lemma6_trivial_on_empty_source():
    g = LabeledGraph.build(True, 2, Alphabet("dyck", 2), [])
    red = compile_dyck2_to_undirected(Instance(g, 0, 1))
    res = suite_lemma6(red, EnumerationBudget(24, 300))
    assert res.ok
    assert res.checked == 0  # no chains, no loops: vacuously true


def test_lemma7_small_budget():
    res = suite_lemma7(budget=EnumerationBudget(26, 120), varpi_max_len=4,
                       sample_cap=16, seed=1)
    assert res.ok, res.failures


def test_prop1_suite():
    res = suite_prop1(samples=120, seed=3)
    assert res.ok, res.failures


def test_suite_summary_reports_counterexamples():
    res = suite_prop1(samples=5)
    res.check(False, "synthetic failure")
    assert not res.ok
    assert "synthetic failure" in res.summary()
    assert "FAIL" in res.summary()


# ---------------------------------------------------------------------------
# The literal matched-pair claim fails; the closure reading holds.

def test_matched_pair_reductions_can_escape_the_literal_language():
    """A chain traversal may bounce between its locks; gluing it to a
    closing chain then cancels across the junction and strands closing
    letters in a shape the block language cannot produce.  The reduction
    still lies in the closure (it is the normal form of a language word),
    which is what the suite checks."""
    red = compile_dyck2_to_undirected(default_gadget_source())
    w1 = PHI_UNDIRECTED[Label("l", 2, False)]  # direct second-pair traversal
    labels, _ = enumerate_nominal_paths(red, ("edge", 1, L2BAR, 0),
                                        EnumerationBudget(36, 400))
    varpi = regular_nfa("varpi")
    closure = reduced_language_nfa("varpi")
    escapes = []
    for w3 in labels:
        w = w1 + w3
        if in_q(w):
            r = reduce_word(w)
            assert closure.accepts(r), r
            if not varpi.accepts(r):
                escapes.append(r)
    assert escapes, "expected at least one literal escape"


def test_lemma7_reports_the_literal_miss_count():
    res = suite_lemma7(budget=EnumerationBudget(36, 400), varpi_max_len=6,
                       sample_cap=40, seed=0)
    assert res.ok, res.failures
    assert res.info["strict_misses"] > 0

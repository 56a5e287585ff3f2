"""Word-level machinery for the bracket encodings.

Words are tuples of :class:`~dycklab.graphs.Label`.  The two-pair bracket
alphabet doubles as {0, 1, 0bar, 1bar}: pair 1 renders as 0, pair 2 as 1.

The central operation is :func:`reduce_word`, which cancels the factors
0*0bar and 1*1bar (open-then-close only; close-then-open such as 0bar*0
stays).  On top of it sit the approximate-bracket predicates ``in_q`` /
``in_q_init``, the regular-language family used by the undirected-gadget
analysis, the homomorphic encodings, and the projection onto the free
product Z2 * Z2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import automata
from .graphs import DOT, Alphabet, Label, parse_label_token

Word = tuple[Label, ...]

ZERO = Label("l", 1, False)
ZERO_BAR = Label("l", 1, True)
ONE = Label("l", 2, False)
ONE_BAR = Label("l", 2, True)

ZO_ALPHABET = (ZERO, ZERO_BAR, ONE, ONE_BAR)

_ZO_TOKENS = {ZERO: "0", ZERO_BAR: "0bar", ONE: "1", ONE_BAR: "1bar"}


def word(tokens: str) -> Word:
    """Build a word from space-separated label tokens ('0 0bar l1 dot v3...')."""
    return tuple(parse_label_token(t) for t in tokens.split())


def zo_str(w: Sequence[Label]) -> str:
    """Render a two-pair word in 0/1 notation."""
    return " ".join(_ZO_TOKENS[lab] for lab in w)


def reduce_word(w: Sequence[Label]) -> Word:
    """Normal form under exhaustive deletion of open-then-close factors.

    The rewrite is length-reducing and confluent, so a single left-to-right
    stack pass computes the unique normal form.
    """
    out: list[Label] = []
    for lab in w:
        if out and lab.bar and out[-1] == lab.matched():
            out.pop()
        else:
            out.append(lab)
    return tuple(out)


def is_dyck(w: Sequence[Label]) -> bool:
    """Membership in the balanced-bracket language (any number of pairs)."""
    stack: list[Label] = []
    for lab in w:
        if lab.base == "dot":
            return False
        if lab.bar:
            if not stack or stack[-1] != lab.matched():
                return False
            stack.pop()
        else:
            stack.append(lab)
    return not stack


def is_dyck_prefix(w: Sequence[Label]) -> bool:
    """Is w a prefix of some balanced word (closes never mismatch)?"""
    stack: list[Label] = []
    for lab in w:
        if lab.base == "dot":
            return False
        if lab.bar:
            if not stack or stack[-1] != lab.matched():
                return False
            stack.pop()
        else:
            stack.append(lab)
    return True


def is_near_dyck(w: Sequence[Label]) -> bool:
    """Membership in the per-vertex bracket language with the freely
    insertable neutral symbol: erase dots, then balance-check."""
    return is_dyck([lab for lab in w if lab != DOT])


def in_q(w: Sequence[Label]) -> bool:
    """Is w a factor of some balanced two-pair word?

    Characterization: the reduced word must consist of closing letters
    followed by opening letters.  Validated elsewhere against the
    brute-force factor oracle.
    """
    r = reduce_word(w)
    seen_open = False
    for lab in r:
        if lab.bar and seen_open:
            return False
        if not lab.bar:
            seen_open = True
    return True


def in_q_init(w: Sequence[Label]) -> bool:
    """Is w a prefix of some balanced two-pair word?  Equivalently, the
    reduced word has opening letters only."""
    return all(not lab.bar for lab in reduce_word(w))


# ---------------------------------------------------------------------------
# The six regular languages of the undirected-gadget analysis

def _zo(expr: str) -> automata.Regex:
    return automata.lit(parse_label_token(expr))


def _omega_plus() -> automata.Regex:
    return automata.union(automata.cat(_zo("0"), _zo("0")),
                          automata.cat(_zo("1"), _zo("1"))).star()


def _omega_minus() -> automata.Regex:
    return automata.union(automata.cat(_zo("0bar"), _zo("0bar")),
                          automata.cat(_zo("1bar"), _zo("1bar"))).star()


def _omega() -> automata.Regex:
    return automata.union(_omega_plus(), _omega_minus(),
                          automata.cat(_zo("0bar"), _zo("0"))).star()


def _varpi_plus() -> automata.Regex:
    w = _omega_plus()
    return automata.cat(
        automata.cat(_omega_plus(), _zo("1"), _omega_plus(), _zo("1")).star(), w)


def _varpi_minus() -> automata.Regex:
    w = _omega_minus()
    return automata.cat(
        automata.cat(_omega_minus(), _zo("1bar"), _omega_minus(), _zo("1bar")).star(), w)


def _varpi() -> automata.Regex:
    w = _omega()
    return automata.cat(
        automata.cat(_omega(), _zo("1"), _omega(), _zo("1bar")).star(), w)


REGULAR_EXPRS: dict[str, automata.Regex] = {
    "omega+": _omega_plus(),
    "omega-": _omega_minus(),
    "omega": _omega(),
    "varpi+": _varpi_plus(),
    "varpi-": _varpi_minus(),
    "varpi": _varpi(),
}

_NFAS = {name: automata.compile_regex(expr) for name, expr in REGULAR_EXPRS.items()}


def in_regular(w: Sequence[Label], which: str) -> bool:
    if which not in _NFAS:
        raise ValueError(f"unknown language {which!r}; expected one of "
                         f"{sorted(_NFAS)}")
    return _NFAS[which].accepts(tuple(w))


def regular_nfa(which: str) -> automata.Nfa:
    return _NFAS[which]


_CLOSURE_NFAS: dict[str, automata.Nfa] = {}


def reduced_language_nfa(which: str) -> automata.Nfa:
    """Automaton for the set of reductions of words of a named language.

    A reduced word w lies in this set iff w = reduce(u) for some u in the
    language; this is the right-hand-side semantics under which chains
    like "reduces into 1.0.0bar.1bar, hence into the empty word" make
    sense, and it is strictly larger than the literal language.
    """
    if which not in _CLOSURE_NFAS:
        _CLOSURE_NFAS[which] = automata.reduction_closure(regular_nfa(which))
    return _CLOSURE_NFAS[which]


# ---------------------------------------------------------------------------
# Homomorphic encodings

def phi_neardyck_letter(lab: Label, n: int) -> Word:
    """Image of one per-vertex-alphabet letter in the two-pair alphabet
    {a, b, abar, bbar} (a = pair 1, b = pair 2): dot -> a abar,
    v_i -> a^i b a^(n+1-i), v_i-bar -> abar^(n+1-i) bbar abar^i, where
    i is the 1-based slot of the vertex (vertex id + 1)."""
    a, abar = ZERO, ZERO_BAR  # pair 1 doubles as 'a'
    b, bbar = ONE, ONE_BAR
    if lab == DOT:
        return (a, abar)
    if lab.base != "v" or not 0 <= lab.index < n:
        raise ValueError(f"not a per-vertex label for n={n}: {lab.token()}")
    i = lab.index + 1
    if not lab.bar:
        return (a,) * i + (b,) + (a,) * (n + 1 - i)
    return (abar,) * (n + 1 - i) + (bbar,) + (abar,) * i


def phi_neardyck(w: Sequence[Label], n: int) -> Word:
    out: list[Label] = []
    for lab in w:
        out.extend(phi_neardyck_letter(lab, n))
    return tuple(out)


def _w(tokens: str) -> Word:
    return word(tokens)


# The four 12-letter encodings for the undirected gadget, locks included
# (positions 2-3 and 11-12 of the opening words).
PHI_UNDIRECTED: dict[Label, Word] = {
    Label("l", 1, False): _w("0 0bar 1 1 0 0 1 1 1 1 1bar 0"),
    Label("l", 1, True): _w("0bar 1 1bar 1bar 1bar 1bar 0bar 0bar 1bar 1bar 0 0bar"),
    Label("l", 2, False): _w("0 0bar 1 0 0 1 1 0 0 1 1bar 0"),
    Label("l", 2, True): _w("0bar 1 1bar 0bar 0bar 1bar 1bar 0bar 0bar 1bar 0 0bar"),
}


def phi_undirected(w: Sequence[Label]) -> Word:
    out: list[Label] = []
    for lab in w:
        out.extend(PHI_UNDIRECTED[lab])
    return tuple(out)


def mu(w: Sequence[Label]) -> int:
    """Opening letters count +1, closing letters -1."""
    total = 0
    for lab in w:
        if lab.base == "dot":
            raise ValueError("mu is defined on bracket letters only")
        total += -1 if lab.bar else 1
    return total


# ---------------------------------------------------------------------------
# Projection onto the free product Z2 * Z2

FreeProductElement = tuple[str, ...]  # alternating word over "alpha"/"beta"

GAMMA: FreeProductElement = ("beta", "alpha")


def theta(w: Sequence[Label]) -> FreeProductElement:
    """Send 0 and 0bar to the involution alpha, 1 and 1bar to beta, then
    reduce modulo alpha^2 = beta^2 = identity."""
    out: list[str] = []
    for lab in w:
        g = "alpha" if lab.index == 1 else "beta"
        if out and out[-1] == g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def free_product_mul(x: FreeProductElement, y: FreeProductElement) -> FreeProductElement:
    out = list(x)
    for g in y:
        if out and out[-1] == g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def gamma_exponent(e: FreeProductElement) -> Optional[int]:
    """k if e equals the k-th power of gamma = beta*alpha (k may be
    negative; the identity is gamma^0), else None."""
    if not e:
        return 0
    if len(e) % 2:
        return None
    if e[0] == "beta":
        expected = ("beta", "alpha")
        sign = 1
    else:
        expected = ("alpha", "beta")
        sign = -1
    if all(g == expected[i % 2] for i, g in enumerate(e)):
        return sign * (len(e) // 2)
    return None


# ---------------------------------------------------------------------------
# Nominal decomposition of balanced paths in the undirected gadget

@dataclass(frozen=True)
class NominalSegment:
    tag: str  # "edge" (P_{x,lambda,y}) or "loop" (P_x)
    source: int
    sink: int
    source_label: Optional[Label]  # set for "edge" segments
    edges: tuple[tuple[int, Label, int], ...]


@dataclass(frozen=True)
class NominalDecomposition:
    vertices: tuple[int, ...]  # nominal vertex sequence, in source-graph ids
    segments: tuple[NominalSegment, ...]
    ancestor: tuple[tuple[int, Label, int], ...]

    def label_map(self) -> dict[int, Label]:
        return {i + 1: seg.source_label
                for i, seg in enumerate(self.segments) if seg.tag == "edge"}


class DecompositionError(ValueError):
    pass


def nominal_decompose(path: Sequence[tuple[int, Label, int]],
                      red) -> NominalDecomposition:
    """Decompose a balanced path between original vertices of an
    undirected-gadget target into its nominal segments.

    ``red`` is the compiled reduction (kind ``dyck2_to_undirected``); its
    layout maps gadget vertex ids back to ``(x, lambda, y, i)`` names.
    Segments whose labels stay in {0, 0bar} and return to their start are
    stutter loops; every other segment must traverse one gadget chain
    forwards and is charged to its source edge.

    Accepts any approximate-bracket path (label a factor of a balanced
    word), so a single chain traversal decomposes on its own; balanced
    paths are the special case used by the ancestor-balance checks.
    """
    if red.kind != "dyck2_to_undirected":
        raise DecompositionError("decomposition needs an undirected-gadget target")
    labels = [lab for _, lab, _ in path]
    if not in_q(labels):
        raise DecompositionError("path label is not a factor of a balanced word")

    def as_original(vid: int) -> Optional[int]:
        name = red.vertex_name(vid)
        return name[0] if len(name) == 1 else None

    if not path:
        raise DecompositionError("empty path has no decomposition")
    first, last = path[0][0], path[-1][2]
    if as_original(first) is None or as_original(last) is None:
        raise DecompositionError("endpoints must be original vertices")

    # split at every visit of an original vertex
    segments: list[list[tuple[int, Label, int]]] = []
    current: list[tuple[int, Label, int]] = []
    for e in path:
        current.append(e)
        if as_original(e[2]) is not None:
            segments.append(current)
            current = []
    if current:
        raise DecompositionError("path does not end at an original vertex")

    nominal_vertices = [as_original(first)]
    out_segments: list[NominalSegment] = []
    ancestor: list[tuple[int, Label, int]] = []
    for seg in segments:
        src = as_original(seg[0][0])
        dst = as_original(seg[-1][2])
        seg_labels = [lab for _, lab, _ in seg]
        uses_pair2 = any(lab.index == 2 for lab in seg_labels)
        if not uses_pair2:
            if src != dst:
                raise DecompositionError(
                    f"stutter segment with distinct endpoints {src} -> {dst}")
            out_segments.append(NominalSegment("loop", src, dst, None, tuple(seg)))
        else:
            interiors = {v for _, _, v in seg[:-1]}
            names = {red.vertex_name(v) for v in interiors}
            keys = {(x, lab, y) for (x, lab, y, _i) in names}
            if len(keys) != 1:
                raise DecompositionError("segment interior spans several chains")
            (x, lab, y) = keys.pop()
            if src != x or dst != y:
                raise DecompositionError(
                    f"segment crosses a lock backwards: {src} -> {dst} on "
                    f"chain ({x}, {lab.token()}, {y})")
            out_segments.append(NominalSegment("edge", x, y, lab, tuple(seg)))
            ancestor.append((x, lab, y))
        nominal_vertices.append(dst)

    return NominalDecomposition(tuple(nominal_vertices), tuple(out_segments),
                                tuple(ancestor))


def word_alphabet_labels(alphabet: Alphabet) -> Word:
    return tuple(alphabet.labels())

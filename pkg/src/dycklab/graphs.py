"""Labeled graphs, alphabets, instances and edge updates.

Vertices are dense integers ``0..vertex_count-1``.  Labels come from either
a bracket alphabet with ``n`` matched pairs (tokens ``l1``, ``l1bar``, ...)
or a per-vertex bracket alphabet with a neutral symbol (tokens ``v0``,
``v0bar``, ..., ``dot``).  Undirected graphs store each edge once, with the
endpoints in canonical order, and report it in both directions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional


class GraphFormatError(ValueError):
    """Raised on malformed graph or update-script text."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UpdateError(ValueError):
    """Raised when an insertion or deletion is not applicable."""


class Label(NamedTuple):
    """A single edge label.

    ``base`` is ``"l"`` for bracket pair ``index`` (1-based), ``"v"`` for the
    per-vertex pair of vertex ``index`` (0-based), or ``"dot"`` for the
    neutral symbol.  ``bar`` marks the closing partner.
    """

    base: str
    index: int
    bar: bool

    def matched(self) -> "Label":
        """The closing partner of an opening label and vice versa."""
        if self.base == "dot":
            raise ValueError("the neutral symbol has no matching partner")
        return Label(self.base, self.index, not self.bar)

    @property
    def is_open(self) -> bool:
        return self.base != "dot" and not self.bar

    def token(self) -> str:
        if self.base == "dot":
            return "dot"
        return f"{self.base}{self.index}{'bar' if self.bar else ''}"

    def __repr__(self) -> str:  # keep failure output readable
        return self.token()


DOT = Label("dot", 0, False)

_TOKEN_RE = re.compile(r"^(l|v)(\d+)(bar)?$")

# Convenience aliases used by the word-level tooling: the two-pair bracket
# alphabet doubles as {0, 1, 0bar, 1bar} and as {a, b, abar, bbar}.
_ALIASES = {
    "0": "l1", "0bar": "l1bar", "1": "l2", "1bar": "l2bar",
    "a": "l1", "abar": "l1bar", "b": "l2", "bbar": "l2bar",
}


def parse_label_token(token: str) -> Label:
    token = _ALIASES.get(token, token)
    if token == "dot":
        return DOT
    m = _TOKEN_RE.match(token)
    if not m:
        raise ValueError(f"unknown label token {token!r}")
    return Label(m.group(1), int(m.group(2)), m.group(3) is not None)


@dataclass(frozen=True)
class Alphabet:
    """Either ``dyck(n)`` (n bracket pairs) or ``neardyck(N)`` (per-vertex
    pairs for vertices ``0..N-1`` plus the neutral symbol)."""

    kind: str  # "dyck" | "neardyck"
    size: int

    def __post_init__(self):
        if self.kind not in ("dyck", "neardyck"):
            raise ValueError(f"unknown alphabet kind {self.kind!r}")
        if self.size < 1:
            raise ValueError("alphabet size must be positive")

    def contains(self, label: Label) -> bool:
        if label.base == "dot":
            return self.kind == "neardyck"
        if label.base == "l":
            return self.kind == "dyck" and 1 <= label.index <= self.size
        if label.base == "v":
            return self.kind == "neardyck" and 0 <= label.index < self.size
        return False

    def open_labels(self) -> Iterator[Label]:
        if self.kind == "dyck":
            for k in range(1, self.size + 1):
                yield Label("l", k, False)
        else:
            for i in range(self.size):
                yield Label("v", i, False)

    def labels(self) -> Iterator[Label]:
        for lab in self.open_labels():
            yield lab
            yield lab.matched()
        if self.kind == "neardyck":
            yield DOT


Edge = tuple[int, Label, int]


def _canonical(directed: bool, edge: Edge) -> Edge:
    if directed:
        return edge
    u, lab, v = edge
    return (u, lab, v) if u <= v else (v, lab, u)


@dataclass(frozen=True)
class LabeledGraph:
    """Immutable labeled graph.  ``edges`` holds canonical triples only."""

    directed: bool
    vertex_count: int
    alphabet: Alphabet
    edges: frozenset[Edge]

    @staticmethod
    def build(directed: bool, vertex_count: int, alphabet: Alphabet,
              edges: Iterable[Edge]) -> "LabeledGraph":
        canon = set()
        for e in edges:
            u, lab, v = e
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphFormatError(f"edge endpoint out of range: {e}")
            if not alphabet.contains(lab):
                raise GraphFormatError(f"label {lab.token()} not in alphabet")
            canon.add(_canonical(directed, e))
        return LabeledGraph(directed, vertex_count, alphabet, frozenset(canon))

    def has_edge(self, u: int, label: Label, v: int) -> bool:
        return _canonical(self.directed, (u, label, v)) in self.edges

    def directed_edges(self) -> Iterator[Edge]:
        """All edges as directed triples; undirected edges appear both ways
        (a self-loop appears once)."""
        for u, lab, v in self.edges:
            yield (u, lab, v)
            if not self.directed and u != v:
                yield (v, lab, u)

    def with_edge(self, u: int, label: Label, v: int) -> "LabeledGraph":
        if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
            raise UpdateError(f"edge endpoint out of range: ({u}, {label.token()}, {v})")
        if not self.alphabet.contains(label):
            raise UpdateError(f"label {label.token()} not in alphabet")
        e = _canonical(self.directed, (u, label, v))
        if e in self.edges:
            raise UpdateError(f"duplicate edge ({u}, {label.token()}, {v})")
        return LabeledGraph(self.directed, self.vertex_count, self.alphabet,
                            self.edges | {e})

    def without_edge(self, u: int, label: Label, v: int) -> "LabeledGraph":
        e = _canonical(self.directed, (u, label, v))
        if e not in self.edges:
            raise UpdateError(f"missing edge ({u}, {label.token()}, {v})")
        return LabeledGraph(self.directed, self.vertex_count, self.alphabet,
                            self.edges - {e})


@dataclass(frozen=True)
class Instance:
    """A graph with a marked source/sink pair and an optional and/or
    partition (``partition[v]`` is ``"and"`` or ``"or"``)."""

    graph: LabeledGraph
    source: int
    sink: int
    partition: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        n = self.graph.vertex_count
        if not (0 <= self.source < n and 0 <= self.sink < n):
            raise GraphFormatError("marked vertex out of range")
        if self.partition is not None:
            if len(self.partition) != n:
                raise GraphFormatError("partition must cover every vertex")
            if any(p not in ("and", "or") for p in self.partition):
                raise GraphFormatError("partition entries must be and/or")

    def fingerprint(self) -> int:
        g = self.graph
        return hash((g.directed, g.vertex_count, g.alphabet, g.edges,
                     self.source, self.sink, self.partition))


@dataclass(frozen=True)
class UpdateOp:
    """``ins``/``del`` of one edge, or a ``query`` of the marked pair."""

    op: str  # "ins" | "del" | "query"
    u: int = -1
    label: Optional[Label] = None
    v: int = -1

    @staticmethod
    def ins(u: int, label: Label, v: int) -> "UpdateOp":
        return UpdateOp("ins", u, label, v)

    @staticmethod
    def delete(u: int, label: Label, v: int) -> "UpdateOp":
        return UpdateOp("del", u, label, v)

    @staticmethod
    def query() -> "UpdateOp":
        return UpdateOp("query")

    def inverse(self) -> "UpdateOp":
        if self.op == "ins":
            return UpdateOp("del", self.u, self.label, self.v)
        if self.op == "del":
            return UpdateOp("ins", self.u, self.label, self.v)
        return self


def apply_update(inst: Instance, op: UpdateOp) -> Instance:
    """Apply one update; strict (no-op insertions/deletions are errors)."""
    if op.op == "query":
        return inst
    if op.op == "ins":
        g = inst.graph.with_edge(op.u, op.label, op.v)
    elif op.op == "del":
        g = inst.graph.without_edge(op.u, op.label, op.v)
    else:
        raise UpdateError(f"unknown update {op.op!r}")
    return Instance(g, inst.source, inst.sink, inst.partition)


# ---------------------------------------------------------------------------
# File formats

def parse_graph(text: str) -> Instance:
    """Parse the line-oriented graph format.

    Header: ``graph directed|undirected``, ``vertices N``,
    ``alphabet dyck n | neardyck N``.  Body: ``edge u <label> v`` lines, one
    ``mark s t``, and optionally ``partition and u1 u2 ...`` (the remaining
    vertices are or-vertices).
    """
    directed = None
    vertex_count = None
    alphabet = None
    edges = []
    mark = None
    partition_and = None

    def err(msg, no):
        raise GraphFormatError(msg, no)

    lines = text.splitlines()
    header = []
    body_start = 0
    for no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(header) < 3:
            header.append((no, fields))
            continue
        body_start = body_start or no
        kw = fields[0]
        if kw == "edge":
            if len(fields) != 4:
                err("expected 'edge <u> <label> <v>'", no)
            try:
                u, v = int(fields[1]), int(fields[3])
                lab = parse_label_token(fields[2])
            except ValueError as exc:
                err(str(exc), no)
            edges.append((no, (u, lab, v)))
        elif kw == "mark":
            if mark is not None:
                err("duplicate mark line", no)
            if len(fields) != 3:
                err("expected 'mark <s> <t>'", no)
            mark = (int(fields[1]), int(fields[2]))
        elif kw == "partition":
            if partition_and is not None:
                err("duplicate partition line", no)
            if len(fields) < 2 or fields[1] != "and":
                err("expected 'partition and <u> ...'", no)
            partition_and = (no, [int(f) for f in fields[2:]])
        else:
            err(f"unknown directive {kw!r}", no)

    if len(header) < 3:
        raise GraphFormatError("missing header (graph / vertices / alphabet)")
    (no1, f1), (no2, f2), (no3, f3) = header
    if f1[0] != "graph" or len(f1) != 2 or f1[1] not in ("directed", "undirected"):
        err("expected 'graph directed' or 'graph undirected'", no1)
    directed = f1[1] == "directed"
    if f2[0] != "vertices" or len(f2) != 2:
        err("expected 'vertices <N>'", no2)
    vertex_count = int(f2[1])
    if vertex_count < 0:
        err("vertex count must be non-negative", no2)
    if f3[0] != "alphabet" or len(f3) != 3 or f3[1] not in ("dyck", "neardyck"):
        err("expected 'alphabet dyck <n>' or 'alphabet neardyck <N>'", no3)
    alphabet = Alphabet(f3[1], int(f3[2]))

    if mark is None:
        raise GraphFormatError("missing mark line")

    canon = []
    for no, e in edges:
        u, lab, v = e
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            err(f"vertex out of range in edge ({u}, {lab.token()}, {v})", no)
        if not alphabet.contains(lab):
            err(f"unknown label token {lab.token()!r} for this alphabet", no)
        canon.append(e)

    partition = None
    if partition_and is not None:
        no, ands = partition_and
        if any(not 0 <= a < vertex_count for a in ands):
            err("partition vertex out of range", no)
        if len(set(ands)) != len(ands):
            err("repeated vertex in partition", no)
        partition = tuple("and" if i in set(ands) else "or"
                          for i in range(vertex_count))

    graph = LabeledGraph.build(directed, vertex_count, alphabet, canon)
    return Instance(graph, mark[0], mark[1], partition)


def serialize_graph(inst: Instance) -> str:
    g = inst.graph
    out = [f"graph {'directed' if g.directed else 'undirected'}",
           f"vertices {g.vertex_count}",
           f"alphabet {g.alphabet.kind} {g.alphabet.size}"]
    for u, lab, v in sorted(g.edges):
        out.append(f"edge {u} {lab.token()} {v}")
    out.append(f"mark {inst.source} {inst.sink}")
    if inst.partition is not None:
        ands = [str(i) for i, p in enumerate(inst.partition) if p == "and"]
        out.append("partition and " + " ".join(ands))
    return "\n".join(out) + "\n"


def parse_updates(text: str) -> list[UpdateOp]:
    """Parse an update script: ``ins u <label> v``, ``del u <label> v``,
    ``query`` lines."""
    ops = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "query":
            if len(fields) != 1:
                raise GraphFormatError("query takes no arguments", no)
            ops.append(UpdateOp.query())
        elif fields[0] in ("ins", "del"):
            if len(fields) != 4:
                raise GraphFormatError(f"expected '{fields[0]} <u> <label> <v>'", no)
            try:
                u, v = int(fields[1]), int(fields[3])
                lab = parse_label_token(fields[2])
            except ValueError as exc:
                raise GraphFormatError(str(exc), no)
            ops.append(UpdateOp(fields[0], u, lab, v))
        else:
            raise GraphFormatError(f"unknown update {fields[0]!r}", no)
    return ops


def serialize_updates(ops: Iterable[UpdateOp]) -> str:
    out = []
    for op in ops:
        if op.op == "query":
            out.append("query")
        else:
            out.append(f"{op.op} {op.u} {op.label.token()} {op.v}")
    return "\n".join(out) + ("\n" if out else "")

"""Breakpoint trees for TD evolutions: construction, order diagrams, validation.

Every tandem duplication ``n`` leaves two breakpoints on the reference
genome: ``n_a`` (duplication start) and ``n_b`` (duplication end).  Each
breakpoint lands inside one genome segment ``[u_a, v_b]`` bounded by the
connections written next to it in the word, and inherits two parental
edges: a type-a edge from ``u_a`` and a type-b edge from ``v_b``.  The
edge from the parent with the larger TD number is *major*, the other
*minor*; a TD whose two breakpoints share a segment ties them with a
*fence*.  The first TD is the one ambiguous case and follows a fixed
convention (``1_a`` major from ``0_b``, ``1_b`` major from ``0_a``).

The resulting double tree orders the breakpoints along the reference:
keeping type-a edges, reversing type-b edges and directing fences
``n_a -> n_b`` yields an acyclic diagram whose linear extensions are
exactly the admissible reference layouts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import CycleDetectedError, MalformedGraphError, ValidationError
from .words import Word, WordEvolution

A_SIDE = "a"
B_SIDE = "b"


class BreakpointId(NamedTuple):
    """A breakpoint: which TD laid it down and which end it is."""

    td: int
    side: str

    def __str__(self) -> str:
        return f"{self.td}{self.side}"


ROOT_A = BreakpointId(0, A_SIDE)
ROOT_B = BreakpointId(0, B_SIDE)


def parse_breakpoint(text: str) -> BreakpointId:
    text = text.strip()
    if len(text) < 2 or text[-1] not in (A_SIDE, B_SIDE) or not text[:-1].isdigit():
        raise ValidationError(f"bad breakpoint id {text!r}")
    return BreakpointId(int(text[:-1]), text[-1])


@dataclass
class TdTree:
    """Double tree of breakpoints for one word evolution.

    ``a_parent``/``b_parent`` give the two parental edges of every
    non-root node; ``major_side`` says which of the two is major.
    ``fence_tds`` lists the TDs whose breakpoint pair is fenced, and
    ``segments`` records every segment ``(u_a, v_b)`` that arose while
    replaying the evolution (used by the structural validators).
    """

    n: int
    a_parent: dict[BreakpointId, BreakpointId]
    b_parent: dict[BreakpointId, BreakpointId]
    major_side: dict[BreakpointId, str]
    fence_tds: frozenset[int]
    segments: frozenset[tuple[BreakpointId, BreakpointId]]

    @property
    def nodes(self) -> tuple[BreakpointId, ...]:
        out = [ROOT_A, ROOT_B]
        for k in range(1, self.n + 1):
            out.append(BreakpointId(k, A_SIDE))
            out.append(BreakpointId(k, B_SIDE))
        return tuple(out)

    @property
    def fences(self) -> frozenset[tuple[BreakpointId, BreakpointId]]:
        return frozenset(
            (BreakpointId(k, A_SIDE), BreakpointId(k, B_SIDE)) for k in self.fence_tds
        )

    def parent(self, node: BreakpointId, side: str) -> BreakpointId:
        return self.a_parent[node] if side == A_SIDE else self.b_parent[node]

    def major_parent(self, node: BreakpointId) -> BreakpointId:
        return self.parent(node, self.major_side[node])

    def minor_parent(self, node: BreakpointId) -> BreakpointId:
        other = B_SIDE if self.major_side[node] == A_SIDE else A_SIDE
        return self.parent(node, other)


def word_segments(word: Word) -> list[tuple[BreakpointId, BreakpointId]]:
    """Genome segments of a word: ``s_i = [(c_i)_a, (c_{i+1})_b]`` with 0 flanks."""
    bounded = (0,) + tuple(word) + (0,)
    return [
        (BreakpointId(bounded[i], A_SIDE), BreakpointId(bounded[i + 1], B_SIDE))
        for i in range(len(bounded) - 1)
    ]


def build_2d_tree(ev: WordEvolution) -> TdTree:
    """Construct the breakpoint double tree of a word evolution."""
    a_parent: dict[BreakpointId, BreakpointId] = {}
    b_parent: dict[BreakpointId, BreakpointId] = {}
    major_side: dict[BreakpointId, str] = {}
    fence_tds = {1}
    segments: set[tuple[BreakpointId, BreakpointId]] = {(ROOT_A, ROOT_B)}

    # First TD: both breakpoints on the initial interval; fixed convention.
    one_a, one_b = BreakpointId(1, A_SIDE), BreakpointId(1, B_SIDE)
    a_parent[one_a] = ROOT_A
    b_parent[one_a] = ROOT_B
    major_side[one_a] = B_SIDE
    a_parent[one_b] = ROOT_A
    b_parent[one_b] = ROOT_B
    major_side[one_b] = A_SIDE

    def attach(node: BreakpointId, seg: tuple[BreakpointId, BreakpointId]) -> None:
        left, right = seg
        if left.td == right.td:
            raise ValidationError(f"segment {left}..{right} has equal endpoint TDs")
        a_parent[node] = left
        b_parent[node] = right
        major_side[node] = A_SIDE if left.td > right.td else B_SIDE

    for i, (a, b) in enumerate(ev.steps):
        td = i + 2
        segs = word_segments(ev.words[i])
        segments.update(segs)
        attach(BreakpointId(td, A_SIDE), segs[a - 1])
        attach(BreakpointId(td, B_SIDE), segs[b])
        if b == a - 1:
            fence_tds.add(td)
    segments.update(word_segments(ev.words[-1]))

    return TdTree(
        n=ev.n,
        a_parent=a_parent,
        b_parent=b_parent,
        major_side=major_side,
        fence_tds=frozenset(fence_tds),
        segments=frozenset(segments),
    )


@dataclass
class HasseDiagram:
    """Directed acyclic diagram of the reference order of breakpoints."""

    nodes: tuple[BreakpointId, ...]
    edges: frozenset[tuple[BreakpointId, BreakpointId]]

    def successors(self) -> dict[BreakpointId, list[BreakpointId]]:
        out: dict[BreakpointId, list[BreakpointId]] = {v: [] for v in self.nodes}
        for u, v in self.edges:
            out[u].append(v)
        return out

    def predecessors(self) -> dict[BreakpointId, list[BreakpointId]]:
        out: dict[BreakpointId, list[BreakpointId]] = {v: [] for v in self.nodes}
        for u, v in self.edges:
            out[v].append(u)
        return out


def hasse_diagram(tree: TdTree) -> HasseDiagram:
    """Order diagram: type-a edges kept, type-b edges reversed, fences a -> b.

    Raises :class:`CycleDetectedError` if the result is not acyclic
    (impossible for trees built by :func:`build_2d_tree`, but the check
    guards hand-made or corrupted inputs).
    """
    edges: set[tuple[BreakpointId, BreakpointId]] = set()
    for node, parent in tree.a_parent.items():
        edges.add((parent, node))
    for node, parent in tree.b_parent.items():
        edges.add((node, parent))
    for k in tree.fence_tds:
        edges.add((BreakpointId(k, A_SIDE), BreakpointId(k, B_SIDE)))
    diagram = HasseDiagram(nodes=tree.nodes, edges=frozenset(edges))
    if _topological_order(diagram) is None:
        raise CycleDetectedError("order diagram contains a directed cycle")
    return diagram


def _topological_order(diagram: HasseDiagram) -> list[BreakpointId] | None:
    indeg = {v: 0 for v in diagram.nodes}
    succ = diagram.successors()
    for u, v in diagram.edges:
        indeg[v] += 1
    frontier = sorted(v for v, d in indeg.items() if d == 0)
    order = []
    while frontier:
        v = frontier.pop()
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                frontier.append(w)
    return order if len(order) == len(diagram.nodes) else None


def reachability(diagram: HasseDiagram) -> dict[BreakpointId, set[BreakpointId]]:
    """Transitive closure: node -> set of nodes strictly above it."""
    order = _topological_order(diagram)
    if order is None:
        raise CycleDetectedError("order diagram contains a directed cycle")
    succ = diagram.successors()
    above: dict[BreakpointId, set[BreakpointId]] = {v: set() for v in diagram.nodes}
    for v in reversed(order):
        for w in succ[v]:
            above[v].add(w)
            above[v] |= above[w]
    return above


@dataclass
class MajorGraph:
    """Major parental edges plus fences; the input to the counting formula.

    ``parent`` maps each non-root node to its single major parent.  Fences
    are unordered pairs stored as sorted tuples.
    """

    nodes: tuple[BreakpointId, ...]
    parent: dict[BreakpointId, BreakpointId]
    fences: frozenset[tuple[BreakpointId, BreakpointId]]

    def edges(self) -> frozenset[tuple[BreakpointId, BreakpointId]]:
        return frozenset((p, c) for c, p in self.parent.items())

    def children(self) -> dict[BreakpointId, list[BreakpointId]]:
        out: dict[BreakpointId, list[BreakpointId]] = {v: [] for v in self.nodes}
        for c, p in self.parent.items():
            out[p].append(c)
        for p in out:
            out[p].sort()
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MajorGraph):
            return NotImplemented
        return (
            set(self.nodes) == set(other.nodes)
            and self.parent == other.parent
            and self.fences == other.fences
        )


def normalize_fence(pair: Iterable[BreakpointId]) -> tuple[BreakpointId, BreakpointId]:
    x, y = sorted(pair)
    return (x, y)


def major_graph(tree: TdTree) -> MajorGraph:
    """Restrict a breakpoint tree to its major edges and fences."""
    parent = {node: tree.major_parent(node) for node in tree.major_side}
    fences = frozenset(normalize_fence(pair) for pair in tree.fences)
    return MajorGraph(nodes=tree.nodes, parent=parent, fences=fences)


# ---------------------------------------------------------------------------
# Structural validation


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: str = ""


@dataclass
class StructureReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, details: str = "") -> None:
        self.checks.append(CheckResult(name, passed, details))


def _major_ancestry(tree: TdTree, node: BreakpointId) -> Iterator[BreakpointId]:
    """Major parent, grandparent, ... ending at a root (cycle-safe)."""
    seen = set()
    cur = node
    while cur in tree.major_side:
        cur = tree.major_parent(cur)
        if cur in seen:  # corrupted trees can loop
            return
        seen.add(cur)
        yield cur


def validate_structure(tree: TdTree) -> StructureReport:
    """Run every structural invariant check and aggregate a report.

    Checks cover: parental-edge completeness and typing, acyclicity with a
    unique source/sink, the two-tree shape of the major subgraph, the
    recency rule for minor parents, the forced a-ascending/b-descending
    order along major chains, and segment connectivity (each segment's
    endpoints joined by a major edge, or by a minor edge plus a
    single-type major chain).
    """
    report = StructureReport()
    non_roots = [v for v in tree.nodes if v.td != 0]

    # Parental edges: both present, correctly typed.
    ok = True
    details = ""
    for v in non_roots:
        if v not in tree.a_parent or v not in tree.b_parent or v not in tree.major_side:
            ok, details = False, f"{v} missing parental data"
            break
        if tree.a_parent[v].side != A_SIDE or tree.b_parent[v].side != B_SIDE:
            ok, details = False, f"{v} has mistyped parental edges"
            break
    report.add("parental-edges", ok, details)
    if not ok:
        return report

    # First-TD convention.
    one_a, one_b = BreakpointId(1, A_SIDE), BreakpointId(1, B_SIDE)
    ok = (
        tree.major_side.get(one_a) == B_SIDE
        and tree.major_side.get(one_b) == A_SIDE
        and tree.a_parent.get(one_a) == ROOT_A
        and tree.b_parent.get(one_b) == ROOT_B
        and 1 in tree.fence_tds
    )
    report.add("first-td-convention", ok, "" if ok else "TD 1 breaks the root convention")

    # Order diagram: acyclic, source 0a, sink 0b.
    try:
        diagram = hasse_diagram(tree)
    except CycleDetectedError as exc:
        report.add("order-diagram", False, str(exc))
        return report
    preds = diagram.predecessors()
    succs = diagram.successors()
    sources = [v for v in diagram.nodes if not preds[v]]
    sinks = [v for v in diagram.nodes if not succs[v]]
    ok = sources == [ROOT_A] and sinks == [ROOT_B]
    report.add(
        "order-diagram",
        ok,
        "" if ok else f"sources={sources} sinks={sinks}",
    )

    # Major subgraph: two trees rooted at the two roots.
    ok, details = True, ""
    comp: dict[BreakpointId, BreakpointId] = {ROOT_A: ROOT_A, ROOT_B: ROOT_B}
    for v in non_roots:
        chain = [v]
        root = None
        for anc in _major_ancestry(tree, v):
            if anc.td == 0:
                root = anc
                break
            chain.append(anc)
        if root is None:
            ok, details = False, f"major ancestry of {v} does not reach a root"
            break
        comp[v] = root
    report.add("major-two-trees", ok, details)

    # Minor parent = most recent major ancestor of the opposite type
    # (first TD excepted: its ancestry is roots-only and fixed by convention).
    ok, details = True, ""
    for v in non_roots:
        if v.td == 1:
            continue
        major = tree.major_parent(v)
        want_side = B_SIDE if major.side == A_SIDE else A_SIDE
        expected = None
        for anc in _major_ancestry(tree, v):
            if anc.side == want_side:
                expected = anc
                break
        if expected is None or tree.minor_parent(v) != expected:
            ok = False
            details = f"{v}: minor parent {tree.minor_parent(v)}, expected {expected}"
            break
    report.add("minor-recency", ok, details)

    # Along any maximal major chain, a-nodes ascend and b-nodes descend:
    # the chain nodes admit exactly one relative order, which must not
    # contradict the order diagram.
    ok, details = True, ""
    try:
        above = reachability(diagram)
    except CycleDetectedError as exc:
        above = None
        ok, details = False, str(exc)
    if above is not None:
        children: dict[BreakpointId, list[BreakpointId]] = {v: [] for v in tree.nodes}
        for v in non_roots:
            children[tree.major_parent(v)].append(v)
        leaves = [v for v in tree.nodes if not children[v]]
        for leaf in leaves:
            chain = [leaf] + list(_major_ancestry(tree, leaf))
            chain.reverse()  # root first
            a_nodes = [v for v in chain if v.side == A_SIDE]
            b_nodes = [v for v in chain if v.side == B_SIDE]
            predicted = a_nodes + b_nodes[::-1]
            for u, v in zip(predicted, predicted[1:]):
                if u in above[v]:
                    ok = False
                    details = f"chain to {leaf}: {v} < {u} contradicts predicted order"
                    break
            if not ok:
                break
    report.add("chain-order", ok, details)

    # Segment connectivity.
    ok, details = True, ""
    for left, right in sorted(tree.segments):
        if left == ROOT_A and right == ROOT_B:
            continue
        lo, hi = (left, right) if left.td < right.td else (right, left)
        walk = [hi]
        reached = False
        for anc in _major_ancestry(tree, hi):
            walk.append(anc)
            if anc == lo:
                reached = True
                break
        if not reached:
            ok, details = False, f"segment {left}..{right}: no major chain {lo} to {hi}"
            break
        internal = walk[1:-1]
        if any(v.side != hi.side for v in internal):
            ok, details = False, f"segment {left}..{right}: mixed-type chain"
            break
        tds = [v.td for v in walk]
        if any(x <= y for x, y in zip(tds, tds[1:])):
            ok, details = False, f"segment {left}..{right}: chain not ascending"
            break
        if internal and tree.minor_parent(hi) != lo:
            ok, details = False, f"segment {left}..{right}: minor edge missing"
            break
    report.add("segment-connectivity", ok, details)

    # Fenced pairs share both parents (and the major side, beyond TD 1).
    ok, details = True, ""
    for k in sorted(tree.fence_tds):
        ka, kb = BreakpointId(k, A_SIDE), BreakpointId(k, B_SIDE)
        if tree.a_parent.get(ka) != tree.a_parent.get(kb) or tree.b_parent.get(
            ka
        ) != tree.b_parent.get(kb):
            ok, details = False, f"fence {k}: breakpoints on different segments"
            break
        if k > 1 and tree.major_side.get(ka) != tree.major_side.get(kb):
            ok, details = False, f"fence {k}: major sides differ"
            break
    report.add("fence-pairs", ok, details)

    # Fenced TDs are forced reversed (start before end in every extension).
    if above is not None:
        ok, details = True, ""
        for k in sorted(tree.fence_tds):
            ka, kb = BreakpointId(k, A_SIDE), BreakpointId(k, B_SIDE)
            if kb not in above[ka]:
                ok, details = False, f"fenced TD {k} not forced reversed"
                break
        report.add("fence-orientation", ok, details)

    return report


def td_orientations(tree: TdTree) -> dict[int, str]:
    """Classify each TD from the order diagram alone.

    ``reversed`` / ``forward`` when the diagram forces the breakpoint
    order (it always does for fences); ``ambiguous`` when both reference
    layouts are realizable, in which case the orientation is a property
    of the individual realization, not of the evolution.
    """
    above = reachability(hasse_diagram(tree))
    out = {}
    for k in range(1, tree.n + 1):
        ka, kb = BreakpointId(k, A_SIDE), BreakpointId(k, B_SIDE)
        if kb in above[ka]:
            out[k] = "reversed"
        elif ka in above[kb]:
            out[k] = "forward"
        else:
            out[k] = "ambiguous"
    return out


# ---------------------------------------------------------------------------
# Serialization

_NODE_STYLE = {
    A_SIDE: 'shape=box, color=red',
    B_SIDE: 'shape=ellipse, color=blue',
}


def _dot_nodes(nodes: Iterable[BreakpointId]) -> list[str]:
    return [f'  "{v}" [{_NODE_STYLE[v.side]}];' for v in sorted(nodes)]


def tree_to_dot(tree: TdTree, name: str = "td_tree") -> str:
    """Graphviz form: boxes/red for a, ellipses/blue for b, solid major
    edges, dashed minor edges, bold black fences."""
    lines = [f"digraph {name} {{"]
    lines += _dot_nodes(tree.nodes)
    for v in sorted(tree.major_side):
        for side, parent_of in ((A_SIDE, tree.a_parent), (B_SIDE, tree.b_parent)):
            style = "solid" if tree.major_side[v] == side else "dashed"
            color = "red" if side == A_SIDE else "blue"
            lines.append(f'  "{parent_of[v]}" -> "{v}" [style={style}, color={color}];')
    for x, y in sorted(tree.fences):
        lines.append(f'  "{x}" -> "{y}" [style=bold, color=black, dir=none];')
    lines.append("}")
    return "\n".join(lines)


def hasse_to_dot(diagram: HasseDiagram, name: str = "order_diagram") -> str:
    lines = [f"digraph {name} {{"]
    lines += _dot_nodes(diagram.nodes)
    for u, v in sorted(diagram.edges):
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines)


def major_to_dot(graph: MajorGraph, name: str = "major_graph") -> str:
    lines = [f"digraph {name} {{"]
    lines += _dot_nodes(graph.nodes)
    for child in sorted(graph.parent):
        lines.append(f'  "{graph.parent[child]}" -> "{child}" [style=solid];')
    for x, y in sorted(graph.fences):
        lines.append(f'  "{x}" -> "{y}" [style=bold, color=black, dir=none];')
    lines.append("}")
    return "\n".join(lines)


def tree_to_json(tree: TdTree) -> str:
    doc = {
        "n": tree.n,
        "nodes": [str(v) for v in tree.nodes],
        "parents": {
            str(v): {
                "a": str(tree.a_parent[v]),
                "b": str(tree.b_parent[v]),
                "major": tree.major_side[v],
            }
            for v in sorted(tree.major_side)
        },
        "fences": sorted(tree.fence_tds),
    }
    return json.dumps(doc, indent=2)


def major_to_json(graph: MajorGraph) -> str:
    doc = {
        "nodes": [str(v) for v in sorted(graph.nodes)],
        "edges": [[str(p), str(c)] for p, c in sorted(graph.edges())],
        "fences": [[str(x), str(y)] for x, y in sorted(graph.fences)],
    }
    return json.dumps(doc, indent=2)


def hasse_to_json(diagram: HasseDiagram) -> str:
    doc = {
        "nodes": [str(v) for v in sorted(diagram.nodes)],
        "edges": [[str(u), str(v)] for u, v in sorted(diagram.edges)],
    }
    return json.dumps(doc, indent=2)

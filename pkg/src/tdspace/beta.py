"""Deletion calculus on word evolutions and the two-tree kernel identity.

Deleting the first TD from an evolution (drop every copy of symbol 1,
shift the rest down) always leaves a valid shorter evolution, and the
longer evolution is recoverable from two pieces of data: the shorter
evolution plus the set of connections whose symbols ever sat next to a
1 — the *one-nodeset*.  Rewriting the shorter evolution's breakpoint
tree by that nodeset reproduces the longer evolution's major graph
without ever replaying it, which turns the count of all evolutions into
a recurrence and, from there, a closed product formula.

The rewrite machinery generalizes from breakpoint trees to
free-standing two-trees ("beta trees"), where the load-bearing step is
a kernel identity: summed over admissible node subsets whose rewritten
graph hangs a fixed number of nodes under the first root, the extension
products all equal the count of the root-contracted rewrite of the
empty subset.  That identity is checked here directly, by enumeration.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    BudgetExceededError,
    NotInducedError,
    ParseError,
    ValidationError,
)
from .extensions import ExtensionCount, _forest_count, count_extensions_formula
from .structure import (
    A_SIDE,
    B_SIDE,
    ROOT_A,
    ROOT_B,
    BreakpointId,
    CheckResult,
    MajorGraph,
    StructureReport,
    TdTree,
    _dot_nodes,
    build_2d_tree,
    major_graph,
    normalize_fence,
    parse_breakpoint,
)
from .words import (
    DEFAULT_MAX_N,
    DupChoice,
    Word,
    WordEvolution,
    _evolution_unchecked,
    choices_for,
    enumerate_word_evolutions,
    td_step,
)

SUBTREE_NODE_BUDGET = 20

#: A one-nodeset or beta-subtree is just a set of breakpoint nodes.
NodeSet = frozenset[BreakpointId]

_ONE_A = BreakpointId(1, A_SIDE)
_ONE_B = BreakpointId(1, B_SIDE)


# ---------------------------------------------------------------------------
# Deletion and induction on word evolutions


def _strip_first_symbol(word: Word) -> Word:
    return tuple(c - 1 for c in word if c != 1)


def delete_first_td(ev: WordEvolution) -> WordEvolution:
    """Remove TD 1 from an evolution and renumber the rest down by one.

    Drops the first word, strips every 1 from the remaining words and
    lowers the surviving symbols; the result is itself a valid evolution
    (its steps are re-derived from the surgered words and replayed as a
    consistency check).
    """
    if ev.n < 2:
        raise ValidationError("need at least two TDs to delete the first one")
    shifted = [_strip_first_symbol(w) for w in ev.words[1:]]
    steps = []
    for j in range(1, len(shifted)):
        before, after = shifted[j - 1], shifted[j]
        symbol = j + 1
        try:
            p = after.index(symbol) + 1
        except ValueError:
            raise ValidationError(f"symbol {symbol} missing after deletion") from None
        dup_len = len(after) - len(before) - 1
        steps.append(DupChoice(p - dup_len, p - 1))
    out = WordEvolution(steps=tuple(steps))
    if out.words != tuple(shifted):
        raise ValidationError("deletion surgery produced an inconsistent evolution")
    return out


def induced_evolutions(ev: WordEvolution, max_n: int = DEFAULT_MAX_N) -> list[WordEvolution]:
    """All one-TD-longer evolutions whose first-TD deletion gives ``ev``.

    Search runs over the duplication automaton directly: a candidate
    step is kept whenever the word it produces strips back to the
    corresponding word of ``ev``.  Results come in lexicographic step
    order; the fibers of :func:`delete_first_td` partition the next
    level, so every longer evolution shows up for exactly one ``ev``.
    """
    target_n = ev.n + 1
    if target_n > max_n:
        raise BudgetExceededError(f"inducing {target_n} TDs exceeds the budget of {max_n}")
    targets = ev.words
    results: list[WordEvolution] = []
    steps: list[DupChoice] = []
    words: list[Word] = [(1,)]

    def walk(depth: int) -> None:
        if depth == target_n:
            results.append(_evolution_unchecked(tuple(steps), tuple(words)))
            return
        target = targets[depth - 1]
        current = words[-1]
        for choice in choices_for(current):
            grown = td_step(current, choice, depth + 1)
            if _strip_first_symbol(grown) == target:
                steps.append(choice)
                words.append(grown)
                walk(depth + 1)
                words.pop()
                steps.pop()

    walk(1)
    return results


def one_nodeset_of(ev: WordEvolution, induced: WordEvolution) -> NodeSet:
    """The breakpoints of ``ev``'s tree that TD 1 of ``induced`` touches.

    Labels follow the longer evolution: node 1 stands for the roots of
    ``ev``'s tree and node ``m`` for its TD ``m - 1``.  Both breakpoints
    of 1 are always members; scanning every word of ``induced``, a
    symbol ``m`` directly after a 1 contributes ``m_b`` and one directly
    before a 1 contributes ``m_a``.
    """
    if ev.n + 1 != induced.n or delete_first_td(induced).words != ev.words:
        raise NotInducedError("the second evolution does not reduce to the first")
    members = {_ONE_A, _ONE_B}
    for word in induced.words[1:]:
        for i, symbol in enumerate(word):
            if symbol != 1:
                continue
            if i > 0 and word[i - 1] != 1:
                members.add(BreakpointId(word[i - 1], A_SIDE))
            if i + 1 < len(word) and word[i + 1] != 1:
                members.add(BreakpointId(word[i + 1], B_SIDE))
    return frozenset(members)


def induced_major_graph(tree: TdTree, nodeset: Iterable[BreakpointId]) -> MajorGraph:
    """Rewrite a breakpoint tree's major graph for one inserted first TD.

    ``nodeset`` uses the shifted labels of :func:`one_nodeset_of`.  All
    TD numbers move up by one and the old roots become the new TD 1 with
    sides swapped and a fence between them.  Every other node re-selects
    one parental edge: members take their same-type parent, non-members
    with both parents in the set take the opposite-type parent, and the
    rest keep their major edge.  An old fence survives unless both of
    its breakpoints are members.
    """
    members = frozenset(nodeset)
    if not members >= {_ONE_A, _ONE_B}:
        raise ValidationError("a one-nodeset always contains both breakpoints of 1")
    if any(bp.td < 1 or bp.td > tree.n + 1 for bp in members):
        raise ValidationError(f"nodeset labels outside 1..{tree.n + 1}")

    def shift(bp: BreakpointId) -> BreakpointId:
        if bp == ROOT_A:
            return _ONE_B
        if bp == ROOT_B:
            return _ONE_A
        return BreakpointId(bp.td + 1, bp.side)

    parent = {_ONE_A: ROOT_B, _ONE_B: ROOT_A}
    for old in tree.major_side:
        node = shift(old)
        pa, pb = shift(tree.a_parent[old]), shift(tree.b_parent[old])
        if node in members:
            selected = pa if node.side == A_SIDE else pb
        elif pa in members and pb in members:
            selected = pb if node.side == A_SIDE else pa
        else:
            selected = shift(tree.major_parent(old))
        parent[node] = selected

    fences = {normalize_fence((_ONE_A, _ONE_B))}
    for k in tree.fence_tds:
        pair = (BreakpointId(k + 1, A_SIDE), BreakpointId(k + 1, B_SIDE))
        if not (pair[0] in members and pair[1] in members):
            fences.add(pair)

    nodes = [ROOT_A, ROOT_B]
    for k in range(1, tree.n + 2):
        nodes.append(BreakpointId(k, A_SIDE))
        nodes.append(BreakpointId(k, B_SIDE))
    return MajorGraph(nodes=tuple(nodes), parent=parent, fences=frozenset(fences))


# ---------------------------------------------------------------------------
# Beta trees


@dataclass
class BetaTree:
    """A free-standing double tree: two typed roots, two parental edges
    per node with a major designation, and fences between opposite-type
    nodes that share both parents.

    Unlike breakpoint trees of evolutions, nodes need not come in a/b
    pairs and the node count can be odd.  ``BreakpointId`` doubles as
    the node handle; its ``td`` field is just an id here.

    Validity requires the minor parent of each node to be the *nearest*
    opposite-type node above the major parent, exactly as in breakpoint
    trees.  Merely requiring the two parents to be comparable is not
    enough: a five-node chain with one minor edge skipping past a nearer
    ancestor already breaks the subtree counting identity.
    """

    a_parent: dict[BreakpointId, BreakpointId]
    b_parent: dict[BreakpointId, BreakpointId]
    major_side: dict[BreakpointId, str]
    fences: frozenset[tuple[BreakpointId, BreakpointId]]

    @property
    def nodes(self) -> tuple[BreakpointId, ...]:
        return (ROOT_A, ROOT_B) + tuple(sorted(self.major_side))

    def major_parent(self, node: BreakpointId) -> BreakpointId:
        side = self.major_side[node]
        return self.a_parent[node] if side == A_SIDE else self.b_parent[node]


def beta_from_td_tree(tree: TdTree) -> BetaTree:
    """Lossless view of a breakpoint tree as a beta tree."""
    return BetaTree(
        a_parent=dict(tree.a_parent),
        b_parent=dict(tree.b_parent),
        major_side=dict(tree.major_side),
        fences=frozenset(normalize_fence(pair) for pair in tree.fences),
    )


def _major_ancestors(tree: BetaTree, node: BreakpointId) -> list[BreakpointId]:
    chain = [node]
    seen = {node}
    while node in tree.major_side:
        node = tree.major_parent(node)
        if node in seen:
            return chain  # cycle; validation reports it separately
        seen.add(node)
        chain.append(node)
    return chain


def _recent_minor(tree: BetaTree, major: BreakpointId) -> BreakpointId | None:
    """First opposite-type node on the major chain above ``major``."""
    for anc in _major_ancestors(tree, major)[1:]:
        if anc.side != major.side:
            return anc
    return None


def validate_beta_tree(tree: BetaTree) -> StructureReport:
    """Check the double-tree axioms; returns a named pass/fail report."""
    report = StructureReport()
    nodes = set(tree.major_side)

    ok, details = True, ""
    for v in nodes:
        pa, pb = tree.a_parent.get(v), tree.b_parent.get(v)
        if pa is None or pb is None:
            ok, details = False, f"{v} is missing a parental edge"
            break
        if pa.side != A_SIDE or pb.side != B_SIDE:
            ok, details = False, f"{v} has mistyped parents {pa}, {pb}"
            break
        if (pa not in nodes and pa != ROOT_A) or (pb not in nodes and pb != ROOT_B):
            ok, details = False, f"{v} has parents outside the tree"
            break
    report.add("parental-edges", ok, details)
    if not ok:
        return report

    ok, details = True, ""
    for v in nodes:
        chain = _major_ancestors(tree, v)
        if chain[-1] not in (ROOT_A, ROOT_B):
            ok, details = False, f"major chain from {v} does not reach a root"
            break
    report.add("rooted-majors", ok, details)
    if not ok:
        return report

    # Parent pairs must be the two roots or comparable along major edges.
    ok, details = True, ""
    for v in sorted(nodes):
        pa, pb = tree.a_parent[v], tree.b_parent[v]
        if (pa, pb) == (ROOT_A, ROOT_B):
            continue
        if pb not in _major_ancestors(tree, pa) and pa not in _major_ancestors(tree, pb):
            ok, details = False, f"parents of {v} are incomparable"
            break
    report.add("comparable-parents", ok, details)
    if not ok:
        return report

    # The declared major must be the deeper parent and the minor the
    # nearest opposite-type node above it, as in breakpoint trees.
    ok, details = True, ""
    for v in sorted(nodes):
        pa, pb = tree.a_parent[v], tree.b_parent[v]
        if (pa, pb) == (ROOT_A, ROOT_B):
            continue
        major = tree.major_parent(v)
        minor = pb if major is pa else pa
        if _recent_minor(tree, major) != minor:
            ok, details = False, f"minor parent of {v} is not the nearest ancestor"
            break
    report.add("minor-recency", ok, details)

    ok, details = True, ""
    fenced: set[BreakpointId] = set()
    for x, y in sorted(tree.fences):
        if x in fenced or y in fenced:
            ok, details = False, f"{x} or {y} sits in two fences"
            break
        fenced.update((x, y))
        if {x.side, y.side} != {A_SIDE, B_SIDE}:
            ok, details = False, f"fence {x}|{y} joins same-type nodes"
            break
        if {x, y} == {ROOT_A, ROOT_B}:
            continue
        if x not in nodes or y not in nodes:
            ok, details = False, f"fence {x}|{y} references missing nodes"
            break
        if (
            tree.a_parent[x] != tree.a_parent[y]
            or tree.b_parent[x] != tree.b_parent[y]
        ):
            ok, details = False, f"fence {x}|{y} does not share both parents"
            break
        root_pair = (tree.a_parent[x], tree.b_parent[x]) == (ROOT_A, ROOT_B)
        if not root_pair and tree.major_side[x] != tree.major_side[y]:
            ok, details = False, f"fence {x}|{y} mixes major sides"
            break
    report.add("fences", ok, details)
    return report


# ---------------------------------------------------------------------------
# Beta subtrees and the induced rewrite


def _closure_order(tree: BetaTree) -> list[BreakpointId]:
    """Nodes ordered so both parents precede every node."""
    remaining = set(tree.major_side)
    placed = {ROOT_A, ROOT_B}
    order: list[BreakpointId] = []
    while remaining:
        layer = sorted(
            v
            for v in remaining
            if tree.a_parent[v] in placed and tree.b_parent[v] in placed
        )
        if not layer:
            raise ValidationError("parental edges contain a cycle")
        for v in layer:
            order.append(v)
            placed.add(v)
            remaining.remove(v)
    return order


def validate_beta_subtree(tree: BetaTree, tau: Iterable[BreakpointId]) -> None:
    """Raise unless ``tau`` satisfies the subtree closure rules."""
    chosen = frozenset(tau)
    if not chosen >= {ROOT_A, ROOT_B}:
        raise ValidationError("both roots belong to every beta subtree")
    for v in chosen:
        if v.td == 0:
            continue
        if v not in tree.major_side:
            raise ValidationError(f"{v} is not a node of the tree")
        if tree.a_parent[v] not in chosen or tree.b_parent[v] not in chosen:
            raise ValidationError(f"{v} is in the subtree but a parent is not")
    for x, y in tree.fences:
        if {x, y} == {ROOT_A, ROOT_B}:
            continue
        if (
            tree.a_parent[x] in chosen
            and tree.b_parent[x] in chosen
            and x not in chosen
            and y not in chosen
        ):
            raise ValidationError(f"fence {x}|{y} has both parents chosen but no member")


def enumerate_beta_subtrees(
    tree: BetaTree, budget: int = SUBTREE_NODE_BUDGET
) -> list[NodeSet]:
    """Every admissible node subset, by top-down include/exclude search.

    A node can only join once both parents have; a fence whose shared
    parents are both chosen forces at least one of its two nodes in.
    """
    if len(tree.nodes) > budget:
        raise BudgetExceededError(
            f"{len(tree.nodes)} nodes exceed the subtree budget of {budget}"
        )
    order = _closure_order(tree)
    fences = [f for f in tree.fences if {f[0], f[1]} != {ROOT_A, ROOT_B}]
    results: list[NodeSet] = []
    chosen: set[BreakpointId] = {ROOT_A, ROOT_B}

    def admissible() -> bool:
        return all(
            not (
                tree.a_parent[x] in chosen
                and tree.b_parent[x] in chosen
                and x not in chosen
                and y not in chosen
            )
            for x, y in fences
        )

    def walk(i: int) -> None:
        if i == len(order):
            if admissible():
                results.append(frozenset(chosen))
            return
        v = order[i]
        walk(i + 1)
        if tree.a_parent[v] in chosen and tree.b_parent[v] in chosen:
            chosen.add(v)
            walk(i + 1)
            chosen.remove(v)

    walk(0)
    return results


def induced_tree(tree: BetaTree, tau: Iterable[BreakpointId]) -> MajorGraph:
    """Edge reselection for a node subset, without the first-TD dressing.

    Same rules as :func:`induced_major_graph` — members take same-type
    parents, non-members under two chosen parents flip to the opposite
    type, everyone else keeps the major edge, and a fence survives
    unless both its nodes are chosen — but labels stay put and no root
    fence is added.  (``tau`` here only needs the closure part of
    admissibility; the fence rule is what keeps the *counts* of
    admissible subtrees well-formed.)
    """
    chosen = frozenset(tau)
    if not chosen >= {ROOT_A, ROOT_B}:
        raise ValidationError("both roots belong to every beta subtree")
    for v in chosen:
        if v.td != 0 and (tree.a_parent[v] not in chosen or tree.b_parent[v] not in chosen):
            raise ValidationError(f"{v} is in the subtree but a parent is not")

    parent = {}
    for v in tree.major_side:
        pa, pb = tree.a_parent[v], tree.b_parent[v]
        if v in chosen:
            parent[v] = pa if v.side == A_SIDE else pb
        elif pa in chosen and pb in chosen:
            parent[v] = pb if v.side == A_SIDE else pa
        else:
            parent[v] = tree.major_parent(v)

    fences = frozenset(
        normalize_fence((x, y))
        for x, y in tree.fences
        if not (x in chosen and y in chosen)
    )
    return MajorGraph(nodes=tree.nodes, parent=parent, fences=fences)


# ---------------------------------------------------------------------------
# The kernel identity


def root_component_size(graph: MajorGraph, root: BreakpointId = ROOT_A) -> int:
    """Number of nodes whose parent chain ends at ``root``, root included."""
    members = {root}
    changed = True
    while changed:
        changed = False
        for v, p in graph.parent.items():
            if p in members and v not in members:
                members.add(v)
                changed = True
    return len(members)


def two_tree_count(graph: MajorGraph) -> ExtensionCount:
    """Extension product of a two-root forest, with no interleaving of
    the two root components (their relative order is accounted for
    elsewhere — this is the count the kernel identity sums)."""
    return _forest_count(graph.nodes, dict(graph.parent), sorted(graph.fences))


def contracted_count(graph: MajorGraph) -> ExtensionCount:
    """Extension product after fusing the two roots into one."""
    parent = {v: (ROOT_A if p.td == 0 else p) for v, p in graph.parent.items()}
    nodes = tuple(v for v in graph.nodes if v != ROOT_B)
    return _forest_count(nodes, parent, sorted(graph.fences))


@dataclass(frozen=True)
class KernelCheck:
    """One instance of the kernel identity at a fixed first-root size."""

    r: int
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def kernel_profile(tree: BetaTree, budget: int = SUBTREE_NODE_BUDGET) -> tuple[KernelCheck, ...]:
    """Kernel sums for every feasible first-root size, one subtree sweep."""
    rhs = contracted_count(induced_tree(tree, (ROOT_A, ROOT_B))).value
    sums: dict[int, int] = {}
    for tau in enumerate_beta_subtrees(tree, budget=budget):
        graph = induced_tree(tree, tau)
        r = root_component_size(graph)
        sums[r] = sums.get(r, 0) + two_tree_count(graph).value
    total = len(tree.nodes)
    return tuple(KernelCheck(r=r, lhs=sums.get(r, 0), rhs=rhs) for r in range(1, total))


def kernel_check(tree: BetaTree, r: int, budget: int = SUBTREE_NODE_BUDGET) -> KernelCheck:
    """The kernel identity at one first-root size ``r``."""
    total = len(tree.nodes)
    if not 1 <= r <= total - 1:
        raise ValidationError(f"r={r} outside 1..{total - 1}")
    for check in kernel_profile(tree, budget=budget):
        if check.r == r:
            return check
    raise AssertionError("unreachable: profile covers every r")


# ---------------------------------------------------------------------------
# Random beta trees (coverage generator for the kernel property test)


def random_beta_tree(seed: int, size: int, fence_rate: float = 0.35) -> BetaTree:
    """Grow a valid beta tree of ``size`` nodes, deterministically per seed.

    Valid parent pairs are anchored: besides the root pair, each node
    whose major chain carries an opposite-type node defines exactly one
    pair — itself as major and that nearest ancestor as minor.  Each
    round picks an anchor and hangs a single node or a fenced pair under
    it.  No uniformity is claimed over the space of trees — diversity is
    the point.
    """
    if size < 2:
        raise ValidationError(f"a beta tree has at least its two roots, got size {size}")
    rng = random.Random(seed)
    tree = BetaTree(a_parent={}, b_parent={}, major_side={}, fences=frozenset())
    fences: set[tuple[BreakpointId, BreakpointId]] = set()
    count, next_id = 2, 1

    while count < size:
        anchors = [q for q in sorted(tree.major_side) if _recent_minor(tree, q) is not None]
        pick = rng.randrange(len(anchors) + 1)
        if pick == len(anchors):
            pa, pb = ROOT_A, ROOT_B
            side = rng.choice((A_SIDE, B_SIDE))
        else:
            q = anchors[pick]
            side = q.side
            pa, pb = (q, _recent_minor(tree, q)) if side == A_SIDE else (_recent_minor(tree, q), q)

        if size - count >= 2 and rng.random() < fence_rate:
            pair = (BreakpointId(next_id, A_SIDE), BreakpointId(next_id, B_SIDE))
            for z in pair:
                tree.a_parent[z] = pa
                tree.b_parent[z] = pb
                tree.major_side[z] = side
            fences.add(pair)
            count += 2
        else:
            z = BreakpointId(next_id, rng.choice((A_SIDE, B_SIDE)))
            tree.a_parent[z] = pa
            tree.b_parent[z] = pb
            tree.major_side[z] = side
            count += 1
        next_id += 1

    tree.fences = frozenset(fences)
    return tree


# ---------------------------------------------------------------------------
# Totals


def closed_form(n: int) -> int:
    """Exact number of evolutions with ``n`` TDs: ∏ (4^k − (2k+1))."""
    if n < 0:
        raise ValidationError(f"need n >= 0, got {n}")
    value = 1
    for k in range(1, n + 1):
        value *= 4**k - (2 * k + 1)
    return value


def _sum_partition(args: tuple) -> int:
    n, prefix, max_n = args
    return sum(
        count_extensions_formula(major_graph(build_2d_tree(ev))).value
        for ev in enumerate_word_evolutions(n, prefix=prefix, max_n=max_n)
    )


def total_evolutions_via_words(n: int, workers: int = 1, max_n: int = DEFAULT_MAX_N) -> int:
    """Evolution total summed word by word: Σ extensions of each tree.

    This is the enumeration route the closed form is checked against.
    With ``workers > 1`` the word-evolution stream is partitioned by its
    first two steps; partial sums are independent, so worker count never
    changes the result.
    """
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    if workers <= 1 or n < 3:
        return _sum_partition((n, (), max_n))
    prefixes = [tuple(ev.steps) for ev in enumerate_word_evolutions(3, max_n=max_n)]
    from concurrent.futures import ProcessPoolExecutor

    parts = [(n, p, max_n) for p in prefixes]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_sum_partition, parts))


# ---------------------------------------------------------------------------
# Serialization


def beta_to_json(tree: BetaTree) -> str:
    payload = {
        "nodes": [
            {
                "id": str(v),
                "a_parent": str(tree.a_parent[v]),
                "b_parent": str(tree.b_parent[v]),
                "major": tree.major_side[v],
            }
            for v in sorted(tree.major_side)
        ],
        "fences": [[str(x), str(y)] for x, y in sorted(tree.fences)],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def beta_tree_from_json(text: str) -> BetaTree:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc), position=exc.pos) from exc
    if not isinstance(payload, dict) or "nodes" not in payload:
        raise ParseError("expected an object with a 'nodes' list")
    a_parent, b_parent, major_side = {}, {}, {}
    try:
        for entry in payload["nodes"]:
            v = parse_breakpoint(entry["id"])
            a_parent[v] = parse_breakpoint(entry["a_parent"])
            b_parent[v] = parse_breakpoint(entry["b_parent"])
            if entry["major"] not in (A_SIDE, B_SIDE):
                raise ValidationError(f"bad major side {entry['major']!r}")
            major_side[v] = entry["major"]
        fences = frozenset(
            normalize_fence((parse_breakpoint(x), parse_breakpoint(y)))
            for x, y in payload.get("fences", [])
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed beta tree payload: {exc}") from exc
    return BetaTree(a_parent=a_parent, b_parent=b_parent, major_side=major_side, fences=fences)


def beta_to_dot(tree: BetaTree, name: str = "beta_tree") -> str:
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

"""Counting linear extensions of breakpoint order diagrams.

Two independent routes are provided.  The closed-form route multiplies
one combinatorial factor per major-graph site: a node with descending
branches of sizes ``x1..xK`` contributes the multinomial
``(x1+..+xK)! / (x1! .. xK!)``, and a fence bridging branches of sizes
``y1, y2`` contributes ``C(y1+y2, y1) - 1`` (interleavings minus the one
order the fence forbids) after which the two branches merge.  The
brute-force route runs dynamic programming over down-sets of the order
diagram and exists to referee the formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator, Sequence

from .errors import BudgetExceededError, MalformedGraphError
from .structure import BreakpointId, HasseDiagram, MajorGraph

BRUTEFORCE_NODE_BUDGET = 26


def multinomial(parts: Sequence[int]) -> int:
    """Exact multinomial coefficient over branch sizes."""
    total = sum(parts)
    value = factorial(total)
    for p in parts:
        value //= factorial(p)
    return value


@dataclass
class ExtensionCount:
    """Result of the closed-form count: the value and its factor trace.

    ``factor_trace`` lists the non-trivial sites only, fences first, as
    ``(site, factor)`` pairs whose product equals ``value``.
    """

    value: int
    factor_trace: tuple[tuple[str, int], ...]

    def trace_text(self) -> str:
        if not self.factor_trace:
            return f"1 = {self.value}"
        product = " * ".join(str(f) for _, f in self.factor_trace)
        return f"{product} = {self.value}"


def _forest_count(
    nodes: Sequence[BreakpointId],
    parent: dict[BreakpointId, BreakpointId],
    fences: Sequence[tuple[BreakpointId, BreakpointId]],
    site_label=None,
) -> ExtensionCount:
    """Product of combinatorial factors over a rooted forest with fences.

    ``parent`` must map every non-root node to another node of the
    forest; fences must bridge two nodes sharing a parent, or two roots.
    """
    node_set = set(nodes)
    children: dict[BreakpointId, list[BreakpointId]] = {v: [] for v in nodes}
    roots = []
    for v in nodes:
        p = parent.get(v)
        if p is None:
            roots.append(v)
        elif p in node_set:
            children[p].append(v)
        else:
            raise MalformedGraphError(f"parent of {v} is outside the graph")

    size: dict[BreakpointId, int] = {}

    def fill_size(v: BreakpointId) -> int:
        stack = [(v, iter(children[v]))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                size[node] = 1 + sum(size[c] for c in children[node])
                stack.pop()
            else:
                stack.append((nxt, iter(children[nxt])))
        return size[v]

    for r in roots:
        fill_size(r)
    if len(size) != len(nodes):
        raise MalformedGraphError("parent edges do not form a forest")

    if site_label is None:
        site_label = str

    in_fence: set[BreakpointId] = set()
    merged: dict[BreakpointId, list[tuple[BreakpointId, BreakpointId]]] = {}
    trace: list[tuple[str, int]] = []
    value = 1
    for x, y in sorted(fences):
        if x in in_fence or y in in_fence:
            raise MalformedGraphError(f"node in two fences near {x}|{y}")
        in_fence.update((x, y))
        px, py = parent.get(x), parent.get(y)
        if px is None and py is None:
            anchor = None  # bridges two forest roots; no multinomial above
        elif px == py and px is not None:
            anchor = px
        else:
            raise MalformedGraphError(f"fence {x}|{y} does not bridge siblings or roots")
        factor = comb(size[x] + size[y], size[x]) - 1
        if x.td == y.td:
            site = f"fence({x.td})"
        else:
            site = f"fence({site_label(x)}|{site_label(y)})"
        if factor != 1:
            trace.append((site, factor))
        value *= factor
        if anchor is not None:
            merged.setdefault(anchor, []).append((x, y))

    node_trace: list[tuple[str, int]] = []
    for v in sorted(nodes):
        if not children[v]:
            continue
        branches = {c: size[c] for c in children[v]}
        for x, y in merged.get(v, ()):
            branches[x] = branches.pop(x) + branches.pop(y)
        factor = multinomial(list(branches.values()))
        if factor != 1:
            node_trace.append((f"node({site_label(v)})", factor))
        value *= factor

    return ExtensionCount(value=value, factor_trace=tuple(trace + node_trace))


def count_extensions_formula(graph: MajorGraph) -> ExtensionCount:
    """Closed-form extension count of a major graph (roots stripped).

    The two root nodes and their edges are removed; the remaining forest
    (its two components bridged by the first fence) supplies the factors.
    """
    inner = [v for v in graph.nodes if v.td != 0]
    parent = {
        v: (p if p.td != 0 else None) for v, p in graph.parent.items() if v.td != 0
    }
    parent = {v: p for v, p in parent.items() if p is not None}
    fences = [f for f in graph.fences if f[0].td != 0 and f[1].td != 0]
    return _forest_count(inner, parent, fences)


def count_extensions_bruteforce(
    diagram: HasseDiagram, budget: int = BRUTEFORCE_NODE_BUDGET
) -> int:
    """Linear-extension count by dynamic programming over down-sets."""
    nodes = sorted(diagram.nodes)
    if len(nodes) > budget:
        raise BudgetExceededError(
            f"{len(nodes)} nodes exceed the brute-force budget of {budget}"
        )
    index = {v: i for i, v in enumerate(nodes)}
    succ_mask = [0] * len(nodes)
    for u, v in diagram.edges:
        succ_mask[index[u]] |= 1 << index[v]

    full = (1 << len(nodes)) - 1
    memo: dict[int, int] = {0: 1}

    def count(placed: int) -> int:
        # placed is always a down-set; peel off each maximal element.
        cached = memo.get(placed)
        if cached is not None:
            return cached
        total = 0
        rest = placed
        while rest:
            bit = rest & -rest
            rest ^= bit
            if succ_mask[bit.bit_length() - 1] & placed == 0:
                total += count(placed ^ bit)
        memo[placed] = total
        return total

    return count(full)


def enumerate_extensions(
    diagram: HasseDiagram, budget: int = 20
) -> Iterator[tuple[BreakpointId, ...]]:
    """Yield every linear extension, lexicographic by breakpoint sequence."""
    nodes = sorted(diagram.nodes)
    if len(nodes) > budget:
        raise BudgetExceededError(
            f"{len(nodes)} nodes exceed the enumeration budget of {budget}"
        )
    preds = diagram.predecessors()
    placed: set[BreakpointId] = set()
    prefix: list[BreakpointId] = []

    def walk() -> Iterator[tuple[BreakpointId, ...]]:
        if len(prefix) == len(nodes):
            yield tuple(prefix)
            return
        for v in nodes:
            if v not in placed and all(p in placed for p in preds[v]):
                placed.add(v)
                prefix.append(v)
                yield from walk()
                prefix.pop()
                placed.remove(v)

    yield from walk()

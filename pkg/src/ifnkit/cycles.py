"""Graph structure algorithms: SCCs, cycle enumeration, pivots, link-cycle system.

Strongly connected components use Tarjan's algorithm (iterative, so deep
graphs do not hit the recursion limit).  Cycle enumeration follows Johnson's
blocked-search algorithm restricted to one SCC at a time; because start
vertices are taken in label order, every elementary circuit is discovered
already in canonical rotation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import CanonicalCycle, FlowNetwork
from .errors import CycleBudgetExceeded, DimensionMismatch, UnknownLink

DEFAULT_CYCLE_BUDGET = 100_000


@dataclass(frozen=True)
class Pivot:
    """A maximal common directed path between two cycles."""

    path: tuple[str, ...]

    @property
    def kind(self) -> str:
        if len(self.path) == 1:
            return "node"
        if len(self.path) == 2:
            return "link"
        return "path"


@dataclass(frozen=True)
class LinkCycleSystem:
    """Binary link-by-cycle incidence with the link-flow vector alongside.

    Rows follow `links` (sorted by (from, to)); columns follow `cycles`.
    An entry is 1 iff the link occurs in the cycle, closing link included,
    so each column sums to the cycle's length.
    """

    links: tuple[tuple[str, str], ...]
    cycles: tuple[CanonicalCycle, ...]
    incidence: tuple[tuple[int, ...], ...]
    link_flows: tuple[int, ...]


def strongly_connected_components(net: FlowNetwork) -> list[set[str]]:
    """Partition the nodes into maximal SCCs, ordered by smallest member.

    A single node is an SCC whether or not it has a self-loop.
    """
    adjacency = {node: net.successors(node) for node in net.nodes}
    index: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    counter = 0
    components: list[set[str]] = []

    for root in net.nodes:
        if root in index:
            continue
        # iterative Tarjan: work items are (node, iterator over successors)
        work = [(root, iter(adjacency[root]))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, successors = work[-1]
            advanced = False
            for succ in successors:
                if succ not in index:
                    index[succ] = lowlink[succ] = counter
                    counter += 1
                    stack.append(succ)
                    on_stack.add(succ)
                    work.append((succ, iter(adjacency[succ])))
                    advanced = True
                    break
                if succ in on_stack:
                    lowlink[node] = min(lowlink[node], index[succ])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index[node]:
                component = set()
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.add(member)
                    if member == node:
                        break
                components.append(component)
    return sorted(components, key=min)


def enumerate_canonical_cycles(
    net: FlowNetwork, budget: int = DEFAULT_CYCLE_BUDGET
) -> list[CanonicalCycle]:
    """Every elementary cycle of the support graph, canonical and sorted.

    Self-loops are included.  Raises :class:`CycleBudgetExceeded` once the
    cycle count passes `budget`, the escape hatch for combinatorial blowup.
    """
    found: list[CanonicalCycle] = []

    def record(nodes: tuple[str, ...]):
        found.append(CanonicalCycle(nodes))
        if len(found) > budget:
            raise CycleBudgetExceeded(
                f"more than {budget} elementary cycles; raise the budget to continue"
            )

    for node in net.nodes:
        if (node, node) in net.flows:
            record((node,))

    order = {node: i for i, node in enumerate(net.nodes)}
    plain_edges = {
        node: [dst for dst in net.successors(node) if dst != node] for node in net.nodes
    }

    for start in net.nodes:
        # restrict to the SCC of `start` within the subgraph of nodes >= start
        allowed = {n for n in net.nodes if order[n] >= order[start]}
        sub = FlowNetwork(
            tuple(allowed),
            {
                (src, dst): 1
                for (src, dst) in net.flows
                if src != dst and src in allowed and dst in allowed
            },
        )
        component = next(
            (c for c in strongly_connected_components(sub) if start in c), {start}
        )
        if len(component) < 2:
            continue
        adjacency = {
            node: [dst for dst in plain_edges[node] if dst in component]
            for node in component
        }
        blocked: set[str] = set()
        block_map: dict[str, set[str]] = {node: set() for node in component}
        path: list[str] = []

        def unblock(node: str):
            blocked.discard(node)
            pending = block_map[node]
            block_map[node] = set()
            for other in pending:
                if other in blocked:
                    unblock(other)

        def circuit(node: str) -> bool:
            closed = False
            path.append(node)
            blocked.add(node)
            for succ in adjacency[node]:
                if succ == start:
                    record(tuple(path))
                    closed = True
                elif succ not in blocked:
                    if circuit(succ):
                        closed = True
            if closed:
                unblock(node)
            else:
                for succ in adjacency[node]:
                    block_map[succ].add(node)
            path.pop()
            return closed

        circuit(start)

    return sorted(found, key=lambda c: c.nodes)


def find_pivots(c1: CanonicalCycle, c2: CanonicalCycle) -> list[Pivot]:
    """All maximal common directed paths between two cycles.

    A pivot is contiguous (with wraparound) in both cycles and not extendable
    in either direction while remaining common.  When the cycles are equal the
    whole cycle is the single pivot.  Node-disjoint cycles yield no pivots.
    """
    if c1 == c2:
        return [Pivot(c1.nodes)]
    common = set(c1.nodes) & set(c2.nodes)
    if not common:
        return []
    # inside each cycle every node has exactly one successor, so the shared
    # links form disjoint chains over the common nodes
    succ = {
        node: c1.successor(node)
        for node in common
        if c1.successor(node) == c2.successor(node)
    }
    has_pred = set(succ.values())
    pivots = []
    for node in common:
        if node in has_pred:
            continue
        chain = [node]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        pivots.append(Pivot(tuple(chain)))
    return sorted(pivots, key=lambda p: p.path)


def build_link_cycle_system(
    net: FlowNetwork, cycles: list[CanonicalCycle]
) -> LinkCycleSystem:
    """Incidence matrix of `cycles` over the support links of `net`.

    Raises :class:`UnknownLink` if a cycle uses a link absent from the
    support; the link-flow vector is extracted from `net` in link order.
    """
    links = tuple(net.links())
    row_of = {link: i for i, link in enumerate(links)}
    columns = []
    for cycle in cycles:
        column = set()
        for link in cycle.links():
            if link not in row_of:
                raise UnknownLink(
                    f"cycle {''.join(cycle.nodes)} uses link "
                    f"{link[0]}->{link[1]} absent from the network"
                )
            column.add(row_of[link])
        columns.append(column)
    incidence = tuple(
        tuple(1 if row in columns[j] else 0 for j in range(len(cycles)))
        for row in range(len(links))
    )
    link_flows = tuple(net.flows[link] for link in links)
    return LinkCycleSystem(links, tuple(cycles), incidence, link_flows)

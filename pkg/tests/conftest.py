"""Shared test helpers: independent oracles and the acceptance summary hook.

The oracles here deliberately use different algorithms from the package
(naive DFS instead of blocked search, BFS reachability instead of Tarjan or
boolean powers) so that agreement between the two is meaningful evidence.
"""
from __future__ import annotations

from ifnkit import FlowNetwork

# (number, description, passed) rows recorded by the acceptance tests
ACCEPTANCE_RESULTS: list[tuple[int, str, bool]] = []


def record_criterion(number: int, description: str, passed: bool) -> None:
    ACCEPTANCE_RESULTS.append((number, description, passed))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed in sorted(ACCEPTANCE_RESULTS):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{verdict} criterion {number:02d}: {description}")


# ---------------------------------------------------------------------------
# independent oracles


def brute_force_cycles(net: FlowNetwork) -> list[tuple[str, ...]]:
    """All elementary cycles by plain DFS, already in canonical rotation.

    Paths are only extended through nodes strictly greater than their start,
    so each cycle is found exactly once, smallest node first.
    """
    adjacency = {node: net.successors(node) for node in net.nodes}
    cycles: list[tuple[str, ...]] = []

    def extend(path: list[str]) -> None:
        for nxt in adjacency[path[-1]]:
            if nxt == path[0]:
                cycles.append(tuple(path))
            elif nxt > path[0] and nxt not in path:
                extend(path + [nxt])

    for start in net.nodes:
        extend([start])
    return sorted(cycles)


def brute_force_strongly_connected(net: FlowNetwork) -> bool:
    """Strong connectivity by forward and backward BFS from one node."""
    if not net.nodes:
        return False
    forward: dict[str, list[str]] = {node: [] for node in net.nodes}
    backward: dict[str, list[str]] = {node: [] for node in net.nodes}
    for (src, dst) in net.flows:
        forward[src].append(dst)
        backward[dst].append(src)

    def reached(adjacency: dict[str, list[str]]) -> set[str]:
        seen = {net.nodes[0]}
        frontier = [net.nodes[0]]
        while frontier:
            for nxt in adjacency[frontier.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return seen

    everything = set(net.nodes)
    return reached(forward) == everything and reached(backward) == everything

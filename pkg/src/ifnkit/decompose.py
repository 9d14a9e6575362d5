"""Turning a flow network back into a signature.

Two routes: the greedy walk (subtract one cycle at a time until no flow
remains) and the linear route (solve the link-cycle system exactly).  The
greedy route always succeeds on a premagic network and round-trips exactly;
the linear route can produce fractional or negative weights, which are
returned as an explicit witness instead of being rounded away.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import assign, compose
from .core import FlowNetwork, Signature, canonicalize_cycle, normalize_signature
from .cycles import (
    DEFAULT_CYCLE_BUDGET,
    LinkCycleSystem,
    build_link_cycle_system,
    enumerate_canonical_cycles,
)
from .errors import DimensionMismatch, NotPremagic
from .ratlin import solve_linear_system


@dataclass(frozen=True)
class CycleWeights:
    """Rational weights aligned with a link-cycle system's cycle order."""

    values: tuple[Fraction, ...]


@dataclass(frozen=True)
class NonIntegerWitness:
    """Evidence that the linear route produced no integer decomposition.

    Carries the exact rational weight vector (aligned with `cycles`) and the
    residual of the least-squares solve in link order.
    """

    cycles: tuple
    weights: tuple[Fraction, ...]
    links: tuple[tuple[str, str], ...]
    residual: tuple[Fraction, ...]


def _require_premagic(net: FlowNetwork):
    out = {node: 0 for node in net.nodes}
    inc = {node: 0 for node in net.nodes}
    for (src, dst), value in net.flows.items():
        out[src] += value
        inc[dst] += value
    bad = [node for node in net.nodes if out[node] != inc[node]]
    if bad:
        raise NotPremagic(
            "network is not premagic; row sum != column sum at "
            + ", ".join(f"{n} ({out[n]} out vs {inc[n]} in)" for n in bad)
        )


def greedy_decompose(net: FlowNetwork) -> Signature:
    """Extract cycles greedily until the network is devoid of flow.

    Deterministic rule: each extraction starts at the smallest-labeled node
    with positive out-flow and always follows the smallest-labeled successor
    with positive remaining flow; the walk stops at the first repeated node
    and the enclosed cycle is subtracted by its minimum link flow.  Each
    extraction zeroes at least one link, so there are at most |E| terms.
    """
    _require_premagic(net)
    work = net
    raw_terms = []
    while work.flows:
        start = min(src for (src, _) in work.flows)
        walk = [start]
        seen = {start: 0}
        while True:
            current = walk[-1]
            succ = min(dst for (src, dst) in work.flows if src == current)
            if succ in seen:
                cycle_nodes = walk[seen[succ]:]
                break
            seen[succ] = len(walk)
            walk.append(succ)
        cycle = canonicalize_cycle(cycle_nodes)
        coefficient = min(work.flows[link] for link in cycle.links())
        raw_terms.append((coefficient, cycle))
        work = assign(work, -coefficient, cycle)
    return normalize_signature(raw_terms)


def solve_cycle_weights(
    system: LinkCycleSystem,
) -> tuple[CycleWeights, tuple[Fraction, ...]]:
    """Exact least-squares weights for ``H x = y``, with the residual.

    Solves the normal equations ``Ht H x = Ht y`` by exact Gaussian
    elimination; when ``Ht H`` is singular the free variables are set to
    zero.  The residual ``H x - y`` is exactly zero whenever ``y`` lies in
    the column space of ``H``.
    """
    incidence = system.incidence
    y = system.link_flows
    if len(y) != len(incidence):
        raise DimensionMismatch(
            f"link-flow vector has {len(y)} entries for {len(incidence)} links"
        )
    m = len(incidence)
    k = len(system.cycles)
    hth = [
        [sum(incidence[r][i] * incidence[r][j] for r in range(m)) for j in range(k)]
        for i in range(k)
    ]
    hty = [sum(incidence[r][i] * y[r] for r in range(m)) for i in range(k)]
    solution = solve_linear_system(hth, hty)
    assert solution is not None  # normal equations are always consistent
    residual = tuple(
        sum((incidence[r][j] * solution[j] for j in range(k)), Fraction(0)) - y[r]
        for r in range(m)
    )
    return CycleWeights(tuple(solution)), residual


def linear_decompose(
    net: FlowNetwork, budget: int = DEFAULT_CYCLE_BUDGET
) -> Union[Signature, NonIntegerWitness]:
    """Decompose via the link-cycle system over all enumerated cycles.

    Returns a signature when every weight is a nonnegative integer and the
    residual is zero; otherwise returns the rational weight vector as a
    witness (this route does not guarantee integrality).
    """
    _require_premagic(net)
    cycles = enumerate_canonical_cycles(net, budget=budget)
    system = build_link_cycle_system(net, cycles)
    weights, residual = solve_cycle_weights(system)
    integral = all(w.denominator == 1 and w >= 0 for w in weights.values)
    if integral and all(r == 0 for r in residual):
        return normalize_signature(
            [(int(w), cycle) for w, cycle in zip(weights.values, cycles) if w]
        )
    return NonIntegerWitness(system.cycles, weights.values, system.links, residual)


def verify_decomposition(net: FlowNetwork, sig: Signature) -> bool:
    """Check ``compose(sig) == net`` entrywise (the round-trip contract)."""
    return compose(sig) == net

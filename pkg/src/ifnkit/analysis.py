"""Flow statistics and structure tests, from signature strings and from matrices.

Everything here is exact: flows are integers, probabilities are
:class:`fractions.Fraction`.  The string-side functions never build the
matrix; they read coefficients straight off the signature, and the
matrix-side counterparts exist so the two routes can be checked against each
other.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .algebra import compose
from .core import FlowNetwork, Signature
from .cycles import strongly_connected_components
from .errors import EmptySignature


@dataclass(frozen=True)
class RationalMatrix:
    """Dense square matrix of exact rationals over a sorted node list."""

    nodes: tuple[str, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.nodes)
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError("entries must be square and match the node list")

    def entry(self, p: str, q: str) -> Fraction:
        i = self.nodes.index(p)
        return self.entries[i][self.nodes.index(q)]


class RelationClass(Enum):
    IDENTICAL = "identical"
    EQUIVALENT = "equivalent"
    DISTINCT = "distinct"


# ---------------------------------------------------------------------------
# string-side derivations


def total_flow(sig: Signature) -> int:
    """kappa: sum of coefficient times cycle length over all terms."""
    return sum(term.coefficient * len(term.cycle) for term in sig)


def link_flow(sig: Signature, p: str, q: str) -> int:
    """Flow on link p->q: sum of coefficients of terms whose cycle uses it."""
    return sum(
        term.coefficient for term in sig if (p, q) in set(term.cycle.links())
    )


def node_flow_sum(sig: Signature, q: str) -> int:
    """Row sum (= column sum) at node q: coefficients of terms containing q."""
    return sum(term.coefficient for term in sig if q in term.cycle.nodes)


def probability_matrix(sig: Signature) -> RationalMatrix:
    """Link probabilities f_pq / kappa; all entries sum to exactly 1."""
    if sig.is_empty:
        raise EmptySignature("cannot derive probabilities from an empty signature")
    kappa = total_flow(sig)
    nodes = sig.nodes()
    return RationalMatrix(
        nodes,
        tuple(
            tuple(Fraction(link_flow(sig, p, q), kappa) for q in nodes) for p in nodes
        ),
    )


def outflow_stochastic(sig: Signature) -> RationalMatrix:
    """Row-stochastic matrix: each link flow over its row's node flow sum."""
    if sig.is_empty:
        raise EmptySignature("cannot derive stochastic matrix from an empty signature")
    nodes = sig.nodes()
    return RationalMatrix(
        nodes,
        tuple(
            tuple(
                Fraction(link_flow(sig, p, q), node_flow_sum(sig, p)) for q in nodes
            )
            for p in nodes
        ),
    )


def inflow_stochastic(sig: Signature) -> RationalMatrix:
    """Column-stochastic matrix: each link flow over its column's flow sum."""
    if sig.is_empty:
        raise EmptySignature("cannot derive stochastic matrix from an empty signature")
    nodes = sig.nodes()
    return RationalMatrix(
        nodes,
        tuple(
            tuple(
                Fraction(link_flow(sig, p, q), node_flow_sum(sig, q)) for q in nodes
            )
            for p in nodes
        ),
    )


# ---------------------------------------------------------------------------
# matrix-side checks


def row_sums(net: FlowNetwork) -> dict[str, int]:
    sums = {node: 0 for node in net.nodes}
    for (src, _), value in net.flows.items():
        sums[src] += value
    return sums


def column_sums(net: FlowNetwork) -> dict[str, int]:
    sums = {node: 0 for node in net.nodes}
    for (_, dst), value in net.flows.items():
        sums[dst] += value
    return sums


def is_premagic(net: FlowNetwork) -> bool:
    """True iff every node's row sum equals its column sum."""
    out = row_sums(net)
    inc = column_sums(net)
    return all(out[node] == inc[node] for node in net.nodes)


def unbalanced_nodes(net: FlowNetwork) -> list[str]:
    """Nodes where the premagic condition fails, sorted."""
    out = row_sums(net)
    inc = column_sums(net)
    return [node for node in net.nodes if out[node] != inc[node]]


def is_irreducible_matrix(net: FlowNetwork) -> bool:
    """Irreducibility test: all entries of (I + A)^(n-1) positive.

    Computed over the boolean semiring with rows as machine-integer bitsets,
    so the power never overflows; this must agree with the SCC count from
    the cycles module on every input.
    """
    n = len(net.nodes)
    if n == 0:
        return False
    index = {node: i for i, node in enumerate(net.nodes)}
    rows = [1 << i for i in range(n)]  # identity
    for (src, dst) in net.flows:
        rows[index[src]] |= 1 << index[dst]
    full = (1 << n) - 1

    def multiply(a: list[int], b: list[int]) -> list[int]:
        out = []
        for row in a:
            acc = 0
            remaining = row
            while remaining:
                bit = remaining & -remaining
                acc |= b[bit.bit_length() - 1]
                remaining ^= bit
            out.append(acc)
        return out

    power = n - 1
    result = [1 << i for i in range(n)]
    base = rows
    while power:
        if power & 1:
            result = multiply(result, base)
        power >>= 1
        if power:
            base = multiply(base, base)
        if all(row == full for row in result):
            break  # powers of I+A only grow
    return all(row == full for row in result)


def is_irreducible_signature(sig: Signature) -> bool:
    """Irreducibility straight from the string: is the term graph connected?

    Terms are vertices; two terms are adjacent when their cycles share at
    least one node (a pivot).  Chains of pivots suffice; no direct pivot is
    needed between every pair.  Must equal ``is_irreducible_matrix(compose(sig))``.
    """
    if sig.is_empty:
        raise EmptySignature("irreducibility is undefined for an empty signature")
    terms = list(sig)
    parent = list(range(len(terms)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[str, int] = {}
    for i, term in enumerate(terms):
        for node in term.cycle.nodes:
            if node in owner:
                parent[find(i)] = find(owner[node])
            else:
                owner[node] = i
    roots = {find(i) for i in range(len(terms))}
    return len(roots) == 1


def classify_relation(s1: Signature, s2: Signature) -> RelationClass:
    """Identical (same normalized terms), equivalent (same matrix), or distinct."""
    if s1 == s2:
        return RelationClass.IDENTICAL
    if compose(s1) == compose(s2):
        return RelationClass.EQUIVALENT
    return RelationClass.DISTINCT


def is_ideal_flow(net: FlowNetwork) -> bool:
    """Premagic, irreducible, and carrying at least one unit of flow."""
    return bool(net.flows) and is_premagic(net) and is_irreducible_matrix(net)


def scc_count(net: FlowNetwork) -> int:
    return len(strongly_connected_components(net))


# ---------------------------------------------------------------------------
# matrix-side counterparts of the string derivations


def network_total_flow(net: FlowNetwork) -> int:
    return net.total_flow()


def network_probability_matrix(net: FlowNetwork) -> RationalMatrix:
    kappa = net.total_flow()
    if kappa == 0:
        raise ValueError("network carries no flow")
    return RationalMatrix(
        net.nodes,
        tuple(
            tuple(Fraction(net.flow(p, q), kappa) for q in net.nodes)
            for p in net.nodes
        ),
    )


def network_outflow_stochastic(net: FlowNetwork) -> RationalMatrix:
    sums = row_sums(net)
    for node, value in sums.items():
        if value == 0:
            raise ValueError(f"node {node} has zero out-flow; rows cannot be normalized")
    return RationalMatrix(
        net.nodes,
        tuple(
            tuple(Fraction(net.flow(p, q), sums[p]) for q in net.nodes)
            for p in net.nodes
        ),
    )


def network_inflow_stochastic(net: FlowNetwork) -> RationalMatrix:
    sums = column_sums(net)
    for node, value in sums.items():
        if value == 0:
            raise ValueError(f"node {node} has zero in-flow; columns cannot be normalized")
    return RationalMatrix(
        net.nodes,
        tuple(
            tuple(Fraction(net.flow(p, q), sums[q]) for q in net.nodes)
            for p in net.nodes
        ),
    )

"""Constructors: random instances, premier (all-cycles) networks, Markov bridge."""
from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import reduce

from .algebra import compose
from .analysis import RationalMatrix, is_irreducible_matrix
from .core import FlowNetwork, Signature, Term, normalize_signature
from .cycles import DEFAULT_CYCLE_BUDGET, enumerate_canonical_cycles
from .errors import InfeasibleKappa, NotIrreducible, NotStochastic
from .ratlin import solve_linear_system


def default_node_labels(n: int) -> tuple[str, ...]:
    """n labels in lexicographic order: a..z, or v001.. when n exceeds 26."""
    if n < 1:
        raise ValueError("need at least one node")
    if n <= 26:
        return tuple(chr(ord("a") + i) for i in range(n))
    width = len(str(n))
    return tuple(f"v{i:0{width}d}" for i in range(1, n + 1))


def complete_support(n: int, self_loops: bool = False) -> FlowNetwork:
    """Unit flow on every ordered pair of distinct nodes (plus loops if asked)."""
    labels = default_node_labels(n)
    flows = {
        (p, q): 1 for p in labels for q in labels if self_loops or p != q
    }
    return FlowNetwork(nodes=labels, flows=flows)


def premier_network(
    support: FlowNetwork, budget: int = DEFAULT_CYCLE_BUDGET
) -> tuple[Signature, FlowNetwork]:
    """Every canonical cycle of the support graph, assigned exactly once.

    The support's flow values are ignored; only which links exist matters.
    The result is the densest ideal flow on that support with every cycle
    coefficient equal to one.
    """
    if not is_irreducible_matrix(support):
        raise NotIrreducible(
            "the support graph is not strongly connected, so assigning every "
            "cycle once cannot reach every node"
        )
    cycles = enumerate_canonical_cycles(support, budget=budget)
    sig = Signature(terms=tuple(Term(coefficient=1, cycle=c) for c in cycles))
    return sig, compose(sig)


def _spend_remainder(remainder: int, lengths: list[int]) -> list[int] | None:
    """Counts per term so that sum(count * length) == remainder, or None.

    Unbounded knapsack by dynamic programming; reconstruction always prefers
    the earliest term, keeping the result deterministic.
    """
    parent: list[int | None] = [None] * (remainder + 1)
    reachable = [False] * (remainder + 1)
    reachable[0] = True
    for value in range(1, remainder + 1):
        for i, length in enumerate(lengths):
            if length <= value and reachable[value - length]:
                reachable[value] = True
                parent[value] = i
                break
    if not reachable[remainder]:
        return None
    counts = [0] * len(lengths)
    value = remainder
    while value > 0:
        i = parent[value]
        assert i is not None
        counts[i] += 1
        value -= lengths[i]
    return counts


def random_ifn(n: int, kappa: int, seed: int) -> Signature:
    """Signature of a random ideal flow network on n nodes with total flow kappa.

    Deterministic per seed (Mersenne Twister via :mod:`random`).  The first
    term is a random Hamiltonian cycle, which guarantees irreducibility and
    full node coverage; up to n extra short cycles are added while budget
    remains, and the leftover flow is distributed over the existing cycle
    lengths by unbounded knapsack, appending a single self-loop term when the
    leftover is otherwise unrepresentable.  ``total_flow(result) == kappa``
    always holds exactly.
    """
    if n < 1:
        raise ValueError("need at least one node")
    if kappa < n:
        raise InfeasibleKappa(
            f"total flow {kappa} cannot cover {n} nodes; the shortest "
            f"covering signature already costs {n}"
        )
    rng = random.Random(seed)
    labels = list(default_node_labels(n))

    order = labels[:]
    rng.shuffle(order)
    cycles: list[tuple[str, ...]] = [tuple(order)]
    spent = n

    for _ in range(rng.randint(0, n)):
        room = kappa - spent
        if room < 1:
            break
        length = rng.randint(1, min(n, room))
        cycles.append(tuple(rng.sample(labels, length)))
        spent += length

    counts = _spend_remainder(kappa - spent, [len(c) for c in cycles])
    if counts is None:
        cycles.append((rng.choice(labels),))
        spent += 1
        counts = _spend_remainder(kappa - spent, [len(c) for c in cycles])
        assert counts is not None, "a unit-length cycle makes any remainder reachable"

    return normalize_signature(
        [(1 + extra, cycle) for extra, cycle in zip(counts, cycles)]
    )


# ---------------------------------------------------------------------------
# Markov bridge


def _check_row_stochastic(matrix: RationalMatrix) -> None:
    for node, row in zip(matrix.nodes, matrix.entries):
        if any(entry < 0 for entry in row):
            raise NotStochastic(f"row {node} has a negative entry")
        if sum(row) != 1:
            raise NotStochastic(f"row {node} sums to {sum(row)}, not 1")


def _support_network(matrix: RationalMatrix) -> FlowNetwork:
    flows = {}
    for p, row in zip(matrix.nodes, matrix.entries):
        for q, entry in zip(matrix.nodes, row):
            if entry != 0:
                flows[(p, q)] = 1
    return FlowNetwork(nodes=matrix.nodes, flows=flows)


def stationary_distribution(matrix: RationalMatrix) -> tuple[Fraction, ...]:
    """Exact stationary probabilities of an irreducible row-stochastic matrix.

    Solves pi S = pi together with sum(pi) = 1 by exact elimination; with an
    irreducible chain the solution is unique and strictly positive.
    """
    _check_row_stochastic(matrix)
    if not is_irreducible_matrix(_support_network(matrix)):
        raise NotIrreducible("the chain is not irreducible; no unique stationary law")
    n = len(matrix.nodes)
    # rows: transpose(S) - I, then the normalization row of ones
    rows = [
        [matrix.entries[i][j] - (1 if i == j else 0) for i in range(n)]
        for j in range(n)
    ]
    rows.append([Fraction(1)] * n)
    rhs = [Fraction(0)] * n + [Fraction(1)]
    solution = solve_linear_system(rows, rhs)
    assert solution is not None, "irreducible stochastic system is always consistent"
    return tuple(solution)


def markov_to_integer_ifn(matrix: RationalMatrix) -> FlowNetwork:
    """Smallest integer ideal flow whose outflow-stochastic matrix is the input.

    Entry p->q of the flow probability is pi_p * S[p][q]; scaling by the
    least common multiple of all (reduced) denominators gives the minimal
    integer network.
    """
    pi = stationary_distribution(matrix)
    probabilities: dict[tuple[str, str], Fraction] = {}
    for i, p in enumerate(matrix.nodes):
        for j, q in enumerate(matrix.nodes):
            value = pi[i] * matrix.entries[i][j]
            if value != 0:
                probabilities[(p, q)] = value
    scale = reduce(math.lcm, (value.denominator for value in probabilities.values()), 1)
    flows = {link: int(value * scale) for link, value in probabilities.items()}
    return FlowNetwork(nodes=matrix.nodes, flows=flows)

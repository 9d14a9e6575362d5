"""Core value types: node labels, canonical cycles, signatures, flow networks.

Node labels are plain strings ordered lexicographically (byte order of their
UTF-8 encoding, which Python's ``str`` comparison matches).  That single
ordering drives cycle canonicalization, term sorting and link ordering
everywhere else in the package.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DuplicateNodeInCycle, EmptyCycle, NegativeCoefficient

#: characters that may never appear in a node label
FORBIDDEN_LABEL_CHARS = frozenset("+(),")


def validate_label(label: str) -> str:
    """Check that `label` is a legal node label and return it unchanged."""
    if not isinstance(label, str) or not label:
        raise ValueError("node label must be a nonempty string")
    if label[0].isdigit():
        raise ValueError(f"node label must not start with a digit: {label!r}")
    for ch in label:
        if ch.isspace() or ch in FORBIDDEN_LABEL_CHARS:
            raise ValueError(f"illegal character {ch!r} in node label {label!r}")
    return label


@dataclass(frozen=True, order=True)
class CanonicalCycle:
    """A simple directed cycle, rotated so the smallest label comes first.

    The closing link back to ``nodes[0]`` is implied, never stored.
    """

    nodes: tuple[str, ...]

    def __post_init__(self):
        if not self.nodes:
            raise EmptyCycle("cycle must contain at least one node")
        for label in self.nodes:
            validate_label(label)
        if len(set(self.nodes)) != len(self.nodes):
            raise DuplicateNodeInCycle(f"repeated node in cycle {self.nodes!r}")
        if self.nodes[0] != min(self.nodes):
            raise ValueError(
                f"cycle {self.nodes!r} is not in canonical rotation; "
                "use canonicalize_cycle()"
            )

    def __len__(self) -> int:
        return len(self.nodes)

    def links(self) -> list[tuple[str, str]]:
        """All directed links of the cycle, including the closing link."""
        out = [(self.nodes[i], self.nodes[i + 1]) for i in range(len(self.nodes) - 1)]
        out.append((self.nodes[-1], self.nodes[0]))
        return out

    def successor(self, node: str) -> str:
        """The node that follows `node` in cyclic order."""
        i = self.nodes.index(node)
        return self.nodes[(i + 1) % len(self.nodes)]


@dataclass(frozen=True)
class Term:
    """A coefficient-weighted canonical cycle."""

    coefficient: int
    cycle: CanonicalCycle

    def __post_init__(self):
        if not isinstance(self.coefficient, int) or isinstance(self.coefficient, bool):
            raise TypeError("coefficient must be an integer")
        if self.coefficient < 1:
            raise NegativeCoefficient(
                f"stored term coefficient must be >= 1, got {self.coefficient}"
            )


@dataclass(frozen=True)
class Signature:
    """A normalized sum of terms: cycles pairwise distinct, sorted by node sequence."""

    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        seqs = [t.cycle.nodes for t in self.terms]
        if len(set(seqs)) != len(seqs):
            raise ValueError("signature terms must use pairwise distinct cycles")
        if seqs != sorted(seqs):
            raise ValueError("signature terms must be sorted by cycle node sequence")

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def is_empty(self) -> bool:
        return not self.terms

    def nodes(self) -> tuple[str, ...]:
        """Sorted union of the node sets of all cycles."""
        seen: set[str] = set()
        for term in self.terms:
            seen.update(term.cycle.nodes)
        return tuple(sorted(seen))


@dataclass(frozen=True)
class FlowNetwork:
    """Node-labeled sparse flow matrix with nonnegative integer entries.

    Zero-valued links are never stored; every link endpoint is guaranteed to
    appear in `nodes`.  The constructor normalizes its arguments, so nodes may
    be given in any order and zero flows are dropped.
    """

    nodes: tuple[str, ...] = ()
    flows: dict[tuple[str, str], int] = field(default_factory=dict)

    def __post_init__(self):
        node_set = set(self.nodes)
        clean: dict[tuple[str, str], int] = {}
        for (src, dst), value in self.flows.items():
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"flow {src}->{dst} must be an integer, got {value!r}")
            if value < 0:
                raise ValueError(f"flow {src}->{dst} must be nonnegative, got {value}")
            if value == 0:
                continue
            clean[(src, dst)] = value
            node_set.add(src)
            node_set.add(dst)
        for label in node_set:
            validate_label(label)
        object.__setattr__(self, "nodes", tuple(sorted(node_set)))
        object.__setattr__(self, "flows", dict(sorted(clean.items())))

    def __len__(self) -> int:
        return len(self.nodes)

    def flow(self, src: str, dst: str) -> int:
        return self.flows.get((src, dst), 0)

    def total_flow(self) -> int:
        return sum(self.flows.values())

    def links(self) -> list[tuple[str, str]]:
        """Support links (flow > 0), sorted by (from, to)."""
        return list(self.flows)

    def successors(self, node: str) -> list[str]:
        return sorted(dst for (src, dst) in self.flows if src == node)

    def matrix(self) -> list[list[int]]:
        """Dense row-major matrix in `nodes` order."""
        index = {label: i for i, label in enumerate(self.nodes)}
        out = [[0] * len(self.nodes) for _ in self.nodes]
        for (src, dst), value in self.flows.items():
            out[index[src]][index[dst]] = value
        return out

    @classmethod
    def from_matrix(cls, nodes: Sequence[str], rows: Sequence[Sequence[int]]) -> "FlowNetwork":
        """Build a network from a dense matrix given in `nodes` order."""
        if len(rows) != len(nodes) or any(len(r) != len(nodes) for r in rows):
            raise ValueError("matrix must be square and match the node list")
        if len(set(nodes)) != len(nodes):
            raise ValueError("node labels must be distinct")
        flows = {}
        for i, src in enumerate(nodes):
            for j, dst in enumerate(nodes):
                if rows[i][j]:
                    flows[(src, dst)] = rows[i][j]
        return cls(tuple(nodes), flows)


def canonicalize_cycle(raw: Iterable[str]) -> CanonicalCycle:
    """Rotate a raw node sequence so its smallest label comes first.

    Rotation preserves the cyclic successor relation, so any rotation of the
    same cycle canonicalizes to the same value.
    """
    if isinstance(raw, CanonicalCycle):
        return raw
    nodes = tuple(raw)
    if not nodes:
        raise EmptyCycle("cycle must contain at least one node")
    if len(set(nodes)) != len(nodes):
        raise DuplicateNodeInCycle(f"repeated node in cycle {nodes!r}")
    pivot = nodes.index(min(nodes))
    return CanonicalCycle(nodes[pivot:] + nodes[:pivot])


def normalize_signature(raw_terms: Iterable[tuple[int, Iterable[str]]]) -> Signature:
    """Canonicalize, merge and sort raw (coefficient, cycle) pairs.

    Terms over the same canonical cycle are merged by summing coefficients;
    zero-sum terms are dropped; a merged coefficient below zero is an error
    because signatures represent nonnegative flow.
    """
    merged: dict[CanonicalCycle, int] = {}
    for coefficient, raw_cycle in raw_terms:
        if not isinstance(coefficient, int) or isinstance(coefficient, bool):
            raise TypeError(f"coefficient must be an integer, got {coefficient!r}")
        cycle = canonicalize_cycle(raw_cycle)
        merged[cycle] = merged.get(cycle, 0) + coefficient
    terms = []
    for cycle in sorted(merged, key=lambda c: c.nodes):
        coefficient = merged[cycle]
        if coefficient == 0:
            continue
        if coefficient < 0:
            raise NegativeCoefficient(
                f"cycle {''.join(cycle.nodes)} merges to negative coefficient {coefficient}"
            )
        terms.append(Term(coefficient, cycle))
    return Signature(tuple(terms))

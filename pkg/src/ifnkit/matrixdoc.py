"""JSON document formats: matrix files, analysis reports, canonical encoding.

One document shape serves both integer flow matrices and rational stochastic
matrices: ``{"nodes": [...], "matrix": [[...]]}``.  Integers are plain JSON
numbers; non-integral rationals are ``"p/q"`` strings.  The readers infer
which kind a document holds by inspecting the entries.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .algebra import compose
from .analysis import (
    RationalMatrix,
    column_sums,
    inflow_stochastic,
    is_ideal_flow,
    is_irreducible_matrix,
    is_irreducible_signature,
    is_premagic,
    node_flow_sum,
    outflow_stochastic,
    probability_matrix,
    row_sums,
    total_flow,
    unbalanced_nodes,
)
from .core import FlowNetwork, Signature, validate_label
from .cycles import find_pivots
from .sigtext import render_path, render_signature

_RATIONAL_TEXT = re.compile(r"-?\d+(/[1-9]\d*)?\Z")


def canonical_json(payload: Any) -> str:
    """Deterministic encoding: sorted keys, no insignificant whitespace."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def fraction_to_json(value: Fraction) -> int | str:
    """Integers stay plain numbers; proper fractions become "p/q" strings."""
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def json_to_fraction(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("matrix entries must be numbers, not booleans")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_TEXT.fullmatch(value):
            raise ValueError(f"not a rational entry: {value!r} (want \"p/q\" or an integer)")
        return Fraction(value)
    raise ValueError(f"matrix entries must be integers or \"p/q\" strings, got {type(value).__name__}")


def _read_node_list(doc: Any) -> list[str]:
    if not isinstance(doc, dict):
        raise ValueError("matrix document must be a JSON object with nodes and matrix")
    nodes = doc.get("nodes")
    matrix = doc.get("matrix")
    if not isinstance(nodes, list) or not isinstance(matrix, list):
        raise ValueError("matrix document needs a nodes array and a matrix array")
    if not nodes:
        raise ValueError("matrix document needs at least one node")
    for label in nodes:
        if not isinstance(label, str):
            raise ValueError("node labels must be strings")
        validate_label(label)
    if len(set(nodes)) != len(nodes):
        raise ValueError("node labels must be distinct")
    if len(matrix) != len(nodes) or any(
        not isinstance(row, list) or len(row) != len(nodes) for row in matrix
    ):
        raise ValueError("matrix must be square with one row and column per node")
    return nodes


def network_to_document(net: FlowNetwork) -> dict[str, Any]:
    return {"nodes": list(net.nodes), "matrix": net.matrix()}


def document_to_network(doc: Any) -> FlowNetwork:
    """Integer flow matrix from a document; rejects negatives and non-integers."""
    nodes = _read_node_list(doc)
    flows: dict[tuple[str, str], int] = {}
    for src, row in zip(nodes, doc["matrix"]):
        for dst, entry in zip(nodes, row):
            if isinstance(entry, bool) or not isinstance(entry, int):
                raise ValueError(
                    f"flow {src}->{dst} must be a nonnegative integer, got {entry!r}"
                )
            if entry < 0:
                raise ValueError(f"flow {src}->{dst} is negative: {entry}")
            if entry:
                flows[(src, dst)] = entry
    return FlowNetwork(nodes=tuple(sorted(nodes)), flows=flows)


def rational_matrix_to_document(matrix: RationalMatrix) -> dict[str, Any]:
    return {
        "nodes": list(matrix.nodes),
        "matrix": [[fraction_to_json(entry) for entry in row] for row in matrix.entries],
    }


def document_to_rational_matrix(doc: Any) -> RationalMatrix:
    """Rational matrix from a document, rows and columns sorted by node label."""
    nodes = _read_node_list(doc)
    order = sorted(range(len(nodes)), key=lambda i: nodes[i])
    entries = [[json_to_fraction(entry) for entry in row] for row in doc["matrix"]]
    return RationalMatrix(
        nodes=tuple(nodes[i] for i in order),
        entries=tuple(tuple(entries[i][j] for j in order) for i in order),
    )


def _rational_rows(matrix: RationalMatrix) -> list[list[int | str]]:
    return [[fraction_to_json(entry) for entry in row] for row in matrix.entries]


def _pivot_listing(sig: Signature, compact: bool) -> list[dict[str, Any]]:
    terms = list(sig)
    listing = []
    for i in range(len(terms)):
        for j in range(i + 1, len(terms)):
            pivots = find_pivots(terms[i].cycle, terms[j].cycle)
            if not pivots:
                continue
            listing.append(
                {
                    "terms": [i, j],
                    "cycles": [
                        render_path(terms[i].cycle.nodes, compact),
                        render_path(terms[j].cycle.nodes, compact),
                    ],
                    "pivots": [render_path(p.path, compact) for p in pivots],
                }
            )
    return listing


def build_analysis_report(sig: Signature) -> dict[str, Any]:
    """Everything the string analysis derives, in one JSON-ready report."""
    net = compose(sig)
    nodes = sig.nodes()
    compact = all(len(label) == 1 and label.isalpha() for label in nodes)
    return {
        "signature": render_signature(sig),
        "nodes": list(nodes),
        "kappa": total_flow(sig),
        "nodeFlowSums": {node: node_flow_sum(sig, node) for node in nodes},
        "matrix": net.matrix(),
        "probabilityMatrix": _rational_rows(probability_matrix(sig)),
        "outflowStochastic": _rational_rows(outflow_stochastic(sig)),
        "inflowStochastic": _rational_rows(inflow_stochastic(sig)),
        "pivots": _pivot_listing(sig, compact),
        "irreducible": is_irreducible_signature(sig),
        "premagic": is_premagic(net),
        "idealFlow": is_ideal_flow(net),
    }


def build_check_report(net: FlowNetwork, extended: bool = False) -> dict[str, Any]:
    """Premagic/irreducibility verdicts; extended adds per-node balance data."""
    report: dict[str, Any] = {
        "premagic": is_premagic(net),
        "irreducible": is_irreducible_matrix(net),
        "idealFlow": is_ideal_flow(net),
    }
    if extended:
        report["rowSums"] = row_sums(net)
        report["columnSums"] = column_sums(net)
        report["unbalanced"] = unbalanced_nodes(net)
    return report

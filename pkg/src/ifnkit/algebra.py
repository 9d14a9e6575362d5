"""Assign and merge operators, composition, scaling, network equivalence."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .core import CanonicalCycle, FlowNetwork, Signature
from .errors import NegativeFlowResult, NotIrreducible


def assign(net: FlowNetwork, coefficient: int, cycle: CanonicalCycle) -> FlowNetwork:
    """Add `coefficient` units of flow along every link of `cycle`.

    Missing nodes and links are created; links whose flow reaches zero are
    removed from storage.  A negative coefficient subtracts flow and requires
    every cycle link to carry at least ``|coefficient|`` beforehand.
    """
    links = cycle.links()
    if coefficient < 0:
        for link in links:
            if net.flows.get(link, 0) < -coefficient:
                raise NegativeFlowResult(
                    f"link {link[0]}->{link[1]} carries {net.flows.get(link, 0)} "
                    f"units, cannot subtract {-coefficient}"
                )
    flows = dict(net.flows)
    for link in links:
        value = flows.get(link, 0) + coefficient
        if value == 0:
            flows.pop(link, None)
        else:
            flows[link] = value
    nodes = set(net.nodes) | set(cycle.nodes)
    return FlowNetwork(tuple(nodes), flows)


def merge(n1: FlowNetwork, n2: FlowNetwork) -> FlowNetwork:
    """Union the node sets and add link flows entrywise."""
    flows = dict(n1.flows)
    for link, value in n2.flows.items():
        flows[link] = flows.get(link, 0) + value
    return FlowNetwork(tuple(set(n1.nodes) | set(n2.nodes)), flows)


def compose(sig: Signature, strict: bool = False) -> FlowNetwork:
    """Fold the assign operator over all terms, starting from an empty network.

    The result is always premagic.  With ``strict=True`` the signature must
    pass the irreducibility condition, i.e. actually describe an ideal flow
    matrix, otherwise :class:`NotIrreducible` is raised.
    """
    if strict:
        # late import: analysis depends on this module
        from .analysis import is_irreducible_signature

        if not is_irreducible_signature(sig):
            raise NotIrreducible(
                "signature fails the irreducibility condition; "
                "its terms are not connected by pivots"
            )
    net = FlowNetwork()
    for term in sig:
        net = assign(net, term.coefficient, term.cycle)
    return net


def scale_network(net: FlowNetwork, factor: int) -> FlowNetwork:
    """Multiply every link flow by a positive integer factor."""
    if not isinstance(factor, int) or isinstance(factor, bool) or factor < 1:
        raise ValueError(f"scale factor must be a positive integer, got {factor!r}")
    return FlowNetwork(net.nodes, {link: value * factor for link, value in net.flows.items()})


def equivalence_factor(n1: FlowNetwork, n2: FlowNetwork) -> Optional[Fraction]:
    """The global ratio relating two networks entrywise, or None.

    Returns the exact rational factor z with ``n1 = z * n2`` when the node
    sets match and one constant ratio holds across all links with identical
    support.  Two empty networks over the same nodes are related by 1.
    """
    if n1.nodes != n2.nodes:
        return None
    if set(n1.flows) != set(n2.flows):
        return None
    if not n1.flows:
        return Fraction(1)
    ratio: Optional[Fraction] = None
    for link, value in n1.flows.items():
        current = Fraction(value, n2.flows[link])
        if ratio is None:
            ratio = current
        elif current != ratio:
            return None
    return ratio

from fractions import Fraction

import pytest

from ifnkit import (
    FlowNetwork,
    NegativeFlowResult,
    NotIrreducible,
    Signature,
    assign,
    canonicalize_cycle,
    compose,
    equivalence_factor,
    merge,
    parse_signature,
    scale_network,
)

EXAMPLE_MATRIX = [[1, 1, 0, 0], [0, 3, 1, 1], [0, 0, 0, 1], [1, 1, 0, 0]]


class TestAssign:
    def test_adds_flow_on_every_link_including_closing(self):
        net = assign(FlowNetwork(), 2, canonicalize_cycle(("a", "b", "c")))
        assert net.flows == {("a", "b"): 2, ("b", "c"): 2, ("c", "a"): 2}

    def test_accumulates_on_existing_links(self):
        net = assign(FlowNetwork(), 1, canonicalize_cycle(("a", "b")))
        net = assign(net, 3, canonicalize_cycle(("a", "b")))
        assert net.flow("a", "b") == 4
        assert net.flow("b", "a") == 4

    def test_self_loop(self):
        net = assign(FlowNetwork(), 5, canonicalize_cycle(("a",)))
        assert net.flows == {("a", "a"): 5}

    def test_negative_subtracts_and_prunes_zeros(self):
        net = assign(FlowNetwork(), 2, canonicalize_cycle(("a", "b")))
        net = assign(net, -2, canonicalize_cycle(("a", "b")))
        assert net.flows == {}
        assert net.nodes == ("a", "b")  # nodes survive even with no flow

    def test_negative_needs_enough_flow(self):
        net = assign(FlowNetwork(), 1, canonicalize_cycle(("a", "b")))
        with pytest.raises(NegativeFlowResult):
            assign(net, -2, canonicalize_cycle(("a", "b")))

    def test_negative_checks_every_link(self):
        # a->b carries 2 but b->a only 1: subtracting 2 must fail
        net = FlowNetwork((), {("a", "b"): 2, ("b", "a"): 1, ("b", "b"): 1})
        with pytest.raises(NegativeFlowResult):
            assign(net, -2, canonicalize_cycle(("a", "b")))


class TestMerge:
    def test_entrywise_sum_and_node_union(self):
        n1 = FlowNetwork((), {("a", "b"): 1, ("b", "a"): 1})
        n2 = FlowNetwork(("z",), {("a", "b"): 2})
        merged = merge(n1, n2)
        assert merged.flow("a", "b") == 3
        assert merged.flow("b", "a") == 1
        assert merged.nodes == ("a", "b", "z")


class TestCompose:
    def test_example_matrix_from_first_signature(self):
        net = compose(parse_signature("a + abcd + 3b + bd"))
        assert net.nodes == ("a", "b", "c", "d")
        assert net.matrix() == EXAMPLE_MATRIX

    def test_example_matrix_from_second_signature(self):
        net = compose(parse_signature("3b + a + bcd + abd"))
        assert net.matrix() == EXAMPLE_MATRIX

    def test_empty_signature_composes_to_empty_network(self):
        assert compose(Signature()) == FlowNetwork()

    def test_strict_rejects_disconnected(self):
        with pytest.raises(NotIrreducible):
            compose(parse_signature("ab + cd"), strict=True)

    def test_strict_accepts_connected(self):
        net = compose(parse_signature("ab + bc"), strict=True)
        assert net.total_flow() == 4


class TestScale:
    def test_scales_every_entry(self):
        net = compose(parse_signature("a + abcd + 3b + bd"))
        tripled = scale_network(net, 3)
        assert tripled.matrix() == [[3 * x for x in row] for row in EXAMPLE_MATRIX]

    @pytest.mark.parametrize("bad", [0, -1, 2.0, True])
    def test_rejects_bad_factor(self, bad):
        with pytest.raises(ValueError):
            scale_network(FlowNetwork(), bad)


class TestEquivalenceFactor:
    def test_scalar_multiple(self):
        net = compose(parse_signature("a + abcd + 3b + bd"))
        tripled = scale_network(net, 3)
        assert equivalence_factor(tripled, net) == 3
        assert equivalence_factor(net, tripled) == Fraction(1, 3)
        assert equivalence_factor(net, net) == 1

    def test_different_support_is_unrelated(self):
        n1 = FlowNetwork((), {("a", "b"): 1, ("b", "a"): 1})
        n2 = FlowNetwork((), {("a", "b"): 1, ("b", "a"): 1, ("a", "a"): 1})
        assert equivalence_factor(n1, n2) is None

    def test_nonconstant_ratio_is_unrelated(self):
        n1 = FlowNetwork((), {("a", "b"): 2, ("b", "a"): 2})
        n2 = FlowNetwork((), {("a", "b"): 1, ("b", "a"): 2})
        assert equivalence_factor(n1, n2) is None

    def test_different_node_sets_are_unrelated(self):
        n1 = FlowNetwork(("a", "b", "z"), {("a", "b"): 1, ("b", "a"): 1})
        n2 = FlowNetwork(("a", "b"), {("a", "b"): 1, ("b", "a"): 1})
        assert equivalence_factor(n1, n2) is None

    def test_empty_networks_relate_by_one(self):
        assert equivalence_factor(FlowNetwork(), FlowNetwork()) == 1

from fractions import Fraction
from itertools import chain, combinations

import pytest

from dsetree.errors import ArityMismatch
from dsetree.opbialg import (
    EMPTY_OPFOREST,
    OpForest,
    OpTensor,
    check_core_homomorphism,
    check_faa_di_bruno,
    check_op_coassociativity,
    cocycle_counterexample,
    green,
    op_bplus,
    op_coproduct,
    op_counit,
    ptree_cuts,
)
from dsetree.ptrees import (
    NIL,
    PTree,
    binary_signature,
    enumerate_by_nodes,
    identity_signature,
    stable_signature,
)

BIN = binary_signature()
B = BIN.op("b")
S1 = PTree(B, (NIL, NIL))
T2 = PTree(B, (S1, NIL))  # two nodes, three leaves


def node(*children):
    return PTree(B, tuple(children))


def tens(pairs):
    return OpTensor({(OpForest(l), OpForest(r)): c for l, r, c in pairs})


def test_nil_is_grouplike_but_not_the_unit():
    assert op_coproduct(NIL) == tens([(([NIL]), ([NIL]), 1)])
    assert OpForest([NIL]) != EMPTY_OPFOREST
    assert op_counit(OpForest([NIL])) == 1
    assert op_counit(OpForest([S1])) == 0


def test_displayed_two_node_coproduct():
    assert op_coproduct(T2) == tens(
        [
            ([NIL, NIL, NIL], [T2], 1),
            ([S1, NIL], [S1], 1),
            ([T2], [NIL], 1),
        ]
    )


def test_single_node_coproduct():
    assert op_coproduct(S1) == tens(
        [([NIL, NIL], [S1], 1), ([S1], [NIL], 1)]
    )


def test_coproduct_multiplicative_on_forests():
    f = OpForest([NIL, S1])
    lhs = op_coproduct(f)
    acc = {}
    for (a1, b1), c1 in op_coproduct(NIL).terms.items():
        for (a2, b2), c2 in op_coproduct(S1).terms.items():
            key = (a1.union(a2), b1.union(b2))
            acc[key] = acc.get(key, Fraction(0)) + c1 * c2
    assert lhs == OpTensor(acc)


def test_op_bplus():
    assert op_bplus(B, [NIL, NIL]) == S1
    assert op_bplus(B, [S1, NIL]) == T2
    with pytest.raises(ArityMismatch):
        op_bplus(B, [NIL])


def test_cocycle_fails_with_small_witness():
    witness = cocycle_counterexample(BIN, node_bound=2)
    assert witness is not None
    assert sum(t.node_count for t in witness.args) <= 2
    assert not (witness.lhs - witness.rhs).is_zero()
    # The same failure shows up for the unary constructor.
    unary_witness = cocycle_counterexample(identity_signature(), node_bound=2)
    assert unary_witness is not None


def test_bigrading_preserved():
    for n in range(5):
        for t in enumerate_by_nodes(BIN, n):
            for (crown, lower), c in op_coproduct(t).terms.items():
                assert crown.degree + lower.degree == n
                assert c > 0


def _down_closed_subset_count(t):
    # Brute force over node subsets: a subset is admissible when every
    # included node's parent node (if any) is included too.
    nodes = []

    def collect(cur, parent_index):
        if cur.is_nil():
            return
        index = len(nodes)
        nodes.append(parent_index)
        for child in cur.children:
            collect(child, index)

    collect(t, None)
    count = 0
    indices = range(len(nodes))
    for subset in chain.from_iterable(
        combinations(indices, r) for r in range(len(nodes) + 1)
    ):
        chosen = set(subset)
        if all(nodes[i] is None or nodes[i] in chosen for i in chosen):
            count += 1
    return count


def test_cut_count_matches_down_closed_subsets():
    for n in range(5):
        for t in enumerate_by_nodes(BIN, n):
            assert len(ptree_cuts(t)) == _down_closed_subset_count(t)


def test_coassociativity_small_bounds():
    for sig in (BIN, stable_signature(4)):
        report = check_op_coassociativity(sig, 3)
        assert report.passed, report.summary()


def test_core_homomorphism_on_displayed_example():
    report = check_core_homomorphism(BIN, 2)
    assert report.passed, report.summary()


def test_core_homomorphism_binary_bound_4():
    report = check_core_homomorphism(BIN, 4)
    assert report.passed
    assert report.checked == 1 + 1 + 2 + 5 + 14


def test_green_identity_signature():
    series = green(identity_signature(), 3)
    assert series.max_leaves() == 1
    component = series.leaf_component(1)
    assert len(component.terms) == 4  # ladders with 0..3 nodes
    assert all(w == 1 for _, w in series.weights)


def test_green_binary_bound_2():
    series = green(BIN, 2)
    by_leaves = {n: len(series.leaf_component(n).terms) for n in range(1, 4)}
    assert by_leaves == {1: 1, 2: 1, 3: 2}


def test_green_stable_g4():
    series = green(stable_signature(4), 3)
    assert len(series.leaf_component(4).terms) == 11


def test_faa_di_bruno_small_bounds():
    assert check_faa_di_bruno(BIN, 3).passed
    assert check_faa_di_bruno(identity_signature(), 3).passed
    assert check_faa_di_bruno(BIN, 0).passed
    assert check_faa_di_bruno(stable_signature(3), 3).passed

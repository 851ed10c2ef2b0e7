import pytest

from dsetree.errors import ArityMismatch, MalformedCode, Nonfinite, SizeLimit
from dsetree.ptrees import (
    NIL,
    Operation,
    PTree,
    Signature,
    binary_signature,
    core,
    core_census,
    enumerate_by_leaves,
    enumerate_by_nodes,
    identity_signature,
    kleene_layer,
    list_signature,
    parse_ptree,
    stable_signature,
)
from dsetree.trees import EMPTY_FOREST, parse_forest

BIN = binary_signature()
B = BIN.op("b")


def node(*children):
    return PTree(B, tuple(children))


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature((Operation("a", 1), Operation("a", 2)))
    with pytest.raises(ValueError):
        Signature((Operation("a(", 1),))
    with pytest.raises(ArityMismatch):
        PTree(B, (NIL,))


def test_ptree_counts_and_codec():
    t = node(node(NIL, NIL), NIL)
    assert t.code == "b(b(|,|),|)"
    assert t.node_count == 2
    assert t.leaf_count == 3
    assert parse_ptree(t.code, BIN) == t
    with pytest.raises(MalformedCode):
        parse_ptree("c(|,|)", BIN)
    with pytest.raises(MalformedCode):
        parse_ptree("b(|)", BIN)


def test_nullary_node_has_no_leaves():
    sig = list_signature(2)
    t = parse_ptree("l1(l0())", sig)
    assert t.leaf_count == 0
    assert t.node_count == 2


def test_identity_signature_gives_ladders():
    sig = identity_signature()
    for k in range(11):
        found = enumerate_by_nodes(sig, k, limit=12)
        assert len(found) == 1
        assert found[0].node_count == k


def test_binary_counts_are_catalan():
    assert [len(enumerate_by_nodes(BIN, n)) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_binary_leaves():
    assert len(enumerate_by_leaves(BIN, 3)) == 2
    assert all(t.leaf_count == 3 for t in enumerate_by_leaves(BIN, 3))


def test_stable_counts_are_schroder():
    for n, expected in zip(range(1, 8), [1, 1, 3, 11, 45, 197, 903]):
        sig = stable_signature(max(2, n))
        assert len(enumerate_by_leaves(sig, n)) == expected


def test_stable_leaves_4_trees_have_no_small_arities():
    found = enumerate_by_leaves(stable_signature(4), 4)
    assert len(found) == 11
    for t in found:
        stack = [t]
        while stack:
            cur = stack.pop()
            if not cur.is_nil():
                assert cur.op.arity >= 2
                stack.extend(cur.children)


def test_leaf_enumeration_needs_node_bound_for_small_arities():
    sig = list_signature(3)
    with pytest.raises(Nonfinite):
        enumerate_by_leaves(sig, 2)
    found = enumerate_by_leaves(sig, 2, node_bound=2)
    assert all(t.leaf_count == 2 for t in found)


def test_size_limits():
    with pytest.raises(SizeLimit):
        enumerate_by_nodes(BIN, 13)
    with pytest.raises(SizeLimit):
        enumerate_by_leaves(stable_signature(4), 11)
    with pytest.raises(SizeLimit):
        kleene_layer(BIN, 10)


def test_kleene_layers():
    assert kleene_layer(BIN, 0) == set()
    assert kleene_layer(BIN, 1) == {NIL}
    assert len(kleene_layer(BIN, 2)) == 2
    assert len(kleene_layer(BIN, 3)) == 5
    for k in range(4):
        smaller = kleene_layer(BIN, k)
        larger = kleene_layer(BIN, k + 1)
        assert smaller <= larger
        assert all(t.height < k for t in smaller)
    # Stage k+1 is exactly the image of 1 + P(stage k).
    x3 = kleene_layer(BIN, 3)
    built = {NIL} | {node(a, b) for a in kleene_layer(BIN, 2) for b in kleene_layer(BIN, 2)}
    assert built == x3


def test_core_examples():
    assert core(NIL) == EMPTY_FOREST
    assert core(node(NIL, NIL)) == parse_forest("()")
    left = node(node(NIL, NIL), NIL)
    right = node(NIL, node(NIL, NIL))
    assert core(left) == core(right) == parse_forest("(())")


def test_core_census_examples():
    census = core_census(BIN, 3)
    assert {f.code: c for f, c in census.items()} == {"((()))": 4, "(()())": 1}
    assert core_census(BIN, 1) == {parse_forest("()"): 1}
    stable3 = core_census(stable_signature(3), 3, by="leaves")
    assert {f.code: c for f, c in stable3.items()} == {"(())": 2, "()": 1}


def test_census_totals_match_enumeration():
    for n in range(5):
        census = core_census(BIN, n)
        assert sum(census.values()) == len(enumerate_by_nodes(BIN, n))


def test_census_rejects_unknown_grading():
    with pytest.raises(ValueError):
        core_census(BIN, 2, by="height")

"""Planar signatures, their decorated operadic trees, and the core map.

A signature lists operations with finite ordered arities; its trees are the
least solution of ``X = 1 + P(X)``, approximated here either by node count,
by leaf count, or by height (the Kleene chain).  The core map forgets
decorations and outer edges, landing in combinatorial forests.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct
from typing import Iterator, Optional

from .errors import ArityMismatch, MalformedCode, Nonfinite, SizeLimit
from .trees import CombTree, EMPTY_FOREST, Forest

MAX_NODES = 12
MAX_LEAVES = 10
MAX_HEIGHT = 9
MAX_LAYER_SIZE = 200_000


@dataclass(frozen=True)
class Operation:
    name: str
    arity: int


@dataclass(frozen=True)
class Signature:
    """A finite list of named operations with ordered input slots."""

    ops: tuple[Operation, ...]

    def __post_init__(self) -> None:
        names = [op.name for op in self.ops]
        if len(set(names)) != len(names):
            raise ValueError("operation names must be unique")
        if any(op.arity < 0 for op in self.ops):
            raise ValueError("arities must be nonnegative")
        if any("(" in n or ")" in n or "," in n or "|" in n for n in names):
            raise ValueError("operation names may not contain tree-codec characters")

    def op(self, name: str) -> Operation:
        for op in self.ops:
            if op.name == name:
                return op
        raise KeyError(name)

    def has_small_arities(self) -> bool:
        return any(op.arity <= 1 for op in self.ops)


class PTree:
    """A decorated operadic tree: the bare edge, or a node over subtrees."""

    __slots__ = ("op", "children", "code", "node_count", "leaf_count", "height")

    def __init__(self, op: Optional[Operation] = None, children: tuple["PTree", ...] = ()):
        if op is None:
            if children:
                raise ArityMismatch("the bare edge has no children")
            self.code = "|"
            self.node_count = 0
            self.leaf_count = 1
            self.height = 0
        else:
            if len(children) != op.arity:
                raise ArityMismatch(
                    f"operation {op.name} has arity {op.arity}, got {len(children)} children"
                )
            self.code = op.name + "(" + ",".join(c.code for c in children) + ")"
            self.node_count = 1 + sum(c.node_count for c in children)
            self.leaf_count = sum(c.leaf_count for c in children)
            self.height = 1 + max((c.height for c in children), default=0)
        self.op = op
        self.children = tuple(children)

    def is_nil(self) -> bool:
        return self.op is None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PTree) and self.code == other.code

    def __hash__(self) -> int:
        return hash(self.code)

    def __lt__(self, other: "PTree") -> bool:
        return self.code < other.code

    def __repr__(self) -> str:
        return f"PTree({self.code!r})"


NIL = PTree()


def parse_ptree(s: str, sig: Signature) -> PTree:
    pos, tree = _parse_ptree(s, 0, sig)
    if pos != len(s):
        raise MalformedCode(f"trailing input at position {pos}: {s!r}")
    return tree


def _parse_ptree(s: str, pos: int, sig: Signature) -> tuple[int, PTree]:
    if pos < len(s) and s[pos] == "|":
        return pos + 1, NIL
    open_paren = s.find("(", pos)
    if open_paren < 0:
        raise MalformedCode(f"expected a node at position {pos}: {s!r}")
    name = s[pos:open_paren]
    try:
        op = sig.op(name)
    except KeyError:
        raise MalformedCode(f"unknown operation {name!r} in {s!r}") from None
    pos = open_paren + 1
    children: list[PTree] = []
    if pos < len(s) and s[pos] != ")":
        while True:
            pos, child = _parse_ptree(s, pos, sig)
            children.append(child)
            if pos < len(s) and s[pos] == ",":
                pos += 1
                continue
            break
    if pos >= len(s) or s[pos] != ")":
        raise MalformedCode(f"expected ')' at position {pos}: {s!r}")
    if len(children) != op.arity:
        raise MalformedCode(
            f"operation {op.name} takes {op.arity} children, got {len(children)}: {s!r}"
        )
    return pos + 1, PTree(op, tuple(children))


def identity_signature() -> Signature:
    return Signature((Operation("s", 1),))


def binary_signature() -> Signature:
    return Signature((Operation("b", 2),))


def list_signature(max_arity: int) -> Signature:
    """The list endofunctor, truncated at a maximal arity."""
    return Signature(tuple(Operation(f"l{k}", k) for k in range(max_arity + 1)))


def stable_signature(max_arity: int) -> Signature:
    """One operation per arity 2..max_arity (no nullary or unary nodes)."""
    if max_arity < 2:
        raise ValueError("stable signatures need max_arity >= 2")
    return Signature(tuple(Operation(f"v{k}", k) for k in range(2, max_arity + 1)))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _by_nodes(sig: Signature, n: int) -> tuple[PTree, ...]:
    if n == 0:
        return (NIL,)
    out: list[PTree] = []
    for op in sig.ops:
        for sizes in _compositions(n - 1, op.arity):
            for kids in iproduct(*(_by_nodes(sig, size) for size in sizes)):
                out.append(PTree(op, kids))
    return tuple(sorted(out))


def enumerate_by_nodes(sig: Signature, n: int, limit: int = MAX_NODES) -> list[PTree]:
    """All trees over ``sig`` with exactly ``n`` nodes, in code order."""
    if n < 0:
        raise ValueError("node count must be nonnegative")
    if n > limit:
        raise SizeLimit(f"node enumeration capped at {limit}, got {n}")
    return list(_by_nodes(sig, n))


@lru_cache(maxsize=None)
def _by_leaves(sig: Signature, n: int) -> tuple[PTree, ...]:
    # Only sound when all arities are >= 2: children then have strictly
    # fewer leaves than their parent.
    out: list[PTree] = []
    if n == 1:
        out.append(NIL)
    for op in sig.ops:
        for split in _compositions(n - op.arity, op.arity):
            sizes = tuple(s + 1 for s in split)
            for kids in iproduct(*(_by_leaves(sig, size) for size in sizes)):
                out.append(PTree(op, kids))
    return tuple(sorted(out))


def enumerate_by_leaves(
    sig: Signature,
    n: int,
    node_bound: Optional[int] = None,
    limit: int = MAX_LEAVES,
) -> list[PTree]:
    """All trees over ``sig`` with exactly ``n`` leaves, in code order.

    Signatures with nullary or unary operations have infinitely many trees
    per leaf count, so they require an explicit ``node_bound``.
    """
    if n < 0:
        raise ValueError("leaf count must be nonnegative")
    if n > limit:
        raise SizeLimit(f"leaf enumeration capped at {limit}, got {n}")
    if sig.has_small_arities():
        if node_bound is None:
            raise Nonfinite(
                "signature has nullary or unary operations; pass a node bound"
            )
        out = []
        for k in range(node_bound + 1):
            out.extend(t for t in _by_nodes(sig, k) if t.leaf_count == n)
        return sorted(out)
    return list(_by_leaves(sig, n))


def kleene_layer(sig: Signature, k: int, limit: int = MAX_HEIGHT) -> set[PTree]:
    """The ``k``-th stage of the fixpoint iteration: all trees of height < k."""
    if k < 0:
        raise ValueError("stage index must be nonnegative")
    if k > limit:
        raise SizeLimit(f"fixpoint iteration capped at stage {limit}, got {k}")
    layer: set[PTree] = set()
    for _ in range(k):
        nxt = {NIL}
        for op in sig.ops:
            for kids in iproduct(layer, repeat=op.arity):
                nxt.add(PTree(op, kids))
                if len(nxt) > MAX_LAYER_SIZE:
                    raise SizeLimit(f"fixpoint stage exceeds {MAX_LAYER_SIZE} trees")
        layer = nxt
    return layer


def _core_tree(t: PTree) -> CombTree:
    return CombTree(_core_tree(c) for c in t.children if not c.is_nil())


def core(t: PTree) -> Forest:
    """Combinatorial tree of inner edges: decorations and outer edges dropped."""
    if t.is_nil():
        return EMPTY_FOREST
    return Forest([_core_tree(t)])


def core_forest(trees) -> Forest:
    """Memberwise core of a collection of trees, as one combined forest."""
    members: list[CombTree] = []
    for t in trees:
        members.extend(core(t).trees)
    return Forest(members)


def core_census(sig: Signature, k: int, by: str = "nodes", **kwargs) -> dict[Forest, int]:
    """Count trees (with ``k`` nodes or leaves) grouped by their core."""
    if by == "nodes":
        population = enumerate_by_nodes(sig, k, **kwargs)
    elif by == "leaves":
        population = enumerate_by_leaves(sig, k, **kwargs)
    else:
        raise ValueError("by must be 'nodes' or 'leaves'")
    return dict(Counter(core(t) for t in population))

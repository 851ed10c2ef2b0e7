"""Canonical rooted trees, forests, and their basic surgery.

A :class:`CombTree` is an isomorphism class of finite rooted trees with
unordered children.  The canonical form is a balanced-parenthesis code in
which, at every level, child codes appear in ascending byte order; two trees
are isomorphic iff their codes are equal, so codes double as dictionary keys.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .errors import MalformedCode, SizeLimit

MAX_ENUM_NODES = 12


class CombTree:
    """An unordered rooted tree, stored in canonical form."""

    __slots__ = ("children", "code", "node_count")

    def __init__(self, children: Iterable["CombTree"] = ()):
        kids = sorted(children, key=lambda t: t.code)
        self.children: tuple[CombTree, ...] = tuple(kids)
        self.code: str = "(" + "".join(t.code for t in kids) + ")"
        self.node_count: int = 1 + sum(t.node_count for t in kids)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CombTree) and self.code == other.code

    def __hash__(self) -> int:
        return hash(self.code)

    def __lt__(self, other: "CombTree") -> bool:
        return self.code < other.code

    def __repr__(self) -> str:
        return f"CombTree({self.code!r})"


LEAF = CombTree()


class Forest:
    """A finite multiset of :class:`CombTree`, sorted by canonical code.

    The empty forest is the multiplicative unit and prints as ``"1"``;
    otherwise members print joined by ``"*"`` in ascending code order.
    """

    __slots__ = ("trees", "code", "degree")

    def __init__(self, trees: Iterable[CombTree] = ()):
        members = sorted(trees, key=lambda t: t.code)
        self.trees: tuple[CombTree, ...] = tuple(members)
        self.code: str = "*".join(t.code for t in members) if members else "1"
        self.degree: int = sum(t.node_count for t in members)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Forest) and self.code == other.code

    def __hash__(self) -> int:
        return hash(self.code)

    def __lt__(self, other: "Forest") -> bool:
        return self.code < other.code

    def __iter__(self) -> Iterator[CombTree]:
        return iter(self.trees)

    def union(self, other: "Forest") -> "Forest":
        return Forest(self.trees + other.trees)

    def __repr__(self) -> str:
        return f"Forest({self.code!r})"


EMPTY_FOREST = Forest()


def canon_code(t: CombTree) -> str:
    """Canonical parenthesis code of ``t`` (injective on iso-classes)."""
    return t.code


def parse_code(s: str) -> CombTree:
    """Parse a parenthesis code into a canonical tree.

    Codes with children out of canonical order are normalized rather than
    rejected.  Raises :class:`MalformedCode` on any other deviation.
    """
    pos, tree = _parse_tree(s, 0)
    if pos != len(s):
        raise MalformedCode(f"trailing input at position {pos}: {s!r}")
    return tree


def _parse_tree(s: str, pos: int) -> tuple[int, CombTree]:
    if pos >= len(s) or s[pos] != "(":
        raise MalformedCode(f"expected '(' at position {pos}: {s!r}")
    pos += 1
    children = []
    while pos < len(s) and s[pos] == "(":
        pos, child = _parse_tree(s, pos)
        children.append(child)
    if pos >= len(s) or s[pos] != ")":
        raise MalformedCode(f"expected ')' at position {pos}: {s!r}")
    return pos + 1, CombTree(children)


def parse_forest(s: str) -> Forest:
    """Parse a ``"*"``-joined forest code; ``"1"`` denotes the empty forest."""
    if s == "1":
        return EMPTY_FOREST
    return Forest(parse_code(part) for part in s.split("*"))


def graft(f: Forest) -> CombTree:
    """Attach all members of ``f`` under a new root node (the grafting map)."""
    return CombTree(f.trees)


def aut_order(t: CombTree) -> int:
    """Order of the automorphism group of ``t``.

    Equals the product, over all nodes, of the factorials of the
    multiplicities of pairwise-isomorphic child subtrees.
    """
    order = 1
    for child, mult in Counter(t.children).items():
        order *= factorial(mult) * aut_order(child) ** mult
    return order


@lru_cache(maxsize=None)
def _trees_exact(n: int) -> tuple[CombTree, ...]:
    if n == 1:
        return (LEAF,)
    return tuple(graft(f) for f in _forests_exact(n - 1))


@lru_cache(maxsize=None)
def _forests_exact(d: int) -> tuple[Forest, ...]:
    # Multisets are built by picking members with nondecreasing pool index.
    pool: list[CombTree] = []
    for size in range(1, d + 1):
        pool.extend(_trees_exact(size))
    out: list[Forest] = []

    def extend(remaining: int, start: int, chosen: list[CombTree]) -> None:
        if remaining == 0:
            out.append(Forest(chosen))
            return
        for i in range(start, len(pool)):
            if pool[i].node_count <= remaining:
                chosen.append(pool[i])
                extend(remaining - pool[i].node_count, i, chosen)
                chosen.pop()

    extend(d, 0, [])
    return tuple(out)


def enumerate_comb_trees(n: int, limit: int = MAX_ENUM_NODES) -> set[CombTree]:
    """All iso-classes of rooted trees with exactly ``n`` nodes."""
    if n < 1:
        raise ValueError("node count must be at least 1")
    if n > limit:
        raise SizeLimit(f"tree enumeration capped at {limit} nodes, got {n}")
    return set(_trees_exact(n))


def enumerate_forests(degree: int, limit: int = MAX_ENUM_NODES) -> set[Forest]:
    """All forests of exactly the given total node count."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree > limit:
        raise SizeLimit(f"forest enumeration capped at degree {limit}, got {degree}")
    if degree == 0:
        return {EMPTY_FOREST}
    return set(_forests_exact(degree))

"""The Hopf algebra of rooted forests with the admissible-cut coproduct.

Elements are finite rational-linear combinations of forests; the product is
multiset union of forests, the coproduct sums over admissible cuts (the
root-containing subtree below, the forest of upper pieces above), and the
antipode is the usual connected-graded recursion.  All coefficients are exact
:class:`fractions.Fraction` values.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .errors import MalformedCode
from .report import CheckReport
from .trees import (
    EMPTY_FOREST,
    CombTree,
    Forest,
    enumerate_forests,
    graft,
    parse_forest,
)

Scalar = Union[int, Fraction]


class HckElem:
    """A finite rational-linear combination of forests."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Forest, Scalar] = ()):
        clean = {f: Fraction(c) for f, c in dict(terms).items() if c != 0}
        self.terms: dict[Forest, Fraction] = clean

    @staticmethod
    def zero() -> "HckElem":
        return HckElem()

    @staticmethod
    def one() -> "HckElem":
        return HckElem({EMPTY_FOREST: 1})

    @staticmethod
    def from_forest(f: Forest, coeff: Scalar = 1) -> "HckElem":
        return HckElem({f: coeff})

    @staticmethod
    def from_tree(t: CombTree, coeff: Scalar = 1) -> "HckElem":
        return HckElem({Forest([t]): coeff})

    def __add__(self, other: "HckElem") -> "HckElem":
        acc = dict(self.terms)
        for f, c in other.terms.items():
            acc[f] = acc.get(f, Fraction(0)) + c
        return HckElem(acc)

    def __sub__(self, other: "HckElem") -> "HckElem":
        return self + other.scale(-1)

    def scale(self, s: Scalar) -> "HckElem":
        return HckElem({f: c * s for f, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HckElem) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = sorted(self.terms.items(), key=lambda kv: kv[0].code)
        return " + ".join(f"{c}*{f.code}" for f, c in parts)

    def __repr__(self) -> str:
        return f"HckElem({self.text()})"


class HckTensor:
    """A finite rational-linear combination of forest pairs."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[Forest, Forest], Scalar] = ()):
        clean = {k: Fraction(c) for k, c in dict(terms).items() if c != 0}
        self.terms: dict[tuple[Forest, Forest], Fraction] = clean

    @staticmethod
    def unit() -> "HckTensor":
        return HckTensor({(EMPTY_FOREST, EMPTY_FOREST): 1})

    def __add__(self, other: "HckTensor") -> "HckTensor":
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return HckTensor(acc)

    def __sub__(self, other: "HckTensor") -> "HckTensor":
        return self + HckTensor({k: -c for k, c in other.terms.items()})

    def tensor_product(self, other: "HckTensor") -> "HckTensor":
        acc: dict[tuple[Forest, Forest], Fraction] = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                key = (l1.union(l2), r1.union(r2))
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return HckTensor(acc)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HckTensor) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = sorted(self.terms.items(), key=lambda kv: (kv[0][0].code, kv[0][1].code))
        return " + ".join(f"{c}*{l.code}(x){r.code}" for (l, r), c in parts)

    def __repr__(self) -> str:
        return f"HckTensor({self.text()})"


def product(x: HckElem, y: HckElem) -> HckElem:
    """Bilinear extension of multiset union of forests."""
    acc: dict[Forest, Fraction] = {}
    for f, c in x.terms.items():
        for g, d in y.terms.items():
            key = f.union(g)
            acc[key] = acc.get(key, Fraction(0)) + c * d
    return HckElem(acc)


@lru_cache(maxsize=None)
def tree_cuts(t: CombTree) -> tuple[tuple[Forest, Forest], ...]:
    """All admissible cuts of ``t`` as (upper forest, lower forest) pairs.

    The lower factor is the root-containing subtree (a one-tree forest) or
    the empty forest for the cut below the root; the upper factor collects
    the connected pieces above the cut.
    """
    # Per child: either cut its root edge (the whole child goes above), or
    # keep its root and recurse on the root-containing cuts of the child.
    child_options: list[list[tuple[Forest, CombTree | None]]] = []
    for c in t.children:
        options: list[tuple[Forest, CombTree | None]] = [(Forest([c]), None)]
        for upper, lower in tree_cuts(c):
            if lower.trees:
                options.append((upper, lower.trees[0]))
        child_options.append(options)

    cuts: list[tuple[Forest, Forest]] = [(Forest([t]), EMPTY_FOREST)]
    for combo in _cartesian(child_options):
        upper_trees: list[CombTree] = []
        kept: list[CombTree] = []
        for upper, lower in combo:
            upper_trees.extend(upper.trees)
            if lower is not None:
                kept.append(lower)
        cuts.append((Forest(upper_trees), Forest([CombTree(kept)])))
    return tuple(cuts)


def _cartesian(option_lists):
    if not option_lists:
        yield ()
        return
    head, *rest = option_lists
    for choice in head:
        for tail in _cartesian(rest):
            yield (choice,) + tail


def coproduct(x: Union[CombTree, Forest, HckElem]) -> HckTensor:
    """Admissible-cut coproduct, extended multiplicatively and linearly."""
    if isinstance(x, CombTree):
        x = HckElem.from_tree(x)
    elif isinstance(x, Forest):
        x = HckElem.from_forest(x)
    acc: dict[tuple[Forest, Forest], Fraction] = {}
    for forest, coeff in x.terms.items():
        for upper, lower in _forest_cuts(forest):
            key = (upper, lower)
            acc[key] = acc.get(key, Fraction(0)) + coeff
    return HckTensor(acc)


@lru_cache(maxsize=None)
def _forest_cuts(f: Forest) -> tuple[tuple[Forest, Forest], ...]:
    pairs: list[tuple[Forest, Forest]] = [(EMPTY_FOREST, EMPTY_FOREST)]
    for t in f.trees:
        pairs = [
            (upper.union(cut_upper), lower.union(cut_lower))
            for upper, lower in pairs
            for cut_upper, cut_lower in tree_cuts(t)
        ]
    return tuple(pairs)


def counit(x: HckElem) -> Fraction:
    """Coefficient of the empty forest."""
    return x.terms.get(EMPTY_FOREST, Fraction(0))


@lru_cache(maxsize=None)
def _antipode_tree(t: CombTree) -> HckElem:
    acc = HckElem.from_tree(t, -1)
    for upper, lower in tree_cuts(t):
        # Proper cuts only: lower nonempty and not the whole tree.
        if not lower.trees or lower.degree == t.node_count:
            continue
        acc = acc - product(antipode(HckElem.from_forest(upper)), HckElem.from_forest(lower))
    return acc


def antipode(x: HckElem) -> HckElem:
    """Convolution inverse of the identity, extended multiplicatively."""
    total = HckElem.zero()
    for forest, coeff in x.terms.items():
        term = HckElem.one()
        for t in forest.trees:
            term = product(term, _antipode_tree(t))
        total = total + term.scale(coeff)
    return total


def bplus(x: HckElem) -> HckElem:
    """Linear extension of grafting a forest under a new root."""
    acc: dict[Forest, Fraction] = {}
    for forest, coeff in x.terms.items():
        key = Forest([graft(forest)])
        acc[key] = acc.get(key, Fraction(0)) + coeff
    return HckElem(acc)


def parse_elem(s: str) -> HckElem:
    """Parse the ``coeff*forest + ...`` text form of an element."""
    s = s.strip()
    if s == "0":
        return HckElem.zero()
    acc: dict[Forest, Fraction] = {}
    for part in s.split(" + "):
        coeff_text, _, forest_text = part.partition("*")
        if not forest_text:
            raise MalformedCode(f"term without forest: {part!r}")
        forest = parse_forest(forest_text)
        acc[forest] = acc.get(forest, Fraction(0)) + Fraction(coeff_text)
    return HckElem(acc)


def _forests_up_to(degree_bound: int) -> list[Forest]:
    out: list[Forest] = []
    for d in range(degree_bound + 1):
        out.extend(sorted(enumerate_forests(d), key=lambda f: f.code))
    return out


def check_cocycle(degree_bound: int) -> CheckReport:
    """Verify the 1-cocycle identity for grafting on all small forests."""
    bad: list[tuple[str, str, str]] = []
    checked = 0
    for f in _forests_up_to(degree_bound):
        checked += 1
        lhs = coproduct(bplus(HckElem.from_forest(f)))
        rhs_terms: dict[tuple[Forest, Forest], Fraction] = {}
        for (upper, lower), c in coproduct(f).terms.items():
            key = (upper, Forest([graft(lower)]))
            rhs_terms[key] = rhs_terms.get(key, Fraction(0)) + c
        rhs = HckTensor(rhs_terms) + HckTensor({(Forest([graft(f)]), EMPTY_FOREST): 1})
        if lhs != rhs:
            bad.append((f.code, rhs.text(), lhs.text()))
    return CheckReport("cocycle", not bad, checked, tuple(bad))


def check_coassociativity(degree_bound: int) -> CheckReport:
    """Verify (coproduct x Id) and (Id x coproduct) agree on small forests."""
    bad: list[tuple[str, str, str]] = []
    checked = 0
    for f in _forests_up_to(degree_bound):
        checked += 1
        left: dict[tuple[Forest, Forest, Forest], Fraction] = {}
        right: dict[tuple[Forest, Forest, Forest], Fraction] = {}
        for (a, b), c in coproduct(f).terms.items():
            for (a1, a2), c2 in coproduct(a).terms.items():
                key = (a1, a2, b)
                left[key] = left.get(key, Fraction(0)) + c * c2
            for (b1, b2), c2 in coproduct(b).terms.items():
                key = (a, b1, b2)
                right[key] = right.get(key, Fraction(0)) + c * c2
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        if left != right:
            bad.append((f.code, "(Id x D)D", "(D x Id)D"))
    return CheckReport("coassociativity", not bad, checked, tuple(bad))


def check_counit(degree_bound: int) -> CheckReport:
    """Verify both counit laws on all small forests."""
    bad: list[tuple[str, str, str]] = []
    checked = 0
    for f in _forests_up_to(degree_bound):
        checked += 1
        left = HckElem.zero()
        right = HckElem.zero()
        for (a, b), c in coproduct(f).terms.items():
            left = left + HckElem.from_forest(b, c * counit(HckElem.from_forest(a)))
            right = right + HckElem.from_forest(a, c * counit(HckElem.from_forest(b)))
        expected = HckElem.from_forest(f)
        if left != expected or right != expected:
            bad.append((f.code, expected.text(), f"left={left.text()} right={right.text()}"))
    return CheckReport("counit", not bad, checked, tuple(bad))


def check_antipode(degree_bound: int) -> CheckReport:
    """Verify m(S x Id)coproduct = unit*counit on all small forests."""
    bad: list[tuple[str, str, str]] = []
    checked = 0
    for f in _forests_up_to(degree_bound):
        checked += 1
        acc = HckElem.zero()
        for (a, b), c in coproduct(f).terms.items():
            acc = acc + product(antipode(HckElem.from_forest(a)), HckElem.from_forest(b)).scale(c)
        expected = HckElem.one() if f == EMPTY_FOREST else HckElem.zero()
        if acc != expected:
            bad.append((f.code, expected.text(), acc.text()))
    return CheckReport("antipode", not bad, checked, tuple(bad))

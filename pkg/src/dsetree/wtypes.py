"""Structural recursion over decorated trees, with law checking.

A fold algebra interprets the bare edge by a fixed carrier value and every
operation by a function of its slot values; the fold is the unique map out
of the tree type compatible with that data.  The checks here verify the
computation rules, agreement of rule-abiding candidates with the fold, and
the stage-wise bijectivity of the fixpoint structure map.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Any, Callable, Mapping

from .errors import ArityMismatch
from .ptrees import NIL, PTree, Signature, enumerate_by_nodes, kleene_layer
from .report import CheckReport


@dataclass(frozen=True)
class FoldAlgebra:
    """A nil value plus one interpretation function per operation name."""

    nil_value: Any
    interp: Mapping[str, Callable[..., Any]]

    def apply(self, op_name: str, values: list[Any]) -> Any:
        return self.interp[op_name](*values)


def fold(sig: Signature, alg: FoldAlgebra, t: PTree) -> Any:
    """Evaluate the algebra over ``t`` bottom-up.

    Uses an explicit work stack so deep inputs cannot exhaust the call stack.
    """
    # Post-order traversal: second visit pops the children's values.
    work: list[tuple[PTree, bool]] = [(t, False)]
    values: list[Any] = []
    while work:
        node, expanded = work.pop()
        if node.is_nil():
            values.append(alg.nil_value)
            continue
        if node.op.name not in alg.interp:
            raise ArityMismatch(f"no interpretation for operation {node.op.name}")
        if not expanded:
            work.append((node, True))
            for child in reversed(node.children):
                work.append((child, False))
        else:
            arity = node.op.arity
            args = values[len(values) - arity :] if arity else []
            del values[len(values) - arity :]
            values.append(alg.apply(node.op.name, args))
    return values[0]


def _trees_up_to(sig: Signature, bound: int) -> list[PTree]:
    out: list[PTree] = []
    for n in range(bound + 1):
        out.extend(enumerate_by_nodes(sig, n))
    return out


def check_computation_rules(
    sig: Signature,
    alg: FoldAlgebra,
    bound: int,
    evaluator: Callable[[Signature, FoldAlgebra, PTree], Any] | None = None,
) -> CheckReport:
    """Verify both computation rules on every tree up to the node bound.

    ``evaluator`` defaults to :func:`fold`; passing another evaluator turns
    this into a conformance test for it.
    """
    ev = evaluator or fold
    bad: list[tuple[str, str, str]] = []
    checked = 0
    for t in _trees_up_to(sig, bound):
        checked += 1
        actual = ev(sig, alg, t)
        if t.is_nil():
            expected = alg.nil_value
        else:
            expected = alg.apply(t.op.name, [ev(sig, alg, c) for c in t.children])
        if actual != expected:
            bad.append((t.code, repr(expected), repr(actual)))
    return CheckReport("computation rules", not bad, checked, tuple(bad))


def check_fold_uniqueness(
    sig: Signature,
    alg: FoldAlgebra,
    candidate: Callable[[PTree], Any],
    bound: int,
) -> CheckReport:
    """Verify that a rule-abiding candidate agrees with the fold.

    Reports any tree where the candidate breaks a computation rule, and any
    tree where it disagrees with the fold; with no rule violations the
    agreement is forced by induction on node count.
    """
    bad: list[tuple[str, str, str]] = []
    checked = 0
    for t in _trees_up_to(sig, bound):
        checked += 1
        got = candidate(t)
        if t.is_nil():
            expected = alg.nil_value
        else:
            expected = alg.apply(t.op.name, [candidate(c) for c in t.children])
        if got != expected:
            bad.append((t.code, repr(expected), repr(got)))
            continue
        reference = fold(sig, alg, t)
        if got != reference:
            bad.append((t.code, repr(reference), repr(got)))
    return CheckReport("fold uniqueness", not bad, checked, tuple(bad))


def lambek_check(sig: Signature, k: int) -> CheckReport:
    """Confirm the structure map from stage ``k`` data onto stage ``k+1``.

    Builds the disjoint union ``1 + P(X_k)`` explicitly and checks that
    forming trees from it is a bijection onto ``X_{k+1}``.
    """
    layer_k = kleene_layer(sig, k)
    layer_next = kleene_layer(sig, k + 1)
    bad: list[tuple[str, str, str]] = []
    domain_size = 1
    image: set[PTree] = {NIL}
    for op in sig.ops:
        domain_size += len(layer_k) ** op.arity
        for kids in iproduct(sorted(layer_k), repeat=op.arity):
            image.add(PTree(op, kids))
    if len(image) != domain_size:
        bad.append(("structure map", f"{domain_size} distinct images", str(len(image))))
    if image != layer_next:
        missing = sorted(t.code for t in layer_next - image)[:3]
        extra = sorted(t.code for t in image - layer_next)[:3]
        bad.append(("image", f"stage {k + 1} ({len(layer_next)} trees)",
                    f"missing={missing} extra={extra}"))
    return CheckReport(f"fixpoint stage {k}", not bad, domain_size, tuple(bad))

"""Order-by-order solver for tree-valued fixpoint equations.

Equations have the shape ``X = 1 + sum_t w * alpha^a * B+(X^m)`` with the
grafting operator as the constructor; the solution is a truncated formal
series in the coupling ``alpha`` with forest-combination coefficients,
computed by induction on the order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidSpec, OrderExceeded
from .hopf import HckElem, bplus, product

MAX_ORDER = 10


@dataclass(frozen=True)
class DSETerm:
    """One summand ``w * alpha^a * B+(X^m)`` of a fixpoint equation."""

    alpha_power: int
    coeff: Fraction
    x_power: int

    def __post_init__(self) -> None:
        if self.alpha_power < 1:
            raise InvalidSpec("alpha_power must be at least 1")
        if self.x_power < 0:
            raise InvalidSpec("x_power must be nonnegative")


@dataclass(frozen=True)
class DSESpec:
    terms: tuple[DSETerm, ...]
    order: int
    name: str = ""

    def __post_init__(self) -> None:
        if not 0 <= self.order <= MAX_ORDER:
            raise InvalidSpec(f"order must lie in 0..{MAX_ORDER}")


@dataclass(frozen=True)
class Series:
    """Truncated series: ``coeffs[k]`` is the alpha^k coefficient."""

    coeffs: tuple[HckElem, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def text(self) -> str:
        return "\n".join(f"c_{k} = {c.text()}" for k, c in enumerate(self.coeffs))


def series_coefficient(s: Series, k: int) -> HckElem:
    if not 0 <= k <= s.order:
        raise OrderExceeded(f"coefficient {k} beyond truncation order {s.order}")
    return s.coeffs[k]


def series_power(s: Series, m: int, j: int) -> HckElem:
    """Degree-``j`` coefficient of the ``m``-th power of ``s``."""
    if not 0 <= j <= s.order:
        raise OrderExceeded(f"coefficient {j} beyond truncation order {s.order}")
    return _power_coefficient(s.coeffs, m, j)


def _power_coefficient(coeffs: tuple[HckElem, ...], m: int, j: int) -> HckElem:
    # Convolution over compositions of j into m parts, built iteratively.
    current = [HckElem.one()] + [HckElem.zero()] * j
    for _ in range(m):
        nxt = [HckElem.zero()] * (j + 1)
        for a in range(j + 1):
            if current[a].is_zero():
                continue
            for b in range(j + 1 - a):
                if coeffs[b].is_zero():
                    continue
                nxt[a + b] = nxt[a + b] + product(current[a], coeffs[b])
        current = nxt
    return current[j]


def solve(spec: DSESpec) -> Series:
    """Unique order-by-order solution of the fixpoint equation."""
    coeffs: list[HckElem] = [HckElem.one()]
    for k in range(1, spec.order + 1):
        c_k = HckElem.zero()
        partial = tuple(coeffs) + (HckElem.zero(),)
        for term in spec.terms:
            j = k - term.alpha_power
            if j < 0:
                continue
            c_k = c_k + bplus(_power_coefficient(partial, term.x_power, j)).scale(term.coeff)
        coeffs.append(c_k)
    return Series(tuple(coeffs))


def residual(spec: DSESpec, s: Series) -> list[HckElem]:
    """Per-order difference between ``s`` and the equation's right-hand side."""
    out = []
    for k in range(s.order + 1):
        rhs = HckElem.one() if k == 0 else HckElem.zero()
        for term in spec.terms:
            j = k - term.alpha_power
            if j < 0:
                continue
            rhs = rhs + bplus(_power_coefficient(s.coeffs, term.x_power, j)).scale(term.coeff)
        out.append(s.coeffs[k] - rhs)
    return out


def linear_spec(order: int) -> DSESpec:
    """``X = 1 + alpha B+(X)`` (the ladder equation)."""
    return DSESpec((DSETerm(1, Fraction(1), 1),), order, name="linear")


def quadratic_spec(order: int) -> DSESpec:
    """``X = 1 + alpha B+(X^2)``."""
    return DSESpec((DSETerm(1, Fraction(1), 2),), order, name="quadratic")


def geometric_spec(order: int) -> DSESpec:
    """``X = 1 + sum_{n>=1} alpha^n B+(X^{n+1})`` truncated at the order."""
    terms = tuple(DSETerm(n, Fraction(1), n + 1) for n in range(1, max(order, 1) + 1))
    return DSESpec(terms, order, name="geometric")


BUILTIN_SPECS = {
    "linear": linear_spec,
    "quadratic": quadratic_spec,
    "geometric": geometric_spec,
}


def spec_from_dict(data: dict, name: str = "") -> DSESpec:
    try:
        terms = tuple(
            DSETerm(int(t["alpha_power"]), Fraction(str(t["coeff"])), int(t["x_power"]))
            for t in data["terms"]
        )
        order = int(data["order"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSpec(f"malformed equation document: {exc}") from exc
    return DSESpec(terms, order, name=name)


def load_spec(path: str) -> DSESpec:
    """Load an equation from a JSON document with ``terms`` and ``order``."""
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidSpec(f"cannot parse {path}: {exc}") from exc
    return spec_from_dict(data, name=path)


def series_to_dict(spec: DSESpec, s: Series) -> dict:
    """Machine-readable dump mirroring the text form."""
    return {
        "spec": spec.name or "custom",
        "order": s.order,
        "coefficients": [
            {
                "k": k,
                "terms": [
                    {"coeff": str(coeff), "forest": forest.code}
                    for forest, coeff in sorted(c.terms.items(), key=lambda kv: kv[0].code)
                ],
            }
            for k, c in enumerate(s.coeffs)
        ],
    }

"""Symbolic per-case eigenvalue tables for small-order elementary operators.

For orders 2 and 3 every tuple (i1,...,im) falls into one of a handful of
relative-order cases, and the shifted eigenvalue of each case is a short
product of linear forms in the symbols a_{ij}, (n+1)/2 and ij.  This
module generates those rows from representative tuples, renders them, and
can instantiate any row at concrete indices and rank for exact checking.

One order-3 case ("i1 < i2 = i3") circulates in print with a different
closed form than the one exact computation gives; that row carries both
values and a discrepancy marker, and neither is silently adopted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .ratpoly import MPoly, alpha, format_rat
from .tuplegraph import INF, IndexTuple, enumerate_proper_cycles, relative_order


@dataclass(frozen=True)
class LinForm:
    """Linear form c_a . a_{ij} + c_h . (n+1)/2 + c_i . ij + const, per position j."""

    m: int
    alphas: tuple[Fraction, ...]
    half: Fraction
    indices: tuple[Fraction, ...]
    const: Fraction

    @classmethod
    def zero(cls, m: int) -> LinForm:
        z = (Fraction(0),) * m
        return cls(m, z, Fraction(0), z, Fraction(0))

    @classmethod
    def constant(cls, m: int, value) -> LinForm:
        z = (Fraction(0),) * m
        return cls(m, z, Fraction(0), z, Fraction(value))

    @classmethod
    def shifted_at(cls, m: int, j: int) -> LinForm:
        """The shifted parameter at position j: a_{ij} + (n+1)/2 - ij."""
        alphas = tuple(Fraction(1 if k == j else 0) for k in range(1, m + 1))
        indices = tuple(Fraction(-1 if k == j else 0) for k in range(1, m + 1))
        return cls(m, alphas, Fraction(1), indices, Fraction(0))

    def _map(self, fn) -> LinForm:
        return LinForm(
            self.m,
            tuple(fn(c) for c in self.alphas),
            fn(self.half),
            tuple(fn(c) for c in self.indices),
            fn(self.const),
        )

    def __neg__(self) -> LinForm:
        return self._map(lambda c: -c)

    def __add__(self, other) -> LinForm:
        if isinstance(other, (int, Fraction)):
            other = LinForm.constant(self.m, other)
        if self.m != other.m:
            raise ValueError("mixed arities")
        return LinForm(
            self.m,
            tuple(a + b for a, b in zip(self.alphas, other.alphas)),
            self.half + other.half,
            tuple(a + b for a, b in zip(self.indices, other.indices)),
            self.const + other.const,
        )

    def __sub__(self, other) -> LinForm:
        if isinstance(other, (int, Fraction)):
            other = LinForm.constant(self.m, other)
        return self + (-other)

    def _coefficients(self) -> tuple[Fraction, ...]:
        return self.alphas + (self.half,) + self.indices + (self.const,)

    def leading_sign(self) -> int:
        for c in self._coefficients():
            if c:
                return 1 if c > 0 else -1
        return 0

    def evaluate(self, entries: Sequence[int], n: int) -> MPoly:
        """Instantiate at concrete 1-based indices and rank."""
        if len(entries) != self.m:
            raise ValueError(f"need {self.m} indices, got {len(entries)}")
        out = MPoly.const(n, self.const + self.half * Fraction(n + 1, 2))
        for j, (ca, ci) in enumerate(zip(self.alphas, self.indices)):
            if ca:
                out = out + ca * alpha(entries[j], n)
            if ci:
                out = out + ci * entries[j]
        return out

    def render(self) -> str:
        labels = (
            [f"a_i{j}" for j in range(1, self.m + 1)]
            + ["(n+1)/2"]
            + [f"i{j}" for j in range(1, self.m + 1)]
            + [""]
        )
        pieces = []
        for c, label in zip(self._coefficients(), labels):
            if not c:
                continue
            mag = format_rat(abs(c))
            body = label if (abs(c) == 1 and label) else (f"{mag}*{label}" if label else mag)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces) if pieces else "0"


@dataclass(frozen=True)
class FactoredValue:
    """sign * product of normalized linear factors with multiplicities."""

    sign: int
    factors: tuple[tuple[LinForm, int], ...]

    @classmethod
    def from_factors(cls, factors: Sequence[LinForm], sign: int = 1) -> FactoredValue:
        normalized = []
        for f in factors:
            if f.leading_sign() < 0:
                f = -f
                sign = -sign
            normalized.append(f)
        normalized.sort(key=lambda f: f._coefficients())
        grouped: list[tuple[LinForm, int]] = []
        for f in normalized:
            if grouped and grouped[-1][0] == f:
                grouped[-1] = (f, grouped[-1][1] + 1)
            else:
                grouped.append((f, 1))
        return cls(sign=sign, factors=tuple(grouped))

    def evaluate(self, entries: Sequence[int], n: int) -> MPoly:
        out = MPoly.const(n, self.sign)
        for form, mult in self.factors:
            out = out * form.evaluate(entries, n) ** mult
        return out

    def render(self) -> str:
        if not self.factors:
            return str(self.sign)
        if len(self.factors) == 1 and self.factors[0][1] == 1:
            form = self.factors[0][0] if self.sign > 0 else -self.factors[0][0]
            return form.render()
        body = "*".join(
            f"({form.render()})" + (f"^{mult}" if mult > 1 else "")
            for form, mult in self.factors
        )
        return body if self.sign > 0 else f"-{body}"


def symbolic_shifted_eigenvalue(representative: tuple[int, ...]) -> FactoredValue:
    """Factored shifted eigenvalue of a relative-order case, from its minimal tuple.

    The representative must use values 1..ell (ranks); each proper cycle
    of its closed tuple contributes one factor, with cycle values mapped
    back to position symbols through the first position of each rank.
    """
    m = len(representative)
    t = IndexTuple(representative, max(representative))
    order = relative_order(t)
    if order.values != tuple(range(1, order.ell + 1)):
        raise ValueError("representative must use the values 1..ell")
    factors = []
    for cycle in enumerate_proper_cycles(t):
        factor = -LinForm.shifted_at(m, order.sigma[cycle.v1 - 1])
        if cycle.v2 != INF:
            factor = factor + LinForm.shifted_at(m, order.sigma[int(cycle.v2) - 1])
        if cycle.base > representative[0]:
            factor = factor + 1
        factors.append(factor)
    sign = -1 if m % 2 else 1  # alternating convention
    return FactoredValue.from_factors(factors, sign=sign)


@dataclass(frozen=True)
class TableRow:
    """One relative-order case: label, predicate, and its symbolic value.

    ``computed`` is None for the zero cases.  ``variant`` holds a second,
    historically printed closed form when it disagrees with the computed
    one; rows with a variant must never be summarized by either value
    alone.
    """

    label: str
    matches: Callable[[tuple[int, ...]], bool]
    computed: FactoredValue | None
    variant: FactoredValue | None = None

    def evaluate(self, entries: Sequence[int], n: int) -> MPoly:
        if self.computed is None:
            return MPoly.zero(n)
        return self.computed.evaluate(entries, n)

    @property
    def discrepancy(self) -> bool:
        return self.variant is not None


def _printed_order3_variant() -> FactoredValue:
    # The circulated form for "i1 < i2 = i3": (b1 - b2) * (1 - b1) in the
    # shifted parameters, versus the computed (b1 - b2) * (1 - b2).
    b1 = LinForm.shifted_at(3, 1)
    b2 = LinForm.shifted_at(3, 2)
    one = LinForm.constant(3, 1)
    return FactoredValue.from_factors([b1 - b2, one - b1])


def order2_rows() -> list[TableRow]:
    return [
        TableRow("i1 > i2", lambda e: e[0] > e[1], None),
        TableRow("i1 = i2", lambda e: e[0] == e[1], symbolic_shifted_eigenvalue((1, 1))),
        TableRow("i1 < i2", lambda e: e[0] < e[1], symbolic_shifted_eigenvalue((1, 2))),
    ]


def order3_rows() -> list[TableRow]:
    return [
        TableRow("i1 > i2", lambda e: e[0] > e[1], None),
        TableRow("i1 > i3", lambda e: e[0] > e[2], None),
        TableRow(
            "i1 < i2 < i3",
            lambda e: e[0] < e[1] < e[2],
            symbolic_shifted_eigenvalue((1, 2, 3)),
        ),
        TableRow(
            "i1 < i3 < i2",
            lambda e: e[0] < e[2] < e[1],
            symbolic_shifted_eigenvalue((1, 3, 2)),
        ),
        TableRow(
            "i1 = i2 < i3",
            lambda e: e[0] == e[1] < e[2],
            symbolic_shifted_eigenvalue((1, 1, 2)),
        ),
        TableRow(
            "i1 = i3 < i2",
            lambda e: e[0] == e[2] < e[1],
            symbolic_shifted_eigenvalue((1, 2, 1)),
        ),
        TableRow(
            "i1 < i2 = i3",
            lambda e: e[0] < e[1] == e[2],
            symbolic_shifted_eigenvalue((1, 2, 2)),
            variant=_printed_order3_variant(),
        ),
        TableRow(
            "i1 = i2 = i3",
            lambda e: e[0] == e[1] == e[2],
            symbolic_shifted_eigenvalue((1, 1, 1)),
        ),
    ]


def eigenvalue_table(m: int) -> list[TableRow]:
    if m == 2:
        return order2_rows()
    if m == 3:
        return order3_rows()
    raise ValueError("symbolic tables exist for m = 2 and m = 3 only")


def classify(m: int, entries: tuple[int, ...]) -> TableRow:
    """First matching row for a concrete tuple (rows are checked in order)."""
    if len(entries) != m:
        raise ValueError(f"tuple {entries} has length != {m}")
    for row in eigenvalue_table(m):
        if row.matches(entries):
            return row
    raise AssertionError(f"no case covers {entries}")  # the cases are exhaustive

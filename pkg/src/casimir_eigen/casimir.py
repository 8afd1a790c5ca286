"""Casimir-operator eigenvalues: full sums, pattern compression, closed forms.

The order-m Casimir operator is the sum of all elementary operators over
tuples in {1..n}^m, so its eigenvalue is the corresponding sum of
proper-cycle products.  Because an elementary eigenvalue depends only on
the relative ordering of its tuple, the sum can be grouped by
order-isomorphism class: one cycle analysis per pattern, then one
substitution per choice of actual values.  Both routes produce identical
exact polynomials; the patterned one just evaluates far fewer formulas.

This module also hosts the cross-validation driver that compares the
fast proper-cycle path against the jet oracle tuple by tuple, under both
sign conventions and in both the plain and rho-shifted modes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .jetoracle import build_inverse_matrix, eigenvalue_from_norms, gram_schmidt_norms
from .ratpoly import ClosedForm, MPoly, alpha, interpolate_in_n, to_power_sum
from .tuplegraph import (
    INF,
    IndexTuple,
    SignConvention,
    elementary_eigenvalue,
    enumerate_proper_cycles,
    relative_order,
    shifted_parameter,
)

BASES = ("monomial", "power-sum")


@dataclass(frozen=True)
class CasimirRequest:
    """What to compute: order m, rank n, shift/sign/basis options."""

    m: int
    n: int
    shifted: bool = True
    basis: str = "monomial"
    sign: SignConvention = SignConvention.ALTERNATING

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("order m must be >= 1")
        if self.n < 1:
            raise ValueError("rank n must be >= 1")
        if self.basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}")

    @property
    def outside_standard_range(self) -> bool:
        """True when m > n; permitted experimentally but labeled in output."""
        return self.m > self.n


def _parameter_table(n: int, shifted: bool) -> list[MPoly | None]:
    table: list[MPoly | None] = [None]
    for v in range(1, n + 1):
        table.append(shifted_parameter(v, n) if shifted else alpha(v, n))
    return table


def casimir_eigenvalue(req: CasimirRequest) -> MPoly:
    """Sum of elementary eigenvalues over all of {1..n}^m (the naive route)."""
    acc: dict[tuple[int, ...], Fraction] = {}
    for entries in itertools.product(range(1, req.n + 1), repeat=req.m):
        if min(entries) < entries[0]:
            continue  # zero branch
        value = elementary_eigenvalue(IndexTuple(entries, req.n), shifted=req.shifted, sign=req.sign)
        for exps, coeff in value.terms.items():
            acc[exps] = acc.get(exps, Fraction(0)) + coeff
    return MPoly(req.n, acc)


def _rank_patterns(m: int, max_ell: int) -> list[tuple[int, ...]]:
    """All rank tuples: surjections from positions onto {1..ell}, ell <= max_ell."""
    patterns = []
    for ell in range(1, min(m, max_ell) + 1):
        for candidate in itertools.product(range(1, ell + 1), repeat=m):
            if len(set(candidate)) == ell:
                patterns.append(candidate)
    return patterns


def casimir_eigenvalue_patterned(req: CasimirRequest) -> MPoly:
    """Same sum as casimir_eigenvalue, grouped by relative-order pattern.

    Proper cycles are enumerated once per pattern; each member of the
    class is then a plain substitution of its distinct values into the
    pattern's factor structure.  Zero patterns (some rank below the
    first) are skipped wholesale.
    """
    n, m = req.n, req.m
    params = _parameter_table(n, req.shifted)
    negate = req.sign is SignConvention.ALTERNATING and m % 2 == 1
    acc: dict[tuple[int, ...], Fraction] = {}
    for pattern in _rank_patterns(m, n):
        if min(pattern) < pattern[0]:
            continue
        ell = max(pattern)
        structure = [
            (cycle.v1, cycle.v2, cycle.base > pattern[0])
            for cycle in enumerate_proper_cycles(IndexTuple(pattern, ell))
        ]
        for values in itertools.combinations(range(1, n + 1), ell):
            product = MPoly.one(n)
            for v1_rank, v2_rank, plus_one in structure:
                factor = -params[values[v1_rank - 1]]
                if v2_rank != INF:
                    factor = factor + params[values[v2_rank - 1]]
                if plus_one:
                    factor = factor + 1
                product = product * factor
            if negate:
                product = -product
            for exps, coeff in product.terms.items():
                acc[exps] = acc.get(exps, Fraction(0)) + coeff
    return MPoly(n, acc)


def closed_form(m: int) -> ClosedForm:
    """Eigenvalue of the order-m Casimir operator with rank n left symbolic.

    Computes the shifted sum exactly for n = m .. 2m+2, reduces each to
    the power-sum basis, and interpolates every partition coefficient as
    a polynomial in n of degree at most m+1.  The result reproduces each
    sampled rank exactly (interpolate_in_n enforces this).
    """
    if m < 1:
        raise ValueError("order m must be >= 1")
    samples = []
    for n in range(m, 2 * m + 3):
        request = CasimirRequest(m=m, n=n)
        samples.append((n, to_power_sum(casimir_eigenvalue_patterned(request), n)))
    return interpolate_in_n(samples, degree_bound=m + 1)


# -- fast path vs oracle -----------------------------------------------------


@dataclass(frozen=True)
class Exhaustive:
    """Verify every tuple in {1..n}^m."""


@dataclass(frozen=True)
class RandomSample:
    """Verify a seeded random sample of distinct tuples."""

    count: int
    seed: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("sample count must be >= 1")


Selection = Exhaustive | RandomSample


@dataclass(frozen=True)
class TupleComparison:
    """One tuple's fast values against the oracle, in both modes."""

    entries: tuple[int, ...]
    oracle_raw: MPoly
    oracle_shifted: MPoly
    fast_raw: MPoly  # alternating convention
    fast_shifted: MPoly
    match_literal: bool
    match_alternating: bool

    @property
    def is_zero(self) -> bool:
        return not self.oracle_raw and not self.oracle_shifted


@dataclass(frozen=True)
class VerifyReport:
    """Tally of fast-vs-oracle comparisons for one (m, n) selection."""

    m: int
    n: int
    selection: str
    records: tuple[TupleComparison, ...]

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def zero(self) -> int:
        return sum(1 for r in self.records if r.is_zero)

    @property
    def match_literal(self) -> int:
        return sum(1 for r in self.records if r.match_literal)

    @property
    def match_alternating(self) -> int:
        return sum(1 for r in self.records if r.match_alternating)

    @property
    def mismatches(self) -> list[tuple[int, ...]]:
        """Tuples matching under neither convention."""
        return [r.entries for r in self.records if not (r.match_literal or r.match_alternating)]

    def consistent_convention(self) -> str | None:
        """The convention matching every nonzero tuple, if there is one.

        Returns "both" when literal and alternating agree everywhere
        (always the case for even m), otherwise the single surviving
        convention, otherwise None.
        """
        nonzero = [r for r in self.records if not r.is_zero]
        literal = all(r.match_literal for r in nonzero)
        alternating = all(r.match_alternating for r in nonzero)
        if literal and alternating:
            return "both"
        if alternating:
            return "alternating"
        if literal:
            return "literal"
        return None


def _select_tuples(m: int, n: int, selection: Selection) -> tuple[list[tuple[int, ...]], str]:
    total = n**m
    if isinstance(selection, Exhaustive):
        return list(itertools.product(range(1, n + 1), repeat=m)), "exhaustive"
    label = f"random(count={selection.count}, seed={selection.seed})"
    if selection.count >= total:
        return list(itertools.product(range(1, n + 1), repeat=m)), label
    rng = random.Random(selection.seed)
    if total <= 200_000:
        population = list(itertools.product(range(1, n + 1), repeat=m))
        return sorted(rng.sample(population, selection.count)), label
    chosen: set[tuple[int, ...]] = set()
    while len(chosen) < selection.count:
        chosen.add(tuple(rng.randint(1, n) for _ in range(m)))
    return sorted(chosen), label


def verify_tuples(m: int, n: int, selection: Selection) -> VerifyReport:
    """Compare the proper-cycle product against the jet oracle, tuple by tuple.

    Each tuple is checked in both the plain and the rho-shifted mode, so
    a convention only counts as matching when it reproduces the oracle in
    both.  Gram norms are computed once per tuple and shared between the
    two extractions.
    """
    tuples, label = _select_tuples(m, n, selection)
    records = []
    for entries in tuples:
        t = IndexTuple(entries, n)
        norms = gram_schmidt_norms(build_inverse_matrix(t))
        order = relative_order(t)
        oracle_raw = eigenvalue_from_norms(norms, order, t, False)
        oracle_shifted = eigenvalue_from_norms(norms, order, t, True)
        fast_raw = elementary_eigenvalue(t, shifted=False, sign=SignConvention.ALTERNATING)
        fast_shifted = elementary_eigenvalue(t, shifted=True, sign=SignConvention.ALTERNATING)
        flip = -1 if m % 2 else 1
        records.append(
            TupleComparison(
                entries=entries,
                oracle_raw=oracle_raw,
                oracle_shifted=oracle_shifted,
                fast_raw=fast_raw,
                fast_shifted=fast_shifted,
                match_literal=(flip * fast_raw == oracle_raw and flip * fast_shifted == oracle_shifted),
                match_alternating=(fast_raw == oracle_raw and fast_shifted == oracle_shifted),
            )
        )
    return VerifyReport(m=m, n=n, selection=label, records=tuple(records))

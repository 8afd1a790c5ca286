"""Index-tuple combinatorics: proper cycles, fast eigenvalues, graph paths.

An elementary differential operator of order m is selected by a tuple
(i1,...,im) with entries in 1..n.  Everything here works on the closed
tuple I = (i1,...,im,i1) and on the directed, edge-ordered multigraph
whose j-th edge runs from i_j to i_{j+1}.

The fast eigenvalue path is a product of one linear factor per proper
cycle of I (a contiguous sub-list with equal endpoints strictly smaller
than all interior entries).  Its sign convention is deliberately
configurable: the product as usually printed disagrees with direct
computation by (-1)^m, and the jet oracle arbitrates (see jetoracle).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .ratpoly import MPoly, alpha

# Marker for "no second minimum": the cycle's value set is a singleton.
# A float cannot collide with a genuine parameter index, and the
# substitution x_INF -> 0 happens at factor construction.
INF = float("inf")


class SignConvention(enum.Enum):
    """How to sign the proper-cycle product.

    LITERAL takes the product as printed; ALTERNATING multiplies by
    (-1)^m, which is what direct differentiation gives.  The two agree
    for even m.
    """

    LITERAL = "literal"
    ALTERNATING = "alternating"


@dataclass(frozen=True)
class IndexTuple:
    """The tuple (i1,...,im) with ambient rank n; entries are 1-based."""

    entries: tuple[int, ...]
    n: int

    def __post_init__(self):
        if len(self.entries) < 1:
            raise ValueError("index tuple needs at least one entry")
        if self.n < 1:
            raise ValueError("rank n must be >= 1")
        for i in self.entries:
            if not 1 <= i <= self.n:
                raise ValueError(f"entry {i} outside 1..{self.n}")
        object.__setattr__(self, "entries", tuple(self.entries))

    @property
    def m(self) -> int:
        return len(self.entries)

    def closed(self) -> tuple[int, ...]:
        """The closed tuple I = (i1,...,im,i1)."""
        return self.entries + (self.entries[0],)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> IndexTuple:
        """Parse comma-separated entries, e.g. ``"1,9,2,5,5,9,6,8,4,5"``.

        Without an explicit rank, n defaults to the largest entry.
        """
        try:
            entries = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse index tuple from {text!r}") from None
        if not entries:
            raise ValueError("empty index tuple")
        return cls(entries, max(entries) if n is None else n)

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.entries)


@dataclass(frozen=True)
class RelOrder:
    """Relative ordering of the tuple's entries.

    rho[j-1] is the rank of entry j among the distinct values (1-based),
    sigma[v-1] the least position carrying rank v, and values[v-1] the
    actual value of rank v.
    """

    ell: int
    rho: tuple[int, ...]
    sigma: tuple[int, ...]
    values: tuple[int, ...]


def relative_order(t: IndexTuple) -> RelOrder:
    distinct = sorted(set(t.entries))
    rank = {v: r for r, v in enumerate(distinct, start=1)}
    rho = tuple(rank[i] for i in t.entries)
    sigma = [0] * len(distinct)
    for pos, r in enumerate(rho, start=1):
        if sigma[r - 1] == 0:
            sigma[r - 1] = pos
    return RelOrder(ell=len(distinct), rho=rho, sigma=tuple(sigma), values=tuple(distinct))


def min_pair(values: Sequence[int]) -> tuple[int, int | float]:
    """First and second minimum of the value set; v2 is INF for singletons."""
    if not values:
        raise ValueError("min_pair needs a non-empty sequence")
    distinct = set(values)
    v1 = min(distinct)
    rest = distinct - {v1}
    return v1, (min(rest) if rest else INF)


@dataclass(frozen=True)
class CycleRecord:
    """A cycle of I between consecutive occurrences of its base value.

    Positions are 1-based indices into the closed tuple, with
    start_pos < end_pos and I[start_pos] = I[end_pos] = base.
    """

    start_pos: int
    end_pos: int
    base: int
    proper: bool
    v1: int
    v2: int | float
    sublist: tuple[int, ...]


@dataclass(frozen=True)
class ProperCycle:
    """One factor of the fast eigenvalue product: base = v1 by construction."""

    start_pos: int
    end_pos: int
    base: int
    v1: int
    v2: int | float


def enumerate_cycles(t: IndexTuple) -> list[CycleRecord]:
    """All cycles between consecutive occurrences of a value, by start position.

    Non-consecutive occurrence pairs are never proper (the base value
    reappears in the interior), so this diagnostic listing is exactly the
    cycle table one writes down when working a tuple by hand.
    """
    closed = t.closed()
    positions: dict[int, list[int]] = {}
    for pos, value in enumerate(closed, start=1):
        positions.setdefault(value, []).append(pos)
    records = []
    for value, plist in positions.items():
        for p, q in zip(plist, plist[1:]):
            sub = closed[p - 1 : q]
            v1, v2 = min_pair(sub)
            records.append(
                CycleRecord(
                    start_pos=p,
                    end_pos=q,
                    base=value,
                    proper=all(x > value for x in sub[1:-1]),
                    v1=v1,
                    v2=v2,
                    sublist=sub,
                )
            )
    records.sort(key=lambda r: (r.start_pos, r.end_pos))
    return records


def enumerate_proper_cycles(t: IndexTuple) -> list[ProperCycle]:
    """The proper cycles of I = (i1,...,im,i1), in order of start position."""
    return [
        ProperCycle(start_pos=r.start_pos, end_pos=r.end_pos, base=r.base, v1=r.v1, v2=r.v2)
        for r in enumerate_cycles(t)
        if r.proper
    ]


def shifted_parameter(value: int, n: int) -> MPoly:
    """a_value + (n+1)/2 - value, the rho-shifted Langlands parameter."""
    return alpha(value, n) + Fraction(n + 1, 2) - value


def _parameter(value: int | float, n: int, shifted: bool) -> MPoly:
    if value == INF:
        return MPoly.zero(n)
    assert isinstance(value, int)
    return shifted_parameter(value, n) if shifted else alpha(value, n)


def elementary_eigenvalue(
    t: IndexTuple,
    shifted: bool = False,
    sign: SignConvention = SignConvention.ALTERNATING,
) -> MPoly:
    """Eigenvalue of the elementary operator for the tuple, as a polynomial.

    Zero whenever some entry is smaller than i1.  Otherwise the product
    over proper cycles of (-x_{v1} + x_{v2}), with +1 added for cycles
    whose base exceeds i1; x is the plain parameter or its rho-shift, and
    x_INF = 0 in either mode.  ALTERNATING multiplies by (-1)^m.
    """
    n = t.n
    i1 = t.entries[0]
    if any(i < i1 for i in t.entries):
        return MPoly.zero(n)
    result = MPoly.one(n)
    for cyc in enumerate_proper_cycles(t):
        factor = -_parameter(cyc.v1, n, shifted) + _parameter(cyc.v2, n, shifted)
        if cyc.base > i1:
            factor = factor + 1
        result = result * factor
    if sign is SignConvention.ALTERNATING and t.m % 2:
        result = -result
    return result


def _edge_ends(t: IndexTuple) -> tuple[tuple[int, ...], tuple[int, ...]]:
    closed = t.closed()
    return closed[:-1], closed[1:]  # tails, heads of edges 1..m


def edge_kinds(t: IndexTuple) -> tuple[bool, ...]:
    """Loop flag per edge j = 1..m: True when i_j = i_{j+1}.

    Loop edges carry weight -t_j/(1+t_j), plain edges -t_j.  The two
    coincide once t_j^2 = 0, and both have derivative -1 at the origin,
    which is why the matrix builder and path counting treat them alike.
    """
    tails, heads = _edge_ends(t)
    return tuple(a == b for a, b in zip(tails, heads))


def enumerate_paths(t: IndexTuple, v: int, w: int) -> list[tuple[int, ...]]:
    """All edge subsets that chain from v to w traversing edges in increasing order.

    A subset {j1 < ... < jk} qualifies when edge j1 starts at v, each
    edge starts where the previous one ended, and edge jk ends at w.  The
    empty subset counts as a path exactly when v = w.
    """
    tails, heads = _edge_ends(t)
    m = t.m
    found: list[tuple[int, ...]] = []

    def extend(u: int, next_edge: int, acc: list[int]) -> None:
        if u == w:
            found.append(tuple(acc))
        for j in range(next_edge, m + 1):
            if tails[j - 1] == u:
                acc.append(j)
                extend(heads[j - 1], j + 1, acc)
                acc.pop()

    extend(v, 1, [])
    return sorted(found)


def degree_balance(t: IndexTuple, edges: Iterable[int], v: int) -> int:
    """Indegree minus outdegree of vertex v in the chosen edge subset.

    A path from v to w with v != w needs balance -1 at v, +1 at w and 0
    elsewhere, which makes this a cheap pre-filter for path enumeration.
    """
    tails, heads = _edge_ends(t)
    balance = 0
    for j in edges:
        if not 1 <= j <= t.m:
            raise ValueError(f"edge index {j} outside 1..{t.m}")
        if heads[j - 1] == v:
            balance += 1
        if tails[j - 1] == v:
            balance -= 1
    return balance

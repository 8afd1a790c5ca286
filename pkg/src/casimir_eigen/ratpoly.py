"""Exact sparse multivariate polynomials over the rationals.

A polynomial in N variables a1..aN is stored as a dictionary mapping
exponent tuples (one int per variable) to nonzero Fraction coefficients;
the zero polynomial is the empty dict.  All arithmetic is exact: there is
no floating point anywhere in this package.

On top of the raw polynomials this module provides the two symmetric-side
reductions everything else is expressed in:

  * ``to_power_sum``: rewrite a polynomial that is symmetric modulo the
    relation a1 + ... + aN = 0 as a rational combination of power sums
    p_k = sum(a_i^k) with parts k >= 2,
  * ``interpolate_in_n``: exact Lagrange interpolation of per-partition
    coefficients as univariate polynomials in the rank symbol n.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

# Coefficient field: arbitrary-precision rationals in lowest terms with
# positive denominator, which is exactly what fractions.Fraction stores.
Rat = Fraction

Exponent = tuple[int, ...]
Partition = tuple[int, ...]


class NotSymmetricError(ValueError):
    """Input polynomial has no power-sum representation modulo p1 = 0."""


class InterpolationInconsistentError(ValueError):
    """A sample is not reproduced by the interpolated closed form."""


def _term_order_key(exps: Exponent) -> tuple:
    # Graded lexicographic, descending: higher total degree first, then
    # lexicographically larger exponent vector first.
    return (-sum(exps), tuple(-e for e in exps))


class MPoly:
    """Sparse multivariate polynomial with exact rational coefficients.

    Immutable by convention: no method mutates ``terms`` after
    construction, so values can be shared freely across threads.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Fraction | int] | None = None):
        if nvars < 0:
            raise ValueError(f"nvars must be >= 0, got {nvars}")
        clean: dict[Exponent, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} has length != nvars={nvars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = Fraction(coeff)
            if c:
                clean[tuple(exps)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> MPoly:
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars: int, value: Fraction | int) -> MPoly:
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def one(cls, nvars: int) -> MPoly:
        return cls.const(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> MPoly:
        """The single variable with 0-based ``index``."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for nvars={nvars}")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> MPoly | None:
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.nvars, other)
        return None

    def __add__(self, other) -> MPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self.terms)
        for exps, coeff in rhs.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> MPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> MPoly:
        return (-self) + other

    def __mul__(self, other) -> MPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in rhs.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                out[exps] = out.get(exps, Fraction(0)) + ca * cb
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MPoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other) if isinstance(other, (MPoly, int, Fraction)) else None
        if rhs is None:
            return NotImplemented
        return self.terms == rhs.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def total_degree(self) -> int:
        """Total degree; the zero polynomial has degree 0 by convention."""
        return max((sum(e) for e in self.terms), default=0)

    def eval_at(self, point: Sequence[Fraction | int]) -> Fraction:
        """Exact evaluation at a rational point (one value per variable)."""
        values = [Fraction(v) for v in point]
        if len(values) != self.nvars:
            raise ValueError(f"point has {len(values)} coordinates, expected {self.nvars}")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for e, v in zip(exps, values):
                if e:
                    term *= v**e
            total += term
        return total

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical order (graded lexicographic, descending)."""
        return sorted(self.terms.items(), key=lambda item: _term_order_key(item[0]))

    def __str__(self) -> str:
        return format_mpoly(self)

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {self!s})"


def alpha(index: int, nvars: int) -> MPoly:
    """The Langlands-parameter variable a_index, 1-based."""
    return MPoly.variable(nvars, index - 1)


def power_sum(k: int, nvars: int) -> MPoly:
    """p_k = a1^k + ... + aN^k as an explicit polynomial."""
    if k < 1:
        raise ValueError("power sums need k >= 1")
    out = MPoly.zero(nvars)
    for i in range(nvars):
        out = out + MPoly.variable(nvars, i) ** k
    return out


def format_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(exps: Exponent, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_mpoly(p: MPoly, names: Sequence[str] | None = None) -> str:
    """Canonical human-readable form, e.g. ``a1*a5 - a2*a5 - a1 + a2``."""
    if not p.terms:
        return "0"
    if names is None:
        names = [f"a{i + 1}" for i in range(p.nvars)]
    pieces: list[str] = []
    for exps, coeff in p.sorted_terms():
        mono = _format_monomial(exps, names)
        mag = format_rat(abs(coeff))
        if not mono:
            body = mag
        elif abs(coeff) == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


def eliminate_last_var(p: MPoly) -> MPoly:
    """Substitute aN := -(a1 + ... + a_{N-1}), returning an (N-1)-variable polynomial.

    Two polynomials agree on the hyperplane sum(a_i) = 0 exactly when their
    images under this substitution are equal, so this is the canonical form
    for arithmetic modulo the ideal generated by p1.
    """
    if p.nvars == 0:
        return p
    m = p.nvars - 1
    neg_sum = MPoly(m, {tuple(1 if j == i else 0 for j in range(m)): Fraction(-1) for i in range(m)})
    max_e = max((e[-1] for e in p.terms), default=0)
    pows = [MPoly.one(m)]
    for _ in range(max_e):
        pows.append(pows[-1] * neg_sum)
    out = MPoly.zero(m)
    for exps, coeff in p.terms.items():
        head = MPoly(m, {exps[:-1]: coeff})
        out = out + head * pows[exps[-1]]
    return out


# -- power-sum basis -------------------------------------------------------


class PowerSumPoly:
    """Rational combination of power-sum products p_k with all parts k >= 2.

    Keys are integer partitions in non-increasing order; the empty
    partition () is the constant term.  This is the output basis for
    symmetric eigenvalues once p1 = 0 has been imposed.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Iterable[int], Fraction | int] | None = None):
        clean: dict[Partition, Fraction] = {}
        for parts, coeff in (coeffs or {}).items():
            lam = tuple(sorted(parts, reverse=True))
            if any(k < 2 for k in lam):
                raise ValueError(f"partition {lam} has a part < 2")
            c = Fraction(coeff)
            if c:
                clean[lam] = clean.get(lam, Fraction(0)) + c
                if not clean[lam]:
                    del clean[lam]
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSumPoly is immutable")

    @classmethod
    def zero(cls) -> PowerSumPoly:
        return cls({})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSumPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def sorted_items(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: _partition_order_key(kv[0]))

    def expand(self, nvars: int) -> MPoly:
        """Write the combination out as an explicit polynomial in a1..aN."""
        out = MPoly.zero(nvars)
        for lam, coeff in self.coeffs.items():
            term = MPoly.const(nvars, coeff)
            for k in lam:
                term = term * power_sum(k, nvars)
            out = out + term
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for lam, coeff in self.sorted_items():
            mono = format_partition(lam)
            mag = format_rat(abs(coeff))
            if not mono:
                body = mag
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"PowerSumPoly({self!s})"


def format_partition(lam: Partition) -> str:
    """Render p_lambda, e.g. (3, 2, 2) -> ``p3*p2^2`` and () -> ``""``."""
    pieces = []
    for k in sorted(set(lam), reverse=True):
        mult = lam.count(k)
        pieces.append(f"p{k}" if mult == 1 else f"p{k}^{mult}")
    return "*".join(pieces)


def _partition_order_key(lam: Partition) -> tuple:
    # Descending weight, then descending lexicographic parts; () sorts last.
    return (-sum(lam), tuple(-p for p in lam))


def _partitions_parts_ge2(max_weight: int) -> list[Partition]:
    """All partitions with parts >= 2 and weight <= max_weight, plus ()."""
    out: list[Partition] = [()]

    def grow(remaining: int, max_part: int, acc: tuple[int, ...]) -> None:
        for k in range(min(remaining, max_part), 1, -1):
            out.append(acc + (k,))
            grow(remaining - k, k, acc + (k,))

    grow(max_weight, max_weight, ())
    return sorted(set(out), key=_partition_order_key)


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact Gaussian elimination; returns one solution or None if inconsistent.

    Underdetermined systems get free variables set to zero.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    a = [row[:] + [b] for row, b in zip(rows, rhs)]
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c]:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivot_of_col[c] = r
        r += 1
        if r == n_rows:
            break
    for i in range(r, n_rows):
        if a[i][n_cols]:
            return None
    solution = [Fraction(0)] * n_cols
    for c, pr in pivot_of_col.items():
        solution[c] = a[pr][n_cols]
    # Verify (cheap, and guards the free-variable case).
    for row, b in zip(rows, rhs):
        if sum((x * s for x, s in zip(row, solution)), Fraction(0)) != b:
            return None
    return solution


def to_power_sum(p: MPoly, n: int) -> PowerSumPoly:
    """Rewrite ``p`` over power sums p_2..p_deg, assuming p1 = 0.

    The result agrees with ``p`` as a function on the hyperplane
    sum(a_i) = 0; a representation exists iff ``p`` is symmetric modulo
    that relation, and it is unique whenever n >= deg(p).

    Raises:
        NotSymmetricError: no representation exists.
    """
    if p.nvars != n:
        raise ValueError(f"polynomial has nvars={p.nvars}, expected {n}")
    if not p.terms:
        return PowerSumPoly.zero()
    degree = p.total_degree()
    basis = _partitions_parts_ge2(degree)
    target = eliminate_last_var(p)
    images = []
    for lam in basis:
        q = MPoly.one(n)
        for k in lam:
            q = q * power_sum(k, n)
        images.append(eliminate_last_var(q))
    monomials = set(target.terms)
    for img in images:
        monomials.update(img.terms)
    mono_list = sorted(monomials, key=_term_order_key)
    rows = [[img.terms.get(mono, Fraction(0)) for img in images] for mono in mono_list]
    rhs = [target.terms.get(mono, Fraction(0)) for mono in mono_list]
    solution = _solve_linear(rows, rhs)
    if solution is None:
        raise NotSymmetricError("polynomial is not symmetric modulo p1 = 0")
    return PowerSumPoly({lam: c for lam, c in zip(basis, solution) if c})


# -- closed forms in the rank n ---------------------------------------------


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _poly_in_n_eval(coeffs: Sequence[Fraction], n: int) -> Fraction:
    total = Fraction(0)
    for k, c in enumerate(coeffs):
        total += c * n**k
    return total


def format_coeff_in_n(coeffs: Sequence[Fraction]) -> str:
    """Pretty form of a univariate polynomial in n, e.g. ``(n^3 - n)/12``."""
    trimmed = _trim(coeffs)
    if not trimmed:
        return "0"
    if len(trimmed) == 1:
        return format_rat(trimmed[0])
    den = 1
    for c in trimmed:
        den = den * c.denominator // _gcd(den, c.denominator)
    numer = [c * den for c in trimmed]
    terms = []
    for k in range(len(numer) - 1, -1, -1):
        c = numer[k]
        if not c:
            continue
        mono = "n" if k == 1 else f"n^{k}" if k > 1 else ""
        mag = str(abs(c.numerator)) if (abs(c) != 1 or not mono) else ""
        body = f"{mag}*{mono}" if (mag and mono) else (mag or mono)
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    head = " ".join(terms)
    if den == 1:
        return head
    return f"({head})/{den}" if len([c for c in numer if c]) > 1 else f"{head}/{den}"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class ClosedForm:
    """Power-sum combination whose coefficients are polynomials in the rank n.

    Coefficient polynomials are stored as tuples of Fractions in ascending
    powers of n with trailing zeros trimmed.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Iterable[int], Sequence[Fraction]] | None = None):
        clean: dict[Partition, tuple[Fraction, ...]] = {}
        for parts, cs in (coeffs or {}).items():
            lam = tuple(sorted(parts, reverse=True))
            if any(k < 2 for k in lam):
                raise ValueError(f"partition {lam} has a part < 2")
            trimmed = _trim([Fraction(c) for c in cs])
            if trimmed:
                clean[lam] = trimmed
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ClosedForm is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClosedForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def sorted_items(self) -> list[tuple[Partition, tuple[Fraction, ...]]]:
        return sorted(self.coeffs.items(), key=lambda kv: _partition_order_key(kv[0]))

    def at(self, n: int) -> PowerSumPoly:
        """Evaluate every coefficient at a concrete rank n."""
        return PowerSumPoly({lam: _poly_in_n_eval(cs, n) for lam, cs in self.coeffs.items()})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for lam, cs in self.sorted_items():
            positive = cs[-1] > 0  # sign of the leading coefficient in n
            body = format_coeff_in_n(cs if positive else [-c for c in cs])
            mono = format_partition(lam)
            if mono:
                body = mono if body == "1" else f"{body}*{mono}"
            if not pieces:
                pieces.append(body if positive else f"-{body}")
            else:
                pieces.append(f"+ {body}" if positive else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"ClosedForm({self!s})"


def _mul_by_x_minus(poly: list[Fraction], root: Fraction) -> list[Fraction]:
    out = [Fraction(0)] * (len(poly) + 1)
    for d, c in enumerate(poly):
        out[d + 1] += c
        out[d] -= root * c
    return out


def _lagrange(xs: Sequence[int], ys: Sequence[Fraction]) -> list[Fraction]:
    """Exact interpolating polynomial through (xs, ys), ascending coefficients."""
    k = len(xs)
    acc = [Fraction(0)] * k
    for i in range(k):
        numer = [Fraction(1)]
        denom = Fraction(1)
        for j in range(k):
            if j != i:
                numer = _mul_by_x_minus(numer, Fraction(xs[j]))
                denom *= xs[i] - xs[j]
        scale = ys[i] / denom
        for d, c in enumerate(numer):
            acc[d] += scale * c
    return acc


def interpolate_in_n(
    samples: Sequence[tuple[int, PowerSumPoly]], degree_bound: int
) -> ClosedForm:
    """Fit each partition coefficient as a polynomial in n of degree <= degree_bound.

    Interpolates through the first degree_bound + 1 samples and demands
    that every remaining sample is reproduced exactly.

    Raises:
        ValueError: fewer than degree_bound + 1 distinct sample ranks.
        InterpolationInconsistentError: a sample is not reproduced.
    """
    ns = [n for n, _ in samples]
    if len(set(ns)) != len(ns):
        raise ValueError("sample ranks must be distinct")
    if len(samples) < degree_bound + 1:
        raise ValueError(
            f"need at least {degree_bound + 1} samples for degree bound {degree_bound}, got {len(samples)}"
        )
    support: set[Partition] = set()
    for _, q in samples:
        support.update(q.coeffs)
    out: dict[Partition, tuple[Fraction, ...]] = {}
    head = samples[: degree_bound + 1]
    for lam in sorted(support, key=_partition_order_key):
        xs = [n for n, _ in head]
        ys = [q.coeffs.get(lam, Fraction(0)) for _, q in head]
        coeffs = _trim(_lagrange(xs, ys))
        for n, q in samples:
            if _poly_in_n_eval(coeffs, n) != q.coeffs.get(lam, Fraction(0)):
                raise InterpolationInconsistentError(
                    f"coefficient of {format_partition(lam) or '1'} does not fit a "
                    f"degree-{degree_bound} polynomial in n (fails at n={n})"
                )
        if coeffs:
            out[lam] = coeffs
    return ClosedForm(out)

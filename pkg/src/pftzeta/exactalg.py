"""Exact polynomials, characteristic polynomials and truncated power series in ``t``.

Nothing here touches floating point.  Integers are Python ints and series
coefficients are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class InconsistentCount(ArithmeticError):
    """A periodic-point count came out negative or non-integral."""


@dataclass(frozen=True)
class IntPoly:
    """Polynomial in ``t`` with integer coefficients, lowest degree first."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(v) for v in self.coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def of(cls, *coefficients: int) -> IntPoly:
        return cls(tuple(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPoly(tuple(self[k] + other[k] for k in range(n)))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    def substitute_power(self, k: int) -> IntPoly:
        """``p(t) -> p(t ** k)``."""
        if k < 1:
            raise ValueError("k must be positive")
        out = [0] * (k * len(self.coefficients))
        for i, c in enumerate(self.coefficients):
            out[k * i] = c
        return IntPoly(tuple(out))

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms)


def substitute_power(p: IntPoly, k: int) -> IntPoly:
    return p.substitute_power(k)


def _as_rows(a) -> list[list[int]]:
    rows = a.entries if hasattr(a, "entries") else a
    return [[int(v) for v in row] for row in rows]


def charpoly(a) -> list[int]:
    """Coefficients ``c_0..c_n`` of ``det(lambda I - a)`` via Faddeev-LeVerrier.

    Each division is checked to be exact.
    """
    m = _as_rows(a)
    n = len(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    # M_1 = I
    mk = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = [[sum(m[i][r] * mk[r][j] for r in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError(f"non-integral Faddeev-LeVerrier step at k={k}")
        coeffs[n - k] = c
        mk = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    if any(any(v for v in row) for row in mk):
        raise ArithmeticError("Cayley-Hamilton residue is nonzero")
    return coeffs


def det_identity_minus_tA(a) -> IntPoly:
    """``det(I - t a)`` as the reversed characteristic polynomial."""
    return IntPoly(tuple(reversed(charpoly(a))))


@dataclass(frozen=True)
class RationalFn:
    """Product of ``poly ** exp`` over the factors; kept unsimplified."""

    factors: tuple[tuple[IntPoly, int], ...] = ()

    def __post_init__(self):
        for poly, exp in self.factors:
            if poly[0] != 1:
                raise ValueError(f"factor {poly} does not have constant term 1")
            if exp == 0:
                raise ValueError("zero exponent")

    def reciprocal(self) -> RationalFn:
        return RationalFn(tuple((p, -e) for p, e in self.factors))

    def __mul__(self, other: RationalFn) -> RationalFn:
        return RationalFn(self.factors + other.factors)

    def multiset(self):
        """Factors as a sorted list, for order-insensitive comparison."""
        return sorted((p.coefficients, e) for p, e in self.factors)

    def to_dict(self) -> dict:
        return {"factors": [{"poly": list(p.coefficients), "exp": e} for p, e in self.factors]}

    @classmethod
    def from_dict(cls, data: dict) -> RationalFn:
        return cls(tuple((IntPoly(tuple(f["poly"])), int(f["exp"])) for f in data["factors"]))

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for p, e in self.factors:
            parts.append(f"({p})" if e == 1 else f"({p})^{e}")
        return " ".join(parts)


@dataclass(frozen=True)
class PowerSeries:
    """Power series truncated after ``t ** order``."""

    coefficients: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def from_poly(cls, p: IntPoly | Sequence[int], order: int) -> PowerSeries:
        c = p.coefficients if isinstance(p, IntPoly) else tuple(p)
        return cls(tuple(Fraction(c[k]) if k < len(c) else Fraction(0) for k in range(order + 1)))

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls.from_poly((1,), order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.coefficients == other.coefficients
        return NotImplemented

    __hash__ = None

    def __add__(self, other: PowerSeries) -> PowerSeries:
        n = min(self.order, other.order)
        return PowerSeries(tuple(self[k] + other[k] for k in range(n + 1)))

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        n = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        return PowerSeries(
            tuple(sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n + 1))
        )

    def inverse(self) -> PowerSeries:
        a = self.coefficients
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [Fraction(1) / a[0]]
        for k in range(1, len(a)):
            inv.append(-sum(a[i] * inv[k - i] for i in range(1, k + 1)) / a[0])
        return PowerSeries(tuple(inv))

    def __pow__(self, e: int) -> PowerSeries:
        base = self if e >= 0 else self.inverse()
        result = PowerSeries.one(self.order)
        for _ in range(abs(e)):
            result = result * base
        return result

    def derivative(self) -> PowerSeries:
        return PowerSeries(tuple(k * c for k, c in enumerate(self.coefficients))[1:] + (Fraction(0),))

    def log(self) -> PowerSeries:
        """Formal logarithm; requires constant term 1."""
        if self[0] != 1:
            raise ValueError("log needs constant term 1")
        # log f = integral of f'/f
        q = self.derivative() * self.inverse()
        out = [Fraction(0)] + [q[k - 1] / k for k in range(1, self.order + 1)]
        return PowerSeries(tuple(out))

    def exp(self) -> PowerSeries:
        """Formal exponential; requires constant term 0."""
        if self[0] != 0:
            raise ValueError("exp needs constant term 0")
        # g = exp f satisfies k g_k = sum_{i=1..k} i f_i g_{k-i}
        g = [Fraction(1)]
        for k in range(1, self.order + 1):
            g.append(sum(i * self[i] * g[k - i] for i in range(1, k + 1)) / k)
        return PowerSeries(tuple(g))


def series_expand(f: RationalFn, order: int) -> PowerSeries:
    result = PowerSeries.one(order)
    for p, e in f.factors:
        result = result * PowerSeries.from_poly(p, order) ** e
    return result


def counts_from_series(zeta: PowerSeries, max_n: int | None = None) -> list[int]:
    """Recover ``n * [t^n] log(zeta)`` for ``n = 1..max_n`` as integers."""
    max_n = zeta.order if max_n is None else max_n
    logz = zeta.log()
    counts = []
    for n in range(1, max_n + 1):
        value = n * logz[n]
        if value.denominator != 1 or value < 0:
            raise InconsistentCount(f"count for n={n} is {value}, not a non-negative integer")
        counts.append(int(value))
    return counts


def periodic_counts_from_zeta(f: RationalFn, max_n: int) -> list[int]:
    """Periodic-point counts ``|P_1| .. |P_max_n|`` encoded by the zeta function ``f``."""
    return counts_from_series(series_expand(f, max_n), max_n)


def zeta_from_counts(counts: Iterable[int]) -> PowerSeries:
    """``exp(sum counts[n-1] / n * t^n)``, the inverse of :func:`counts_from_series`."""
    counts = list(counts)
    f = [Fraction(0)] + [Fraction(c, n) for n, c in enumerate(counts, start=1)]
    return PowerSeries(tuple(f)).exp()

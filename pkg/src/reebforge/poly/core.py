"""Exact rational polynomials: sparse multivariate and dense univariate."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import ArityError

Rational = Fraction


def as_rational(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, str):
        return Fraction(v.strip())
    if isinstance(v, float):
        raise TypeError("floats are not exact; pass a Fraction or string")
    return Fraction(v)


def _grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables with Fraction coefficients.

    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | Iterable = ()):
        if nvars < 1:
            raise ArityError("nvars must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ArityError(f"bad exponent vector {exps} for {nvars} variables")
            c = as_rational(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        c = as_rational(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, i):
        """The i-th variable, 0-based."""
        if not 0 <= i < nvars:
            raise ArityError(f"variable index {i} out of range")
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self):
        """Terms in descending graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_value(self):
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, i):
        return max((e[i] for e in self._terms), default=-1)

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), Fraction(0))

    def _check(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ArityError("mismatched number of variables")
            return other
        return MultiPoly.const(self.nvars, other)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = as_rational(other)
            if not c:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw(self.nvars, {e: v * c for e, v in self._terms.items()})
        other = self._check(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent")
        out = MultiPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self == MultiPoly.const(self.nvars, other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .text import format_poly
        return f"MultiPoly({self.nvars}, {format_poly(self)!r})"

    def __str__(self):
        from .text import format_poly
        return format_poly(self)

    def map_coefficients(self, f):
        return MultiPoly(self.nvars, {e: f(c) for e, c in self._terms.items()})


class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = other if isinstance(other, UniPoly) else UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = other if isinstance(other, UniPoly) else UniPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = as_rational(other)
            return UniPoly(c * v for v in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def derivative(self):
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def to_int(self):
        """Integer polynomial with the same roots and sign (positive rescale)."""
        from . import zpoly
        return zpoly.from_fractions(self.coeffs)[0]

    @classmethod
    def from_int(cls, coeffs):
        return cls(coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"


@dataclass(frozen=True)
class IsolatingInterval:
    lo: Fraction
    hi: Fraction
    multiplicity_one: bool = True

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("isolating interval needs lo < hi")

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def contains(self, v):
        return self.lo < v < self.hi


@dataclass(frozen=True)
class Box2:
    x_interval: tuple
    y_interval: tuple

    def __post_init__(self):
        (a, b), (c, d) = self.x_interval, self.y_interval
        if a > b or c > d:
            raise ValueError("empty box")

"""Exact scalar and polynomial arithmetic shared by the whole package.

Rationals are ``fractions.Fraction`` throughout.  This module adds the three
algebraic structures the map sums need on top of that: dense univariate
polynomials in the deformation variable ``gamma``, sparse multivariate
polynomials (for the closed-form character polynomials in gamma, p_i, q_i),
and the quadratic extension Q[sqrt(2)] used for the alpha in {2, 1/2}
special-value checks.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Rational = Fraction

NEG_INF = float("-inf")


class MissingVariable(KeyError):
    """Raised when a polynomial is evaluated without a value for a variable."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Sqrt2:
    """Exact element a + b*sqrt(2) of the field Q[sqrt(2)]."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("Sqrt2 values are immutable")

    @classmethod
    def of(cls, x) -> "Sqrt2":
        if isinstance(x, Sqrt2):
            return x
        return cls(_as_fraction(x), 0)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self!r} is irrational")
        return self.a

    def __add__(self, other):
        other = Sqrt2.of(other)
        return Sqrt2(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Sqrt2(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Sqrt2.of(other))

    def __rsub__(self, other):
        return Sqrt2.of(other) + (-self)

    def __mul__(self, other):
        other = Sqrt2.of(other)
        return Sqrt2(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Sqrt2":
        # (a + b*sqrt2)^-1 = (a - b*sqrt2) / (a^2 - 2 b^2); the norm is zero
        # only for a = b = 0 since sqrt(2) is irrational.
        norm = self.a * self.a - 2 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q[sqrt(2)]")
        return Sqrt2(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        return self * Sqrt2.of(other).inverse()

    def __rtruediv__(self, other):
        return Sqrt2.of(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        base = self if k >= 0 else self.inverse()
        out = Sqrt2(1, 0)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Sqrt2)):
            other = Sqrt2.of(other)
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return f"Sqrt2({self.a!r}, {self.b!r})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt2"
        return f"{self.a} + {self.b}*sqrt2"


SQRT2 = Sqrt2(0, 1)


def gamma_of(a):
    """Deformation parameter 1/A - A for a nonzero A (rational or Q[sqrt2])."""
    if isinstance(a, int):
        a = Fraction(a)
    if not a:
        raise ZeroDivisionError("gamma is undefined at A = 0")
    return 1 / a - a


class GammaPoly:
    """Dense univariate polynomial in gamma with Fraction coefficients.

    Trailing zero coefficients are trimmed; the zero polynomial has degree
    -inf.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("GammaPoly values are immutable")

    @classmethod
    def const(cls, c) -> "GammaPoly":
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other):
        if not isinstance(other, GammaPoly):
            other = GammaPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return GammaPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return GammaPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, GammaPoly):
            other = GammaPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, GammaPoly):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return GammaPoly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "GammaPoly":
        c = _as_fraction(c)
        if c == 0:
            return ZERO
        return GammaPoly(tuple(c * x for x in self.coeffs))

    def homogeneous_part(self, d: int) -> "GammaPoly":
        c = self.coefficient(d)
        if c == 0:
            return ZERO
        return GammaPoly((0,) * d + (c,))

    def evaluate(self, x):
        """Horner evaluation; works for Fraction and Sqrt2 arguments."""
        out = x * 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def to_json_obj(self):
        return {
            "terms": [
                {"exp": {"g": k}, "num": c.numerator, "den": c.denominator}
                for k, c in enumerate(self.coeffs)
                if c
            ]
        }

    @classmethod
    def from_json_obj(cls, obj) -> "GammaPoly":
        coeffs: dict[int, Fraction] = {}
        for term in obj["terms"]:
            k = int(term["exp"].get("g", 0))
            coeffs[k] = Fraction(term["num"], term["den"])
        size = max(coeffs, default=-1) + 1
        return cls(tuple(coeffs.get(i, Fraction(0)) for i in range(size)))

    def __eq__(self, other):
        if isinstance(other, GammaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == GammaPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "GammaPoly(0)"
        parts = [f"{c}*g^{k}" for k, c in enumerate(self.coeffs) if c]
        return "GammaPoly(" + " + ".join(parts) + ")"


ZERO = GammaPoly()
ONE = GammaPoly((1,))
GAMMA = GammaPoly((0, 1))
HALF = GammaPoly((Fraction(1, 2),))


class MultiPoly:
    """Sparse multivariate polynomial over Fraction with named variables.

    Terms map a sorted tuple of (variable, power) pairs to a nonzero
    coefficient; the constant term has the empty key.  Total degree counts
    every variable (including gamma) with degree one.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping = ()):
        clean = {}
        for key, c in dict(terms).items():
            c = _as_fraction(c)
            if c == 0:
                continue
            key = tuple(sorted((str(v), int(e)) for v, e in key if e))
            clean[key] = clean.get(key, Fraction(0)) + c
        object.__setattr__(
            self, "terms", {k: v for k, v in clean.items() if v != 0}
        )

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly values are immutable")

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(): c})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls({((name, 1),): 1})

    @property
    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e for _, e in key) for key in self.terms)

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.const(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                exps = dict(k1)
                for v, e in k2:
                    exps[v] = exps.get(v, 0) + e
                key = tuple(sorted(exps.items()))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = _as_fraction(c)
        return MultiPoly({k: c * v for k, v in self.terms.items()})

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly(
            {k: c for k, c in self.terms.items() if sum(e for _, e in k) == d}
        )

    def evaluate(self, assignment: Mapping):
        out = Fraction(0)
        for key, c in self.terms.items():
            term = c
            for v, e in key:
                if v not in assignment:
                    raise MissingVariable(v)
                term = term * assignment[v] ** e
            out = out + term
        return out

    def to_json_obj(self):
        return {
            "terms": [
                {"exp": dict(key), "num": c.numerator, "den": c.denominator}
                for key, c in sorted(self.terms.items())
            ]
        }

    @classmethod
    def from_json_obj(cls, obj) -> "MultiPoly":
        terms = {}
        for term in obj["terms"]:
            key = tuple(sorted(term["exp"].items()))
            terms[key] = Fraction(term["num"], term["den"])
        return cls(terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for key, c in sorted(self.terms.items()):
            mono = "*".join(f"{v}^{e}" for v, e in key) or "1"
            bits.append(f"{c}*{mono}")
        return "MultiPoly(" + " + ".join(bits) + ")"

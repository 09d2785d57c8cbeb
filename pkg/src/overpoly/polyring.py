"""Exact sparse multivariate and dense univariate polynomial arithmetic.

Coefficients are arbitrary-precision rationals (``fractions.Fraction``)
throughout; the only inexact operation in this module is complex evaluation
in double precision.  Variable index 0 conventionally prints as ``x`` and
index k >= 1 as ``y_k`` (``y``/``z`` in the three-variable case).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping

Rational = int | Fraction


class ArityMismatchError(ValueError):
    """Raised when combining polynomials over different variable sets."""


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def _frac(c: Rational) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def grlex_key(expo: tuple[int, ...]) -> tuple:
    """Graded lexicographic sort key with variable 0 < 1 < ... ."""
    return (sum(expo), expo)


def default_var_names(arity: int) -> list[str]:
    if arity == 1:
        return ["z"]
    if arity == 3:
        return ["x", "y", "z"]
    return ["x"] + [f"y{k}" for k in range(1, arity)]


class MultiPoly:
    """Sparse multivariate polynomial over the rationals.

    Terms are stored as a map from exponent tuple to nonzero coefficient;
    the zero polynomial is the empty map.  Instances are treated as
    immutable: all operations return new polynomials.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[tuple[int, ...], Rational] | None = None):
        if arity < 1:
            raise ValueError("arity must be >= 1")
        self.arity = arity
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for expo, coeff in terms.items():
                expo = tuple(expo)
                if len(expo) != arity:
                    raise ArityMismatchError(
                        f"exponent vector {expo} does not match arity {arity}")
                if any(e < 0 for e in expo):
                    raise ValueError(f"negative exponent in {expo}")
                c = _frac(coeff)
                if c != 0:
                    clean[expo] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls(arity)

    @classmethod
    def const(cls, arity: int, c: Rational) -> "MultiPoly":
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def var(cls, arity: int, index: int) -> "MultiPoly":
        if not 0 <= index < arity:
            raise ArityMismatchError(f"variable {index} out of range for arity {arity}")
        expo = tuple(1 if i == index else 0 for i in range(arity))
        return cls(arity, {expo: 1})

    @classmethod
    def parse(cls, text: str, names: list[str] | None = None, arity: int | None = None) -> "MultiPoly":
        """Parse expressions like ``x^2*y + 2*x*y*z - 3``.

        Factors within a term must be separated by ``*``; variable names
        default to the canonical ones for the given arity.
        """
        if names is None:
            if arity is None:
                raise ValueError("parse needs names or arity")
            names = default_var_names(arity)
        arity = len(names)
        index = {name: i for i, name in enumerate(names)}
        text = text.replace("-", "+-").replace(" ", "")
        result = cls.zero(arity)
        for chunk in text.split("+"):
            if not chunk:
                continue
            coeff = Fraction(1)
            expo = [0] * arity
            if chunk.startswith("-"):
                coeff = -coeff
                chunk = chunk[1:]
            for factor in chunk.split("*"):
                m = re.fullmatch(r"(\d+(?:/\d+)?)|([A-Za-z]\w*)(?:\^(\d+))?", factor)
                if not m:
                    raise ValueError(f"cannot parse factor {factor!r}")
                if m.group(1) is not None:
                    coeff *= Fraction(m.group(1))
                else:
                    name = m.group(2)
                    if name not in index:
                        raise ValueError(f"unknown variable {name!r}")
                    expo[index[name]] += int(m.group(3) or 1)
            result = result + cls(arity, {tuple(expo): coeff})
        return result

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if self.arity != other.arity:
            raise ArityMismatchError(f"arity {self.arity} != {other.arity}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = dict(self.terms)
        for expo, c in other.terms.items():
            s = terms.get(expo, Fraction(0)) + c
            if s == 0:
                terms.pop(expo, None)
            else:
                terms[expo] = s
        out = MultiPoly.__new__(MultiPoly)
        out.arity, out.terms = self.arity, terms
        return out

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly.__new__(MultiPoly)
        out.arity = self.arity
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(expo, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(expo, None)
                else:
                    terms[expo] = s
        out = MultiPoly.__new__(MultiPoly)
        out.arity, out.terms = self.arity, terms
        return out

    def scale(self, c: Rational) -> "MultiPoly":
        c = _frac(c)
        if c == 0:
            return MultiPoly.zero(self.arity)
        out = MultiPoly.__new__(MultiPoly)
        out.arity = self.arity
        out.terms = {e: v * c for e, v in self.terms.items()}
        return out

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.arity, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, MultiPoly) and self.arity == other.arity
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    # -- queries and maps --------------------------------------------------

    def coefficient_of(self, expo: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(expo), Fraction(0))

    def substitute(self, mapping: Mapping[int, "MultiPoly"]) -> "MultiPoly":
        """Substitute a polynomial image for every variable.

        All variables occurring in ``self`` must be mapped and all images
        must share a common arity.
        """
        arities = {p.arity for p in mapping.values()}
        if len(arities) != 1:
            raise ArityMismatchError("substitution images must share one arity")
        out_arity = arities.pop()
        used = set()
        for expo in self.terms:
            used.update(i for i, e in enumerate(expo) if e > 0)
        missing = used - set(mapping)
        if missing:
            raise ArityMismatchError(f"unmapped variables: {sorted(missing)}")
        result = MultiPoly.zero(out_arity)
        cache: dict[tuple[int, int], MultiPoly] = {}

        def image_power(i: int, e: int) -> MultiPoly:
            key = (i, e)
            if key not in cache:
                cache[key] = mapping[i] ** e
            return cache[key]

        for expo, c in self.terms.items():
            term = MultiPoly.const(out_arity, c)
            for i, e in enumerate(expo):
                if e:
                    term = term * image_power(i, e)
            result = result + term
        return result

    def eval_rational(self, point: Iterable[Rational]) -> Fraction:
        vals = [_frac(v) for v in point]
        if len(vals) != self.arity:
            raise ArityMismatchError("point length != arity")
        total = Fraction(0)
        for expo, c in self.terms.items():
            m = c
            for v, e in zip(vals, expo):
                if e:
                    m *= v ** e
            total += m
        return total

    def used_variables(self) -> set[int]:
        used: set[int] = set()
        for expo in self.terms:
            used.update(i for i, e in enumerate(expo) if e > 0)
        return used

    def to_unipoly(self) -> "UniPoly":
        """Convert a polynomial using at most one variable to dense form."""
        used = self.used_variables()
        if len(used) > 1:
            raise ValueError(f"polynomial uses several variables: {sorted(used)}")
        var = used.pop() if used else 0
        coeffs = [Fraction(0)] * (self.total_degree() + 1 if self.terms else 0)
        for expo, c in self.terms.items():
            coeffs[expo[var]] = c
        return UniPoly(coeffs)

    # -- serialization and display ----------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def to_json_obj(self) -> dict:
        return {
            "arity": self.arity,
            "terms": [[list(e), f"{c.numerator}/{c.denominator}"]
                      for e, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "MultiPoly":
        terms = {tuple(e): Fraction(c) for e, c in obj["terms"]}
        return cls(obj["arity"], terms)

    @classmethod
    def from_json(cls, text: str) -> "MultiPoly":
        return cls.from_json_obj(json.loads(text))

    def to_str(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or default_var_names(self.arity)
        parts = []
        for expo, c in reversed(self.sorted_terms()):
            factors = []
            for name, e in zip(names, expo):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_str()})"


class UniPoly:
    """Dense univariate polynomial over the rationals, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational]):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls([])

    @classmethod
    def const(cls, c: Rational) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Rational = 1) -> "UniPoly":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def scale(self, c: Rational) -> "UniPoly":
        return UniPoly([v * _frac(c) for v in self.coeffs])

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by z^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        return UniPoly([Fraction(0)] * k + list(self.coeffs))

    def divmod(self, den: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if not den:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dd = den.degree
        lead = den.coeffs[-1]
        q = [Fraction(0)] * max(0, len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            if rem[k] == 0:
                continue
            f = rem[k] / lead
            q[k - dd] = f
            for j, c in enumerate(den.coeffs):
                rem[k - dd + j] -= f * c
        return UniPoly(q), UniPoly(rem)

    def exact_divide(self, den: "UniPoly") -> "UniPoly":
        """Return q with self = q * den exactly; raise NotDivisibleError otherwise."""
        q, r = self.divmod(den)
        if r:
            raise NotDivisibleError(
                f"remainder of degree {r.degree} is nonzero")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def reversed(self) -> "UniPoly":
        """Coefficient-reversed polynomial z^deg * p(1/z)."""
        return UniPoly(list(reversed(self.coeffs)))

    def is_palindromic(self) -> bool:
        return bool(self.coeffs) and self.coeffs == tuple(reversed(self.coeffs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def content(self) -> Fraction:
        """GCD of coefficients (0 for the zero polynomial)."""
        from math import gcd, lcm
        if not self.coeffs:
            return Fraction(0)
        den = lcm(*(c.denominator for c in self.coeffs))
        num = 0
        for c in self.coeffs:
            num = gcd(num, abs(c.numerator) * (den // c.denominator))
        return Fraction(num, den)

    def eval_rational(self, v: Rational) -> Fraction:
        v = _frac(v)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def eval_complex(self, z: complex) -> complex:
        """Horner evaluation in double precision."""
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def eval_complex_exact(self, z: complex) -> tuple[Fraction, Fraction]:
        """Evaluate at z exactly over the Gaussian rationals.

        The float components of z are treated as the exact dyadic rationals
        they are; returns (real, imag).  Used for trustworthy residuals.
        """
        zr, zi = Fraction(z.real), Fraction(z.imag)
        ar, ai = Fraction(0), Fraction(0)
        for c in reversed(self.coeffs):
            ar, ai = ar * zr - ai * zi + c, ar * zi + ai * zr
        return ar, ai

    def abs_at(self, z: complex) -> float:
        """|p(z)| computed from the exact Gaussian-rational value."""
        ar, ai = self.eval_complex_exact(z)
        import math
        return math.sqrt(float(ar * ar + ai * ai))

    def norm1(self) -> float:
        return float(sum(abs(c) for c in self.coeffs))

    def to_multipoly(self, arity: int = 1, var: int = 0) -> MultiPoly:
        terms = {}
        for k, c in enumerate(self.coeffs):
            expo = tuple(k if i == var else 0 for i in range(arity))
            terms[expo] = c
        return MultiPoly(arity, terms)

    def to_str(self, name: str = "z") -> str:
        return self.to_multipoly().to_str([name])

    def __repr__(self) -> str:
        return f"UniPoly({self.to_str()})"


# Functional aliases matching the operation-style API used elsewhere.

def add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def scale(a: MultiPoly, c: Rational) -> MultiPoly:
    return a.scale(c)


def substitute(p: MultiPoly, mapping: Mapping[int, MultiPoly]) -> MultiPoly:
    return p.substitute(mapping)


def exact_divide(num: UniPoly, den: UniPoly) -> UniPoly:
    return num.exact_divide(den)


def is_palindromic(p: UniPoly) -> bool:
    return p.is_palindromic()


def coefficient_of(p: MultiPoly, expo: Iterable[int]) -> Fraction:
    return p.coefficient_of(expo)


def eval_complex(p: UniPoly, z: complex) -> complex:
    return p.eval_complex(z)

"""Sparse multivariate polynomials with exact rational coefficients.

Variables come in four kinds: ``x`` (Borel coordinates of Fl_n), ``l``
(fundamental weights lambda_i), ``q`` (quantum parameters) and ``h`` (hbar).
The grading is deg x = deg l = deg h = 2 and deg q = 4.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, NamedTuple, Optional, Tuple, Union

__all__ = [
    "Var", "Polynomial", "GradingReport", "x", "lam", "q", "hbar", "const",
    "q_partial", "graded_degree", "substitute", "WEIGHTS",
]

WEIGHTS = {"x": 2, "l": 2, "q": 4, "h": 2}
# display / graded-lex precedence: x1 > x2 > ... > l1 > ... > q1 > ... > h
_KIND_RANK = {"x": 0, "l": 1, "q": 2, "h": 3}


class Var(NamedTuple):
    kind: str
    index: int = 0

    def __str__(self):
        return "h" if self.kind == "h" else f"{self.kind}{self.index}"


Monomial = Tuple[Tuple[Var, int], ...]
Coeff = Union[int, Fraction]


def _norm(c) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(WEIGHTS[v.kind] * e for v, e in m)


def _display_key(m: Monomial):
    # graded-lex, largest first
    vec = sorted(((_KIND_RANK[v.kind], v.index), -e) for v, e in m)
    return (-_mono_degree(m), tuple(vec))


class Polynomial:
    """Immutable sparse polynomial ``{monomial: coefficient}``.

    Monomials are sorted tuples of ``(Var, exponent)`` pairs; zero
    coefficients are never stored.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Rational]] = None):
        clean: Dict[Monomial, Coeff] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = _norm(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coeff]) -> "Polynomial":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # -- construction helpers ------------------------------------------------
    @classmethod
    def from_var(cls, v: Var, exp: int = 1) -> "Polynomial":
        return cls._raw({((v, exp),): 1} if exp else {(): 1})

    @classmethod
    def constant(cls, c: Rational) -> "Polynomial":
        return cls._raw({(): _norm(Fraction(c))} if c else {})

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse the canonical text form, e.g. ``"x1^2 - 1/2*q1*h + 3"``."""
        s = text.replace(" ", "").replace("−", "-").replace("·", "*")
        if s in ("", "0"):
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        result = cls()
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            term = cls.constant(-1 if sign == "-" else 1)
            for factor in body.split("*"):
                m = re.fullmatch(r"([xlq])(\d+)(?:\^(\d+))?|h(?:\^(\d+))?|(\d+(?:/\d+)?)", factor)
                if m is None:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                if m.group(5) is not None:
                    term = term * Fraction(m.group(5))
                elif m.group(1):
                    term = term * cls.from_var(Var(m.group(1), int(m.group(2))), int(m.group(3) or 1))
                else:
                    term = term * cls.from_var(Var("h"), int(m.group(4) or 1))
            result = result + term
        return result

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial()
            return Polynomial._raw({m: _norm(c * other) for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: Dict[Monomial, Coeff] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial({m: c for m, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c: Rational):
        return self * (Fraction(1) / Fraction(c))

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    # -- inspection ----------------------------------------------------------
    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_term(self) -> Coeff:
        return self.terms.get((), 0)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree_in(self, v: Var) -> int:
        return max((dict(m).get(v, 0) for m in self.terms), default=0)

    def coefficients_are_nonnegative_integers(self) -> bool:
        return all(isinstance(c, int) and c >= 0 for c in self.terms.values())

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_display_key):
            c = self.terms[m]
            body = "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in
                            sorted(m, key=lambda ve: (_KIND_RANK[ve[0].kind], ve[0].index)))
            mag = abs(c)
            if not body:
                s = str(mag)
            elif mag == 1:
                s = body
            else:
                s = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", s))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, s in parts[1:]:
            text += f" {sign} {s}"
        return text

    __str__ = to_text

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def x(i: int) -> Polynomial:
    return Polynomial.from_var(Var("x", i))


def lam(i: int) -> Polynomial:
    return Polynomial.from_var(Var("l", i))


def q(i: int) -> Polynomial:
    return Polynomial.from_var(Var("q", i))


def hbar() -> Polynomial:
    return Polynomial.from_var(Var("h"))


def const(c: Rational) -> Polynomial:
    return Polynomial.constant(c)


def q_partial(f: Polynomial, i: int) -> Polynomial:
    """``q_i * d/dq_i``, i.e. d/dt_i under q_i = exp(t_i)."""
    v = Var("q", i)
    out = {}
    for m, c in f.terms.items():
        e = dict(m).get(v, 0)
        if e:
            out[m] = c * e
    return Polynomial._raw(out)


@dataclass(frozen=True)
class GradingReport:
    homogeneous: bool
    # -inf for the zero polynomial, None when mixed
    degree: Optional[Union[int, float]]


def graded_degree(f: Polynomial) -> GradingReport:
    degrees = {_mono_degree(m) for m in f.terms}
    if not degrees:
        return GradingReport(True, -math.inf)
    if len(degrees) == 1:
        return GradingReport(True, degrees.pop())
    return GradingReport(False, None)


def substitute(f: Polynomial, assignment: Mapping[Var, Union[Polynomial, Rational]]) -> Polynomial:
    """Replace variables by polynomials (or numbers); others are left alone."""
    assignment = {v: p if isinstance(p, Polynomial) else Polynomial.constant(p)
                  for v, p in assignment.items()}
    powers: Dict[Tuple[Var, int], Polynomial] = {}
    result = Polynomial()
    for m, c in f.terms.items():
        kept = []
        term = Polynomial.constant(c)
        for v, e in m:
            if v in assignment:
                key = (v, e)
                if key not in powers:
                    powers[key] = assignment[v] ** e
                term = term * powers[key]
            else:
                kept.append((v, e))
        if kept:
            term = term * Polynomial._raw({tuple(kept): 1})
        result = result + term
    return result


def monomial_poly(m: Monomial, c: Rational = 1) -> Polynomial:
    return Polynomial({m: c})


def poly_sum(items: Iterable[Polynomial]) -> Polynomial:
    out: Dict[Monomial, Coeff] = {}
    for p in items:
        for m, c in p.terms.items():
            out[m] = out.get(m, 0) + c
    return Polynomial(out)

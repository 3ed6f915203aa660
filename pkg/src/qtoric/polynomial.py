"""Sparse multivariate polynomials over exact rationals.

Generators are indexed 0..M-1 and all carry complex degree 1 (cohomological
degree 2).  A monomial is stored as a sorted tuple of generator indices with
multiplicity, e.g. ``(0, 0, 3)`` for u0^2*u3; the empty tuple is the constant
monomial.  Coefficients are ``fractions.Fraction``; zero coefficients are
pruned on construction, so equality is plain dict equality.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

Monomial = tuple

_ZERO = Fraction(0)


def _merge(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(sorted(m1 + m2))


class GradedPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {m: Fraction(c) for m, c in terms.items() if c != 0}

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> "GradedPolynomial":
        return cls()

    @classmethod
    def constant(cls, c) -> "GradedPolynomial":
        return cls({(): Fraction(c)})

    @classmethod
    def one(cls) -> "GradedPolynomial":
        return cls.constant(1)

    @classmethod
    def generator(cls, i: int, coeff=1) -> "GradedPolynomial":
        return cls({(i,): Fraction(coeff)})

    @classmethod
    def linear(cls, coeffs) -> "GradedPolynomial":
        """Linear class from a coefficient vector (index -> coefficient)."""
        if isinstance(coeffs, dict):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        return cls({(i,): Fraction(c) for i, c in items if c != 0})

    # ------------------------------------------------------------------
    # ring structure

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return GradedPolynomial({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, GradedPolynomial):
            other = GradedPolynomial.constant(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, _ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        p = GradedPolynomial.__new__(GradedPolynomial)
        p.terms = out
        return p

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GradedPolynomial):
            other = GradedPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GradedPolynomial):
            return self.mul(other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "GradedPolynomial":
        c = Fraction(c)
        if not c:
            return GradedPolynomial()
        p = GradedPolynomial.__new__(GradedPolynomial)
        p.terms = {m: v * c for m, v in self.terms.items()}
        return p

    def mul(self, other: "GradedPolynomial", trunc: int | None = None) -> "GradedPolynomial":
        """Product, dropping every term of complex degree > trunc."""
        out = {}
        for m1, c1 in self.terms.items():
            d1 = len(m1)
            for m2, c2 in other.terms.items():
                if trunc is not None and d1 + len(m2) > trunc:
                    continue
                m = _merge(m1, m2)
                s = out.get(m, _ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        p = GradedPolynomial.__new__(GradedPolynomial)
        p.terms = out
        return p

    def pow(self, k: int, trunc: int | None = None) -> "GradedPolynomial":
        out = GradedPolynomial.one()
        for _ in range(k):
            out = out.mul(self, trunc)
        return out

    # ------------------------------------------------------------------
    # grading

    def degree(self) -> int:
        """Maximal complex degree; -1 for the zero polynomial."""
        return max((len(m) for m in self.terms), default=-1)

    def truncate(self, trunc: int) -> "GradedPolynomial":
        p = GradedPolynomial.__new__(GradedPolynomial)
        p.terms = {m: c for m, c in self.terms.items() if len(m) <= trunc}
        return p

    def homogeneous_part(self, deg: int) -> "GradedPolynomial":
        p = GradedPolynomial.__new__(GradedPolynomial)
        p.terms = {m: c for m, c in self.terms.items() if len(m) == deg}
        return p

    def is_homogeneous(self, deg: int) -> bool:
        return all(len(m) == deg for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((), _ZERO)

    def degrees_present(self):
        return sorted({len(m) for m in self.terms})

    # ------------------------------------------------------------------
    # linear-class helpers

    def is_linear(self) -> bool:
        return all(len(m) == 1 for m in self.terms)

    def coefficient_vector(self, m: int):
        """Coefficient vector of a linear class over m generators."""
        if not self.is_linear():
            raise ValueError("not a linear class: %r" % (self,))
        vec = [_ZERO] * m
        for mon, c in self.terms.items():
            vec[mon[0]] = c
        return tuple(vec)

    def integer_vector(self, m: int):
        vec = self.coefficient_vector(m)
        if any(c.denominator != 1 for c in vec):
            raise ValueError("class has non-integral coefficients: %r" % (self,))
        return tuple(int(c) for c in vec)

    def shift_generators(self, offset: int) -> "GradedPolynomial":
        p = GradedPolynomial.__new__(GradedPolynomial)
        p.terms = {tuple(i + offset for i in m): c for m, c in self.terms.items()}
        return p

    def substitute(self, mapping: dict, trunc: int | None = None) -> "GradedPolynomial":
        """Replace each generator i in ``mapping`` by the given polynomial."""
        out = GradedPolynomial.zero()
        for mon, c in self.terms.items():
            term = GradedPolynomial.constant(c)
            for i in mon:
                factor = mapping.get(i)
                if factor is None:
                    factor = GradedPolynomial.generator(i)
                term = term.mul(factor, trunc)
                if not term:
                    break
            out = out + term
        return out

    # ------------------------------------------------------------------

    def __repr__(self):
        return "GradedPolynomial(%s)" % self.format()

    def format(self, labels=None) -> str:
        if not self.terms:
            return "0"
        def gen_name(i):
            return labels[i] if labels else "u%d" % i
        parts = []
        for mon in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[mon]
            factors = []
            for i in sorted(set(mon)):
                e = mon.count(i)
                factors.append(gen_name(i) if e == 1 else "%s^%d" % (gen_name(i), e))
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append("%s*%s" % (c, body))
        return " + ".join(parts).replace("+ -", "- ")


def monomials_of_degree(m: int, deg: int):
    """All monomials of the given complex degree in m generators."""
    if deg < 0:
        return
    yield from combinations_with_replacement(range(m), deg)

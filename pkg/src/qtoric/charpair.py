"""Characteristic pairs (P, lambda): the combinatorial model of a quasitoric manifold.

Each facet carries a primitive integer vector (its isotropy circle) and an
omniorientation sign; validity means the lambda-block at every vertex is
unimodular.  Validation caches the dual covector bases at the vertices, which
drive the localization pairing downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import StructureError, ValidationError
from .polytope import (
    SimplePolytope, ValidationCheck, ValidationReport,
    cube, interval, polygon, simplex,
)


@dataclass(frozen=True)
class VertexWeightData:
    """Dual covector basis at a vertex: <weights[k], lambda[facets[l]]> = delta_kl."""

    vertex_id: int
    facets: tuple
    weights: tuple  # n integer covectors, rows of the inverse transpose of the block


def _det(rows):
    """Exact determinant by fraction-free expansion (tiny n)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[r[c] for c in range(n) if c != j] for r in rows[1:]]
        total += ((-1) ** j) * rows[0][j] * _det(minor)
    return total


def _inverse_transpose(rows):
    """Inverse transpose of a unimodular integer matrix, as integer rows."""
    n = len(rows)
    aug = [[Fraction(rows[i][j]) for j in range(n)] +
           [Fraction(1 if k == i else 0) for k in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    # inverse columns -> inverse transpose rows
    out = []
    for j in range(n):
        row = tuple(aug[i][n + j] for i in range(n))
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


class CharacteristicPair:
    def __init__(self, polytope: SimplePolytope, lam, signs=None, name=None):
        if not isinstance(polytope, SimplePolytope):
            raise StructureError("polytope must be a SimplePolytope")
        lam = [tuple(int(x) for x in row) for row in lam]
        if len(lam) != polytope.facet_count:
            raise StructureError(
                "lambda has %d rows for %d facets" % (len(lam), polytope.facet_count))
        if any(len(row) != polytope.dim for row in lam):
            raise StructureError("each lambda row must have length dim=%d" % polytope.dim)
        if signs is None:
            signs = [1] * polytope.facet_count
        signs = [int(s) for s in signs]
        if len(signs) != polytope.facet_count or any(s not in (-1, 1) for s in signs):
            raise StructureError("signs must be a +-1 vector of length m")
        self.polytope = polytope
        self.lam = tuple(lam)
        self.signs = tuple(signs)
        self.name = name or polytope.name
        self._report = None
        self._vertex_weights = None

    # ------------------------------------------------------------------

    @property
    def n(self):
        return self.polytope.dim

    @property
    def m(self):
        return self.polytope.facet_count

    def __repr__(self):
        return "CharacteristicPair(%s, n=%d, m=%d)" % (self.name or "?", self.n, self.m)

    def validate(self) -> ValidationReport:
        if self._report is not None:
            return self._report
        checks = []
        base = self.polytope.validate()
        checks.append(ValidationCheck(
            "polytope-valid", base.ok,
            "" if base.ok else "; ".join(c.name for c in base.failures())))

        prim_ok = True
        for i, row in enumerate(self.lam):
            g = 0
            for x in row:
                g = gcd(g, abs(x))
            if g != 1:
                prim_ok = False
                checks.append(ValidationCheck(
                    "primitive-rows", False,
                    "lambda row %d = %r is not primitive" % (i, row)))
                break
        if prim_ok:
            checks.append(ValidationCheck("primitive-rows", True))

        weights = {}
        unimodular = base.ok
        if base.ok:
            for vid, v in enumerate(self.polytope.vertices):
                block = [self.lam[i] for i in v]
                d = _det([list(r) for r in block])
                if d not in (-1, 1):
                    unimodular = False
                    checks.append(ValidationCheck(
                        "vertex-unimodular", False,
                        "vertex %r has det %d, expected +-1" % (v, d)))
                    break
                weights[vid] = VertexWeightData(
                    vid, v, _inverse_transpose([list(r) for r in block]))
            if unimodular:
                checks.append(ValidationCheck("vertex-unimodular", True))

        ok = base.ok and prim_ok and unimodular
        report = ValidationReport(ok, checks)
        if ok:
            self._vertex_weights = weights
        self._report = report
        return report

    def require_valid(self):
        report = self.validate()
        if not report.ok:
            raise ValidationError(
                "invalid characteristic pair %s: %s" % (
                    self.name or "?",
                    "; ".join("%s: %s" % (c.name, c.detail) for c in report.failures())),
                report)
        return self

    @property
    def vertex_weights(self):
        self.require_valid()
        return self._vertex_weights

    def euler_characteristic(self) -> int:
        """chi(M) = number of torus fixed points = number of vertices of P."""
        self.require_valid()
        return len(self.polytope.vertices)

    # ------------------------------------------------------------------

    def product_pair(self, other: "CharacteristicPair") -> "CharacteristicPair":
        """Block-diagonal pair on the product polytope."""
        self.require_valid()
        other.require_valid()
        poly = self.polytope.product(other.polytope)
        n1, n2 = self.n, other.n
        lam = [row + (0,) * n2 for row in self.lam]
        lam += [(0,) * n1 + row for row in other.lam]
        return CharacteristicPair(poly, lam, self.signs + other.signs,
                                  name=poly.name)

    def with_signs(self, signs) -> "CharacteristicPair":
        return CharacteristicPair(self.polytope, self.lam, signs, name=self.name)

    def to_index_model(self, seed=None):
        from .cohomology import QuasitoricModel
        if seed is None:
            return QuasitoricModel(self)
        return QuasitoricModel(self, seed=seed)

    # ------------------------------------------------------------------
    # JSON

    def to_json_dict(self):
        data = self.polytope.to_json_dict()
        data["name"] = self.name or data["name"]
        data["lambda"] = [list(r) for r in self.lam]
        data["signs"] = list(self.signs)
        return data

    @classmethod
    def from_json_dict(cls, data):
        poly = SimplePolytope.from_json_dict(data)
        if "lambda" not in data:
            raise StructureError("pair JSON needs a 'lambda' matrix")
        return cls(poly, data["lambda"], data.get("signs"),
                   name=data.get("name") or None)


# ----------------------------------------------------------------------
# spec'd free functions


def validate_pair(pair: CharacteristicPair) -> ValidationReport:
    return pair.validate()


def euler_characteristic(pair: CharacteristicPair) -> int:
    return pair.euler_characteristic()


def product_pair(p1: CharacteristicPair, p2: CharacteristicPair) -> CharacteristicPair:
    return p1.product_pair(p2)


def to_index_model(pair: CharacteristicPair, seed=None):
    return pair.to_index_model(seed=seed)


# ----------------------------------------------------------------------
# built-in families


def cp_pair(n: int) -> CharacteristicPair:
    """Complex projective n-space: simplex with rows e_1..e_n, -(1,..,1)."""
    lam = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    lam.append(tuple(-1 for _ in range(n)))
    return CharacteristicPair(simplex(n), lam, name="cp:%d" % n)


def sphere_pair() -> CharacteristicPair:
    """S^2 = CP^1 with the standard pair over the interval."""
    return CharacteristicPair(interval(), [(1,), (-1,)], name="s2")


def cube_pair(n: int) -> CharacteristicPair:
    """Product of n standard 2-spheres over the n-cube: rows e_j and -e_j."""
    lam = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    lam += [tuple(-1 if i == j else 0 for i in range(n)) for j in range(n)]
    return CharacteristicPair(cube(n), lam, name="cube:%d" % n)


def s2xs2_pair() -> CharacteristicPair:
    """S^2 x S^2 on the cyclically labeled square (opposite facets 0,2 and 1,3)."""
    lam = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    return CharacteristicPair(polygon(4), lam, name="s2xs2")


def hirzebruch_pair(k: int) -> CharacteristicPair:
    """Hirzebruch surface H_k over the square."""
    lam = [(1, 0), (0, 1), (-1, k), (0, -1)]
    return CharacteristicPair(polygon(4), lam, name="hirzebruch:%d" % k)


def polygon_pair(k: int) -> CharacteristicPair:
    """Quasitoric surface over a k-gon: alternating e_1, e_2 rows, last (1,1) if k odd."""
    lam = []
    for i in range(k):
        if k % 2 == 1 and i == k - 1:
            lam.append((1, 1))
        else:
            lam.append((1, 0) if i % 2 == 0 else (0, 1))
    return CharacteristicPair(polygon(k), lam, name="polygon:%d" % k)

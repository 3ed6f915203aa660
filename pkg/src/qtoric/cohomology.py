"""Index models: top-degree pairing oracles and characteristic-class tests.

A model packages everything the index pipeline needs from a closed oriented
manifold whose rational cohomology is generated in degree two: the
half-dimension n, labeled degree-2 generators, a top-degree pairing oracle,
the stable tangent roots, and a mod-2 oracle for degree-2 integral classes.

For quasitoric models the pairing is evaluated by exact fixed-point
localization: a sum over the vertices of the orbit polytope of restriction
quotients by tangent weights, evaluated at two independently drawn generic
rational points (the sum is a constant, so the points must agree; any
disagreement is reported as a bug, never returned).  A face-ring reduction
oracle provides an independent cross-check at small half-dimension.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InternalConsistencyError,
    OracleUnavailableError,
    StructureError,
)
from .polynomial import GradedPolynomial, monomials_of_degree

DEFAULT_SEED = 20250810
_POINT_LO = 10 ** 3
_POINT_HI = 10 ** 6

_ZERO = Fraction(0)


# ----------------------------------------------------------------------
# small exact linear algebra


def _rref(rows):
    """Reduced row echelon form over Fraction; returns (rref rows, pivot cols)."""
    rows = [list(map(Fraction, r)) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def matrix_rank(rows) -> int:
    rr, pivots = _rref(rows)
    return len(pivots)


def nullspace(rows, ncols):
    """Basis of the right nullspace of the matrix with the given rows."""
    rr, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [_ZERO] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rr[i][fc]
        basis.append(vec)
    return basis


def _solve_mod2(rows, rhs):
    """Is rhs in the column span of the matrix over GF(2)?  rows: list of tuples."""
    aug = [[x & 1 for x in row] + [b & 1] for row, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                aug[i] = [a ^ b for a, b in zip(aug[i], aug[r])]
        r += 1
    return all(any(row[:-1]) or not row[-1] for row in aug)


# ----------------------------------------------------------------------
# bundle specifications


class BundleSpec:
    """A sum of line bundles, each given by its first Chern class (degree <= 1)."""

    def __init__(self, classes, gen_count: int):
        classes = list(classes)
        for c in classes:
            if not isinstance(c, GradedPolynomial):
                raise StructureError("bundle classes must be GradedPolynomial")
            if not c.is_linear():
                raise StructureError("bundle class %r is not homogeneous of degree 1" % (c,))
        self.classes = classes
        self.gen_count = gen_count

    @classmethod
    def empty(cls, gen_count: int) -> "BundleSpec":
        return cls([], gen_count)

    @classmethod
    def from_vectors(cls, vectors, gen_count: int) -> "BundleSpec":
        classes = []
        for vec in vectors:
            if len(vec) != gen_count:
                raise StructureError(
                    "bundle vector %r has length %d, expected %d"
                    % (vec, len(vec), gen_count))
            classes.append(GradedPolynomial.linear(vec))
        return cls(classes, gen_count)

    @property
    def dim(self) -> int:
        return len(self.classes)

    def c1(self) -> GradedPolynomial:
        out = GradedPolynomial.zero()
        for c in self.classes:
            out = out + c
        return out

    def c1_vector(self):
        return self.c1().integer_vector(self.gen_count)

    def p1(self) -> GradedPolynomial:
        out = GradedPolynomial.zero()
        for c in self.classes:
            out = out + c.mul(c)
        return out

    def euler_class(self, trunc=None) -> GradedPolynomial:
        out = GradedPolynomial.one()
        for c in self.classes:
            out = out.mul(c, trunc)
        return out

    def to_vectors(self):
        return [list(c.integer_vector(self.gen_count)) for c in self.classes]

    def __repr__(self):
        return "BundleSpec(%d line bundles over %d generators)" % (self.dim, self.gen_count)


# ----------------------------------------------------------------------
# the abstract model


class IndexModel:
    """Interface shared by quasitoric, product, connected-sum and point models.

    Concrete subclasses set: n, gen_labels, tangent_roots (linear classes),
    c1_vector (integers), euler, name, and implement pair_monomial and
    is_even_vector.
    """

    n: int
    gen_labels: list
    tangent_roots: list
    c1_vector: tuple
    euler: int
    name: str

    @property
    def gen_count(self) -> int:
        return len(self.gen_labels)

    def generators(self):
        return [GradedPolynomial.generator(i) for i in range(self.gen_count)]

    def pair_monomial(self, mon) -> Fraction:
        raise NotImplementedError

    def is_even_vector(self, vec) -> bool:
        raise NotImplementedError

    def pair_top(self, poly: GradedPolynomial) -> Fraction:
        """<poly, [M]>: only the degree-n part contributes."""
        n = self.n
        total = _ZERO
        for mon, c in poly.terms.items():
            if len(mon) == n:
                total += c * self.pair_monomial(mon)
        return total

    def c1_poly(self) -> GradedPolynomial:
        out = GradedPolynomial.zero()
        for r in self.tangent_roots:
            out = out + r
        return out

    def p1_poly(self) -> GradedPolynomial:
        out = GradedPolynomial.zero()
        for r in self.tangent_roots:
            out = out + r.mul(r)
        return out

    def tangent_bundle(self) -> BundleSpec:
        return BundleSpec(list(self.tangent_roots), self.gen_count)

    def __repr__(self):
        return "%s(%s, n=%d, m=%d)" % (
            type(self).__name__, self.name or "?", self.n, self.gen_count)


class PointModel(IndexModel):
    """The one-point model: n = 0, pairing of the empty monomial is 1."""

    def __init__(self):
        self.n = 0
        self.gen_labels = []
        self.tangent_roots = []
        self.c1_vector = ()
        self.euler = 1
        self.name = "point"

    def pair_monomial(self, mon) -> Fraction:
        return Fraction(1) if mon == () else _ZERO

    def is_even_vector(self, vec) -> bool:
        return True


# ----------------------------------------------------------------------
# quasitoric models via localization


class QuasitoricModel(IndexModel):
    """Index model of a characteristic pair, backed by fixed-point localization.

    Generators u_i correspond to facets; u_i restricts at a vertex to
    signs_i times the dual covector of its lambda row there, and to 0 at
    vertices away from the facet.  The per-vertex orientation signs are
    propagated along polytope edges from the base vertex (the
    lexicographically first one, fixed to +1); this pins the fundamental
    class so that <u_1, [CP^1]> = +1 for the standard pair and makes the
    localization sums exactly the pairings against the linear relations
    sum_i lambda_ij * signs_i * u_i = 0.
    """

    def __init__(self, pair, seed: int = DEFAULT_SEED):
        pair.require_valid()
        self.pair = pair
        self.polytope = pair.polytope
        self.n = pair.n
        self.gen_labels = list(pair.polytope.facet_names)
        self.tangent_roots = [
            GradedPolynomial.generator(i, pair.signs[i]) for i in range(pair.m)]
        self.c1_vector = tuple(pair.signs)
        self.euler = len(pair.polytope.vertices)
        self.name = pair.name
        self.seed = seed
        self._eps = self._propagate_orientations()
        self._facet_vertices = [set() for _ in range(pair.m)]
        for vid, v in enumerate(pair.polytope.vertices):
            for i in v:
                self._facet_vertices[i].add(vid)
        self._points = None
        self._memo = {}
        self._ring_oracle = None

    # -- orientation bookkeeping ---------------------------------------

    def _edge_weight(self, vid, facet):
        data = self.pair.vertex_weights[vid]
        k = data.facets.index(facet)
        return data.weights[k]

    def _propagate_orientations(self):
        """Per-vertex signs making the localization sums orientation-consistent.

        Along an edge the two endpoint weights in the edge direction are
        proportional primitive covectors; consistency forces
        eps' * w' = -eps * w.  Any contradiction around a cycle is a bug.
        """
        verts = self.polytope.vertices
        eps = {0: 1}
        adj = {}
        for a, b in self.polytope.edges:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        stack = [0]
        order = []
        while stack:
            a = stack.pop()
            order.append(a)
            for b in adj[a]:
                shared = set(verts[a]) & set(verts[b])
                fa = next(i for i in verts[a] if i not in shared)
                fb = next(i for i in verts[b] if i not in shared)
                wa = self._edge_weight(a, fa)
                wb = self._edge_weight(b, fb)
                if wb == wa:
                    eps_b = -eps[a]
                elif wb == tuple(-x for x in wa):
                    eps_b = eps[a]
                else:
                    raise InternalConsistencyError(
                        "edge weights %r / %r along edge %r-%r are not up-to-sign equal"
                        % (wa, wb, verts[a], verts[b]))
                if b in eps:
                    if eps[b] != eps_b:
                        raise InternalConsistencyError(
                            "orientation signs inconsistent around a cycle at %r"
                            % (verts[b],))
                else:
                    eps[b] = eps_b
                    stack.append(b)
        return [eps[i] for i in range(len(verts))]

    @property
    def orientation_signs(self):
        return tuple(self._eps)

    # -- generic point machinery ----------------------------------------

    def _draw_point_data(self, rng):
        for _ in range(50):
            t = tuple(rng.randint(_POINT_LO, _POINT_HI) for _ in range(self.n))
            data = []
            ok = True
            for vid, v in enumerate(self.polytope.vertices):
                wd = self.pair.vertex_weights[vid]
                vals = {}
                den = self._eps[vid]
                for facet, w in zip(wd.facets, wd.weights):
                    x = sum(a * b for a, b in zip(w, t))
                    if x == 0:
                        ok = False
                        break
                    vals[facet] = x
                    den *= x
                if not ok:
                    break
                data.append((vals, den))
            if ok:
                return t, data
        raise InternalConsistencyError("could not draw a generic evaluation point")

    def _ensure_points(self):
        if self._points is None:
            rng = random.Random(self.seed)
            first = self._draw_point_data(rng)
            second = self._draw_point_data(rng)
            while second[0] == first[0]:
                second = self._draw_point_data(rng)
            self._points = (first, second)
        return self._points

    def _localize(self, mon, data):
        signs = self.pair.signs
        support = set(mon)
        vids = None
        for i in support:
            s = self._facet_vertices[i]
            vids = s if vids is None else vids & s
        if vids is None:
            vids = range(len(self.polytope.vertices))
        total = _ZERO
        for vid in vids:
            vals, den = data[vid]
            num = 1
            for i in mon:
                num *= signs[i] * vals[i]
            total += Fraction(num, den)
        return total

    # -- the pairing oracle ----------------------------------------------

    def pair_monomial(self, mon) -> Fraction:
        if len(mon) != self.n:
            return _ZERO
        mon = tuple(sorted(mon))
        got = self._memo.get(mon)
        if got is not None:
            return got
        (t1, d1), (t2, d2) = self._ensure_points()
        v1 = self._localize(mon, d1)
        v2 = self._localize(mon, d2)
        if v1 != v2:
            raise InternalConsistencyError(
                "localization of %r disagrees between generic points: %s vs %s"
                % (mon, v1, v2))
        self._memo[mon] = v1
        return v1

    def is_even_vector(self, vec) -> bool:
        """True iff sum a_i u_i vanishes in mod-2 cohomology (a_i = lambda_i . mu)."""
        if len(vec) != self.gen_count:
            raise StructureError("vector length %d, expected %d" % (len(vec), self.gen_count))
        return _solve_mod2(self.pair.lam, [int(a) for a in vec])

    # -- independent face-ring oracle --------------------------------------

    RING_ORACLE_MAX_N = 3
    RING_ORACLE_MAX_FREE = 8

    def _minimal_nonfaces(self, max_size):
        verts = [set(v) for v in self.polytope.vertices]
        m = self.pair.m

        def is_face(S):
            return any(S <= v for v in verts)

        minimal = []
        for size in range(2, max_size + 1):
            for S in itertools.combinations(range(m), size):
                Sset = set(S)
                if is_face(Sset):
                    continue
                if all(is_face(Sset - {i}) for i in S):
                    minimal.append(S)
        return minimal

    def _build_ring_oracle(self):
        n, m = self.n, self.pair.m
        if n > self.RING_ORACLE_MAX_N or m - n > self.RING_ORACLE_MAX_FREE:
            raise OracleUnavailableError(
                "face-ring oracle unavailable for n=%d, m=%d (budget n<=%d)"
                % (n, m, self.RING_ORACLE_MAX_N))
        base = self.polytope.vertices[0]
        free = [i for i in range(m) if i not in base]
        free_index = {i: r for r, i in enumerate(free)}
        signs = self.pair.signs
        lamt = [tuple(signs[i] * x for x in self.pair.lam[i]) for i in range(m)]
        from .charpair import _inverse_transpose
        inv_t = _inverse_transpose([list(lamt[i]) for i in base])  # (A^{-1})^T rows
        # u_elim = -(A^T)^{-1} B^T u_free; (A^T)^{-1} = (A^{-1})^T
        mapping = {}
        for k, i in enumerate(base):
            coeffs = {}
            for r, j in enumerate(free):
                c = -sum(inv_t[k][s] * lamt[j][s] for s in range(n))
                if c:
                    coeffs[r] = c
            mapping[i] = GradedPolynomial.linear(coeffs)
        for i in free:
            mapping[i] = GradedPolynomial.generator(free_index[i])

        basis = list(monomials_of_degree(len(free), n))
        basis_index = {mon: j for j, mon in enumerate(basis)}

        def to_vector(poly):
            vec = [_ZERO] * len(basis)
            for mon, c in poly.terms.items():
                if len(mon) != n:
                    raise InternalConsistencyError("substitution changed the degree")
                vec[basis_index[mon]] = c
            return vec

        span = []
        for S in self._minimal_nonfaces(n):
            g = GradedPolynomial({tuple(sorted(S)): Fraction(1)})
            g_sub = g.substitute(mapping)
            for h in monomials_of_degree(len(free), n - len(S)):
                vec = to_vector(g_sub.mul(GradedPolynomial({h: Fraction(1)})))
                if any(vec):
                    span.append(vec)
        kernel = nullspace(span, len(basis))
        if len(kernel) != 1:
            raise InternalConsistencyError(
                "face-ring top degree is %d-dimensional, expected 1" % len(kernel))
        phi = kernel[0]
        ref = GradedPolynomial({tuple(base): Fraction(1)}).substitute(mapping)
        val = sum(a * b for a, b in zip(phi, to_vector(ref)))
        if val == 0:
            raise InternalConsistencyError("reference vertex monomial pairs to 0")
        target = Fraction(1)
        for i in base:
            target *= signs[i]
        scale = target / val
        phi = [x * scale for x in phi]
        return mapping, phi, to_vector

    def ring_reduction_pairing(self, mon) -> Fraction:
        """Pairing via linear elimination and face-ring reduction.

        Independent of the localization route: uses only the linear relations,
        the face ideal, and the base-vertex normalization convention.
        """
        if len(mon) != self.n:
            return _ZERO
        if self._ring_oracle is None:
            self._ring_oracle = self._build_ring_oracle()
        mapping, phi, to_vector = self._ring_oracle
        poly = GradedPolynomial({tuple(sorted(mon)): Fraction(1)}).substitute(mapping)
        vec = to_vector(poly)
        return sum(a * b for a, b in zip(phi, vec))


# ----------------------------------------------------------------------
# spec'd free functions


def pair_top(model: IndexModel, poly: GradedPolynomial) -> Fraction:
    return model.pair_top(poly)


def localization_pairing(pair_or_model, mon) -> Fraction:
    model = _as_model(pair_or_model)
    return model.pair_monomial(tuple(mon))


def ring_reduction_pairing(pair_or_model, mon) -> Fraction:
    model = _as_model(pair_or_model)
    return model.ring_reduction_pairing(tuple(mon))


def _as_model(pair_or_model) -> QuasitoricModel:
    if isinstance(pair_or_model, QuasitoricModel):
        return pair_or_model
    return pair_or_model.to_index_model()


def is_zero_class(model: IndexModel, poly: GradedPolynomial) -> bool:
    """Rational zero test by Poincare duality: pair against all complements."""
    n = model.n
    for d in poly.degrees_present():
        if d > n:
            continue  # beyond top degree: zero automatically
        part = poly.homogeneous_part(d)
        for w in monomials_of_degree(model.gen_count, n - d):
            shifted = part.mul(GradedPolynomial({w: Fraction(1)}))
            if model.pair_top(shifted) != 0:
                return False
    return True


def is_even_class(model: IndexModel, cls) -> bool:
    """True iff the integral degree-2 class vanishes in mod-2 cohomology."""
    if isinstance(cls, GradedPolynomial):
        vec = cls.integer_vector(model.gen_count)
    else:
        vec = tuple(int(x) for x in cls)
    return model.is_even_vector(vec)


@dataclass
class AdmissibilityReport:
    spin_c_exists: bool
    w_is_spin: bool
    p1_zero: bool
    c1c_vector: tuple

    @property
    def met(self) -> bool:
        return self.spin_c_exists and self.w_is_spin and self.p1_zero

    def as_dict(self):
        return {
            "spin_c_exists": self.spin_c_exists,
            "w_is_spin": self.w_is_spin,
            "p1_zero": self.p1_zero,
            "hypotheses_met": self.met,
        }


def check_admissible(model: IndexModel, V: BundleSpec, W: BundleSpec,
                     c1c=None) -> AdmissibilityReport:
    """The three index-theorem hypotheses for (V, W) over the model.

    c1(V) must reduce to w_2(M) mod 2 (so a Spin^c structure with
    c1^c = c1(V) exists), W must be Spin, and p1(V + W - TM) must vanish
    rationally.
    """
    if V.dim:
        c1c_vec = V.c1_vector()
    elif c1c is not None:
        c1c_vec = (c1c.integer_vector(model.gen_count)
                   if isinstance(c1c, GradedPolynomial) else tuple(int(x) for x in c1c))
    else:
        c1c_vec = (0,) * model.gen_count
    diff = [a - b for a, b in zip(c1c_vec, model.c1_vector)]
    spin_c = model.is_even_vector(diff)
    w_spin = model.is_even_vector(W.c1_vector() if W.dim else (0,) * model.gen_count)
    p1_delta = V.p1() + W.p1() - model.p1_poly()
    p1_zero = is_zero_class(model, p1_delta)
    return AdmissibilityReport(spin_c, w_spin, p1_zero, tuple(c1c_vec))


def rank_of_pairing(model: IndexModel, k: int) -> int:
    """Rank of the pairing between degree-k and degree-(n-k) monomial spans."""
    rows = []
    right = list(monomials_of_degree(model.gen_count, model.n - k))
    for w1 in monomials_of_degree(model.gen_count, k):
        rows.append([model.pair_monomial(tuple(sorted(w1 + w2))) for w2 in right])
    return matrix_rank(rows)

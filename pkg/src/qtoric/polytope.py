"""Combinatorial simple polytopes from vertex-facet incidence data.

A polytope is given purely combinatorially: the facets are indexed
0..m-1 and each vertex is the set of the n facets through it.  Convex
realizability is never checked; validation covers the necessary
combinatorial conditions (simplicity, edge regularity, connectivity,
polygonal two-faces) and caches the derived face data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    BudgetExceededError,
    InternalConsistencyError,
    StructureError,
    UnsatisfiableError,
    ValidationError,
)


@dataclass
class ValidationCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    ok: bool
    checks: list = field(default_factory=list)

    def as_dict(self):
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }

    def failures(self):
        return [c for c in self.checks if not c.passed]


@dataclass(frozen=True)
class TwoFace:
    """A two-dimensional face: the n-2 facets containing it and its vertex cycle."""

    facet_complement: tuple
    cycle: tuple

    def __len__(self):
        return len(self.cycle)


@dataclass(frozen=True)
class FacetColoring:
    """Proper coloring of the facet adjacency graph, colors in 1..color_count."""

    colors: dict
    color_count: int

    def color_classes(self):
        classes = {}
        for facet, col in sorted(self.colors.items()):
            classes.setdefault(col, []).append(facet)
        return [classes[c] for c in sorted(classes)]

    def as_dict(self):
        return {
            "color_count": self.color_count,
            "colors": {str(k): v for k, v in sorted(self.colors.items())},
        }


class SimplePolytope:
    """Simple n-polytope given by its vertex-facet incidences."""

    def __init__(self, dim, vertices, facet_count=None, facet_names=None, name=None):
        if not isinstance(dim, int) or dim < 1:
            raise StructureError("dim must be an integer >= 1, got %r" % (dim,))
        vertex_sets = []
        for pos, v in enumerate(vertices):
            v = tuple(sorted(v))
            if len(set(v)) != len(v):
                raise StructureError("vertex %d repeats a facet index: %r" % (pos, v))
            for i in v:
                if not isinstance(i, int) or i < 0:
                    raise StructureError("vertex %d has a bad facet index %r" % (pos, i))
            vertex_sets.append(v)
        if not vertex_sets:
            raise StructureError("polytope needs at least one vertex")
        if len(set(vertex_sets)) != len(vertex_sets):
            dup = [v for v in vertex_sets if vertex_sets.count(v) > 1][0]
            raise StructureError("duplicate vertex %r" % (dup,))
        max_idx = max((max(v) for v in vertex_sets if v), default=-1)
        if facet_count is None:
            facet_count = max_idx + 1
        if max_idx >= facet_count:
            raise StructureError(
                "facet index %d out of range (facet_count=%d)" % (max_idx, facet_count)
            )
        self.dim = dim
        self.facet_count = facet_count
        self.vertices = tuple(sorted(vertex_sets))
        self.name = name
        if facet_names is None:
            facet_names = ["F%d" % i for i in range(facet_count)]
        if len(facet_names) != facet_count:
            raise StructureError("facet_names length must equal facet_count")
        self.facet_names = list(facet_names)
        self._report = None
        self._edges = None
        self._two_faces = None

    # ------------------------------------------------------------------

    @property
    def n(self):
        return self.dim

    @property
    def m(self):
        return self.facet_count

    def __repr__(self):
        return "SimplePolytope(%s, dim=%d, m=%d, vertices=%d)" % (
            self.name or "?", self.dim, self.facet_count, len(self.vertices))

    # ------------------------------------------------------------------
    # validation

    def validate(self) -> ValidationReport:
        if self._report is not None:
            return self._report
        checks = []
        n = self.dim

        simple = all(len(v) == n for v in self.vertices)
        bad = [v for v in self.vertices if len(v) != n]
        checks.append(ValidationCheck(
            "simplicity", simple,
            "" if simple else "vertex %r has %d facets, expected %d" % (bad[0], len(bad[0]), n)))

        edges = None
        edge_ok = False
        if simple:
            ridge_map = {}
            for vid, v in enumerate(self.vertices):
                for sub in itertools.combinations(v, n - 1):
                    ridge_map.setdefault(sub, []).append(vid)
            edge_ok = all(len(vs) == 2 for vs in ridge_map.values())
            if edge_ok:
                edges = sorted({tuple(sorted(vs)) for vs in ridge_map.values()})
            else:
                bad_sub = next(s for s, vs in ridge_map.items() if len(vs) != 2)
                checks.append(ValidationCheck(
                    "edge-regularity", False,
                    "facet set %r lies in %d vertices, expected 2"
                    % (bad_sub, len(ridge_map[bad_sub]))))
        if edge_ok:
            checks.append(ValidationCheck("edge-regularity", True))

        connected = False
        if edge_ok:
            adj = {i: [] for i in range(len(self.vertices))}
            for a, b in edges:
                adj[a].append(b)
                adj[b].append(a)
            seen = {0}
            stack = [0]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            connected = len(seen) == len(self.vertices)
        checks.append(ValidationCheck(
            "edge-graph-connected", connected,
            "" if connected else "edge graph is disconnected or undefined"))

        used = set()
        for v in self.vertices:
            used.update(v)
        coverage = used == set(range(self.facet_count))
        checks.append(ValidationCheck(
            "facet-coverage", coverage,
            "" if coverage else "unused facets %r" % sorted(set(range(self.facet_count)) - used)))

        two_faces = None
        faces_ok = False
        if edge_ok and connected and simple:
            try:
                two_faces = self._trace_two_faces(edges)
                faces_ok = True
                checks.append(ValidationCheck("two-faces-polygonal", True))
            except ValidationError as exc:
                checks.append(ValidationCheck("two-faces-polygonal", False, str(exc)))

        ok = simple and edge_ok and connected and coverage and faces_ok
        report = ValidationReport(ok, checks)
        if ok:
            self._edges = tuple(edges)
            self._two_faces = tuple(two_faces)
        self._report = report
        return report

    def _trace_two_faces(self, edges):
        n = self.dim
        if n < 2:
            return []
        edge_set = {tuple(sorted(e)) for e in edges}
        face_vertices = {}
        for vid, v in enumerate(self.vertices):
            for sub in itertools.combinations(v, n - 2):
                face_vertices.setdefault(sub, []).append(vid)
        faces = []
        for sub in sorted(face_vertices):
            members = face_vertices[sub]
            if len(members) < 3:
                raise ValidationError(
                    "two-face %r has only %d vertices" % (sub, len(members)))
            mset = set(members)
            nbrs = {v: [w for w in members
                        if w != v and tuple(sorted((v, w))) in edge_set]
                    for v in members}
            if any(len(ns) != 2 for ns in nbrs.values()):
                raise ValidationError("two-face %r is not 2-regular" % (sub,))
            start = min(members)
            cycle = [start]
            prev, cur = None, start
            while True:
                a, b = nbrs[cur]
                nxt = b if a == prev else a
                if nxt == start:
                    break
                if nxt in cycle:
                    raise ValidationError("two-face %r cycle is not simple" % (sub,))
                cycle.append(nxt)
                prev, cur = cur, nxt
            if len(cycle) != len(mset):
                raise ValidationError("two-face %r is not a single cycle" % (sub,))
            faces.append(TwoFace(sub, tuple(cycle)))
        return faces

    def require_valid(self):
        report = self.validate()
        if not report.ok:
            raise ValidationError(
                "invalid polytope %s: %s" % (
                    self.name or "?",
                    "; ".join("%s: %s" % (c.name, c.detail) for c in report.failures())),
                report)
        return self

    # ------------------------------------------------------------------
    # derived data (valid polytopes only)

    @property
    def edges(self):
        self.require_valid()
        return self._edges

    @property
    def two_faces(self):
        self.require_valid()
        return self._two_faces

    def facet_adjacency(self):
        """Adjacency sets of the facet graph: i ~ j iff some vertex contains both."""
        self.require_valid()
        adj = [set() for _ in range(self.facet_count)]
        for v in self.vertices:
            for i, j in itertools.combinations(v, 2):
                adj[i].add(j)
                adj[j].add(i)
        return adj

    def vertex_adjacency(self):
        self.require_valid()
        adj = [set() for _ in range(len(self.vertices))]
        for a, b in self._edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_even(self) -> bool:
        """True iff every two-face has an even number of vertices (vacuous for n=1)."""
        return all(len(f) % 2 == 0 for f in self.two_faces)

    def is_vertex_graph_bipartite(self) -> bool:
        self.require_valid()
        adj = self.vertex_adjacency()
        color = {}
        for start in range(len(self.vertices)):
            if start in color:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in color:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return False
        return True

    def f_vector(self):
        """f_k = number of k-dimensional faces, k = 0..n (f_n = 1 for P itself)."""
        self.require_valid()
        n = self.dim
        fv = []
        for codim in range(n, 0, -1):
            subs = set()
            for v in self.vertices:
                subs.update(itertools.combinations(v, codim))
            fv.append(len(subs))
        fv.append(1)
        return tuple(fv)

    def h_vector(self):
        """h-vector from the f-vector; h_k = dim of degree-2k rational cohomology.

        Simple-polytope convention: sum_k h_k t^k = sum_i f_i (t-1)^i.
        """
        n = self.dim
        fv = self.f_vector()
        coeffs = [0] * (n + 1)  # coefficient of t^j
        for i in range(n + 1):
            for j in range(i + 1):
                coeffs[j] += fv[i] * _binomial(i, j) * ((-1) ** (i - j))
        return tuple(coeffs)

    # ------------------------------------------------------------------

    def product(self, other: "SimplePolytope") -> "SimplePolytope":
        """Product polytope; facets are the disjoint union, indices of other shifted."""
        self.require_valid()
        other.require_valid()
        m1 = self.facet_count
        verts = []
        for v1 in self.vertices:
            for v2 in other.vertices:
                verts.append(v1 + tuple(j + m1 for j in v2))
        names = list(self.facet_names) + list(other.facet_names)
        label = "%sx%s" % (self.name or "P1", other.name or "P2")
        return SimplePolytope(self.dim + other.dim, verts,
                              facet_count=m1 + other.facet_count,
                              facet_names=names, name=label)

    # ------------------------------------------------------------------
    # JSON

    def to_json_dict(self):
        return {
            "name": self.name or "",
            "dim": self.dim,
            "facets": list(self.facet_names),
            "vertices": [list(v) for v in self.vertices],
        }

    @classmethod
    def from_json_dict(cls, data):
        try:
            dim = data["dim"]
            vertices = data["vertices"]
        except (KeyError, TypeError) as exc:
            raise StructureError("polytope JSON needs 'dim' and 'vertices': %s" % exc)
        facets = data.get("facets")
        return cls(dim, vertices,
                   facet_count=len(facets) if facets else None,
                   facet_names=facets, name=data.get("name") or None)


def _binomial(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


# ----------------------------------------------------------------------
# spec'd operations as free functions


def validate_polytope(p: SimplePolytope) -> ValidationReport:
    return p.validate()


def adjacency(p: SimplePolytope):
    return p.facet_adjacency()


def is_even(p: SimplePolytope) -> bool:
    return p.is_even()


def is_vertex_graph_bipartite(p: SimplePolytope) -> bool:
    return p.is_vertex_graph_bipartite()


def product(p1: SimplePolytope, p2: SimplePolytope) -> SimplePolytope:
    return p1.product(p2)


# ----------------------------------------------------------------------
# exact facet coloring

DEFAULT_NODE_BUDGET = 10 ** 6


def greedy_coloring(p: SimplePolytope):
    """Greedy upper-bound coloring, facets in descending-degree order."""
    adj = p.facet_adjacency()
    order = sorted(range(p.facet_count), key=lambda i: (-len(adj[i]), i))
    colors = {}
    for i in order:
        used = {colors[j] for j in adj[i] if j in colors}
        c = 1
        while c in used:
            c += 1
        colors[i] = c
    return FacetColoring(colors, max(colors.values()))


def _k_coloring(adj, order, k, budget):
    """Backtracking k-coloring; deterministic lowest-admissible-color order.

    Returns a color dict or None; raises BudgetExceededError when the node
    budget runs out (inconclusive, never a wrong answer).
    """
    colors = {}
    nodes = 0

    def rec(pos):
        nonlocal nodes
        if pos == len(order):
            return True
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                "coloring search inconclusive: node budget %d exceeded" % budget)
        i = order[pos]
        used = {colors[j] for j in adj[i] if j in colors}
        top = min(k, (max(colors.values()) if colors else 0) + 1)
        for c in range(1, top + 1):
            if c in used:
                continue
            colors[i] = c
            if rec(pos + 1):
                return True
            del colors[i]
        return False

    return dict(colors) if rec(0) else None


def facet_chromatic(p: SimplePolytope, max_colors=None,
                    node_budget=DEFAULT_NODE_BUDGET):
    """Exact facet chromatic number with a witnessing coloring.

    The n facets at any vertex are pairwise adjacent, so n is a clique lower
    bound; a greedy run seeds the upper bound.  Raises UnsatisfiableError when
    d_min would exceed max_colors.
    """
    p.require_valid()
    n = p.dim
    if max_colors is not None and max_colors < n:
        raise ValueError("max_colors must be >= dim; every vertex is an n-clique")
    greedy = greedy_coloring(p)
    if greedy.color_count == n:
        return n, greedy
    adj = p.facet_adjacency()
    order = sorted(range(p.facet_count), key=lambda i: (-len(adj[i]), i))
    cap = greedy.color_count if max_colors is None else min(greedy.color_count, max_colors)
    for d in range(n, cap + 1):
        found = _k_coloring(adj, order, d, node_budget)
        if found is not None:
            coloring = FacetColoring(found, d)
            verify_coloring(p, coloring)
            return d, coloring
    if max_colors is not None and max_colors < greedy.color_count:
        raise UnsatisfiableError(
            "no proper facet coloring with <= %d colors" % max_colors)
    # greedy witnesses cap colors, so the loop cannot fall through
    raise InternalConsistencyError("chromatic search fell through")  # pragma: no cover


def verify_coloring(p: SimplePolytope, coloring: FacetColoring):
    """Independent properness pass; raises ValidationError on a bad coloring."""
    colors = coloring.colors
    if set(colors) != set(range(p.facet_count)):
        raise ValidationError("coloring does not cover all facets")
    if any(not 1 <= c <= coloring.color_count for c in colors.values()):
        raise ValidationError("coloring uses out-of-range colors")
    for v in p.vertices:
        for i, j in itertools.combinations(v, 2):
            if colors[i] == colors[j]:
                raise ValidationError(
                    "facets %d,%d share a vertex but also color %d" % (i, j, colors[i]))
    return True


# ----------------------------------------------------------------------
# built-in families


def cube(n: int) -> SimplePolytope:
    """Combinatorial n-cube; facets j and j+n are opposite."""
    if n < 1:
        raise StructureError("cube dimension must be >= 1")
    verts = []
    for bits in itertools.product((0, 1), repeat=n):
        verts.append(tuple(j + n * b for j, b in enumerate(bits)))
    names = ["x%d+" % j for j in range(n)] + ["x%d-" % j for j in range(n)]
    return SimplePolytope(n, verts, facet_count=2 * n, facet_names=names,
                          name="cube:%d" % n)


def simplex(n: int) -> SimplePolytope:
    if n < 1:
        raise StructureError("simplex dimension must be >= 1")
    verts = [tuple(j for j in range(n + 1) if j != i) for i in range(n + 1)]
    return SimplePolytope(n, verts, facet_count=n + 1, name="simplex:%d" % n)


def polygon(k: int) -> SimplePolytope:
    if k < 3:
        raise StructureError("polygon needs at least 3 edges")
    verts = [tuple(sorted((i, (i + 1) % k))) for i in range(k)]
    return SimplePolytope(2, verts, facet_count=k, name="polygon:%d" % k)


def interval() -> SimplePolytope:
    return cube(1)


def prism(k: int) -> SimplePolytope:
    """Prism over a k-gon."""
    p = polygon(k).product(interval())
    p.name = "prism:%d" % k
    return p

"""The twisted index of a Spin^c Dirac operator as a truncated q-series.

phi_c(M; V, W) is evaluated cohomologically: the top-degree pairing of

    e(V) * Q2'(V) * Q1(TM) * Q3(W) * Ahat(TM)          (V a sum of lines)
    e^{c1c/2}    * Q1(TM) * Q3(W) * Ahat(TM)           (V = 0)

per power of q, all over exact rationals.  Special cases: the Witten genus
is the V = W = 0 index with c1c = 0, and the elliptic genus twists by the
stable tangent roots (with the trivial-summand doubling divided back out).
Product and connected-sum models let the multiplicativity and additivity
formulas be verified numerically coefficient by coefficient.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .cohomology import (
    AdmissibilityReport,
    BundleSpec,
    IndexModel,
    QuasitoricModel,
    check_admissible,
)
from .errors import HypothesisUnmetError, InternalConsistencyError, StructureError
from .polynomial import GradedPolynomial
from .polytope import FacetColoring, verify_coloring
from .qseries import bundle_series, root_factor

DEFAULT_Q_ORDER = 4


@dataclass
class IndexResult:
    """A computed index series plus the hypothesis flags and reproducibility data."""

    series: list                      # exact rationals, q^0 .. q^N
    admissibility: AdmissibilityReport
    warnings: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    @property
    def q_order(self) -> int:
        return len(self.series) - 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.series)

    def constant_in_q(self) -> bool:
        return all(c == 0 for c in self.series[1:])

    def as_dict(self):
        out = {
            "series": [str(c) for c in self.series],
            "q_order": self.q_order,
            "admissibility": self.admissibility.as_dict(),
            "warnings": list(self.warnings),
        }
        out.update(self.meta)
        return out


def _as_bundle(model: IndexModel, spec) -> BundleSpec:
    if spec is None:
        return BundleSpec.empty(model.gen_count)
    if isinstance(spec, BundleSpec):
        return spec
    return BundleSpec.from_vectors(spec, model.gen_count)


def phi_c(model: IndexModel, V=None, W=None, q_order: int = DEFAULT_Q_ORDER,
          c1c=None, via_q2: bool = False, threads: int = 1) -> IndexResult:
    """Twisted Dirac index over any model, per power of q.

    With V a nonzero sum of line bundles the Euler-class route e(V)*Q2'(V)
    is used (integral classes only); via_q2=True switches to the
    e^{c1(V)/2}*Q2(V) form, which must agree when c1c = c1(V).  With V = 0
    the class c1c (default 0, the Witten-genus convention) enters through
    e^{c1c/2} alone.
    """
    V = _as_bundle(model, V)
    W = _as_bundle(model, W)
    n = model.n
    warnings = []
    admissibility = check_admissible(model, V, W, c1c=c1c)

    if V.dim and c1c is not None:
        raise StructureError("c1c is determined by V when V is nonzero")

    if V.dim == 0:
        if c1c is None:
            c1c_poly = GradedPolynomial.zero()
            if not model.is_even_vector(model.c1_vector):
                warnings.append(
                    "c1(M) is not even: no Spin structure, c1^c = 0 is a formal choice")
        elif isinstance(c1c, GradedPolynomial):
            c1c_poly = c1c
        else:
            c1c_poly = GradedPolynomial.linear(list(c1c))
        integrand = root_factor("EXPHALF", c1c_poly, q_order, n)
    elif via_q2:
        integrand = bundle_series("EXPHALF", V.classes, q_order, n)
        integrand = integrand * bundle_series("Q2", V.classes, q_order, n)
    else:
        euler = V.euler_class(trunc=n)
        integrand = bundle_series("Q2PRIME", V.classes, q_order, n) * euler

    integrand = integrand * bundle_series("Q1", model.tangent_roots, q_order, n)
    integrand = integrand * bundle_series("AHAT", model.tangent_roots, q_order, n)
    if W.dim:
        integrand = integrand * bundle_series("Q3", W.classes, q_order, n)

    if not admissibility.met:
        warnings.append("hypotheses unmet: " + ", ".join(
            k for k, v in admissibility.as_dict().items()
            if k != "hypotheses_met" and not v))

    coeffs = integrand.coeffs
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            series = list(pool.map(model.pair_top, coeffs))
    else:
        series = [model.pair_top(c) for c in coeffs]

    meta = {
        "model": model.name,
        "V": V.to_vectors(),
        "W": W.to_vectors(),
        "constant_in_q": all(c == 0 for c in series[1:]),
    }
    seed = getattr(model, "seed", None)
    if seed is not None:
        meta["seed"] = seed
    return IndexResult(series, admissibility, warnings, meta)


# ----------------------------------------------------------------------
# genera


def witten_genus(model: IndexModel, q_order: int = DEFAULT_Q_ORDER) -> IndexResult:
    """phi_c(M; 0, 0) with c1^c = 0.

    Computed for any model; modularity needs Spin and p1 = 0, which the
    admissibility flags report but do not enforce.
    """
    result = phi_c(model, None, None, q_order=q_order)
    result.meta["genus"] = "witten"
    return result


def elliptic_genus(model: IndexModel, q_order: int = DEFAULT_Q_ORDER) -> IndexResult:
    """phi_c(M; 0, TM) for Spin models, normalized for the stable trivial summands.

    Twisting by the stable root list multiplies each coefficient by 2 per
    trivial summand; dividing by 2^(#roots - n) removes exactly that.
    Refuses non-Spin input, where the canonical structure does not exist.
    """
    if not model.is_even_vector(model.c1_vector):
        raise HypothesisUnmetError(
            "elliptic genus needs a Spin model: c1(%s) is not even" % model.name)
    W = model.tangent_bundle()
    result = phi_c(model, None, W, q_order=q_order)
    extras = len(model.tangent_roots) - model.n
    scale = Fraction(1, 2 ** extras)
    result.series = [c * scale for c in result.series]
    result.meta["genus"] = "elliptic"
    result.meta["trivial_summand_scale"] = str(scale)
    return result


# ----------------------------------------------------------------------
# colored indices


def colored_classes(model: QuasitoricModel, coloring: FacetColoring, signs=None):
    """One degree-2 class per color: the signed sum of that color's generators."""
    if signs is None:
        signs = [1] * model.gen_count
    if len(signs) != model.gen_count or any(s not in (-1, 1) for s in signs):
        raise StructureError("signs must be a +-1 vector of length m")
    classes = []
    for facets in coloring.color_classes():
        classes.append(GradedPolynomial.linear(
            {i: signs[i] for i in facets}))
    return classes


def colored_index(model: QuasitoricModel, coloring: FacetColoring, signs=None,
                  q_order: int = DEFAULT_Q_ORDER) -> IndexResult:
    """Index twisted by the coloring bundle V = sum of per-color line bundles.

    Needs a proper coloring with exactly n colors.  The series is constant in
    q with value <prod of color classes, [M]>; both are computed and returned
    so the identity can be checked externally.
    """
    verify_coloring(model.polytope, coloring)
    if coloring.color_count != model.n:
        raise HypothesisUnmetError(
            "coloring uses %d colors, need exactly n=%d"
            % (coloring.color_count, model.n))
    classes = colored_classes(model, coloring, signs)
    V = BundleSpec(classes, model.gen_count)
    result = phi_c(model, V, None, q_order=q_order)
    prod = GradedPolynomial.one()
    for c in classes:
        prod = prod.mul(c, model.n)
    result.meta["predicted_constant"] = model.pair_top(prod)
    result.meta["genus"] = "colored"
    return result


def exists_nonvanishing_signs(model: QuasitoricModel, coloring: FacetColoring):
    """Search sign vectors for a nonzero colored pairing; one exists when d = n.

    Flipping all signs within one color class only negates the value, so the
    first facet of each class is pinned to +1.  Exhausting the search space
    contradicts the coloring lemma and is flagged as an implementation fault.
    """
    verify_coloring(model.polytope, coloring)
    if coloring.color_count != model.n:
        raise HypothesisUnmetError(
            "coloring uses %d colors, need exactly n=%d"
            % (coloring.color_count, model.n))
    classes = coloring.color_classes()
    pinned = {facets[0] for facets in classes}
    rest = [i for i in range(model.gen_count) if i not in pinned]
    for mask in range(2 ** len(rest)):
        signs = [1] * model.gen_count
        for b, i in enumerate(rest):
            if (mask >> b) & 1:
                signs[i] = -1
        prod = GradedPolynomial.one()
        for cls in colored_classes(model, coloring, signs):
            prod = prod.mul(cls, model.n)
        if model.pair_top(prod) != 0:
            return True, tuple(signs)
    raise InternalConsistencyError(
        "no sign vector gives a nonzero colored pairing; contradicts the "
        "coloring lemma, implementation fault")


# ----------------------------------------------------------------------
# model combinators


class ProductModel(IndexModel):
    """Model of a cartesian product: split pairings multiply."""

    def __init__(self, left: IndexModel, right: IndexModel):
        self.left = left
        self.right = right
        self.offset = left.gen_count
        self.n = left.n + right.n
        self.gen_labels = (["L:" + s for s in left.gen_labels]
                           + ["R:" + s for s in right.gen_labels])
        self.tangent_roots = (list(left.tangent_roots)
                              + [r.shift_generators(self.offset)
                                 for r in right.tangent_roots])
        self.c1_vector = tuple(left.c1_vector) + tuple(right.c1_vector)
        self.euler = left.euler * right.euler
        self.name = "(%s)x(%s)" % (left.name, right.name)

    def _split(self, mon):
        lm = tuple(i for i in mon if i < self.offset)
        rm = tuple(i - self.offset for i in mon if i >= self.offset)
        return lm, rm

    def pair_monomial(self, mon) -> Fraction:
        lm, rm = self._split(mon)
        a = self.left.pair_monomial(lm)
        if a == 0:
            return Fraction(0)
        return a * self.right.pair_monomial(rm)

    def is_even_vector(self, vec) -> bool:
        return (self.left.is_even_vector(vec[:self.offset])
                and self.right.is_even_vector(vec[self.offset:]))


class ConnectedSumModel(IndexModel):
    """Cohomology model of a connected sum of two models of equal n >= 2.

    Positive-degree classes from the two summands multiply to zero; purely
    one-sided top pairings delegate to their summand, the right one weighted
    by the orientation sign identifying the two top classes.
    """

    def __init__(self, left: IndexModel, right: IndexModel, orientation_sign: int = 1):
        if left.n != right.n:
            raise StructureError("connected sum needs equal half-dimensions")
        if left.n < 2:
            raise StructureError("connected sum model needs n >= 2")
        if orientation_sign not in (-1, 1):
            raise StructureError("orientation_sign must be +-1")
        self.left = left
        self.right = right
        self.sign = orientation_sign
        self.offset = left.gen_count
        self.n = left.n
        self.gen_labels = (["L:" + s for s in left.gen_labels]
                           + ["R:" + s for s in right.gen_labels])
        self.tangent_roots = (list(left.tangent_roots)
                              + [r.shift_generators(self.offset)
                                 for r in right.tangent_roots])
        self.c1_vector = tuple(left.c1_vector) + tuple(right.c1_vector)
        self.euler = left.euler + right.euler - 2
        self.name = "(%s)#(%s)" % (left.name, right.name)

    def pair_monomial(self, mon) -> Fraction:
        if all(i < self.offset for i in mon):
            return self.left.pair_monomial(mon)
        if all(i >= self.offset for i in mon):
            return self.sign * self.right.pair_monomial(
                tuple(i - self.offset for i in mon))
        return Fraction(0)

    def is_even_vector(self, vec) -> bool:
        return (self.left.is_even_vector(vec[:self.offset])
                and self.right.is_even_vector(vec[self.offset:]))


def product_model(m1: IndexModel, m2: IndexModel) -> ProductModel:
    return ProductModel(m1, m2)


def connected_sum_model(m1: IndexModel, m2: IndexModel,
                        orientation_sign: int = 1) -> ConnectedSumModel:
    return ConnectedSumModel(m1, m2, orientation_sign)


def extend_bundles(model: ProductModel, V1: BundleSpec, V2: BundleSpec) -> BundleSpec:
    """External direct sum V1 (+) V2 over a product model."""
    classes = list(V1.classes) + [c.shift_generators(model.offset) for c in V2.classes]
    return BundleSpec(classes, model.gen_count)


def tensor_extend(model: ConnectedSumModel, V1: BundleSpec, V2: BundleSpec) -> BundleSpec:
    """Pairwise tensor of line bundles over a connected sum.

    The shorter list is padded with trivial bundles, so the j-th class
    restricts to the j-th class of each summand (0 beyond its length).
    """
    k = max(V1.dim, V2.dim)
    classes = []
    for j in range(k):
        c = GradedPolynomial.zero()
        if j < V1.dim:
            c = c + V1.classes[j]
        if j < V2.dim:
            c = c + V2.classes[j].shift_generators(model.offset)
        classes.append(c)
    return BundleSpec(classes, model.gen_count)


# ----------------------------------------------------------------------
# theorem verification


def series_product(a, b):
    """Cauchy product of two coefficient lists, truncated to their length."""
    N = min(len(a), len(b)) - 1
    return [sum(a[i] * b[j - i] for i in range(j + 1)) for j in range(N + 1)]


def verify_product_formula(m1: IndexModel, V1, W1, m2: IndexModel, V2, W2,
                           q_order: int = DEFAULT_Q_ORDER) -> dict:
    """Check phi_c(M1 x M2; V1 (+) V2, W1 (+) W2) = phi_c(M1)*phi_c(M2) in Z[[q]]."""
    V1 = _as_bundle(m1, V1)
    W1 = _as_bundle(m1, W1)
    V2 = _as_bundle(m2, V2)
    W2 = _as_bundle(m2, W2)
    prod = ProductModel(m1, m2)
    V = extend_bundles(prod, V1, V2)
    W = extend_bundles(prod, W1, W2)
    lhs = phi_c(prod, V, W, q_order=q_order)
    r1 = phi_c(m1, V1, W1, q_order=q_order)
    r2 = phi_c(m2, V2, W2, q_order=q_order)
    rhs = series_product(r1.series, r2.series)
    return {
        "theorem": "product",
        "model": prod.name,
        "lhs": [str(c) for c in lhs.series],
        "rhs": [str(c) for c in rhs],
        "factor_series": [[str(c) for c in r1.series], [str(c) for c in r2.series]],
        "equal": lhs.series == rhs,
        "hypotheses_met": lhs.admissibility.met,
    }


def verify_connected_sum_formula(m1: IndexModel, V1, W1, m2: IndexModel, V2, W2,
                                 q_order: int = DEFAULT_Q_ORDER,
                                 orientation_sign: int = 1) -> dict:
    """Check the connected-sum index identity against independently computed sides.

    Equal bundle lengths: LHS = 2^{dim W2} phi_1 + 2^{dim W1} phi_2.
    Strictly longer V on one side: only that side's term survives.
    """
    V1 = _as_bundle(m1, V1)
    W1 = _as_bundle(m1, W1)
    V2 = _as_bundle(m2, V2)
    W2 = _as_bundle(m2, W2)
    adm1 = check_admissible(m1, V1, W1)
    adm2 = check_admissible(m2, V2, W2)
    summod = ConnectedSumModel(m1, m2, orientation_sign)
    V = tensor_extend(summod, V1, V2)
    W = BundleSpec(
        list(c for c in W1.classes)
        + [c.shift_generators(summod.offset) for c in W2.classes],
        summod.gen_count)
    lhs = phi_c(summod, V, W, q_order=q_order)
    r1 = phi_c(m1, V1, W1, q_order=q_order)
    r2 = phi_c(m2, V2, W2, q_order=q_order)
    c1 = Fraction(2 ** W2.dim)
    c2 = Fraction(2 ** W1.dim) * orientation_sign
    if V1.dim > V2.dim:
        rhs = [c1 * a for a in r1.series]
        case = "dim V1 > dim V2"
    elif V2.dim > V1.dim:
        rhs = [c2 * b for b in r2.series]
        case = "dim V2 > dim V1"
    else:
        rhs = [c1 * a + c2 * b for a, b in zip(r1.series, r2.series)]
        case = "equal dimensions"
    return {
        "theorem": "connected-sum",
        "model": summod.name,
        "case": case,
        "lhs": [str(c) for c in lhs.series],
        "rhs": [str(c) for c in rhs],
        "summand_series": [[str(c) for c in r1.series], [str(c) for c in r2.series]],
        "equal": lhs.series == rhs,
        "hypotheses_met": adm1.met and adm2.met,
        "summand_admissibility": [adm1.as_dict(), adm2.as_dict()],
    }


def verify_exhaustive_split_vanishing(model: IndexModel, subset,
                                      q_order: int = DEFAULT_Q_ORDER) -> dict:
    """Split the stable line bundles into V (indices in subset) and W (the rest).

    When the mod-2 hypotheses hold the index vanishes identically; with the
    hypotheses unmet the series is reported without any assertion.
    """
    subset = sorted(set(subset))
    m = len(model.tangent_roots)
    if any(i < 0 or i >= m for i in subset):
        raise StructureError("subset indices must name stable line bundles 0..%d" % (m - 1))
    V = BundleSpec([model.tangent_roots[i] for i in subset], model.gen_count)
    W = BundleSpec([model.tangent_roots[i] for i in range(m) if i not in subset],
                   model.gen_count)
    result = phi_c(model, V, W, q_order=q_order)
    return {
        "theorem": "exhaustive-split",
        "model": model.name,
        "subset": subset,
        "series": [str(c) for c in result.series],
        "is_zero": result.is_zero(),
        "hypotheses_met": result.admissibility.met,
        "admissibility": result.admissibility.as_dict(),
    }


def admissible_splits(model: IndexModel):
    """All subsets S for which the exhaustive split (V_S, W_S) meets the hypotheses."""
    from itertools import combinations
    m = len(model.tangent_roots)
    out = []
    for size in range(m + 1):
        for S in combinations(range(m), size):
            V = BundleSpec([model.tangent_roots[i] for i in S], model.gen_count)
            W = BundleSpec([model.tangent_roots[i] for i in range(m) if i not in S],
                           model.gen_count)
            if check_admissible(model, V, W).met:
                out.append(S)
    return out

"""Command-line front end.

Reads manifolds as JSON (from a file or stdin), dispatches the library
computations, and emits machine-readable JSON (default) or plain text.
Rationals are serialized as strings "p/q" so nothing is lost to floats.

Exit codes: 0 success, 2 validation failure or malformed input,
3 hypothesis unmet (incl. inconclusive searches), 4 internal-consistency error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import charpair as cp
from . import polytope as pt
from .cohomology import DEFAULT_SEED, QuasitoricModel, check_admissible
from .errors import (
    BudgetExceededError,
    HypothesisUnmetError,
    InternalConsistencyError,
    QtoricError,
    StructureError,
    UnsatisfiableError,
    ValidationError,
)
from .index import (
    colored_index,
    elliptic_genus,
    phi_c,
    verify_connected_sum_formula,
    verify_exhaustive_split_vanishing,
    verify_product_formula,
    witten_genus,
)
from .symmetry import alpha, symmetry_report

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_HYPOTHESIS = 3
EXIT_INTERNAL = 4

_FAMILIES = {
    "cube": lambda k: cp.cube_pair(k),
    "simplex": lambda k: cp.cp_pair(k),
    "cp": lambda k: cp.cp_pair(k),
    "polygon": lambda k: cp.polygon_pair(k),
    "hirzebruch": lambda k: cp.hirzebruch_pair(k),
}
_PLAIN = {
    "s2": cp.sphere_pair,
    "s2xs2": cp.s2xs2_pair,
}


def generate_pair(spec: str) -> cp.CharacteristicPair:
    """Built-in families: cube:n, simplex:n, polygon:k, hirzebruch:k, cp:n,
    s2, s2xs2, and products joined with '*'."""
    parts = spec.split("*")
    pairs = []
    for part in parts:
        part = part.strip()
        if part in _PLAIN:
            pairs.append(_PLAIN[part]())
            continue
        if ":" not in part:
            raise StructureError("unknown family %r" % part)
        fam, _, arg = part.partition(":")
        if fam not in _FAMILIES:
            raise StructureError("unknown family %r" % fam)
        try:
            k = int(arg)
        except ValueError:
            raise StructureError("bad family parameter in %r" % part)
        pairs.append(_FAMILIES[fam](k))
    out = pairs[0]
    for other in pairs[1:]:
        out = out.product_pair(other)
    return out


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise StructureError("cannot read manifold JSON from %r: %s" % (path, exc))


def load_pair(path: str) -> cp.CharacteristicPair:
    return cp.CharacteristicPair.from_json_dict(_read_json(path))


def load_polytope(path: str) -> pt.SimplePolytope:
    data = _read_json(path)
    if "lambda" in data:
        return cp.CharacteristicPair.from_json_dict(data).polytope
    return pt.SimplePolytope.from_json_dict(data)


def _emit(args, payload, text_lines=None):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in (text_lines or [json.dumps(payload, sort_keys=True)]):
            print(line)


def _parse_bundle(arg):
    if arg is None:
        return None
    try:
        data = json.loads(arg)
    except json.JSONDecodeError as exc:
        raise StructureError("bundle spec must be JSON like [[1,0,1,0]]: %s" % exc)
    if not isinstance(data, list):
        raise StructureError("bundle spec must be a list of coefficient vectors")
    return data


def _parse_signs(arg, m):
    if arg is None:
        return None
    if set(arg) <= {"+", "-"}:
        signs = [1 if ch == "+" else -1 for ch in arg]
    else:
        signs = [int(x) for x in arg.replace(",", " ").split()]
    if len(signs) != m:
        raise StructureError("signs need one entry per facet (%d)" % m)
    return signs


def _result_payload(result):
    return result.as_dict()


# ----------------------------------------------------------------------
# subcommand handlers


def cmd_generate(args):
    pair = generate_pair(args.family)
    pair.require_valid()
    print(json.dumps(pair.to_json_dict(), sort_keys=True, indent=2))
    return EXIT_OK


def cmd_validate(args):
    data = _read_json(args.manifold)
    if "lambda" in data:
        pair = cp.CharacteristicPair.from_json_dict(data)
        report = pair.validate()
    else:
        report = pt.SimplePolytope.from_json_dict(data).validate()
    _emit(args, report.as_dict(),
          ["%s: %s %s" %ize for ize in
           ((c.name, "ok" if c.passed else "FAIL", c.detail) for c in report.checks)])
    return EXIT_OK if report.ok else EXIT_VALIDATION


def cmd_analyze(args):
    poly = load_polytope(args.manifold).require_valid()
    even = poly.is_even()
    bip = poly.is_vertex_graph_bipartite()
    d_min, coloring = pt.facet_chromatic(poly)
    joswig = (even == bip == (d_min == poly.dim))
    payload = {
        "name": poly.name,
        "dim": poly.dim,
        "facets": poly.facet_count,
        "vertices": len(poly.vertices),
        "edges": len(poly.edges),
        "two_faces": [len(f) for f in poly.two_faces],
        "is_even": even,
        "vertex_graph_bipartite": bip,
        "facet_chromatic": d_min,
        "coloring": coloring.as_dict(),
        "joswig_consistent": joswig,
    }
    _emit(args, payload)
    if not joswig:
        raise InternalConsistencyError(
            "evenness, bipartiteness and n-colorability disagree")
    return EXIT_OK


def cmd_chi(args):
    pair = load_pair(args.manifold)
    chi = pair.euler_characteristic()
    _emit(args, {"name": pair.name, "chi": chi}, [str(chi)])
    return EXIT_OK


def cmd_index(args):
    pair = load_pair(args.manifold)
    model = pair.to_index_model(seed=args.seed)
    result = phi_c(model, _parse_bundle(args.V), _parse_bundle(args.W),
                   q_order=args.q_order, threads=args.threads,
                   via_q2=args.via_q2)
    _emit(args, _result_payload(result),
          ["phi_c(%s) = %s" % (model.name,
                               " + ".join("%s q^%d" % (c, j)
                                          for j, c in enumerate(result.series)))])
    return EXIT_OK


def cmd_genus(args):
    pair = load_pair(args.manifold)
    model = pair.to_index_model(seed=args.seed)
    if args.kind == "witten":
        result = witten_genus(model, q_order=args.q_order)
    else:
        result = elliptic_genus(model, q_order=args.q_order)
    _emit(args, _result_payload(result))
    return EXIT_OK


def cmd_color_index(args):
    pair = load_pair(args.manifold)
    model = pair.to_index_model(seed=args.seed)
    d_min, coloring = pt.facet_chromatic(pair.polytope)
    if d_min != pair.n:
        raise HypothesisUnmetError(
            "orbit polytope is not n-colorable (d_min=%d, n=%d)" % (d_min, pair.n))
    signs = _parse_signs(args.signs, pair.m)
    result = colored_index(model, coloring, signs, q_order=args.q_order)
    payload = _result_payload(result)
    payload["coloring"] = coloring.as_dict()
    payload["predicted_constant"] = str(result.meta["predicted_constant"])
    _emit(args, payload)
    return EXIT_OK


def cmd_verify(args):
    pair = load_pair(args.manifold)
    model = pair.to_index_model(seed=args.seed)
    if args.theorem == "split":
        if args.S is None:
            raise StructureError("verify split needs --S like '0,1'")
        subset = [int(x) for x in args.S.replace(",", " ").split()]
        payload = verify_exhaustive_split_vanishing(model, subset, q_order=args.q_order)
        _emit(args, payload)
        if not payload["hypotheses_met"]:
            return EXIT_HYPOTHESIS
        if not payload["is_zero"]:
            raise InternalConsistencyError("admissible split with nonzero index")
        return EXIT_OK
    if args.other is None:
        raise StructureError("verify %s needs --other" % args.theorem)
    other = load_pair(args.other).to_index_model(seed=args.seed)
    V1, W1 = _parse_bundle(args.V1), _parse_bundle(args.W1)
    V2, W2 = _parse_bundle(args.V2), _parse_bundle(args.W2)
    if args.theorem == "product":
        payload = verify_product_formula(model, V1, W1, other, V2, W2,
                                         q_order=args.q_order)
    else:
        payload = verify_connected_sum_formula(
            model, V1, W1, other, V2, W2, q_order=args.q_order,
            orientation_sign=args.orientation_sign)
    _emit(args, payload)
    if not payload.get("hypotheses_met", True):
        return EXIT_HYPOTHESIS
    if not payload["equal"]:
        raise InternalConsistencyError("formula verification failed")
    return EXIT_OK


def cmd_symmetry_report(args):
    pair = load_pair(args.manifold)
    model = pair.to_index_model(seed=args.seed)
    nonzero = args.assume_index_nonzero
    if not nonzero:
        try:
            d_min, coloring = pt.facet_chromatic(pair.polytope)
            if d_min == pair.n:
                from .index import exists_nonvanishing_signs
                nonzero, _ = exists_nonvanishing_signs(model, coloring)
        except (UnsatisfiableError, BudgetExceededError):
            nonzero = False
    report = symmetry_report(model, index_nonvanishing=nonzero, q_order=args.q_order)
    _emit(args, report.as_dict())
    return EXIT_OK


def cmd_alpha(args):
    rows = []
    for l in range(1, args.max_rank + 1):
        value, witnesses = alpha(l)
        rows.append({
            "l": l,
            "alpha": str(value),
            "witnesses": [g.name for g in witnesses],
        })
    _emit(args, {"alpha": rows},
          ["l=%2d  alpha=%4s  witnesses: %s" %
           (r["l"], r["alpha"], ", ".join(r["witnesses"]) or "none") for r in rows])
    return EXIT_OK


# ----------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q-order", type=int, dest="q_order",
                        default=argparse.SUPPRESS,
                        help="truncation order in q (default 4)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for the generic localization points")
    common.add_argument("--format", choices=("json", "text"),
                        default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="opt-in worker threads for the pairing stage")

    parser = argparse.ArgumentParser(
        prog="qtoric", parents=[common],
        description="Twisted Dirac indices, genera, facet colorings and "
                    "symmetry bounds for quasitoric manifolds")
    parser.set_defaults(q_order=4, seed=DEFAULT_SEED, format="json", threads=1)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common],
                       help="emit a built-in family as pair JSON")
    p.add_argument("family", help="cube:n, simplex:n, polygon:k, hirzebruch:k, "
                                  "cp:n, s2, s2xs2, or products joined with '*'")
    p.set_defaults(func=cmd_generate)

    def with_manifold(name, **kw):
        q = sub.add_parser(name, parents=[common], **kw)
        q.add_argument("--manifold", default="-",
                       help="path to manifold JSON, '-' for stdin (default)")
        return q

    p = with_manifold("validate", help="validate a polytope or pair")
    p.set_defaults(func=cmd_validate)

    p = with_manifold("analyze", help="evenness, bipartiteness, chromatic number")
    p.set_defaults(func=cmd_analyze)

    p = with_manifold("chi", help="Euler characteristic")
    p.set_defaults(func=cmd_chi)

    p = with_manifold("index", help="twisted index phi_c(M;V,W)")
    p.add_argument("--V", help="bundle spec JSON, e.g. [[1,0,1,0]]")
    p.add_argument("--W", help="bundle spec JSON")
    p.add_argument("--via-q2", action="store_true", dest="via_q2",
                   help="use the e^{c1/2} Q2 route instead of e(V) Q2'")
    p.set_defaults(func=cmd_index)

    p = with_manifold("genus", help="Witten or elliptic genus")
    p.add_argument("--kind", choices=("witten", "elliptic"), required=True)
    p.set_defaults(func=cmd_genus)

    p = with_manifold("color-index", help="index twisted by a minimal facet coloring")
    p.add_argument("--signs", help="per-facet signs like '++-+' or '1,-1,...'")
    p.set_defaults(func=cmd_color_index)

    p = with_manifold("verify", help="numerically verify an index theorem")
    p.add_argument("--theorem", choices=("split", "product", "connsum"), required=True)
    p.add_argument("--S", help="facet subset for split, e.g. '0,1'")
    p.add_argument("--other", help="second manifold JSON for product/connsum")
    p.add_argument("--V1"), p.add_argument("--W1")
    p.add_argument("--V2"), p.add_argument("--W2")
    p.add_argument("--orientation-sign", type=int, default=1,
                   choices=(-1, 1), dest="orientation_sign")
    p.set_defaults(func=cmd_verify)

    p = with_manifold("symmetry-report", help="symmetry-degree bounds and candidates")
    p.add_argument("--assume-index-nonzero", action="store_true",
                   dest="assume_index_nonzero")
    p.set_defaults(func=cmd_symmetry_report)

    p = sub.add_parser("alpha", parents=[common], help="dump the alpha table")
    p.add_argument("--max-rank", type=int, default=8, dest="max_rank")
    p.set_defaults(func=cmd_alpha)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StructureError, ValidationError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except (HypothesisUnmetError, UnsatisfiableError, BudgetExceededError) as exc:
        print("hypothesis unmet: %s" % exc, file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (InternalConsistencyError, QtoricError) as exc:
        print("internal consistency error: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

import pytest

from qtoric.charpair import (
    CharacteristicPair,
    cp_pair,
    cube_pair,
    hirzebruch_pair,
    polygon_pair,
    s2xs2_pair,
    sphere_pair,
)
from qtoric.errors import StructureError, ValidationError
from qtoric.polytope import polygon, simplex


def test_cp2_valid():
    pair = CharacteristicPair(simplex(2), [(1, 0), (0, 1), (-1, -1)])
    assert pair.validate().ok


def test_s2xs2_identity_blocks_valid():
    pair = CharacteristicPair(polygon(4), [(1, 0), (0, 1), (1, 0), (0, 1)])
    assert pair.validate().ok
    assert pair.euler_characteristic() == 4


def test_non_unimodular_vertex_rejected():
    pair = CharacteristicPair(polygon(4), [(1, 0), (0, 1), (2, 1), (0, 1)])
    report = pair.validate()
    assert not report.ok
    fail = next(c for c in report.checks if not c.passed)
    assert "det" in fail.detail
    with pytest.raises(ValidationError):
        pair.require_valid()


def test_non_primitive_row_rejected():
    pair = CharacteristicPair(polygon(4), [(2, 0), (0, 1), (1, 0), (0, 1)])
    report = pair.validate()
    assert not report.ok
    assert any("primitive" in c.detail for c in report.checks if not c.passed)


def test_structural_checks():
    with pytest.raises(StructureError):
        CharacteristicPair(polygon(4), [(1, 0), (0, 1)])  # wrong row count
    with pytest.raises(StructureError):
        CharacteristicPair(polygon(4), [(1,), (0,), (1,), (0,)])  # wrong width
    with pytest.raises(StructureError):
        CharacteristicPair(polygon(4), [(1, 0)] * 4, signs=[1, 2, 1, 1])


def test_weight_duality():
    # the dual covectors satisfy <w_k, lambda_{i_l}> = delta_kl exactly
    for pair in [cp_pair(3), cube_pair(3), hirzebruch_pair(2), polygon_pair(6)]:
        pair.require_valid()
        for wd in pair.vertex_weights.values():
            for k, w in enumerate(wd.weights):
                for l, facet in enumerate(wd.facets):
                    dot = sum(a * b for a, b in zip(w, pair.lam[facet]))
                    assert dot == (1 if k == l else 0)


def test_euler_characteristics():
    assert sphere_pair().euler_characteristic() == 2
    for n in range(1, 5):
        assert cube_pair(n).euler_characteristic() == 2 ** n
        assert cp_pair(n).euler_characteristic() == n + 1
    assert polygon_pair(6).euler_characteristic() == 6


def test_product_pair_chi_multiplicative():
    s2 = sphere_pair()
    cp2 = cp_pair(2)
    prod = s2.product_pair(cp2)
    prod.require_valid()
    assert prod.n == 3
    assert prod.euler_characteristic() == 2 * 3
    c22 = cube_pair(2).product_pair(cube_pair(2))
    assert c22.euler_characteristic() == 16
    assert c22.n == 4 and c22.m == 8


def test_product_pair_lambda_block_diagonal():
    prod = sphere_pair().product_pair(sphere_pair())
    assert prod.lam == ((1, 0), (-1, 0), (0, 1), (0, -1))
    assert prod.signs == (1, 1, 1, 1)


def test_to_index_model_generators():
    m = sphere_pair().to_index_model()
    assert m.n == 1 and m.gen_count == 2
    m2 = cp_pair(2).to_index_model()
    assert m2.gen_count == 3


def test_sign_flip_negates_odd_pairings():
    base = s2xs2_pair()
    flipped = base.with_signs([-1, 1, 1, 1])
    m0 = base.to_index_model()
    m1 = flipped.to_index_model()
    assert m1.pair_monomial((0, 1)) == -m0.pair_monomial((0, 1))
    assert m1.pair_monomial((0, 0)) == m0.pair_monomial((0, 0))  # even power
    assert m1.pair_monomial((1, 2)) == m0.pair_monomial((1, 2))  # not involved
    # tangent root of the flipped facet is negated as an expression
    assert m1.tangent_roots[0] == -m0.tangent_roots[0]


def test_json_round_trip():
    pair = hirzebruch_pair(3)
    again = CharacteristicPair.from_json_dict(pair.to_json_dict())
    assert again.lam == pair.lam
    assert again.signs == pair.signs
    assert again.polytope.vertices == pair.polytope.vertices
    with pytest.raises(StructureError):
        CharacteristicPair.from_json_dict(pair.polytope.to_json_dict())

"""Round trips through the canonical JSON encoding."""

from fractions import Fraction

from multalg.exactpoly import PolyMatrix, parse_poly
from multalg.genus2 import Genus2Curve, OddBundleData, odd_net
from multalg.jsonio import (
    canonical_dumps,
    frac_from_json,
    frac_to_json,
    input_digest,
    matrix_from_json,
    matrix_to_json,
    mpoly_from_json,
    mpoly_to_json,
    net_from_json,
    net_to_json,
)

F = Fraction


def test_fraction_strings():
    assert frac_to_json(F(3, 4)) == "3/4"
    assert frac_to_json(F(-5)) == "-5"
    assert frac_from_json("7/2") == F(7, 2)
    assert frac_from_json("-3") == F(-3)


def test_mpoly_roundtrip_and_term_order():
    p = parse_poly(("x", "y", "z"), "x^2 - 2/3*y*z + z - 5")
    blob = mpoly_to_json(p)
    assert blob["vars"] == ["x", "y", "z"]
    # first term is the grevlex-leading one
    assert blob["terms"][0]["e"] == [2, 0, 0]
    assert mpoly_from_json(blob) == p


def test_matrix_roundtrip():
    ring = ("u", "v")
    m = PolyMatrix.from_rows(
        [
            [parse_poly(ring, "u"), parse_poly(ring, "v")],
            [parse_poly(ring, "u + v"), parse_poly(ring, "0")],
        ]
    )
    assert matrix_from_json(matrix_to_json(m)) == m


def test_net_roundtrip():
    net = odd_net(Genus2Curve((0, 1, 2, 3, 4, 5)), OddBundleData((-1, 6, 7)))
    again = net_from_json(net_to_json(net))
    assert again == net


def test_digest_is_stable():
    obj = {"b": [1, 2], "a": "3/4"}
    assert input_digest(obj) == input_digest({"a": "3/4", "b": [1, 2]})
    assert canonical_dumps(obj) == '{"a":"3/4","b":[1,2]}'

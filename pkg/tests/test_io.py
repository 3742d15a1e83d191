from fractions import Fraction

import pytest
from hypothesis import given

from conftest import polys
from laminations import io
from laminations.errors import ParseError
from laminations.flags import generate_positive, a_chart
from laminations.lattice import Lattice
from laminations.laurent import LaurentSeries as LS, t
from laminations.matrix import Matrix
from laminations.monodromy import annulus_from_gluing, diagonal_gluing
from laminations.triangulation import fan_triangulation
from laminations.tropical import Coweight
from laminations.virtual import good_lift


@given(polys())
def test_series_round_trip(pair):
    _, x = pair
    assert io.decode_series(io.encode_series(x)) == x


def test_truncated_series_round_trip():
    x = LS([1, Fraction(-2, 3)], -1, 4)
    obj = io.encode_series(x)
    assert obj["trunc"] == 4 and obj["coeffs"] == ["1/1", "-2/3"]
    assert io.decode_series(obj) == x
    assert io.encode_series(LS.constant(2))["trunc"] is None


def test_config_and_chart_round_trip():
    config = generate_positive(3, 4, seed=2)
    again = io.decode_config(io.encode_config(config))
    assert [f.matrix for f in again.flags] == [f.matrix for f in config.flags]
    chart = a_chart(config, fan_triangulation(4)).tropicalize()
    assert io.decode_chart(io.encode_chart(chart)) == chart
    classical = a_chart(config, fan_triangulation(4))
    assert io.decode_chart(io.encode_chart(classical), tropical=False) == classical


def test_virtual_and_lattice_round_trip():
    vc = good_lift(generate_positive(2, 3, valuation_targets={1: Coweight((3, -3))}), fan_triangulation(3)).virtual()
    back = io.decode_virtual(vc.to_json())
    assert [p.shift for p in back.points] == [p.shift for p in vc.points]
    lat = Lattice(Matrix([[t ** -1, 0], [1, t]]))
    assert io.decode_lattice(lat.to_json()).generators == lat.generators


def test_annulus_round_trip():
    from laminations.flags import AffineFlag
    spec = annulus_from_gluing(AffineFlag(Matrix.identity(2)), AffineFlag(Matrix([[0, -1], [1, 0]])),
                               diagonal_gluing([2, Fraction(1, 2)], [-1, 1]))
    back = io.decode_annulus(io.encode_annulus(spec))
    assert back.gluing == spec.gluing and back.identified_edges == spec.identified_edges


@pytest.mark.parametrize("bad", ["1/0", "x", "1.5.2"])
def test_bad_rationals(bad):
    with pytest.raises(ParseError):
        io.decode_rational(bad)


def test_bad_documents(tmp_path):
    with pytest.raises(ParseError):
        io.load_json(tmp_path / "missing.json")
    (tmp_path / "bad.json").write_text("{not json")
    with pytest.raises(ParseError):
        io.load_json(tmp_path / "bad.json")
    with pytest.raises(ParseError):
        io.decode_config({"flags": [[[1, 0], [0, 1]]], "m": 3})
    with pytest.raises(ParseError):
        io.decode_config({"flags": [[[2, 0], [0, 1]]]})
    with pytest.raises(ParseError):
        io.load_example("no-such-example")


def test_bundled_examples_decode():
    names = io.example_names()
    assert "vandermonde-m2-n4" in names
    for name in names:
        assert isinstance(io.load_example(name), dict)

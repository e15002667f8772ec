import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammes.catalog import catalog_entry, named_catalog
from gammes.families import family
from gammes.formats import (
    export_json,
    export_scl,
    parse_scl,
    render_csv,
    render_table,
    scale_payload,
)
from gammes.pitch import Pitch, xi
from gammes.scales import build_scale, enumerate_structures


def test_json_ratio():
    assert export_json(xi(2)) == '{"pow3":2,"pow2":3,"decimal":"1.125000","cents":204}\n'
    assert json.loads(export_json(xi(0))) == {"pow3": 0, "pow2": 0, "decimal": "1.000000", "cents": 0}


def test_json_family_and_determinism():
    text = export_json(family(4))
    assert json.loads(text)["N"] == 21
    assert export_json(family(10)) == export_json(family(10))
    assert json.loads(export_json(family(10)))["N"] == family(10).n_scales


def test_json_scale():
    data = json.loads(export_json(scale_payload(catalog_entry("G4_15").scale, "G4_15")))
    assert [p["note"] for p in data["pitches"]] == [0, 2, 4, -1, 1, 3, 5, 0]
    assert data["pitches"][-1]["octave"] == 1
    assert data["pitches"][3]["name"] == "fa"


def test_scl_major():
    text = export_scl(catalog_entry("G4_15").scale, "major", "G4_15")
    assert text == "! G4_15.scl\nmajor\n7\n9/8\n81/64\n4/3\n3/2\n27/16\n243/128\n2/1\n"


def test_scl_fifth():
    text = export_scl(catalog_entry("G1_1").scale, "fifth", "G1_1")
    assert text.splitlines()[2:] == ["2", "3/2", "2/1"]


def _source_ratios(sc):
    base = sc.tonality.ratio
    return [(p.ratio / base).as_fraction() for p in sc.pitches[1:]]


def test_scl_round_trip_catalog():
    for e in named_catalog():
        desc, ratios = parse_scl(export_scl(e.scale, e.label, e.label))
        assert desc == e.label
        assert ratios == _source_ratios(e.scale)
        assert ratios[-1] == 2


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(-30, 30), st.data())
def test_scl_round_trip_random(k, t, data):
    s = data.draw(st.sampled_from(list(enumerate_structures(k))[:200]))
    sc = build_scale(s, Pitch(t))
    _, ratios = parse_scl(export_scl(sc, "x"))
    assert ratios == _source_ratios(sc)


def test_parse_scl_errors():
    with pytest.raises(ValueError):
        parse_scl("! only comments\n")
    with pytest.raises(ValueError):
        parse_scl("d\n2\n701.955\n2/1\n")
    with pytest.raises(ValueError):
        parse_scl("d\n3\n3/2\n2/1\n")
    assert parse_scl("d\n 2\n 3/2 fifth\n 2\n") == ("d", [Fraction(3, 2), Fraction(2)])


def test_csv_and_table():
    assert render_csv(["a", "b"], [[1, "x"]]) == "a,b\n1,x\n"
    assert render_table(["k", "name"], [[10, "la"]]) == "k   name\n10  la\n"

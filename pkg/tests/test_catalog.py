import pytest

from gammes.catalog import ascending_pitches, catalog_entry, named_catalog
from gammes.naming import parse_pitch
from gammes.pitch import Pitch, compare
from gammes.scales import build_scale, scale_equal, structure_of, transpose

from reference_data import DIAOSHI, HELMHOLTZ, HEPTATONIC, PENTATONIC


def test_labels_unique_and_complete():
    labels = [e.label for e in named_catalog()]
    assert len(labels) == len(set(labels))
    expected = (
        ["G1_1", "G1_2", "G2_1", "G2_2", "G2_3"]
        + [f"G3_{i}" for i in range(1, 11)]
        + [f"G4_{i}" for i in range(1, 22)]
        + list(HELMHOLTZ)
        + list(DIAOSHI)
    )
    assert labels == expected


def test_small_families():
    assert catalog_entry("G1_1").scale.notes == [0, 1]
    assert catalog_entry("G1_2").scale.notes == [0, -1]
    assert [catalog_entry(f"G2_{i}").scale.notes for i in (1, 2, 3)] == [[0, 2, 1], [0, -1, 1], [0, -1, -2]]


def test_pentatonic_entries():
    for label, (_, notes) in PENTATONIC.items():
        assert catalog_entry(label).scale.notes == list(notes)
    g36 = catalog_entry("G3_6")
    assert "gamme pentatonique mineure" in g36.names


def test_heptatonic_entries():
    for i, notes in enumerate(HEPTATONIC, 1):
        assert catalog_entry(f"G4_{i}").scale.notes == list(notes)
    assert "dorien" in catalog_entry("G4_16").names
    assert "Bartok" in catalog_entry("G4_14").names


@pytest.mark.parametrize("table", [HELMHOLTZ, DIAOSHI])
def test_transposition_identities(table):
    for label, (written, source, tonic) in table.items():
        entry = catalog_entry(label)
        assert [str(p) for p in entry.scale.pitches] == [str(parse_pitch(w)) for w in written.split()]
        expected = transpose(catalog_entry(source).scale, parse_pitch(tonic))
        assert scale_equal(entry.scale, expected), label


def test_named_examples():
    assert scale_equal(catalog_entry("H3").scale, transpose(catalog_entry("G3_6").scale, parse_pitch("sol")))
    assert scale_equal(catalog_entry("yu diaoshi").scale, transpose(catalog_entry("G3_6").scale, parse_pitch("la")))
    assert scale_equal(catalog_entry("H4").scale, transpose(catalog_entry("G3_1").scale, parse_pitch("si♭")))


def test_catalog_scales_are_well_formed():
    for e in named_catalog():
        sc = e.scale
        assert all(compare(a.ratio, b.ratio) < 0 for a, b in zip(sc.pitches, sc.pitches[1:]))
        assert sc.pitches[-1].ratio == sc.pitches[0].ratio.shift_octaves(1)
        assert scale_equal(build_scale(structure_of(sc), sc.tonality), sc)


def test_transposition_preserves_structure():
    for e in named_catalog():
        for t in range(-6, 7):
            assert structure_of(transpose(e.scale, Pitch(t))) == structure_of(e.scale)


def test_lookup_is_case_insensitive():
    assert catalog_entry("g4_15").label == "G4_15"
    with pytest.raises(KeyError):
        catalog_entry("G9_1")


def test_ascending_pitches():
    assert ascending_pitches((0, 2, 4, -1)) == [Pitch(0), Pitch(2), Pitch(4), Pitch(-1), Pitch(0, 1)]
    assert ascending_pitches((-2, 0)) == [Pitch(-2), Pitch(0, 1), Pitch(-2, 1)]

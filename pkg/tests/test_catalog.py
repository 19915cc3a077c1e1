import hashlib
from fractions import Fraction

import pytest

import polyom as pm
from polyom.catalog import Catalog, format_catalog, from_enumeration, parse_catalog


def rehash(n, k, body_lines):
    """Valid header for handcrafted record lines."""
    body = "".join(line + "\n" for line in body_lines)
    digest = hashlib.sha256(body.encode("ascii")).hexdigest()
    return f"n={n} k={k} count={len(body_lines)} sha256={digest}\n" + body


def test_roundtrip_untagged():
    cat = from_enumeration(pm.enumerate_chirotopes(6, 2))
    assert len(cat) == 74 and not cat.tagged
    back = parse_catalog(format_catalog(cat))
    assert back == cat


def test_roundtrip_file(tmp_path):
    cat = from_enumeration(pm.enumerate_chirotopes(5, 2))
    path = tmp_path / "5_2.cat"
    pm.write_catalog(path, cat)
    assert pm.read_catalog(path) == cat


def test_empty_catalog_roundtrip():
    cat = Catalog(4, 2, ())
    assert parse_catalog(format_catalog(cat)) == cat


def test_header_fields():
    text = format_catalog(from_enumeration(pm.enumerate_chirotopes(5, 2)))
    head = text.splitlines()[0]
    assert head.startswith("n=5 k=2 count=5 sha256=")
    assert len(head.split("sha256=")[1]) == 64


def test_tampered_record_detected():
    text = format_catalog(from_enumeration(pm.enumerate_chirotopes(5, 2)))
    lines = text.splitlines(keepends=True)
    body = lines[2]
    flipped = ("+" if body[0] == "-" else "-") + body[1:]
    with pytest.raises(pm.CatalogIntegrityError):
        parse_catalog(lines[0] + lines[1] + flipped + "".join(lines[3:]))


def test_missing_record_detected():
    text = format_catalog(from_enumeration(pm.enumerate_chirotopes(5, 2)))
    lines = text.splitlines(keepends=True)
    with pytest.raises(pm.CatalogIntegrityError):
        parse_catalog("".join(lines[:-1]))


def test_malformed_header():
    with pytest.raises(pm.InputError):
        parse_catalog("n=5 k=2 count=five sha256=00\n")
    with pytest.raises(pm.InputError):
        parse_catalog("records follow\n")
    with pytest.raises(pm.InputError):
        parse_catalog("")


def test_tagged_roundtrip_with_witness():
    cfg = pm.PointConfig([(0, 0), (1, 1), (2, 8), (Fraction(7, 2), 27)])
    cat = Catalog(4, 2, ("+",)).with_witnesses([cfg])
    assert cat.tagged and cat.realizable_count() == 1
    back = parse_catalog(format_catalog(cat))
    assert back.tagged
    assert back.witnesses[0].points == cfg.points
    assert pm.verify_catalog_witnesses(back) == ()


def test_unrealized_tag_roundtrip():
    cat = Catalog(4, 2, ("+",)).with_witnesses([None])
    back = parse_catalog(format_catalog(cat))
    assert back.tagged and back.witnesses == (None,)
    assert back.realizable_count() == 0


def test_mixed_tagged_untagged_rejected():
    recs = pm.enumerate_chirotopes(5, 2).strings()
    text = rehash(5, 2, [recs[0] + " U", recs[1]])
    with pytest.raises(pm.InputError):
        parse_catalog(text)


def test_unknown_tag_rejected():
    text = rehash(5, 2, ["+" * 5 + " X 1 2"])
    with pytest.raises(pm.InputError):
        parse_catalog(text)


def test_short_witness_rejected():
    text = rehash(4, 2, ["+ R 0 0 1 1"])
    with pytest.raises(pm.InputError):
        parse_catalog(text)


def test_trailing_data_after_U_rejected():
    text = rehash(4, 2, ["+ U 3"])
    with pytest.raises(pm.InputError):
        parse_catalog(text)


def test_record_validation():
    with pytest.raises(pm.InputError):
        Catalog(5, 2, ("+++",))
    with pytest.raises(pm.InputError):
        Catalog(5, 2, ("++x++",))
    with pytest.raises(pm.InputError):
        Catalog(4, 2, ("+",)).with_witnesses([None, None])


def test_index_of():
    cat = from_enumeration(pm.enumerate_chirotopes(6, 2))
    idx = cat.index_of()
    assert idx["+" * 15] == 0
    assert all(cat.records[i] == rec for rec, i in idx.items())

import json
from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from cwsurgery.casson_walker import Slope
from cwsurgery.cosmetic import (
    COR_TEN_KNOTS,
    Condition,
    CosmeticStatus,
    KnotRecord,
    KnotTableError,
    SurgeryWitness,
    check_condition_c,
    cosmetic_verdict,
    load_bundled_table,
    load_knot_table,
    reproduce_cor_ten,
)

from oracles import squarefree_by_trial

HEADER = "name,det,dbc_lspace,u,u_h2,dbc_surgery,provenance\n"


@pytest.fixture(scope="module")
def table():
    return {r.name: r for r in load_bundled_table()}


def test_bundled_table_has_the_ten_knots(table):
    assert set(table) == set(COR_TEN_KNOTS)
    assert table["10_65"].dbc_surgery.a2 == 5
    assert table["10_77"].dbc_surgery.slope == Slope(63, 10)


def test_load_from_text_and_path(tmp_path):
    text = HEADER + '3_1,3,true,1,,"T(2,3)@3/1",trefoil\n'
    path = tmp_path / "k.csv"
    path.write_text(text)
    assert load_knot_table(text) == load_knot_table(path) == load_knot_table(str(path))
    (rec,) = load_knot_table(text)
    assert rec.unknotting_number == 1 and rec.h2_unknotting_number is None


@pytest.mark.parametrize("row, fragment", [
    ("x,64,true,,,,", "positive odd"),
    ("x,abc,true,,,,", "det must be an integer"),
    ("x,63,maybe,,,,", "dbc_lspace"),
    ("x,63,true,one,,,", "u must be"),
    ('x,63,true,,,"T(3,4)@65/5",', "det = 63"),
    ('x,63,true,,,"T(3;4)@63/5",', "not of the form"),
    ("x,63,true", "expected 7 fields"),
])
def test_table_errors_carry_line_numbers(row, fragment):
    text = HEADER + "ok,9,true,,,,\n" + row + "\n"
    with pytest.raises(KnotTableError, match=fragment) as info:
        load_knot_table(text)
    assert info.value.line == 3
    assert str(info.value).startswith("line 3:")


def test_bad_header():
    with pytest.raises(KnotTableError, match="header"):
        load_knot_table("name,det\n1,3\n")


@pytest.mark.parametrize("det, holds, p_prime", [
    (63, True, 7), (9, True, 1), (27, False, None), (45, True, 5), (75, False, None), (81, False, None),
])
def test_condition_c_examples(det, holds, p_prime):
    assert check_condition_c(det) == (holds, p_prime)


def test_condition_c_sweep():
    for det in range(1, 10_001):
        expected = det % 9 == 0 and (det // 9) % 3 != 0 and squarefree_by_trial(det // 9)
        assert check_condition_c(det).holds == expected


def test_condition_c_rejects_nonpositive():
    with pytest.raises(ValueError):
        check_condition_c(0)


@pytest.mark.parametrize("name, status", [
    ("10_65", CosmeticStatus.CONFIRMED_BY_SURGERY),
    ("10_77", CosmeticStatus.CONFIRMED_BY_SURGERY),
    ("10_67", CosmeticStatus.CONFIRMED_BY_UNKNOTTING),
    ("10_108", CosmeticStatus.CONFIRMED_BY_UNKNOTTING),
    ("10_164", CosmeticStatus.CONFIRMED_BY_UNKNOTTING),
    ("10_66", CosmeticStatus.OPEN),
    ("10_129", CosmeticStatus.OPEN),
])
def test_verdicts(table, name, status):
    assert cosmetic_verdict(table[name]).verdict is status


def test_verdict_reasons_and_dict(table):
    v = cosmetic_verdict(table["10_65"])
    d = v.to_dict()
    assert d["conditions"] == {"a": "holds", "b": "holds", "bPrime": "unknown", "c": "holds"}
    assert any("63/5 surgery on T(3,4)" in r for r in d["reasons"])
    assert json.loads(json.dumps(d)) == d


def test_reproduce_partition(table):
    out = reproduce_cor_ten(list(table.values()))
    assert out == {
        "resolved": ["10_65", "10_67", "10_77", "10_108", "10_164"],
        "open": ["10_66", "10_87", "10_98", "10_129", "10_147"],
    }


def test_unknown_lspace_moves_knot_to_open(table):
    rows = dict(table)
    rows["10_65"] = replace(rows["10_65"], dbc_is_lspace=None)
    out = reproduce_cor_ten(list(rows.values()))
    assert "10_65" in out["open"] and "10_65" not in out["resolved"]


def test_reproduce_errors(table):
    with pytest.raises(ValueError, match="empty"):
        reproduce_cor_ten([])
    with pytest.raises(ValueError, match="10_66"):
        reproduce_cor_ten([r for r in table.values() if r.name != "10_66"])


_status = st.sampled_from([True, False, None])
_unk = st.sampled_from([None, 0, 1, 2])


@given(st.sampled_from([9, 45, 63, 75, 81, 99, 27]), _status, _unk, _unk, st.booleans())
def test_adding_facts_never_reopens(det, lspace, u, uh, witness):
    """Turning an unknown into a favourable fact can only keep or improve the verdict."""
    w = SurgeryWitness.torus_knot(2, 3, Slope(det, 1)) if witness else None
    rec = KnotRecord("k", det, lspace, u, uh, w)
    before = cosmetic_verdict(rec).verdict
    better = replace(rec, dbc_is_lspace=True if lspace is None else lspace,
                     unknotting_number=1 if u is None else u)
    after = cosmetic_verdict(better).verdict
    if before is not CosmeticStatus.OPEN:
        assert after is not CosmeticStatus.OPEN


def test_witness_parse():
    w = SurgeryWitness.parse("T(3, 4)@63/5")
    assert (w.knot, w.a2, w.torus) == ("T(3,4)", 5, (3, 4))
    assert str(w) == "T(3,4)@63/5"
    with pytest.raises(ValueError, match="denominator"):
        SurgeryWitness.parse("T(2,3)@5/0")


def test_witness_must_match_determinant():
    with pytest.raises(ValueError):
        KnotRecord("k", 63, True, dbc_surgery=SurgeryWitness.torus_knot(2, 3, Slope(64, 1)))


def test_witness_conditions_are_computed(table):
    rec = replace(table["10_66"], dbc_surgery=None)
    v = cosmetic_verdict(rec)
    assert v.conditions["b"] is Condition.UNKNOWN

import json
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from cartier.curve import validate_params
from cartier.engine import VerificationReport, verify
from cartier.report import COLUMNS, SkipRecord, emit_report, parse_csv, parse_json, to_csv

small = st.integers(0, 10**6)
reports = st.builds(
    VerificationReport,
    p=small, s=small, m=small, n=small, q=small, g=small,
    matrix_rank=small, a_number=small, p_rank=small, cc_honest=small, cc_paper=small,
    formula_rank=st.fractions(), formula_a=st.fractions(),
    flags=st.dictionaries(st.from_regex(r"[a-z_]{1,12}", fullmatch=True), st.booleans(), max_size=6),
    points_total=st.none() | small,
    maximal=st.none() | st.booleans(),
)


@given(reports)
def test_json_round_trip(rep):
    assert parse_json(emit_report(rep, "json").decode()) == rep


@given(st.lists(reports, max_size=5))
def test_csv_round_trip(reps):
    assert parse_csv(to_csv(reps)) == reps


def test_skip_record_round_trip():
    rec = SkipRecord(11, 2, 121, "genus 3600 exceeds cap 2000")
    assert parse_json(emit_report(rec).decode()) == rec
    assert parse_csv(to_csv([rec])) == [rec]


def test_empty_csv_is_header_only():
    assert to_csv([]) == ",".join(COLUMNS) + "\n"


def test_json_field_order_and_values():
    rep = verify(validate_params(5, 1, 2))
    obj = json.loads(emit_report(rep, "json"))
    assert list(obj) == list(COLUMNS)
    assert obj["a_number"] == 1
    assert (obj["formula_a_num"], obj["formula_a_den"]) == (1, 1)


def test_csv_header_emitted_once():
    rep = verify(validate_params(5, 1, 2), points=False)
    text = emit_report(rep, "csv").decode() + emit_report(rep, "csv", header=False).decode()
    lines = text.splitlines()
    assert lines[0].startswith("p,s,m,n,q,g")
    assert sum(1 for ln in lines if ln.startswith("p,s,m")) == 1
    assert len(lines) == 3
    assert parse_csv(text)[0].formula_rank == Fraction(0)

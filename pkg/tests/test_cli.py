import json

import pytest

from younggap import ParseError, ValidationError, parse_spec
from younggap.cli import main

IDENT_SPEC = '{"kind":"power","exponent":1,"domain":[0,2]}'
SQUARE_SPEC = '{"kind":"power","exponent":2,"domain":[0,2]}'


# ---------------------------------------------------------------------------
# spec parsing
# ---------------------------------------------------------------------------


def test_parse_power_spec():
    spec = parse_spec(SQUARE_SPEC)
    fn = spec.build()
    assert fn.eval(1.5) == 2.25
    assert (fn.domain.lo, fn.domain.hi) == (0.0, 2.0)


def test_parse_identity_spec():
    fn = parse_spec(IDENT_SPEC).build()
    assert fn.eval(1.234) == 1.234


def test_parse_table_spec_validation_error_names_index():
    with pytest.raises(ValidationError, match="index 2"):
        parse_spec('{"kind":"table","points":[[0,0],[1,1],[2,1]]}')


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_spec("not json")
    with pytest.raises(ParseError):
        parse_spec('{"kind":"cubic","domain":[0,1]}')
    with pytest.raises(ParseError):
        parse_spec('{"kind":"power","domain":[0,1]}')  # exponent missing
    with pytest.raises(ParseError):
        parse_spec('{"kind":"power","exponent":2,"domain":[0,1],"slope":3}')
    with pytest.raises(ParseError):
        parse_spec('{"kind":"power","exponent":"two","domain":[0,1]}')
    with pytest.raises(ParseError):
        parse_spec('{"kind":"table","points":[[0,0],[1]]}')


def test_spec_round_trip():
    for text in (
        SQUARE_SPEC,
        '{"kind":"affine","slope":1.5,"intercept":-0.5,"domain":[-1,1]}',
        '{"kind":"exp","shift":1,"domain":[0,2]}',
        '{"kind":"table","points":[[0,0],[1,1],[2,4]]}',
    ):
        spec = parse_spec(text)
        assert parse_spec(spec.to_json()) == spec


def test_codomain_override_checked():
    spec = parse_spec('{"kind":"power","exponent":2,"domain":[0,2],"codomain":[0,4]}')
    assert spec.build().codomain.hi == 4.0
    with pytest.raises(ValidationError):
        parse_spec('{"kind":"power","exponent":2,"domain":[0,2],"codomain":[0,5]}').build()


# ---------------------------------------------------------------------------
# certify command
# ---------------------------------------------------------------------------


def test_certify_strict_point_exits_zero(capsys):
    status = main(["certify", "--spec", IDENT_SPEC, "-a", "1", "-b", "0"])
    out = capsys.readouterr().out
    assert status == 0
    assert "lower=certified" in out and "upper=certified" in out


def test_certify_equality_point_exits_zero(capsys):
    status = main(["certify", "--spec", IDENT_SPEC, "-a", "1", "-b", "1"])
    assert status == 0
    assert "equality=equality" in capsys.readouterr().out


def test_certify_out_of_domain_exits_two(capsys):
    status = main(["certify", "--spec", IDENT_SPEC, "-a", "3", "-b", "0"])
    captured = capsys.readouterr()
    assert status == 2
    assert "outside" in captured.err


def test_certify_unreachable_tolerance_exits_three(capsys):
    status = main(["certify", "--spec", IDENT_SPEC, "-a", "1", "-b", "1", "--tol", "1e-16"])
    capsys.readouterr()
    assert status == 3


def test_certify_machine_document(capsys):
    status = main(["certify", "--spec", IDENT_SPEC, "-a", "1", "-b", "0", "--machine"])
    doc = json.loads(capsys.readouterr().out)
    assert status == 0
    assert set(doc) == {"a", "b", "F_lo", "F_hi", "ub_lo", "ub_hi", "merkle", "verdicts", "effort"}
    assert doc["F_lo"] <= 0.5 <= doc["F_hi"]
    assert doc["ub_lo"] <= 1.0 <= doc["ub_hi"]
    assert doc["merkle"] == pytest.approx(1.0)
    assert doc["verdicts"] == {
        "lower": "certified",
        "upper": "certified",
        "equality": "strict_inequality",
    }


def test_certify_machine_output_is_deterministic(capsys):
    main(["certify", "--spec", SQUARE_SPEC, "-a", "2", "-b", "1", "--machine"])
    first = capsys.readouterr().out
    main(["certify", "--spec", SQUARE_SPEC, "-a", "2", "-b", "1", "--machine"])
    assert capsys.readouterr().out == first


def test_certify_reads_spec_from_file(tmp_path, capsys):
    path = tmp_path / "spec.json"
    path.write_text(SQUARE_SPEC, encoding="utf-8")
    status = main(["certify", "--spec-file", str(path), "-a", "2", "-b", "1"])
    capsys.readouterr()
    assert status == 0


def test_certify_reads_spec_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(SQUARE_SPEC))
    status = main(["certify", "-a", "2", "-b", "1"])
    capsys.readouterr()
    assert status == 0


def test_certify_bad_spec_exits_two(capsys):
    status = main(["certify", "--spec", '{"kind":"nope"}', "-a", "1", "-b", "0"])
    captured = capsys.readouterr()
    assert status == 2
    assert "error:" in captured.err


# ---------------------------------------------------------------------------
# sweep command
# ---------------------------------------------------------------------------


def _sweep_args(out):
    return [
        "sweep", "--spec", IDENT_SPEC,
        "--a-min", "0", "--a-max", "2", "--a-steps", "3",
        "--b-min", "0", "--b-max", "2", "--b-steps", "3",
        "--out", str(out),
    ]


def test_sweep_golden_byte_identical(tmp_path):
    first = tmp_path / "one.csv"
    second = tmp_path / "two.csv"
    assert main(_sweep_args(first)) == 0
    assert main(_sweep_args(second)) == 0
    blob = first.read_bytes()
    assert blob == second.read_bytes()
    lines = blob.decode().splitlines()
    assert lines[0] == "a,b,F_lo,F_hi,ub_lo,ub_hi,merkle,equality"
    assert len(lines) == 10
    for line in lines[1:]:
        a, b, *_rest, equality = line.split(",")
        assert equality == ("true" if a == b else "false")


def test_sweep_single_point_matches_certify(tmp_path, capsys):
    out = tmp_path / "single.csv"
    status = main([
        "sweep", "--spec", IDENT_SPEC,
        "--a-min", "1", "--a-max", "1", "--a-steps", "1",
        "--b-min", "0", "--b-max", "0", "--b-steps", "1",
        "--out", str(out),
    ])
    assert status == 0
    row = out.read_text().splitlines()[1].split(",")
    main(["certify", "--spec", IDENT_SPEC, "-a", "1", "-b", "0", "--machine"])
    doc = json.loads(capsys.readouterr().out)
    assert float(row[2]) == doc["F_lo"]
    assert float(row[3]) == doc["F_hi"]
    assert float(row[6]) == doc["merkle"]


def test_sweep_zero_steps_exits_two(capsys):
    status = main([
        "sweep", "--spec", IDENT_SPEC,
        "--a-min", "0", "--a-max", "2", "--a-steps", "0",
        "--b-min", "0", "--b-max", "2", "--b-steps", "3",
    ])
    captured = capsys.readouterr()
    assert status == 2
    assert "steps" in captured.err


def test_sweep_out_of_domain_grid_exits_two(capsys):
    status = main([
        "sweep", "--spec", IDENT_SPEC,
        "--a-min", "0", "--a-max", "3", "--a-steps", "4",
        "--b-min", "0", "--b-max", "2", "--b-steps", "3",
    ])
    captured = capsys.readouterr()
    assert status == 2
    assert "a[3]" in captured.err


def test_sweep_to_stdout(capsys):
    status = main([
        "sweep", "--spec", IDENT_SPEC,
        "--a-min", "0", "--a-max", "2", "--a-steps", "2",
        "--b-min", "0", "--b-max", "2", "--b-steps", "2",
    ])
    out = capsys.readouterr().out
    assert status == 0
    assert out.startswith("a,b,")
    assert len(out.splitlines()) == 5


# ---------------------------------------------------------------------------
# conjugate command
# ---------------------------------------------------------------------------


def test_conjugate_identity_derivative(capsys):
    status = main(["conjugate", "--spec", IDENT_SPEC, "-b", "1"])
    out = capsys.readouterr().out
    assert status == 0
    lo, hi = out.split("[")[1].rstrip("]\n").split(", ")
    assert float(lo) <= 0.5 <= float(hi)
    assert float(hi) - float(lo) <= 2e-9


def test_conjugate_at_zero_anchor(capsys):
    status = main(["conjugate", "--spec", IDENT_SPEC, "-b", "0", "--machine"])
    doc = json.loads(capsys.readouterr().out)
    assert status == 0
    entry = doc["conjugate"][0]
    assert entry["lo"] <= 0.0 <= entry["hi"]
    assert abs(entry["lo"]) <= 1e-12 and abs(entry["hi"]) <= 1e-12


def test_conjugate_power_derivative(capsys):
    status = main(["conjugate", "--spec", SQUARE_SPEC, "-b", "1", "--machine"])
    doc = json.loads(capsys.readouterr().out)
    assert status == 0
    entry = doc["conjugate"][0]
    assert entry["lo"] <= 2.0 / 3.0 <= entry["hi"]
    assert entry["hi"] - entry["lo"] <= 2e-9


def test_conjugate_with_bound_check(capsys):
    status = main([
        "conjugate", "--spec", SQUARE_SPEC, "-b", "1",
        "--check-bound", "2", "1", "--machine",
    ])
    doc = json.loads(capsys.readouterr().out)
    assert status == 0
    rep = doc["report"]
    assert rep["F_lo"] <= 4.0 / 3.0 <= rep["F_hi"]
    assert rep["ub_lo"] <= 3.0 <= rep["ub_hi"]
    assert rep["equality"] is False

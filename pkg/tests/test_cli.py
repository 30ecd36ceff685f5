import json

import pytest
import sympy as sp

from focalis.cli import main
from focalis.cli.jobs import (
    COMMANDS,
    ERROR_CODES,
    emit_samples,
    make_job,
    parse_job,
    render_job,
    run_job,
)
from focalis.errors import ParseError, PreconditionError

EVOLUTE_JOB = """\
schema: 1
command: evolute
inputs:
  curve: "(t, i*t + t^3)"
"""

TORUS = {"profile": "(2 + (1 - t^2)/(1 + t^2), 2*t/(1 + t^2))"}


def run(command, **inputs):
    return run_job(make_job(command, inputs))


# --- parsing ----------------------------------------------------------------------


def test_parse_evolute_job():
    job = parse_job(EVOLUTE_JOB)
    assert job.command == "evolute" and job.inputs == {"curve": "(t, i*t + t^3)"} and job.seed == 0


@pytest.mark.parametrize(
    "command,inputs,gram,seed",
    [
        ("evolute", {"curve": "(t, i*t + t^3)"}, None, 0),
        ("degree", {"kind": "surface-ci", "m": 3, "degrees": [2]}, None, 0),
        ("inverse", {"o": "(0, 0, s)", "r": "c + s^2"}, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], 0),
        ("imgdeg", {"curve": "(t, t^2)"}, None, 7),
        ("isocurve", {"f0": "1", "f1": "t"}, None, 0),
    ],
)
def test_round_trip(command, inputs, gram, seed):
    job = make_job(command, inputs, gram, seed)
    assert parse_job(render_job(job)) == job


@pytest.mark.parametrize(
    "text,code",
    [
        ("schema: 1\ncommand: fly\n", "UNKNOWN_COMMAND"),
        ("schema: 1\ncommand: evolute\ninputs: {curve: '(t, t)', bogus: 1}\n", "UNKNOWN_KEY"),
        ("schema: 1\ncommand: evolute\ncolour: red\n", "UNKNOWN_KEY"),
        ("schema: 1\ncommand: evolute\ninputs: {}\n", "MISSING_INPUT"),
        ("schema: 1\ncommand: evolute\ninputs: {curve: '(t, t^)'}\n", "MALFORMED_EXPRESSION"),
        ("schema: 2\ncommand: evolute\n", "UNKNOWN_SCHEMA"),
        ("schema: 1\ncommand: evolute\ninputs: {curve: '(t, t)'}\ngram: [[1, 2], [3, 1]]\n", "GRAM_NOT_SYMMETRIC"),
        ("schema: 1\ncommand: [evolute\n", "PARSE_ERROR"),
    ],
)
def test_parse_error_codes(text, code):
    with pytest.raises((ParseError, PreconditionError)) as e:
        parse_job(text)
    assert e.value.code == code
    assert code in ERROR_CODES


def test_yaml_error_has_position():
    with pytest.raises(ParseError) as e:
        parse_job("schema: 1\ncommand: [evolute\n")
    assert e.value.line is not None


def test_every_command_is_documented():
    assert set(COMMANDS) == {
        "evolute", "rotfocal", "implicitize", "imgdeg", "degree", "inverse",
        "isocurve", "devel", "check-t4", "check-t5", "product", "sphere-fiber",
    }


# --- results --------------------------------------------------------------------


def test_evolute_payload():
    doc = run("evolute", curve="(t, i*t + t^3)")
    assert doc.ok
    assert doc.payload["ramification"] == "-3*t*(2*l + 2*i*t + 3*t^3)"
    branch = next(c for c in doc.payload["components"] if c["kind"] == "branch")
    assert branch["parametrization"]["coords"] == ["2*t - 9/2*i*t^3 - 9/2*t^5", "2*i*t + 5/2*t^3"]


def test_degree_payload():
    doc = run("degree", kind="surface-ci", m=3, degrees=[2])
    assert doc.payload["degree"] == 12


def test_inverse_payload():
    doc = run("inverse", o="(0, 0, s)", r="c + s^2")
    assert doc.payload["equations"] == ["z", "-c + y^2 + x^2"]
    assert doc.payload["forward_consistency"]["ok"]


def test_check_t5_payload():
    doc = run("check-t5", o="(s, i*s)", r="0")
    assert doc.payload["ok"] and doc.payload["fibers_are_affine_spaces"]


def test_imgdeg_echoes_seed():
    doc = run_job(make_job("imgdeg", {"curve": "(t, t^2)"}, seed=5))
    assert doc.payload["seed"] == 5


def test_error_document_has_code_not_traceback():
    doc = run("evolute", curve="(t, t^2, t^3)")
    assert not doc.ok and doc.exit_code == 3
    assert "Traceback" not in doc.to_json()
    assert doc.error["code"] in ERROR_CODES


def test_byte_determinism():
    a = run_job(parse_job(EVOLUTE_JOB)).to_json()
    b = run_job(parse_job(EVOLUTE_JOB)).to_json()
    assert a == b
    assert json.loads(a)["status"] == "ok"


# --- samples ----------------------------------------------------------------------


def test_torus_circle_samples():
    doc = run("rotfocal", **TORUS)
    text = emit_samples(doc, 4, component="circle")
    lines = text.strip().splitlines()
    assert lines[0].startswith("# display-only")
    rows = [line.split(",") for line in lines[2:]]
    assert [r[0] for r in rows] == ["0", "1", "2", "3"]
    for r in rows:
        x, y, z = (float(v) for v in r[1:])
        assert abs(x * x + y * y - 4) < 1e-9 and z == 0


def test_evolute_sample_at_one():
    doc = run("evolute", curve="(t, i*t + t^3)")
    data = json.loads(emit_samples(doc, 2, fmt="json"))
    assert data["display_only"]
    point = data["points"][1]
    assert point["params"] == {"t": "1"}
    assert point["coords"] == ["-2.5-4.5i", "2.5+2i"]
    t = sp.Symbol("t")
    ex = (2 * t - sp.Rational(9, 2) * sp.I * t**3 - sp.Rational(9, 2) * t**5).subs(t, 1)
    ey = (2 * sp.I * t + sp.Rational(5, 2) * t**3).subs(t, 1)
    assert (complex(ex), complex(ey)) == (-2.5 - 4.5j, 2.5 + 2j)


def test_no_samples():
    doc = run("degree", kind="surface-ci", m=3, degrees=[2])
    with pytest.raises(PreconditionError) as e:
        emit_samples(doc, 3)
    assert e.value.code == "NO_SAMPLES"


# --- command line ---------------------------------------------------------------------


def test_main_inline_and_exit_codes(capsys):
    assert main(["degree", "kind=surface-ci", "m=3", "degrees=[2]"]) == 0
    assert json.loads(capsys.readouterr().out)["payload"]["degree"] == 12
    assert main(["evolute", "curve=(t, t^)"]) == 2
    assert json.loads(capsys.readouterr().out)["error"]["code"] == "MALFORMED_EXPRESSION"
    assert main(["evolute", "curve=(t, t^2, t^3)"]) == 3


def test_main_job_file_and_out(tmp_path):
    job = tmp_path / "evolute.yaml"
    job.write_text(EVOLUTE_JOB)
    out = tmp_path / "out.json"
    assert main(["run", "--job", str(job), "--out", str(out)]) == 0
    first = out.read_bytes()
    assert main(["evolute", "--job", str(job), "--out", str(out)]) == 0
    assert out.read_bytes() == first


def test_main_samples_csv(capsys):
    assert main(["rotfocal", f"profile={TORUS['profile']}", "--samples", "4", "--component", "circle"]) == 0
    assert capsys.readouterr().out.count("\n") == 6


def test_batch(tmp_path):
    paths = []
    for k, curve in enumerate(["(t, t^2)", "(t, i*t + t^3)", "(t, t^"]):
        p = tmp_path / f"job{k}.yaml"
        p.write_text(f'schema: 1\ncommand: evolute\ninputs:\n  curve: "{curve}"\n')
        paths.append(str(p))
    out = tmp_path / "out"
    out.mkdir()
    code = main(["batch", *paths, "--out-dir", str(out), "--workers", "3"])
    assert code == 2
    docs = {p.stem: json.loads(p.read_text()) for p in out.iterdir()}
    assert docs["job0"]["status"] == docs["job1"]["status"] == "ok"
    assert docs["job2"]["error"]["code"] == "MALFORMED_EXPRESSION"

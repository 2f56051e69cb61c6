import json
import subprocess
import sys

from sqpbands import full_report, parse_band_word
from sqpbands.report import ReportEnvelope, compare_with_expected, load_corpus
from sqpbands.svg import band_diagram_svg
from sqpbands.words import BandWord


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "sqpbands.cli", *args],
        capture_output=True,
        text=True,
    )


def test_envelope_roundtrip():
    env = ReportEnvelope("invariants", {"word": "b(1,2)", "strands": 2})
    env.tool_version = "0.1.0"
    env.reports.append({"components": 1})
    env.finish()
    again = ReportEnvelope.from_json(env.to_json())
    assert again.subcommand == "invariants"
    assert again.reports == [{"components": 1}]
    assert again.schema_version == env.schema_version


def test_corpus_loads_and_replays():
    corpus = load_corpus()
    assert len(corpus) >= 8
    names = {entry.name for entry in corpus}
    assert {"alpha", "trefoil", "hopf"} <= names
    for entry in corpus:
        report = full_report(entry.word, budget=8)
        for name, ok, detail in compare_with_expected(entry, report):
            assert ok, f"{entry.name}:{name} {detail}"


def test_cli_validate_alpha():
    r = run_cli(
        "validate",
        "b(1,6) b(3,8) b(2,5) b(1,4) b(3,7) b(2,6) b(5,8) b(4,7)",
        "--strands",
        "8",
    )
    assert r.returncode == 0
    assert "boundary_components: 2" in r.stdout


def test_cli_validate_rejects_bad_token():
    r = run_cli("validate", "b(3,2)", "--strands", "3")
    assert r.returncode == 1
    assert "token 1" in r.stderr


def test_cli_validate_empty_word_on_one_strand():
    r = run_cli("validate", "", "--strands", "1")
    assert r.returncode == 0


def test_cli_invariants_json_schema():
    r = run_cli("invariants", "b(1,2) b(1,2) b(1,2)", "--strands", "2", "--json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["schema_version"] == "1"
    report = payload["reports"][0]
    assert report["signature"] == -2
    assert report["determinant"] == 3
    assert report["alexander_str"] == "t^2 - t + 1"
    assert report["jones_str"] is not None


def test_cli_invariants_budget_skips_jones():
    r = run_cli(
        "invariants", "b(1,2) b(1,2) b(1,2)", "--strands", "2", "--budget", "1", "--json"
    )
    assert r.returncode == 0
    report = json.loads(r.stdout)["reports"][0]
    assert report["jones"] is None and report["jones_budget_exceeded"] is True


def test_cli_invariants_empty_word_unknot_report():
    r = run_cli("invariants", "", "--strands", "1", "--json")
    assert r.returncode == 0
    report = json.loads(r.stdout)["reports"][0]
    assert report["components"] == 1
    assert report["alexander_str"] == "1"
    assert report["signature"] == 0 and report["determinant"] == 1


def test_cli_invariants_svg(tmp_path):
    out = tmp_path / "diagram.svg"
    r = run_cli(
        "invariants", "b(1,3) b(2,3)", "--strands", "3", "--no-jones", "--svg", str(out)
    )
    assert r.returncode == 0
    text = out.read_text()
    assert text.startswith("<svg") and "</svg>" in text


def test_cli_family_trivial_control():
    r = run_cli(
        "family",
        "b(1,2) b(1,2) b(1,2)",
        "--strands",
        "2",
        "--count",
        "1",
        "--annulus",
        "trivial",
        "--json",
    )
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    steps = payload["family"]
    assert len(steps) == 2
    assert steps[1]["strands"] == 4
    assert steps[0]["report"]["alexander_str"] == steps[1]["report"]["alexander_str"]
    statuses = {c["status"] for c in payload["certificates"]}
    assert statuses <= {"pass"}


def test_cli_family_rejects_unlink_with_explanation():
    r = run_cli("family", "b(1,2)", "--strands", "2", "--count", "1")
    assert r.returncode == 1
    assert "unlink" in r.stderr
    assert "slice" in r.stderr


def test_cli_family_annulus_file(tmp_path):
    spec = {
        "word": "b(1,2) b(1,2)",
        "strands": 2,
        "designated_band": 1,
        "companion_name": "unknot-from-file",
        "companion_alexander": [[0, 1]],
    }
    path = tmp_path / "annulus.json"
    path.write_text(json.dumps(spec))
    r = run_cli(
        "family",
        "b(1,2) b(1,2) b(1,2)",
        "--strands",
        "2",
        "--count",
        "1",
        "--annulus",
        str(path),
        "--json",
    )
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["family"][1]["annulus"] == "unknot-from-file"


def test_cli_family_broken_template_exits_3(tmp_path):
    spec = {
        "word": "b(1,2) b(1,2)",
        "strands": 2,
        "designated_band": 1,
        "companion_name": "broken",
        "companion_alexander": [[0, 1]],
        "splice": [["a1", "p"], ["a2", "q"]],
    }
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(spec))
    r = run_cli(
        "family",
        "b(1,2) b(1,2) b(1,2)",
        "--strands",
        "2",
        "--count",
        "1",
        "--annulus",
        str(path),
    )
    assert r.returncode == 3
    assert "oracle" in r.stderr.lower() or "splice" in r.stderr.lower()


def test_svg_contains_all_bands():
    word = parse_band_word("b(1,4) b(2,3) b(1,2)", 4)
    svg = band_diagram_svg(word)
    assert svg.count('class="band"') == 3
    assert svg.count('class="rail"') == 4


def test_svg_deterministic():
    word = BandWord(3, ((1, 3), (2, 3)))
    assert band_diagram_svg(word) == band_diagram_svg(word)

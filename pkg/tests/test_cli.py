import json

import pytest

from anglespec import cli
from anglespec import report as rep
from anglespec.group import preset
from anglespec.report import (
    CSV_HEADER,
    IdentityGenerator,
    MalformedEntry,
    NonUnitDeterminant,
    format_group,
    parse_group_text,
    report_csv,
    report_json,
)
from anglespec.spectrum import build_spectrum
from anglespec.svg import EmptyInput, render_svg

SCHOTTKY_TEXT = """# symmetric schottky
4 0 0 0.25

3 4 2 3
"""


@pytest.fixture(scope="module")
def small():
    return build_spectrum(preset("symmetric-schottky"), 2, 50, 2)


def test_parse_group_text():
    gens = parse_group_text(SCHOTTKY_TEXT)
    assert [g.entries for g in gens.gens] == [(4, 0, 0, 0.25), (3, 4, 2, 3)]


@pytest.mark.parametrize("text, error, attr, value", [
    ("1 2 3\n", MalformedEntry, "line", 1),
    ("# c\n1 1 0 x\n", MalformedEntry, "line", 2),
    ("1 0 0 1\n", IdentityGenerator, "index", 0),
    ("2 1 1 1\n3 0 0 1\n", NonUnitDeterminant, "index", 1),
    ("2 1 1 2\n", NonUnitDeterminant, "index", 0),
    ("-1 0 0 -1\n", IdentityGenerator, "index", 0),
])
def test_parse_group_errors(text, error, attr, value):
    with pytest.raises(error) as info:
        parse_group_text(text)
    assert getattr(info.value, attr) == value


def test_parse_empty_file():
    with pytest.raises(rep.GroupFileError):
        parse_group_text("# nothing\n")


def test_group_round_trip(tmp_path):
    gens = preset("symmetric-schottky")
    path = tmp_path / "g.txt"
    rep.write_group_file(gens, path)
    again = rep.parse_group_file(path)
    assert [g.entries for g in again.gens] == [g.entries for g in gens.gens]
    assert format_group(again).splitlines()[1:] == format_group(gens).splitlines()[1:]


def test_json_keys_and_determinism(small):
    text = report_json(small)
    assert text == report_json(build_spectrum(preset("symmetric-schottky"), 2, 50, 2))
    data = json.loads(text)
    assert sorted(data) == ["angle_set", "classes", "generators", "params",
                            "rational_hits", "records"]
    assert sorted(data["records"][0]) == ["class_i", "class_j", "conjugator", "cos2",
                                          "point", "theta"]
    assert sorted(data["classes"][0]) == ["axis", "length", "trace", "word"]
    assert data["classes"][0]["axis"]["kind"] == "vertical"
    assert data["classes"][0]["axis"]["orientation"][1] in ("inf", 0.0)
    assert sorted(data["rational_hits"][0]) == ["bound", "ok", "p", "phi_q", "q", "theta"]


def test_json_floats_round_trip(small):
    data = json.loads(report_json(small))
    assert [r["theta"] for r in data["records"]] == [r.theta for r in small.records]


def test_csv_rows(small):
    lines = report_csv(small).splitlines()
    assert lines[0].split(",") == CSV_HEADER
    assert len(lines) == 1 + len(small.records)


def test_svg_counts(small):
    text = render_svg(small, small.classes)
    assert text.count('class="geodesic"') == len(small.classes)
    assert text.count('class="marker"') == len(small.records)
    # A's axis is the vertical line x = 0, drawn at the middle of [-5, 5]
    assert 'd="M 400.000 400.000 L 400.000 0.000"' in text
    assert "π/2" in text


def test_svg_subset_and_empty(small):
    text = render_svg(small, small.classes[:1])
    assert text.count('class="geodesic"') == 1
    assert text.count('class="marker"') == sum(
        1 for r in small.records if r.class_i == r.class_j == 0)
    with pytest.raises(EmptyInput):
        render_svg(small, [])


def test_cli_writes_reports(tmp_path, capsys):
    out, csv, svg = tmp_path / "r.json", tmp_path / "r.csv", tmp_path / "r.svg"
    code = cli.main(["--preset", "symmetric-schottky", "--max-word-len", "2",
                     "--conj-len", "2", "--threads", "1", "--out", str(out),
                     "--csv", str(csv), "--svg", str(svg)])
    assert code == 0
    assert out.read_text() == report_json(build_spectrum(preset("symmetric-schottky"), 2, 50.0, 2))
    assert csv.exists() and svg.exists()
    summary = capsys.readouterr().out
    assert "1/2" in summary and "classes" in summary


def test_cli_group_file(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text(SCHOTTKY_TEXT)
    assert cli.main(["--group-file", str(path), "--max-word-len", "2",
                     "--conj-len", "1", "--threads", "1"]) == 0
    assert "warning" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    [],
    ["--preset", "modular", "--group-file", "x"],
    ["--preset", "no-such"],
    ["--preset", "modular", "--max-trace", "2"],
    ["--preset", "modular", "--max-word-len", "0"],
    ["--group-file", "/no/such/file"],
    ["--preset", "modular", "--threads", "0"],
    ["--preset", "modular", "--bogus"],
])
def test_cli_errors_exit_one(argv, capsys):
    assert cli.main(argv) == 1
    assert capsys.readouterr().err


def test_cli_bad_group_file(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("2 1 1 2\n")
    assert cli.main(["--group-file", str(path)]) == 1
    assert "determinant" in capsys.readouterr().err


def test_cli_totient_violation_exits_two(monkeypatch, capsys):
    monkeypatch.setattr("anglespec.arithmetic.totient_bound_check", lambda q, d: False)
    code = cli.main(["--preset", "symmetric-schottky", "--max-word-len", "1",
                     "--conj-len", "1", "--threads", "1"])
    assert code == 2
    assert "VIOLATES" in capsys.readouterr().out

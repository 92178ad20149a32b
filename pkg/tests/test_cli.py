import json
import subprocess
import sys

import pytest

from fragmenter.cli import main
from fragmenter.pipeline import recompute_total_cost


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def essay(fixtures_dir):
    return str(fixtures_dir / "planet_essay.txt")


def test_text_summary(capsys, essay):
    code, out, _ = run_cli(capsys, "run", "--input", essay, "--preferred", "150", "--scale", "0.5")
    assert code == 0
    assert "boundaries: 3 6 9" in out


def test_json_output_round_trips(capsys, essay):
    code, out, _ = run_cli(capsys, "run", "--input", essay, "--cost", "parabola", "--preferred", "600",
                           "--scale", "0.5", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["params"]["p"] == 600 and payload["params"]["h"] == 0.5
    assert recompute_total_cost(payload) == pytest.approx(payload["total_cost"], abs=1e-9)


def test_curve_csv(capsys, essay):
    code, out, _ = run_cli(capsys, "run", "--input", essay, "--format", "csv", "--scale", "1")
    lines = out.splitlines()
    assert lines[0] == "boundary,similarity"
    assert len(lines) == 12
    assert lines[1].split(",")[0] == "1" and len(lines[1].split(",")[1].split(".")[1]) == 6


def test_sweep_table(capsys, essay):
    code, out, _ = run_cli(capsys, "run", "--input", essay, "--cost", "both", "--preferred", "150",
                           "--sweep-scale", "0.25,0.5,0.75,1.0,1.25,1.5", "--format", "csv")
    rows = out.splitlines()
    assert rows[0] == "cost_function,h,l_avg,l_min,l_max,d_avg"
    assert len(rows) == 13


def test_sweep_row_equals_single_run(capsys, essay):
    _, out, _ = run_cli(capsys, "run", "--input", essay, "--cost", "linear", "--preferred", "150",
                        "--sweep-scale", "0.25,1.0", "--format", "json")
    rows = json.loads(out)["rows"]
    _, single, _ = run_cli(capsys, "run", "--input", essay, "--cost", "linear", "--preferred", "150",
                           "--scale", "1.0", "--format", "json")
    assert rows[1]["runs"][0] == json.loads(single)


def test_svg_golden(capsys, essay, fixtures_dir):
    _, out, _ = run_cli(capsys, "run", "--input", essay, "--preferred", "150", "--scale", "0.5", "--format", "svg")
    assert out == (fixtures_dir / "planet_essay_p150_h0.5.svg").read_text()


def test_sweep_svg_has_panel_per_h(capsys, essay):
    _, out, _ = run_cli(capsys, "run", "--input", essay, "--cost", "linear", "--sweep-scale", "0.25,0.5",
                        "--format", "svg")
    assert out.count('<g class="panel">') == 2


def test_section_selection(capsys, fixtures_dir):
    book = str(fixtures_dir / "book.txt")
    code, out, _ = run_cli(capsys, "run", "--input", book, "--section", "II:I", "--preferred", "10",
                           "--scale", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["paragraph_lengths"] == [10, 5, 5]


def test_sections_listing(capsys, fixtures_dir):
    code, out, _ = run_cli(capsys, "sections", "--input", str(fixtures_dir / "book.txt"))
    assert code == 0
    assert out.splitlines()[2] == "II:I\t3 paragraphs\t20 words\tEVIDENCE OF IT"


def test_all_sections_min_paragraph_filter(capsys, fixtures_dir):
    book = str(fixtures_dir / "book.txt")
    code, out, _ = run_cli(capsys, "run", "--input", book, "--all-sections", "--min-paragraphs", "2",
                           "--cost", "linear", "--preferred", "10", "--sweep-scale", "1", "--format", "json")
    assert code == 0
    (row,) = json.loads(out)["rows"]
    assert [len(run["paragraph_lengths"]) for run in row["runs"]] == [2, 3]
    code, _, err = run_cli(capsys, "run", "--input", book, "--all-sections", "--min-paragraphs", "20")
    assert code == 1 and "at least 20 paragraphs" in err


def test_errors_are_one_line(capsys, tmp_path):
    missing = tmp_path / "nope.txt"
    code, _, err = run_cli(capsys, "run", "--input", str(missing))
    assert code == 1 and err.count("\n") == 1 and err.startswith("fragmenter: error:")
    single = tmp_path / "one.txt"
    single.write_text("Only one paragraph here.\n")
    code, _, err = run_cli(capsys, "run", "--input", str(single))
    assert code == 1 and "at least 2 paragraphs" in err


@pytest.mark.parametrize(
    "flags",
    [["--preferred", "0"], ["--scale", "-1"], ["--top-terms", "0"], ["--window", "0"], ["--sweep-scale", "0.5,0"],
     ["--cost", "cubic"], ["--pruning", "fast"]],
)
def test_invalid_flags(capsys, essay, flags):
    with pytest.raises(SystemExit) as exc:
        main(["run", "--input", essay, *flags])
    assert exc.value.code != 0


def test_custom_stopwords(capsys, essay, tmp_path):
    stop = tmp_path / "stop.txt"
    stop.write_text("# tiny list\nthe\nof\n")
    code, out, _ = run_cli(capsys, "run", "--input", essay, "--stopwords", str(stop), "--format", "json")
    _, default, _ = run_cli(capsys, "run", "--input", essay, "--format", "json")
    assert code == 0
    assert json.loads(out)["similarities"] != json.loads(default)["similarities"]


def test_self_test_command(capsys):
    code, out, _ = run_cli(capsys, "self-test", "--seed", "7", "--cases", "50")
    assert code == 0
    assert out.strip().endswith("PASS")


def test_fetch_corpus_from_file_url(capsys, fixtures_dir, tmp_path):
    url = (fixtures_dir / "book.txt").resolve().as_uri()
    out_path = tmp_path / "book.txt"
    code, out, _ = run_cli(capsys, "fetch-corpus", "--url", url, "--output", str(out_path), "--section", "II:I",
                           "--section-output", str(tmp_path / "s.txt"))
    assert code == 0
    assert out_path.read_text().startswith("A SMALL BOOK")
    assert (tmp_path / "s.txt").read_text().startswith("The limb")


def test_module_entry_point(essay):
    proc = subprocess.run([sys.executable, "-m", "fragmenter", "run", "--input", essay, "--format", "csv"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.startswith("boundary,similarity\n")

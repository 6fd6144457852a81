import subprocess
import sys
from pathlib import Path

import pytest

from golden import FIG_WORD, THETA_WORD
from jasso.cli import main
from jasso.mapmodel import are_equivalent, format_map_text, parse_map_text

DATA = Path(__file__).parent / "data"
FIG = str(DATA / "figure1.map")
THETA = str(DATA / "theta.map")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def fig_word_file(tmp_path):
    p = tmp_path / "fig.txt"
    p.write_text("# worked example\n" + FIG_WORD + "\n")
    return str(p)


def test_encode(capsys):
    code, out, _ = run(capsys, "encode", FIG)
    assert code == 0 and out.strip() == FIG_WORD
    code, out, _ = run(capsys, "encode", THETA)
    assert out.strip() == THETA_WORD


def test_encode_report(capsys):
    code, out, _ = run(capsys, "encode", FIG, "--report")
    lines = out.splitlines()
    assert lines[1] == "visit order: a b c k d g j i h e f"
    assert "  2: c g f CH" in lines
    assert "  c1: b j" in lines


def test_encode_rejects_bad_maps(capsys, tmp_path):
    bad = tmp_path / "bad.map"
    bad.write_text("faces x y\nborder x: y\n")
    assert run(capsys, "encode", str(bad))[0] == 2
    assert run(capsys, "encode", str(DATA / "torus.map"))[0] == 2
    assert run(capsys, "encode", str(tmp_path / "missing.map"))[0] == 2


def test_validate(capsys, fig_word_file, tmp_path):
    code, out, _ = run(capsys, "validate", fig_word_file)
    assert code == 0 and out.startswith("valid: 11 pairs")
    mutated = tmp_path / "m.txt"
    mutated.write_text(FIG_WORD.replace("tc+ sn+ ba sn- ch", "tc+ sn+ ba sn-"))
    code, out, _ = run(capsys, "validate", str(mutated))
    assert code == 1 and "first failing rule 3" in out
    garbage = tmp_path / "g.txt"
    garbage.write_text("zc+ hello zc-")
    code, _, err = run(capsys, "validate", str(garbage))
    assert code == 2 and "token 2" in err


def test_decode(capsys, fig_word_file, tmp_path, figure1):
    svg, geo = tmp_path / "o.svg", tmp_path / "o.txt"
    code, out, _ = run(capsys, "decode", fig_word_file, "--svg", str(svg), "--geometry", str(geo))
    assert code == 0
    m = parse_map_text(out)
    assert m.faces == tuple(f"w{p}" for p in range(11))
    assert are_equivalent(m, figure1)
    assert svg.read_text().count("</text>") == 11
    assert geo.read_text().startswith("ladder ε | 1 | 1#,1")


def test_decode_output_file_and_invalid(capsys, fig_word_file, tmp_path):
    out = tmp_path / "m.map"
    assert run(capsys, "decode", fig_word_file, "-o", str(out))[0] == 0
    assert len(parse_map_text(out.read_text()).faces) == 11
    bad = tmp_path / "bad.txt"
    bad.write_text("zc+ mr+ sn+ sn- mr- zc-")
    assert run(capsys, "decode", str(bad))[0] == 1


def test_decode_is_byte_identical(capsys, fig_word_file):
    first = run(capsys, "decode", fig_word_file)[1]
    assert run(capsys, "decode", fig_word_file)[1] == first


def test_equiv(capsys, tmp_path, figure1):
    names = {f: f.upper() + "x" for f in figure1.faces}
    other = figure1.relabel(names).rotate("Gx", 3)
    p = tmp_path / "r.map"
    p.write_text(format_map_text(other))
    code, out, _ = run(capsys, "equiv", FIG, str(p), "--oracle")
    assert code == 0 and out.splitlines() == ["equivalent", "oracle: equivalent"]
    code, out, _ = run(capsys, "equiv", FIG, THETA)
    assert code == 1 and out.strip() == "distinct"


def test_color(capsys, tmp_path):
    svg = tmp_path / "c.svg"
    code, out, _ = run(capsys, "color", FIG, "--svg", str(svg))
    assert code == 0
    col = dict(line.split() for line in out.splitlines())
    assert col["b"] == col["j"] == "c1" and col["h"] == "c2"
    assert "<rect" in svg.read_text()


def test_roundtrip(capsys, fig_word_file, tmp_path):
    code, out, _ = run(capsys, "roundtrip", fig_word_file)
    assert code == 0 and out.strip() == "identity: 34 tokens"
    code, out, _ = run(capsys, "roundtrip", FIG)
    assert code == 0 and out.strip() == "equivalent: 11 faces"
    corrupt = tmp_path / "c.txt"
    corrupt.write_text(FIG_WORD.replace("ba ca tg-", "ca ba tg-"))
    assert run(capsys, "roundtrip", str(corrupt), "--mode", "word")[0] == 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "4", "--check-injective")
    assert code == 0
    assert out.splitlines() == ["pairs count", "1 0", "2 0", "3 1", "  injective: yes",
                                "4 4", "  injective: yes"]
    assert run(capsys, "enumerate", "7")[0] == 2


def test_enumerate_list(capsys):
    code, out, _ = run(capsys, "enumerate", "3", "--list")
    assert f"  {THETA_WORD}" in out.splitlines()


def test_console_script_entry_point():
    r = subprocess.run([sys.executable, "-m", "jasso.cli", "encode", THETA],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == THETA_WORD

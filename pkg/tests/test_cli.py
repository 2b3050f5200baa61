from __future__ import annotations

import io
import subprocess
import sys

import pytest

from tdcrit.canon import canonical_graph6
from tdcrit.cli import (
    EXIT_FALSE,
    EXIT_OK,
    EXIT_PARAM,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    existence_verdict,
    main,
)
from tdcrit.families import build_cycle, build_g4m, build_g4m2
from tdcrit.graph import decode_graph6, encode_graph6, format_edge_list, max_degree
from tdcrit.search import verify_certificate


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_g4m2(capsys):
    code, out, _ = run(capsys, "construct", "g4m2", "--m", "3")
    g = decode_graph6(out.strip())
    assert code == EXIT_OK and g.n == 14 and max_degree(g) == 11


def test_construct_cycle_and_edges(capsys):
    code, out, _ = run(capsys, "construct", "cycle", "--n", "5")
    assert code == EXIT_OK and decode_graph6(out.strip()) == build_cycle(5)
    code, out, _ = run(capsys, "construct", "cycle", "--n", "5", "--format", "edges")
    assert out.splitlines()[0] == "5 5"


@pytest.mark.parametrize("argv", [
    ["construct", "g4m", "--m", "2"],
    ["construct", "g4m"],
    ["construct", "petersen"],
    ["exists", "--delta", "1"],
    ["search", "--delta", "9"],
    ["search", "--delta", "4", "--k", "4"],
    ["search", "--delta", "7", "--mode", "full"],
    ["verify", "DLo"],
])
def test_parameter_errors_exit_3(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    assert code == EXIT_PARAM


def test_verify_family_exit_0(capsys):
    g6 = encode_graph6(build_g4m2(4).graph)
    code, out, _ = run(capsys, "verify", g6, "--k", "3")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "k=3 gamma_t=3 verdict=true"
    assert len(out.splitlines()) == 1 + 18


def test_verify_c4_exit_1(capsys):
    code, out, _ = run(capsys, "verify", encode_graph6(build_cycle(4)), "--k", "2")
    assert code == EXIT_FALSE and "verdict=false" in out


def test_verify_human_format(capsys):
    code, out, _ = run(capsys, "verify", "DLo", "--k", "3", "--format", "human")
    assert code == EXIT_OK and out.strip()


@pytest.mark.parametrize("bad", ["A__", "B@", "~", "C\x7f"])
def test_verify_malformed_exit_2(capsys, bad):
    code, _, err = run(capsys, "verify", bad, "--k", "3")
    assert code == EXIT_PARSE and "parse error" in err


def test_verify_disconnected_exit_4(capsys):
    code, _, err = run(capsys, "verify", "C?", "--k", "2")  # edgeless on 4 vertices
    assert code == EXIT_PRECONDITION and "precondition" in err
    code, _, _ = run(capsys, "verify", "C?", "--k", "3")
    assert code == EXIT_PRECONDITION


def test_verify_batch_from_stdin(capsys, monkeypatch):
    lines = "\n".join(["# a comment", "DLo", encode_graph6(build_g4m(3).graph)]) + "\n"
    code, out, _ = run(capsys, "verify", "--k", "3", stdin=lines, monkeypatch=monkeypatch)
    assert code == EXIT_OK
    assert out.count("verdict=true") == 2
    lines += encode_graph6(build_cycle(7)) + "\n"
    code, out, _ = run(capsys, "verify", "-", "--k", "3", stdin=lines, monkeypatch=monkeypatch)
    assert code == EXIT_FALSE


def test_edge_list_file_input(capsys, tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(format_edge_list(build_cycle(5)))
    code, out, _ = run(capsys, "encode", str(path))
    assert code == EXIT_OK and out.strip() == encode_graph6(build_cycle(5))
    code, _, _ = run(capsys, "verify", str(path), "--k", "3")
    assert code == EXIT_OK


def test_decode(capsys):
    code, out, _ = run(capsys, "decode", "DLo")
    assert code == EXIT_OK and out == format_edge_list(decode_graph6("DLo"))


def test_gamma_t(capsys):
    code, out, _ = run(capsys, "gamma-t", encode_graph6(build_g4m2(3).graph))
    assert code == EXIT_OK and out.startswith("gamma_t=3 witness=0x")
    assert run(capsys, "gamma-t", "A_")[1].strip() == "gamma_t=2 witness=0x3"
    assert run(capsys, "gamma-t", "B?")[1].strip() == "gamma_t=inf witness=-"


def test_search_streams_certificates_and_footer(capsys):
    code, out, _ = run(capsys, "search", "--delta", "2")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[:-1] == [canonical_graph6(build_cycle(5))]
    assert lines[-1].startswith("# delta=2 k=3 mode=pruned frames=1 tested=2 found=1")
    code, out, _ = run(capsys, "search", "--delta", "3")
    assert code == EXIT_OK and "found=0" in out


def test_search_full_mode(capsys):
    code, out, _ = run(capsys, "search", "--delta", "3", "--k", "4", "--mode", "full")
    assert code == EXIT_OK and out.splitlines()[-1].startswith("# delta=3 k=4 mode=full")


def test_search_output_independent_of_workers(capsys, monkeypatch):
    _, one, _ = run(capsys, "search", "--delta", "6", "--workers", "1")
    monkeypatch.setenv("TDC_WORKERS", "2")
    _, two, _ = run(capsys, "search", "--delta", "6")
    strip = lambda s: [ln.split(" seconds=")[0] for ln in s.splitlines()]
    assert strip(one) == strip(two)


def test_exists_examples(capsys):
    assert run(capsys, "exists", "--delta", "9")[1].startswith(
        "delta=9 exists=true provenance=construction-g4m certificate=")
    assert run(capsys, "exists", "--delta", "11")[1].startswith(
        "delta=11 exists=true provenance=construction-g4m2 certificate=")
    assert run(capsys, "exists", "--delta", "7")[1].strip() == (
        "delta=7 exists=false provenance=search certificate=-")
    assert run(capsys, "exists", "--delta", "12")[1].strip() == (
        "delta=12 exists=true provenance=theorem-only certificate=-")


def test_exists_confirm_matches_stored():
    for d in range(3, 7):
        assert existence_verdict(d, confirm=True) == existence_verdict(d)


@pytest.mark.parametrize("delta", range(2, 17))
def test_existence_characterization(delta):
    v = existence_verdict(delta)
    assert v.exists == (delta not in (3, 5, 7))
    if v.certificate is not None:
        g = decode_graph6(v.certificate)
        assert g.n == delta + 3 and max_degree(g) == delta
        assert verify_certificate(v.certificate, 3)
    else:
        assert v.provenance == "theorem-only" or not v.exists
    assert (v.provenance == "theorem-only") == (delta >= 10 and delta % 2 == 0)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "tdcrit", "exists", "--delta", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("delta=2 exists=true provenance=cycle-c5")

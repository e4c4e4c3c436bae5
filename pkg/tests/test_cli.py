import io
import json
import logging
import os
import subprocess
import sys

import pytest

import graded_decomp.solver as solver_mod
from graded_decomp.cli import (
    CACHE_ENV,
    InvalidInput,
    JobConfig,
    cache_lookup,
    cache_path,
    cache_store,
    get_matrix,
    main,
    run,
)
from graded_decomp.ladders import ladder_weight
from graded_decomp.laurent import ONE
from graded_decomp.partitions import Partition
from graded_decomp.solver import decomposition_matrix

P = Partition


def cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def no_env_cache(monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)


# -- commands ----------------------------------------------------------------


def test_matrix_d1(capsys):
    assert cli(capsys, "matrix", "--e", "2", "--d", "1", "--format", "text")[:2] == (0, "1\n")


def test_matrix_d3(capsys):
    code, out, _ = cli(capsys, "matrix", "--e", "2", "--d", "3")
    assert code == 0
    assert out == "0  q\n1  0\n0  1\n"


def test_matrix_at_one(capsys):
    code, out, _ = cli(capsys, "matrix", "--e", "2", "--d", "3", "--at-one")
    assert out == "0  1\n1  0\n0  1\n"


def test_matrix_with_labels_and_mtable(capsys):
    code, out, _ = cli(capsys, "matrix", "--e", "2", "--d", "3", "--labels", "--mtable")
    assert code == 0
    assert "2,1" in out and "m_lambda(D(mu))" in out
    assert "q + q^-1" in out


@pytest.mark.parametrize("fmt", ["json", "csv", "latex"])
def test_matrix_formats(capsys, fmt):
    code, out, _ = cli(capsys, "matrix", "--e", "2", "--d", "3", "--format", fmt)
    assert code == 0
    if fmt == "json":
        obj = json.loads(out)
        assert obj["version"] == "1" and obj["e"] == 2 and obj["d"] == 3
    elif fmt == "csv":
        assert out.splitlines()[0] == 'mu,"2,1","1,1,1"'
    else:
        assert out.startswith(r"\begin{tabular}")


def test_ladder_weight(capsys):
    code, out, _ = cli(capsys, "ladder-weight", "--shape", "2,1", "--e", "2")
    assert (code, out) == (0, "j = (0,1,1), r = q + q^-1\n")


def test_ladder_weight_json(capsys):
    _, out, _ = cli(capsys, "ladder-weight", "--shape", "2,1", "--e", "2", "--format", "json")
    assert json.loads(out) == {"shape": [2, 1], "j": [0, 1, 1], "r": {"-1": 1, "1": 1}}


def test_character(capsys):
    code, out, _ = cli(capsys, "character", "--shape", "2,1", "--e", "2")
    assert (code, out) == (0, "(0,1,1): q + q^-1\n")
    _, out, _ = cli(capsys, "character", "--shape", "2,1", "--e", "2", "--at-one")
    assert out == "(0,1,1): 2\n"
    _, out, _ = cli(capsys, "character", "--shape", "3", "--e", "2", "--format", "csv")
    assert out == '"0,1,0",q\n'


def test_canonical_basis(capsys):
    code, out, _ = cli(capsys, "canonical-basis", "--shape", "1^3", "--e", "2")
    assert (code, out) == (0, "G(1^3) = q(3) + (1^3)\n")


def test_first_approx(capsys):
    code, out, _ = cli(capsys, "first-approx", "--shape", "2,1", "--e", "2")
    assert code == 0
    assert out == "r = q + q^-1\nr*A(2,1) = (q + q^-1)(2,1)\n"


@pytest.mark.parametrize("e", [2, 3, 4, 5])
def test_verify_passes(capsys, e):
    for d in range(0, 10):
        code, out, _ = cli(capsys, "verify", "--e", str(e), "--d", str(d))
        assert code == 0, out
        assert "FAIL" not in out


def test_verify_reports_failure(tmp_path, capsys):
    M = decomposition_matrix(3, 2)
    M.set_entry((3,), (1, 1, 1), -ONE.shift(1))
    cache_store(tmp_path, M)
    code, out, _ = cli(capsys, "verify", "--e", "2", "--d", "3", "--cache-dir", str(tmp_path))
    assert code == 1
    assert "FAIL" in out


# -- errors ------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ["matrix", "--e", "1", "--d", "3"],
        ["ladder-weight", "--shape", "1,2", "--e", "2"],
        ["ladder-weight", "--shape", "x", "--e", "2"],
        ["canonical-basis", "--shape", "3", "--e", "2"],
        ["first-approx", "--shape", "2", "--e", "2"],
        ["matrix", "--e", "2", "--d", "-1"],
        ["matrix", "--e", "2", "--d", "2", "--threads", "0"],
        ["character", "--shape", "13", "--e", "2"],
    ],
)
def test_invalid_input_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_internal_violation_exit_3(capsys, monkeypatch):
    real = solver_mod.specht_multiplicity
    target = ladder_weight(P((2, 1, 1)), 2)

    def corrupted(mu, j, e):
        val = real(mu, j, e)
        return val + ONE if tuple(mu) == (4,) and tuple(j) == target else val

    monkeypatch.setattr(solver_mod, "specht_multiplicity", corrupted)
    code, _, err = cli(capsys, "matrix", "--e", "2", "--d", "4")
    assert code == 3
    assert "(4)" in err and "(2,1^2)" in err


def test_job_config_validation():
    with pytest.raises(InvalidInput):
        JobConfig(e=2, d=1, command="matrix", format="xml")
    with pytest.raises(InvalidInput):
        JobConfig(e=2, d=1, command="plot")


# -- cache -------------------------------------------------------------------


def test_cache_round_trip(tmp_path):
    M = decomposition_matrix(3, 2)
    assert cache_store(tmp_path, M)
    assert cache_lookup(tmp_path, 2, 3) == M


def test_cache_missing_key(tmp_path):
    assert cache_lookup(tmp_path, 5, 9) is None
    assert cache_lookup(None, 2, 3) is None


def test_cache_truncated_file(tmp_path, caplog):
    cache_store(tmp_path, decomposition_matrix(3, 2))
    path = cache_path(tmp_path, 2, 3)
    path.write_text(path.read_text()[:40])
    with caplog.at_level(logging.WARNING):
        assert cache_lookup(tmp_path, 2, 3) is None
    assert "ignoring" in caplog.text


def test_cache_wrong_version_ignored(tmp_path, caplog):
    obj = decomposition_matrix(3, 2).to_json()
    obj["version"] = "0"
    cache_path(tmp_path, 2, 3).write_text(json.dumps(obj))
    with caplog.at_level(logging.WARNING):
        assert cache_lookup(tmp_path, 2, 3) is None


def test_cache_mismatched_key_ignored(tmp_path):
    cache_path(tmp_path, 2, 4).write_text(json.dumps(decomposition_matrix(3, 2).to_json()))
    assert cache_lookup(tmp_path, 2, 4) is None


def test_unwritable_cache_warns_and_computes(tmp_path, caplog):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with caplog.at_level(logging.WARNING):
        M = get_matrix(2, 3, cache_dir=blocker / "sub")
    assert M == decomposition_matrix(3, 2)
    assert "not writable" in caplog.text


def test_get_matrix_uses_cache(tmp_path):
    M = decomposition_matrix(3, 2)
    M.set_entry((3,), (1, 1, 1), ONE.shift(2))
    cache_store(tmp_path, M)
    assert get_matrix(2, 3, cache_dir=tmp_path) == M


def test_env_var_overrides_cache_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    cli(capsys, "matrix", "--e", "2", "--d", "3", "--cache-dir", str(tmp_path / "other"))
    assert cache_path(tmp_path, 2, 3).exists()
    assert not (tmp_path / "other").exists()


# -- determinism ---------------------------------------------------------------


@pytest.mark.parametrize("fmt", ["text", "json", "csv", "latex"])
def test_output_independent_of_threads(fmt):
    outs = []
    for threads in (1, 4):
        buf = io.StringIO()
        run(JobConfig(e=3, d=8, command="matrix", format=fmt, threads=threads, show_mtable=True), buf)
        outs.append(buf.getvalue().encode())
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "graded_decomp", "matrix", "--e", "2", "--d", "2"],
        capture_output=True,
        text=True,
        env={k: v for k, v in os.environ.items() if k != CACHE_ENV},
    )
    assert proc.returncode == 0
    assert proc.stdout == "q\n1\n"

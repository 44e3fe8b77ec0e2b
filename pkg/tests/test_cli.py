import json

import pytest

from pclatt.cli import main
from pclatt.textio import FIXTURES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys):
    code, out, _ = run(capsys, "check", "fig1c")
    assert code == 0
    assert "distributive: yes" in out
    assert "stone-identity: no  [x:=a]" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "check", "fig1b")
    data = json.loads(out)
    assert code == 0 and data["stone"]["holds"] is True


def test_table_star(capsys):
    code, out, _ = run(capsys, "table", "--op", "star", "fig1a")
    assert code == 0
    assert out.splitlines()[2].split() == ["a", "b", "c"]


def test_table_arrow_json(capsys):
    code, out, _ = run(capsys, "table", "--op", "arrow", "fig1a", "--format", "json")
    assert json.loads(out)["b"]["0"] == "c"


def test_table_darrow(capsys):
    code, out, _ = run(capsys, "table", "--op", "darrow", "fig1b")
    rows = [line.split("|")[1].split() for line in out.splitlines()[2:]]
    assert rows[2] == list("aa1111")


def test_laws_exit_code(capsys):
    code, out, _ = run(capsys, "laws", "fig1b")
    assert code == 0 and "th1-i" in out
    code, out, _ = run(capsys, "laws", "fig1a", "--law", "lem1-i")
    assert code == 0 and "info" in out and "a:=c, b:=a" in out


def test_laws_all(capsys):
    _, only, _ = run(capsys, "laws", "fig1a")
    _, every, _ = run(capsys, "laws", "fig1a", "--all")
    assert "lem1-i" not in only and "lem1-i" in every


def test_ds(capsys):
    code, out, _ = run(capsys, "ds", "fig1b", "--kind", "first")
    assert out.split() == ["{1}", "{c,1}", "{d,1}", "{a,c,1}", "{b,d,1}", "{b,c,d,1}", "{0,a,b,c,d,1}"]
    code, out, _ = run(capsys, "ds", "fig1b", "--kind", "second", "--closure", "b")
    assert out.strip() == "{b,c,d,1}"


def test_cong(capsys):
    code, out, _ = run(capsys, "cong", "fig1b", "--theta", "c,1")
    assert code == 0
    assert out.splitlines()[0] == "Θ({c,1}): {0} {a} {b,d} {c,1}"
    assert "ok: yes" in out


def test_cong_bad_theta(capsys):
    code, _, err = run(capsys, "cong", "fig1b", "--theta", "1")
    assert code == 2 and "second kind" in err


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--n", "5", "--dedup")
    assert code == 0 and out.count("elements:") == 5 and out.count("---") == 4
    code, out, _ = run(capsys, "gen", "--n", "6", "--dedup", "--filter", "stone,not-brouwerian")
    assert out == ""


def test_suite(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "suite", "--max-n", "4", "--json", str(path))
    assert code == 0 and "0 FATAL" in out
    assert isinstance(json.loads(path.read_text()), list)


def test_export(capsys, tmp_path):
    f = tmp_path / "c.lat"
    f.write_text(FIXTURES["fig1c"])
    code, out, _ = run(capsys, "export", str(f))
    assert code == 0 and out.count("->") == 5


@pytest.mark.parametrize("argv", [
    ["check", "/nonexistent.lat"],
    ["laws", "fig1a", "--law", "nope"],
    ["gen", "--n", "12"],
    ["ds", "fig1a", "--kind", "first", "--closure", "zz"],
])
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("pclatt: error:")


def test_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(FIXTURES["fig1a"]))
    code, out, _ = run(capsys, "check", "-")
    assert code == 0 and "distributive: no" in out

import json

import pytest

from knotcube.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_homfly_unknot(capsys):
    code, out, _ = run(capsys, "homfly", "")
    assert code == EXIT_OK and out.strip() == "1"


def test_composition_trefoil(capsys):
    code, out, _ = run(capsys, "composition", "1 1 1")
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1] == "TOTAL a^-2 + a^-2 q^-4 - a^-4 q^-4  PASS"
    assert "e1e2e5" in out and "e1e3e4" in out and "e1e3e5" in out


def test_composition_unsigned_fails(capsys):
    code, out, _ = run(capsys, "composition", "1 -2 1 -2", "--unsigned")
    assert code == EXIT_FAIL and "FAIL" in out and "EXPECTED" in out


@pytest.mark.parametrize("product", ["destabilized", "jaeger", "alexander"])
def test_composition_json(capsys, product):
    code, out, _ = run(capsys, "composition", "1 -2 1 -2", "--product", product, "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["pass"] and data["product"] == product


def test_labelings_json(capsys):
    code, out, _ = run(capsys, "labelings", "1 1 1", "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert sorted(r["cycle"] for r in data["cycles"]) == [[], [1, 2, 5], [1, 3, 4], [1, 3, 5]]


def test_euler_check(capsys):
    code, out, _ = run(capsys, "euler-check", "1 1 1", "--alexander")
    assert code == EXIT_OK and out.strip() == "alexander  q^2 - 1 + q^-2  PASS"
    code, out, _ = run(capsys, "euler-check", "1 1 1")
    assert code == EXIT_OK and out.count("PASS") == 2


def test_homology(capsys):
    code, out, _ = run(capsys, "homology", "1 1 1", "--reduce", "1", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["total"] == 3
    code, out, _ = run(capsys, "homology", "", "--sl-1", "--cutoff", "4")
    assert code == EXIT_OK and out.startswith("# M A dim")


def test_fixtures(capsys):
    code, out, _ = run(capsys, "fixtures")
    assert code == EXIT_OK and out.count("PASS") == 6


@pytest.mark.parametrize("argv", [["homfly", "1 x"], ["homfly", "3", "--strands", "2"],
                                  ["homology", "1", "--cutoff", "-1"], ["nosuch"],
                                  ["composition", "1", "--product", "bogus"]])
def test_bad_input_exit_code(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == EXIT_INPUT
    assert "error" in capsys.readouterr().err


def test_output_is_deterministic(capsys):
    first = run(capsys, "labelings", "1 -2 1 -2", "--all")
    second = run(capsys, "labelings", "1 -2 1 -2", "--all")
    assert first == second

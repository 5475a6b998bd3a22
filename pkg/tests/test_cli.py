import json

import pytest
from click.testing import CliRunner

from shiftcalc import codes as C
from shiftcalc import jsonio
from shiftcalc import unitaries as U
from shiftcalc import words as W
from shiftcalc.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def test_certify_kitchens_is_self_inverse(runner, tmp_path):
    f = write(tmp_path / "u.json", jsonio.unitary_to_dict(U.kitchens_unitary()))
    result = runner.invoke(main, ["certify", f])
    assert result.exit_code == 0
    out = json.loads(result.output)
    assert out["verdict"] == "automorphism"
    assert out["inverse"] == jsonio.unitary_to_dict(U.kitchens_unitary())
    assert out["property_P_m"] == 0


def test_certify_flip_exits_two(runner, tmp_path):
    f = write(tmp_path / "u.json", jsonio.unitary_to_dict(U.flip_unitary(2)))
    result = runner.invoke(main, ["certify", f])
    assert result.exit_code == 2
    out = json.loads(result.output)
    assert out == {"verdict": "not_automorphism", "reason": "degree", "degree": 2}


def test_certify_malformed_map_exits_one(runner, tmp_path):
    f = write(
        tmp_path / "u.json",
        {"n": 2, "level": 1, "map": [["1", "1"], ["2", "1"]]},
    )
    result = runner.invoke(main, ["certify", f])
    assert result.exit_code == 1


def test_orbits_reports_the_kitchens_swap(runner, tmp_path):
    f = write(tmp_path / "c.json", jsonio.code_to_dict(C.kitchens_code()))
    result = runner.invoke(main, ["orbits", "--code", f, "--r", "2"])
    assert result.exit_code == 0
    out = json.loads(result.output)
    assert ["13", "23"] in out["permutation"]
    assert ["23", "13"] in out["permutation"]


def test_orbits_refutes_non_bijective_codes(runner, tmp_path):
    f = write(tmp_path / "c.json", {"n": 2, "radius": 1, "rule": {"1": 1, "2": 1}})
    result = runner.invoke(main, ["orbits", "--code", f, "--r", "2"])
    assert result.exit_code == 2


def test_degree_of_the_shift(runner, tmp_path):
    f = write(tmp_path / "c.json", jsonio.code_to_dict(C.shift_code(2)))
    result = runner.invoke(main, ["degree", "--code", f])
    assert result.exit_code == 0
    out = json.loads(result.output)
    assert out == {"degree": 2, "m": 1, "partner_degree": 1}


def test_degree_inconclusive_exits_three(runner, tmp_path):
    f = write(tmp_path / "c.json", jsonio.code_to_dict(C.shift_power_code(2, 3)))
    result = runner.invoke(main, ["--max-m", "1", "degree", "--code", f])
    assert result.exit_code == 3
    assert json.loads(result.output)["verdict"] == "unknown"


def test_compose_kitchens_with_itself_is_identity(runner, tmp_path):
    f = write(tmp_path / "u.json", jsonio.unitary_to_dict(U.kitchens_unitary()))
    result = runner.invoke(main, ["compose", f, f])
    assert result.exit_code == 0
    assert json.loads(result.output) == jsonio.unitary_to_dict(U.identity(3))


def test_compose_rejects_mixed_kinds(runner, tmp_path):
    u = write(tmp_path / "u.json", jsonio.unitary_to_dict(U.kitchens_unitary()))
    c = write(tmp_path / "c.json", jsonio.code_to_dict(C.kitchens_code()))
    result = runner.invoke(main, ["compose", u, c])
    assert result.exit_code == 1


def test_apply_unitary_to_projection(runner, tmp_path):
    u = write(tmp_path / "u.json", jsonio.unitary_to_dict(U.kitchens_unitary()))
    p = write(tmp_path / "p.json", jsonio.diag_to_dict(W.cylinder(3, (1,))))
    result = runner.invoke(main, ["apply", u, p])
    assert result.exit_code == 0
    assert json.loads(result.output)["support"] == ["11", "12", "23"]


def test_enumerate_streams_exactly_two_lines(runner):
    result = runner.invoke(main, ["enumerate", "--n", "2", "--max-radius", "3"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert len(lines) == 2
    rules = [json.loads(line)["code"]["rule"] for line in lines]
    assert {"1": 1, "2": 2} in rules and {"1": 2, "2": 1} in rules


def test_capacity_limit_exits_four(runner, tmp_path):
    from shiftcalc import capacity

    old = capacity.get_limit()
    try:
        f = write(tmp_path / "u.json", jsonio.unitary_to_dict(U.kitchens_unitary()))
        result = runner.invoke(main, ["--capacity", "8", "certify", f])
        assert result.exit_code == 4
    finally:
        capacity.set_limit(old)


def test_output_is_byte_stable(runner, tmp_path):
    f = write(tmp_path / "c.json", jsonio.code_to_dict(C.kitchens_code()))
    first = runner.invoke(main, ["orbits", "--code", f, "--r", "3"])
    second = runner.invoke(main, ["orbits", "--code", f, "--r", "3"])
    assert first.output == second.output


def test_table_format_flattens_canonical_json(runner, tmp_path):
    f = write(tmp_path / "c.json", jsonio.code_to_dict(C.shift_code(2)))
    result = runner.invoke(main, ["--format", "table", "degree", "--code", f])
    assert result.exit_code == 0
    assert "degree\t2" in result.output

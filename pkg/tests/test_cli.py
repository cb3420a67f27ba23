import pytest

from rkmcodes.cli import main, parse_lift_spec
from rkmcodes.constructions import SpecError
from rkmcodes.ring import RingParams


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decode_encode(capsys):
    assert run(capsys, "decode", "29", "--k", "3", "--m", "2")[:2] == (0, "uv+v+u^2+1\n")
    assert run(capsys, "encode", "uv+v+u^2+1", "--k", "3", "--m", "2")[:2] == (0, "29\n")
    code, _, err = run(capsys, "decode", "64", "--k", "3", "--m", "2")
    assert code == 2 and "0..63" in err
    assert run(capsys, "encode", "w", "--k", "3")[0] == 2
    assert run(capsys, "decode", "1", "--k", "1", "--m", "3")[0] == 2


def test_ring_info(capsys):
    code, out, _ = run(capsys, "ring", "info", "3", "2")
    assert code == 0
    assert "size: 64" in out and "units: 32" in out
    assert "(u+1)^-1 = u^2+u+1" in out


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_construct(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("bdc 3 2 | 10 11 31 | 10\n")
    code, out, _ = run(capsys, "construct", str(f))
    assert code == 0
    assert "generator over R_{3,2} (2x4)" in out
    assert "Gray image generator (12x24)" in out
    bits = [l for l in out.splitlines() if set(l) <= {"0", "1"} and len(l) == 24]
    assert len(bits) == 12


def test_check_table2_row1(tmp_path, capsys):
    f = tmp_path / "t2.txt"
    f.write_text("# row 1\nbdc 3 1 | 2 3 3 | 2 1 1 5 5\n")
    code, out, _ = run(capsys, "check", str(f), "--csv")
    assert code == 0
    assert "family: W36_2" in out and "8,289" in out and "d: 8" in out
    code, out, _ = run(capsys, "check", str(f), "--algorithm", "exhaustive")
    assert code == 0 and "d: 8" in out


def test_check_large_code_bounds(tmp_path, capsys):
    f = tmp_path / "t4.txt"
    f.write_text("dc 3 1 | 2 2 2 1 2 6 1 2 1 1 1\n")
    code, out, _ = run(capsys, "check", str(f))
    assert code == 0 and "d bounds: 12 <=" in out
    code, out, _ = run(capsys, "check", str(f), "--extended")
    assert code == 0 and "d: 12" in out and "beta: 22" in out


def test_check_failures(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("dc 3 1 | 1 1\n")
    assert run(capsys, "check", str(f))[0] == 1
    f.write_text("dc 3 1 | 1\ndc 3 1 | 1 x\n")
    code, _, err = run(capsys, "check", str(f))
    assert code == 2 and "line 2" in err
    assert run(capsys, "check", str(tmp_path / "missing.txt"))[0] == 2
    f.write_text("dc 3 1 | 1 2 3 4 5 6 7 1 2 3 4 5 6 7 1 2 3 4 5 6 7 1 2 3 4 5 6 7\n")
    code, _, err = run(capsys, "check", str(f), "--algorithm", "exhaustive")
    assert code == 2 and "limit" in err


def test_reproduce(capsys):
    code, out, _ = run(capsys, "reproduce", "golay")
    assert code == 0
    assert out.count("[24,12,8] Type II") == 2 and "2/2 rows pass" in out
    code, out, _ = run(capsys, "--threads", "1", "reproduce", "t2")
    assert code == 0 and "W36_2" in out
    assert run(capsys, "reproduce", "t9")[0] == 2


def test_reproduce_exit_code_reflects_failures(capsys):
    # the printed D12 row is not self-dual
    code, out, _ = run(capsys, "reproduce", "t7", "--threads", "1")
    assert code == 1
    assert "D12" in out and "34/35 rows pass" in out


def test_macwilliams_selftest(capsys):
    code, out, _ = run(capsys, "macwilliams", "selftest", "--count", "6", "--seed", "2")
    assert code == 0 and "6/6 codes" in out


LIFT = """# Golay from the [8,4,4] seed
seed: bdc 1 1 | 0 1 1 | 0 1 1
ring: 3 1
strategy: sampled
samples: 300
seed-value: 5
d-target: 8
"""


def test_search(tmp_path, capsys):
    f = tmp_path / "lift.txt"
    f.write_text(LIFT)
    code, out, _ = run(capsys, "search", str(f), "--threads", "1")
    assert code == 0 and "[24,12,8] Type II" in out
    again = run(capsys, "search", str(f), "--threads", "1")[1]
    assert again == out
    other = run(capsys, "search", str(f), "--seed", "6", "--threads", "1")[1]
    assert other != out


def test_search_budget_refused(tmp_path, capsys):
    f = tmp_path / "lift.txt"
    f.write_text("seed: bdc 1 1 | 0 1 1 | 0 1 1\nring: 3 2\n")
    code, _, err = run(capsys, "search", str(f))
    assert code == 2 and "budget" in err


def test_lift_spec_parsing():
    spec = parse_lift_spec(LIFT)
    assert spec.params == RingParams(3, 1) and spec.samples == 300 and spec.d_target == 8
    with pytest.raises(SpecError, match="line 2"):
        parse_lift_spec("seed: dc 1 1 | 1\nflavour: x\n")
    with pytest.raises(SpecError, match="line 1"):
        parse_lift_spec("ring: 3\n")
    with pytest.raises(SpecError, match="missing"):
        parse_lift_spec("ring: 3 1\n")
    with pytest.raises(SpecError):
        parse_lift_spec("seed: dc 3 1 | 2\nring: 3 1\n")

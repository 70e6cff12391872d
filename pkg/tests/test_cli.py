import json
import logging

import pytest

from zz_strips.cli import EXIT_GUARD, EXIT_INVALID, EXIT_OK, main, parse_n_range
from zz_strips.errors import StripParseError
from zz_strips.strip_geometry import make_strip


def lines(capsys):
    return capsys.readouterr().out.splitlines()


def test_zz_inline(capsys):
    assert main(["zz", "WRN", "2"]) == EXIT_OK
    assert lines(capsys) == ["x^2 + 6x + 6"]


def test_zz_parallelogram(capsys):
    assert main(["zz", "M", "2", "2"]) == EXIT_OK
    assert lines(capsys) == ["x^2 + 6x + 6"]


def test_zz_latex(capsys):
    assert main(["zz", "WRN", "2", "-f", "latex"]) == EXIT_OK
    assert lines(capsys) == ["x^{2} + 6 x + 6"]


def test_zz_json(capsys):
    assert main(["zz", "-s", "WWRNN", "-n", "3", "-f", "json"]) == EXIT_OK
    payload = json.loads(lines(capsys)[0])
    assert payload["strip"] == {"shapes": list("WWRNN"), "n": 3}
    assert payload["zz"]["kekule_count"] == 175


def test_zz_n_range(capsys):
    assert main(["zz", "-s", "WRN", "--n-range", "1..3"]) == EXIT_OK
    assert lines(capsys) == ["n=1: 2x + 3", "n=2: x^2 + 6x + 6", "n=3: 3x^2 + 12x + 10"]


def test_non_kekulean_strip_gives_zero(capsys, caplog):
    with caplog.at_level(logging.WARNING):
        assert main(["zz", "WNNWWN", "4"]) == EXIT_OK
    assert lines(capsys) == ["0"]
    assert "non-Kekuléan" in caplog.text


def test_strip_file(tmp_path, capsys):
    path = tmp_path / "strips.txt"
    path.write_text("# strips\nWRN 2\n\n" + make_strip("WN", 1).to_json() + "\n", encoding="UTF8")
    assert main(["zz", "--file", str(path)]) == EXIT_OK
    assert lines(capsys) == ["n=2: x^2 + 6x + 6", "n=1: x + 2"]


def test_malformed_strip():
    assert main(["zz", "hello"]) == EXIT_INVALID
    assert main(["zz"]) == EXIT_INVALID
    assert main(["zz", "-s", "WRN"]) == EXIT_INVALID
    assert main(["zz", "XRN", "2"]) == EXIT_INVALID


def test_missing_file(tmp_path):
    assert main(["zz", "--file", str(tmp_path / "absent.txt")]) == EXIT_INVALID


def test_parse_n_range():
    assert list(parse_n_range("2..4")) == [2, 3, 4]
    with pytest.raises(StripParseError):
        parse_n_range("4..2")
    with pytest.raises(StripParseError):
        parse_n_range("1-3")


def test_profile(capsys):
    assert main(["profile", "WNNWWN", "4"]) == EXIT_OK
    out = lines(capsys)
    assert "orders=[1, 0, -1, 0, 1]" in out[0]
    assert "non-kekulean" in out[0]


def test_poset_dot(capsys):
    assert main(["poset", "WRN", "2", "-f", "dot"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("digraph S {")
    assert '"s1_1" -> "s2_1";' in out


def test_poset_of_non_kekulean_strip():
    assert main(["poset", "WNNWWN", "4"]) == EXIT_INVALID


def test_extensions(capsys):
    assert main(["extensions", "WWRNN", "3"]) == EXIT_OK
    out = lines(capsys)
    assert len(out) == 5
    assert out[0] == "123456 des=0 fix=0 descents={} fixed={}"


def test_closed_form_text(capsys):
    assert main(["closed-form", "-s", "WWRNN"]) == EXIT_OK
    assert lines(capsys) == [
        "sum_{k=0}^{6} [C(6,k) C(n,k) + 3 C(4,k-2) C(n+1,k) + C(2,k-4) C(n+2,k)] (1+x)^k"]


def test_closed_form_once_per_family(capsys):
    assert main(["closed-form", "-s", "WRN", "--n-range", "1..4", "-f", "json"]) == EXIT_OK
    out = lines(capsys)
    assert len(out) == 1
    assert json.loads(out[0])["closed_form"] == {"p": 2, "groups": [{"des": 0, "fix": 0, "mult": 1}]}


def test_kekule_lines(capsys):
    assert main(["kekule", "WRN", "2"]) == EXIT_OK
    out = [json.loads(line) for line in lines(capsys)]
    assert len(out) == 6
    assert out[0] == {"A": [], "mu": [], "pos": [[1, 1], [2, 1]]}


def test_clar_lines(capsys):
    assert main(["clar", "WRN", "2"]) == EXIT_OK
    out = [json.loads(line) for line in lines(capsys)]
    assert len(out) == 13
    assert sum(1 for record in out if len(record["aromatic"]) == 2) == 1


def test_oracle(capsys):
    assert main(["oracle", "M", "2", "2"]) == EXIT_OK
    captured = capsys.readouterr()
    assert "ZZ (Clar covers):   x^2 + 6x + 6" in captured.out
    assert "DIFF" not in captured.out
    assert "(OK)" in captured.err


def test_oracle_guard():
    assert main(["oracle", "WWRNN", "3", "--max-vertices", "10"]) == EXIT_GUARD


def test_catalog_json(capsys):
    assert main(["catalog", "-t", "2", "-w", "1", "-f", "json"]) == EXIT_OK
    out = [json.loads(line) for line in lines(capsys)]
    assert [entry["shapes"] for entry in out] == ["WN", "WRN"]


def test_catalog_export(tmp_path, capsys):
    assert main(["catalog", "-t", "2", "-w", "1", "--export", str(tmp_path)]) == EXIT_OK
    assert (tmp_path / "catalog_tiers_2_run_1.csv").exists()
    assert len(lines(capsys)) == 2


@pytest.mark.parametrize("argv", [
    ["catalog", "-t", "2", "-w", "0"],
    ["catalog", "-t", "0"],
    ["oracle", "WRN", "2", "--max-vertices", "0"],
    ["oracle", "WRN", "2", "--max-p", "-1"],
])
def test_non_positive_limits_are_rejected(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_closed_form_of_non_kekulean_family(capsys, caplog):
    with caplog.at_level(logging.WARNING):
        assert main(["closed-form", "-s", "WNNWWN"]) == EXIT_OK
    assert lines(capsys) == ["0"]
    assert "non-Kekuléan" in caplog.text

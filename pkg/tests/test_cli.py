import csv
import io
import json

import pytest

from fourmaps import cli, orbifold
from fourmaps.known import KNOWN_COUNTS


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_rooted(capsys):
    assert run(capsys, "count", "rooted", "--genus", "2") == (0, "45\n", "")


def test_count_unrooted(capsys):
    assert run(capsys, "count", "unrooted", "--genus", "5") == (0, "120644422\n", "")


def test_count_genus_zero(capsys):
    code, out, err = run(capsys, "count", "rooted", "--genus", "0")
    assert code == 2 and out == ""
    assert "genus must be ≥ 1" in err


def test_count_maps14(capsys):
    assert run(capsys, "count", "maps14", "--genus", "2", "--k", "3")[:2] == (0, "45\n")
    assert run(capsys, "count", "maps14", "--genus", "1")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys, "count", "sideways", "--genus", "1")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "oracle", "rooted", "--genus", "1", "--threads", "0")[0] == 2


def test_table_csv_full(capsys):
    code, out, _ = run(capsys, "table", "--min-genus", "1", "--max-genus", "15", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["genus", "labelled", "unlabelled"]
    assert rows[15] == [
        "15",
        "38405528861348447169764191835301345796340625000",
        "331082145356452130774665205463914398071175024",
    ]
    for g, lab, unl in rows[1:]:
        assert (int(lab), int(unl)) == KNOWN_COUNTS[int(g)]


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--min-genus", "1", "--max-genus", "1", "--format", "json")
    assert (code, out) == (0, '[{"genus":1,"labelled":"1","unlabelled":"1"}]\n')


def test_table_json_round_trip(capsys):
    _, out, _ = run(capsys, "table", "--min-genus", "8", "--max-genus", "12", "--format", "json")
    for row in json.loads(out):
        assert isinstance(row["labelled"], str)
        assert (int(row["labelled"]), int(row["unlabelled"])) == KNOWN_COUNTS[row["genus"]]


def test_table_markdown(capsys):
    _, out, _ = run(capsys, "table", "--max-genus", "2")
    assert out.splitlines() == ["| g | Labelled | Unlabelled |", "|---|---:|---:|",
                                "| 1 | 1 | 1 |", "| 2 | 45 | 6 |"]


@pytest.mark.parametrize("argv", [
    ["table", "--min-genus", "3", "--max-genus", "2"],
    ["table", "--min-genus", "0", "--max-genus", "2"],
    ["table", "--format", "xml"],
])
def test_table_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_deterministic(capsys):
    a = run(capsys, "table", "--max-genus", "6", "--format", "csv")
    b = run(capsys, "table", "--max-genus", "6", "--format", "csv")
    assert a == b


def test_oracle(capsys):
    code, out, err = run(capsys, "oracle", "rooted", "--genus", "2")
    assert (code, out) == (0, "45\n")
    assert "partition" in err
    assert run(capsys, "oracle", "unrooted", "--genus", "2", "--threads", "2", "--quiet") == (0, "6\n", "")


def test_signatures(capsys):
    code, out, _ = run(capsys, "signatures", "--genus", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "total 510"
    assert "L=1" in lines[0] and "contribution=945/2" in lines[0]
    assert any("epi0=8" in line for line in lines)


def test_map_info_figure(capsys, tmp_path, figure_map):
    path = tmp_path / "fig.json"
    path.write_text(figure_map.to_json())
    code, out, _ = run(capsys, "map", "info", str(path))
    assert code == 0
    assert "genus: 2" in out
    assert "degrees: {4: 3}" in out
    assert "trisections: 4 [5, 6, 9, 11]" in out
    assert "four-regular: yes" in out


def test_map_info_tree(capsys, tmp_path, edge_tree):
    path = tmp_path / "tree.json"
    path.write_text(edge_tree.to_json())
    code, out, _ = run(capsys, "map", "info", str(path))
    assert code == 0
    assert "genus: 0" in out and "degrees: {1: 2}" in out and "trisections: 0 []" in out


def test_map_info_bad_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"darts": 4, "alpha": [1, 2, 3, 0]}')
    code, _, err = run(capsys, "map", "info", str(path))
    assert code == 3 and "involution" in err
    assert run(capsys, "map", "info", str(tmp_path / "missing.json"))[0] == 3


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-genus", "2")
    assert code == 0
    assert "FAIL" not in out
    assert "PASS oracle unrooted g=2: 6" in out


def test_verify_range(capsys):
    assert run(capsys, "verify", "--max-genus", "4")[0] == 2


def test_verify_catches_f2_fault(capsys, monkeypatch):
    real = orbifold._f2_k_range
    monkeypatch.setattr(orbifold, "_f2_k_range", lambda g, og: range(real(g, og).start + 1, g))
    code, out, _ = run(capsys, "verify", "--max-genus", "1")
    assert code == 1
    assert "FAIL" in out

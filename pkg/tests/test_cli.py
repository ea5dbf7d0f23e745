import json
import subprocess
import sys

import pytest

from hurwitz_hodge.cli import Cache, main, report_from_dict, report_to_dict
from hurwitz_hodge.core import Partition
from hurwitz_hodge.elsv import HodgeIntegralTable
from hurwitz_hodge.hurwitz import hurwitz_brute, hurwitz_class_algebra, make_instance


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("genus, partition, H", [("1", "2", "1/2"), ("0", "3", "1"), ("0", "2,1", "4")])
def test_hurwitz_command(capsys, genus, partition, H):
    code, out, _ = run(capsys, "hurwitz", "--genus", genus, "--partition", partition, "--threads", "1")
    assert code == 0
    assert f"H: {H}\n" in out
    assert "method: brute" in out


def test_hurwitz_prints_numerology_and_closed_form(capsys):
    code, out, _ = run(capsys, "hurwitz", "--genus", "0", "--partition", "3", "--threads", "1")
    assert "d=3 m=1 b=4 r=2 k=2" in out
    assert "genus-0 closed form: 1 (agrees)" in out


def test_hurwitz_json(capsys, tmp_path):
    out_file = tmp_path / "h.json"
    code, _, _ = run(capsys, "hurwitz", "--genus", "1", "--partition", "3,1", "--method", "class-algebra",
                     "--format", "json", "--output", str(out_file))
    doc = json.loads(out_file.read_text())
    assert code == 0
    assert doc["hurwitz_number"] == "1215"
    assert doc["tuple_count"] == 1215 * 24
    assert doc["method"] == "class_algebra"
    assert (doc["d"], doc["r"]) == (4, 6)


@pytest.mark.parametrize("argv, code", [
    (["hurwitz", "--genus", "0", "--partition", "2,x"], 2),
    (["hurwitz", "--genus", "0", "--partition", "0"], 2),
    (["hurwitz", "--genus", "-1", "--partition", "2"], 2),
    (["hurwitz", "--genus", "3", "--partition", "6", "--method", "brute"], 3),
    (["hodge", "--genus", "0", "--marks", "1"], 2),
])
def test_error_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err.startswith("error:")


def test_auto_falls_back_to_class_algebra(capsys):
    code, out, _ = run(capsys, "hurwitz", "--genus", "3", "--partition", "6")
    assert code == 0 and "method: class_algebra" in out


def test_hodge_command(capsys, tmp_path):
    path = tmp_path / "g1m1.txt"
    code, out, _ = run(capsys, "hodge", "--genus", "1", "--marks", "1", "--holdout", "2", "--table-out", str(path))
    assert code == 0
    assert "1 | 0 | 1/24" in out and "0 | 1 | 1/24" in out
    assert "holdouts passed: 2/2" in out
    assert path.read_text() == "1 1 1 0 1/24\n1 1 0 1 1/24\n"


def test_hodge_g0m3(capsys, tmp_path):
    path = tmp_path / "g0m3.txt"
    code, out, _ = run(capsys, "hodge", "--genus", "0", "--marks", "3", "--holdout", "0", "--table-out", str(path))
    assert code == 0
    assert HodgeIntegralTable.read(path)[(0, 0, 0), 0] == 1


def test_hodge_json(capsys, tmp_path):
    code, out, _ = run(capsys, "hodge", "--genus", "2", "--marks", "1", "--holdout", "3",
                       "--table-out", str(tmp_path / "t.txt"), "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["verification"]["passed"]
    assert [h["method"] for h in doc["verification"]["holdouts"]] == ["brute", "class_algebra", "class_algebra"]


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "multiplicity", "--max-d", "5", "--threads", "1")
    assert code == 0
    assert out.strip().endswith("24/24 checks passed")


def test_verify_genus0_reports_both_modes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "genus0", "--max-d", "4", "--threads", "1")
    assert code == 0
    assert "d^(d-1) form=108 MISMATCH" in out


def test_output_is_deterministic_across_threads(capsys):
    outs = set()
    for threads in ("1", "2", "3"):
        code, out, _ = run(capsys, "hurwitz", "--genus", "1", "--partition", "3,1", "--method", "brute",
                           "--threads", threads, "--format", "json")
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_cache_round_trip(capsys, tmp_path):
    rep = hurwitz_brute(make_instance(1, Partition((2, 1))))
    assert report_from_dict(json.loads(json.dumps(report_to_dict(rep)))) == rep
    cache = Cache(tmp_path)
    cache.put(rep)
    assert cache.get(1, rep.instance.alpha, rep.method) == rep
    assert list(tmp_path.iterdir()) == [tmp_path / "counts.jsonl"]


def test_cache_used_and_checked(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("HURWITZ_HODGE_CACHE", str(tmp_path))
    args = ["hurwitz", "--genus", "0", "--partition", "2,2", "--threads", "1"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0 and out1 == out2
    assert len((tmp_path / "counts.jsonl").read_text().splitlines()) == 1
    code, out, _ = run(capsys, "check-cache")
    assert code == 0 and "1/1 cache entries match" in out


def test_check_cache_detects_tampering(capsys, tmp_path):
    cache = Cache(tmp_path)
    rep = hurwitz_class_algebra(make_instance(0, Partition((3,))))
    cache.put(rep)
    text = cache.path.read_text().replace('"tuple_count": 6', '"tuple_count": 12').replace('"hurwitz_number": "1"', '"hurwitz_number": "2"')
    cache.path.write_text(text)
    code, out, _ = run(capsys, "check-cache", "--cache-dir", str(tmp_path))
    assert code == 1 and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hurwitz_hodge", "hurwitz", "--genus", "1", "--partition", "2"],
                          capture_output=True, text=True, check=True)
    assert "H: 1/2" in proc.stdout

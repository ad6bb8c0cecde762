import json

import pytest

from cyclicfiber import catalog
from cyclicfiber.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_triangulations_counts(capsys):
    code, out, _ = run(capsys, "triangulations", "-n", "5", "-d", "2")
    assert code == 0 and "5 triangulations" in out
    code, out, _ = run(capsys, "triangulations", "-n", "8", "-d", "4", "--json")
    assert code == 0 and json.loads(out)["count"] == 40


def test_triangulations_scale_guard(capsys):
    code, _, err = run(capsys, "triangulations", "-n", "11", "-d", "9")
    assert code == 2 and "--stretch" in err


def test_triangulations_out_file(tmp_path, capsys):
    path = tmp_path / "t.txt"
    code, _, _ = run(capsys, "triangulations", "-n", "5", "-d", "2", "--out", str(path))
    assert code == 0
    lines = path.read_text().strip().splitlines()
    assert len(lines) == 5 and "123,134,145" in lines


def test_regularity_lemma47(tmp_path, capsys):
    path = tmp_path / "c95.txt"
    path.write_text(catalog.PARAM_DEPENDENT[(9, 5)]["cells"] + "\n")
    code, out, _ = run(
        capsys, "regularity", str(path), "-n", "9", "-d", "5",
        "--params", "0,6,7,8,9,10,11,12,30",
    )
    assert code == 0 and "REGULAR" in out
    code, out, _ = run(
        capsys, "regularity", str(path), "-n", "9", "-d", "5", "--params", "standard",
    )
    assert code == 1 and "NONREGULAR" in out


def test_regularity_certify_and_cross_check(tmp_path, capsys):
    path = tmp_path / "t.txt"
    path.write_text("123,134\n")
    code, out, _ = run(
        capsys, "regularity", str(path), "-n", "4", "-d", "2", "--certify", "--cross-check",
    )
    assert code == 0 and "WITNESS" in out


def test_regularity_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("12x,134\n")
    code, _, err = run(capsys, "regularity", str(path), "-n", "4", "-d", "2")
    assert code == 2 and "line 1" in err


def test_fiber_reports(capsys):
    code, out, _ = run(
        capsys, "fiber", "-n", "6", "-d", "2", "--dprime", "4",
        "--params", "-5,-3,-1,1,3,5", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["proper_elements"] == 30
    assert payload["polygon"] == "8-gon"
    assert payload["euler_characteristic"] == 0
    code, out, _ = run(
        capsys, "fiber", "-n", "6", "-d", "2", "--dprime", "4",
        "--params", "-100,2,3,4,5,6",
    )
    assert code == 0 and "9-gon" in out


def test_paths_report(capsys):
    code, out, _ = run(capsys, "paths", "-n", "8", "-d", "4")
    assert code == 0 and "32 coherent of 64" in out
    code, out, _ = run(
        capsys, "paths", "-n", "6", "-d", "4", "--compare-zonotope", "--cross-check"
    )
    assert code == 0 and "ISOMORPHIC" in out


def test_paths_general(capsys, tmp_path):
    code, out, _ = run(capsys, "paths-general", "remark-ubc", "--dir", "1")
    assert code == 0 and out.startswith("34 coherent")
    mat = tmp_path / "m.mat"
    mat.write_text("0 1 2 4\n0 0 1 0\n0 0 0 1\n")
    code, out, _ = run(capsys, "paths-general", str(mat), "--dir", "1", "--json")
    assert code == 0 and json.loads(out)["coherent"] == 4


def test_gale_dump(capsys):
    code, out, _ = run(capsys, "gale", "-n", "4", "-d", "2")
    assert code == 0 and "q*_2 = (-3)" in out


def test_param_file_source(tmp_path, capsys):
    f = tmp_path / "params.txt"
    f.write_text("1,2,3,10/3,23/6,13/3,14/3,5,6\n")
    tri = tmp_path / "tri.txt"
    tri.write_text(catalog.PARAM_DEPENDENT[(9, 3)]["cells"] + "\n")
    code, out, _ = run(
        capsys, "regularity", str(tri), "-n", "9", "-d", "3", "--params", f"@{f}"
    )
    assert code == 0 and "REGULAR" in out


def test_regularity_fixture_of_published_classes(tmp_path, capsys):
    path = tmp_path / "c73_classes.txt"
    path.write_text("\n".join(cells for cells, _ in catalog.C73_CLASSES) + "\n")
    code, out, _ = run(capsys, "regularity", str(path), "-n", "7", "-d", "3")
    assert code == 0 and out.count("REGULAR") == len(catalog.C73_CLASSES)


def test_regularity_json_input(tmp_path, capsys):
    import json as _json

    from cyclicfiber.subdiv import enumerate_triangulations, triangulations_to_json

    tris = sorted(enumerate_triangulations(10, 8))
    path = tmp_path / "c10_8.json"
    path.write_text(_json.dumps(triangulations_to_json(tris, 10, 8)))
    code, out, _ = run(capsys, "regularity", str(path), "-n", "10", "-d", "8")
    assert code == 0 and out.count("REGULAR") == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["fiber", "-n", "6"])
    assert exc.value.code == 2

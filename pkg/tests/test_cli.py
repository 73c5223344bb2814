"""End-to-end command-line tests: exit codes, JSON shapes, summaries,
file outputs, and determinism."""

import json
import os

import pytest

import pdpair.scenarios
from pdpair.cli import main
from pdpair.localsystem import orientation_systems
from pdpair.presentation import fundamental_presentation
from pdpair.simplicial import (SimplicialComplex, boundary_sphere,
                               simplex_complex)
from pdpair.spaces import (circle, interval_pair, poincare_sphere, rp2,
                           wedge_circle_interval)


def write_json(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv)
    return code, json.loads(out) if out else None, err


@pytest.fixture
def files(tmp_path):
    return {
        "sphere3": write_json(tmp_path, "sphere3.json",
                              boundary_sphere(4).to_json()),
        "rp2": write_json(tmp_path, "rp2.json", rp2().to_json()),
        "circle": write_json(tmp_path, "circle.json", circle(3).to_json()),
        "interval": write_json(tmp_path, "interval.json",
                               interval_pair().to_json()),
        "wedge": write_json(tmp_path, "wedge.json",
                            wedge_circle_interval().to_json()),
        "disk2": write_json(tmp_path, "disk2.json", {
            "vertices": 3,
            "facets": [[0, 1, 2]],
            "sub_facets": [[0, 1], [1, 2], [0, 2]]}),
        "triad": write_json(tmp_path, "triad.json", {
            "vertices": 2, "facets": [[0, 1]],
            "sub1_facets": [[0]], "sub2_facets": [[1]]}),
        "trivial_sys": write_json(tmp_path, "trivial.json",
                                  {"kind": "trivial", "rank": 1}),
        "tmp_path": tmp_path,
    }


def rp2_orientation_file(tmp_path):
    pres = fundamental_presentation(rp2())
    for s in orientation_systems(pres):
        char = [0 if s.mat(g).get(0, 0) == 1 else 1
                for g in range(1, pres.ngens + 1)]
        if any(char):
            return write_json(tmp_path, "orient.json",
                              {"kind": "sign", "character": char})
    raise AssertionError("no nontrivial orientation")


class TestHomology:
    def test_three_sphere(self, capsys, files):
        code, out, _ = run_json(capsys, ["homology", files["sphere3"]])
        assert code == 0
        h = out["homology"]
        assert h["0"] == {"rank": 1, "torsion": []}
        assert h["1"] == {"rank": 0, "torsion": []}
        assert h["2"] == {"rank": 0, "torsion": []}
        assert h["3"] == {"rank": 1, "torsion": []}
        assert out["fingerprint"]["seed"] == 0

    def test_twisted_top_class(self, capsys, files):
        sysfile = rp2_orientation_file(files["tmp_path"])
        code, out, _ = run_json(capsys, ["homology", files["rp2"],
                                         "--system", sysfile])
        assert code == 0
        assert out["homology"]["2"] == {"rank": 1, "torsion": []}

    def test_summary(self, capsys, files):
        code, out, _ = run(capsys, ["homology", files["sphere3"],
                                    "--summary"])
        assert code == 0
        assert "H_0" in out and "Z" in out

    def test_degree_range(self, capsys, files):
        code, out, _ = run_json(capsys, ["homology", files["sphere3"],
                                         "--degrees", "1:2"])
        assert code == 0
        assert sorted(out["homology"]) == ["1", "2"]

    def test_deterministic_output(self, capsys, files):
        _, out1, _ = run(capsys, ["homology", files["rp2"]])
        _, out2, _ = run(capsys, ["homology", files["rp2"]])
        assert out1 == out2

    def test_bad_json_exit_two(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"vertices": 3, "facets": [[0, 1')
        code, _, err = run(capsys, ["homology", str(bad)])
        assert code == 2
        assert "line" in err and "column" in err

    def test_missing_file_exit_two(self, capsys, tmp_path):
        code, _, err = run(capsys,
                           ["homology", str(tmp_path / "missing.json")])
        assert code == 2
        assert "error" in err


class TestVerify:
    def test_interval_positive(self, capsys, files):
        code, out, _ = run_json(capsys, ["verify-pair", files["interval"]])
        assert code == 0
        assert out["report"]["verdict"] == "poincare-pair"
        assert out["report"]["formal_dimension"] == 1

    def test_circle_undecided(self, capsys, files):
        code, out, _ = run_json(capsys, ["verify-pair", files["circle"]])
        assert code == 4
        assert out["report"]["verdict"] == "undecided"

    def test_wedge_negative(self, capsys, files):
        code, out, _ = run_json(capsys, ["verify-pair", files["wedge"]])
        assert code == 3
        assert out["report"]["verdict"] == "not-poincare-pair"

    def test_triad_file_rejected_by_pair_command(self, capsys, files):
        code, _, err = run(capsys, ["verify-pair", files["triad"]])
        assert code == 2
        assert "verify-triad" in err

    def test_triad_positive(self, capsys, files):
        code, out, _ = run_json(capsys, ["verify-triad", files["triad"]])
        assert code == 0
        assert out["report"]["verdict"] == "poincare-triad"
        assert sorted(out["report"]["piece_signs"]) == [-1, 1]

    def test_pair_file_rejected_by_triad_command(self, capsys, files):
        code, _, err = run(capsys, ["verify-triad", files["interval"]])
        assert code == 2
        assert "triad" in err

    def test_summary_verdict_line(self, capsys, files):
        code, out, _ = run(capsys, ["verify-pair", files["interval"],
                                    "--summary"])
        assert code == 0
        assert "poincare-pair" in out


class TestThom:
    def test_disk_top_degree(self, capsys, files):
        code, out, _ = run_json(capsys, ["thom", files["disk2"],
                                         "--degree", "2"])
        assert code == 0
        assert out["verdict"]["holds"] is True
        assert out["cocycle"]["degree"] == 2

    def test_disk_wrong_degree(self, capsys, files):
        code, out, _ = run_json(capsys, ["thom", files["disk2"],
                                         "--degree", "1"])
        assert code == 3
        assert out["verdict"]["holds"] is False

    def test_supplied_cocycle_round_trip(self, capsys, files):
        _, found, _ = run_json(capsys, ["thom", files["disk2"],
                                        "--degree", "2"])
        cocycle = write_json(files["tmp_path"], "u.json", found["cocycle"])
        code, out, _ = run_json(capsys, ["thom", files["disk2"],
                                         "--cocycle", cocycle,
                                         "--system", files["trivial_sys"]])
        assert code == 0
        assert out["verdict"]["holds"] is True

    def test_cocycle_needs_system(self, capsys, files):
        cocycle = write_json(files["tmp_path"], "u2.json",
                             {"degree": 2, "coeffs": [[0, 0, 1]]})
        code, _, err = run(capsys, ["thom", files["disk2"],
                                    "--cocycle", cocycle])
        assert code == 2
        assert "--system" in err

    def test_degree_required(self, capsys, files):
        code, _, err = run(capsys, ["thom", files["disk2"]])
        assert code == 2
        assert "--degree" in err or "degree" in err


class TestConstruct:
    def test_product_of_circles(self, capsys, files):
        out_path = str(files["tmp_path"] / "torus.json")
        code, out, _ = run_json(capsys, ["construct", "product",
                                         files["circle"], files["circle"],
                                         "-o", out_path])
        assert code == 0
        assert out["f_vector"] == [9, 27, 18]
        assert out["euler_characteristic"] == 0
        assert out["written"] == out_path
        with open(out_path) as fh:
            stored = json.load(fh)
        cx = SimplicialComplex.from_json(stored)
        assert len(cx.simplices(2)) == 18

    def test_puncture_makes_pair(self, capsys, files):
        code, out, _ = run_json(capsys, ["construct", "puncture",
                                         files["sphere3"]])
        assert code == 0
        assert "sub_facets" in out["result"]

    def test_cone(self, capsys, files):
        code, out, _ = run_json(capsys, ["construct", "cone",
                                         files["circle"]])
        assert code == 0
        assert out["euler_characteristic"] == 1

    def test_double_of_pair(self, capsys, files):
        code, out, _ = run_json(capsys, ["construct", "double",
                                         files["disk2"]])
        assert code == 0
        assert out["euler_characteristic"] == 2

    def test_double_needs_pair(self, capsys, files):
        code, _, err = run(capsys, ["construct", "double", files["circle"]])
        assert code == 2
        assert "pair" in err


class TestCover:
    def test_rp2_universal(self, capsys, files):
        code, out, _ = run_json(capsys, ["cover", files["rp2"]])
        assert code == 0
        assert out["degree"] == 2
        assert out["f_vector"] == [12, 30, 20]

    def test_infinite_group_undecided(self, capsys, files):
        code, out, _ = run_json(capsys, ["cover", files["circle"]])
        assert code == 4
        assert "infinite" in out["error"]

    def test_index_five_cover(self, capsys, tmp_path):
        psphere = write_json(tmp_path, "psphere.json",
                             poincare_sphere().to_json())
        code, out, _ = run_json(capsys, ["cover", psphere, "--index", "5"])
        assert code == 0
        assert out["degree"] == 5
        assert out["euler_characteristic"] == 0

    def test_bad_index(self, capsys, files):
        code, _, err = run(capsys, ["cover", files["rp2"],
                                    "--index", "3"])
        assert code == 2
        assert "divide" in err


class TestScenario:
    def test_pinned_scenario_passes(self, capsys):
        code, out, _ = run_json(capsys, ["scenario", "covering"])
        assert code == 0
        assert out["match"] is True

    def test_tampered_fixture_mismatch(self, capsys, tmp_path, monkeypatch):
        src = os.path.join(pdpair.scenarios._FIXTURE_DIR, "covering.json")
        with open(src) as fh:
            fixture = json.load(fh)
        fixture["expected"]["cover"]["degree"] = 3
        write_json(tmp_path, "covering.json", fixture)
        monkeypatch.setattr(pdpair.scenarios, "_FIXTURE_DIR", str(tmp_path))
        code, out, _ = run_json(capsys, ["scenario", "covering"])
        assert code == 5
        assert out["match"] is False
        assert any("degree" in d for d in out["diffs"])


class TestKunneth:
    def test_circle_times_circle(self, capsys, files):
        code, out, _ = run_json(capsys, ["kunneth", files["circle"],
                                         files["circle"]])
        assert code == 0
        assert out["ok"] is True
        assert out["degrees"]["1"]["computed"] == {"rank": 2, "torsion": []}

    def test_twisted_factor(self, capsys, files):
        sysfile = rp2_orientation_file(files["tmp_path"])
        code, out, _ = run_json(capsys, ["kunneth", files["rp2"],
                                         files["circle"],
                                         "--system-a", sysfile])
        assert code == 0
        assert out["ok"] is True

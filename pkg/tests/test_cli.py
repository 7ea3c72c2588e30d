import json

import pytest

from midset.cli import main


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def t0_file(tmp_path):
    f = tmp_path / "t0.json"
    f.write_text('{"type": "polygon", "vertices": [[0, 0], [4, 0], [0, 4]]}\n')
    return str(f)


@pytest.fixture
def square_file(tmp_path):
    f = tmp_path / "square.json"
    f.write_text('{"type": "polygon", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}\n')
    return str(f)


@pytest.fixture
def smooth_file(tmp_path):
    f = tmp_path / "smooth.json"
    f.write_text('{"harmonics": [[0, 1.0, 0.0], [3, 0.1, 0.0]]}\n')
    return str(f)


class TestGen:
    def test_deterministic_bytes(self, run, tmp_path):
        code1, out1, _ = run("gen", "12", "--seed", "7")
        code2, out2, _ = run("gen", "12", "--seed", "7")
        assert code1 == code2 == 0
        assert out1 == out2

    def test_no_parallel(self, run):
        code, out, _ = run("gen", "12", "--seed", "7", "--no-parallel")
        assert code == 0
        from midset.bodyio import loads_body
        from midset.middle import parallel_edge_directions

        assert not parallel_edge_directions(loads_body(out))

    def test_symmetric(self, run):
        code, out, _ = run("gen", "8", "--seed", "1", "--symmetric")
        assert code == 0
        from midset import is_centrally_symmetric
        from midset.bodyio import loads_body

        assert is_centrally_symmetric(loads_body(out)).symmetric

    def test_roundtrip_of_generated_file(self, run):
        _, out, _ = run("gen", "15", "--seed", "3", "--with-summands", "2")
        from midset.bodyio import dumps_body, loads_body

        assert dumps_body(loads_body(out)) == out

    def test_too_few_points(self, run):
        code, _, err = run("gen", "2")
        assert code == 2 and "error" in err


class TestPoints:
    def test_triangle(self, run, t0_file):
        code, out, _ = run("points", t0_file, "--format", "records")
        assert code == 0
        doc = json.loads(out)
        assert doc["count"] == 3
        assert doc["affinely_independent"] is True
        assert sorted(tuple(c["z"]) for c in doc["certificates"]) == [
            (0, 2), (2, 0), (2, 2)
        ]

    def test_square_center(self, run, square_file):
        code, out, _ = run("points", square_file, "--format", "records")
        doc = json.loads(out)
        assert code == 0
        assert doc["count"] == 1
        assert doc["certificates"][0]["z"] == ["1/2", "1/2"]
        assert doc["certificates"][0]["method"] == "symmetric-center"

    def test_malformed_file(self, run, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text('{"type": "polygon", "vertices": [[0, 0], [2, 0], [1, 1], [3, 3]]}')
        code, _, err = run("points", str(f))
        assert code == 2 and "error" in err

    def test_missing_file(self, run):
        code, _, err = run("points", "/nonexistent.json")
        assert code == 2


class TestVerify:
    def test_true_candidate(self, run, t0_file):
        code, out, _ = run("verify", t0_file, "2,2")
        assert code == 0
        assert "direct: True" in out and "characterization: True" in out

    def test_false_candidate_reports_witness(self, run, t0_file):
        code, out, _ = run("verify", t0_file, "4/3,4/3", "--format", "records")
        assert code == 1
        doc = json.loads(out)
        assert doc["direct"] is False and doc["characterization"] is False
        assert doc["nonconvexity_witness"] is not None

    def test_parallel_edges_na(self, run, square_file):
        code, out, _ = run("verify", square_file, "1/2,1/2")
        assert code == 0
        assert "n/a: parallel edges" in out

    def test_malformed_point(self, run, t0_file):
        code, _, err = run("verify", t0_file, "1;2")
        assert code == 2


class TestABody:
    def test_exact(self, run, t0_file):
        code, out, _ = run("a-body", t0_file)
        assert code == 0
        assert out == '{"type": "polygon", "vertices": [[0, 2], [2, 0], [2, 2]]}\n'

    def test_parallel_edges_rejected(self, run, square_file):
        code, _, err = run("a-body", square_file)
        assert code == 2 and "parallel" in err

    def test_smooth_sampling(self, run, smooth_file):
        code, out, _ = run("a-body", smooth_file, "--samples", "64")
        assert code == 0
        doc = json.loads(out)
        assert doc["type"] == "float-polygon" and len(doc["vertices"]) >= 3


class TestDecompose:
    def test_square(self, run, square_file):
        code, out, _ = run("decompose", square_file)
        doc = json.loads(out)
        assert code == 0
        assert doc["core"] == {"type": "point", "vertices": [["1/2", "1/2"]]}
        assert len(doc["summands"]) == 2
        assert doc["trace"][0]["direction"] == [1, 0]


class TestProfile:
    def test_single_point(self, run, t0_file):
        code, out, _ = run("profile", t0_file, "--point", "2,2", "--format", "records")
        assert code == 0
        doc = json.loads(out)
        assert doc["violations"] == 0
        assert doc["frame"]["origin"] == [2, 2]

    def test_all_exposed_points(self, run, t0_file):
        code, out, _ = run("profile", t0_file, "--format", "records")
        assert code == 0
        assert len(out.strip().splitlines()) == 3

    def test_interior_point_rejected(self, run, t0_file):
        code, _, err = run("profile", t0_file, "--point", "1,1")
        assert code == 2

    def test_smooth_sweep_records(self, run, smooth_file):
        code, out, _ = run("profile", smooth_file, "--samples", "24", "--format", "records")
        assert code == 0
        rows = [json.loads(line) for line in out.strip().splitlines()]
        assert len(rows) == 24
        assert sorted(rows[0]) == ["p", "p_prime", "phi", "residual"]
        assert all(r["residual"] < 1e-6 for r in rows)

    def test_smooth_sweep_tolerance_flag(self, run, smooth_file):
        code, _, _ = run("profile", smooth_file, "--samples", "24", "--tolerance", "1e-12")
        assert code == 1


class TestCampaign:
    def test_small_suite_passes(self, run):
        code, out, _ = run("campaign", "5", "lemma6", "--seed", "3", "--format", "records")
        assert code == 0
        doc = json.loads(out)
        assert doc["failed"] == 0 and doc["passed"] == 5
        assert doc["generator"] == "python-random-mt19937"

    def test_unknown_suite(self, run):
        code, _, err = run("campaign", "5", "nope")
        assert code == 2


class TestRender:
    def test_element_counts(self, run, t0_file):
        code, out, _ = run("render", t0_file, "--point", "2,2")
        assert code == 0
        assert out.count("<polygon") == 2
        assert out.count('class="certificate"') == 1

    def test_a_body_layer(self, run, t0_file):
        _, out, _ = run("render", t0_file, "--point", "2,2", "--a-body")
        assert out.count("<polygon") == 3
        assert 'url(#hatch)' in out

    def test_byte_determinism(self, run, t0_file):
        _, out1, _ = run("render", t0_file, "--point", "2,2")
        _, out2, _ = run("render", t0_file, "--point", "2,2")
        assert out1 == out2

    def test_malformed_input(self, run, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text("{broken")
        code, _, err = run("render", str(f))
        assert code == 2


class TestInfo:
    def test_polygon_info(self, run, t0_file):
        code, out, _ = run("info", t0_file, "--format", "records")
        doc = json.loads(out)
        assert code == 0
        assert doc["kind"] == "polygon" and doc["vertices"] == 3
        assert doc["area"] == "8"
        assert doc["parallel_edges"] is None
        assert doc["centrally_symmetric"] is False

    def test_events_listing(self, run, t0_file):
        code, out, _ = run("info", t0_file, "--events", "--format", "records")
        doc = json.loads(out)
        assert len(doc["events"]) == 6

    def test_smooth_info(self, run, smooth_file):
        code, out, _ = run("info", smooth_file, "--format", "records")
        doc = json.loads(out)
        assert code == 0
        assert doc["kind"] == "smooth"
        assert doc["symmetry_residual"] == pytest.approx(0.8)

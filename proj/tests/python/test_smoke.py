import json

import pytest

import polargrass as pg


def test_gaussian_binomial():
    assert pg.gaussian_binomial(4, 2, 2) == 35
    assert pg.gaussian_binomial(3, 1, 3) == 13


def test_build_polar_space():
    g = pg.build_geometry("B", 3, 1, 2)
    assert g.num_points == 63
    assert g.num_lines == 315
    assert g.type == "B"
    assert len(g.line(0)) == 3
    assert g.index_of(g.point(5)) == 5
    data = pg.geometry_json(g)
    assert data["num_points"] == 63


def test_distances_and_diagram():
    a = pg.oriflamme_apartment(5, 2)
    assert a.num_points == 80
    base = a.index_of([[1, 0, 0, 0, 0, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0, 0, 0, 0, 0]])
    d = pg.distance_distribution(a, base)
    assert d["classes"] == {"0": 1, "1": 12, "2g": 12, "2q": 3, "2s": 24, "3h": 12, "3q": 3, "3hh": 12, "4": 1}
    assert max(pg.distances_from(a, base)) == 4


def test_classify_pair_and_subspace():
    g = pg.build_geometry("B", 3, 2, 2)
    dist = pg.distances_from(g, 0)
    y = dist.index(2)
    pc = pg.classify_pair(g, 0, y)
    assert pc["kind"] in {"plus", "zero-special"}
    with pytest.raises(pg.InvalidArgument):
        pg.classify_pair(g, 0, 0)
    rep = pg.classify_subspace(g, list(g.line(0)))
    assert rep["verdict"] == "not-grassmannian"


def test_lemmas_and_oracle():
    assert "distance-diagram" in pg.lemma_names()
    r = pg.verify_lemma("distance-classes")
    assert r["passed"], r
    counts = pg.engine_oracle_counts()
    assert counts["elliptic_n3_q2_singular_points"] == 119
    assert counts["b31_q2_lines"] == 315


def test_cli_and_errors():
    code, out, err = pg.run_cli(["build", "--type", "A", "--n", "3", "--k", "2", "--q", "2", "--format", "json"])
    assert code == 0
    assert json.loads(out)["num_points"] == 35
    code, _, err = pg.run_cli(["build", "--type", "Q", "--n", "3", "--k", "1", "--q", "2"])
    assert code == 2 and err
    with pytest.raises(pg.BudgetExceeded):
        pg.build_geometry("A", 9, 5, 2)

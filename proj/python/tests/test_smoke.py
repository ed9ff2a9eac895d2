"""Smoke tests for the python bindings."""

import flagvert


def test_sample_params_and_tol():
    p = flagvert.sample_params(2, seed=7, theta_terms=40, max_degree=4)
    assert p.n == 2
    assert p.theta_terms == 40
    assert 0 < p.tol() < 1e-60


def test_vertex_series_rank_two():
    p = flagvert.sample_params(2, seed=7, max_degree=4)
    s = flagvert.vertex_series("1 2", p)
    assert len(s) == 5  # degrees 0..4
    assert s[(0,)] == "1/1" or float(s[(0,)]) == 1.0


def test_stab_matrix_shape():
    p = flagvert.sample_params(2, seed=7, max_degree=3)
    m = flagvert.stab_matrix(p, "stab")
    assert len(m["order"]) == 2
    assert len(m["entries"]) == 2
    assert len(m["entries"][0]) == 2


def test_verify_suites_pass():
    p = flagvert.sample_params(2, seed=7, max_degree=4)
    for fn in (
        flagvert.verify_triangularity,
        flagvert.verify_diagonal,
        flagvert.verify_macdonald,
        flagvert.verify_oracles,
        flagvert.verify_stab_inverse,
    ):
        rep = fn(p)
        assert rep["pass"], rep
        assert rep["claims"]


def test_quasiperiodicity_and_limits():
    p = flagvert.sample_params(2, seed=7, max_degree=4)
    assert flagvert.verify_quasiperiodicity(p)["pass"]
    assert flagvert.verify_limits("1 2", p)["pass"]


def test_main_theorem_rank_two():
    p = flagvert.sample_params(2, seed=7, max_degree=8)
    rep = flagvert.verify_main_theorem("2 1", p, "overline")
    assert rep["pass"], rep


def test_paramset_toml_round_trip():
    p = flagvert.sample_params(3, seed=13, max_degree=3)
    q = flagvert.ParamSet.from_toml(p.to_toml())
    assert q.n == 3
    assert q.to_toml() == p.to_toml()

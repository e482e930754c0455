"""Smoke tests for the python module: the bindings wrap the same library the
C++ suites cover, so these only check that the main operations round-trip
through python correctly."""

import json
import os

import pytest

import l2euler

TREFOIL = {
    "name": "trefoil",
    "generators": ["x", "y"],
    "relators": ["x y x y^-1 x^-1 y^-1"],
    "quotient": {"kind": "abelian", "rank": 1, "images": [[1], [1]]},
    "phi": [1],
}


def test_version():
    assert l2euler.__version__ == "0.1.0"


def test_trefoil_chi2():
    r = l2euler.chi2_json(json.dumps(TREFOIL))
    assert r["chi2"] == -1
    assert r["thurston_lower_bound"] == 1
    assert r["diagnostics"]["scaling_k"] == 1


def test_scaling():
    doc = dict(TREFOIL)
    doc["phi"] = [3]
    r = l2euler.chi2_json(json.dumps(doc))
    assert r["chi2"] == -3
    assert r["diagnostics"]["scaling_k"] == 3


def test_delta_and_oracles():
    assert l2euler.delta_json(json.dumps(TREFOIL)) == 1
    assert l2euler.thurston_from_genus(1) == 1
    assert l2euler.thurston_from_genus(0) == 0
    assert l2euler.fibered_norm(-1) == 1
    assert l2euler.cover_scale(3, 2) == 6
    assert l2euler.infinite_cyclic_chi2(2, True, 1) == -1


def test_seifert():
    assert l2euler.seifert_chi2(0, 1, [2, 3], 6) == "-1"
    assert l2euler.seifert_chi2(1, 0, [], 1) == "0"


def test_fox_matrix():
    rows = l2euler.fox_matrix_json(json.dumps(TREFOIL))
    assert len(rows) == 1 and len(rows[0]) == 2


def test_polytopes():
    hull = l2euler.convex_hull_vertices(2, [[0, 0], [2, 0], [0, 2], [1, 1]])
    assert hull == [[0, 0], [0, 2], [2, 0]]
    square = l2euler.minkowski_sum_vertices(2, [[0, 0], [1, 0]], [[0, 0], [0, 1]])
    assert square == [[0, 0], [0, 1], [1, 0], [1, 1]]
    assert l2euler.polytope_seminorm(2, [[0, 0], [2, 0], [0, 2]], [1, 0]) == "1"


def test_errors():
    with pytest.raises(ValueError):
        l2euler.chi2_json("{not json")
    bad = dict(TREFOIL)
    bad["relators"] = [""]  # zero Fox row: not L2-acyclic
    with pytest.raises(ArithmeticError):
        l2euler.chi2_json(json.dumps(bad))


def test_corpus_file():
    corpus = os.environ.get("L2EULER_CORPUS")
    if not corpus:
        pytest.skip("corpus directory not provided")
    r = l2euler.chi2_file(os.path.join(corpus, "punctured_torus_bundle.json"))
    assert r["chi2"] == -1

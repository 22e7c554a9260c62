import json

import pytest

import italdom


def test_sierpinski_structure():
    g = italdom.build_sierpinski(3, 2)
    assert g.size == 9
    assert g.edge_count == 12
    assert g.label(5) == "23"
    assert sorted(g.edges()) == sorted(italdom.sierpinski_edges_by_rule(3, 2))
    assert italdom.extreme_vertices(3, 2) == [[1, 1], [2, 2], [3, 3]]


def test_word_codec():
    assert italdom.rank_word(5, 2, 3) == [2, 1, 2]
    assert italdom.word_rank([3, 3], 3) == 8
    assert italdom.adjacent_by_rule([1, 2], [2, 1], 5)
    assert not italdom.adjacent_by_rule([1, 2, 3], [2, 1, 3], 3)
    with pytest.raises(italdom.InvalidInput):
        italdom.rank_word(8, 2, 3)


def test_constructions_verify():
    g = italdom.build_sierpinski(3, 3)
    f = italdom.construct_level3plus(3, 3)
    report = italdom.verify_pid(g, f)
    assert report.valid
    assert report.total_weight == 12 == italdom.closed_form_italian(3, 3)

    regime, weights, value = italdom.construct(4, 2)
    assert regime == italdom.Regime.level2
    assert sum(weights) == value == 7

    bad = italdom.verify_idf(italdom.build_complete(3), [0, 0, 0])
    assert not bad.valid
    assert [v.kind for v in bad.violations] == [italdom.ViolationKind.deficit] * 3

    with pytest.raises(italdom.OutOfRegime):
        italdom.construct_level2(2)


def test_solvers():
    s32 = italdom.build_sierpinski(3, 2)
    r = italdom.solve_exhaustive(s32, italdom.Variant.perfect)
    assert r.optimum == 5 and r.proven

    r = italdom.solve_branch_bound(italdom.build_sierpinski(3, 3))
    assert r.optimum == 12 and r.proven
    assert json.loads(r.to_json())["engine"] == "branch-bound"

    assert italdom.solve_path_dp(9).optimum == 5

    config = italdom.SearchConfig()
    config.node_budget = 5
    assert not italdom.solve_branch_bound(italdom.build_sierpinski(3, 3), config=config).proven

    e = italdom.enumerate_optima(italdom.build_path(2))
    assert e.complete
    assert e.optima == [[0, 2], [1, 1], [2, 0]]


def test_json_round_trip():
    g = italdom.build_sierpinski(2, 3)
    doc = json.loads(g.to_json())
    assert doc["family"] == "sierpinski" and len(doc["vertices"]) == 8
    back = italdom.Graph.from_json(g.to_json())
    assert back.hash() == g.hash()
    assert "--" in g.to_dot()
    with pytest.raises(italdom.InvalidInput):
        italdom.Graph.from_json("{}")

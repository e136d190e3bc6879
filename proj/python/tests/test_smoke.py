from pathlib import Path

import pytest

import atheory

FIXTURES = Path(__file__).resolve().parents[2] / "tests" / "fixtures"


def test_graph_round_trip():
    g = atheory.Graph(["a", "b", "c"], [("a", "b"), ("b", "c")], base="a")
    assert g.order == 3 and g.size == 2
    assert g.base == "a"
    assert g.adjacent("b", "c") and not g.adjacent("a", "c")
    assert atheory.Graph.from_json(g.to_json()) == g


def test_bad_graph_raises():
    with pytest.raises(atheory.AtheoryError, match="unknown vertex"):
        atheory.Graph(["a"], [("a", "z")])
    with pytest.raises(ValueError):
        atheory.Graph.from_json("{")


def test_cycles():
    assert atheory.abelianization(atheory.cycle_graph(5)) == (1, [])
    assert atheory.abelianization(atheory.cycle_graph(4)) == (0, [])
    assert atheory.a1_simplified(atheory.cycle_graph(4)) == "< | >"
    wind = [str(v) for v in (0, 1, 2, 3, 4, 0)]
    assert atheory.loops_equivalent(atheory.cycle_graph(5), wind, ["0"]) == "distinct"
    square = [str(v) for v in (0, 1, 2, 3, 0)]
    assert atheory.loops_equivalent(atheory.cycle_graph(4), square, ["0"]) == "equal"
    assert atheory.homotopy_search(atheory.cycle_graph(4), square, ["0"], width=5, max_layers=4) == 2
    assert atheory.homotopy_search(atheory.cycle_graph(5), wind, ["0"], width=6, max_layers=4) is None


def test_pentagon_complex():
    text = (FIXTURES / "ring5.facets").read_text()
    g = atheory.gamma_q(text, 1, sigma0=["0", "1", "2"])
    assert g.order == 5 and g.size == 5
    assert atheory.abelianization(g) == (1, [])


def test_f_vector_and_loop_graph():
    k2 = atheory.complete_graph(2)
    assert atheory.f_vector(k2, 2) == [2, 2, 10]
    omega = atheory.loop_graph(k2, 2)
    assert omega.order == 2 and omega.size == 1
    components, base = atheory.pointed_components(atheory.loop_graph(atheory.cycle_graph(4), 6))
    assert len(components) == 1 and base == 0


def test_cli_entry():
    code, report, _ = atheory.run_cli(["fvec", str(FIXTURES / "k2.json"), "--max-dim", "2"])
    assert code == 0
    assert report == "f_vector=2 2 10\n"
    code, _, diagnostics = atheory.run_cli(["a1", str(FIXTURES / "bad_syntax.json")])
    assert code == 1 and "line" in diagnostics

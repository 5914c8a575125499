import pytest

import coldsp

TOY = "a b 1\na c 1\na d 1\nb c 1\nb d 1\nc d 1\nd e 2\n"


@pytest.fixture
def toy():
    return coldsp.Graph.parse(TOY)


def test_graph(toy):
    assert toy.num_nodes == 5
    assert toy.num_edges == 7
    assert toy.num_colors == 2
    assert toy.single_colored
    assert toy.color_totals() == {"1": 6, "2": 1}
    assert coldsp.Graph.parse(toy.to_edge_list()).num_edges == 7


def test_unconstrained(toy):
    exact = coldsp.exact_dsp(toy)
    assert exact["density_fraction"] == (6, 4)
    assert exact["density"] == 1.5
    assert sorted(exact["nodes"]) == ["a", "b", "c", "d"]
    assert coldsp.greedy_dsp(toy)["density"] >= exact["density"] / 2
    assert coldsp.brute_force_densest(toy)["density"] == exact["density"]


def test_lower_bound():
    assert coldsp.lower_bound_nodes(6) == 4
    assert coldsp.lower_bound_nodes(7) == 5
    assert coldsp.lower_bound_nodes(2, 2) == 2


def test_at_least_h(toy):
    r = coldsp.at_least_h_edges(toy, 7)
    assert r["edges"] == 7
    assert r["density_fraction"] == (7, 5)
    assert coldsp.brute_force_at_least_h_edges(toy, 7)["density"] == r["density"]


@pytest.mark.parametrize("h", ["2=1", {"2": 1}, [0, 1]])
def test_colored(toy, h):
    opt = coldsp.brute_force_colored(toy, h)
    for r in (coldsp.col_approx(toy, h), coldsp.col_approx(toy, h, patch="add"),
              coldsp.col_approx_multi(toy, h), coldsp.heuristic(toy, h)):
        assert r["colors"]["2"] >= 1
        assert r["density"] <= opt["density"]


def test_errors(toy):
    with pytest.raises(coldsp.InfeasibleError):
        coldsp.col_approx(toy, "2=2")
    with pytest.raises(coldsp.ParseError):
        coldsp.Graph.parse("a\n")
    with pytest.raises(coldsp.CapExceededError):
        coldsp.brute_force_densest(toy, cap=3)


def test_ilp(toy):
    text = coldsp.write_ilp(toy, 7, 5, name="toy")
    assert text.startswith("\\ coldsp model toy k=5")
    assert "Binaries" in text or "Binary" in text

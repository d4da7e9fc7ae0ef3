from fractions import Fraction

import numpy as np
import pytest

from qcolour.enumeration import TermCapExceeded
from qcolour.graphs import Multigraph, components, line_graph, rank
from qcolour.groups import cyclic_group, gf4, group_from_name
from qcolour.oracles import (
    chromatic,
    complete_weight_enum,
    enumerate_flows,
    enumerate_tensions,
    flow_count,
    flow_polynomial,
    hamming_weight_enum,
    hwe_coefficients,
    monochrome_polynomial,
    tutte,
)

from conftest import assert_close, complex_vec, graph_of

CORPUS_SMALL = ("single_edge", "single_loop", "digon", "triangle", "c4", "theta", "k4")


def test_tutte_examples():
    T = tutte(graph_of("triangle"))
    assert T.coeffs == {(2, 0): 1, (1, 0): 1, (0, 1): 1}
    assert str(T) == "x^2 + x + y"
    assert tutte(graph_of("single_loop")).coeffs == {(0, 1): 1}
    assert tutte(graph_of("single_edge")).coeffs == {(1, 0): 1}


@pytest.mark.parametrize("name", CORPUS_SMALL + ("prism", "k33", "petersen"))
def test_tutte_at_two_two_counts_subsets(name):
    g = graph_of(name)
    assert tutte(g)(2, 2) == 2**g.num_edges


def test_tutte_cap():
    with pytest.raises(TermCapExceeded):
        tutte(graph_of("petersen"), max_subsets=1000)


def test_flow_polynomial_examples():
    assert flow_polynomial(graph_of("k4"), 4) == 6
    assert flow_polynomial(graph_of("theta"), 3) == 2
    assert flow_polynomial(graph_of("single_edge"), 5) == 0
    tree = Multigraph(3, ((0, 1), (1, 2)))
    assert flow_polynomial(tree, 3) == 0


def test_flow_count_group_structure_independence():
    # the number of nowhere-zero flows depends only on the group order
    for name in ("k4", "theta", "c4", "digon"):
        g = graph_of(name)
        z4 = flow_count(g, cyclic_group(4))
        klein = flow_count(g, cyclic_group(2, 2))
        field4 = flow_count(g, gf4())
        assert z4 == klein == field4 == flow_polynomial(g, 4), name


def test_chromatic_examples():
    assert chromatic(graph_of("triangle"), 3) == 6
    assert chromatic(line_graph(graph_of("k4")), 4) == 96
    assert chromatic(graph_of("single_loop"), 5) == 0


def test_enumerate_flows_examples():
    Z3 = cyclic_group(3)
    assert len(enumerate_flows(graph_of("single_loop"), Z3)) == 3
    assert enumerate_flows(graph_of("single_edge"), Z3).tolist() == [[0]]
    Z2 = cyclic_group(2)
    assert enumerate_flows(graph_of("triangle"), Z2).tolist() == [[0, 0, 0], [1, 1, 1]]


@pytest.mark.parametrize("name", CORPUS_SMALL + ("prism", "k33"))
@pytest.mark.parametrize("q", [2, 3])
def test_flow_tension_counts(name, q):
    g = graph_of(name)
    G = cyclic_group(q)
    flows = enumerate_flows(g, G)
    tensions = enumerate_tensions(g, G)
    r = rank(g)
    assert len(flows) == q ** (g.num_edges - r)
    assert len(tensions) == q**r


def test_hwe_cwe_basics():
    assert hamming_weight_enum([(0, 0, 0), (1, 1, 1)], 7, 3) == 7**3 + 1
    assert hwe_coefficients([(0, 0, 0), (1, 1, 1)], 3) == [1, 0, 0, 1]
    S = [(0, 1), (2, 2), (1, 0)]
    assert complete_weight_enum(S, [1, 1, 1]) == 3
    assert complete_weight_enum(S, [2, 3, 5]) == 6 + 25 + 6
    # exact with Fractions
    assert complete_weight_enum(S, [Fraction(1, 2), 1, 1]) == Fraction(1, 2) * 2 + 1


@pytest.mark.parametrize("name", CORPUS_SMALL + ("prism", "k33"))
@pytest.mark.parametrize("q", [2, 3, 4])
def test_hwe_of_flows_matches_tutte_hyperbola(name, q):
    g = graph_of(name)
    G = cyclic_group(q)
    flows = enumerate_flows(g, G)
    T = tutte(g)
    for s in (2, 3, 5):
        lhs = hamming_weight_enum(flows, s, g.num_edges)
        rhs = (s - 1) ** (g.num_edges - T.full_rank) * T(
            Fraction(s), Fraction(s - 1 + q, s - 1)
        )
        assert lhs == rhs


@pytest.mark.parametrize("name", CORPUS_SMALL)
@pytest.mark.parametrize("q", [2, 3])
def test_monochrome_polynomial_identities(name, q):
    g = graph_of(name)
    G = cyclic_group(q)
    tensions = enumerate_tensions(g, G)
    for t in (0, 2, 3):
        assert monochrome_polynomial(g, q, t) == q ** components(g) * hamming_weight_enum(
            tensions, t, g.num_edges
        )
    assert monochrome_polynomial(g, q, 0) == chromatic(g, q)
    assert monochrome_polynomial(g, q, 1) == q**g.num_vertices


def test_monochrome_polynomial_single_edge():
    # two monochromatic and two proper colourings: 2t + 2, exactly
    val = monochrome_polynomial(graph_of("single_edge"), 2, Fraction(7, 2))
    assert val == 2 * Fraction(7, 2) + 2


@pytest.mark.parametrize("name", CORPUS_SMALL + ("prism",))
@pytest.mark.parametrize("spec", ["2", "3", "2x2", "f4"])
def test_macwilliams_random_weights(name, spec):
    g = graph_of(name)
    G = group_from_name(spec)
    flows = enumerate_flows(g, G)
    tensions = enumerate_tensions(g, G)
    rng = np.random.default_rng(abs(hash((name, spec))) % 2**32)
    for _ in range(3):
        h = complex_vec(rng, G.q)
        lhs = complete_weight_enum(flows, h)
        rhs = (
            G.q ** (-g.num_edges / 2)
            * len(flows)
            * complete_weight_enum(tensions, G.fourier_matrix() @ h)
        )
        assert_close(lhs, rhs, 1e-8, f"{name} {spec}")


def test_flow_polynomial_cross_check_runs():
    # small enough that the enumeration route is exercised
    assert flow_polynomial(graph_of("prism"), 5, max_terms=10**7) == flow_polynomial(
        graph_of("prism"), 5, cross_check=False
    )

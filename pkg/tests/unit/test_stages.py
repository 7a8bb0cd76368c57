import pytest

from hyperfactor.core.errors import ConsistencyError, DisconnectedError, ValidationError
from hyperfactor.core.hypergraph import K1, canonical_order, product_of
from hyperfactor.core.pipeline import Factorizer, pfd_hypergraph
from hyperfactor.core.types import (
    Coordinatization,
    DirectedHypergraph,
    FactorizationConfig,
    HypergraphFactorization,
    Hyperarc,
)
from hyperfactor.modules.aux_graph import arc_coordinate, build_aux_graph
from hyperfactor.modules.combine import combine
from hyperfactor.modules.preprocessing import preprocessing
from hyperfactor.modules.soundness import verify_reconstruction
from hyperfactor.oracle.brute_force import same_factor_multiset
from hyperfactor.resources.figures import fig1, fig2, m2


def arrow() -> DirectedHypergraph:
    return DirectedHypergraph.from_named_arcs([(["1"], ["2"])])


def names_of(h, arc):
    tail, head = h.arc_names(arc)
    return frozenset(tail), frozenset(head)


# --- Preprocessing ---
def test_preprocessing_first_figure():
    h = fig1()
    order, c, k, section = preprocessing(h)
    assert k == 2
    assert c.factor_sizes == (2, 4)
    assert section.m == 16
    for v, name in enumerate(h.names):
        assert c.coords[v] == (int(name[0]), int(name[1]))
    expected = [h.arcs[i - 1] for i in (4, 1, 5, 8, 6, 3, 7, 2)]
    assert [e.set_key for e in order.arcs] == [e.set_key for e in expected]


def test_preprocessing_second_figure():
    h = fig2()
    _, c, k, _ = preprocessing(h)
    assert k == 3
    for v, name in enumerate(h.names):
        assert c.coords[v] == tuple(int(ch) for ch in name)


def test_preprocessing_single_arc():
    assert preprocessing(arrow()).k == 1


def test_preprocessing_rejects_bad_input():
    with pytest.raises(ValidationError):
        preprocessing(DirectedHypergraph(("1", "2"), (Hyperarc((0,), (1,)), Hyperarc((0,), (1,)))))
    with pytest.raises(DisconnectedError):
        preprocessing(DirectedHypergraph.from_named_arcs([(["1"], ["2"]), (["3"], ["4"])]))


# --- Auxiliary graph ---
def test_aux_graph_first_figure():
    h = fig1()
    order, c, k, _ = preprocessing(h)
    aux = build_aux_graph(order, c, k)
    assert aux.edges == frozenset({(1, 2)})
    assert aux.components() == [(1, 2)]
    assert aux.neighbors(1) == (2,)
    assert aux.neighbors(2) == (1,)
    triggers = [(names_of(h, t.arc), t.differing, t.increment) for t in aux.triggers]
    assert triggers == [
        ((frozenset({"13", "23"}), frozenset({"13", "23"})), 1, 2),
        ((frozenset({"14"}), frozenset({"12"})), 2, 1),
    ]


def test_aux_graph_second_figure():
    h = fig2()
    order, c, k, _ = preprocessing(h)
    aux = build_aux_graph(order, c, k)
    assert aux.edges == frozenset({(1, 3)})
    assert aux.components() == [(1, 3), (2,)]
    assert aux.neighbors(1) == (3,)
    assert aux.neighbors(2) == ()
    assert {names_of(h, t.arc) for t in aux.triggers} == {
        (frozenset({"113", "213"}), frozenset({"113", "213"})),
        (frozenset({"123", "223"}), frozenset({"123", "223"})),
        (frozenset({"114"}), frozenset({"112"})),
        (frozenset({"124"}), frozenset({"122"})),
    }


def test_aux_graph_of_product_of_arrows():
    order, c, k, _ = preprocessing(product_of(arrow(), arrow()))
    assert build_aux_graph(order, c, k).edges == frozenset()


def test_aux_graph_with_workers_matches_serial():
    order, c, k, _ = preprocessing(fig2())
    assert build_aux_graph(order, c, k, workers=3) == build_aux_graph(order, c, k)


def test_aux_graph_debug_checks():
    order, c, k, _ = preprocessing(fig2())
    assert build_aux_graph(order, c, k, debug_checks=True) == build_aux_graph(order, c, k)


def test_arc_across_two_coordinates_is_inconsistent():
    h = fig1()
    coords = [(int(name[0]), int(name[1])) for name in h.names]
    a, b = h.index["21"], h.index["22"]
    coords[a], coords[b] = coords[b], coords[a]
    bogus = Coordinatization((2, 4), tuple(coords))
    with pytest.raises(ConsistencyError):
        build_aux_graph(canonical_order(h, bogus), bogus, 2)
    with pytest.raises(ConsistencyError):
        arc_coordinate(bogus, Hyperarc.of([h.index["11"]], [h.index["21"]]))


# --- Combine ---
def test_combine_second_figure():
    h = fig2()
    order, c, k, _ = preprocessing(h)
    result = combine(h, c, build_aux_graph(order, c, k))
    assert result.partition == ((1, 3), (2,))
    assert result.coordinates.factor_sizes == (8, 2)
    assert same_factor_multiset(result.factors, [fig1(), m2()])
    assert result.factors[1].names == ("1", "2")
    verify_reconstruction(h, result)


def test_combine_prime():
    h = fig1()
    order, c, k, _ = preprocessing(h)
    result = combine(h, c, build_aux_graph(order, c, k))
    assert result.partition == ((1, 2),)
    assert result.factors[0].names == tuple(str(i) for i in range(1, 9))
    # the merged coordinate follows the lexicographic order of the old pair
    for v, name in enumerate(h.names):
        assert result.coordinates.coords[v] == ((int(name[0]) - 1) * 4 + int(name[1]),)


# --- Pipeline ---
def test_pipeline_figures():
    assert pfd_hypergraph(fig1()).is_prime
    result = pfd_hypergraph(fig2())
    assert len(result.factors) == 2
    assert same_factor_multiset(result.factors, [fig1(), m2()])


def test_pipeline_trivial_inputs():
    assert pfd_hypergraph(K1()).factors == ()
    result = pfd_hypergraph(arrow())
    assert result.partition == ((1,),)
    assert result.factors[0].names == ("1", "2")
    assert result.factors[0].arcs == (Hyperarc((0,), (1,)),)


def test_pipeline_rejects_empty():
    with pytest.raises(ValidationError):
        pfd_hypergraph(DirectedHypergraph(()))


def test_stage_order():
    names = [stage.name for stage in Factorizer().stages]
    assert names == ["PreprocessingStage", "AuxGraphStage", "CombineStage", "SoundnessStage"]
    assert "SoundnessStage" not in [s.name for s in Factorizer(FactorizationConfig(verify_soundness=False)).stages]


def test_reconstruction_detects_tampering():
    h = fig2()
    result = pfd_hypergraph(h)
    small = next(i for i, f in enumerate(result.factors) if f.n == 2)
    emptied = list(result.factors)
    emptied[small] = DirectedHypergraph(emptied[small].names)
    with pytest.raises(ConsistencyError):
        verify_reconstruction(h, HypergraphFactorization(tuple(emptied), result.coordinates, result.partition))

import pytest
from hypothesis import given

from deckrecon import generators as gen
from deckrecon.errors import Graph6Error
from deckrecon.graph import from_edges
from deckrecon.graph6 import parse_graph6, to_graph6

from conftest import graphs

ALL_GENERATED = [
    gen.petersen(), gen.paley(13), gen.paley(17), gen.cycle(7), gen.path(6),
    gen.complete(7), gen.complete_multipartite([2, 2, 2]), gen.hypercube(3),
    gen.hypercube(5), gen.rook(3, 3), gen.subdivided_star(), gen.complete(1),
    gen.paley(61),
]


def test_k1():
    assert to_graph6(gen.complete(1)) == "@"
    assert parse_graph6("@") == gen.complete(1)


def test_hand_encoded_path():
    # P3 on 0-1-2: bits (0,1)=1, (0,2)=0, (1,2)=1 -> 101000 = 40 -> chr(103)
    assert to_graph6(gen.path(3)) == "Bg"


def test_frozen_goldens():
    assert to_graph6(gen.petersen()) == "IheA@GUAo"
    assert to_graph6(gen.cycle(6)) == "EhEG"


@pytest.mark.parametrize("text", ["D?{", "DQc", "D~{", "D??"])
def test_five_vertex_roundtrip(text):
    assert to_graph6(parse_graph6(text)) == text


@pytest.mark.parametrize("g", ALL_GENERATED)
def test_generator_roundtrip(g):
    assert parse_graph6(to_graph6(g)) == g


@given(graphs(max_n=20))
def test_roundtrip_random(g):
    assert parse_graph6(to_graph6(g)) == g


@given(graphs(max_n=20))
def test_matches_networkx(g):
    nx = pytest.importorskip("networkx")
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert nx.to_graph6_bytes(h, header=False).decode().strip() == to_graph6(g)


@pytest.mark.parametrize("bad", ["", "~", " ", "D?{?", "D?", "D?\x7f", "Bp"])
def test_malformed(bad):
    # "Bp" = 110001: n=3 has 3 data bits, the last padding bit is set
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_header_prefix_and_bytes():
    assert parse_graph6(b">>graph6<<IheA@GUAo\n") == gen.petersen()

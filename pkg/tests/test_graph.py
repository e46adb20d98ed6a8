import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from idemring import build_field_algebra, build_graph, build_upper_triangular, build_zn, make_field, to_dot, to_json
from idemring.errors import BadVertex
from idemring.graph import check_class_equivalence, graph_partition_in, graph_partition_out


def test_field_graph(F4):
    g = build_graph(build_field_algebra(F4))
    assert g.vertices.tolist() == [0, 1]
    assert g.edges() == [(0, 0), (0, 1), (1, 0)]
    assert graph_partition_out(g) == [[0], [1]]


def test_z6_graph(Z6):
    g = build_graph(Z6)
    assert g.vertices.tolist() == [0, 1, 3, 4]
    v3, v4 = g.vertex_of(3), g.vertex_of(4)
    assert (v3, v4) in g.edges() and (v4, v3) in g.edges()
    assert v4 in g.out_neighbours(v3)
    assert graph_partition_out(g) == [[0], [1], [2], [3]]
    assert graph_partition_in(g) == [[0], [1], [2], [3]]


def test_m2f2_adjacency_matches_oracle(M2F2):
    elems, mul, idx = oracles.matrix_ring(oracles.PrimeField(2), 2)
    idem = sorted(oracles.idempotents(elems, mul), key=idx)
    g = build_graph(M2F2)
    assert g.vertices.tolist() == [idx(e) for e in idem]
    z = oracles.zero(2)
    want = [[mul(a, b) == z for b in idem] for a in idem]
    assert g.adjacency.tolist() == want
    assert sorted(len(c) for c in graph_partition_out(g)) == [1, 1, 2, 2, 2]


def test_neighbours_of_zero_and_one(M2F3):
    g = build_graph(M2F3)
    n = len(g)
    v0, v1 = g.vertex_of(0), g.vertex_of(M2F3.one)
    assert g.out_neighbours(v0) == list(range(n))
    assert g.out_neighbours(v1) == [v0]
    assert g.in_neighbours(v1) == [v0]


def test_bad_vertex(Z6):
    g = build_graph(Z6)
    with pytest.raises(BadVertex):
        g.out_neighbours(4)
    with pytest.raises(BadVertex):
        g.in_neighbours(-1)
    with pytest.raises(BadVertex):
        g.vertex_of(2)


@pytest.mark.parametrize("name", ["M2F2", "T2F2", "M2F3", "Z6", "F4"])
def test_class_equivalence(name, request):
    R = request.getfixturevalue(name)
    if name == "F4":
        R = build_field_algebra(R)
    assert check_class_equivalence(R, build_graph(R)).passed


def test_dot_format(F2):
    text = to_dot(build_graph(build_field_algebra(F2)))
    assert text == (
        'digraph idem {\n'
        '  "v0" [label="(0)", shape=doublecircle];\n'
        '  "v1" [label="(1)", shape=doublecircle];\n'
        '  "v0" -> "v0";\n'
        '  "v0" -> "v1";\n'
        '  "v1" -> "v0";\n'
        '}\n'
    )


def test_json_format(Z6):
    doc = json.loads(to_json(build_graph(Z6)))
    assert list(doc) == ["vertices", "edges", "out_classes", "in_classes"]
    assert [v["index"] for v in doc["vertices"]] == [0, 1, 3, 4]
    assert all(v["central"] for v in doc["vertices"])
    assert [2, 3] in doc["edges"] and [3, 2] in doc["edges"]
    assert doc["out_classes"] == [[0], [1], [2], [3]]


def test_export_is_deterministic(M2F3):
    a = to_dot(build_graph(M2F3)), to_json(build_graph(M2F3))
    b = to_dot(build_graph(M2F3, workers=4)), to_json(build_graph(M2F3, workers=4))
    assert a == b


GRAPH_RINGS = [
    lambda: build_zn(60),
    lambda: build_upper_triangular(make_field(2), 3),
    lambda: build_upper_triangular(make_field(3), 2),
]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, len(GRAPH_RINGS) - 1), st.data())
def test_graph_invariants(which, data):
    R = GRAPH_RINGS[which]()
    g = build_graph(R)
    n = len(g)
    v = data.draw(st.integers(0, n - 1))
    w = data.draw(st.integers(0, n - 1))
    assert g.adjacency[v, w] == (R.mul(int(g.vertices[v]), int(g.vertices[w])) == 0)
    assert (w in g.out_neighbours(v)) == (v in g.in_neighbours(w))
    assert g.adjacency[g.vertex_of(0), g.vertex_of(0)]
    # partitions cover every vertex exactly once
    for part in (graph_partition_out(g), graph_partition_in(g)):
        assert sorted(x for c in part for x in c) == list(range(n))
    if R.is_commutative():
        assert np.array_equal(g.adjacency, g.adjacency.T)

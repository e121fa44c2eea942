import pytest

from inscribe import (
    EmbeddingError,
    EulerError,
    FormatError,
    NotThreeConnectedError,
    PolyhedralGraph,
    dual,
    euler_characteristic,
    format_graph,
    generate,
    is_k_vertex_connected,
    parse_graph,
    trace_faces,
    validate_steinitz,
)

TETRAHEDRON_FILE = """\
polygraph 1
vertices 4
v 0: 1 3 2
v 1: 0 2 3
v 2: 0 3 1
v 3: 0 1 2
"""

CUBE_FILE = """\
# unit cube, quadrilateral faces
polygraph 1
vertices 8

v 0: 1 3 4
v 1: 2 0 5
v 2: 3 1 6
v 3: 0 2 7
v 4: 0 7 5
v 5: 1 4 6
v 6: 2 5 7
v 7: 3 6 4
"""


def bowtie() -> PolyhedralGraph:
    # Two triangles sharing vertex 0; planar but with a cut vertex.
    return PolyhedralGraph.from_neighbor_rotations(
        [[1, 2, 3, 4], [0, 2], [1, 0], [0, 4], [3, 0]]
    )


def k5() -> PolyhedralGraph:
    return PolyhedralGraph.from_neighbor_rotations(
        [[v for v in range(5) if v != u] for u in range(5)]
    )


class TestParse:
    def test_tetrahedron_file(self):
        g = parse_graph(TETRAHEDRON_FILE)
        assert g.vertex_count == 4
        assert g.edge_count == 6
        assert len(trace_faces(g)) == 4

    def test_cube_file(self):
        g = parse_graph(CUBE_FILE)
        assert g.vertex_count == 8
        assert g.edge_count == 12
        assert len(trace_faces(g)) == 6

    def test_edge_listed_at_one_endpoint_only(self):
        text = "polygraph 1\nvertices 4\nv 0: 1 3 2\nv 1: 0 2 3\nv 2: 0 3 1\nv 3: 0 1\n"
        with pytest.raises(EmbeddingError):
            parse_graph(text)

    def test_loop_rejected(self):
        text = "polygraph 1\nvertices 2\nv 0: 0 1\nv 1: 0\n"
        with pytest.raises(EmbeddingError):
            parse_graph(text)

    def test_parallel_edge_rejected(self):
        text = "polygraph 1\nvertices 3\nv 0: 1 1 2\nv 1: 0 0 2\nv 2: 0 1\n"
        with pytest.raises(EmbeddingError):
            parse_graph(text)

    def test_bad_header(self):
        with pytest.raises(FormatError):
            parse_graph("polygraph 2\nvertices 1\nv 0:\n")

    def test_missing_vertex_line(self):
        with pytest.raises(FormatError):
            parse_graph("polygraph 1\nvertices 3\nv 0: 1\nv 1: 0\n")

    def test_nonspherical_raises_distinctly(self):
        with pytest.raises(EulerError) as info:
            parse_graph(format_graph(k5()))
        assert info.value.graph is not None

    def test_not_three_connected_carries_graph(self):
        with pytest.raises(NotThreeConnectedError) as info:
            parse_graph(format_graph(bowtie()))
        # the parsed graph is still inspectable
        assert len(trace_faces(info.value.graph)) == 3

    def test_roundtrip_identity_on_corpus(self):
        for fam, n in [("tetrahedron", None), ("cube", None), ("prism", 6), ("antiprism", 5)]:
            g = generate(fam, n)
            assert parse_graph(format_graph(g)) == g


class TestTraceFaces:
    def test_tetrahedron_faces(self):
        faces = trace_faces(generate("tetrahedron"))
        assert len(faces) == 4
        assert all(f.degree == 3 for f in faces)

    def test_hexagonal_prism_faces(self):
        faces = trace_faces(generate("prism", 6))
        degrees = sorted(f.degree for f in faces)
        assert degrees == [4, 4, 4, 4, 4, 4, 6, 6]

    def test_octahedron_faces(self):
        faces = trace_faces(generate("octahedron"))
        assert len(faces) == 8
        assert all(f.degree == 3 for f in faces)

    def test_dart_partition(self):
        for fam, n in [("cube", None), ("wheel", 7), ("kleetope(tetrahedron)", None)]:
            g = generate(fam, n)
            darts = [
                (e, fwd) for face in trace_faces(g) for e, fwd in face.boundary
            ]
            assert len(darts) == 2 * g.edge_count
            assert len(set(darts)) == 2 * g.edge_count

    def test_each_edge_on_two_faces(self):
        g = generate("dodecahedron")
        count = {e: 0 for e in range(g.edge_count)}
        for face in trace_faces(g):
            for e in face.edge_ids:
                count[e] += 1
        assert all(c == 2 for c in count.values())


class TestValidate:
    def test_k4_is_polyhedral(self):
        report = validate_steinitz(generate("tetrahedron"))
        assert report.planar_spherical and report.three_connected

    def test_bowtie_planar_not_three_connected(self):
        report = validate_steinitz(bowtie())
        assert report.planar_spherical
        assert not report.three_connected

    def test_k5_fails_euler(self):
        report = validate_steinitz(k5())
        assert not report.planar_spherical

    def test_euler_characteristic(self):
        assert euler_characteristic(generate("icosahedron")) == 2
        assert euler_characteristic(k5()) != 2


class TestConnectivity:
    def test_octahedron_four_connected(self):
        assert is_k_vertex_connected(generate("octahedron"), 4)

    def test_cube_not_four_connected(self):
        assert not is_k_vertex_connected(generate("cube"), 4)

    def test_wheel5_not_four_connected(self):
        assert not is_k_vertex_connected(generate("wheel", 5), 4)

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            is_k_vertex_connected(generate("tetrahedron"), 4)

    def test_bowtie_not_two_connected(self):
        g = bowtie()
        assert is_k_vertex_connected(g, 1)
        assert not is_k_vertex_connected(g, 2)


class TestDual:
    def test_cube_dual_is_octahedron(self):
        import networkx as nx

        pair = dual(generate("cube"))
        assert pair.dual.vertex_count == 6
        assert pair.dual.edge_count == 12
        assert len(trace_faces(pair.dual)) == 8
        a = nx.Graph(list(pair.dual.edges))
        b = nx.Graph(list(generate("octahedron").edges))
        assert nx.is_isomorphic(a, b)

    def test_tetrahedron_self_dual(self):
        import networkx as nx

        pair = dual(generate("tetrahedron"))
        assert nx.is_isomorphic(
            nx.Graph(list(pair.dual.edges)),
            nx.Graph(list(pair.primal.edges)),
        )

    def test_bijection_is_consistent(self):
        g = generate("prism", 5)
        pair = dual(g)
        assert sorted(pair.primal_to_dual) == list(range(g.edge_count))
        for e in range(g.edge_count):
            assert pair.dual_to_primal[pair.primal_to_dual[e]] == e

    def test_double_dual_respects_bijections(self):
        for fam, n in [("cube", None), ("wheel", 6), ("antiprism", 4), ("kleetope(tetrahedron)", None)]:
            g = generate(fam, n)
            assert_double_dual_matches(g)

    def test_dual_requires_polyhedral(self):
        with pytest.raises(NotThreeConnectedError):
            dual(bowtie())
        with pytest.raises(EulerError):
            dual(k5())


def assert_double_dual_matches(g):
    """dual(dual(g)) is g up to the face<->vertex correspondence, and the
    composed edge bijection realizes the isomorphism."""
    pair = dual(g)
    pair2 = dual(pair.dual)
    ddg = pair2.dual
    assert ddg.vertex_count == g.vertex_count
    assert ddg.edge_count == g.edge_count
    # primal vertex v corresponds to the face of the dual whose boundary
    # consists of the duals of v's incident edges
    face_by_edges = {f.edge_ids: f.id for f in trace_faces(pair.dual)}
    vertex_map = {}
    for v in range(g.vertex_count):
        key = frozenset(pair.primal_to_dual[e] for e in g.rotation[v])
        vertex_map[v] = face_by_edges[key]
    assert sorted(vertex_map.values()) == list(range(g.vertex_count))
    for e, (u, v) in enumerate(g.edges):
        e2 = pair2.primal_to_dual[pair.primal_to_dual[e]]
        assert set(ddg.edges[e2]) == {vertex_map[u], vertex_map[v]}

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raagsplit import (
    CapacityError,
    GraphError,
    ParseError,
    SimplicialGraph,
    clique_counts,
    connected_components,
    euler_characteristic,
    induced_subgraph,
    parse_graph,
    shortest_path_avoiding,
    two_edge_segments,
    verify_hamiltonian_cycle,
)

from conftest import (
    graphs,
    oracle_bfs_distance,
    oracle_clique_counts,
    oracle_components,
    oracle_hamiltonian_accepts,
)


class TestParse:
    def test_path(self):
        g = parse_graph("a b\nb c")
        assert g.vertices == ("a", "b", "c")
        assert g.edges == (("a", "b"), ("b", "c"))

    def test_isolated_vertex(self):
        g = parse_graph("x")
        assert g.vertices == ("x",)
        assert g.edges == ()

    def test_duplicate_edge_merges(self):
        g = parse_graph("a b\na b")
        assert g.edges == (("a", "b"),)

    def test_comments_and_blanks(self):
        g = parse_graph("# heading\n\na b\n   \n# tail\nb c\n")
        assert g.vertices == ("a", "b", "c")

    def test_reversed_edge_merges(self):
        assert parse_graph("a b\nb a").edges == (("a", "b"),)

    def test_declaration_order_kept(self):
        assert parse_graph("z y\na").vertices == ("z", "y", "a")

    @pytest.mark.parametrize(
        "text,line",
        [("a b\nc- d", 2), ("a a", 1), ("a b c", 1), ("ok\n\nx y z w", 3)],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as err:
            parse_graph(text)
        assert err.value.line == line
        assert f"line {line}" in str(err.value)

    def test_constructor_rejects_undeclared_endpoint(self):
        with pytest.raises(GraphError):
            SimplicialGraph(["a"], [("a", "b")])

    def test_constructor_rejects_self_loop(self):
        with pytest.raises(GraphError):
            SimplicialGraph(["a"], [("a", "a")])


class TestInducedSubgraph:
    def test_edge_restriction(self, triangle):
        sub = induced_subgraph(triangle, {"a", "b"})
        assert sub.vertices == ("a", "b")
        assert sub.edges == (("a", "b"),)

    def test_two_triangles_restricts_to_triangle(self, two_triangles, triangle):
        sub = induced_subgraph(two_triangles, {"a", "b", "c"})
        assert set(sub.edges) == {("a", "b"), ("a", "c"), ("b", "c")}

    def test_identity(self, two_triangles):
        assert induced_subgraph(two_triangles, two_triangles.vertices) == two_triangles

    def test_foreign_member_rejected(self, triangle):
        with pytest.raises(GraphError):
            induced_subgraph(triangle, {"a", "zz"})

    @given(graphs(max_vertices=6), st.data())
    def test_idempotent(self, g, data):
        members = data.draw(st.sets(st.sampled_from(g.vertices)) if g.vertices else st.just(set()))
        once = induced_subgraph(g, members)
        assert induced_subgraph(once, members) == once


class TestConnectedComponents:
    def test_path_single_component(self, path3):
        assert connected_components(path3) == [("a", "b", "c")]

    def test_edge_plus_isolated(self):
        g = parse_graph("a b\nc")
        assert connected_components(g) == [("a", "b"), ("c",)]

    def test_star_connected(self, star):
        assert connected_components(star) == [("c", "l1", "l2", "l3")]

    def test_empty_graph(self):
        assert connected_components(SimplicialGraph()) == []

    @given(graphs(max_vertices=7))
    def test_matches_closure_oracle(self, g):
        assert sorted(connected_components(g)) == oracle_components(g.vertices, g.edges)


class TestShortestPathAvoiding:
    def test_direct_edge(self, two_triangles):
        assert shortest_path_avoiding(two_triangles, "a", "b", "c") == ["a", "b"]

    def test_detour_around_square(self, square):
        assert shortest_path_avoiding(square, "a", "c", "b") == ["a", "d", "c"]

    def test_absent_when_separated(self, path3):
        assert shortest_path_avoiding(path3, "a", "c", "b") is None

    def test_rejects_foreign_vertices(self, path3):
        with pytest.raises(GraphError):
            shortest_path_avoiding(path3, "a", "zz", "b")

    def test_rejects_coincident_arguments(self, triangle):
        with pytest.raises(GraphError):
            shortest_path_avoiding(triangle, "a", "a", "b")

    def test_lexicographic_tie_break(self):
        # two shortest routes x-a-y and x-b-y once c is removed; a wins
        g = parse_graph("x a\na y\nx b\nb y\nx c\nc y")
        assert shortest_path_avoiding(g, "x", "y", "c") == ["x", "a", "y"]

    @given(graphs(min_vertices=3, max_vertices=7), st.data())
    def test_against_bfs_oracle(self, g, data):
        trip = data.draw(st.permutations(g.vertices))
        u, w, v = trip[0], trip[1], trip[2]
        path = shortest_path_avoiding(g, u, w, v)
        expected = oracle_bfs_distance(g, u, w, avoid=v)
        if path is None:
            assert expected is None
        else:
            assert len(path) - 1 == expected
            assert path[0] == u and path[-1] == w and v not in path
            assert all(b in g.neighbors(a) for a, b in zip(path, path[1:]))


class TestHamiltonianCycleCheck:
    def test_triangle(self, triangle):
        assert verify_hamiltonian_cycle(triangle, ("a", "b", "c"))

    def test_chord_is_ignored(self):
        g = parse_graph("a b\nb c\nc d\na d\na c")
        assert verify_hamiltonian_cycle(g, ("a", "b", "c", "d"))

    def test_missing_vertex_fails(self, square):
        assert not verify_hamiltonian_cycle(square, ("a", "b", "c"))

    def test_repeat_fails(self, square):
        assert not verify_hamiltonian_cycle(square, ("a", "b", "a", "d"))

    def test_non_edge_fails(self, square):
        assert not verify_hamiltonian_cycle(square, ("a", "c", "b", "d"))

    def test_foreign_vertex_fails(self, triangle):
        assert not verify_hamiltonian_cycle(triangle, ("a", "b", "zz"))

    @given(graphs(min_vertices=3, max_vertices=5))
    @settings(max_examples=40)
    def test_matches_bruteforce_on_all_permutations(self, g):
        for perm in permutations(g.vertices):
            assert verify_hamiltonian_cycle(g, perm) == oracle_hamiltonian_accepts(g, perm)


class TestCliqueCounts:
    def test_triangle(self, triangle):
        assert clique_counts(triangle) == [1, 3, 3, 1]

    def test_two_triangles(self, two_triangles):
        assert clique_counts(two_triangles) == [1, 6, 7, 2]

    def test_star(self, star):
        assert clique_counts(star) == [1, 4, 3]

    def test_empty_graph(self):
        assert clique_counts(SimplicialGraph()) == [1]

    def test_capacity_cap(self):
        names = [f"v{i}" for i in range(65)]
        with pytest.raises(CapacityError):
            clique_counts(SimplicialGraph(names))

    @given(graphs(max_vertices=7))
    def test_matches_subset_enumeration(self, g):
        assert clique_counts(g) == oracle_clique_counts(g)


class TestEulerCharacteristic:
    def test_single_vertex(self):
        assert euler_characteristic(SimplicialGraph(["a"])) == 0

    def test_two_triangles(self, two_triangles):
        assert euler_characteristic(two_triangles) == 0

    def test_square(self, square):
        # chi(F2 x F2) = (-1) * (-1)
        assert euler_characteristic(square) == 1

    @given(graphs(min_vertices=1, max_vertices=4), graphs(min_vertices=1, max_vertices=4))
    def test_disjoint_union_rule(self, g1, g2):
        renamed = SimplicialGraph(
            [v + "_r" for v in g2.vertices], [(u + "_r", v + "_r") for u, v in g2.edges]
        )
        union = SimplicialGraph(
            list(g1.vertices) + list(renamed.vertices), list(g1.edges) + list(renamed.edges)
        )
        assert euler_characteristic(union) == (
            euler_characteristic(g1) + euler_characteristic(renamed) - 1
        )


def test_two_edge_segments_square(square):
    assert two_edge_segments(square) == [
        ("a", "b", "c"),
        ("a", "d", "c"),
        ("b", "a", "d"),
        ("b", "c", "d"),
    ]

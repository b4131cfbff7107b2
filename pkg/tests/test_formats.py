"""Round trips and error reporting for the text file formats."""

import pytest

from pennylab import FormatError, PennyGraph, gen_grid, tangency_graph
from pennylab.formats import (
    load_graph,
    parse_edge_list,
    parse_lists,
    parse_points,
    parse_rotation,
    read_points,
    write_edge_list,
    write_lists,
    write_points,
    write_rotation,
)


class TestPoints:
    def test_round_trip_exact(self, tmp_path):
        pts = [(0.1 + 0.2, -3.0), (1e-9, 2.0**-53), (12345.6789, 0.0)]
        path = tmp_path / "pts.txt"
        write_points(path, pts, comment="three disks\nsecond line")
        assert read_points(path) == pts  # repr round-trips floats exactly
        text = path.read_text()
        assert text.startswith("# three disks\n# second line\n")

    def test_comments_and_blanks_skipped(self):
        assert parse_points("# header\n\n1 2\n\n# mid\n3 4\n") == [(1.0, 2.0), (3.0, 4.0)]

    def test_bad_arity(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_points("1 2\n3\n")

    def test_bad_literal(self):
        with pytest.raises(FormatError, match="line 1"):
            parse_points("1 x\n")


class TestEdgeList:
    def test_round_trip(self, tmp_path):
        g = tangency_graph(gen_grid(3))
        path = tmp_path / "g.txt"
        write_edge_list(path, g)
        n, edges = parse_edge_list(path.read_text())
        assert n == g.n
        assert sorted(edges) == g.edges()

    def test_header_errors(self):
        with pytest.raises(FormatError, match="empty"):
            parse_edge_list("")
        with pytest.raises(FormatError, match="header"):
            parse_edge_list("3\n")
        with pytest.raises(FormatError, match="two integers"):
            parse_edge_list("3 x\n")
        with pytest.raises(FormatError, match="negative"):
            parse_edge_list("-1 0\n")

    def test_count_mismatch(self):
        with pytest.raises(FormatError, match="promises 2 edges"):
            parse_edge_list("3 2\n0 1\n")

    def test_range_check(self):
        with pytest.raises(FormatError, match="outside 0..2"):
            parse_edge_list("3 1\n0 3\n")

    def test_isolated_vertices_allowed(self):
        n, edges = parse_edge_list("4 1\n0 1\n")
        g = PennyGraph.from_edges(n, edges)
        assert g.n == 4 and g.e == 1


class TestLists:
    def test_round_trip(self, tmp_path):
        lists = [[0, 1, 2], [5], [2, 4, 6]]
        path = tmp_path / "l.txt"
        write_lists(path, lists)
        assert parse_lists(path.read_text(), 3) == lists

    def test_wrong_count(self):
        with pytest.raises(FormatError, match="expected 2 list lines"):
            parse_lists("0 1\n", 2)

    def test_bad_token(self):
        with pytest.raises(FormatError, match="integers"):
            parse_lists("0 one\n", 1)


class TestRotation:
    def test_round_trip(self, tmp_path):
        g = tangency_graph(gen_grid(3))
        path = tmp_path / "r.txt"
        write_rotation(path, g.rotation)
        abstract = PennyGraph.from_edges(g.n, g.edges())
        rot = parse_rotation(path.read_text(), abstract)
        assert rot.order == g.rotation.order
        assert rot.angles is None

    def test_permutation_enforced(self):
        g = PennyGraph.from_edges(3, [(0, 1), (1, 2)])
        with pytest.raises(FormatError, match="permutation"):
            parse_rotation("1\n0 0\n1\n", g)
        with pytest.raises(FormatError, match="permutation"):
            parse_rotation("1\n2 0\n2\n", g)  # vertex 2's line lists itself

    def test_line_count(self):
        g = PennyGraph.from_edges(2, [(0, 1)])
        with pytest.raises(FormatError, match="expected 2 rotation lines"):
            parse_rotation("1\n", g)


class TestLoadGraph:
    def test_with_rotation(self, tmp_path):
        g = tangency_graph(gen_grid(3))
        epath, rpath = tmp_path / "e.txt", tmp_path / "r.txt"
        write_edge_list(epath, g)
        write_rotation(rpath, g.rotation)
        loaded = load_graph(epath, rpath)
        assert loaded.adj == g.adj
        assert loaded.rotation.order == g.rotation.order
        assert loaded.points is None

    def test_without_rotation(self, tmp_path):
        epath = tmp_path / "e.txt"
        epath.write_text("2 1\n0 1\n")
        loaded = load_graph(epath)
        assert loaded.rotation is None

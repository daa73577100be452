import logging
import random
from math import comb

import pytest

import bruteforce as bf
from conftest import simplex_boundary
from polydecomp.complex import (
    ComplexError,
    canonical_key,
    deletion,
    diameter,
    distance,
    f_count,
    faces_of_dim,
    from_facets,
    is_pure,
    is_simplex,
    link,
    parse_cplx,
    read_cplx,
    ridge_graph,
    to_cplx,
    write_cplx,
)


def labelled(c, faces):
    return {frozenset(c.names(f)) for f in faces}


class TestFromFacets:
    def test_direct_encoding(self):
        c = from_facets([["a", "b"], ["b", "c"]])
        assert c.labels == ("a", "b", "c")
        assert c.facets == [(0, 1), (1, 2)]

    def test_drops_contained_face(self, caplog):
        with caplog.at_level(logging.WARNING):
            c = from_facets([["a", "b"], ["a"]])
        assert c.facets == [(0, 1)]
        assert c.n_dropped == 1
        assert "dropped 1" in caplog.text

    def test_duplicates_merge(self):
        c = from_facets([["a", "b"], ["b", "a"]])
        assert len(c) == 1 and c.n_dropped == 0

    def test_errors(self):
        with pytest.raises(ComplexError, match="empty complex"):
            from_facets([])
        with pytest.raises(ComplexError, match="duplicate label"):
            from_facets([["a", "a"]])
        with pytest.raises(ComplexError):
            from_facets([["a b"]])
        with pytest.raises(ComplexError):
            from_facets([[]])

    def test_delta6_facets_reload(self, d6):
        c = from_facets(d6.facet_labels())
        assert (c.n_vertices, len(c)) == (14, 140)
        assert c == d6


def test_is_pure():
    assert is_pure(from_facets([["a", "b"], ["b", "c"], ["c", "d"]])) == (True, None)
    c = from_facets([["a", "b"], ["c"]])
    flag, witness = is_pure(c)
    assert not flag and c.names(witness) == ("c",)


def test_is_simplex(d6):
    assert is_simplex(from_facets([list("abc")]))
    assert not is_simplex(from_facets([["a", "b"], ["b", "c"]]))
    assert not is_simplex(d6)


class TestLink:
    def test_empty_face(self, tetra):
        assert link(tetra, ()) == tetra

    def test_triangle_vertex(self, triangle):
        assert link(triangle, ["a"]).label_sets() == {frozenset("b"), frozenset("c")}

    def test_not_a_face(self, triangle):
        with pytest.raises(ComplexError, match="not a face"):
            link(triangle, ["a", "b", "c"])

    def test_relabels_compactly(self, tetra):
        lk = link(tetra, ["a"])
        assert lk.labels == ("b", "c", "d")
        assert link(tetra, ["a"], compact=False).labels == tetra.labels

    def test_delta6_u1(self, d6):
        # oracle: brute force over materialized faces
        faces = bf.closure(d6.label_sets())
        expected = bf.maximal(bf.link(faces, frozenset({"u1"})))
        lk = link(d6, ["u1"])
        assert lk.label_sets() == expected
        assert is_pure(lk)[0] and lk.dim == 4
        # choose two more row-1 zeros among six columns, then three of the four free columns
        assert len(lk) == comb(6, 2) * comb(4, 3) == 60


class TestDeletion:
    def test_path_end(self):
        c = from_facets([["a", "b"], ["b", "c"]])
        assert deletion(c, ["c"]).label_sets() == {frozenset("ab")}

    def test_simplex_vertex(self):
        assert deletion(from_facets([list("abc")]), ["a"]).label_sets() == {frozenset("bc")}

    def test_non_face_is_noop(self, triangle):
        assert deletion(triangle, ["a", "b", "c"]) is triangle

    def test_empty_face_rejected(self, triangle):
        with pytest.raises(ComplexError):
            deletion(triangle, ())

    def test_edge_of_tetrahedron(self, tetra):
        d = deletion(tetra, ["a", "b"])
        assert d.label_sets() == {frozenset("acd"), frozenset("bcd")}

    def test_delta6_two_same_side(self, d6):
        c = deletion(deletion(d6, ["u1"]), ["u2"])
        assert not is_pure(c)[0]


def _random_complex(rng):
    return from_facets(bf.random_pure_facets(rng, max_vertices=8, max_facets=6)
                       + ([[f"x{rng.randint(0, 7)}"]] if rng.random() < 0.3 else []))


@pytest.mark.parametrize("seed", range(40))
def test_link_and_deletion_match_bruteforce(seed):
    rng = random.Random(seed)
    c = _random_complex(rng)
    faces = bf.closure(c.label_sets())
    for tau in sorted(faces, key=sorted):
        if not tau:
            continue
        if c.contains_face(list(tau)):
            lk = link(c, list(tau))
            lk_faces = bf.closure(lk.label_sets())
            assert lk_faces == bf.link(faces, tau)
            assert all(not (g & tau) and (g | tau) in faces for g in lk_faces)
        dl = deletion(c, list(tau))
        assert bf.closure(dl.label_sets()) == bf.deletion(faces, tau)


class TestFaces:
    def test_triangle(self, triangle):
        assert len(faces_of_dim(triangle, 0)) == 3
        assert len(faces_of_dim(triangle, 1)) == 3
        assert faces_of_dim(triangle, -1) == [()]

    def test_sorted_lex(self, tetra):
        assert faces_of_dim(tetra, 1) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

    def test_range(self, triangle):
        with pytest.raises(ComplexError):
            faces_of_dim(triangle, 2)
        with pytest.raises(ComplexError):
            faces_of_dim(triangle, -2)

    def test_delta6_vertices(self, d6):
        assert f_count(d6, 0) == 2 * (2 * 3 + 1)

    @pytest.mark.parametrize("seed", range(10))
    def test_counts_match_bruteforce(self, seed):
        c = _random_complex(random.Random(seed))
        faces = bf.closure(c.label_sets())
        for k in range(-1, c.dim + 1):
            assert f_count(c, k) == sum(1 for f in faces if len(f) == k + 1)


class TestRidgeGraph:
    def test_triangle_cycle(self, triangle):
        g = ridge_graph(triangle)
        assert len(g.edges) == 3 and all(len(a) == 2 for a in g.adjacency)

    def test_tetra_complete(self, tetra):
        assert len(ridge_graph(tetra).edges) == 6

    def test_impure(self):
        with pytest.raises(ComplexError, match="pure"):
            ridge_graph(from_facets([["a", "b"], ["c"]]))

    def test_figure1_connected(self, figure1):
        nx = pytest.importorskip("networkx")
        assert nx.is_connected(ridge_graph(figure1).to_networkx())


class TestDiameter:
    @pytest.mark.parametrize("d", range(2, 9))
    def test_simplex_boundary(self, d):
        assert diameter(simplex_boundary(d)).diameter == 1

    def test_square(self, square):
        rep = diameter(square)
        assert rep.diameter == 2
        a, b = rep.eccentric_pair
        assert distance(square, a, b) == distance(square, b, a) == 2

    def test_single_facet(self):
        assert diameter(from_facets([list("abc")])).diameter == 0

    def test_disconnected(self):
        rep = diameter(from_facets([["a", "b"], ["c", "d"]]))
        assert not rep.connected and rep.eccentric_pair is None

    def test_delta6(self, d6):
        rep = diameter(d6)
        assert rep.diameter <= 8
        assert rep.diameter == bf.diameter(d6.label_sets())
        assert diameter(d6) == rep

    @pytest.mark.parametrize("seed", range(15))
    def test_matches_floyd_warshall(self, seed):
        c = from_facets(bf.random_pure_facets(random.Random(seed), max_facets=7))
        rep = diameter(c)
        assert rep.diameter == bf.diameter(c.label_sets())
        if rep.connected:
            assert distance(c, *rep.eccentric_pair) == rep.diameter


class TestCanonicalKey:
    def test_reconstruction(self, tetra):
        assert canonical_key(tetra) == canonical_key(from_facets(tetra.facet_labels()))

    def test_distinct(self):
        assert canonical_key(from_facets([["a", "b"]])) != canonical_key(from_facets([["a", "c"]]))

    def test_deterministic(self, d6):
        assert canonical_key(deletion(d6, ["u3"])) == canonical_key(deletion(d6, ["u3"]))


class TestCplx:
    def test_roundtrip(self, d6, tmp_path):
        path = tmp_path / "d6.cplx"
        write_cplx(d6, path, header="delta 6")
        text = path.read_text()
        assert text.startswith("# delta 6\n")
        assert len([l for l in text.splitlines() if not l.startswith("#")]) == 140
        back = read_cplx(path)
        assert back == d6 and back.n_dropped == 0
        assert to_cplx(back) == to_cplx(d6)

    def test_sorted_output(self):
        c = from_facets([["c", "b"], ["b", "a"]])
        assert to_cplx(c) == "a b\nb c\n"

    def test_comments_and_blank_lines(self):
        c = parse_cplx("# comment\n\na b\n  \nb c\n")
        assert len(c) == 2

    def test_rejects_double_space(self):
        with pytest.raises(ComplexError):
            parse_cplx("a  b\n")

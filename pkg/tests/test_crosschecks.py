"""Adversarial cross-pipeline checks beyond the catalog instances."""

import random

from zigzaghh.exactla import GF, QQ
from zigzaghh.ginzburg import hh2_dim
from zigzaghh.preproj import trace_piece, trace_piece_general
from zigzaghh.quiver import Graph, catalog, orient_bipartite, orient_by_edge_order
from zigzaghh.zigzag import build_zigzag, hochschild_dim


def _random_tree(rng, n):
    edges = []
    for v in range(2, n + 1):
        edges.append((rng.randint(1, v - 1), v))
    return Graph(n, tuple(edges), name="random-tree-%d" % n)


def _random_orientation(rng, g):
    arrows = tuple((i, j) if rng.random() < 0.5 else (j, i) for (i, j) in g.edges)
    from zigzaghh.quiver import Quiver
    return Quiver(g.vertex_count, arrows, name=g.name)


def test_random_trees_three_pipelines_agree():
    rng = random.Random(2024)
    fields = [QQ, GF(2), GF(3), GF(5)]
    for _ in range(6):
        n = rng.randint(2, 7)
        g = _random_tree(rng, n)
        quiv = orient_bipartite(g)
        fld = rng.choice(fields)
        alg = build_zigzag(g, fld)
        for adams in range(0, 5):
            gz = hh2_dim(quiv, adams, fld).dimension
            tr = trace_piece(quiv, adams + 2, fld, want_witnesses=False).dimension
            assert gz == tr, (g.edges, fld.characteristic, adams)
            if 1 <= adams <= 2:
                z = hochschild_dim(alg, 2, adams).dimension
                assert z == gz, (g.edges, fld.characteristic, adams)


def test_random_orientations_do_not_change_dimensions():
    rng = random.Random(77)
    for _ in range(4):
        g = _random_tree(rng, rng.randint(3, 6))
        ref = orient_bipartite(g)
        other = _random_orientation(rng, g)
        for adams in range(0, 4):
            assert (hh2_dim(ref, adams, QQ).dimension
                    == hh2_dim(other, adams, QQ).dimension), (g.edges, adams)
            assert (trace_piece(ref, adams + 2, QQ).dimension
                    == trace_piece(other, adams + 2, QQ).dimension)


def test_triangle_mixed_orientation_pipelines_agree():
    # the dg-algebra / trace equality holds for any quiver, including
    # orientations with a vertex that both emits and receives
    tri = catalog("A~", 2)
    quiv = orient_by_edge_order(tri)
    sources = {s for s, _ in quiv.arrows}
    targets = {t for _, t in quiv.arrows}
    assert sources & targets  # genuinely mixed
    for fld in (QQ, GF(2), GF(3)):
        for adams in range(0, 5):
            gz = hh2_dim(quiv, adams, fld).dimension
            tr = trace_piece(quiv, adams + 2, fld, want_witnesses=False).dimension
            assert gz == tr, (fld.characteristic, adams)


def test_extended_a_family_never_vanishes():
    # cycle graphs carry nonzero classes over every field within the bound
    for label, n in (("A~", 2), ("A~", 3)):
        g = catalog(label, n)
        quiv = orient_bipartite(g) if g.is_bipartite() else orient_by_edge_order(g)
        for fld in (QQ, GF(2), GF(7)):
            dims = [hh2_dim(quiv, adams, fld).dimension for adams in range(1, 7)]
            assert any(d > 0 for d in dims), (label, n, fld.characteristic)


def test_square_three_pipelines_on_bipartite_cycle():
    # extended A3 is bipartite, so the sink/source orientation exists and
    # the two dg-side pipelines agree on it
    g = catalog("A~", 3)
    quiv = orient_bipartite(g)
    for adams in range(0, 5):
        gz = hh2_dim(quiv, adams, QQ).dimension
        tr = trace_piece(quiv, adams + 2, QQ, want_witnesses=False).dimension
        assert gz == tr


def test_triangle_bar_complex_and_dual_trace_regressions():
    # off trees the bar complex of the zigzag algebra and the trace of the
    # quadratic dual are different objects; both values are pinned (the
    # bar-complex value was confirmed by an independent elimination)
    tri = catalog("A~", 2)
    alg = build_zigzag(tri, QQ)
    assert [hochschild_dim(alg, 2, q).dimension for q in (1, 2, 3)] == [2, 0, 0]
    assert [trace_piece_general("koszul-dual-zigzag", tri, q + 2, QQ).dimension
            for q in (1, 2, 3)] == [2, 1, 0]

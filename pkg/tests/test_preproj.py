"""Preprojective pieces, trace spaces, and the quadratic-dual variant.

Regression dimensions here were produced by the brute-force module in
tests/test_oracle.py (or by hand for the smallest cases) before being
frozen.
"""

import pytest

from zigzaghh.exactla import GF, QQ
from zigzaghh.pathalg import path_from_names
from zigzaghh.preproj import (cycle_class_in_trace_is_zero, cyclic_piece_dim,
                              koszul_dual_zigzag_piece, lambda_piece, trace_piece,
                              trace_piece_general)
from zigzaghh.quiver import Graph, Quiver, catalog, orient_bipartite, orient_by_edge_order


def _q(label):
    return orient_bipartite(
        catalog(label[0] + ("~" if "~" in label else ""), int(label.strip("ADE~"))))


def test_lambda_a1():
    q = _q("A1")
    assert [lambda_piece(q, n, QQ).dimension for n in range(4)] == [1, 0, 0, 0]


def test_lambda_a2():
    q = _q("A2")
    assert [lambda_piece(q, n, QQ).dimension for n in range(4)] == [2, 2, 0, 0]


def test_lambda_a3_regression():
    q = _q("A3")
    assert [lambda_piece(q, n, QQ).dimension for n in range(6)] == [3, 4, 3, 0, 0, 0]


def test_lambda_d4_regression_and_finiteness():
    q = _q("D4")
    dims = [lambda_piece(q, n, QQ).dimension for n in range(8)]
    assert dims == [4, 6, 8, 6, 4, 0, 0, 0]
    assert sum(dims) == 28


def test_lambda_representatives_project_to_basis():
    q = _q("A3")
    piece = lambda_piece(q, 2, QQ)
    assert len(piece.representatives) == piece.dimension
    assert piece.relation_rank + piece.dimension == len(piece.ambient)


def test_cyclic_piece_degree_zero():
    q = _q("D4")
    for v in range(1, 5):
        assert cyclic_piece_dim(q, 0, v, QQ) == 1


def test_cyclic_piece_a2_degree_two():
    assert cyclic_piece_dim(_q("A2"), 2, 1, QQ) == 0


def test_cyclic_piece_extended_d4_nontrivial():
    q = _q("D~4")
    # the bottom-leaf block and the hub block in degree 4 are both nonzero
    assert cyclic_piece_dim(q, 4, 4, QQ) >= 1
    assert cyclic_piece_dim(q, 4, 5, QQ) >= 1


def test_trace_degree_zero_counts_vertices():
    for label in ("A2", "D4", "D~4"):
        q = _q(label)
        assert trace_piece(q, 0, QQ).dimension == q.vertex_count


def test_trace_a2_vanishes_in_higher_degrees():
    q = _q("A2")
    for n in range(2, 6):
        assert trace_piece(q, n, QQ).dimension == 0


def test_trace_extended_d4_matches_bottom_leaf_block():
    q = _q("D~4")
    for n in (4, 6, 8):
        assert trace_piece(q, n, QQ).dimension == cyclic_piece_dim(q, n, 4, QQ)


def test_trace_witnesses_are_cycles_of_right_length():
    q = _q("D~4")
    tr = trace_piece(q, 4, QQ)
    assert tr.dimension == 2
    assert len(tr.witnesses) == 2
    for w in tr.witnesses:
        assert w.is_cycle() and w.length == 4


def test_koszul_dual_matches_preprojective_on_trees():
    for label in ("A2", "A3", "D4"):
        g = catalog(label[0], int(label[1]))
        q = orient_bipartite(g)
        for n in range(6):
            assert (koszul_dual_zigzag_piece(g, n, QQ).dimension
                    == lambda_piece(q, n, QQ).dimension)


def test_koszul_dual_a1():
    g = catalog("A", 1)
    assert [koszul_dual_zigzag_piece(g, n, QQ).dimension for n in range(4)] == [1, 0, 0, 0]


def test_koszul_dual_triangle_has_nonzero_high_traces():
    tri = Graph(3, ((1, 2), (2, 3), (1, 3)), name="triangle")
    nonzero = [n for n in range(3, 9)
               if trace_piece_general("koszul-dual-zigzag", tri, n, QQ).dimension > 0]
    assert nonzero  # not intrinsically formal territory: classes persist


def test_trace_general_dispatch():
    q = _q("A2")
    assert trace_piece_general("preprojective", q, 3, QQ).dimension == 0
    g = catalog("D~", 4)
    qd4 = _q("D~4")
    for n in range(6):
        assert (trace_piece_general("koszul-dual-zigzag", g, n, QQ).dimension
                == trace_piece(qd4, n, QQ).dimension)
    with pytest.raises(ValueError):
        trace_piece_general("mystery", q, 1, QQ)
    with pytest.raises(ValueError):
        trace_piece_general("preprojective", g, 1, QQ)


def test_orientation_independence_on_trees():
    g = catalog("A", 3)
    bip = orient_bipartite(g)           # sink/source orientation
    lin = orient_by_edge_order(g)       # 1->2->3, not sink/source
    assert bip.arrows != lin.arrows
    for n in range(6):
        assert lambda_piece(bip, n, QQ).dimension == lambda_piece(lin, n, QQ).dimension
        assert trace_piece(bip, n, QQ).dimension == trace_piece(lin, n, QQ).dimension
    for n in range(6):
        assert (lambda_piece(bip, n, GF(2)).dimension
                == lambda_piece(lin, n, GF(2)).dimension)


def test_zero_piece_kills_all_later_ones():
    # generated in degree 1, so one zero piece ends the algebra; checked
    # one degree past the three-in-a-row rule used by the CLI flag
    q = _q("D4")
    dims = [lambda_piece(q, n, QQ).dimension for n in range(9)]
    first_zero = dims.index(0)
    assert all(d == 0 for d in dims[first_zero:])


def test_relation_sign_flip_invariance():
    # replacing r by -r flips every relation row, so all ranks agree; the
    # reversed quiver realizes the flip composition-side
    g = catalog("D", 4)
    q = orient_bipartite(g)
    rev = Quiver(q.vertex_count, tuple((t, s) for s, t in q.arrows), name=q.name)
    for n in range(6):
        assert lambda_piece(q, n, QQ).dimension == lambda_piece(rev, n, QQ).dimension
        assert trace_piece(q, n, QQ).dimension == trace_piece(rev, n, QQ).dimension


def test_bad_characteristic_sensitivity_d4():
    q = _q("D4")
    over_f2 = [trace_piece(q, n, GF(2)).dimension for n in range(3, 9)]
    assert any(d > 0 for d in over_f2)
    for fld in (QQ, GF(7)):
        assert all(trace_piece(q, n, fld).dimension == 0 for n in range(3, 9))


def test_sum_of_cyclic_blocks_bounds_trace():
    for label, fld in (("D4", QQ), ("D~4", QQ), ("D4", GF(2))):
        q = _q(label)
        for n in range(0, 6):
            total = sum(cyclic_piece_dim(q, n, i, fld) for i in range(1, q.vertex_count + 1))
            assert total >= trace_piece(q, n, fld).dimension


def test_cyclic_commutator_identity_random_sample():
    # [x_1..x_p, x_{p+1}..x_{p+q}] telescopes into single-arrow-by-rotation
    # commutators, as elements of the free doubled path algebra
    import random

    from zigzaghh.pathalg import BigradedElement, all_cycles, commutator, make_path
    from zigzaghh.preproj import doubled_of

    rng = random.Random(17)
    qd = doubled_of(_q("D4"))
    pool = [c for n in (2, 4, 6) for c in all_cycles(qd, n)]
    for _ in range(25):
        cyc = rng.choice(pool)
        p = rng.randint(1, cyc.length - 1)

        def elem(letters):
            return BigradedElement.of_path(QQ, qd, make_path(qd, letters))

        lhs = commutator(elem(cyc.letters[:p]), elem(cyc.letters[p:]))
        rhs = BigradedElement.zero(QQ, qd)
        for i in range(p):
            rotated = cyc.letters[i + 1:] + cyc.letters[:i]
            rhs = rhs + commutator(elem(cyc.letters[i:i + 1]), elem(rotated))
        assert lhs == rhs


def test_cycle_class_membership():
    q = _q("D~4")
    qd_path = path_from_names
    from zigzaghh.preproj import doubled_of
    qd = doubled_of(q)
    w = qd_path(qd, ["a4", "a1*", "a1", "a4*"])
    assert not cycle_class_in_trace_is_zero(q, w, QQ)
    q4 = _q("D4")
    qd4 = doubled_of(q4)
    w4 = qd_path(qd4, ["a1", "a2*", "a2", "a1*"])
    assert cycle_class_in_trace_is_zero(q4, w4, QQ)
    with pytest.raises(ValueError):
        cycle_class_in_trace_is_zero(q4, qd_path(qd4, ["a1"]), QQ)

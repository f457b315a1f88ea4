"""Degreewise pieces of the preprojective algebra and its trace space.

The preprojective algebra of a quiver Q is the doubled path algebra
modulo the single element r = sum over base arrows of (a a* - a* a).
Everything here is degreewise exact linear algebra: the degree-n piece
is span(length-n words) modulo span{x r_v y} where r_v = e_v r e_v and
|x| + |y| = n - 2.  No rewriting and no normal forms: quotients are rank
computations over the chosen field.

The trace space (algebra modulo commutators) is computed on the cyclic
block only: every non-cyclic word w equals the commutator [e_src(w), w],
so after quotienting out non-cycles the remaining generators are the
cyclic relation rows and commutators [u, v] whose products are cycles.

The same machinery, fed the relation "sum of all 2-cycles at each
vertex", computes the quadratic dual of the zigzag algebra for an
arbitrary graph (no orientation needed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .exactla import ExactMatrix, FieldSpec, echelonize, in_span, span_info
from .pathalg import Path, all_cycles, all_words, words_by_endpoints
from .quiver import DoubledQuiver, Graph, Quiver, double, orient_by_edge_order

# relation term: (coefficient, (first letter, second letter)) at a vertex
RelationTable = dict[int, list[tuple[int, tuple[int, int]]]]

_doubled_memo: dict[Quiver, DoubledQuiver] = {}
_graph_doubled_memo: dict[Graph, DoubledQuiver] = {}


def doubled_of(q: Quiver) -> DoubledQuiver:
    qd = _doubled_memo.get(q)
    if qd is None:
        qd = double(q)
        _doubled_memo[q] = qd
    return qd


def doubled_of_graph(g: Graph) -> DoubledQuiver:
    qd = _graph_doubled_memo.get(g)
    if qd is None:
        qd = double(orient_by_edge_order(g))
        _graph_doubled_memo[g] = qd
    return qd


def preprojective_relations(q: Quiver) -> RelationTable:
    """r_v = e_v (sum over base arrows of [a, a*]) e_v, as letter pairs."""
    rels: RelationTable = {v: [] for v in range(1, q.vertex_count + 1)}
    for k, (s, t) in enumerate(q.arrows):
        rels[s].append((1, (2 * k, 2 * k + 1)))
        rels[t].append((-1, (2 * k + 1, 2 * k)))
    return rels


def zigzag_dual_relations(qd: DoubledQuiver) -> RelationTable:
    """One relation per vertex: the sum of all 2-cycles there is zero."""
    rels: RelationTable = {v: [] for v in range(1, qd.vertex_count + 1)}
    for a in range(qd.arrow_count):
        rels[qd.arrow_source[a]].append((1, (a, qd.star(a))))
    return rels


@dataclass
class GradedQuotientPiece:
    """One graded piece of a degreewise quotient of the doubled path algebra."""

    degree: int
    field: FieldSpec
    ambient: list[Path]
    relations: ExactMatrix
    dimension: int
    representatives: list[Path]

    @property
    def relation_rank(self) -> int:
        return len(self.ambient) - self.dimension


@dataclass
class TracePiece:
    """Dimension of (algebra / commutators) in one degree, with witness cycles."""

    degree: int
    dimension: int
    witnesses: Optional[list[Path]] = None


def _by_target(qd, length: int) -> dict[int, list[Path]]:
    table: dict[int, list[Path]] = {}
    for (s, t), paths in words_by_endpoints(qd, length).items():
        table.setdefault(t, []).extend(paths)
    return table


def _relation_rows(qd, rels: RelationTable, n: int, index: dict[Path, int],
                   cyclic_only: bool = False):
    """Spanning vectors x r_v y with |x| + |y| = n - 2, deduplicated."""
    rows = []
    seen = set()
    for la in range(n - 1):
        lb = n - 2 - la
        left = words_by_endpoints(qd, la)
        right = words_by_endpoints(qd, lb)
        for (i, v), lefts in sorted(left.items()):
            terms = rels.get(v)
            if not terms:
                continue
            for (w, j), rights in sorted(right.items()):
                if w != v:
                    continue
                if cyclic_only and j != i:
                    continue
                for a in lefts:
                    for b in rights:
                        row: dict[int, int] = {}
                        for coeff, (l1, l2) in terms:
                            word = Path(i, a.letters + (l1, l2) + b.letters, j)
                            col = index.get(word)
                            if col is None:
                                continue
                            row[col] = row.get(col, 0) + coeff
                        row = {c: x for c, x in row.items() if x}
                        if not row:
                            continue
                        key = tuple(sorted(row.items()))
                        if key not in seen:
                            seen.add(key)
                            rows.append(row)
    return rows


def _quotient_piece(qd, rels: RelationTable, n: int, fld: FieldSpec) -> GradedQuotientPiece:
    ambient = all_words(qd, n)
    index = {p: i for i, p in enumerate(ambient)}
    rows = _relation_rows(qd, rels, n, index) if n >= 2 else []
    info = span_info(fld, rows, len(ambient))
    matrix = ExactMatrix(fld, len(rows), len(ambient), rows)
    reps = [ambient[c] for c in info.free_coords]
    return GradedQuotientPiece(n, fld, ambient, matrix, info.quotient_dim, reps)


def lambda_piece(q: Quiver, n: int, fld: FieldSpec) -> GradedQuotientPiece:
    """The degree-n piece of the preprojective algebra of q."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    return _quotient_piece(doubled_of(q), preprojective_relations(q), n, fld)


def koszul_dual_zigzag_piece(g: Graph, n: int, fld: FieldSpec) -> GradedQuotientPiece:
    """Degree-n piece of the quadratic dual of the zigzag algebra of g."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    return _quotient_piece(doubled_of_graph(g), zigzag_dual_relations(doubled_of_graph(g)), n, fld)


def cyclic_piece_dim(q: Quiver, n: int, i: int, fld: FieldSpec) -> int:
    """dim e_i Lambda^n e_i: the i -> i block of the degree-n quotient."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    qd = doubled_of(q)
    ambient = words_by_endpoints(qd, n).get((i, i), [])
    if not ambient:
        return 0
    index = {p: k for k, p in enumerate(ambient)}
    rels = preprojective_relations(q)
    rows = []
    if n >= 2:
        seen = set()
        for la in range(n - 1):
            lb = n - 2 - la
            lefts = words_by_endpoints(qd, la)
            rights = words_by_endpoints(qd, lb)
            for (s, v), la_paths in sorted(lefts.items()):
                if s != i:
                    continue
                terms = rels.get(v)
                if not terms:
                    continue
                for a in la_paths:
                    for b in rights.get((v, i), []):
                        row: dict[int, int] = {}
                        for coeff, (l1, l2) in terms:
                            word = Path(i, a.letters + (l1, l2) + b.letters, i)
                            col = index.get(word)
                            if col is not None:
                                row[col] = row.get(col, 0) + coeff
                        row = {c: x for c, x in row.items() if x}
                        if row:
                            key = tuple(sorted(row.items()))
                            if key not in seen:
                                seen.add(key)
                                rows.append(row)
    info = span_info(fld, rows, len(ambient))
    return info.quotient_dim


def _commutator_rows(qd, n: int, index: dict[Path, int]):
    """[u, v] for words with |u| + |v| = n and cyclic products."""
    rows = []
    seen = set()
    for lu in range(1, n // 2 + 1):
        lv = n - lu
        halved = lu == lv
        left = words_by_endpoints(qd, lu)
        right = words_by_endpoints(qd, lv)
        for (x, y), us in sorted(left.items()):
            vs = right.get((y, x))
            if not vs:
                continue
            for u in us:
                for v in vs:
                    if halved and u.letters >= v.letters:
                        continue
                    row: dict[int, int] = {}
                    cu = index[Path(x, u.letters + v.letters, x)]
                    cv = index[Path(y, v.letters + u.letters, y)]
                    row[cu] = row.get(cu, 0) + 1
                    row[cv] = row.get(cv, 0) - 1
                    row = {c: w for c, w in row.items() if w}
                    if not row:
                        continue
                    key = tuple(sorted(row.items()))
                    if key not in seen:
                        seen.add(key)
                        rows.append(row)
    return rows


def _trace_piece(qd, rels: RelationTable, n: int, fld: FieldSpec,
                 want_witnesses: bool = True) -> TracePiece:
    if n == 0:
        # degree-0 commutators vanish, so the idempotents stay independent
        return TracePiece(0, qd.vertex_count,
                          [Path(v, (), v) for v in range(1, qd.vertex_count + 1)]
                          if want_witnesses else None)
    cycles = all_cycles(qd, n)
    if not cycles:
        return TracePiece(n, 0, [] if want_witnesses else None)
    index = {p: i for i, p in enumerate(cycles)}
    rows = _relation_rows(qd, rels, n, index, cyclic_only=True) if n >= 2 else []
    rows += _commutator_rows(qd, n, index)
    info = span_info(fld, rows, len(cycles))
    witnesses = [cycles[c] for c in info.free_coords] if want_witnesses else None
    return TracePiece(n, info.quotient_dim, witnesses)


def trace_piece(q: Quiver, n: int, fld: FieldSpec, want_witnesses: bool = True) -> TracePiece:
    """Dimension of (Lambda / [Lambda, Lambda])^n for the preprojective algebra."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    return _trace_piece(doubled_of(q), preprojective_relations(q), n, fld, want_witnesses)


def trace_piece_general(kind: str, obj, n: int, fld: FieldSpec,
                        want_witnesses: bool = True) -> TracePiece:
    """Trace piece of a named degreewise quotient.

    kind "preprojective" takes a Quiver; kind "koszul-dual-zigzag" takes a
    Graph and uses the sum-of-2-cycles relation.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    if kind == "preprojective":
        if not isinstance(obj, Quiver):
            raise ValueError("preprojective trace needs a Quiver")
        return trace_piece(obj, n, fld, want_witnesses)
    if kind == "koszul-dual-zigzag":
        if not isinstance(obj, Graph):
            raise ValueError("koszul-dual trace needs a Graph")
        qd = doubled_of_graph(obj)
        return _trace_piece(qd, zigzag_dual_relations(qd), n, fld, want_witnesses)
    raise ValueError("unknown quotient kind %r" % (kind,))


def cycle_class_in_trace_is_zero(q: Quiver, cycle: Path, fld: FieldSpec) -> bool:
    """Exact membership of a cycle in relations + commutators of its degree."""
    if not cycle.is_cycle():
        raise ValueError("not a cycle: %r" % (cycle,))
    qd = doubled_of(q)
    n = cycle.length
    cycles = all_cycles(qd, n)
    index = {p: i for i, p in enumerate(cycles)}
    if cycle not in index:
        raise ValueError("cycle does not belong to this quiver")
    rows = _relation_rows(qd, preprojective_relations(q), n, index, cyclic_only=True)
    rows += _commutator_rows(qd, n, index)
    ech = echelonize(fld, rows, len(cycles))
    return in_span(fld, ech, {index[cycle]: 1})

"""Slow, independent brute-force computations used only by the tests.

These pin expected values before the main pipelines are trusted.  They
deliberately share no code with the optimized modules beyond the field
type: paths are enumerated by a separate breadth-first routine, matrices
are plain row dicts over Fractions / residues, and elimination is the
textbook algorithm with no fraction-free tricks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .exactla import FieldSpec
from .quiver import Quiver
from .zigzag import ZigzagAlgebra


class OracleInfeasible(RuntimeError):
    """The request is too large for a brute-force computation."""


@dataclass
class OracleResult:
    quantity: str
    parameters: dict
    value: int
    method: str


def _row_reduce_rank(fld: FieldSpec, rows: list[dict[int, object]]) -> int:
    """Textbook elimination: repeatedly normalize a pivot and clear below."""
    p = fld.characteristic
    work = []
    for r in rows:
        if p == 0:
            rr = {c: Fraction(v) for c, v in r.items() if v != 0}
        else:
            rr = {c: v % p for c, v in r.items() if v % p}
        if rr:
            work.append(rr)
    rank = 0
    while work:
        lead = min(min(r) for r in work)
        pivot = next(r for r in work if min(r) == lead)
        work.remove(pivot)
        rank += 1
        inv = (Fraction(1) / pivot[lead]) if p == 0 else pow(pivot[lead], p - 2, p)
        if p == 0:
            pivot = {c: v * inv for c, v in pivot.items()}
        else:
            pivot = {c: (v * inv) % p for c, v in pivot.items()}
        nxt = []
        for r in work:
            if lead in r:
                f = r[lead]
                out = dict(r)
                for c, v in pivot.items():
                    w = out.get(c, 0) - f * v
                    if p != 0:
                        w %= p
                    if w:
                        out[c] = w
                    else:
                        out.pop(c, None)
                if out:
                    nxt.append(out)
            else:
                nxt.append(r)
        work = nxt
    return rank


def _doubled_arrows(q: Quiver) -> list[tuple[int, int]]:
    arrows = []
    for s, t in q.arrows:
        arrows.append((s, t))
        arrows.append((t, s))
    return arrows


def _walks(arrows: list[tuple[int, int]], vertex_count: int, n: int) -> list[tuple[tuple[int, ...], int, int]]:
    """All length-n composable arrow-index words, as (word, source, target)."""
    if n == 0:
        return [((), v, v) for v in range(1, vertex_count + 1)]
    level = [((k,), s, t) for k, (s, t) in enumerate(arrows)]
    for _ in range(n - 1):
        nxt = []
        for word, s, t in level:
            for k, (s2, t2) in enumerate(arrows):
                if s2 == t:
                    nxt.append((word + (k,), s, t2))
        level = nxt
    return level


def oracle_lambda_dim(q: Quiver, n: int, fld: FieldSpec) -> int:
    """dim of the degree-n preprojective piece, straight from the definition."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    arrows = _doubled_arrows(q)
    words = _walks(arrows, q.vertex_count, n)
    if len(words) > 200000:
        raise OracleInfeasible("too many words: %d" % len(words))
    index = {w: i for i, (w, _, _) in enumerate(words)}
    rows = []
    # relation at v: sum over base arrows from v of (a, a*) minus (a*, a) into v
    rel: dict[int, list[tuple[int, tuple[int, int]]]] = {v: [] for v in range(1, q.vertex_count + 1)}
    for k, (s, t) in enumerate(q.arrows):
        rel[s].append((1, (2 * k, 2 * k + 1)))
        rel[t].append((-1, (2 * k + 1, 2 * k)))
    for la in range(max(n - 1, 0)):
        lb = n - 2 - la
        if lb < 0:
            continue
        for worda, sa, ta in _walks(arrows, q.vertex_count, la):
            for wordb, sb, tb in _walks(arrows, q.vertex_count, lb):
                if sb != ta:
                    continue
                row: dict[int, object] = {}
                for coeff, (l1, l2) in rel[ta]:
                    col = index.get(worda + (l1, l2) + wordb)
                    if col is not None:
                        row[col] = row.get(col, 0) + coeff
                if row:
                    rows.append(row)
    return len(words) - _row_reduce_rank(fld, rows)


def oracle_trace_dim(q: Quiver, n: int, fld: FieldSpec) -> int:
    """dim of (Lambda/[Lambda,Lambda])^n from the full, uncompressed matrix."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    arrows = _doubled_arrows(q)
    words = _walks(arrows, q.vertex_count, n)
    if len(words) > 20000:
        raise OracleInfeasible("too many words: %d" % len(words))
    index = {w: i for i, (w, _, _) in enumerate(words)}
    rows = []
    rel: dict[int, list[tuple[int, tuple[int, int]]]] = {v: [] for v in range(1, q.vertex_count + 1)}
    for k, (s, t) in enumerate(q.arrows):
        rel[s].append((1, (2 * k, 2 * k + 1)))
        rel[t].append((-1, (2 * k + 1, 2 * k)))
    for la in range(max(n - 1, 0)):
        lb = n - 2 - la
        if lb < 0:
            continue
        for worda, sa, ta in _walks(arrows, q.vertex_count, la):
            for wordb, sb, tb in _walks(arrows, q.vertex_count, lb):
                if sb != ta:
                    continue
                row: dict[int, object] = {}
                for coeff, (l1, l2) in rel[ta]:
                    col = index.get(worda + (l1, l2) + wordb)
                    if col is not None:
                        row[col] = row.get(col, 0) + coeff
                if row:
                    rows.append(row)
    # all commutators [u, v] with |u| + |v| = n, including length-0 factors
    for lu in range(0, n + 1):
        lv = n - lu
        for wordu, su, tu in _walks(arrows, q.vertex_count, lu):
            for wordv, sv, tv in _walks(arrows, q.vertex_count, lv):
                row = {}
                if tu == sv:
                    col = index[wordu + wordv]
                    row[col] = row.get(col, 0) + 1
                if tv == su:
                    col = index[wordv + wordu]
                    row[col] = row.get(col, 0) - 1
                row = {c: v for c, v in row.items() if v}
                if row:
                    rows.append(row)
    return len(words) - _row_reduce_rank(fld, rows)


def oracle_hh_unreduced(alg: ZigzagAlgebra, p: int, q: int) -> int:
    """HH^{p,q} from the full cochain complex over the ground field.

    Tensor powers are over the field itself (no bimodule reduction, no
    composability): maps from all basis words of length p+q with output
    length = input length - q, differentiated by the usual rule.
    """
    n = p + q
    if n < 0:
        return 0
    dim = alg.dim
    if dim ** (n + 1) > 4 * 10 ** 5:
        raise OracleInfeasible("unreduced complex too large: %d^%d words" % (dim, n + 1))

    def basis(tensor_power: int):
        out = []
        words = [()]
        for _ in range(tensor_power):
            words = [w + (i,) for w in words for i in range(dim)]
        for w in words:
            want = sum(alg.degrees[i] for i in w) - q
            for z in range(dim):
                if alg.degrees[z] == want:
                    out.append((w, z))
        return out

    def delta_cols(tensor_power: int):
        source = basis(tensor_power)
        target = basis(tensor_power + 1)
        tindex = {b: i for i, b in enumerate(target)}
        cols = []
        for w, z in source:
            col: dict[int, int] = {}

            def put(word, out, coeff):
                if out is None:
                    return
                i = tindex.get((word, out))
                if i is None:
                    return
                s = col.get(i, 0) + coeff
                if s:
                    col[i] = s
                else:
                    col.pop(i, None)

            m = len(w)
            if m == 0:
                for x in range(dim):
                    put((x,), alg.mult(x, z), 1)
                    put((x,), alg.mult(z, x), -1)
            else:
                last_sign = -1 if (m + 1) % 2 else 1
                for x in range(dim):
                    put((x,) + w, alg.mult(x, z), 1)
                    put(w + (x,), alg.mult(z, x), last_sign)
                for k in range(m):
                    sign = -1 if (k + 1) % 2 else 1
                    for u in range(dim):
                        for v in range(dim):
                            if alg.mult(u, v) == w[k]:
                                put(w[:k] + (u, v) + w[k + 1:], z, sign)
            cols.append(col)
        return source, target, cols

    source, target, out_cols = delta_cols(n)
    rank_out = _row_reduce_rank(alg.field, [c for c in out_cols if c])
    rank_in = 0
    if n >= 1 and p >= 1:
        _, _, in_cols = delta_cols(n - 1)
        rank_in = _row_reduce_rank(alg.field, [c for c in in_cols if c])
    return len(source) - rank_out - rank_in

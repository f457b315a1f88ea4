"""Zigzag algebras and their bigraded Hochschild cohomology.

The zigzag algebra of a connected loop-free, multiedge-free graph has
basis: one idempotent e_i per vertex (degree 0), the doubled arrows
(degree 1), and one 2-cycle class c_i per vertex (degree 2).  Products
of total degree > 2 vanish, a a* = c at the source of a, and every
other composable arrow product is zero.  For the one-vertex graph this
is k[x]/(x^2) with x in degree 2; for the one-edge graph the two
2-cycle classes sit at different vertices and stay distinct.  Degree-k
elements carry bidegree (k, -k).

Hochschild cohomology is computed from the cochain complex relative to
the span of the idempotents: because every homogeneous element sits in
bidegree (k, -k), the (p, q) piece reduces to bimodule maps out of
exactly p+q tensor factors from the positive-degree part, with output
length = input length - q.  The differential is

    (df)(a_1,..,a_{n+1}) = a_1 f(a_2,..) + sum_j (-1)^j f(.., a_j a_{j+1}, ..)
                           + (-1)^{n+1} f(a_1,..,a_n) a_{n+1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .exactla import ExactMatrix, FieldSpec, Scalar, span_info
from .quiver import Graph
from .reports import HHReport


@dataclass
class ZigzagAlgebra:
    """The zigzag algebra of a graph, as an explicit multiplication table."""

    graph: Graph
    field: FieldSpec
    names: list[str]
    kinds: list[str]        # "e" | "arrow" | "cycle"
    degrees: list[int]
    src: list[int]
    tgt: list[int]
    table: dict[tuple[int, int], int]
    e_index: dict[int, int]
    arrow_index: dict[tuple[int, int], int]
    cycle_index: dict[int, int]
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def positive(self) -> list[int]:
        return [i for i in range(self.dim) if self.degrees[i] > 0]

    def mult(self, i: int, j: int) -> Optional[int]:
        """Product of two basis elements: a basis index (coefficient 1) or None."""
        return self.table.get((i, j))

    def dim_in_degree(self, k: int) -> int:
        return sum(1 for d in self.degrees if d == k)

    def basis_name(self, i: int) -> str:
        return self.names[i]

    def index_of(self, name: str) -> int:
        return self.names.index(name)

    def splits(self, i: int) -> list[tuple[int, int]]:
        """Factorizations of a positive basis element into two positive ones."""
        hit = self._cache.get(("splits", i))
        if hit is None:
            hit = [(u, v) for (u, v), w in sorted(self.table.items())
                   if w == i and self.degrees[u] > 0 and self.degrees[v] > 0]
            self._cache[("splits", i)] = hit
        return hit


def build_zigzag(g: Graph, fld: FieldSpec) -> ZigzagAlgebra:
    """Basis and multiplication table of the zigzag algebra of g."""
    n = g.vertex_count
    names: list[str] = []
    kinds: list[str] = []
    degrees: list[int] = []
    src: list[int] = []
    tgt: list[int] = []
    e_index: dict[int, int] = {}
    arrow_index: dict[tuple[int, int], int] = {}
    cycle_index: dict[int, int] = {}

    for v in range(1, n + 1):
        e_index[v] = len(names)
        names.append("e%d" % v)
        kinds.append("e")
        degrees.append(0)
        src.append(v)
        tgt.append(v)
    for k, (i, j) in enumerate(g.edges):
        arrow_index[(i, j)] = len(names)
        names.append("a%d" % (k + 1))
        kinds.append("arrow")
        degrees.append(1)
        src.append(i)
        tgt.append(j)
        arrow_index[(j, i)] = len(names)
        names.append("a%d*" % (k + 1))
        kinds.append("arrow")
        degrees.append(1)
        src.append(j)
        tgt.append(i)
    for v in range(1, n + 1):
        cycle_index[v] = len(names)
        names.append("c%d" % v)
        kinds.append("cycle")
        degrees.append(2)
        src.append(v)
        tgt.append(v)

    dim = len(names)
    table: dict[tuple[int, int], int] = {}
    for i in range(dim):
        for j in range(dim):
            if tgt[i] != src[j]:
                continue
            di, dj = degrees[i], degrees[j]
            if di == 0:
                table[(i, j)] = j
            elif dj == 0:
                table[(i, j)] = i
            elif di == 1 and dj == 1:
                # a b is the 2-cycle class at src(a) exactly when b = a*
                if src[i] == tgt[j] and names[j] == _star_name(names[i]):
                    table[(i, j)] = cycle_index[src[i]]
            # total degree >= 3 vanishes

    alg = ZigzagAlgebra(g, fld, names, kinds, degrees, src, tgt, table,
                        e_index, arrow_index, cycle_index)
    _check_associativity(alg)
    return alg


def _star_name(name: str) -> str:
    return name[:-1] if name.endswith("*") else name + "*"


def _check_associativity(alg: ZigzagAlgebra):
    dim = alg.dim
    for i in range(dim):
        for j in range(dim):
            ij = alg.mult(i, j)
            for k in range(dim):
                jk = alg.mult(j, k)
                left = alg.mult(ij, k) if ij is not None else None
                right = alg.mult(i, jk) if jk is not None else None
                if left != right:
                    raise AssertionError("non-associative table at %s,%s,%s" % (
                        alg.names[i], alg.names[j], alg.names[k]))


# ---------------------------------------------------------------------------
# the reduced cochain complex
# ---------------------------------------------------------------------------

Word = tuple[int, ...]


def _words(alg: ZigzagAlgebra, n: int) -> list[Word]:
    """Composable length-n words over the positive-degree basis, lex order."""
    hit = alg._cache.get(("words", n))
    if hit is not None:
        return hit
    if n == 0:
        out: list[Word] = [()]
    else:
        pos = alg.positive
        by_source: dict[int, list[int]] = {}
        for i in pos:
            by_source.setdefault(alg.src[i], []).append(i)
        out = []

        def extend(word: list[int], at: int):
            if len(word) == n:
                out.append(tuple(word))
                return
            for i in by_source.get(at, []):
                word.append(i)
                extend(word, alg.tgt[i])
                word.pop()

        for i in pos:
            extend([i], alg.tgt[i])
    alg._cache[("words", n)] = out
    return out


def _word_degree(alg: ZigzagAlgebra, w: Word) -> int:
    return sum(alg.degrees[i] for i in w)


def _outputs(alg: ZigzagAlgebra, s: int, t: int, deg: int) -> list[int]:
    if deg == 0:
        return [alg.e_index[s]] if s == t else []
    if deg == 1:
        i = alg.arrow_index.get((s, t))
        return [i] if i is not None else []
    if deg == 2:
        return [alg.cycle_index[s]] if s == t else []
    return []


def cochain_basis(alg: ZigzagAlgebra, p: int, q: int) -> list[tuple[Word, int]]:
    """Basis of the reduced (p, q) cochain space: (input word, output) pairs.

    A (p, q) cochain takes exactly p+q tensor factors from the positive
    part and outputs an element of length (input length) - q matching the
    word's endpoints.  For zero tensor factors the inputs are the
    idempotents, encoded as the empty word with the output carrying the
    vertex.
    """
    n = p + q
    if n < 0:
        return []
    key = ("cbasis", p, q)
    hit = alg._cache.get(key)
    if hit is not None:
        return hit
    basis: list[tuple[Word, int]] = []
    if n == 0:
        for v in range(1, alg.graph.vertex_count + 1):
            for z in _outputs(alg, v, v, -q):
                basis.append(((), z))
    else:
        for w in _words(alg, n):
            deg = _word_degree(alg, w) - q
            if 0 <= deg <= 2:
                s = alg.src[w[0]]
                t = alg.tgt[w[-1]]
                for z in _outputs(alg, s, t, deg):
                    basis.append((w, z))
    alg._cache[key] = basis
    return basis


def _delta_elementary(alg: ZigzagAlgebra, w: Word, z: int,
                      target_index: dict[tuple[Word, int], int]) -> dict[int, int]:
    """Image of the elementary cochain (w -> z) under the differential."""
    col: dict[int, int] = {}

    def put(word: Word, out: Optional[int], coeff: int):
        if out is None:
            return
        i = target_index.get((word, out))
        if i is None:
            return
        s = col.get(i, 0) + coeff
        if s:
            col[i] = s
        else:
            col.pop(i, None)

    n = len(w)
    pos = alg.positive
    if n == 0:
        v = alg.src[z]
        for x in pos:
            if alg.tgt[x] == v:
                put((x,), alg.mult(x, z), 1)
            if alg.src[x] == v:
                put((x,), alg.mult(z, x), -1)
        return col

    head = alg.src[w[0]]
    tail = alg.tgt[w[-1]]
    last_sign = -1 if (n + 1) % 2 else 1
    for x in pos:
        if alg.tgt[x] == head:
            put((x,) + w, alg.mult(x, z), 1)
        if alg.src[x] == tail:
            put(w + (x,), alg.mult(z, x), last_sign)
    for k in range(n):
        sign = -1 if (k + 1) % 2 else 1
        for (u, v) in alg.splits(w[k]):
            put(w[:k] + (u, v) + w[k + 1:], z, sign)
    return col


def delta_columns(alg: ZigzagAlgebra, p: int, q: int) -> tuple[
        list[tuple[Word, int]], list[tuple[Word, int]], list[dict[int, int]]]:
    """(source basis, target basis, columns) of d: C^{p,q} -> C^{p+1,q}."""
    source = cochain_basis(alg, p, q)
    target = cochain_basis(alg, p + 1, q)
    tindex = {b: i for i, b in enumerate(target)}
    cols = [_delta_elementary(alg, w, z, tindex) for (w, z) in source]
    return source, target, cols


def hochschild_dim(alg: ZigzagAlgebra, p: int, q: int,
                   want_witnesses: bool = False) -> HHReport:
    """dim HH^{p,q} of the zigzag algebra via the reduced complex."""
    if p < 0:
        raise ValueError("cohomological degree must be >= 0")
    basis = cochain_basis(alg, p, q)
    if not basis:
        return HHReport(p, q, "zigzag", 0, () if want_witnesses else None)
    _, _, out_cols = delta_columns(alg, p, q)
    target_dim = len(cochain_basis(alg, p + 1, q))
    rank_out = span_info(alg.field, out_cols, target_dim).rank
    rank_in = 0
    in_cols: list[dict[int, int]] = []
    if p >= 1 and p - 1 + q >= 0:
        _, _, in_cols = delta_columns(alg, p - 1, q)
        rank_in = span_info(alg.field, in_cols, len(basis)).rank
    dimension = len(basis) - rank_out - rank_in
    reps = None
    if want_witnesses:
        reps = tuple(_representative_names(alg, p, q, basis, out_cols, in_cols)[:dimension])
    return HHReport(p, q, "zigzag", dimension, reps)


def _representative_names(alg, p, q, basis, out_cols, in_cols):
    """Names of cocycle representatives spanning the cohomology."""
    fld = alg.field
    out_matrix = ExactMatrix.from_columns(fld, out_cols, len(cochain_basis(alg, p + 1, q)))
    kernel = out_matrix.kernel_basis()
    vectors = list(in_cols)
    names = []
    base_rank = span_info(fld, vectors, len(basis)).rank
    for kv in kernel:
        cand = {i: v for i, v in enumerate(kv) if v != 0}
        vectors.append(cand)
        r = span_info(fld, vectors, len(basis)).rank
        if r > base_rank:
            base_rank = r
            support = sorted(cand)
            label = "+".join("%s|%s" % (" ".join(alg.names[i] for i in w) or "1", alg.names[z])
                             for w, z in (basis[i] for i in support))
            names.append(label)
        else:
            vectors.pop()
    return names


# ---------------------------------------------------------------------------
# explicit cochains
# ---------------------------------------------------------------------------


@dataclass
class HochschildCochain:
    """A (p, q) cochain: linear map on composable positive-basis words.

    values maps an input word to the output expressed in the basis of the
    algebra; every (word, output) key must satisfy the endpoint and Adams
    constraints of the (p, q) cochain space.
    """

    algebra: ZigzagAlgebra
    p: int
    q: int
    values: dict[Word, dict[int, Scalar]]

    def __post_init__(self):
        alg = self.algebra
        fld = alg.field
        allowed = set(cochain_basis(alg, self.p, self.q))
        clean: dict[Word, dict[int, Scalar]] = {}
        for w, outs in self.values.items():
            w = tuple(w)
            for z, coeff in outs.items():
                c = fld.element(coeff)
                if fld.is_zero(c):
                    continue
                if (w, z) not in allowed:
                    raise ValueError("value (%r -> %s) violates the (p,q)=(%d,%d) constraints"
                                     % (w, alg.names[z], self.p, self.q))
                clean.setdefault(w, {})[z] = c
        self.values = clean

    def is_zero(self) -> bool:
        return not self.values

    def vector(self) -> dict[int, Scalar]:
        basis = cochain_basis(self.algebra, self.p, self.q)
        index = {b: i for i, b in enumerate(basis)}
        vec = {}
        for w, outs in self.values.items():
            for z, c in outs.items():
                vec[index[(w, z)]] = c
        return vec

    def scale(self, coeff) -> "HochschildCochain":
        fld = self.algebra.field
        c = fld.element(coeff)
        vals = {w: {z: fld.mul(v, c) for z, v in outs.items()}
                for w, outs in self.values.items()}
        return HochschildCochain(self.algebra, self.p, self.q, vals)


def zero_cochain(alg: ZigzagAlgebra, p: int, q: int) -> HochschildCochain:
    return HochschildCochain(alg, p, q, {})


def cochain_differential(c: HochschildCochain) -> HochschildCochain:
    """The (p+1, q) cochain obtained by the standard alternating-sum rule."""
    alg = c.algebra
    fld = alg.field
    target = cochain_basis(alg, c.p + 1, c.q)
    tindex = {b: i for i, b in enumerate(target)}
    acc: dict[int, Scalar] = {}
    for w, outs in c.values.items():
        for z, coeff in outs.items():
            for i, v in _delta_elementary(alg, w, z, tindex).items():
                s = fld.add(acc.get(i, fld.zero()), fld.mul(fld.element(v), coeff))
                if fld.is_zero(s):
                    acc.pop(i, None)
                else:
                    acc[i] = s
    values: dict[Word, dict[int, Scalar]] = {}
    for i, v in acc.items():
        w, z = target[i]
        values.setdefault(w, {})[z] = v
    return HochschildCochain(alg, c.p + 1, c.q, values)


def is_cocycle(c: HochschildCochain) -> bool:
    return cochain_differential(c).is_zero()


def is_coboundary(c: HochschildCochain) -> bool:
    """Exact membership of c in the image of the incoming differential."""
    alg = c.algebra
    fld = alg.field
    basis = cochain_basis(alg, c.p, c.q)
    vec = c.vector()
    if not vec:
        return True
    if c.p < 1:
        return False
    _, _, in_cols = delta_columns(alg, c.p - 1, c.q)
    matrix = ExactMatrix.from_columns(fld, in_cols, len(basis))
    dense = [vec.get(i, fld.zero()) for i in range(len(basis))]
    return matrix.solve(dense) is not None

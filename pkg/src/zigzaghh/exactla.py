"""Exact linear algebra over Q and prime fields F_p.

Every rank, kernel, cokernel and membership question in this package is
answered here with exact arithmetic: arbitrary-precision rationals in
characteristic 0, reduced residues mod p otherwise.  Matrices are kept
sparse (one dict per row); elimination over Q is fraction-free, i.e. a
cross-multiplication followed by a gcd division, so rows stay integral
and coefficient growth stays tame on the path-algebra matrices we feed
in.  Pivot columns are always taken in increasing column order, which
makes ranks, kernels and quotient representatives reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Union

Scalar = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means Q, a prime p means F_p."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c < 0 or (c != 0 and not _is_prime(c)):
            raise ValueError("characteristic must be 0 or a prime, got %r" % (c,))

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def element(self, value) -> Scalar:
        """Coerce an int or Fraction to a canonical field element."""
        if self.characteristic == 0:
            return value if isinstance(value, Fraction) else Fraction(value)
        return int(value) % self.characteristic

    def zero(self) -> Scalar:
        return self.element(0)

    def one(self) -> Scalar:
        return self.element(1)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic == 0:
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic == 0:
            return a - b
        return (a - b) % self.characteristic

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic == 0:
            return a * b
        return (a * b) % self.characteristic

    def neg(self, a: Scalar) -> Scalar:
        if self.characteristic == 0:
            return -a
        return (-a) % self.characteristic

    def inv(self, a: Scalar) -> Scalar:
        if self.characteristic == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1) / Fraction(a)
        return pow(int(a), self.characteristic - 2, self.characteristic)

    def is_zero(self, a: Scalar) -> bool:
        return a == 0 if self.characteristic == 0 else a % self.characteristic == 0


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


# ---------------------------------------------------------------------------
# sparse echelon core
#
# Rows are dicts {column: nonzero entry}.  Over F_p entries are residues;
# over Q they are ints (rows get scaled integral on input, and normalized
# by their gcd after each elimination step).  Incoming rows are reduced
# against the installed pivots and then claim their leading column, so
# each pivot is the first nonzero available in column order; the pivot
# profile is the rank profile of the row space and does not depend on
# the input ordering.
# ---------------------------------------------------------------------------


class Echelon:
    """Result of forward elimination: echelon rows plus the pivot profile."""

    def __init__(self, field: FieldSpec, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: list[dict[int, int]] = []   # echelon rows, pivot order
        self.pivot_cols: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)

    def free_cols(self) -> list[int]:
        piv = set(self.pivot_cols)
        return [c for c in range(self.ncols) if c not in piv]


def _scale_integral(row: dict) -> dict[int, int]:
    """Clear denominators and divide by the content, keeping exactness."""
    if not row:
        return {}
    lcm = 1
    for v in row.values():
        if isinstance(v, Fraction):
            d = v.denominator
            lcm = lcm * d // gcd(lcm, d)
    out = {c: int(v * lcm) for c, v in row.items()}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return {c: v for c, v in out.items() if v}


def echelonize(field: FieldSpec, rows: Iterable[dict], ncols: int) -> Echelon:
    """Reduce a spanning set of row vectors to (sparse) row echelon form."""
    p = field.characteristic
    ech = Echelon(field, ncols)
    # pivot_at[col] -> index into ech.rows
    pivot_at: dict[int, int] = {}
    work: list[dict[int, int]] = []
    for row in rows:
        if p == 0:
            r = _scale_integral(row)
        else:
            r = {c: v % p for c, v in row.items() if v % p}
        if r:
            work.append(r)

    # eliminate each row against the current echelon, then install it
    for r in work:
        while r:
            c = min(r)
            hit = pivot_at.get(c)
            if hit is None:
                break
            pr = ech.rows[hit]
            if p == 0:
                a, b = pr[c], r[c]
                g = gcd(a, b)
                ma, mb = a // g, b // g
                new = {}
                for col, v in r.items():
                    new[col] = v * ma
                for col, v in pr.items():
                    w = new.get(col, 0) - v * mb
                    if w:
                        new[col] = w
                    elif col in new:
                        del new[col]
                g2 = 0
                for v in new.values():
                    g2 = gcd(g2, v)
                if g2 > 1:
                    new = {col: v // g2 for col, v in new.items()}
                r = new
            else:
                f = (r[c] * pow(pr[c], p - 2, p)) % p
                new = dict(r)
                for col, v in pr.items():
                    w = (new.get(col, 0) - f * v) % p
                    if w:
                        new[col] = w
                    elif col in new:
                        del new[col]
                r = new
        if r:
            c = min(r)
            pivot_at[c] = len(ech.rows)
            ech.rows.append(r)
            ech.pivot_cols.append(c)

    # sort echelon by pivot column so back-substitution can walk upward
    order = sorted(range(len(ech.rows)), key=lambda i: ech.pivot_cols[i])
    ech.rows = [ech.rows[i] for i in order]
    ech.pivot_cols = [ech.pivot_cols[i] for i in order]
    return ech


@dataclass
class SpanInfo:
    """Rank and pivot profile of a spanning set inside a coordinate space."""

    ambient_dim: int
    rank: int
    pivot_coords: list[int]
    free_coords: list[int]
    echelon: Echelon = field(repr=False, default=None)

    @property
    def quotient_dim(self) -> int:
        return self.ambient_dim - self.rank


def span_info(fld: FieldSpec, vectors: Iterable[dict], ambient_dim: int) -> SpanInfo:
    """Echelon profile of span(vectors) in a space of the given dimension.

    The free coordinates are the canonical quotient representatives: the
    standard basis vectors at those coordinates project to a basis of
    ambient/span.
    """
    ech = echelonize(fld, vectors, ambient_dim)
    return SpanInfo(ambient_dim, ech.rank, list(ech.pivot_cols), ech.free_cols(), ech)


def in_span(fld: FieldSpec, ech: Echelon, vector: dict) -> bool:
    """Exact membership of a vector in an echelonized row space."""
    p = fld.characteristic
    if p == 0:
        r = _scale_integral(vector)
    else:
        r = {c: v % p for c, v in vector.items() if v % p}
    pivot_at = {c: i for i, c in enumerate(ech.pivot_cols)}
    while r:
        c = min(r)
        hit = pivot_at.get(c)
        if hit is None:
            return False
        pr = ech.rows[hit]
        if p == 0:
            a, b = pr[c], r[c]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            new = {}
            for col, v in r.items():
                new[col] = v * ma
            for col, v in pr.items():
                w = new.get(col, 0) - v * mb
                if w:
                    new[col] = w
                elif col in new:
                    del new[col]
            r = new
        else:
            f = (r[c] * pow(pr[c], p - 2, p)) % p
            new = dict(r)
            for col, v in pr.items():
                w = (new.get(col, 0) - f * v) % p
                if w:
                    new[col] = w
                elif col in new:
                    del new[col]
            r = new
    return True


class ExactMatrix:
    """A rows x cols matrix over a FieldSpec, stored as sparse row dicts."""

    def __init__(self, fld: FieldSpec, nrows: int, ncols: int,
                 rows: Optional[list[dict]] = None):
        self.field = fld
        self.nrows = nrows
        self.ncols = ncols
        self.rows: list[dict[int, Scalar]] = [dict() for _ in range(nrows)] if rows is None else rows
        if len(self.rows) != nrows:
            raise ValueError("row count mismatch")
        self._ech: Optional[Echelon] = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_dense(cls, fld: FieldSpec, entries: list[list]) -> "ExactMatrix":
        nrows = len(entries)
        ncols = len(entries[0]) if nrows else 0
        rows = []
        for er in entries:
            if len(er) != ncols:
                raise ValueError("ragged rows")
            row = {}
            for j, v in enumerate(er):
                fv = fld.element(v)
                if not fld.is_zero(fv):
                    row[j] = fv
            rows.append(row)
        return cls(fld, nrows, ncols, rows)

    @classmethod
    def from_rows(cls, fld: FieldSpec, rows: list[dict], ncols: int) -> "ExactMatrix":
        return cls(fld, len(rows), ncols, [dict(r) for r in rows])

    @classmethod
    def from_columns(cls, fld: FieldSpec, cols: list[dict], nrows: int) -> "ExactMatrix":
        rows: list[dict] = [dict() for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, v in col.items():
                rows[i][j] = v
        return cls(fld, nrows, len(cols), rows)

    @classmethod
    def identity(cls, fld: FieldSpec, n: int) -> "ExactMatrix":
        return cls(fld, n, n, [{i: fld.one()} for i in range(n)])

    @classmethod
    def zero(cls, fld: FieldSpec, nrows: int, ncols: int) -> "ExactMatrix":
        return cls(fld, nrows, ncols)

    # -- basics --------------------------------------------------------

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i].get(j, self.field.zero())

    def transpose(self) -> "ExactMatrix":
        rows: list[dict] = [dict() for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                rows[j][i] = v
        return ExactMatrix(self.field, self.ncols, self.nrows, rows)

    def mul_vector(self, x: list[Scalar]) -> list[Scalar]:
        f = self.field
        out = []
        for row in self.rows:
            s = f.zero()
            for j, v in row.items():
                if x[j] != 0:
                    s = f.add(s, f.mul(f.element(v), x[j]))
            out.append(s)
        return out

    def _echelon(self) -> Echelon:
        if self._ech is None:
            self._ech = echelonize(self.field, self.rows, self.ncols)
        return self._ech

    # -- the four operations -------------------------------------------

    def rank(self) -> int:
        return self._echelon().rank

    def kernel_basis(self) -> list[list[Scalar]]:
        """Canonical basis of the right null space (one vector per free column)."""
        ech = self._echelon()
        f = self.field
        basis = []
        for fc in ech.free_cols():
            # solve ech.x = 0 with the free coordinate pinned to 1
            x: dict[int, Scalar] = {fc: f.one()}
            for i in range(len(ech.rows) - 1, -1, -1):
                row = ech.rows[i]
                c = ech.pivot_cols[i]
                s = f.zero()
                for col, v in row.items():
                    if col != c and col in x and x[col] != 0:
                        s = f.add(s, f.mul(f.element(v), x[col]))
                if f.is_zero(s):
                    continue
                if f.characteristic == 0:
                    x[c] = -Fraction(s) / Fraction(row[c])
                else:
                    x[c] = (-s * pow(row[c], f.characteristic - 2, f.characteristic)) % f.characteristic
            basis.append([x.get(c, f.zero()) for c in range(self.ncols)])
        return basis

    def cokernel_dim(self) -> int:
        """Dimension of target/image for a map into a space of dim = nrows."""
        return self.nrows - self.rank()

    def solve(self, b: list) -> Optional[list[Scalar]]:
        """Some x with Mx = b, or None when b is outside the column space."""
        if len(b) != self.nrows:
            raise ValueError("dimension mismatch: len(b)=%d, nrows=%d" % (len(b), self.nrows))
        f = self.field
        bcol = self.ncols  # augmented column index
        aug = []
        for i, row in enumerate(self.rows):
            r = dict(row)
            bv = f.element(b[i])
            if not f.is_zero(bv):
                r[bcol] = bv
            aug.append(r)
        ech = echelonize(f, aug, self.ncols + 1)
        if bcol in ech.pivot_cols:
            return None  # an echelon row is supported on b alone: inconsistent
        # back-substitute with free variables set to zero
        x: dict[int, Scalar] = {}
        for i in range(len(ech.rows) - 1, -1, -1):
            row = ech.rows[i]
            c = ech.pivot_cols[i]
            s = f.neg(f.element(row.get(bcol, 0)))
            for col, v in row.items():
                if col != c and col != bcol and col in x and x[col] != 0:
                    s = f.add(s, f.mul(f.element(v), x[col]))
            s = f.neg(s)
            if f.characteristic == 0:
                x[c] = Fraction(s) / Fraction(row[c]) if s else Fraction(0)
            else:
                x[c] = (s * pow(row[c], f.characteristic - 2, f.characteristic)) % f.characteristic
        return [x.get(c, f.zero()) for c in range(self.ncols)]

    def image_profile(self) -> SpanInfo:
        """Pivot profile of the column space inside the target coordinates.

        The free coordinates index standard basis vectors of the target
        that project to a basis of the cokernel.
        """
        cols: list[dict] = [dict() for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                cols[j][i] = v
        return span_info(self.field, cols, self.nrows)

    def __repr__(self):
        return "ExactMatrix(%dx%d over char %d)" % (self.nrows, self.ncols, self.field.characteristic)

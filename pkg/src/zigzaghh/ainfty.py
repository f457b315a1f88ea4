"""Partial A-infinity structures on zigzag algebras and Stasheff checking.

A candidate is a graded algebra together with finitely many higher
multiplications m_n (n >= 3) of cohomological degree 2 - n, given on
composable positive-basis words; m_1 = 0 and m_2 is the algebra product.
check_stasheff evaluates, for each total arity n,

    sum over r + s + t = n of (-1)^(r + s t) m_{r+1+t}(id^r (x) m_s (x) id^t)

on every basis word and reports exact violations.  Multiplications absent
from the candidate evaluate as zero; arities whose identity involves an
absent m_k above the highest specified product are flagged as conditional
(the check is then relative to those products really being zero).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactla import FieldSpec, Scalar
from .quiver import catalog
from .zigzag import (HochschildCochain, Word, ZigzagAlgebra, _word_degree, _words,
                     build_zigzag)


@dataclass
class AInftyCandidate:
    """A zigzag algebra with finitely many higher multiplications."""

    algebra: ZigzagAlgebra
    products: dict[int, dict[Word, dict[int, Scalar]]]

    def __post_init__(self):
        alg = self.algebra
        fld = alg.field
        clean: dict[int, dict[Word, dict[int, Scalar]]] = {}
        for n, table in self.products.items():
            if n < 3:
                raise ValueError("higher multiplications start at arity 3")
            for w, outs in table.items():
                w = tuple(w)
                if len(w) != n:
                    raise ValueError("m_%d value keyed by a length-%d word" % (n, len(w)))
                for a, b in zip(w, w[1:]):
                    if alg.tgt[a] != alg.src[b]:
                        raise ValueError("m_%d input word %r is not composable" % (n, w))
                want_deg = _word_degree(alg, w) + 2 - n
                for z, coeff in outs.items():
                    c = fld.element(coeff)
                    if fld.is_zero(c):
                        continue
                    if alg.degrees[z] != want_deg:
                        raise ValueError(
                            "m_%d output %s has degree %d, expected %d"
                            % (n, alg.names[z], alg.degrees[z], want_deg))
                    if alg.src[z] != alg.src[w[0]] or alg.tgt[z] != alg.tgt[w[-1]]:
                        raise ValueError("m_%d output %s does not match the word endpoints"
                                         % (n, alg.names[z]))
                    clean.setdefault(n, {}).setdefault(w, {})[z] = c
        self.products = clean

    def lowest_arity(self) -> int | None:
        present = sorted(n for n, t in self.products.items() if t)
        return present[0] if present else None

    def max_specified(self) -> int:
        return max(self.products.keys(), default=2)

    def scale(self, coeff) -> "AInftyCandidate":
        fld = self.algebra.field
        c = fld.element(coeff)
        prods = {n: {w: {z: fld.mul(v, c) for z, v in outs.items()}
                     for w, outs in table.items()}
                 for n, table in self.products.items()}
        return AInftyCandidate(self.algebra, prods)


@dataclass
class StasheffViolation:
    arity: int
    word: tuple[str, ...]
    defect: dict[str, Scalar]


@dataclass
class StasheffReport:
    """Exact pass/fail per arity, with witnesses for every violation."""

    max_arity: int
    violations: list[StasheffViolation] = field(default_factory=list)
    conditional_arities: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def _apply(candidate: AInftyCandidate, k: int, word: Word) -> dict[int, Scalar]:
    """m_k on a basis word: the product for k = 2, a table lookup above."""
    alg = candidate.algebra
    if k == 1:
        return {}
    if k == 2:
        z = alg.mult(word[0], word[1])
        return {z: alg.field.one()} if z is not None else {}
    table = candidate.products.get(k)
    if not table:
        return {}
    return table.get(word, {})


def _full_words(alg: ZigzagAlgebra, n: int) -> list[Word]:
    """Composable words over the whole basis, idempotents included."""
    by_source: dict[int, list[int]] = {}
    for i in range(alg.dim):
        by_source.setdefault(alg.src[i], []).append(i)
    out: list[Word] = []

    def extend(word: list[int], at: int):
        if len(word) == n:
            out.append(tuple(word))
            return
        for i in by_source.get(at, []):
            word.append(i)
            extend(word, alg.tgt[i])
            word.pop()

    for i in range(alg.dim):
        extend([i], alg.tgt[i])
    return out


def check_stasheff(candidate: AInftyCandidate, max_arity: int) -> StasheffReport:
    """Evaluate the Stasheff identities exactly on every basis word.

    Arity 3 is pure associativity of the product and is evaluated over
    the full basis, idempotents included (on positive words alone every
    triple product is killed by the degree-2 truncation, so defects only
    show against the idempotents).  Higher arities involve the higher
    multiplications, which live on the positive part, and are evaluated
    there.
    """
    if max_arity < 2:
        raise ValueError("need max_arity >= 2")
    alg = candidate.algebra
    fld = alg.field
    report = StasheffReport(max_arity)
    max_specified = candidate.max_specified()

    for n in range(2, max_arity + 1):
        involved_absent = set()
        for s in range(2, n):
            u = n + 1 - s
            if u < 2:
                continue
            for k in (s, u):
                if k >= 3 and k not in candidate.products and k > max_specified:
                    involved_absent.add(k)
        if involved_absent:
            report.conditional_arities.append(n)

        pool = _full_words(alg, n) if n == 3 else _words(alg, n)
        for word in pool:
            defect: dict[int, Scalar] = {}
            for r in range(n):
                for s in range(1, n - r + 1):
                    t = n - r - s
                    u = r + 1 + t
                    if s == 1 or u == 1:
                        continue  # m_1 = 0 kills the term
                    inner = _apply(candidate, s, word[r:r + s])
                    if not inner:
                        continue
                    sign = -1 if (r + s * t) % 2 else 1
                    for z, cz in inner.items():
                        outer_word = word[:r] + (z,) + word[r + s:]
                        for y, cy in _apply(candidate, u, outer_word).items():
                            val = fld.mul(cz, cy)
                            if sign < 0:
                                val = fld.neg(val)
                            acc = fld.add(defect.get(y, fld.zero()), val)
                            if fld.is_zero(acc):
                                defect.pop(y, None)
                            else:
                                defect[y] = acc
            if defect:
                report.violations.append(StasheffViolation(
                    n, tuple(alg.names[i] for i in word),
                    {alg.names[y]: v for y, v in sorted(defect.items())}))
    return report


def class_of(candidate: AInftyCandidate, n: int) -> HochschildCochain:
    """Repackage the lowest higher product m_n as a (2, n-2) cochain.

    Feeding the result to the zigzag cocycle / coboundary tests decides
    first-order (non)triviality of the deformation.
    """
    lowest = candidate.lowest_arity()
    if lowest is not None and lowest < n:
        raise ValueError("m_%d is not the lowest nonzero higher product (m_%d is)" % (n, lowest))
    table = candidate.products.get(n, {})
    values = {w: dict(outs) for w, outs in table.items()}
    return HochschildCochain(candidate.algebra, 2, n - 2, values)


def extended_d4_m4(fld: FieldSpec = FieldSpec(0), scale: Scalar = 1) -> AInftyCandidate:
    """The explicit m_4 deformation of the zigzag algebra of extended D4.

    The defining length-4 cycle runs bottom leaf -> hub -> leaf 1 -> hub
    -> bottom leaf; m_4 sends each of its four cyclic rotations to the
    2-cycle class at the rotation's base vertex and kills every other
    basis word.  Consecutive rotations carry opposite signs: rotating a
    degree-1 letter past the other three is a Koszul sign of (-1)^3, and
    with the differential convention pinned in the zigzag module the
    unsigned sum of the four values would be a coboundary (each value on
    its own, and this alternating sum, are not).
    """
    g = catalog("D~", 4)
    alg = build_zigzag(g, fld)
    hub = 5
    a4 = alg.arrow_index[(4, hub)]
    a4s = alg.arrow_index[(hub, 4)]
    a1 = alg.arrow_index[(1, hub)]
    a1s = alg.arrow_index[(hub, 1)]
    cyc = alg.cycle_index
    minus = fld.neg(fld.element(scale))
    table: dict[Word, dict[int, Scalar]] = {
        (a4, a1s, a1, a4s): {cyc[4]: scale},
        (a1s, a1, a4s, a4): {cyc[hub]: minus},
        (a1, a4s, a4, a1s): {cyc[1]: scale},
        (a4s, a4, a1s, a1): {cyc[hub]: minus},
    }
    return AInftyCandidate(alg, {4: table})

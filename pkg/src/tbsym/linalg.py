"""Exact matrices over Q and over polynomial rings.

Determinants of polynomial matrices use Laplace expansion along the first
row, memoised on ``(row-subset, column-subset)`` so that enumerating every
k x k minor of a matrix shares the work on overlapping submatrices.

Local generators of a determinantal ideal come from eliminating constant
pivots exactly, then bordering a block that is invertible at the origin in
each connected component of what remains.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Dict, List, Sequence, Tuple

from .algebra import Polynomial, RingMismatchError, as_rational, grlex_key


class ShapeError(ValueError):
    """Raised for malformed or incompatible matrix shapes."""


@dataclass(frozen=True)
class MatrixQ:
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "MatrixQ":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), cols, tuple(as_rational(v) for r in rows for v in r))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List[Fraction]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "MatrixQ":
        return MatrixQ.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows
        )


@dataclass(frozen=True)
class MatrixPoly:
    rows: int
    cols: int
    entries: Tuple[Polynomial, ...]
    vars: Tuple[str, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        for e in self.entries:
            if e.vars != self.vars:
                raise RingMismatchError(f"entry over {e.vars}, matrix over {self.vars}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial]], vars: Sequence[str],
                  cols: int | None = None) -> "MatrixPoly":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r), tuple(vars))

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List[Polynomial]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def evaluate(self, point: Sequence) -> MatrixQ:
        return MatrixQ(self.rows, self.cols, tuple(e.evaluate(point) for e in self.entries))

    def at_origin(self) -> MatrixQ:
        return MatrixQ(self.rows, self.cols, tuple(e.constant_term() for e in self.entries))


def _echelon(rows: List[List[Fraction]], ncols: int) -> Tuple[int, int]:
    """In-place row echelon form; returns (rank, sign of the row permutation)."""
    rank, sign = 0, 1
    nrows = len(rows)
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][col]), None)
        if pivot is None:
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            sign = -sign
        prow = rows[rank]
        p = prow[col]
        for r in range(rank + 1, nrows):
            f = rows[r][col]
            if f:
                f /= p
                row = rows[r]
                for c in range(col, ncols):
                    if prow[c]:
                        row[c] -= f * prow[c]
        rank += 1
        if rank == nrows:
            break
    return rank, sign


def rank_q(m: MatrixQ) -> int:
    """Exact rank over Q by Gaussian elimination."""
    rows = m.to_rows()
    return _echelon(rows, m.cols)[0]


def det_q(m: MatrixQ) -> Fraction:
    """Exact determinant over Q by Gaussian elimination."""
    if m.rows != m.cols:
        raise ShapeError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    rows = m.to_rows()
    rank, sign = _echelon(rows, m.cols)
    if rank < m.rows:
        return Fraction(0)
    d = Fraction(sign)
    for i in range(m.rows):
        d *= rows[i][i]
    return d


class _MinorCache:
    """Memoised Laplace expansion over row/column index subsets of one matrix."""

    def __init__(self, m: MatrixPoly):
        self.m = m
        self.zero = Polynomial.zero(m.vars)
        self.memo: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Polynomial] = {}

    def det(self, rows: Tuple[int, ...], cols: Tuple[int, ...]) -> Polynomial:
        if len(rows) == 1:
            return self.m[rows[0], cols[0]]
        key = (rows, cols)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        r0, rest = rows[0], rows[1:]
        total = self.zero
        for j, c in enumerate(cols):
            entry = self.m[r0, c]
            if not entry:
                continue
            sub = self.det(rest, cols[:j] + cols[j + 1:])
            if not sub:
                continue
            term = entry * sub
            total = total - term if j & 1 else total + term
        self.memo[key] = total
        return total


def det_poly(m: MatrixPoly) -> Polynomial:
    """Exact determinant of a square polynomial matrix."""
    if m.rows != m.cols:
        raise ShapeError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return Polynomial.constant(m.vars, 1)
    idx = tuple(range(m.rows))
    return _MinorCache(m).det(idx, idx)


def canonical_order(polys) -> List[Polynomial]:
    return sorted(polys, key=Polynomial.sort_key, reverse=True)


def enumerate_minors(m: MatrixPoly, k: int) -> List[Polynomial]:
    """All nonzero k x k minors up to sign, deduplicated, in canonical order."""
    if k <= 0:
        raise ShapeError("minor order must be positive")
    if k > m.rows or k > m.cols:
        return []
    cache = _MinorCache(m)
    # rows that vanish identically contribute nothing
    live = tuple(i for i in range(m.rows) if any(m[i, j] for j in range(m.cols)))
    found = set()
    col_sets = list(combinations(range(m.cols), k))
    for rows in combinations(live, k):
        for cols in col_sets:
            d = cache.det(rows, cols)
            if d:
                found.add(d.canonical_sign())
    return canonical_order(found)


def qlinear_interreduce(gens: Sequence[Polynomial]) -> List[Polynomial]:
    """Reduced echelon basis of the Q-span of ``gens``.

    Every output polynomial has leading coefficient 1 and no other output
    polynomial has a term at its leading monomial.  The result depends only on
    the span, so it doubles as a canonical form.
    """
    basis = SpanBasis()
    for g in gens:
        basis.add(g)
    return basis.polynomials()


def _heap_key(mono):
    return (-sum(mono), tuple(-e for e in mono))


def _primitive(terms: Dict[tuple, int]) -> Dict[tuple, int]:
    g = 0
    for v in terms.values():
        g = gcd(g, v)
        if g == 1:
            return terms
    return {k: v // g for k, v in terms.items()} if g > 1 else terms


def _integral(p: Polynomial) -> Dict[tuple, int]:
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {m: int(c * den) for m, c in p.terms.items()}


class SpanBasis:
    """Echelon basis of a Q-span of polynomials, grown one polynomial at a time.

    Rows are stored as primitive integer term maps keyed by their leading
    monomial and are only semi-reduced; :meth:`polynomials` returns the
    reduced echelon form.
    """

    def __init__(self, gens: Sequence[Polynomial] = ()):
        self.vars = None
        self.rows: Dict[tuple, Dict[tuple, int]] = {}  # leading monomial -> row
        for g in gens:
            self.add(g)

    def __len__(self) -> int:
        return len(self.rows)

    def _reduce_terms(self, terms: Dict[tuple, int]) -> Dict[tuple, int]:
        rows = self.rows
        heap = [(_heap_key(m), m) for m in terms if m in rows]
        heapq.heapify(heap)
        while heap:
            _, lead = heapq.heappop(heap)
            c = terms.get(lead)
            if not c:
                continue
            row = rows[lead]
            a = row[lead]
            g = gcd(a, c)
            a, c = a // g, c // g
            if a != 1:
                terms = {k: v * a for k, v in terms.items()}
            for mono, v in row.items():
                old = terms.get(mono)
                s = (old or 0) - c * v
                if s:
                    terms[mono] = s
                    if old is None and mono in rows:
                        heapq.heappush(heap, (_heap_key(mono), mono))
                elif old is not None:
                    del terms[mono]
        return _primitive(terms) if terms else terms

    def _check(self, p: Polynomial) -> None:
        if self.vars is None:
            self.vars = p.vars
        elif p.vars != self.vars:
            raise RingMismatchError(f"ring {p.vars} does not match {self.vars}")

    def reduce(self, p: Polynomial) -> Polynomial:
        """A nonzero multiple of ``p`` reduced against the basis; zero iff ``p`` is in the span."""
        self._check(p)
        terms = self._reduce_terms(_integral(p))
        return Polynomial._raw(p.vars, {m: Fraction(v) for m, v in terms.items()})

    def contains(self, p: Polynomial) -> bool:
        self._check(p)
        return not self._reduce_terms(_integral(p))

    def add(self, p: Polynomial) -> bool:
        """Insert ``p``; returns True when the span grew."""
        self._check(p)
        terms = self._reduce_terms(_integral(p))
        if not terms:
            return False
        lead = max(terms, key=grlex_key)
        if terms[lead] < 0:
            terms = {k: -v for k, v in terms.items()}
        self.rows[lead] = terms
        return True

    def polynomials(self) -> List[Polynomial]:
        """Reduced echelon basis, monic, in descending order of leading monomial."""
        leads = sorted(self.rows, key=grlex_key)
        reduced: Dict[tuple, Dict[tuple, Fraction]] = {}
        # back-substitute from the smallest pivot upwards
        for lead in leads:
            row = self.rows[lead]
            lc = row[lead]
            terms = {m: Fraction(v, lc) for m, v in row.items()}
            for other in [m for m in terms if m != lead and m in reduced]:
                c = terms.get(other)
                if not c:
                    continue
                for mono, v in reduced[other].items():
                    t = terms.get(mono, 0) - c * v
                    if t:
                        terms[mono] = t
                    else:
                        terms.pop(mono, None)
            reduced[lead] = terms
        vars = self.vars
        return [Polynomial._raw(vars, reduced[m]) for m in reversed(leads)]


def constant_elimination(m: MatrixPoly) -> Tuple[int, MatrixPoly]:
    """Schur-complement elimination on nonzero constant entries; return (pivots, residual).

    Each step divides by a rational pivot, so the residual is the exact Schur
    complement of the eliminated block.  The row and column operations are
    invertible over the polynomial ring, so for every ``k`` the
    ``(pivots + k)``-minors of ``m`` and the ``k``-minors of the residual
    generate the same ideal.  Residual entries may still be units at the
    origin when they are not constants.
    """
    rows = m.to_rows()
    live_rows = list(range(m.rows))
    live_cols = list(range(m.cols))
    pivots = 0
    while True:
        best = None
        for r in live_rows:
            for c in live_cols:
                e = rows[r][c]
                if len(e) != 1 or not e.constant_term():
                    continue
                # prefer the sparsest pivot row and column to limit fill-in
                fill = sum(1 for x in rows[r] if x) + sum(1 for q in live_rows if rows[q][c])
                key = (fill, r, c)
                if best is None or key < best[0]:
                    best = (key, r, c)
        if best is None:
            break
        _, pr, pc = best
        live_rows.remove(pr)
        live_cols.remove(pc)
        prow = rows[pr]
        inv = 1 / rows[pr][pc].constant_term()
        for r in live_rows:
            f = rows[r][pc]
            if f:
                f = f * inv
                row = rows[r]
                for c in live_cols:
                    if prow[c]:
                        row[c] = row[c] - f * prow[c]
        pivots += 1
    residual = [[rows[r][c] for c in live_cols] for r in live_rows]
    return pivots, MatrixPoly.from_rows(residual, m.vars, cols=len(live_cols))


def unit_block(m: MatrixPoly) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Rows and columns of a square block that is invertible at the origin, of maximal size."""
    rows = [list(r) for r in m.at_origin().to_rows()]
    prow, pcol = [], []
    free = list(range(m.cols))
    for r in range(m.rows):
        c = next((c for c in free if rows[r][c]), None)
        if c is None:
            continue
        prow.append(r)
        pcol.append(c)
        free.remove(c)
        for q in range(r + 1, m.rows):
            f = rows[q][c] / rows[r][c]
            if f:
                rows[q] = [a - f * b for a, b in zip(rows[q], rows[r])]
    return tuple(prow), tuple(sorted(pcol))


def bordered_minors(m: MatrixPoly, block: Tuple[Tuple[int, ...], Tuple[int, ...]]) -> List[Polynomial]:
    """The minors of ``block`` bordered by one more row and column, as a flat list.

    For ``A`` the block, ``b`` a column, ``c`` a row and ``d`` the corner,
    the bordered minor is ``det(A) d - c adj(A) b``; the adjugate is computed
    once and shared.
    """
    brows, bcols = block
    p = len(brows)
    others_r = [r for r in range(m.rows) if r not in brows]
    others_c = [c for c in range(m.cols) if c not in bcols]
    if p == 0:
        return [m[r, c] for r in others_r for c in others_c]
    cache = _MinorCache(m)
    det_a = cache.det(brows, bcols)
    # adj[s][t] = (-1)^(s+t) * minor of A without row t and column s
    adj = [[None] * p for _ in range(p)]
    for s in range(p):
        for t in range(p):
            if p == 1:
                cof = Polynomial.constant(m.vars, 1)
            else:
                cof = cache.det(brows[:t] + brows[t + 1:], bcols[:s] + bcols[s + 1:])
            adj[s][t] = -cof if (s + t) & 1 else cof
    out = []
    for c in others_c:
        # adj(A) b for this column
        ab = []
        for s in range(p):
            acc = Polynomial.zero(m.vars)
            for t in range(p):
                if adj[s][t] and m[brows[t], c]:
                    acc = acc + adj[s][t] * m[brows[t], c]
            ab.append(acc)
        for r in others_r:
            total = det_a * m[r, c]
            for s in range(p):
                if ab[s] and m[r, bcols[s]]:
                    total = total - m[r, bcols[s]] * ab[s]
            out.append(total)
    return out


def components(m: MatrixPoly) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Row and column sets of the connected blocks of the nonzero pattern.

    Rows and columns are linked by nonzero entries; identically zero rows and
    columns belong to no block.
    """
    parent = list(range(m.rows + m.cols))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    used = set()
    for r in range(m.rows):
        for c in range(m.cols):
            if m[r, c]:
                parent[find(r)] = find(m.rows + c)
                used.update((r, m.rows + c))
    groups: Dict[int, Tuple[List[int], List[int]]] = {}
    for i in sorted(used):
        rows, cols = groups.setdefault(find(i), ([], []))
        if i < m.rows:
            rows.append(i)
        else:
            cols.append(i - m.rows)
    return [(tuple(r), tuple(c)) for r, c in groups.values()]


def _submatrix(m: MatrixPoly, rows: Sequence[int], cols: Sequence[int]) -> MatrixPoly:
    return MatrixPoly.from_rows([[m[r, c] for c in cols] for r in rows], m.vars, cols=len(cols))


def determinantal_generators(m: MatrixPoly, k: int) -> Tuple[int, List[Polynomial]]:
    """Generators, over the local ring at the origin, of the ideal of k x k minors.

    Constant pivots are eliminated first.  The residual splits into blocks
    along its nonzero pattern; for a block-diagonal matrix whose blocks have
    origin ranks ``p_t``, the ideal of minors of order ``sum(p_t) + 1`` is
    locally the sum of each block's ideal of minors of order ``p_t + 1``,
    because all smaller orders contain a unit.  Inside a block a square
    sub-block ``A`` invertible at the origin is chosen and the minors of
    ``A`` bordered by one row and column, ``det(A)`` times the entries of
    its Schur complement, generate that ideal.  Orders other than the
    critical one fall back to all minors of the residual.  Returns ``(rank at
    origin, generators)`` with generators sign-normalised, deduplicated and
    canonically ordered.
    """
    if k <= 0:
        raise ShapeError("minor order must be positive")
    pivots, residual = constant_elimination(m)
    blocks = []
    for rows, cols in components(residual):
        sub = _submatrix(residual, rows, cols)
        blocks.append((sub, unit_block(sub)))
    rank = pivots + sum(len(b[0]) for _, b in blocks)
    if k <= rank:
        # some k-minor is a unit
        return rank, [Polynomial.constant(m.vars, 1)]
    if k == rank + 1:
        found = set()
        for sub, block in blocks:
            found.update(e.canonical_sign() for e in bordered_minors(sub, block) if e)
        return rank, canonical_order(found)
    return rank, enumerate_minors(residual, k - pivots)

"""Certified ideal membership for generator pruning.

A generator that is a polynomial combination of the others can be dropped
from a presentation without changing the ideal, and by the product rule
without changing any Jacobian extension of it either.  Membership is
certified by exact linear algebra over the monomial multiples ``x^a * s`` of
kept generators ``s``; a failed search only means a generator is kept, never
that a wrong one is dropped.

When every generator is homogeneous for some positive integer weighting of
the variables (the multiplication germs are), the search for a candidate of
weight ``W`` is restricted to multiples of weight ``W``, which is complete
for graded ideals and far smaller than a degree-bounded search.
"""
from __future__ import annotations

from functools import lru_cache
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from .algebra import Monomial, Polynomial
from .linalg import SpanBasis

Grading = Tuple[int, ...]


def weighted_degree(mono: Monomial, grading: Grading) -> int:
    return sum(e * w for e, w in zip(mono, grading))


def is_homogeneous(p: Polynomial, grading: Grading) -> bool:
    return len({weighted_degree(m, grading) for m in p.terms}) <= 1


def find_grading(gens: Sequence[Polynomial], nvars: int) -> Optional[Grading]:
    """A positive integer weighting making every generator homogeneous, or None."""
    if nvars == 0:
        return ()
    diffs = []
    for g in gens:
        monos = list(g.terms)
        for other in monos[1:]:
            diffs.append([a - b for a, b in zip(other, monos[0])])
    if not diffs:
        return (1,) * nvars
    res = linprog(
        c=np.ones(nvars),
        A_eq=np.array(diffs, dtype=float),
        b_eq=np.zeros(len(diffs)),
        bounds=[(1, None)] * nvars,
        method="highs",
    )
    if res.status != 0:
        return None
    fracs = [Fraction(float(v)).limit_denominator(1000) for v in res.x]
    scale = 1
    for f in fracs:
        scale = scale * f.denominator // _gcd(scale, f.denominator)
    grading = tuple(int(f * scale) for f in fracs)
    g = 0
    for w in grading:
        g = _gcd(g, w)
    grading = tuple(w // g for w in grading)
    # the LP is floating point; only an exactly verified grading is used
    if min(grading) < 1 or not all(is_homogeneous(p, grading) for p in gens):
        return None
    return grading


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@lru_cache(maxsize=4096)
def monomials_of_weight(grading: Grading, weight: int) -> Tuple[Monomial, ...]:
    """All exponent vectors of the given weighted degree."""
    n = len(grading)
    out: List[Monomial] = []

    def rec(i: int, left: int, acc: List[int]):
        if i == n - 1:
            if left % grading[i] == 0:
                out.append(tuple(acc + [left // grading[i]]))
            return
        for e in range(left // grading[i] + 1):
            rec(i + 1, left - e * grading[i], acc + [e])

    if weight < 0:
        return ()
    if n == 0:
        return ((),) if weight == 0 else ()
    rec(0, weight, [])
    return tuple(out)


def monomials_up_to(nvars: int, degree: int) -> Tuple[Monomial, ...]:
    ones = (1,) * nvars
    return tuple(m for d in range(degree + 1) for m in monomials_of_weight(ones, d))


def shift(p: Polynomial, mono: Monomial) -> Polynomial:
    if not any(mono):
        return p
    return Polynomial._raw(
        p.vars, {tuple(a + b for a, b in zip(m, mono)): c for m, c in p.terms.items()}
    )


class IdealPruner:
    """Greedy selection of an ideal-irredundant subset of candidate generators.

    Candidates are processed in order of (weight, priority); each is kept
    unless it lies in the span of multiples of generators kept before it.
    """

    def __init__(self, vars: Sequence[str], grading: Optional[Grading], max_degree: int = 0):
        self.vars = tuple(vars)
        self.grading = grading
        self.max_degree = max_degree
        self.kept: List[Polynomial] = []
        self._graded: Dict[int, SpanBasis] = {}
        self._filtered = SpanBasis()

    def weight(self, p: Polynomial) -> int:
        if self.grading is None:
            return p.degree()
        return max(weighted_degree(m, self.grading) for m in p.terms)

    def contains(self, p: Polynomial) -> bool:
        if not p:
            return True
        if self.grading is None:
            return self._filtered.contains(p)
        w = self.weight(p)
        span = self._graded.get(w)
        if span is None:
            span = self._graded[w] = SpanBasis()
            for s in self.kept:
                self._add_multiples(span, s, w)
        return span.contains(p)

    def _add_multiples(self, span: SpanBasis, s: Polynomial, w: int) -> None:
        for mono in monomials_of_weight(self.grading, w - self.weight(s)):
            span.add(shift(s, mono))

    def offer(self, p: Polynomial) -> bool:
        """Keep ``p`` unless it is certified redundant; returns True if kept."""
        if self.contains(p):
            return False
        self.kept.append(p)
        if self.grading is None:
            for mono in monomials_up_to(len(self.vars), self.max_degree - p.degree()):
                self._filtered.add(shift(p, mono))
        else:
            for w, span in self._graded.items():
                self._add_multiples(span, p, w)
        return True


def prune(old: Sequence[Polynomial], new: Sequence[Polynomial] = (),
          grading: Optional[Grading] = None) -> Tuple[List[Polynomial], int]:
    """Prune ``old + new``; returns (kept generators, number of ``new`` ones kept).

    At equal weight old generators take precedence, so a zero count means
    every polynomial in ``new`` is certified to lie in the ideal of ``old``.
    """
    old = [g.canonical_sign() for g in old if g]
    new = [g.canonical_sign() for g in new if g]
    if not old and not new:
        return [], 0
    vars = (old or new)[0].vars
    if grading is not None and not all(is_homogeneous(p, grading) for p in old + new):
        grading = None
    max_degree = max(p.degree() for p in old + new)
    pruner = IdealPruner(vars, grading, max_degree)
    tagged = [(pruner.weight(p), 0, i, p) for i, p in enumerate(old)]
    tagged += [(pruner.weight(p), 1, i, p) for i, p in enumerate(new)]
    tagged.sort(key=lambda t: t[:3])
    added = 0
    for _, is_new, _, p in tagged:
        if pruner.offer(p) and is_new:
            added += 1
    kept = sorted(pruner.kept, key=Polynomial.sort_key, reverse=True)
    kept.sort(key=pruner.weight)
    return kept, added

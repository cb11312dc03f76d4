"""Constructors for the standard germ families and symbol-level arithmetic.

* :func:`mu` -- the polynomial multiplication germ sending the coefficients
  of monic ``f`` (degree n) and ``g`` (degree r) to those of ``f * g``;
* :func:`zero_germ` -- the zero germ ``C^a -> C^b``, whose symbol is constant;
* :func:`cartesian_product` -- germs on disjoint coordinates side by side;
* :func:`euclid_symbol` -- the sequence read off the Euclidean algorithm;
* :func:`realize` -- a germ whose symbol is a prescribed non-increasing
  sequence, assembled from products of ``mu`` germs and one zero germ.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .algebra import Polynomial
from .boardman import IdealPresentation, TBSymbol


class DomainError(ValueError):
    """Raised when arguments fall outside a constructor's domain."""


def mu(n: int, r: int) -> IdealPresentation:
    """Ideal of the multiplication germ ``mu_{n,r}``.

    Variables are ``a0..a{n-1}, b0..b{r-1}``; generators are the non-leading
    coefficients ``c_{n+r-1}, ..., c_0`` of ``(x^n + ...)(x^r + ...)``.
    """
    if n < 1 or r < 1:
        raise DomainError(f"mu needs n, r >= 1, got ({n}, {r})")
    names = tuple(f"a{i}" for i in range(n)) + tuple(f"b{j}" for j in range(r))
    xs = Polynomial.variables(names)
    one = Polynomial.constant(names, 1)
    a = list(xs[:n]) + [one]
    b = list(xs[n:]) + [one]
    gens = []
    for j in range(n + r - 1, -1, -1):
        c = Polynomial.zero(names)
        for s in range(max(0, j - r), min(n, j) + 1):
            c = c + a[s] * b[j - s]
        gens.append(c)
    return IdealPresentation(names, tuple(gens))


def zero_germ(a: int, b: int = 1) -> IdealPresentation:
    """The zero germ ``C^a -> C^b``: ``a`` variables and ``b`` zero generators."""
    if a < 0:
        raise DomainError("source dimension must be nonnegative")
    if b < 1:
        raise DomainError("target dimension must be positive")
    names = tuple(f"x{i}" for i in range(a))
    return IdealPresentation(names, tuple(Polynomial.zero(names) for _ in range(b)))


def empty_presentation() -> IdealPresentation:
    return IdealPresentation((), ())


def cartesian_product(left: IdealPresentation, right: IdealPresentation) -> IdealPresentation:
    """Product germ on the disjoint union of coordinates.

    Left variables are renamed with prefix ``L_`` and right ones with ``R_``.
    A factor without variables or generators is treated as the identity.
    """
    if not left.var_names and not left.generators:
        return right
    if not right.var_names and not right.generators:
        return left
    names = tuple("L_" + v for v in left.var_names) + tuple("R_" + v for v in right.var_names)
    nl = left.m
    lpos = range(nl)
    rpos = range(nl, nl + right.m)
    gens = [g.lift(names, lpos) for g in left.generators]
    gens += [g.lift(names, rpos) for g in right.generators]
    return IdealPresentation(names, tuple(gens))


def product_of(factors: Sequence[IdealPresentation]) -> IdealPresentation:
    """Left-to-right Cartesian product with flat, indexed variable prefixes.

    ``cartesian_product`` nests ``L_``/``R_`` prefixes; for long products this
    helper names factor ``t``'s variables ``F{t}_<name>`` instead.
    """
    factors = [f for f in factors if f.var_names or f.generators]
    if not factors:
        return empty_presentation()
    if len(factors) == 1:
        return factors[0]
    names: List[str] = []
    spans = []
    for t, f in enumerate(factors):
        start = len(names)
        names.extend(f"F{t}_{v}" for v in f.var_names)
        spans.append(range(start, len(names)))
    gens = []
    for f, pos in zip(factors, spans):
        gens.extend(g.lift(names, pos) for g in f.generators)
    return IdealPresentation(tuple(names), tuple(gens))


@dataclass(frozen=True)
class EuclidRun:
    n: int
    r: int
    quotients: Tuple[int, ...]
    remainders: Tuple[int, ...]

    def blocks(self) -> List[Tuple[int, int]]:
        """(value, multiplicity) pairs: r repeated q_1 times, r_1 repeated q_2 times, ..."""
        divisors = (self.r,) + self.remainders
        return list(zip(divisors, self.quotients))


def euclid_run(n: int, r: int) -> EuclidRun:
    if r < 1:
        raise DomainError("r must be positive")
    if n < r:
        raise DomainError(f"Euclid symbol needs n >= r, got ({n}, {r})")
    quotients, remainders = [], []
    a, b = n, r
    while True:
        q, rem = divmod(a, b)
        quotients.append(q)
        if rem == 0:
            break
        remainders.append(rem)
        a, b = b, rem
    return EuclidRun(n, r, tuple(quotients), tuple(remainders))


def euclid_symbol(n: int, r: int) -> TBSymbol:
    """``I(n, r)``: each divisor of the Euclidean algorithm repeated by its quotient, then zeros."""
    prefix: List[int] = []
    for value, times in euclid_run(n, r).blocks():
        prefix.extend([value] * times)
    return TBSymbol(tuple(prefix), True, 0)


def _covers(s: TBSymbol, depth: int) -> bool:
    return s.tail_proven or len(s.prefix) >= depth


def symbol_add(s: TBSymbol, t: TBSymbol, depth: Optional[int] = None) -> TBSymbol:
    """Entrywise sum.

    With both tails proven the result is exact and proven.  Otherwise the sum
    is taken over ``depth`` entries (default: the longest prefix), which both
    operands must determine.
    """
    if s.tail_proven and t.tail_proven:
        length = max(len(s.prefix), len(t.prefix))
        prefix = tuple(s.entry(p) + t.entry(p) for p in range(1, length + 1))
        return TBSymbol(prefix, True, s.tail_value + t.tail_value)
    if depth is None:
        depth = max(len(s.prefix), len(t.prefix))
    if not (_covers(s, depth) and _covers(t, depth)):
        raise DomainError(f"cannot add an unproven symbol beyond its computed prefix (depth {depth})")
    return TBSymbol(tuple(s.entry(p) + t.entry(p) for p in range(1, depth + 1)), False, None)


def symbol_prefix_eq(s: TBSymbol, t: TBSymbol, depth: int) -> bool:
    if depth < 1:
        raise DomainError("depth must be positive")
    if not (_covers(s, depth) and _covers(t, depth)):
        raise DomainError(f"symbols do not determine {depth} entries")
    return s.expand(depth) == t.expand(depth)


@dataclass(frozen=True)
class SymbolSpec:
    """Run-length description of an eventually constant non-increasing sequence.

    ``blocks`` holds ``(value, multiplicity)`` with strictly decreasing values,
    all above ``tail``, which repeats forever.
    """

    blocks: Tuple[Tuple[int, int], ...]
    tail: int

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple((int(v), int(l)) for v, l in self.blocks))
        self.validate()

    def validate(self) -> None:
        if self.tail < 0:
            raise DomainError("tail must be nonnegative")
        prev = None
        for value, mult in self.blocks:
            if mult < 1:
                raise DomainError(f"block multiplicity must be positive, got {mult}")
            if prev is not None and value >= prev:
                raise DomainError("block values must be strictly decreasing")
            if value <= self.tail:
                raise DomainError(f"block value {value} does not exceed the tail {self.tail}")
            prev = value

    def prefix_length(self) -> int:
        return sum(l for _, l in self.blocks)

    def expansion(self) -> TBSymbol:
        prefix: List[int] = []
        for value, mult in self.blocks:
            prefix.extend([value] * mult)
        return TBSymbol(tuple(prefix), True, self.tail)

    def __str__(self) -> str:
        parts = [f"{v}^{l}" for v, l in self.blocks] + [f"{self.tail}*"]
        return ",".join(parts)


@dataclass(frozen=True)
class Factor:
    """One factor of a realization: ``mu(n, r)`` or, with ``n`` None, the zero germ on ``r`` variables."""

    n: Optional[int]
    r: int

    def build(self) -> IdealPresentation:
        return zero_germ(self.r, 1) if self.n is None else mu(self.n, self.r)

    def __str__(self) -> str:
        return f"zero_germ({self.r},1)" if self.n is None else f"mu_{{{self.n},{self.r}}}"


def realization_factors(spec: SymbolSpec) -> List[Factor]:
    """Factors ``mu_{d_j q_j, d_j}`` for each drop ``d_j`` between values, then the tail zero germ.

    ``q_j`` is the total length of the blocks preceding the drop.
    """
    spec.validate()
    values = [v for v, _ in spec.blocks] + [spec.tail]
    factors: List[Factor] = []
    covered = 0
    for j, (value, mult) in enumerate(spec.blocks):
        covered += mult
        drop = value - values[j + 1]
        factors.append(Factor(drop * covered, drop))
    if spec.tail > 0:
        factors.append(Factor(None, spec.tail))
    return factors


def realize(spec: SymbolSpec) -> IdealPresentation:
    """A germ whose Thom-Boardman symbol is the expansion of ``spec``."""
    factors = [f.build() for f in realization_factors(spec)]
    if not factors:
        return zero_germ(0, 1)
    return product_of(factors)

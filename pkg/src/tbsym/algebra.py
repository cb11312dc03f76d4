"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` lives in a fixed ambient ring given by an ordered tuple
of variable names.  Terms are stored as a mapping from exponent tuples to
:class:`fractions.Fraction` coefficients; zero coefficients are never stored,
so two polynomials are equal exactly when their term mappings are equal.

Monomials are ordered graded-lexicographically with the first ambient
variable largest (so ``a0 > a1 > b0`` for the ring ``(a0, a1, b0)``).
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Monomial = Tuple[int, ...]

__all__ = [
    "Fraction",
    "Monomial",
    "Polynomial",
    "RingMismatchError",
    "grlex_key",
    "as_rational",
]


class RingMismatchError(ValueError):
    """Raised when polynomials from different ambient rings are combined."""


def grlex_key(mono: Monomial) -> Tuple[int, Monomial]:
    """Sort key realising graded-lex order; larger key means larger monomial."""
    return (sum(mono), mono)


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class Polynomial:
    """Immutable sparse polynomial over Q.

    >>> x, y = Polynomial.variables(("x", "y"))
    >>> str((x + y) * (x - y))
    'x^2 - y^2'
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Monomial, object] | None = None):
        self.vars: Tuple[str, ...] = tuple(vars)
        clean: Dict[Monomial, Fraction] = {}
        n = len(self.vars)
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for ring {self.vars}")
            c = as_rational(coeff)
            if c:
                c = clean.get(mono, 0) + c
                if c:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
        self.terms: Dict[Monomial, Fraction] = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: Tuple[str, ...], terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Polynomial":
        return cls._raw(tuple(vars), {})

    @classmethod
    def constant(cls, vars: Sequence[str], value) -> "Polynomial":
        vars = tuple(vars)
        c = as_rational(value)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def variable(cls, vars: Sequence[str], index: int) -> "Polynomial":
        vars = tuple(vars)
        if not 0 <= index < len(vars):
            raise IndexError(f"variable index {index} out of range for {vars}")
        mono = tuple(1 if i == index else 0 for i in range(len(vars)))
        return cls._raw(vars, {mono: Fraction(1)})

    @classmethod
    def variables(cls, vars: Sequence[str]) -> Tuple["Polynomial", ...]:
        vars = tuple(vars)
        return tuple(cls.variable(vars, i) for i in range(len(vars)))

    # -- basic queries ------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def monomials(self) -> list:
        """Monomials in descending grlex order."""
        return sorted(self.terms, key=grlex_key, reverse=True)

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=grlex_key)
        return mono, self.terms[mono]

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.vars != other.vars:
            raise RingMismatchError(f"ring {self.vars} does not match {other.vars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.vars, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for mono, c in b.items():
            s = out.get(mono)
            if s is None:
                out[mono] = c
            else:
                s += c
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return Polynomial._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = as_rational(other)
            if not c:
                return Polynomial._raw(self.vars, {})
            return Polynomial._raw(self.vars, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, 0) + c1 * c2
        return Polynomial._raw(self.vars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def partial(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to variable ``index``."""
        if not 0 <= index < len(self.vars):
            raise IndexError(f"variable index {index} out of range for {self.vars}")
        out: Dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            e = mono[index]
            if e:
                lowered = mono[:index] + (e - 1,) + mono[index + 1:]
                out[lowered] = c * e
        return Polynomial._raw(self.vars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != len(self.vars):
            raise RingMismatchError(
                f"point of length {len(point)} for ring of {len(self.vars)} variables"
            )
        pt = [as_rational(v) for v in point]
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for v, e in zip(pt, mono):
                if e:
                    term *= v ** e
            total += term
        return total

    def canonical_sign(self) -> "Polynomial":
        """Return ``self`` or ``-self``, whichever has positive leading coefficient."""
        if not self.terms:
            return self
        return -self if self.leading_term()[1] < 0 else self

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Compose with polynomials ``images[i]`` substituted for variable ``i``.

        The result lives in the ring of the images.
        """
        if len(images) != len(self.vars):
            raise RingMismatchError("need one image per variable")
        if not images:
            return self
        target = images[0].vars
        result = Polynomial.zero(target)
        cache: Dict[Tuple[int, int], Polynomial] = {}
        for mono, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for i, e in enumerate(mono):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = images[i] ** e
                    term = term * cache[key]
            result = result + term
        return result

    def lift(self, vars: Sequence[str], positions: Sequence[int]) -> "Polynomial":
        """Re-embed into a larger ring; variable ``i`` goes to slot ``positions[i]``."""
        vars = tuple(vars)
        n = len(vars)
        out = {}
        for mono, c in self.terms.items():
            big = [0] * n
            for i, e in zip(positions, mono):
                big[i] = e
            out[tuple(big)] = c
        return Polynomial._raw(vars, out)

    # -- comparisons / hashing ----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self.terms == other.terms
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        return self.terms == ({(0,) * len(self.vars): c} if c else {})

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def sort_key(self):
        """Total order used for canonical generator lists: grlex on terms, then coefficients."""
        return tuple((grlex_key(m), self.terms[m]) for m in self.monomials())

    def __repr__(self) -> str:
        return f"Polynomial({self.vars!r}, {str(self)!r})"

    def __str__(self) -> str:
        from .ideal_io import print_poly

        return print_poly(self)


def check_canonical(p: Polynomial) -> None:
    """Validator for the stored-form invariants; raises AssertionError."""
    n = len(p.vars)
    for mono, c in p.terms.items():
        assert isinstance(c, Fraction), c
        assert c != 0, "stored zero coefficient"
        assert c.denominator > 0
        assert len(mono) == n and all(isinstance(e, int) and e >= 0 for e in mono)


def poly_sum(polys: Iterable[Polynomial], vars: Sequence[str]) -> Polynomial:
    total = Polynomial.zero(vars)
    for p in polys:
        total = total + p
    return total

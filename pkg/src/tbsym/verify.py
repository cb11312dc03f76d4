"""Verification harnesses: the multiplication-germ symbols against Euclid,
additivity under products, realization round trips and the building-block
identity ``mu(k*r, r) ~ mu(k, 1)^r``.

Every harness produces :class:`Cell` results in enumeration order.  Cells
can run in worker processes (``threads > 1``) and each is bounded by an
optional per-cell timeout; the table is identical either way.
"""
from __future__ import annotations

import contextlib
import random
import signal
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from .algebra import Polynomial
from .boardman import IdealPresentation, TBSymbol, tb_symbol
from .germs import (
    SymbolSpec,
    cartesian_product,
    euclid_symbol,
    mu,
    product_of,
    realization_factors,
    realize,
    symbol_add,
    zero_germ,
)
from .ideal_io import print_ideal_file
from .linalg import MatrixQ, det_q

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


class CellTimeout(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    depth: Optional[int] = None
    threads: int = 1
    timeout_seconds: Optional[int] = None
    json: bool = False
    reduction: str = "ideal"
    minors: str = "schur"
    seed: Optional[int] = None

    def __post_init__(self):
        if self.depth is not None and self.depth < 1:
            raise ValueError("depth must be at least 1")
        if self.timeout_seconds is not None and self.timeout_seconds < 1:
            raise ValueError("timeout must be at least 1 second")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")


@dataclass
class Cell:
    label: str
    status: str
    expected: str = ""
    got: str = ""
    seconds: float = 0.0
    detail: str = ""
    symbols: List[Tuple[int, TBSymbol]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "status": self.status,
            "expected": self.expected,
            "got": self.got,
            "detail": self.detail,
        }


@contextlib.contextmanager
def deadline(seconds: Optional[int]) -> Iterator[None]:
    """Raise :class:`CellTimeout` in the body after ``seconds`` (main thread only)."""
    if not seconds:
        yield
        return

    def _fire(signum, frame):
        raise CellTimeout(f"exceeded {seconds}s")

    previous = signal.signal(signal.SIGALRM, _fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, previous)


def symbol_of(ideal: IdealPresentation, config: RunConfig, depth: Optional[int] = None):
    """tb_symbol under ``config``, with the chain invariants re-checked."""
    sym, chain = tb_symbol(ideal, depth or config.depth, config.reduction, config.minors)
    check_symbol(sym, ideal.m)
    return sym, chain


def check_symbol(sym: TBSymbol, m: int) -> None:
    p = sym.prefix
    if any(a < b for a, b in zip(p, p[1:])):
        raise AssertionError(f"non-monotone prefix {p}")
    if any(not 0 <= v <= m for v in p):
        raise AssertionError(f"prefix {p} outside [0, {m}]")


def _timed(label: str, fn: Callable[[], Cell], timeout: Optional[int]) -> Cell:
    start = time.perf_counter()
    try:
        with deadline(timeout):
            cell = fn()
    except CellTimeout as exc:
        cell = Cell(label, SKIPPED, detail=str(exc))
    cell.seconds = time.perf_counter() - start
    return cell


def _run_one(job):
    fn, args, config = job
    label = args[0]
    return _timed(label, lambda: fn(*args, config), config.timeout_seconds)


def run_cells(fn, arg_list: Sequence[tuple], config: RunConfig) -> List[Cell]:
    """Run ``fn(*args, config)`` for each args tuple; results keep input order."""
    jobs = [(fn, args, config) for args in arg_list]
    if config.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(job) for job in jobs]


def fmt(sym: TBSymbol) -> str:
    sym = sym.normalized()
    body = ",".join(str(v) for v in sym.prefix)
    if sym.tail_proven:
        return f"({body + ',' if body else ''}{sym.tail_value}*)"
    return f"({body},?)"


# -- multiplication germs against the Euclid symbol ---------------------------

def varley_pairs(max_sum: int) -> List[Tuple[int, int]]:
    return [(s - r, r) for s in range(2, max_sum + 1) for r in range(1, s // 2 + 1)]


def varley_cell(label: str, n: int, r: int, config: RunConfig) -> Cell:
    ideal = mu(n, r)
    sym, _ = symbol_of(ideal, config)
    expected = euclid_symbol(n, r)
    ok = sym.tail_proven and sym.normalized() == expected.normalized()
    return Cell(label, PASS if ok else FAIL, fmt(expected), fmt(sym), symbols=[(ideal.m, sym)])


def verify_varley(max_sum: int, config: RunConfig = RunConfig()) -> List[Cell]:
    pairs = varley_pairs(max_sum)
    return run_cells(varley_cell, [(f"mu({n},{r})", n, r) for n, r in pairs], config)


# -- additivity under Cartesian products -------------------------------------

def random_presentation(rng: random.Random, max_vars: int = 3, max_gens: int = 3,
                        max_degree: int = 2, coeff_bound: int = 2) -> IdealPresentation:
    """Small random presentation with zero constant terms.

    Linear terms are switched off with probability 1/2 so that coranks
    above 1 show up regularly.
    """
    m = rng.randint(1, max_vars)
    names = tuple(f"x{i}" for i in range(m))
    monos = [mono for d in range(1, max_degree + 1)
             for mono in _exponents(m, d)]
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        terms = {}
        for mono in monos:
            if sum(mono) == 1 and rng.random() < 0.5:
                continue
            c = rng.randint(-coeff_bound, coeff_bound)
            if c:
                terms[mono] = c
        gens.append(Polynomial(names, terms))
    return IdealPresentation(names, tuple(gens))


def _exponents(m: int, d: int) -> List[Tuple[int, ...]]:
    out = []
    for cut in combinations(range(d + m - 1), m - 1):
        prev, mono = -1, []
        for c in cut + (d + m - 1,):
            mono.append(c - prev - 1)
            prev = c
        out.append(tuple(mono))
    return sorted(out, reverse=True)


def additivity_pair(seed: int, index: int) -> Tuple[IdealPresentation, IdealPresentation]:
    rng = random.Random(f"additivity:{seed}:{index}")
    return random_presentation(rng), random_presentation(rng)


def additivity_cell(label: str, left: IdealPresentation, right: IdealPresentation,
                    depth: int, config: RunConfig) -> Cell:
    s1, _ = symbol_of(left, config, depth)
    s2, _ = symbol_of(right, config, depth)
    prod = cartesian_product(left, right)
    s, _ = symbol_of(prod, config, depth)
    expected = symbol_add(s1, s2, depth)
    ok = s.expand(depth) == expected.expand(depth)
    detail = ""
    if not ok:
        detail = ("# left\n" + print_ideal_file(left) + "# right\n" + print_ideal_file(right))
    return Cell(label, PASS if ok else FAIL, str(expected.expand(depth)), str(s.expand(depth)),
                detail=detail, symbols=[(left.m, s1), (right.m, s2), (prod.m, s)])


def verify_additivity(cases: int, seed: int, config: RunConfig = RunConfig(),
                      depth: int = 4, extra: Sequence[Tuple[str, IdealPresentation, IdealPresentation]] = ()
                      ) -> List[Cell]:
    if cases < 1 and not extra:
        raise ValueError("need at least one case")
    args = [(label, a, b, depth) for label, a, b in extra]
    for i in range(cases):
        a, b = additivity_pair(seed, i)
        args.append((f"random#{i}", a, b, depth))
    return run_cells(additivity_cell, args, config)


def deterministic_additivity_pairs():
    return [
        ("mu(1,1) x mu(1,1)", mu(1, 1), mu(1, 1)),
        ("mu(2,1) x zero(1,1)", mu(2, 1), zero_germ(1, 1)),
        ("mu(1,1) x mu(2,2)", mu(1, 1), mu(2, 2)),
        ("mu(1,1) x zero(1,1)", mu(1, 1), zero_germ(1, 1)),
        ("empty x mu(2,1)", IdealPresentation((), ()), mu(2, 1)),
    ]


# -- realization round trip --------------------------------------------------

def enumerate_specs(max_value: int, max_len: int, tails: Sequence[int] = (0, 1)) -> List[SymbolSpec]:
    """Every valid spec with block values <= max_value, prefix length <= max_len."""
    out: List[SymbolSpec] = []
    for tail in tails:
        values = list(range(max_value, tail, -1))
        for k in range(0, len(values) + 1):
            for chosen in combinations(values, k):
                for mults in _compositions_at_most(k, max_len):
                    out.append(SymbolSpec(tuple(zip(chosen, mults)), tail))
    return out


def _compositions_at_most(parts: int, total: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions_at_most(parts - 1, total - first):
            yield (first,) + rest


def realize_cell(label: str, spec: SymbolSpec, config: RunConfig) -> Cell:
    depth = spec.prefix_length() + 2
    ideal = realize(spec)
    sym, _ = symbol_of(ideal, config, depth)
    expected = spec.expansion()
    ok = (sym.tail_proven and sym.tail_value == spec.tail
          and sym.expand(depth) == expected.expand(depth))
    factors = " x ".join(str(f) for f in realization_factors(spec)) or "zero_germ(0,1)"
    return Cell(label, PASS if ok else FAIL, fmt(expected), fmt(sym), detail=factors,
                symbols=[(ideal.m, sym)])


def verify_realize(specs: Sequence[SymbolSpec], config: RunConfig = RunConfig()) -> List[Cell]:
    return run_cells(realize_cell, [(str(s), s) for s in specs], config)


# -- building blocks ---------------------------------------------------------

def remark22_cell(label: str, k: int, r: int, config: RunConfig) -> Cell:
    big = mu(k * r, r)
    copies = product_of([mu(k, 1)] * r)
    s1, _ = symbol_of(big, config)
    s2, _ = symbol_of(copies, config)
    ok = s1.tail_proven and s2.tail_proven and s1.normalized() == s2.normalized()
    return Cell(label, PASS if ok else FAIL, fmt(s1), fmt(s2),
                symbols=[(big.m, s1), (copies.m, s2)])


def verify_remark22(pairs: Sequence[Tuple[int, int]], config: RunConfig = RunConfig()) -> List[Cell]:
    for k, r in pairs:
        if k < 1 or r < 1:
            raise ValueError(f"need k, r >= 1, got ({k}, {r})")
    return run_cells(remark22_cell, [(f"k={k},r={r}", k, r) for k, r in pairs], config)


# -- invariance properties ---------------------------------------------------

def random_linear_change(rng: random.Random, ideal: IdealPresentation, bound: int = 3) -> IdealPresentation:
    """Substitute an invertible random Q-linear change of coordinates."""
    m = ideal.m
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(m)]
        if det_q(MatrixQ.from_rows(rows, m)):
            break
    xs = Polynomial.variables(ideal.var_names)
    images = []
    for row in rows:
        img = Polynomial.zero(ideal.var_names)
        for c, x in zip(row, xs):
            img = img + x * c
        images.append(img)
    return ideal.map_generators(lambda g: g.substitute(images))


def random_redundant_generator(rng: random.Random, ideal: IdealPresentation) -> Polynomial:
    """``h * g_i + c * g_j`` for a random polynomial ``h`` and rational ``c``."""
    gens = [g for g in ideal.generators if g] or list(ideal.generators)
    gi, gj = rng.choice(gens), rng.choice(gens)
    xs = Polynomial.variables(ideal.var_names)
    h = Polynomial.constant(ideal.var_names, rng.randint(-2, 2))
    for x in xs:
        h = h + x * rng.randint(-2, 2)
    if rng.random() < 0.5 and xs:
        h = h + rng.choice(xs) * rng.choice(xs) * rng.randint(-1, 1)
    c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return h * gi + gj * c

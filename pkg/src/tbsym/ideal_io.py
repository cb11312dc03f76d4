"""Text formats: polynomial expressions, ideal files, symbol specs, JSON reports.

Polynomial expressions::

    expr   := term (('+' | '-') term)*
    term   := ['+' | '-'] factor ('*' factor)*
    factor := rational | identifier ['^' natural] | '(' expr ')'
    rational := integer ['/' positive-integer]

Multiplication is always explicit, so ``a10`` is one identifier.  The
Unicode minus sign is accepted as ``-``.

Ideal files::

    # comment
    vars: a0, b0
    gen: a0 + b0
    gen: a0*b0

Symbol specs: ``2^1,1^2,0*`` is the value 2 once, 1 twice, then 0 forever.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .algebra import Polynomial
from .boardman import ExtensionStep, IdealPresentation, TBSymbol

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class ParseError(ValueError):
    """Syntax or name error, located by 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownIdentifierError(ParseError):
    def __init__(self, name: str, line: int, column: int):
        super().__init__(f"unknown identifier {name!r}", line, column)
        self.name = name


def _normalize(text: str) -> str:
    return text.replace("−", "-")


class _Parser:
    def __init__(self, text: str, vars: Sequence[str], line: int, col0: int):
        self.text = _normalize(text)
        self.vars = tuple(vars)
        self.index = {v: i for i, v in enumerate(self.vars)}
        self.line = line
        self.col0 = col0
        self.tokens = self._tokenize()
        self.pos = 0

    def _tokenize(self):
        toks = []
        i, n = 0, len(self.text)
        while i < n:
            m = _TOKEN.match(self.text, i)
            if not m:
                j = i
                while j < n and self.text[j].isspace():
                    j += 1
                if j == n:
                    break
                raise self.error(f"unexpected character {self.text[j]!r}", j)
            kind = m.lastgroup
            toks.append((kind, m.group(kind), m.start(kind)))
            i = m.end()
        toks.append(("end", "", len(self.text)))
        return toks

    def error(self, message: str, offset: int) -> ParseError:
        return ParseError(message, self.line, self.col0 + offset + 1)

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, val, off = self.take()
        if kind != "op" or val != op:
            raise self.error(f"expected {op!r}, found {val or 'end of input'!r}", off)

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, off = self.peek()
        if kind != "end":
            raise self.error(f"unexpected {val!r}", off)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.factor()
            else:
                return -p if negate else p

    def natural(self) -> int:
        kind, val, off = self.take()
        if kind != "num":
            raise self.error(f"expected a natural number, found {val or 'end of input'!r}", off)
        return int(val)

    def factor(self) -> Polynomial:
        kind, val, off = self.take()
        if kind == "num":
            value = Fraction(int(val))
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                _, _, doff = self.peek()
                den = self.natural()
                if den == 0:
                    raise self.error("zero denominator", doff)
                value /= den
            return Polynomial.constant(self.vars, value)
        if kind == "ident":
            if val not in self.index:
                raise UnknownIdentifierError(val, self.line, self.col0 + off + 1)
            p = Polynomial.variable(self.vars, self.index[val])
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "^":
                self.take()
                p = p ** self.natural()
            return p
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise self.error(f"expected a number, identifier or '(', found {val or 'end of input'!r}", off)


def parse_poly(text: str, vars: Sequence[str], line: int = 1, column: int = 1) -> Polynomial:
    """Parse ``text`` as a polynomial over ``vars``.

    ``line``/``column`` locate ``text`` inside a larger document for error messages.
    """
    return _Parser(text, vars, line, column - 1).parse()


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(mono, vars) -> str:
    parts = []
    for name, e in zip(vars, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def print_poly(p: Polynomial) -> str:
    """Canonical text: terms in descending grlex order, explicit ``*``, ASCII signs."""
    if not p.terms:
        return "0"
    out = []
    for i, mono in enumerate(p.monomials()):
        c = p.terms[mono]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = _format_monomial(mono, p.vars)
        if not body:
            text = _format_coeff(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{_format_coeff(mag)}*{body}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_var_list(text: str, line: int = 1, column: int = 1) -> Tuple[str, ...]:
    names: List[str] = []
    if not text.strip():
        return ()
    offset = 0
    for chunk in text.split(","):
        name = chunk.strip()
        col = column + offset + (len(chunk) - len(chunk.lstrip()))
        if not IDENT.fullmatch(name):
            raise ParseError(f"invalid identifier {name!r}", line, col)
        if name in names:
            raise ParseError(f"duplicate identifier {name!r}", line, col)
        names.append(name)
        offset += len(chunk) + 1
    return tuple(names)


def parse_ideal_file(text: str) -> IdealPresentation:
    """Parse an ideal file (``vars:`` line, then ``gen:`` lines)."""
    vars: Optional[Tuple[str, ...]] = None
    gens: List[Polynomial] = []
    for lineno, raw in enumerate(_normalize(text).splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        m = re.match(r"\s*(\w+)\s*:", body)
        if not m:
            raise ParseError("expected 'vars:' or 'gen:'", lineno, len(body) - len(body.lstrip()) + 1)
        key, rest, col = m.group(1), body[m.end():], m.end() + 1
        if key == "vars":
            if vars is not None:
                raise ParseError("second 'vars:' line", lineno, m.start(1) + 1)
            vars = parse_var_list(rest, lineno, col)
        elif key == "gen":
            if vars is None:
                raise ParseError("'gen:' before the 'vars:' line", lineno, m.start(1) + 1)
            gens.append(parse_poly(rest, vars, lineno, col))
        else:
            raise ParseError(f"unknown directive {key!r}", lineno, m.start(1) + 1)
    if vars is None:
        raise ParseError("missing 'vars:' line", 1, 1)
    return IdealPresentation(vars, tuple(gens))


def print_ideal_file(ideal: IdealPresentation, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append("vars: " + ", ".join(ideal.var_names))
    lines.extend(f"gen: {print_poly(g)}" for g in ideal.generators)
    return "\n".join(lines) + "\n"


_SPEC_BLOCK = re.compile(r"\s*(\d+)\s*\^\s*(\d+)\s*")
_SPEC_TAIL = re.compile(r"\s*(\d+)\s*\*\s*")


def parse_symbol_spec(text: str):
    """Parse ``value^mult,...,tail*`` into a validated :class:`SymbolSpec`."""
    from .germs import SymbolSpec

    text = _normalize(text)
    chunks = text.split(",")
    blocks = []
    col = 1
    for chunk in chunks[:-1]:
        m = _SPEC_BLOCK.fullmatch(chunk)
        if not m:
            raise ParseError(f"expected 'value^multiplicity', found {chunk.strip()!r}", 1, col)
        blocks.append((int(m.group(1)), int(m.group(2))))
        col += len(chunk) + 1
    m = _SPEC_TAIL.fullmatch(chunks[-1])
    if not m:
        raise ParseError(f"expected a tail 'value*', found {chunks[-1].strip()!r}", 1, col)
    return SymbolSpec(tuple(blocks), int(m.group(1)))


@dataclass(frozen=True)
class SymbolReport:
    num_vars: int
    depth: int
    prefix: Tuple[int, ...]
    tail_proven: bool
    tail_value: Optional[int]
    steps: Tuple[ExtensionStep, ...] = field(default=())

    @classmethod
    def from_run(cls, ideal: IdealPresentation, depth: int, symbol: TBSymbol,
                 chain: Sequence[ExtensionStep]) -> "SymbolReport":
        return cls(ideal.m, depth, symbol.prefix, symbol.tail_proven,
                   symbol.tail_value if symbol.tail_proven else None, tuple(chain))

    def to_dict(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "depth": self.depth,
            "prefix": list(self.prefix),
            "tail_proven": self.tail_proven,
            "tail_value": self.tail_value if self.tail_proven else None,
            "steps": [
                {
                    "corank": s.corank,
                    "minor_order": s.minor_order,
                    "generators_before": s.generators_before,
                    "generators_after": s.generators_after,
                }
                for s in self.steps
            ],
        }


def symbol_report_json(report: SymbolReport) -> str:
    return json.dumps(report.to_dict(), separators=(",", ":"))

"""A small expression language for elements of P, SU_q(2) and C.

Grammar (whitespace-insensitive)::

    expression := ['-'] term (('+' | '-') term)*
    term       := coeff | [coeff '*'] factor+
    coeff      := atom ('*' atom)*
    atom       := rational | 'q' ['^' integer] | '(' coeff_expr ')'
    factor     := token ['^' integer]

Tokens depend on the context:

* ``P``   -- ``z1..z4``, ``z1*..z4*`` and the named coinvariants ``A``, ``A*``,
  ``B``, ``B*``, ``RR``, ``An(n)``, ``Bn(n)`` (optionally starred);
* ``SU2`` -- ``a, b, c, d``;
* ``C``   -- ``r[k,m,n]`` (a single factor per term).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import galois, s7, suq2
from .cmod import CElement, CIndex
from .coeff import LaurentCoeff
from .s7 import PElement
from .suq2 import Su2Element

CONTEXTS = ("P", "SU2", "C")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass
class Factor:
    name: str
    args: tuple = ()
    starred: bool = False
    power: int = 1
    line: int = 1
    col: int = 1


@dataclass
class TermAst:
    coeff: LaurentCoeff
    factors: list[Factor] = field(default_factory=list)


@dataclass
class ExprAst:
    context: str
    terms: list[TermAst]


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rindex>r\[\s*-?\d+\s*,\s*-?\d+\s*,\s*-?\d+\s*\])
  | (?P<named>(?:An|Bn)\(\s*-?\d+\s*\))
  | (?P<number>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^()|⊗])
    """,
    re.VERBOSE,
)


@dataclass
class Tok:
    kind: str
    text: str
    line: int
    col: int
    glued: bool  # no whitespace before this token


def tokenize(src: str) -> list[Tok]:
    out = []
    pos = 0
    line, col = 1, 1
    glued = False
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", line, col)
        kind = m.lastgroup
        text = m.group()
        if kind == "ws":
            glued = False
        else:
            out.append(Tok(kind, text, line, col, glued))
            glued = True
        for ch in text:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        pos = m.end()
    out.append(Tok("eof", "", line, col, False))
    return out


_P_GENS = {"z1", "z2", "z3", "z4"}
_P_NAMED = {"A", "B", "RR"}
_SU2_GENS = set(suq2.LETTERS)
_ALL_IDENTS = _P_GENS | _P_NAMED | _SU2_GENS


class _Parser:
    def __init__(self, src: str, context: str):
        if context not in CONTEXTS:
            raise ValueError(f"unknown context {context!r}; expected one of {CONTEXTS}")
        self.toks = tokenize(src)
        self.i = 0
        self.context = context

    @property
    def cur(self) -> Tok:
        return self.toks[self.i]

    def take(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Tok:
        t = self.cur
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.line, t.col)
        return self.take()

    def error(self, msg: str, tok: Tok | None = None):
        tok = tok or self.cur
        raise ParseError(msg, tok.line, tok.col)

    # expression ------------------------------------------------------------
    def expression(self) -> ExprAst:
        terms = []
        sign = 1
        if self.cur.text == "-":
            self.take()
            sign = -1
        terms.append(self.term(sign))
        while self.cur.text in ("+", "-"):
            sign = 1 if self.take().text == "+" else -1
            terms.append(self.term(sign))
        if self.cur.kind != "eof":
            self.error(f"unexpected {self.cur.text!r}")
        return ExprAst(self.context, terms)

    def _starts_coeff(self, t: Tok) -> bool:
        return t.kind == "number" or t.text in ("q", "(")

    def _starts_factor(self, t: Tok) -> bool:
        return t.kind in ("rindex", "named") or (t.kind == "ident" and t.text != "q")

    def term(self, sign: int) -> TermAst:
        coeff = LaurentCoeff.const(sign)
        if self._starts_coeff(self.cur):
            coeff = coeff * self.coeff_product()
            if self.cur.text == "*":
                self.take()
                if not self._starts_factor(self.cur):
                    self.error("expected a generator after '*'")
            if not self._starts_factor(self.cur):
                return TermAst(coeff, [])
        elif not self._starts_factor(self.cur):
            self.error(f"expected a term, found {self.cur.text or 'end of input'!r}")
        factors = []
        while self._starts_factor(self.cur):
            factors.append(self.factor())
        return TermAst(coeff, factors)

    def coeff_product(self) -> LaurentCoeff:
        c = self.atom()
        while self.cur.text == "*" and self._starts_coeff(self.toks[self.i + 1]):
            self.take()
            c = c * self.atom()
        return c

    def atom(self) -> LaurentCoeff:
        t = self.cur
        if t.kind == "number":
            self.take()
            return LaurentCoeff.const(Fraction(t.text))
        if t.text == "q":
            self.take()
            e = 1
            if self.cur.text == "^":
                self.take()
                e = self.integer()
            return LaurentCoeff.q(e)
        if t.text == "(":
            self.take()
            c = self.coeff_expr()
            self.expect(")")
            return c
        self.error(f"expected a coefficient, found {t.text!r}")

    def coeff_expr(self) -> LaurentCoeff:
        total = LaurentCoeff()
        sign = 1
        if self.cur.text == "-":
            self.take()
            sign = -1
        total = total + self.coeff_product() * sign
        while self.cur.text in ("+", "-"):
            sign = 1 if self.take().text == "+" else -1
            if self.cur.text == "-":
                self.take()
                sign = -sign
            total = total + self.coeff_product() * sign
        return total

    def integer(self) -> int:
        sign = 1
        if self.cur.text == "-":
            self.take()
            sign = -1
        t = self.cur
        if t.kind != "number" or "/" in t.text:
            self.error("expected an integer exponent")
        self.take()
        return sign * int(t.text)

    def factor(self) -> Factor:
        t = self.take()
        f = Factor(t.text, line=t.line, col=t.col)
        if t.kind == "rindex":
            f.name = "r"
            f.args = tuple(int(x) for x in re.findall(r"-?\d+", t.text))
        elif t.kind == "named":
            f.name = t.text[:2]
            f.args = (int(re.search(r"-?\d+", t.text).group()),)
        elif t.text not in _ALL_IDENTS:
            self.error(f"unknown token {t.text!r}", t)
        if self.cur.text == "*" and self.cur.glued:
            if f.name in ("z1", "z2", "z3", "z4", "A", "B", "An", "Bn"):
                self.take()
                f.starred = True
            elif not self._starts_coeff(self.toks[self.i + 1]):
                self.error(f"{f.name!r} has no star", self.cur)
        if self.cur.text == "^":
            caret = self.take()
            if self.cur.text == "-":
                self.error("negative exponent on a generator", caret)
            f.power = self.integer()
        self._check_context(f)
        return f

    def _check_context(self, f: Factor):
        ok = {
            "P": f.name in _P_GENS | _P_NAMED | {"An", "Bn"},
            "SU2": f.name in _SU2_GENS,
            "C": f.name == "r",
        }[self.context]
        if not ok:
            self.error(f"context violation: {f.name!r} is not valid in context {self.context}",
                       Tok("", "", f.line, f.col, False))
        if f.name == "RR" and f.starred:
            self.error("RR is self-adjoint; write RR", Tok("", "", f.line, f.col, False))
        if f.name == "r" and (f.args[1] < 0 or f.args[2] < 0):
            self.error("r[k,m,n] needs m, n >= 0", Tok("", "", f.line, f.col, False))


def parse(src: str, context: str = "P") -> ExprAst:
    return _Parser(src, context).expression()


def _p_factor(f: Factor) -> PElement:
    if f.name in _P_GENS:
        i = int(f.name[1])
        return s7.zs(i) if f.starred else s7.z(i)
    if f.name == "RR":
        x = galois.r_gen()
    elif f.name in ("A", "An"):
        x = galois.a_n(f.args[0] if f.args else 0)
    else:
        x = galois.b_n(f.args[0] if f.args else 0)
    return s7.star(x) if f.starred else x


def elaborate(ast: ExprAst):
    """Turn an AST into a PElement / Su2Element / CElement."""
    if ast.context == "P":
        total = PElement.zero()
        for t in ast.terms:
            x = PElement.one()
            for f in t.factors:
                fx = _p_factor(f)
                for _ in range(f.power):
                    x = x * fx
            total = total + x.scale(t.coeff)
        return total
    if ast.context == "SU2":
        total = Su2Element.zero()
        for t in ast.terms:
            word = [f.name for f in t.factors for _ in range(f.power)]
            total = total + suq2.nf(word).scale(t.coeff)
        return total
    total = CElement.zero()
    for t in ast.terms:
        if len(t.factors) > 1 or any(f.power != 1 for f in t.factors):
            f = t.factors[1] if len(t.factors) > 1 else t.factors[0]
            raise ParseError("C has no product: one r[k,m,n] per term", f.line, f.col)
        key = CIndex(*t.factors[0].args) if t.factors else CIndex(0, 0, 0)
        total = total + CElement.basis(key, t.coeff)
    return total


def parse_element(src: str, context: str = "P"):
    return elaborate(parse(src, context))

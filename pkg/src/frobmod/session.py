"""Parser for the session language.

    ring p = 2 n = 1;
    ideal G = (x*f*x*f + f + x);
    fmodule R gens 1 relations ([F - 1]);
    option cap = 30;

Products are noncommutative and read left to right; ``*`` may be omitted
(``xfxf`` is ``x*f*x*f``).  ``f`` belongs to ideals of A and ``F`` to
relations of F.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .errors import ParseError
from .fmodule import FPresentation
from .monomial import RingContext, frobenius, one, variable
from .operator import FreeModule, ModuleVector, OperatorPoly, Semantics

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<sym>[;=()\[\],+\-*^])"
)
_LETTER = re.compile(r"x(\d+)|([xyz])|([fF])")


@dataclass
class Token:
    kind: str  # "int", "name", "sym", "eof"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, m.start() - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass
class IdealDecl:
    name: str
    gens: list  # OperatorPoly in A
    line: int = 0

    def vectors(self, ctx: RingContext) -> list:
        module = FreeModule(ctx, Semantics.TRUNCATING, 1)
        return [g.as_vector(module) for g in self.gens]


@dataclass
class Session:
    ctx: Optional[RingContext] = None
    ideals: dict = field(default_factory=dict)
    presentations: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)

    def lookup(self, name: str):
        if name in self.presentations:
            return self.presentations[name]
        if name in self.ideals:
            return self.ideals[name]
        known = sorted(set(self.presentations) | set(self.ideals))
        raise KeyError(f"no ideal or fmodule named {name!r} (known: {', '.join(known) or 'none'})")


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0
        self.session = Session()

    # token helpers
    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind in ("sym", "name") and t.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            shown = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {shown!r}")
        return self.advance()

    def expect_int(self) -> int:
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        if self.tok.kind != "int":
            raise self.error("expected an integer")
        return sign * int(self.advance().text)

    def expect_name(self) -> Token:
        if self.tok.kind != "name":
            raise self.error("expected a name")
        return self.advance()

    # statements
    def parse(self) -> Session:
        if self.tok.kind == "eof":
            raise self.error("empty session")
        while self.tok.kind != "eof":
            head = self.tok
            if head.kind != "name":
                raise self.error(f"expected a statement, found {head.text!r}")
            word = head.text
            if word == "ring":
                self.ring()
            elif word == "option":
                self.option()
            elif word in ("ideal", "fmodule"):
                if self.session.ctx is None:
                    raise self.error("a 'ring' declaration must come first")
                self.ideal() if word == "ideal" else self.fmodule()
            else:
                raise self.error(f"unknown statement {word!r}")
        return self.session

    def ring(self):
        head = self.expect("ring")
        if self.session.ctx is not None:
            raise self.error("only one 'ring' declaration is allowed", head)
        self.expect("p")
        self.expect("=")
        p_tok = self.tok
        p = self.expect_int()
        self.expect("n")
        self.expect("=")
        n_tok = self.tok
        n = self.expect_int()
        self.expect(";")
        try:
            self.session.ctx = RingContext(p, n)
        except ValueError as exc:
            raise self.error(str(exc), p_tok if str(exc).startswith("p") else n_tok) from None

    def option(self):
        self.expect("option")
        name = self.expect_name().text
        self.expect("=")
        if self.tok.kind == "int":
            value = int(self.advance().text)
        elif self.tok.kind == "name":
            value = self.advance().text
        else:
            raise self.error("expected an option value")
        self.expect(";")
        self.session.options[name] = value

    def _fresh_name(self) -> str:
        tok = self.expect_name()
        s = self.session
        if tok.text in s.ideals or tok.text in s.presentations:
            raise self.error(f"name {tok.text!r} is already defined", tok)
        return tok.text

    def ideal(self):
        head = self.expect("ideal")
        name = self._fresh_name()
        self.expect("=")
        self.expect("(")
        gens = []
        if not self.at(")"):
            gens.append(self.poly(Semantics.TRUNCATING))
            while self.at(","):
                self.advance()
                gens.append(self.poly(Semantics.TRUNCATING))
        self.expect(")")
        self.expect(";")
        self.session.ideals[name] = IdealDecl(name, gens, head.line)

    def fmodule(self):
        self.expect("fmodule")
        name = self._fresh_name()
        self.expect("gens")
        rank_tok = self.tok
        rank = self.expect_int()
        if rank < 1:
            raise self.error("need at least one generator", rank_tok)
        shifts = (0,) * rank
        if self.at("shifts"):
            self.advance()
            self.expect("(")
            vals = [self.expect_int()]
            while self.at(","):
                self.advance()
                vals.append(self.expect_int())
            close = self.expect(")")
            if len(vals) != rank:
                raise self.error(f"expected {rank} shifts, got {len(vals)}", close)
            if any(v < 0 for v in vals):
                raise self.error("shifts must be nonnegative", close)
            shifts = tuple(vals)
        module = FreeModule(self.session.ctx, Semantics.CARRYING, rank, shifts)
        rels = []
        if self.at("relations"):
            self.advance()
            self.expect("(")
            if not self.at(")"):
                rels.append(self.vec(module))
                while self.at(","):
                    self.advance()
                    rels.append(self.vec(module))
            self.expect(")")
        self.expect(";")
        self.session.presentations[name] = FPresentation(self.session.ctx, rank, shifts, rels, name=name)

    def vec(self, module: FreeModule) -> ModuleVector:
        open_tok = self.expect("[")
        comps = [self.poly(Semantics.CARRYING)]
        while self.at(","):
            self.advance()
            comps.append(self.poly(Semantics.CARRYING))
        self.expect("]")
        if len(comps) != module.rank:
            raise self.error(f"relation has {len(comps)} entries, expected {module.rank}", open_tok)
        return module.vector(comps)

    # expressions
    def poly(self, sem: Semantics) -> OperatorPoly:
        ctx = self.session.ctx
        total = OperatorPoly.zero(sem, ctx)
        sign = 1
        if self.at("+") or self.at("-"):
            sign = -1 if self.advance().text == "-" else 1
        total = total + self.term(sem).scale(sign)
        while self.at("+") or self.at("-"):
            sign = -1 if self.advance().text == "-" else 1
            total = total + self.term(sem).scale(sign)
        return total

    def _starts_factor(self) -> bool:
        t = self.tok
        return t.kind in ("int", "name") or (t.kind == "sym" and t.text == "(")

    def term(self, sem: Semantics) -> OperatorPoly:
        if not self._starts_factor():
            raise self.error("expected a term")
        result = self.factor(sem)
        while True:
            if self.at("*"):
                self.advance()
                result = result * self.factor(sem)
            elif self._starts_factor():
                result = result * self.factor(sem)
            else:
                return result

    def factor(self, sem: Semantics) -> OperatorPoly:
        ctx = self.session.ctx
        t = self.tok
        if t.kind == "int":
            self.advance()
            base = OperatorPoly.constant(int(t.text), sem, ctx)
        elif t.kind == "name":
            self.advance()
            base = self._word(t, sem)
        elif self.at("("):
            self.advance()
            base = self.poly(sem)
            self.expect(")")
        else:
            raise self.error("expected a factor")
        if self.at("^"):
            self.advance()
            if self.tok.kind != "int":
                raise self.error("expected an exponent")
            base = base ** int(self.advance().text)
        return base

    def _word(self, tok: Token, sem: Semantics) -> OperatorPoly:
        """A run of letters such as ``xfxf``; a trailing ``^k`` applies to
        the last letter only."""
        ctx = self.session.ctx
        names = {name: i for i, name in enumerate(ctx.variable_names)}
        letters = []
        pos = 0
        text = tok.text
        while pos < len(text):
            m = _LETTER.match(text, pos)
            col = tok.col + pos
            if not m:
                raise ParseError(f"unknown variable in {text!r}", tok.line, col)
            if m.group(1):
                idx = int(m.group(1)) - 1
                if not 0 <= idx < ctx.n:
                    raise ParseError(f"unknown variable x{m.group(1)} (n = {ctx.n})", tok.line, col)
                letters.append(variable(ctx, idx))
            elif m.group(2):
                if m.group(2) not in names:
                    raise ParseError(f"unknown variable {m.group(2)} (n = {ctx.n})", tok.line, col)
                letters.append(variable(ctx, names[m.group(2)]))
            else:
                letter = m.group(3)
                wanted = sem.letter
                if letter != wanted:
                    where = "ideals of A" if sem is Semantics.TRUNCATING else "relations of F"
                    raise ParseError(f"{letter!r} is not allowed in {where}; use {wanted!r}", tok.line, col)
                letters.append(frobenius(ctx))
            pos = m.end()
        if self.at("^") and len(letters) > 1:
            # x^2 style powers bind to the last letter of a juxtaposed run
            head = letters[:-1]
            last = letters[-1]
            self.advance()
            if self.tok.kind != "int":
                raise self.error("expected an exponent")
            k = int(self.advance().text)
            result = OperatorPoly.constant(1, sem, ctx)
            for m in head:
                result = result * OperatorPoly.monomial(m, sem)
            return result * OperatorPoly.monomial(last, sem) ** k
        result = OperatorPoly.monomial(one(ctx), sem)
        for m in letters:
            result = result * OperatorPoly.monomial(m, sem)
        return result


def parse_session(text: str) -> Session:
    return _Parser(text).parse()


def parse_poly(text: str, ctx: RingContext, semantics: Semantics) -> OperatorPoly:
    """Parse a single expression such as ``xfxf + f + x``."""
    p = _Parser(text)
    p.session.ctx = ctx
    result = p.poly(semantics)
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    return result

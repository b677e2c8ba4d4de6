r"""Concrete syntax: lexer, parser, and printer.

Grammar (ASCII; `λ` and `∘` are accepted on input for `\` and `*`):

    term  := '\' var '.' term          lambda body extends maximally right
           | subst '*' term            composition, right assoc, loosest
           | app
    app   := atom atom*                application, left assoc
    atom  := var | '(' term ')'
    subst := base ('^' var)*           postfix lift
    base  := '[' term '/' var ']' | 'W' var | '{' var var '}'
    var   := [a-z][a-zA-Z0-9_]*        'W' is reserved

Contexts are written `{x,z}; x,x,y`; the local part may be omitted or
empty (`{}`, `{x};`).

The printer emits minimal parentheses and round-trips: parsing its output
reproduces the term, structurally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contexts import Context
from .terms import App, Comp, Lam, Lift, Rename, Slash, Subst, Term, VarRef, Weak


class ParseError(Exception):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class _Tok:
    kind: str  # one of: ident lambda dot lparen rparen lbrack rbrack slash
    #                    lbrace rbrace star caret semi comma weak eof
    text: str
    pos: int


_PUNCT = {
    "\\": "lambda",
    "λ": "lambda",
    ".": "dot",
    "(": "lparen",
    ")": "rparen",
    "[": "lbrack",
    "]": "rbrack",
    "/": "slash",
    "{": "lbrace",
    "}": "rbrace",
    "*": "star",
    "∘": "star",
    "^": "caret",
    ";": "semi",
    ",": "comma",
}


def _lex(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _PUNCT:
            toks.append(_Tok(_PUNCT[c], c, i))
            i += 1
            continue
        if c == "W":
            # reserved weakening keyword; identifiers must start lowercase
            toks.append(_Tok("weak", "W", i))
            i += 1
            continue
        if c.islower() and c.isascii():
            j = i + 1
            while j < n and (text[j].isalnum() and text[j].isascii() or text[j] == "_"):
                j += 1
            toks.append(_Tok("ident", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    toks.append(_Tok("eof", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _lex(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.tok
        self.i += 1
        return t

    def expect(self, kind: str, what: str) -> _Tok:
        if self.tok.kind != kind:
            raise ParseError(f"expected {what}, found {self.tok.text or 'end of input'!r}",
                             self.tok.pos)
        return self.advance()

    def ident(self, what: str = "a variable") -> str:
        return self.expect("ident", what).text

    def term(self) -> Term:
        k = self.tok.kind
        if k == "lambda":
            self.advance()
            x = self.ident()
            self.expect("dot", "'.'")
            return Lam(x, self.term())
        if k in ("lbrack", "weak", "lbrace"):
            s = self.subst()
            self.expect("star", "'*' after a substitution")
            return Comp(s, self.term())
        return self.app()

    def app(self) -> Term:
        t = self.atom()
        while self.tok.kind in ("ident", "lparen"):
            t = App(t, self.atom())
        return t

    def atom(self) -> Term:
        k = self.tok.kind
        if k == "ident":
            return VarRef(self.advance().text)
        if k == "lparen":
            self.advance()
            t = self.term()
            self.expect("rparen", "')'")
            return t
        raise ParseError(f"expected a term, found {self.tok.text or 'end of input'!r}",
                         self.tok.pos)

    def subst(self) -> Subst:
        k = self.tok.kind
        if k == "lbrack":
            self.advance()
            body = self.term()
            self.expect("slash", "'/'")
            x = self.ident()
            self.expect("rbrack", "']'")
            s: Subst = Slash(body, x)
        elif k == "weak":
            self.advance()
            s = Weak(self.ident())
        else:
            self.expect("lbrace", "a substitution")
            y = self.ident()
            x = self.ident()
            self.expect("rbrace", "'}'")
            s = Rename(y, x)
        while self.tok.kind == "caret":
            self.advance()
            s = Lift(s, self.ident())
        return s

    def ctx(self) -> Context:
        self.expect("lbrace", "'{'")
        globs: list[str] = []
        if self.tok.kind == "ident":
            globs.append(self.advance().text)
            while self.tok.kind == "comma":
                self.advance()
                globs.append(self.ident())
        self.expect("rbrace", "'}'")
        locs: list[str] = []
        if self.tok.kind == "semi":
            self.advance()
            if self.tok.kind == "ident":
                locs.append(self.advance().text)
                while self.tok.kind == "comma":
                    self.advance()
                    locs.append(self.ident())
        return Context(frozenset(globs), tuple(locs))


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.expect("eof", "end of input")
    return t


def parse_context(text: str) -> Context:
    p = _Parser(text)
    c = p.ctx()
    p.expect("eof", "end of input")
    return c


def _print_atom(t: Term) -> str:
    # parenthesize anything that is not self-delimiting in argument position
    if isinstance(t, VarRef):
        return t.name
    return "(" + print_term(t) + ")"


def print_term(t: Term) -> str:
    match t:
        case VarRef(x):
            return x
        case App(f, a):
            # application is left associative; a left App needs no parens
            left = print_term(f) if isinstance(f, (App, VarRef)) else _print_atom(f)
            return f"{left} {_print_atom(a)}"
        case Lam(x, b):
            return f"\\{x}. {print_term(b)}"
        case Comp(s, b):
            return f"{print_subst(s)} * {print_term(b)}"
    raise TypeError(f"not a term: {t!r}")


def print_subst(s: Subst) -> str:
    match s:
        case Slash(t, x):
            return f"[{print_term(t)}/{x}]"
        case Weak(x):
            return f"W {x}"
        case Rename(y, x):
            return f"{{{y} {x}}}"
        case Lift(inner, x):
            return f"{print_subst(inner)}^{x}"
    raise TypeError(f"not a substitution: {s!r}")

"""The judgement engine: deciding whether a context admits a term.

Judgements come in two forms: a context admits a term, or a substitution
maps one context to another.  The checker is syntax directed and builds the
unique derivation bottom-up; no search is ever needed.  For a variable the
rule is decided by the rightmost local name (R2 on a match, R3 to strip a
mismatch, R1 against a pure set); substitutions fix their output context.

Rules, with S ranging over substitutions and x, y over names:

    R1   G |- x                      (x in G, empty local part)
    R2   C,x |- x
    R3   C |- x  =>  C,y |- x        (x != y)
    R4   C |- A and C |- B  =>  C |- A B
    R5   C,x |- A  =>  C |- \\x. A
    R6   C |- S |> D and D |- A  =>  C |- S * A
    R7   C |- B  =>  C |- [B/x] |> C,x
    R8   C,x |- W x |> C
    R9   C,y |- {y x} |> C,x
    R10  C |- S |> D  =>  C,x |- S^x |> D,x
"""

from __future__ import annotations

from dataclasses import dataclass

from .contexts import Context, format_context
from .freevars import fv, fv_blame
from .syntax import print_subst, print_term
from .terms import (App, Comp, Lam, Lift, Path, Rename, Sel, Slash, Subst,
                    Term, VarRef, Weak)


class NotDerivable(Exception):
    """No derivation exists; `path` addresses the failing node."""

    def __init__(self, path: Path, reason: str):
        super().__init__(reason)
        self.path = path
        self.reason = reason


class IllFormed(Exception):
    """The term is not derivable in any context."""


@dataclass(frozen=True)
class Derivation:
    """One node of a derivation tree.

    `out` is the output context of a substitution judgement and None for a
    term judgement.  For a fixed conclusion the tree is unique.
    """

    rule: str  # R1 .. R10
    ctx: Context
    subject: Term | Subst
    out: Context | None
    premises: tuple["Derivation", ...]


def derive(ctx: Context, t: Term, path: Path = ()) -> Derivation:
    """The unique derivation of `ctx |- t`, or NotDerivable."""
    match t:
        case VarRef(x):
            if ctx.locals:
                if ctx.top == x:
                    return Derivation("R2", ctx, t, None, ())
                prem = derive(ctx.pop(), t, path)
                return Derivation("R3", ctx, t, None, (prem,))
            if x in ctx.globals:
                return Derivation("R1", ctx, t, None, ())
            raise NotDerivable(path, f"variable {x} is not in the context")
        case App(f, a):
            df = derive(ctx, f, path + (Sel.APP_LEFT,))
            da = derive(ctx, a, path + (Sel.APP_RIGHT,))
            return Derivation("R4", ctx, t, None, (df, da))
        case Lam(x, b):
            db = derive(ctx.push(x), b, path + (Sel.LAM_BODY,))
            return Derivation("R5", ctx, t, None, (db,))
        case Comp(s, b):
            ds, delta = derive_subst(ctx, s, path + (Sel.COMP_SUBST,))
            db = derive(delta, b, path + (Sel.COMP_BODY,))
            return Derivation("R6", ctx, t, None, (ds, db))
    raise TypeError(f"not a term: {t!r}")


def derive_subst(ctx: Context, s: Subst, path: Path = ()) -> tuple[Derivation, Context]:
    """The unique derivation of `ctx |- s |> out`, plus its output context."""
    match s:
        case Slash(b, x):
            db = derive(ctx, b, path + (Sel.SLASH_BODY,))
            out = ctx.push(x)
            return Derivation("R7", ctx, s, out, (db,)), out
        case Weak(x):
            if not ctx.locals or ctx.top != x:
                raise NotDerivable(path, f"W {x} needs a local context ending in {x}")
            out = ctx.pop()
            return Derivation("R8", ctx, s, out, ()), out
        case Rename(y, x):
            if not ctx.locals or ctx.top != y:
                raise NotDerivable(path, f"{{{y} {x}}} needs a local context ending in {y}")
            out = ctx.pop().push(x)
            return Derivation("R9", ctx, s, out, ()), out
        case Lift(inner, x):
            if not ctx.locals or ctx.top != x:
                raise NotDerivable(path, f"lift by {x} needs a local context ending in {x}")
            d, delta = derive_subst(ctx.pop(), inner, path + (Sel.LIFT_INNER,))
            out = delta.push(x)
            return Derivation("R10", ctx, s, out, (d,)), out
    raise TypeError(f"not a substitution: {s!r}")


def well_formed(t: Term) -> Context:
    """The least context admitting `t`; raises IllFormed when none exists.

    Computes the free-variable context first; when that is defined it is
    guaranteed to be the least witness, so a single derivation check
    completes the decision.
    """
    c = fv(t)
    if c is None:
        blame = fv_blame(t)
        where = "" if blame is None else f" near {_show(blame)}"
        raise IllFormed(f"free variables undefined{where}")
    try:
        derive(c, t)
    except NotDerivable as e:
        raise IllFormed(f"not derivable in its own free-variable context: {e.reason}") from e
    return c


def is_good(t: Term) -> bool:
    """True when some pure set admits `t` (least context has no local part)."""
    try:
        return well_formed(t).is_set
    except IllFormed:
        return False


def _show(node: Term | Subst) -> str:
    if isinstance(node, (Slash, Weak, Rename, Lift)):
        return print_subst(node)
    return print_term(node)


def format_derivation(d: Derivation, indent: int = 0) -> str:
    """Render a derivation tree, one judgement per line, premises indented."""
    pad = "  " * indent
    if d.out is None:
        line = f"{pad}{d.rule:<3} {format_context(d.ctx)} |- {_show(d.subject)}"
    else:
        line = (f"{pad}{d.rule:<3} {format_context(d.ctx)} |- {_show(d.subject)}"
                f" |> {format_context(d.out)}")
    parts = [line]
    for p in d.premises:
        parts.append(format_derivation(p, indent + 1))
    return "\n".join(parts)

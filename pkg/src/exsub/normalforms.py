"""Normal-form recognition and conversion back to ordinary lambda terms.

Propagation normal forms are built from variables and blocks by
application and abstraction, where a block is a chain of weakenings
closed off by a weakening of the variable it denotes:

    B ::= W z * z | W x * B

A term admitted by a pure set that is also normal for the propagation
rules together with Alpha contains no blocks at all; `to_pure` relies on
that and refuses (rather than repairs) any surviving composition.
"""

from __future__ import annotations

from .pure import PureTerm
from .syntax import print_term
from .terms import App, Comp, Lam, Term, VarRef, Weak


class ContainsBlock(Exception):
    """A composition survived where a pure lambda term was guaranteed."""

    def __init__(self, offending: Term):
        super().__init__(f"residual substitution in {print_term(offending)}")
        self.offending = offending


def is_block(t: Term) -> bool:
    match t:
        case Comp(Weak(x), VarRef(z)):
            return x == z
        case Comp(Weak(_), b):
            return is_block(b)
    return False


def is_sigma_nf(t: Term) -> bool:
    """Membership in the normal-form grammar for the propagation rules."""
    match t:
        case VarRef(_):
            return True
        case App(f, a):
            return is_sigma_nf(f) and is_sigma_nf(a)
        case Lam(_, b):
            return is_sigma_nf(b)
        case Comp(_, _):
            return is_block(t)
    raise TypeError(f"not a term: {t!r}")


def to_pure(t: Term) -> PureTerm:
    """Identity embedding into pure lambda syntax.

    Intended for terms admitted by a pure set and normal under the
    propagation rules plus Alpha; such terms provably contain no
    compositions, so any composition found here is a hard failure worth
    surfacing with the offending subterm.
    """
    match t:
        case VarRef(_):
            return t
        case App(f, a):
            return App(to_pure(f), to_pure(a))
        case Lam(x, b):
            return Lam(x, to_pure(b))
        case Comp(_, _):
            raise ContainsBlock(t)
    raise TypeError(f"not a term: {t!r}")

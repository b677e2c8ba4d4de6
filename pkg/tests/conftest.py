"""Shared strategies and independent checkers for the test suite."""

from __future__ import annotations

from random import Random

from hypothesis import strategies as st

from exsub.contexts import Context
from exsub.judgements import Derivation
from exsub.terms import (App, Comp, Lam, Lift, Rename, Slash, VarRef, Weak)

NAMES = ("x", "y", "z", "w")

var_names = st.sampled_from(NAMES)

contexts = st.builds(
    Context,
    st.frozensets(var_names, max_size=3),
    st.lists(var_names, max_size=3).map(tuple),
)


raw_terms = st.deferred(lambda: st.one_of(
    st.builds(VarRef, var_names),
    st.builds(App, raw_terms, raw_terms),
    st.builds(Lam, var_names, raw_terms),
    st.builds(Comp, raw_substs, raw_terms),
))

raw_substs = st.deferred(lambda: st.one_of(
    st.builds(Slash, raw_terms, var_names),
    st.builds(Weak, var_names),
    st.builds(Rename, var_names, var_names),
    st.builds(Lift, raw_substs, var_names),
))


def grow_context(rng: Random, ctx: Context, moves: int = 3) -> Context:
    """A context above `ctx`, reached by the two generating moves of the
    order: add a fresh global, or shift a name onto the front of the local
    list while dropping it from the globals."""
    pool = NAMES + ("p", "q", "r")
    for _ in range(rng.randint(0, moves)):
        if rng.random() < 0.5:
            fresh = [v for v in pool if v not in ctx.globals]
            if fresh:
                ctx = Context(ctx.globals | {rng.choice(fresh)}, ctx.locals)
        else:
            x = rng.choice(pool)
            ctx = Context(ctx.globals - {x}, (x,) + ctx.locals)
    return ctx


def assert_valid_derivation(d: Derivation) -> None:
    """Re-verify every node of a derivation against the inference rules,
    independently of how the checker constructed it."""
    ctx, subj = d.ctx, d.subject
    match d.rule:
        case "R1":
            assert isinstance(subj, VarRef) and ctx.is_set and subj.name in ctx.globals
            assert not d.premises and d.out is None
        case "R2":
            assert isinstance(subj, VarRef) and ctx.locals and ctx.top == subj.name
            assert not d.premises
        case "R3":
            assert isinstance(subj, VarRef) and ctx.locals and ctx.top != subj.name
            (p,) = d.premises
            assert p.ctx == ctx.pop() and p.subject == subj
        case "R4":
            assert isinstance(subj, App)
            pf, pa = d.premises
            assert pf.ctx == ctx and pa.ctx == ctx
            assert pf.subject == subj.fn and pa.subject == subj.arg
        case "R5":
            assert isinstance(subj, Lam)
            (p,) = d.premises
            assert p.ctx == ctx.push(subj.var) and p.subject == subj.body
        case "R6":
            assert isinstance(subj, Comp)
            ps, pb = d.premises
            assert ps.ctx == ctx and ps.subject == subj.sub and ps.out is not None
            assert pb.ctx == ps.out and pb.subject == subj.body
        case "R7":
            assert isinstance(subj, Slash)
            (p,) = d.premises
            assert p.ctx == ctx and p.subject == subj.term
            assert d.out == ctx.push(subj.var)
        case "R8":
            assert isinstance(subj, Weak) and ctx.locals and ctx.top == subj.var
            assert not d.premises and d.out == ctx.pop()
        case "R9":
            assert isinstance(subj, Rename) and ctx.locals and ctx.top == subj.new
            assert not d.premises and d.out == ctx.pop().push(subj.old)
        case "R10":
            assert isinstance(subj, Lift) and ctx.locals and ctx.top == subj.var
            (p,) = d.premises
            assert p.ctx == ctx.pop() and p.subject == subj.sub and p.out is not None
            assert d.out == p.out.push(subj.var)
        case _:
            raise AssertionError(f"unknown rule {d.rule}")
    for p in d.premises:
        assert_valid_derivation(p)

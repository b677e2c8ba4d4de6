"""Random generation of terms for the property harness.

The central generator builds a derivation top-down, so every pair it
returns is derivable by construction; rejection sampling of raw terms
would almost never produce a well-formed composition.  Substitutions are
generated against the context they must accept: weakening, renaming, and
lift require a matching local tail and are offered exactly when it is
available.

Also provided: raw (possibly ill-formed) syntax trees for parser tests,
de Bruijn terms built against the arity judgement, marked de Bruijn terms
for the path-order tests, and erasures of simply typed skeletons, which
are good terms with terminating Beta behaviour at any fuel worth having.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .contexts import Context
from .debruijn import (DApp, DBoldLam, DBSub, DBTerm, DComp, DId, DLam,
                       DLift, DShift, DSlash, FreeName, One)
from .terms import (App, Comp, Lam, Lift, Rename, Slash, Subst, Term, Var,
                    VarRef, Weak)

POOL = ("x", "y", "z", "w", "v", "u", "t", "s")


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    size: int = 40            # max term size
    pool: int = 4             # number of distinct variable names
    count: int = 1000         # trials per suite
    fuel: int = 10000
    max_globals: int = 3      # context shape
    max_locals: int = 2
    # relative weights of term and substitution constructors
    mix: dict = field(default_factory=lambda: {
        "var": 4, "app": 3, "lam": 3, "comp": 3,
        "slash": 3, "weak": 2, "rename": 2, "lift": 2,
    })

    def __post_init__(self):
        if self.size <= 0 or self.pool <= 0 or self.count <= 0 or self.fuel <= 0:
            raise ValueError("all generation bounds must be positive")

    @property
    def names(self) -> tuple[Var, ...]:
        return POOL[: self.pool]


def gen_context(rng: Random, cfg: GenConfig) -> Context:
    names = cfg.names
    globs = frozenset(rng.sample(names, rng.randint(0, min(cfg.max_globals, len(names)))))
    locs = tuple(rng.choice(names) for _ in range(rng.randint(0, cfg.max_locals)))
    return Context(globs, locs)


def _members(ctx: Context) -> list[Var]:
    return sorted(ctx.globals | set(ctx.locals))


def gen_term(rng: Random, cfg: GenConfig, ctx: Context, size: int) -> Term:
    members = _members(ctx)
    if size <= 1:
        if members:
            return VarRef(rng.choice(members))
        # an empty context admits only abstractions; bind and use a name
        x = rng.choice(cfg.names)
        return Lam(x, VarRef(x))
    choices, weights = [], []
    for kind in ("var", "app", "lam", "comp"):
        if kind == "var" and not members:
            continue
        choices.append(kind)
        weights.append(cfg.mix[kind])
    kind = rng.choices(choices, weights)[0]
    if kind == "var":
        return VarRef(rng.choice(members))
    if kind == "app":
        left = rng.randint(1, size - 2) if size > 2 else 1
        return App(gen_term(rng, cfg, ctx, left),
                   gen_term(rng, cfg, ctx, size - 1 - left))
    if kind == "lam":
        x = rng.choice(cfg.names)
        return Lam(x, gen_term(rng, cfg, ctx.push(x), size - 1))
    sub_size = rng.randint(1, max(1, size // 2))
    s, delta = gen_subst(rng, cfg, ctx, sub_size)
    return Comp(s, gen_term(rng, cfg, delta, max(1, size - 1 - sub_size)))


def gen_subst(rng: Random, cfg: GenConfig, ctx: Context,
              size: int) -> tuple[Subst, Context]:
    """A substitution accepted by `ctx`, with its output context."""
    choices, weights = ["slash"], [cfg.mix["slash"]]
    if ctx.locals:
        for kind in ("weak", "rename", "lift"):
            choices.append(kind)
            weights.append(cfg.mix[kind])
    kind = rng.choices(choices, weights)[0]
    if kind == "slash":
        x = rng.choice(cfg.names)
        return Slash(gen_term(rng, cfg, ctx, max(1, size - 1)), x), ctx.push(x)
    if kind == "weak":
        return Weak(ctx.top), ctx.pop()
    if kind == "rename":
        x = rng.choice(cfg.names)
        return Rename(ctx.top, x), ctx.pop().push(x)
    inner, delta = gen_subst(rng, cfg, ctx.pop(), max(1, size - 1))
    return Lift(inner, ctx.top), delta.push(ctx.top)


def gen_wellformed(cfg: GenConfig, rng: Random | None = None) -> tuple[Context, Term]:
    """A derivable pair: the context and a term it admits."""
    if rng is None:
        rng = Random(cfg.seed)
    ctx = gen_context(rng, cfg)
    return ctx, gen_term(rng, cfg, ctx, rng.randint(1, cfg.size))


def gen_raw_term(rng: Random, size: int, names: tuple[Var, ...] = POOL[:4]) -> Term:
    """An arbitrary syntax tree, with no well-formedness discipline."""
    if size <= 1:
        return VarRef(rng.choice(names))
    kind = rng.choices(("app", "lam", "comp"), (3, 2, 3))[0]
    if kind == "app":
        left = rng.randint(1, size - 2) if size > 2 else 1
        return App(gen_raw_term(rng, left, names),
                   gen_raw_term(rng, size - 1 - left, names))
    if kind == "lam":
        return Lam(rng.choice(names), gen_raw_term(rng, size - 1, names))
    return Comp(gen_raw_subst(rng, size // 2, names),
                gen_raw_term(rng, max(1, size - 1 - size // 2), names))


def gen_raw_subst(rng: Random, size: int, names: tuple[Var, ...] = POOL[:4]) -> Subst:
    kind = rng.choices(("slash", "weak", "rename", "lift"), (3, 2, 2, 2))[0]
    if kind == "slash":
        return Slash(gen_raw_term(rng, max(1, size - 1), names), rng.choice(names))
    if kind == "weak":
        return Weak(rng.choice(names))
    if kind == "rename":
        return Rename(rng.choice(names), rng.choice(names))
    return Lift(gen_raw_subst(rng, max(1, size - 1), names), rng.choice(names))


def gen_db(rng: Random, cfg: GenConfig, n: int, size: int) -> DBTerm:
    """A de Bruijn term well-formed at arity `n`, built against the
    arity rules top-down."""
    if size <= 1:
        if n == 0:
            return FreeName(rng.choice(cfg.names))
        return One()
    kind = rng.choices(("leaf", "app", "lam", "comp"), (2, 3, 2, 4))[0]
    if kind == "leaf":
        return FreeName(rng.choice(cfg.names)) if n == 0 else One()
    if kind == "app":
        left = rng.randint(1, size - 2) if size > 2 else 1
        return DApp(gen_db(rng, cfg, n, left), gen_db(rng, cfg, n, size - 1 - left))
    if kind == "lam":
        return DLam(gen_db(rng, cfg, n + 1, size - 1))
    sub_size = rng.randint(1, max(1, size // 2))
    s, m = gen_db_sub(rng, cfg, n, sub_size)
    return DComp(s, gen_db(rng, cfg, m, max(1, size - 1 - sub_size)))


def gen_db_sub(rng: Random, cfg: GenConfig, n: int,
               size: int) -> tuple[DBSub, int]:
    """A substitution well-formed at input arity `n`, with its output arity."""
    choices, weights = ["slash"], [3]
    if n >= 1:
        choices += ["shift", "id", "lift"]
        weights += [3, 2, 3]
    kind = rng.choices(choices, weights)[0]
    if kind == "slash":
        return DSlash(gen_db(rng, cfg, n, max(1, size - 1))), n + 1
    if kind == "shift":
        return DShift(), n - 1
    if kind == "id":
        return DId(), n
    inner, m = gen_db_sub(rng, cfg, n - 1, max(1, size - 1))
    return DLift(inner), m + 1


def gen_db_marked(rng: Random, cfg: GenConfig, size: int) -> DBTerm:
    """An arbitrary marked de Bruijn term (no arity discipline); used to
    exercise the labelled path order on every rule."""
    if size <= 1:
        return rng.choice((One(), FreeName(rng.choice(cfg.names))))
    kind = rng.choices(("app", "lam", "mark", "comp"), (2, 2, 3, 5))[0]
    if kind == "app":
        left = rng.randint(1, size - 2) if size > 2 else 1
        return DApp(gen_db_marked(rng, cfg, left),
                    gen_db_marked(rng, cfg, size - 1 - left))
    if kind == "lam":
        return DLam(gen_db_marked(rng, cfg, size - 1))
    if kind == "mark":
        return DBoldLam(gen_db_marked(rng, cfg, size - 1))
    sub_size = rng.randint(1, max(1, size // 2))
    kinds = rng.choices(("slash", "shift", "id", "lift"), (3, 3, 2, 3))[0]
    s: DBSub
    if kinds == "slash":
        s = DSlash(gen_db_marked(rng, cfg, sub_size))
    elif kinds == "shift":
        s = DShift()
    elif kinds == "id":
        s = DId()
    else:
        s = DLift(gen_raw_db_sub(rng, cfg, sub_size))
    return DComp(s, gen_db_marked(rng, cfg, max(1, size - 1 - sub_size)))


def gen_raw_db_sub(rng: Random, cfg: GenConfig, size: int) -> DBSub:
    kind = rng.choices(("slash", "shift", "id", "lift"), (3, 3, 2, 2))[0]
    if kind == "slash":
        return DSlash(gen_db_marked(rng, cfg, max(1, size - 1)))
    if kind == "shift":
        return DShift()
    if kind == "id":
        return DId()
    return DLift(gen_raw_db_sub(rng, cfg, max(1, size - 1)))


# Simply typed skeletons.  Types are None (base) or (left, right) pairs.

_FREE_TYPED = (("f", (None, None)), ("g", (None, (None, None))), ("c", None),
               ("d", None))


def _gen_type(rng: Random, depth: int):
    if depth <= 0 or rng.random() < 0.6:
        return None
    return _gen_type(rng, depth - 1), _gen_type(rng, depth - 1)


def gen_simply_typed(rng: Random, cfg: GenConfig, size: int | None = None) -> Term:
    """The erasure of a random simply typed term: a good pure term whose
    Beta reduction terminates."""
    size = cfg.size if size is None else size
    env = list(_FREE_TYPED)
    counter = [0]

    def go(env, ty, budget: int) -> Term:
        candidates = [x for x, t in env if t == ty]
        if budget <= 1:
            if candidates:
                return VarRef(rng.choice(candidates))
            if ty is None:
                return VarRef("c")  # base-typed free name always available
            lo, hi = ty
            counter[0] += 1
            x = f"b{counter[0]}"
            return Lam(x, go(env + [(x, lo)], hi, 1))
        kinds, weights = [], []
        if ty is not None:
            kinds.append("lam")
            weights.append(4)
        if candidates:
            kinds.append("var")
            weights.append(2)
        kinds.append("app")
        weights.append(3)
        kind = rng.choices(kinds, weights)[0]
        if kind == "var":
            return VarRef(rng.choice(candidates))
        if kind == "lam":
            lo, hi = ty
            counter[0] += 1
            x = f"b{counter[0]}"
            return Lam(x, go(env + [(x, lo)], hi, budget - 1))
        arg_ty = _gen_type(rng, 1)
        half = max(1, budget // 2)
        fn = go(env, (arg_ty, ty), half)
        arg = go(env, arg_ty, budget - half)
        return App(fn, arg)

    return go(env, _gen_type(rng, 2), rng.randint(2, max(2, size)))

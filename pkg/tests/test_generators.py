"""The random generators: derivability by construction, coverage, determinism."""

from __future__ import annotations

from collections import Counter
from random import Random

import pytest

from exsub.debruijn import db_check
from exsub.generators import (GenConfig, gen_db, gen_db_sub, gen_simply_typed,
                              gen_subst, gen_wellformed)
from exsub.judgements import derive
from exsub.pure import classical_normalize, is_pure
from exsub.terms import VarRef, node_size


def test_config_rejects_bad_bounds():
    with pytest.raises(ValueError):
        GenConfig(size=0)
    with pytest.raises(ValueError):
        GenConfig(count=-1)


def test_smallest_terms_are_variables_in_scope():
    rng = Random(61)
    cfg = GenConfig(seed=61, size=1)
    for _ in range(100):
        ctx, t = gen_wellformed(cfg, rng)
        if isinstance(t, VarRef):
            assert t.name in ctx


def test_generated_pairs_are_derivable():
    rng = Random(62)
    cfg = GenConfig(seed=62, size=40)
    for _ in range(500):
        ctx, t = gen_wellformed(cfg, rng)
        derive(ctx, t)  # must not raise
        assert node_size(t) <= 2 * cfg.size  # budget is approximate, not wild


def test_rule_coverage_histogram_10k():
    rng = Random(0)
    cfg = GenConfig(seed=0, size=40)
    counts: Counter[str] = Counter()
    nodes = 0
    for _ in range(10_000):
        ctx, t = gen_wellformed(cfg, rng)
        stack = [derive(ctx, t)]
        while stack:
            d = stack.pop()
            counts[d.rule] += 1
            nodes += 1
            stack.extend(d.premises)
    for rule in [f"R{i}" for i in range(1, 11)]:
        assert counts[rule] / nodes >= 0.01, f"{rule} below 1%: {counts[rule]}/{nodes}"


def test_generation_is_deterministic_per_seed():
    cfg = GenConfig(seed=99, size=30)
    assert gen_wellformed(cfg) == gen_wellformed(cfg)
    a = [gen_wellformed(cfg, Random(5)) for _ in range(20)]
    b = [gen_wellformed(cfg, Random(5)) for _ in range(20)]
    assert a == b


def test_gen_subst_output_context():
    rng = Random(63)
    cfg = GenConfig(seed=63)
    from exsub.generators import gen_context
    from exsub.judgements import derive_subst
    for _ in range(300):
        ctx = gen_context(rng, cfg)
        s, delta = gen_subst(rng, cfg, ctx, rng.randint(1, 8))
        _, out = derive_subst(ctx, s)
        assert out == delta


def test_gen_db_respects_arity():
    rng = Random(64)
    cfg = GenConfig(seed=64)
    for _ in range(500):
        n = rng.randint(0, 3)
        a = gen_db(rng, cfg, n, rng.randint(1, 20))
        assert db_check(n, a)
        s, m = gen_db_sub(rng, cfg, n, rng.randint(1, 8))
        from exsub.debruijn import db_check_sub
        assert db_check_sub(n, s) == m


def test_simply_typed_erasures_are_pure_and_terminating():
    rng = Random(65)
    cfg = GenConfig(seed=65, size=24)
    for _ in range(300):
        t = gen_simply_typed(rng, cfg)
        assert is_pure(t)
        _, exhausted = classical_normalize(t, fuel=5000)
        assert not exhausted

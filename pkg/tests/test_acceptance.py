"""Acceptance criteria, one test per criterion, each printing a PASS line.

Counts, seeds, sizes, fuel, and runtime bounds are pinned here; nothing is
deferred to later calibration.  Run with `pytest tests/test_acceptance.py -s`
to watch the lines as they appear.
"""

from __future__ import annotations

import time

from exsub.contexts import context, ctx_le, ctx_sup
from exsub.debruijn import (UPSILON2, DBoldLam, DComp, DId, DLam, DShift,
                            FreeName, One, translate)
from exsub.freevars import fv
from exsub.generators import GenConfig
from exsub.judgements import derive
from exsub.rewrite import FULL, normalize
from exsub.suites import run_suite
from exsub.syntax import parse_context, parse_term, print_term

from test_contexts import closure_le, universe

C = context


def report(n: int, text: str):
    print(f"ACCEPTANCE {n}: PASS - {text}")


def test_acceptance_1_golden_reductions():
    t0 = time.time()

    nf, trace, _ = normalize(parse_term(r"(\x.x) y"), FULL)
    assert print_term(nf) == "y"

    nf, trace, _ = normalize(parse_term(r"(\x.\y.x) z"), FULL)
    assert print_term(nf) == r"\y. z"
    assert [s.rule for s in trace.steps] == ["Beta", "Lambda", "LiftShiftP",
                                             "Var", "W"]

    nf, trace, _ = normalize(parse_term(r"(\x.\y.x) y"), FULL)
    assert print_term(nf) == r"\z. y"
    rules = [s.rule for s in trace.steps]
    assert len(rules) == 7 and rules.count("Alpha") == 1
    assert sorted(rules) == sorted(["Beta", "Lambda", "LiftShiftP", "Var",
                                    "Alpha", "IdShift", "W"])

    nf, _, _ = normalize(parse_term(r"(\x.\y.\z. x z (y z)) (\x.\y.x)"), FULL)
    assert print_term(nf) == r"\y. \z. z"

    elapsed = time.time() - t0
    assert elapsed < 1.0, f"golden reductions took {elapsed:.2f}s"
    report(1, f"four golden reductions exact in {elapsed * 1000:.0f} ms")


def test_acceptance_2_fv_goldens():
    assert fv(parse_term(r"\x. x y")) == C({"y"}, [])
    assert fv(parse_term(r"\x. W x * x")) == C({"x"}, [])
    assert fv(parse_term(r"\x. W y * z")) is None
    assert fv(parse_term(r"\x. W y * x y")) is None
    report(2, "free-variable goldens exact, including undefinedness")


def test_acceptance_3_context_lattice():
    chain = [C({"z"}, ["y"]), C({"z", "x"}, ["y"]),
             C({"z"}, ["x", "y"]), C({"z", "x"}, ["x", "y"])]
    for a, b in zip(chain, chain[1:]):
        assert ctx_le(a, b) and not ctx_le(b, a)
    assert ctx_sup(C({"x"}, ["z"]), C({"y", "z"}, [])) == C({"x", "y"}, ["z"])

    t0 = time.time()
    univ = universe(names=("x", "y", "z"), max_local=3)
    reach = closure_le(univ)
    agree = sum(ctx_le(a, b) == ((a, b) in reach) for a in univ for b in univ)
    assert agree == len(univ) ** 2
    elapsed = time.time() - t0
    assert elapsed < 10.0, f"brute force took {elapsed:.2f}s"
    report(3, f"order goldens exact; closure equivalence on {len(univ)} contexts "
              f"({len(univ) ** 2} pairs) in {elapsed:.2f}s")


def test_acceptance_4_translation_goldens():
    d = derive(parse_context("{x}"), parse_term(r"\x. W x * x"))
    assert translate(d) == DLam(DComp(DShift(), FreeName("x")))
    assert translate(d, UPSILON2) == DBoldLam(DComp(DShift(), FreeName("x")))
    d2 = derive(parse_context("{}"), parse_term(r"\y. {y x} * x"))
    assert translate(d2) == DLam(DComp(DId(), One()))
    report(4, "de Bruijn translation goldens structurally exact")


def test_acceptance_5_property_suites():
    t0 = time.time()
    names = ("subject-reduction", "fv-monotone", "fv-least",
             "translation-simulation", "join-lemmas", "nf-grammar")
    # join-lemmas also carries the local-confluence sanity check
    results = []
    for name in names:
        r = run_suite(name, GenConfig(seed=0, count=1000, size=40))
        assert not r.failures, r.to_text()
        results.append(f"{name}={r.passes}/{r.trials}")
    elapsed = time.time() - t0
    assert elapsed < 120.0, f"suites took {elapsed:.1f}s"
    report(5, f"zero failures in {len(names)} suites of 1000 trials "
              f"({elapsed:.1f}s): " + ", ".join(results))


def test_acceptance_6_termination_certificates():
    r = run_suite("upsilon-weights", GenConfig(seed=0, count=1000, size=40))
    assert not r.failures, r.to_text()
    r2 = run_suite("lpo-decrease", GenConfig(seed=0, count=1000, size=40))
    assert not r2.failures, r2.to_text()
    r3 = run_suite("sigma-alpha-termination",
                   GenConfig(seed=0, count=10_000, size=40, fuel=10_000))
    assert not r3.failures, r3.to_text()
    assert r3.inconclusives == 0
    report(6, "1000 weight-pair descents, 1000 path-order descents, "
              "10000 normalizations within fuel, zero violations")


def test_acceptance_7_confluence_harness():
    r = run_suite("confluence", GenConfig(seed=0, count=500, size=40))
    assert not r.failures, r.to_text()
    assert r.inconclusives / r.trials < 0.05
    report(7, f"500 seeds rejoined; inconclusive rate "
              f"{r.inconclusives}/{r.trials}")


def test_acceptance_8_oracle_equivalence():
    r = run_suite("oracle-equivalence", GenConfig(seed=0, count=200, size=40))
    assert not r.failures, r.to_text()
    report(8, f"200 erased simply typed terms agree with the classical "
              f"oracle ({r.inconclusives} inconclusive)")

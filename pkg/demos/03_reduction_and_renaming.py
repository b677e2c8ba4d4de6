r"""Reduction chains, including explicit renaming of bound variables.

Beta makes a substitution explicit; the propagation rules push it through
the term; the Alpha rule renames a binder whose variable is free in the
abstraction itself, picking the first fresh name in a fixed order so every
trace is reproducible.
"""

from exsub import FULL, SIGMA, SIGMA_ALPHA, normalize, parse_term, print_term


def run(src, rules=FULL, label=""):
    t = parse_term(src)
    nf, trace, exhausted = normalize(t, rules)
    print(f"{label or src}")
    print(trace.to_text())
    print(f"  => {print_term(nf)}{'  (fuel exhausted)' if exhausted else ''}")
    print()


run(r"(\x.x) y")

# substituting a name that is about to be rebound: the binder must step
# aside, and the renaming is an ordinary rewrite step
run(r"(\x.\y.x) y")

# the same applied to a fresh name needs no renaming
run(r"(\x.\y.x) z")

# S applied to K
run(r"(\x.\y.\z. x z (y z)) (\x.\y.x)")

# without Alpha, propagation normal forms may keep weakening blocks
run(r"\y. W y * y", SIGMA, label=r"\y. W y * y  (propagation only)")
run(r"\y. W y * y", SIGMA_ALPHA, label=r"\y. W y * y  (with renaming)")

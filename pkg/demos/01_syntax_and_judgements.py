"""Tour of the syntax and the judgement engine.

Terms mix ordinary lambda syntax with four substitution forms:

    [B/x]    substitute B for the innermost bound x
    W x      skip (weaken away) the innermost bound x
    {y x}    rebind the innermost bound y as x
    S^x      push S under one binder for x

A context pairs a set of ambient names with a list of bound names, and a
term is well-formed when some context admits it.  The checker builds the
unique derivation bottom-up, so failures point at the exact node.
"""

from exsub import (IllFormed, derive, format_context, format_derivation,
                   parse_context, parse_term, print_term, well_formed)

examples = [
    r"(\x.x) y",
    r"\x. W x * x",          # the bound x is skipped: the body x is free
    r"[y/x] * x",
    r"\x.\x.x",              # shadowing is fine
    r"{y x} * x",
]

for src in examples:
    t = parse_term(src)
    print(f"term      {print_term(t)}")
    try:
        ctx = well_formed(t)
        print(f"least ctx {format_context(ctx)}")
    except IllFormed as e:
        print(f"ill-formed: {e}")
    print()

print("derivation of {x} |- \\x. W x * x")
print(format_derivation(derive(parse_context("{x}"), parse_term(r"\x. W x * x"))))
print()

print("a weakening of the wrong name cannot be bound:")
try:
    well_formed(parse_term(r"\x. W y * x"))
except IllFormed as e:
    print(f"  {e}")

"""Translating named terms to de Bruijn form, and the equivalence it gives.

The translation consumes the unique derivation: local hits become the
index 1, strips become shifts, weakening becomes shift, renaming becomes
the identity substitution, lift becomes lift.  Two terms are equivalent in
a context when they translate to the same de Bruijn term; on terms a pure
set admits, this is exactly alpha congruence.
"""

from exsub import (UPSILON2, derive, equiv_alpha, equiv_gamma, parse_context,
                   parse_term, print_db, translate)

g = parse_context("{x}")
for src in (r"\x. W x * x", r"\y. W y * x", r"\y. x", r"\x. x"):
    d = derive(g, parse_term(src))
    a = translate(d)
    print(f"{src:16s} ->  {print_db(a):12s} i.e. {print_db(a, 'compose')}")
print()

a, b = parse_term(r"\x. W x * x"), parse_term(r"\y. x")
print(r"\x. W x * x  ==  \y. x ?", equiv_alpha(a, b))
print(r"\x. W x * x  ==  \x. x ?", equiv_alpha(a, parse_term(r"\x. x")))
print()

# the marked flavor tags binders whose variable is free in the abstraction
d = derive(g, parse_term(r"\x. W x * x"))
print("marked flavor:", print_db(translate(d, UPSILON2)))
d2 = derive(g, parse_term(r"\y. x"))
print("plain binder stays plain:", print_db(translate(d2, UPSILON2)))
print()

print("equivalence is relative to a context:")
g2 = parse_context("{x}; y")
print("  W y * x == x in {x}; y ?",
      equiv_gamma(parse_term("W y * x"), parse_term("x"), g2))

"""Free variables as contexts, and the lattice they live in.

With explicit substitutions the free variables of a term are not a set
but a context: a set of ambient names plus an ordered tail of bound ones.
The context order has suprema exactly on compatible pairs, and fv(A) is
the least context admitting A.
"""

from exsub import (context, ctx_le, ctx_sup, format_context, fv, o_lambda,
                   parse_term)


def show(src):
    c = fv(parse_term(src))
    print(f"fv({src:24s}) = {'undefined' if c is None else format_context(c)}")


show(r"\x. x y")
show(r"\x. W x * x")      # x occurs free in a binder for x
show(r"\y. W y * y")
show(r"W x * z")          # a local tail appears
show(r"\x. W y * z")      # undefined: the weakening does not match
print()

print("the order grows by adding globals or shifting them into the tail:")
chain = [context({"z"}, ["y"]), context({"z", "x"}, ["y"]),
         context({"z"}, ["x", "y"]), context({"z", "x"}, ["x", "y"])]
for a, b in zip(chain, chain[1:]):
    print(f"  {format_context(a)}  <  {format_context(b)}:", ctx_le(a, b))
print()

a, b = context({"x"}, ["z"]), context({"y", "z"}, [])
print(f"sup of {format_context(a)} and {format_context(b)} =",
      format_context(ctx_sup(a, b)))
incomp = ctx_sup(context((), ["x"]), context((), ["y"]))
print("sup of {}; x and {}; y =", incomp, "(incompatible tails)")
print()

g = context({"x", "y"}, [])
print("binder elimination: o_lambda('x', {x,y}) =",
      format_context(o_lambda("x", g)))
print("o_lambda('x', {}; y) =", o_lambda("x", context((), ["y"])))

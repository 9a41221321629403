"""Walkthrough: the counting constants a and b for a degree-6 example.

N is the order-18 group ((C3 x C3) : C2) inside S6; G1 is its index-2
abelian part.  The pair (G1, N) is the classical counterexample shape:
the naive prediction for N alone gives X^{1/2}, but the G1-component
contributes X^{1/2} log X.
"""

from malle_lab import (
    TwistSpec,
    a_invariant,
    b_constant,
    closure,
    find_cyclic_complement,
    minimal_index_classes,
    orbit_blocks,
    parse_cycles,
    render_growth,
    revised_b,
    FunctionField,
)

N = closure([parse_cycles(s, 6) for s in ("(1 2 3)", "(4 5 6)", "(14)(25)(36)")], 6)
G1 = closure([parse_cycles("(1 2 3)", 6), parse_cycles("(4 5 6)", 6)], 6)

print(f"|N| = {N.order}, |G1| = {G1.order}")
print(f"a(N)  = {a_invariant(N)}")
print(f"a(G1) = {a_invariant(G1)}")

ctx = find_cyclic_complement(N, G1)
print(f"quotient order d = {ctx.d}, effective d' = {ctx.d_prime}, split = {ctx.split}")

print("\nminimal-index classes of G1 (the four single 3-cycles):")
for c in minimal_index_classes(G1):
    print(f"  {c.representative!r}  (index {c.index})")

for q in (5, 11):
    spec = TwistSpec(q=q, e=1, ctx=ctx)
    blocks = orbit_blocks(spec, restrict_minimal=True)
    print(f"\nq = {q}: twist orbits on the minimal classes:")
    for blk in blocks:
        print(f"  orbit of {blk.size} classes, weight {blk.weight}")
    b = b_constant(ctx, q)
    print(f"  b(G1, N, F_{q}) = {b}  ->  {render_growth(a_invariant(G1), b)}")

print("\nrevised constant over all admissible normal subgroups (q = 5):")
rep = revised_b(N, FunctionField(5))
for row in rep.rows:
    print(f"  |G| = {row.G_order:3d}  a = {row.a}  status = {row.status}  b = {row.b}")
print(f"max b = {rep.value}: the G1 row dominates the full-group row")

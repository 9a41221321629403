"""Walkthrough: from twist-orbit blocks to the predicted asymptotic.

The weighted count has the Euler product prod 1/(1 - q^{|O|} u^{r(O)}).
Expanding it exactly, reading off the dominant pole, and checking the
partial sums against X^a (log X)^{b-1} reproduces the X^{1/2} log X
shape for the degree-6 example.
"""

from malle_lab import (
    TwistSpec,
    brute_force_h3,
    closure,
    dominant_pole,
    euler_product,
    expand,
    find_cyclic_complement,
    orbit_blocks,
    parse_cycles,
    render_growth,
    tauberian_fit,
)

N = closure([parse_cycles(s, 6) for s in ("(1 2 3)", "(4 5 6)", "(14)(25)(36)")], 6)
G1 = closure([parse_cycles("(1 2 3)", 6), parse_cycles("(4 5 6)", 6)], 6)
ctx = find_cyclic_complement(N, G1)
spec = TwistSpec(q=5, e=1, ctx=ctx)

blocks = orbit_blocks(spec, restrict_minimal=False)
gf = euler_product(blocks, 5)
print("Euler factors (q-exponent, u-exponent):", gf.factors)

table = expand(gf, 60)
print("first nonzero coefficients:")
for r in sorted(table.values):
    if table.values[r] and r:
        print(f"  u^{r}: {table.values[r]}")
    if r > 20:
        break

oracle = brute_force_h3(blocks, 5, 20)
match = all(table.values[r] == oracle.values[r] for r in oracle.values)
print(f"oracle agreement to R=20: {match}")

pole = dominant_pole(gf)
print(f"\ndominant pole: a = {pole.a}, b = {pole.b}")
print(f"predicted growth: {render_growth(pole.a, pole.b)}")
print(f"caveat: {pole.caveat}")

fit = tauberian_fit(table, pole)
print(
    f"\nTauberian fit: ratios in [{fit.min_ratio:.4f}, {fit.max_ratio:.4f}], "
    f"spread {fit.spread:.4f} (window {fit.window}) -> ok = {fit.ok}"
)

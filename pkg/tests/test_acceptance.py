"""Acceptance gate: the nine pinned criteria, one pass/fail line each.

Each test prints exactly one line "[criterion N] PASS|FAIL: summary" and
then asserts.  Criteria 1 and 8 contain clauses that the implementation
computes differently from the pinned expectation; they are asserted as
pinned and allowed to fail (see the decisions ledger in the project
notes for the analysis).
"""

import math
import time
from fractions import Fraction
from itertools import product as iproduct

from malle_lab.braid import class_vector_of, enumerate_nielsen
from malle_lab.groups import (
    FiniteGroup,
    a_invariant,
    closure,
    find_cyclic_complement,
    normal_subgroups_with_cyclic_quotient,
)
from malle_lab.invariants import (
    FunctionField,
    RationalNumberField,
    TwistSpec,
    b_constant,
    b_e,
    minimal_index_classes,
    orbit_blocks,
    render_growth,
    revised_b,
)
from malle_lab.perms import parse_cycles, product
from malle_lab.presets import abelian_q, abelian_suite, get_preset
from malle_lab.series import (
    RationalGF,
    brute_force_h3,
    dominant_pole,
    euler_product,
    expand,
    prop_main_check,
    tauberian_fit,
)


VERDICTS: list[str] = []


def verdict(n, ok, summary):
    line = f"[criterion {n}] {'PASS' if ok else 'FAIL'}: {summary}"
    VERDICTS.append(line)
    print(line)
    assert ok, summary


def preset_groups():
    """All distinct preset ambient groups with their admissible q lists."""
    out = []
    out.append((get_preset("klueners-s6").spec.group(), (5, 11)))
    out.append((get_preset("wreath-s18").spec.group(), (5, 11)))
    for label, spec in sorted(abelian_suite().items()):
        out.append((spec.group(), abelian_q(label)))
    out.append((get_preset("s3-clebsch").spec.group(), (5,)))
    return out


def test_criterion_1_klueners_counterexample():
    t0 = time.monotonic()
    pre = get_preset("klueners-s6")
    N = pre.spec.group()
    G1 = pre.spec.subgroup("G1")
    G2 = pre.spec.subgroup("G2")
    failures = []
    for q in (5, 11):
        ctx1 = find_cyclic_complement(N, G1)
        if not (a_invariant(G1) == Fraction(1, 2) and b_constant(ctx1, q) == 2):
            failures.append(f"(G1,N) q={q}")
        ctxN = find_cyclic_complement(N, N)
        if not (a_invariant(N) == Fraction(1, 2) and b_constant(ctxN, q) == 1):
            failures.append(f"(N,N) q={q}")
        ctx2 = find_cyclic_complement(N, G2)
        got_a, got_b = a_invariant(G2), b_constant(ctx2, q)
        if not (got_a == Fraction(1, 4) and got_b == 1):
            failures.append(f"(G2,N) q={q}: a={got_a}, b={got_b}")
    if render_growth(Fraction(1, 2), 2) != "X^{1/2} log X":
        failures.append("aggregated prediction")
    elapsed = time.monotonic() - t0
    if elapsed >= 10:
        failures.append(f"runtime {elapsed:.1f}s")
    verdict(
        1,
        not failures,
        "Klueners pairs (G1,N), (N,N), (G2,N) at q in {5,11}"
        + (f" — failing clauses: {failures}" if failures else ""),
    )


def test_criterion_2_wreath_s18():
    t0 = time.monotonic()
    pre = get_preset("wreath-s18")
    N = pre.spec.group()
    ok = True
    for name in ("A", "B", "C", "D"):
        G = pre.spec.subgroup(name)
        ctx = find_cyclic_complement(N, G)
        if a_invariant(G) != Fraction(1, 4):
            ok = False
        for q in (5, 11):
            if b_constant(ctx, q) != 1:
                ok = False
    if render_growth(Fraction(1, 4), 1) != "X^{1/4}":
        ok = False
    elapsed = time.monotonic() - t0
    if elapsed >= 60:
        ok = False
    verdict(2, ok, f"all four wreath cases give a=1/4, b=1 ({elapsed:.1f}s)")


def direct_powering_orbits(N: FiniteGroup, q: int) -> int:
    """Independent oracle: orbits of C ->  class(rep^q) on C(N)."""
    classes = {c.class_id: c for c in minimal_index_classes(N)}
    step = {
        cid: N.class_of(c.representative**q).class_id for cid, c in classes.items()
    }
    seen, orbits = set(), 0
    for cid in classes:
        if cid in seen:
            continue
        orbits += 1
        cur = cid
        while cur not in seen:
            seen.add(cur)
            cur = step[cur]
    return orbits


def test_criterion_3_ellenberg_venkatesh_specialization():
    ok = True
    for N, qs in preset_groups():
        ctx = find_cyclic_complement(N, N)
        for q in qs:
            if b_constant(ctx, q) != direct_powering_orbits(N, q):
                ok = False
    verdict(3, ok, "b(N,N,q) equals the direct powering-orbit count on C(N)")


def test_criterion_4_abelian_comparison():
    violations = []
    for label, spec in sorted(abelian_suite().items()):
        N = spec.group()
        qs = [q for q in range(2, 50) if math.gcd(q, N.order) == 1]
        for q in qs:
            ctx_N = find_cyclic_complement(N, N)
            b_N = b_constant(ctx_N, q)
            a_N = a_invariant(N)
            for G in normal_subgroups_with_cyclic_quotient(N):
                if G.order == 1 or a_invariant(G) != a_N:
                    continue
                ctx = find_cyclic_complement(N, G)
                if not ctx.split:
                    continue
                if b_constant(ctx, q) > b_N:
                    violations.append((label, q, G.order))
    verdict(
        4,
        not violations,
        "b(G,N,q) <= b(N,N,q) over the abelian suite, q < 50"
        + (f" — violations: {violations}" if violations else ""),
    )


def test_criterion_5_euler_product_vs_oracle():
    checked = 0
    ok = True
    for N, _ in preset_groups():
        for G in normal_subgroups_with_cyclic_quotient(N):
            if G.order == 1:
                continue
            ctx = find_cyclic_complement(N, G)
            if not ctx.split:
                continue
            for q in (2, 3, 5):
                if math.gcd(q, N.order) != 1:
                    continue
                for e in ctx.admissible_e():
                    spec = TwistSpec(q=q, e=e, ctx=ctx)
                    blocks = orbit_blocks(spec, restrict_minimal=False)
                    gf = euler_product(blocks, q)
                    if expand(gf, 40).values != brute_force_h3(blocks, q, 40).values:
                        ok = False
                    checked += 1
    verdict(5, ok and checked > 0, f"expand == brute_force_h3 to R=40 ({checked} block systems)")


def test_criterion_6_tauberian_shape():
    t0 = time.monotonic()
    pre = get_preset("klueners-s6")
    N = pre.spec.group()
    G1 = pre.spec.subgroup("G1")
    ctx = find_cyclic_complement(N, G1)
    spec = TwistSpec(q=5, e=1, ctx=ctx)
    gf = euler_product(orbit_blocks(spec, restrict_minimal=False), 5)
    fit = tauberian_fit(expand(gf, 60), dominant_pole(gf))
    gf2 = RationalGF(q=2, factors=((1, 2),))
    fit2 = tauberian_fit(expand(gf2, 60), dominant_pole(gf2))
    elapsed = time.monotonic() - t0
    ok = fit.spread <= 10 and fit2.spread <= 4 and elapsed < 5
    verdict(
        6,
        ok,
        f"Klueners spread {fit.spread:.3f} <= 10, single-block spread "
        f"{fit2.spread:.3f} <= 4 ({elapsed:.1f}s)",
    )


def test_criterion_7_braid_machinery():
    from malle_lab.braid import braid_orbits

    G = closure([parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)], 3)
    ts = [g for g in G if g.index() == 1]
    ok = True

    def q_move(t, i):
        g = list(t)
        a, b = g[i - 1], g[i]
        g[i - 1], g[i] = a * b * a.inverse(), a
        return tuple(g)

    for k in (4, 5):
        for t in iproduct(ts, repeat=k):
            for i in range(1, k):
                for j in range(i + 2, k):
                    if q_move(q_move(t, i), j) != q_move(q_move(t, j), i):
                        ok = False
            for i in range(1, k - 1):
                if q_move(q_move(q_move(t, i), i + 1), i) != q_move(
                    q_move(q_move(t, i + 1), i), i + 1
                ):
                    ok = False
    # Clebsch connectivity with a union-find oracle
    t = parse_cycles("(1 2)", 3)
    cv = class_vector_of(G, [t] * 4)
    orbits = braid_orbits(G, G, cv)
    tuples = [tt.entries for tt in enumerate_nielsen(G, cv)]
    from test_braid import union_find_orbits

    if len(orbits) != 1 or union_find_orbits(G, G, tuples) != 1:
        ok = False
    # traversal-order independence
    c = parse_cycles("(1 2 3)", 3)
    cv2 = class_vector_of(G, [t, t, c])
    a_run = braid_orbits(G, G, cv2, _seed_order="sorted")
    b_run = braid_orbits(G, G, cv2, _seed_order="reversed")
    if [(o.canonical_rep, o.size) for o in a_run] != [
        (o.canonical_rep, o.size) for o in b_run
    ]:
        ok = False
    verdict(7, ok, "braid relations, Clebsch connectivity, traversal independence")


def test_criterion_8_prop_main_desk_scale():
    failures = []
    # abelian presets: pinned expectation m = 0, c1 = 1
    for label, spec in sorted(abelian_suite().items()):
        N = spec.group()
        q = abelian_q(label)[0]
        ctx = find_cyclic_complement(N, N)
        twist = TwistSpec(q=q, e=1, ctx=ctx)
        rep = prop_main_check(N, N, twist, R=8)
        if rep.violated or rep.m != 0 or rep.c1 != 1:
            failures.append(f"{label}: m={rep.m}, c1={rep.c1}")
    # S3: finite m and c1 with no violation
    G = closure([parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)], 3)
    ctx = find_cyclic_complement(G, G)
    twist = TwistSpec(q=7, e=1, ctx=ctx)
    rep = prop_main_check(G, G, twist, R=12)
    if rep.violated:
        failures.append(f"S3: violated ({rep.detail})")
    verdict(
        8,
        not failures,
        "prop_main sandwich: abelian m=0/c1=1 and S3 consistency"
        + (f" — failing clauses: {failures}" if failures else ""),
    )


def test_criterion_9_number_field_variant():
    pre = get_preset("klueners-q")
    N = pre.spec.group()
    nf = revised_b(N, RationalNumberField(M=3))
    ff = revised_b(N, FunctionField(5))
    ok = nf.value == 2 and nf.value == ff.value
    verdict(9, ok, f"max b_phi at M=3 is {nf.value}, matching function field {ff.value}")

"""Minimal-index class sets, twisted class actions and the b-constants.

The central object is the twist t_e acting on G-conjugacy classes: raise a
representative to the q-th power, then conjugate by tau^{-e}.  Orbits of
this action on the minimal-index classes give b_e; the maximum over
admissible e gives b(G, N, F_q).  A parallel cyclotomic action at a finite
level M gives the number-field constant b_phi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence

from .errors import (
    BadModulus,
    NoAdmissibleSubgroup,
    NotAHomomorphism,
    NotSplit,
    TrivialGroup,
)
from .groups import (
    ConjugacyClass,
    FiniteGroup,
    GNContext,
    a_invariant,
    find_cyclic_complement,
    group_index,
    normal_subgroups_with_abelian_quotient,
    normal_subgroups_with_cyclic_quotient,
    quotient_is_cyclic,
)
from .perms import Permutation

NON_SPLIT_WARNING = (
    "G does not split in N: the growth theorem is only proven in the split "
    "case; b-values below use a coset representative in place of tau"
)


def minimal_index_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    """The G-classes of minimal-index elements (trivial class excluded)."""
    if G.order == 1:
        raise TrivialGroup("no nontrivial classes in the trivial group")
    m = group_index(G)
    return [c for c in G.conjugacy_classes() if not c.is_trivial and c.index == m]


@dataclass(frozen=True)
class TwistSpec:
    """The data (q, e) for the twisted class action on ctx.G."""

    q: int
    e: int
    ctx: GNContext

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"q must be at least 2, got {self.q}")
        if gcd(self.q, self.ctx.N.order) != 1:
            raise ValueError(f"q = {self.q} is not coprime to |N| = {self.ctx.N.order}")
        dp = self.ctx.d_prime
        if not (1 <= self.e <= dp and gcd(self.e, dp) == 1):
            raise ValueError(f"e = {self.e} not admissible for d' = {dp}")


def twist_class(c: ConjugacyClass, spec: TwistSpec) -> ConjugacyClass:
    """The class of (g^q) conjugated by tau^{-e}, for g a representative."""
    G = spec.ctx.G
    t = spec.ctx.tau ** (-spec.e)
    image = G.class_of((c.representative ** spec.q).conjugate_by(t))
    # well-definedness: any member must land in the same class
    assert (c.members[-1] ** spec.q).conjugate_by(t) in image.member_set
    return image


@dataclass(frozen=True)
class OrbitBlock:
    """A single t_e-orbit of G-conjugacy classes."""

    e: int
    classes: frozenset[int]
    size: int
    index: int

    @property
    def weight(self) -> int:
        return self.size * self.index

    def __repr__(self) -> str:
        return (
            f"OrbitBlock(e={self.e}, classes={sorted(self.classes)}, "
            f"size={self.size}, index={self.index})"
        )


def orbit_blocks(spec: TwistSpec, restrict_minimal: bool) -> list[OrbitBlock]:
    """t_e-orbits of the nontrivial G-classes (or of C(G) only)."""
    G = spec.ctx.G
    if restrict_minimal:
        pool = minimal_index_classes(G)
    else:
        pool = [c for c in G.conjugacy_classes() if not c.is_trivial]
    by_id = {c.class_id: c for c in pool}
    remaining = set(by_id)
    blocks = []
    for cid in sorted(remaining):
        if cid not in remaining:
            continue
        orbit = [cid]
        current = by_id[cid]
        while True:
            current = twist_class(current, spec)
            assert current.class_id in by_id, "twist left the class pool"
            if current.class_id == cid:
                break
            orbit.append(current.class_id)
        remaining.difference_update(orbit)
        idx = by_id[cid].index
        assert all(by_id[i].index == idx for i in orbit)
        blocks.append(
            OrbitBlock(e=spec.e, classes=frozenset(orbit), size=len(orbit), index=idx)
        )
    return blocks


def b_e(spec: TwistSpec) -> int:
    """Number of t_e-orbits on the minimal-index classes."""
    return len(orbit_blocks(spec, restrict_minimal=True))


@dataclass(frozen=True)
class BReport:
    """b(G, N, F_q) together with the per-e table and the argmax set."""

    value: int
    by_e: Mapping[int, int]
    argmax: tuple[int, ...]


def b_report(ctx: GNContext, q: int) -> BReport:
    if not ctx.split:
        raise NotSplit(NON_SPLIT_WARNING)
    by_e = {e: b_e(TwistSpec(q=q, e=e, ctx=ctx)) for e in ctx.admissible_e()}
    value = max(by_e.values())
    argmax = tuple(e for e, v in by_e.items() if v == value)
    return BReport(value=value, by_e=by_e, argmax=argmax)


def b_constant(ctx: GNContext, q: int) -> int:
    """max of b_e over admissible e (split case only)."""
    return b_report(ctx, q).value


@dataclass(frozen=True)
class AsymptoticReport:
    a: Fraction
    b: int
    formula: str
    argmax_e: tuple[int, ...]
    warnings: tuple[str, ...] = ()


def render_growth(a: Fraction, b: int) -> str:
    a_str = f"X^{{{a}}}" if a.denominator > 1 else f"X^{a}"
    if b == 1:
        return a_str
    if b == 2:
        return f"{a_str} log X"
    return f"{a_str} (log X)^{b - 1}"


def asymptotic_prediction(ctx: GNContext, q: int) -> AsymptoticReport:
    """The predicted growth X^{a(G)} (log X)^{b-1} for the pair (G, N)."""
    report = b_report(ctx, q)
    a = a_invariant(ctx.G)
    return AsymptoticReport(
        a=a,
        b=report.value,
        formula=render_growth(a, report.value),
        argmax_e=report.argmax,
    )


# ---------------------------------------------------------------------------
# field specifications and the cyclotomic (number-field) action


@dataclass(frozen=True)
class FunctionField:
    """k = F_q(t)."""

    q: int


@dataclass(frozen=True)
class RationalNumberField:
    """k = Q, with the cyclotomic action truncated at level M.

    phi_table maps each unit u of (Z/M)* to an element of N representing
    the coset phi(u)G in N/G.  The table must be a homomorphism into N/G.
    """

    M: int
    phi_table: Mapping[int, Permutation] = field(default_factory=dict)


FieldSpec = FunctionField | RationalNumberField


def _units(M: int) -> list[int]:
    if M == 1:
        return [1]
    return [u for u in range(1, M) if gcd(u, M) == 1]


def _check_phi(N: FiniteGroup, G: FiniteGroup, fieldspec: RationalNumberField) -> dict[int, Permutation]:
    M = fieldspec.M
    units = _units(M)
    table = dict(fieldspec.phi_table)
    if not table:
        table = {u: N.identity for u in units}
    if sorted(table) != sorted(units):
        raise NotAHomomorphism(f"phi table keys {sorted(table)} != units of (Z/{M})*")
    for u, x in table.items():
        if x not in N:
            raise NotAHomomorphism(f"phi({u}) is not an element of N")
    for u in units:
        for v in units:
            w = (u * v) % M if M > 1 else 1
            if table[u] * table[v] * table[w].inverse() not in G:
                raise NotAHomomorphism(f"phi({u})*phi({v}) != phi({u}*{v}) mod G")
    return table


def _phi_is_surjective(N: FiniteGroup, G: FiniteGroup, table: Mapping[int, Permutation]) -> bool:
    # image subgroup of N/G, measured through the subgroup <G, phi values>
    from .groups import subgroup_generated

    image = subgroup_generated(N, set(G.elements) | set(table.values()))
    return image.order == N.order


def b_phi(N: FiniteGroup, G: FiniteGroup, fieldspec: RationalNumberField) -> int:
    """Orbit count of C(G) under the phi-twisted cyclotomic action.

    Each unit u acts by c -> class of (g^u) conjugated by phi(u)^{-1}.
    Conjugating a G-class by a coset of N/G is well defined through any
    lift, which is what the table stores.
    """
    table = _check_phi(N, G, fieldspec)
    minimal = minimal_index_classes(G)
    for c in minimal:
        if fieldspec.M % c.representative.order() != 0:
            raise BadModulus(
                f"level M = {fieldspec.M} not divisible by the order "
                f"{c.representative.order()} of a minimal-index element"
            )
    ids = {c.class_id: c for c in minimal}
    # orbits under the group generated by all unit maps
    parent = {cid: cid for cid in ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, x in table.items():
        lift_inv = x.inverse()
        for cid, c in ids.items():
            image = G.class_of((c.representative ** u).conjugate_by(lift_inv))
            assert image.class_id in ids, "cyclotomic action left C(G)"
            ra, rb = find(cid), find(image.class_id)
            if ra != rb:
                parent[ra] = rb
    return len({find(cid) for cid in ids})


def _surjective_phis(N: FiniteGroup, G: FiniteGroup, M: int) -> list[dict[int, Permutation]]:
    """All surjective homomorphisms (Z/M)* -> N/G, as lift tables."""
    units = _units(M)
    # find a small generating sequence of the unit group
    gens: list[int] = []
    generated = {1 % M if M > 1 else 1}
    for u in units:
        if u in generated:
            continue
        gens.append(u)
        new = set(generated)
        frontier = list(generated)
        while frontier:
            x = frontier.pop()
            y = (x * u) % M if M > 1 else 1
            if y not in new:
                new.add(y)
                frontier.append(y)
        generated = new
    # coset representatives of N/G: least element of each coset
    cosets: list[Permutation] = []
    seen: set[Permutation] = set()
    for x in N.elements:
        if x in seen:
            continue
        coset = sorted(x * g for g in G.elements)
        seen.update(coset)
        cosets.append(coset[0])

    def coset_rep(x: Permutation) -> Permutation:
        return min(x * g for g in G.elements)

    def unit_order(u: int) -> int:
        k, y = 1, u
        while y % M != 1 % M:
            y = (y * u) % M
            k += 1
        return k

    out = []
    from itertools import product as iproduct

    for images in iproduct(cosets, repeat=len(gens)):
        # order of each image coset must divide the order of the unit
        ok = True
        for u, x in zip(gens, images):
            o = unit_order(u)
            if coset_rep(x**o) != coset_rep(N.identity):
                ok = False
                break
        if not ok:
            continue
        # build the full table by following products of generators
        table = {1 % M if M > 1 else 1: N.identity}
        frontier = [1 % M if M > 1 else 1]
        consistent = True
        while frontier and consistent:
            next_frontier = []
            for u in frontier:
                for g, x in zip(gens, images):
                    v = (u * g) % M if M > 1 else 1
                    val = coset_rep(table[u] * x)
                    if v in table:
                        if coset_rep(table[v]) != val:
                            consistent = False
                            break
                    else:
                        table[v] = val
                        next_frontier.append(v)
                if not consistent:
                    break
            frontier = next_frontier
        if not consistent or len(table) != len(units):
            continue
        if _phi_is_surjective(N, G, table):
            out.append(table)
    return out


@dataclass(frozen=True)
class RevisedBRow:
    G_order: int
    a: Fraction
    quotient_order: int
    status: str  # "ok", "skipped-nonsplit", "skipped-a", "no-surjective-phi"
    b: int | None


@dataclass(frozen=True)
class RevisedBReport:
    value: int
    rows: tuple[RevisedBRow, ...]
    warnings: tuple[str, ...]


def revised_b(
    N: FiniteGroup,
    fieldspec: FieldSpec,
    quotient_filter: str = "abelian",
) -> RevisedBReport:
    """The revised conjecture constant: max of b(G, N, k) over normal G
    with abelian (or, with quotient_filter="cyclic", cyclic) quotient and
    a(G) = a(N).

    Function fields: b(G, N, F_q) from the twisted action, split G only
    (non-split G are reported and skipped).  Number fields: max of b_phi
    over surjective phi at the configured cyclotomic level.
    """
    if quotient_filter not in ("abelian", "cyclic"):
        raise ValueError(f"unknown quotient filter {quotient_filter!r}")
    if quotient_filter == "cyclic":
        candidates = normal_subgroups_with_cyclic_quotient(N)
    else:
        candidates = normal_subgroups_with_abelian_quotient(N)
    a_N = a_invariant(N)
    rows: list[RevisedBRow] = []
    warnings: list[str] = []
    best: int | None = None
    for G in candidates:
        quotient_order = N.order // G.order
        a_G = a_invariant(G) if G.order > 1 else None
        if a_G != a_N:
            rows.append(
                RevisedBRow(G.order, a_G or Fraction(0), quotient_order, "skipped-a", None)
            )
            continue
        if isinstance(fieldspec, FunctionField):
            if not quotient_is_cyclic(N, G):
                rows.append(RevisedBRow(G.order, a_G, quotient_order, "skipped-noncyclic", None))
                continue
            ctx = find_cyclic_complement(N, G)
            if not ctx.split:
                rows.append(RevisedBRow(G.order, a_G, quotient_order, "skipped-nonsplit", None))
                warnings.append(NON_SPLIT_WARNING)
                continue
            value = b_constant(ctx, fieldspec.q)
        else:
            phis = _surjective_phis(N, G, fieldspec.M)
            if not phis:
                rows.append(RevisedBRow(G.order, a_G, quotient_order, "no-surjective-phi", None))
                continue
            value = max(
                b_phi(N, G, RationalNumberField(M=fieldspec.M, phi_table=t)) for t in phis
            )
        rows.append(RevisedBRow(G.order, a_G, quotient_order, "ok", value))
        best = value if best is None else max(best, value)
    if best is None:
        raise NoAdmissibleSubgroup(
            "no normal subgroup with the required quotient and a(G) = a(N) "
            "was admissible"
        )
    return RevisedBReport(value=best, rows=tuple(rows), warnings=tuple(sorted(set(warnings))))

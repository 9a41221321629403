"""Exact arithmetic for small permutation groups.

Everything is fully enumerated: groups are closed element lists in a
canonical (sorted) order, so all derived data — conjugacy classes, normal
subgroups, complements — is deterministic across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    DegreeMismatch,
    NonCyclicQuotient,
    NotASubgroup,
    OrderCapExceeded,
    TrivialGroup,
)
from .perms import Permutation

DEFAULT_ORDER_CAP = 10**6


class FiniteGroup:
    """A fully enumerated permutation group on points 1..degree."""

    def __init__(self, degree: int, generators: Sequence[Permutation], elements: Iterable[Permutation]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self.order = len(self.elements)
        self._element_set = frozenset(self.elements)
        self._classes: list[ConjugacyClass] | None = None

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteGroup)
            and self.degree == other.degree
            and self._element_set == other._element_set
        )

    def __hash__(self) -> int:
        return hash((self.degree, self._element_set))

    def __repr__(self) -> str:
        return f"FiniteGroup(degree={self.degree}, order={self.order})"

    def is_subgroup_of(self, other: "FiniteGroup") -> bool:
        return self.degree == other.degree and self._element_set <= other._element_set

    def is_normal_in(self, other: "FiniteGroup") -> bool:
        if not self.is_subgroup_of(other):
            return False
        return all(
            g.conjugate_by(x) in self._element_set
            for x in other.generators or other.elements
            for g in self.generators or self.elements
        )

    def is_abelian(self) -> bool:
        gens = self.generators or self.elements
        return all(a * b == b * a for a in gens for b in gens)

    def exponent(self) -> int:
        exp = 1
        for g in self.elements:
            o = g.order()
            exp = exp * o // gcd(exp, o)
        return exp

    def conjugacy_classes(self) -> list["ConjugacyClass"]:
        if self._classes is None:
            self._classes = _compute_classes(self)
        return self._classes

    def class_of(self, p: Permutation) -> "ConjugacyClass":
        for c in self.conjugacy_classes():
            if p in c.member_set:
                return c
        raise NotASubgroup(f"{p!r} is not an element of this group")


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugacy class of `ambient`, with a stable class_id."""

    ambient: FiniteGroup = field(compare=False)
    representative: Permutation
    members: tuple[Permutation, ...]
    class_id: int

    @property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_trivial(self) -> bool:
        return self.representative.is_identity

    @property
    def index(self) -> int:
        return self.representative.index()

    def __repr__(self) -> str:
        return f"ConjugacyClass(id={self.class_id}, size={self.size}, rep={self.representative!r})"


def closure(
    generators: Sequence[Permutation],
    degree: int,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> FiniteGroup:
    """Enumerate the group generated by `generators` inside S_degree."""
    for g in generators:
        if g.degree != degree:
            raise DegreeMismatch(f"generator degree {g.degree} != {degree}")
    identity = Permutation.identity(degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    new.append(y)
                    if len(elements) > order_cap:
                        raise OrderCapExceeded(
                            f"closure exceeded the order cap of {order_cap}"
                        )
        frontier = new
    return FiniteGroup(degree, generators, elements)


def _compute_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    remaining = set(G.elements)
    classes = []
    # G.elements is sorted, so classes come out keyed by their least member.
    for g in G.elements:
        if g not in remaining:
            continue
        members = sorted({g.conjugate_by(x) for x in G.elements})
        remaining.difference_update(members)
        classes.append((members[0], tuple(members)))
    classes.sort(key=lambda pair: pair[0])
    return [
        ConjugacyClass(ambient=G, representative=rep, members=members, class_id=i)
        for i, (rep, members) in enumerate(classes)
    ]


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    return G.conjugacy_classes()


def centralizer(N: FiniteGroup, G: FiniteGroup) -> FiniteGroup:
    """Cen_N(G) = {x in N : xg = gx for all g in G}."""
    if not G.is_subgroup_of(N):
        raise NotASubgroup("G is not a subgroup of N")
    gens = G.generators or G.elements
    members = [x for x in N.elements if all(x * g == g * x for g in gens)]
    return FiniteGroup(N.degree, tuple(members), members)


def subgroup_generated(N: FiniteGroup, seed: Iterable[Permutation]) -> FiniteGroup:
    """Subgroup of N generated by `seed` (finite, so products suffice)."""
    gens = sorted(set(seed))
    elements = {N.identity}
    frontier = [N.identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        frontier = new
    return FiniteGroup(N.degree, tuple(gens), elements)


def derived_subgroup(N: FiniteGroup) -> FiniteGroup:
    comms = {a.commutator(b) for a in N.elements for b in N.elements}
    return subgroup_generated(N, comms)


def coset_order(N: FiniteGroup, G: FiniteGroup, x: Permutation) -> int:
    """Order of xG in N/G."""
    k = 1
    y = x
    while y not in G:
        y = y * x
        k += 1
    return k


def quotient_is_cyclic(N: FiniteGroup, G: FiniteGroup) -> bool:
    d = N.order // G.order
    return any(coset_order(N, G, x) == d for x in N.elements)


def _subgroups_between(N: FiniteGroup, D: FiniteGroup) -> list[FiniteGroup]:
    """All subgroups H with D <= H <= N, for D normal with abelian quotient."""
    seen = {D._element_set: D}
    frontier = [D]
    while frontier:
        new = []
        for H in frontier:
            for x in N.elements:
                if x in H:
                    continue
                H2 = subgroup_generated(N, set(H.elements) | {x})
                if H2._element_set not in seen:
                    seen[H2._element_set] = H2
                    new.append(H2)
        frontier = new
    return list(seen.values())


def normal_subgroups_with_abelian_quotient(N: FiniteGroup) -> list[FiniteGroup]:
    """All normal G <= N with N/G abelian, including G = N.

    N/G abelian forces G to contain the derived subgroup [N, N]; conversely
    every subgroup between [N, N] and N is normal with abelian quotient, so
    it suffices to enumerate the interval above [N, N].
    """
    D = derived_subgroup(N)
    subs = _subgroups_between(N, D)
    subs.sort(key=lambda H: (-H.order, H.elements))
    return subs


def normal_subgroups_with_cyclic_quotient(N: FiniteGroup) -> list[FiniteGroup]:
    """All normal G <= N with N/G cyclic, including G = N.

    Canonical order: descending group order, then element list.
    """
    return [
        H
        for H in normal_subgroups_with_abelian_quotient(N)
        if quotient_is_cyclic(N, H)
    ]


@dataclass(frozen=True)
class GNContext:
    """The pair G normal in N with cyclic quotient, plus complement data.

    When split is True, tau generates a cyclic complement of G in N.  When
    split is False, tau is still a canonically chosen element whose coset
    generates N/G (needed to define the twisted class action), but no
    complement exists; downstream results carry a warning in that case.
    """

    N: FiniteGroup
    G: FiniteGroup
    d: int
    tau: Permutation
    centralizer: FiniteGroup
    d_prime: int
    d_double_prime: int
    split: bool

    def admissible_e(self) -> list[int]:
        return [e for e in range(1, self.d_prime + 1) if gcd(e, self.d_prime) == 1]


def find_cyclic_complement(N: FiniteGroup, G: FiniteGroup) -> GNContext:
    """Search for a cyclic complement of G in N; always compute d' and d''.

    tau is the least element (in the canonical element order) of order d
    generating a complement; if none exists, split=False and tau is the
    least element whose coset generates N/G.
    """
    if not G.is_normal_in(N):
        raise NotASubgroup("G is not a normal subgroup of N")
    d = N.order // G.order
    coset_gens = [x for x in N.elements if coset_order(N, G, x) == d]
    if not coset_gens:
        raise NonCyclicQuotient(f"N/G of order {d} is not cyclic")

    tau = None
    split = False
    for x in coset_gens:
        if x.order() != d:
            continue
        # <x> meets G trivially iff no proper power lands in G before x^d = 1
        powers_ok = True
        y = x
        for _ in range(d - 1):
            if y in G:
                powers_ok = False
                break
            y = y * x
        if powers_ok:
            tau = x
            split = True
            break
    if tau is None:
        tau = coset_gens[0]

    cen = centralizer(N, G)
    gcen = subgroup_generated(N, set(G.elements) | set(cen.elements))
    d_prime = N.order // gcen.order
    d_double_prime = d // d_prime
    return GNContext(
        N=N,
        G=G,
        d=d,
        tau=tau,
        centralizer=cen,
        d_prime=d_prime,
        d_double_prime=d_double_prime,
        split=split,
    )


def ind(g: Permutation) -> int:
    """n minus the number of orbits of g on {1..n} (fixed points count)."""
    return g.index()


def a_invariant(G: FiniteGroup) -> Fraction:
    """1 / min{ind(g) : g in G, g != 1}, exact."""
    if G.order == 1:
        raise TrivialGroup("a-invariant undefined for the trivial group")
    return Fraction(1, min(g.index() for g in G.elements if not g.is_identity))


def group_index(G: FiniteGroup) -> int:
    """min{ind(g) : g in G, g != 1}."""
    if G.order == 1:
        raise TrivialGroup("index undefined for the trivial group")
    return min(g.index() for g in G.elements if not g.is_identity)

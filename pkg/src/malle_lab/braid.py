"""Nielsen tuples, the braid-move action and its orbit decomposition.

Tuples live in G; orbits are computed on N-conjugation classes of tuples
(simultaneous conjugation), under the moves

    Q_i(g_1, ..., g_k) = (g_1, ..., g_i g_{i+1} g_i^{-1}, g_i, ..., g_k).

All heavy loops run on integer element indices with precomputed
multiplication / inversion / conjugation tables; the public API speaks
Permutations.

Frobenius stability of an orbit is a *model*: the entrywise map
g -> (g^q) conjugated by tau^{-e}, followed by reduction modulo braid
moves and N-conjugation.  Reports built on it carry a warning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    EnumerationCapExceeded,
    IndexOutOfRange,
    NotASubgroup,
    TrivialClassPresent,
)
from .groups import FiniteGroup, subgroup_generated
from .invariants import TwistSpec
from .perms import Permutation, product

DEFAULT_NODE_CAP = 10**8
DEFAULT_VISITED_CAP = 10**7

FROBENIUS_MODEL_WARNING = (
    "orbit-level Frobenius stability uses the entrywise twisted-power "
    "model; it is a stand-in for the unspecified arithmetic action on "
    "components"
)


@dataclass(frozen=True)
class ClassVector:
    """A multiset of nontrivial conjugacy classes of `group`.

    multiplicities is stored sorted by class_id; equality is multiset
    equality, so two vectors differing by reordering are equal.
    """

    group: FiniteGroup = field(compare=False)
    multiplicities: tuple[tuple[int, int], ...]

    def __post_init__(self):
        classes = {c.class_id: c for c in self.group.conjugacy_classes()}
        seen = set()
        for cid, mult in self.multiplicities:
            if cid not in classes:
                raise ValueError(f"unknown class id {cid}")
            if classes[cid].is_trivial:
                raise TrivialClassPresent(
                    "class vectors may not contain the trivial class"
                )
            if mult <= 0:
                raise ValueError(f"multiplicity of class {cid} must be positive")
            if cid in seen:
                raise ValueError(f"class id {cid} repeated")
            seen.add(cid)
        object.__setattr__(
            self, "multiplicities", tuple(sorted(self.multiplicities))
        )

    @classmethod
    def from_counts(cls, group: FiniteGroup, counts: Mapping[int, int]) -> "ClassVector":
        return cls(group, tuple((cid, m) for cid, m in counts.items() if m))

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.multiplicities)

    @property
    def length(self) -> int:
        return sum(m for _, m in self.multiplicities)

    @property
    def weight(self) -> int:
        classes = {c.class_id: c for c in self.group.conjugacy_classes()}
        return sum(m * classes[cid].index for cid, m in self.multiplicities)

    def __add__(self, other: "ClassVector") -> "ClassVector":
        if other.group != self.group:
            raise ValueError("class vectors of different groups")
        counts = self.counts
        for cid, m in other.multiplicities:
            counts[cid] = counts.get(cid, 0) + m
        return ClassVector.from_counts(self.group, counts)

    def scaled(self, m: int) -> "ClassVector":
        if m < 0:
            raise ValueError("negative multiple")
        return ClassVector.from_counts(
            self.group, {cid: mult * m for cid, mult in self.multiplicities}
        )

    def __repr__(self) -> str:
        inner = ", ".join(f"{cid}:{m}" for cid, m in self.multiplicities)
        return f"ClassVector({{{inner}}})"


def class_vector_of(group: FiniteGroup, entries: Sequence[Permutation]) -> ClassVector:
    counts: dict[int, int] = {}
    for g in entries:
        cid = group.class_of(g).class_id
        counts[cid] = counts.get(cid, 0) + 1
    return ClassVector.from_counts(group, counts)


@dataclass(frozen=True)
class NielsenTuple:
    """A product-one generating tuple of nontrivial elements of a group."""

    group: FiniteGroup = field(compare=False)
    entries: tuple[Permutation, ...]

    def __post_init__(self):
        if any(g.is_identity for g in self.entries):
            raise ValueError("Nielsen tuples contain no identity entries")
        if not product(self.entries, self.group.degree).is_identity:
            raise ValueError("entries do not multiply to the identity")

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def class_vector(self) -> ClassVector:
        return class_vector_of(self.group, self.entries)


def braid_generator(t: NielsenTuple, i: int) -> NielsenTuple:
    """Q_i: replace (g_i, g_{i+1}) by (g_i g_{i+1} g_i^{-1}, g_i); 1-based."""
    k = t.length
    if not 1 <= i <= k - 1:
        raise IndexOutOfRange(f"braid index {i} outside 1..{k - 1}")
    g = list(t.entries)
    a, b = g[i - 1], g[i]
    g[i - 1], g[i] = a * b * a.inverse(), a
    out = NielsenTuple(t.group, tuple(g))
    assert subgroup_generated(t.group, out.entries).order == subgroup_generated(
        t.group, t.entries
    ).order
    return out


def braid_generator_inverse(t: NielsenTuple, i: int) -> NielsenTuple:
    """Q_i^{-1}: replace (g_i, g_{i+1}) by (g_{i+1}, g_{i+1}^{-1} g_i g_{i+1})."""
    k = t.length
    if not 1 <= i <= k - 1:
        raise IndexOutOfRange(f"braid index {i} outside 1..{k - 1}")
    g = list(t.entries)
    a, b = g[i - 1], g[i]
    g[i - 1], g[i] = b, b.inverse() * a * b
    return NielsenTuple(t.group, tuple(g))


# ---------------------------------------------------------------------------
# integer-index machinery


class _IndexedPair:
    """Multiplication/conjugation tables for G with N acting by conjugation."""

    def __init__(self, G: FiniteGroup, N: FiniteGroup):
        if not G.is_normal_in(N):
            raise NotASubgroup("braid orbits need G normal in N")
        self.G = G
        self.N = N
        self.elements = list(G.elements)
        self.index = {p: i for i, p in enumerate(self.elements)}
        n = len(self.elements)
        self.mul = [
            [self.index[a * b] for b in self.elements] for a in self.elements
        ]
        self.inv = [self.index[a.inverse()] for a in self.elements]
        self.id = self.index[G.identity]
        classes = G.conjugacy_classes()
        self.class_id = [0] * n
        self.class_members: dict[int, list[int]] = {}
        for c in classes:
            self.class_members[c.class_id] = sorted(self.index[m] for m in c.members)
            for m in c.members:
                self.class_id[self.index[m]] = c.class_id
        # distinct conjugation rows of N on G (the action factors through
        # N / Cen_N(G), so duplicates are common and worth dropping)
        rows = {
            tuple(self.index[g.conjugate_by(x)] for g in self.elements)
            for x in N.elements
        }
        self.conj_rows = sorted(rows)
        self._gen_cache: dict[frozenset, bool] = {}

    def canonical(self, t: tuple[int, ...]) -> tuple[int, ...]:
        return min(tuple(row[g] for g in t) for row in self.conj_rows)

    def generates(self, entries: Iterable[int]) -> bool:
        key = frozenset(entries)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        closed = {self.id}
        frontier = [self.id]
        while frontier:
            new = []
            for x in frontier:
                row = self.mul[x]
                for g in key:
                    y = row[g]
                    if y not in closed:
                        closed.add(y)
                        new.append(y)
            frontier = new
        ok = len(closed) == len(self.elements)
        self._gen_cache[key] = ok
        return ok


_pair_cache: dict[tuple[FiniteGroup, FiniteGroup], _IndexedPair] = {}


def _indexed(G: FiniteGroup, N: FiniteGroup) -> _IndexedPair:
    key = (G, N)
    if key not in _pair_cache:
        _pair_cache[key] = _IndexedPair(G, N)
    return _pair_cache[key]


def _enumerate_idx(
    ctx: _IndexedPair, cv: ClassVector, node_cap: int
) -> list[tuple[int, ...]]:
    """All product-one tuples with class multiset cv that generate G."""
    counts = cv.counts
    k = cv.length
    out: list[tuple[int, ...]] = []
    if k == 0:
        return out
    mul = ctx.mul
    members = ctx.class_members
    nodes = 0
    entries: list[int] = []

    def dfs(pos: int, prefix: int):
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise EnumerationCapExceeded(
                f"tuple enumeration exceeded {node_cap} prefix states",
                partial=list(out),
            )
        if pos == k - 1:
            last = ctx.inv[prefix]
            cid = ctx.class_id[last]
            if counts.get(cid, 0) > 0 and last != ctx.id:
                entries.append(last)
                if ctx.generates(entries):
                    out.append(tuple(entries))
                entries.pop()
            return
        for cid in sorted(counts):
            if counts[cid] == 0:
                continue
            counts[cid] -= 1
            row = mul[prefix]
            for g in members[cid]:
                entries.append(g)
                dfs(pos + 1, row[g])
                entries.pop()
            counts[cid] += 1

    dfs(0, ctx.id)
    return out


def enumerate_nielsen(
    G: FiniteGroup, cv: ClassVector, node_cap: int = DEFAULT_NODE_CAP
) -> list[NielsenTuple]:
    """All Nielsen tuples of G whose entry class multiset equals cv."""
    ctx = _indexed(G, G)
    tuples = _enumerate_idx(ctx, cv, node_cap)
    return [
        NielsenTuple(G, tuple(ctx.elements[i] for i in t)) for t in tuples
    ]


@dataclass(frozen=True)
class BraidOrbit:
    """One orbit of the braid moves on N-conjugation classes of tuples."""

    group: FiniteGroup = field(compare=False)
    ambient: FiniteGroup = field(compare=False)
    canonical_rep: NielsenTuple = field(compare=False)
    size: int
    class_vector: ClassVector
    members: frozenset = field(compare=False, repr=False)

    def __repr__(self) -> str:
        return f"BraidOrbit(size={self.size}, rep={self.canonical_rep.entries!r})"


def _orbit_partition(
    ctx: _IndexedPair,
    canonical_tuples: Sequence[tuple[int, ...]],
    visited_cap: int,
    seeds_order: Sequence[tuple[int, ...]] | None = None,
) -> list[list[tuple[int, ...]]]:
    """BFS partition of canonical tuples under braid moves; deterministic."""
    mul, inv = ctx.mul, ctx.inv
    unseen = set(canonical_tuples)
    orbits = []
    seeds = seeds_order if seeds_order is not None else sorted(unseen)
    for seed in seeds:
        if seed not in unseen:
            continue
        unseen.discard(seed)
        members = {seed}
        frontier = [seed]
        while frontier:
            new = []
            for t in frontier:
                k = len(t)
                for i in range(k - 1):
                    a, b = t[i], t[i + 1]
                    # Q_i and its inverse
                    for pair in (
                        (mul[mul[a][b]][inv[a]], a),
                        (b, mul[mul[inv[b]][a]][b]),
                    ):
                        u = ctx.canonical(t[:i] + pair + t[i + 2 :])
                        if u not in members:
                            members.add(u)
                            new.append(u)
                            if len(members) > visited_cap:
                                raise EnumerationCapExceeded(
                                    f"orbit grew past {visited_cap} canonical tuples"
                                )
            frontier = new
        unseen.difference_update(members)
        orbits.append(sorted(members))
    return orbits


def braid_orbits(
    G: FiniteGroup,
    N: FiniteGroup,
    cv: ClassVector,
    node_cap: int = DEFAULT_NODE_CAP,
    visited_cap: int = DEFAULT_VISITED_CAP,
    _seed_order: Sequence[tuple[int, ...]] | None = None,
) -> list[BraidOrbit]:
    """Partition Ni(cv) modulo N-conjugation into braid orbits.

    The result is canonically ordered (orbits sorted by their least
    canonical representative) and independent of traversal order;
    _seed_order exists to let tests check exactly that.
    """
    ctx = _indexed(G, N)
    tuples = _enumerate_idx(ctx, cv, node_cap)
    canonical = sorted({ctx.canonical(t) for t in tuples})
    parts = _orbit_partition(ctx, canonical, visited_cap, _seed_order)
    orbits = []
    for members in parts:
        rep = members[0]
        orbits.append(
            BraidOrbit(
                group=G,
                ambient=N,
                canonical_rep=NielsenTuple(G, tuple(ctx.elements[i] for i in rep)),
                size=len(members),
                class_vector=cv,
                members=frozenset(members),
            )
        )
    orbits.sort(key=lambda o: o.members and min(o.members))
    return orbits


def frobenius_stable_orbits(
    orbits: Sequence[BraidOrbit], spec: TwistSpec
) -> list[BraidOrbit]:
    """Orbits sent to themselves by the entrywise twisted-power model.

    The model maps each entry g to (g^q) conjugated by tau^{-e}.  If the
    image tuple is no longer product-one (powering is not a homomorphism),
    the orbit is reported unstable.
    """
    if not orbits:
        return []
    G = orbits[0].group
    N = orbits[0].ambient
    cv = orbits[0].class_vector
    if any(o.class_vector != cv for o in orbits):
        raise ValueError("orbits must share one class vector")
    ctx = _indexed(G, N)
    t = spec.ctx.tau ** (-spec.e)
    twist = [
        ctx.index[(g**spec.q).conjugate_by(t)] for g in ctx.elements
    ]
    stable = []
    for orbit in orbits:
        rep = tuple(ctx.index[g] for g in orbit.canonical_rep.entries)
        image = tuple(twist[g] for g in rep)
        # product-one must survive for the image to be a tuple at all
        prod = ctx.id
        for g in image:
            prod = ctx.mul[prod][g]
        if prod != ctx.id:
            continue
        if ctx.canonical(image) in orbit.members:
            stable.append(orbit)
    return stable


@dataclass(frozen=True)
class ProbeResult:
    """Orbit counts of base + m*pad for m = 0..; truncated marks a cap hit."""

    counts: tuple[tuple[int, int], ...]
    truncated: bool


def conway_parker_probe(
    G: FiniteGroup,
    N: FiniteGroup,
    base: ClassVector,
    pad: ClassVector,
    max_m: int,
    node_cap: int = DEFAULT_NODE_CAP,
    visited_cap: int = DEFAULT_VISITED_CAP,
) -> ProbeResult:
    """Orbit counts as padding grows; observes stabilisation at desk scale."""
    counts = []
    for m in range(max_m + 1):
        cv = base + pad.scaled(m) if m else base
        try:
            orbits = braid_orbits(G, N, cv, node_cap, visited_cap)
        except EnumerationCapExceeded:
            return ProbeResult(counts=tuple(counts), truncated=True)
        counts.append((m, len(orbits)))
    return ProbeResult(counts=tuple(counts), truncated=False)

"""Nielsen tuples, braid moves, orbit enumeration, stability model."""

from itertools import product as iproduct

import pytest

from malle_lab.braid import (
    ClassVector,
    NielsenTuple,
    braid_generator,
    braid_generator_inverse,
    braid_orbits,
    class_vector_of,
    conway_parker_probe,
    enumerate_nielsen,
    frobenius_stable_orbits,
)
from malle_lab.errors import IndexOutOfRange, TrivialClassPresent
from malle_lab.groups import closure, find_cyclic_complement
from malle_lab.invariants import TwistSpec
from malle_lab.perms import Permutation, parse_cycles, product


def s3():
    return closure([parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)], 3)


def klueners():
    gens = [parse_cycles(s, 6) for s in ("(1 2 3)", "(4 5 6)", "(14)(25)(36)")]
    return closure(gens, 6)


def transposition_tuples(G, k):
    """Oracle: all generating product-one k-tuples of transpositions."""
    ts = [g for g in G if g.index() == 1]
    out = []
    for t in iproduct(ts, repeat=k):
        if not product(t, G.degree).is_identity:
            continue
        if closure(list(set(t)), G.degree).order == G.order:
            out.append(t)
    return out


class TestClassVector:
    def test_rejects_trivial_class(self):
        G = s3()
        with pytest.raises(TrivialClassPresent):
            class_vector_of(G, [Permutation.identity(3)])

    def test_weight_and_length(self):
        G = s3()
        t = parse_cycles("(1 2)", 3)
        cv = class_vector_of(G, [t, t, t, t])
        assert cv.length == 4
        assert cv.weight == 4  # four entries of index 1

    def test_addition_and_scaling(self):
        G = s3()
        t = parse_cycles("(1 2)", 3)
        c = parse_cycles("(1 2 3)", 3)
        cv = class_vector_of(G, [t, c])
        assert (cv + cv).counts == cv.scaled(2).counts
        assert (cv + cv).weight == 2 * cv.weight


class TestBraidMoves:
    def test_braid_move_formula(self):
        G = s3()
        a = parse_cycles("(1 2)", 3)
        b = parse_cycles("(1 3)", 3)
        t = NielsenTuple(G, (a, b, b, a))
        moved = braid_generator(t, 1)
        assert moved.entries[0] == a * b * a.inverse()
        assert moved.entries[1] == a
        assert moved.entries[2:] == t.entries[2:]

    def test_move_preserves_product_and_classes(self):
        G = s3()
        for t in map(lambda e: NielsenTuple(G, e), transposition_tuples(G, 4)):
            for i in (1, 2, 3):
                m = braid_generator(t, i)
                assert product(m.entries, 3).is_identity
                assert m.class_vector == t.class_vector

    def test_inverse_move(self):
        G = s3()
        for t in map(lambda e: NielsenTuple(G, e), transposition_tuples(G, 4)):
            for i in (1, 2, 3):
                assert braid_generator_inverse(braid_generator(t, i), i) == t
                assert braid_generator(braid_generator_inverse(t, i), i) == t

    def test_index_out_of_range(self):
        G = s3()
        a = parse_cycles("(1 2)", 3)
        t = NielsenTuple(G, (a, a))
        with pytest.raises(IndexOutOfRange):
            braid_generator(t, 0)
        with pytest.raises(IndexOutOfRange):
            braid_generator(t, 2)

    @pytest.mark.parametrize("k", [4, 5])
    def test_braid_relations_on_full_tuple_set(self, k):
        # commutation Q_i Q_j = Q_j Q_i for |i-j| >= 2 and the braid
        # relation Q_i Q_{i+1} Q_i = Q_{i+1} Q_i Q_{i+1}, checked as
        # exact identities on every k-tuple of transpositions (the raw
        # move needs no product-one constraint; 5 transpositions can
        # never multiply to the identity)
        G = s3()
        ts = [g for g in G if g.index() == 1]

        def q(t, i):
            g = list(t)
            a, b = g[i - 1], g[i]
            g[i - 1], g[i] = a * b * a.inverse(), a
            return tuple(g)

        tuples = list(iproduct(ts, repeat=k))
        assert len(tuples) == 3**k
        for t in tuples:
            for i in range(1, k):
                for j in range(i + 2, k):
                    assert q(q(t, i), j) == q(q(t, j), i)
            for i in range(1, k - 1):
                assert q(q(q(t, i), i + 1), i) == q(q(q(t, i + 1), i), i + 1)


class TestEnumeration:
    def test_s3_four_transpositions(self):
        # 27 product-one 4-tuples of the 3 transpositions, of which the
        # 3 constant tuples fail to generate: 24 Nielsen tuples
        G = s3()
        t = parse_cycles("(1 2)", 3)
        cv = class_vector_of(G, [t] * 4)
        tuples = enumerate_nielsen(G, cv)
        assert len(tuples) == 24
        assert len(tuples) == len(transposition_tuples(G, 4))

    def test_enumeration_matches_oracle_mixed_vector(self):
        G = s3()
        t = parse_cycles("(1 2)", 3)
        c = parse_cycles("(1 2 3)", 3)
        cv = class_vector_of(G, [t, t, c])
        got = {tt.entries for tt in enumerate_nielsen(G, cv)}
        ts = [g for g in G if g.index() == 1]
        cs = [g for g in G if g.index() == 2]
        expect = set()
        for entries in iproduct(*[list(G)] * 3):
            if sorted(e.index() for e in entries) != [1, 1, 2]:
                continue
            if not product(entries, 3).is_identity:
                continue
            if closure(list(set(entries)), 3).order != 6:
                continue
            expect.add(entries)
        assert got == expect

    def test_empty_when_product_cannot_close(self):
        # a single transposition can never have product one
        G = s3()
        t = parse_cycles("(1 2)", 3)
        cv = class_vector_of(G, [t])
        assert enumerate_nielsen(G, cv) == []


def union_find_orbits(G, N, tuples):
    """Independent oracle: union-find over raw tuples joined by braid
    moves and simultaneous N-conjugation."""
    idx = {t: i for i, t in enumerate(tuples)}
    parent = list(range(len(tuples)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for t in tuples:
        nt = NielsenTuple(G, t)
        for i in range(1, len(t)):
            union(idx[t], idx[braid_generator(nt, i).entries])
        for h in N:
            conj = tuple(g.conjugate_by(h) for g in t)
            union(idx[t], idx[conj])
    return len({find(i) for i in range(len(tuples))})


class TestOrbits:
    def test_clebsch_connectivity(self):
        G = s3()
        t = parse_cycles("(1 2)", 3)
        cv = class_vector_of(G, [t] * 4)
        orbits = braid_orbits(G, G, cv)
        assert len(orbits) == 1

    def test_union_find_oracle_four_transpositions(self):
        G = s3()
        t = parse_cycles("(1 2)", 3)
        cv = class_vector_of(G, [t] * 4)
        tuples = [tt.entries for tt in enumerate_nielsen(G, cv)]
        assert union_find_orbits(G, G, tuples) == len(braid_orbits(G, G, cv))

    def test_union_find_oracle_mixed_vector(self):
        G = s3()
        t = parse_cycles("(1 2)", 3)
        c = parse_cycles("(1 2 3)", 3)
        cv = class_vector_of(G, [t, t, c])
        tuples = [tt.entries for tt in enumerate_nielsen(G, cv)]
        assert tuples
        assert union_find_orbits(G, G, tuples) == len(braid_orbits(G, G, cv))

    def test_orbit_sizes_sum_to_conjugation_class_count(self):
        # orbit sizes count tuples up to simultaneous N-conjugation
        G = s3()
        t = parse_cycles("(1 2)", 3)
        c = parse_cycles("(1 2 3)", 3)
        cv = class_vector_of(G, [t, t, c, c])
        orbits = braid_orbits(G, G, cv)
        total = sum(o.size for o in orbits)
        raw = [tt.entries for tt in enumerate_nielsen(G, cv)]
        classes = {
            min(tuple(g.conjugate_by(h) for g in e) for h in G) for e in raw
        }
        assert total == len(classes)

    def test_traversal_order_independence(self):
        G = s3()
        t = parse_cycles("(1 2)", 3)
        c = parse_cycles("(1 2 3)", 3)
        cv = class_vector_of(G, [t, t, c])
        a = braid_orbits(G, G, cv, _seed_order="sorted")
        b = braid_orbits(G, G, cv, _seed_order="reversed")
        assert [(o.canonical_rep, o.size) for o in a] == [
            (o.canonical_rep, o.size) for o in b
        ]

    def test_klueners_g1_orbit(self):
        N = klueners()
        G1 = closure([parse_cycles("(1 2 3)", 6), parse_cycles("(4 5 6)", 6)], 6)
        entries = [
            parse_cycles(s, 6) for s in ("(1 2 3)", "(1 3 2)", "(4 5 6)", "(4 6 5)")
        ]
        cv = class_vector_of(G1, entries)
        orbits = braid_orbits(G1, N, cv)
        raw = [tt.entries for tt in enumerate_nielsen(G1, cv)]
        classes = {
            min(tuple(g.conjugate_by(h) for g in e) for h in N) for e in raw
        }
        assert sum(o.size for o in orbits) == len(classes)


class TestStability:
    def test_stable_orbits_klueners(self):
        N = klueners()
        G1 = closure([parse_cycles("(1 2 3)", 6), parse_cycles("(4 5 6)", 6)], 6)
        ctx = find_cyclic_complement(N, G1)
        spec = TwistSpec(q=5, e=1, ctx=ctx)
        entries = [
            parse_cycles(s, 6) for s in ("(1 2 3)", "(1 3 2)", "(4 5 6)", "(4 6 5)")
        ]
        cv = class_vector_of(G1, entries)
        orbits = braid_orbits(G1, N, cv)
        stable = frobenius_stable_orbits(orbits, spec)
        assert set(stable) <= set(orbits)

    def test_stability_with_trivial_twist_keeps_all(self):
        # G = N, q = 7 = 1 mod 6: powering by q fixes every class of S3
        G = s3()
        ctx = find_cyclic_complement(G, G)
        spec = TwistSpec(q=7, e=1, ctx=ctx)
        t = parse_cycles("(1 2)", 3)
        cv = class_vector_of(G, [t] * 4)
        orbits = braid_orbits(G, G, cv)
        assert len(frobenius_stable_orbits(orbits, spec)) == len(orbits)


class TestConwayParker:
    def test_s3_probe_stays_connected(self):
        G = s3()
        t = parse_cycles("(1 2)", 3)
        c = parse_cycles("(1 2 3)", 3)
        base = class_vector_of(G, [t] * 4)
        # both nontrivial classes, with even total parity so padded
        # vectors still admit product-one tuples
        pad = class_vector_of(G, [t, t, c])
        probe = conway_parker_probe(G, G, base, pad, max_m=2)
        assert not probe.truncated
        assert [m for m, _ in probe.counts] == [0, 1, 2]
        assert all(v == 1 for _, v in probe.counts)

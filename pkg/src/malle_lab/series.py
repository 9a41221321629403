"""Euler products over twist-orbit blocks and their exact expansion.

The generating function of the weighted count h3 factors as

    prod over blocks O of 1 / (1 - q^{|O|} u^{r(O)}),   u = q^{-s},

with r(O) = |O| * ind(O).  Coefficients are exact big integers.  The
dominant-pole data (a, b) is read off the factored form: a is the maximum
of |O|/r(O) = 1/ind(O), and b the number of factors attaining it.

Pole analysis is restricted to the positive real axis: each factor also
has complex roots of the same modulus, which the underlying Tauberian
lemma does not address; every PoleReport carries that caveat and
tauberian_fit provides the empirical confirmation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .braid import ClassVector, braid_orbits, frobenius_stable_orbits
from .errors import (
    EnumerationCapExceeded,
    InsufficientRange,
    TrivialClassPresent,
)
from .groups import FiniteGroup
from .invariants import OrbitBlock, TwistSpec, orbit_blocks

EQUAL_MODULUS_CAVEAT = (
    "pole analysis restricted to the positive real axis; each Euler factor "
    "has further roots of equal modulus"
)


@dataclass(frozen=True)
class RationalGF:
    """prod 1/(1 - q^c * u^r) over factors (c, r), in the variable u = q^{-s}."""

    q: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for c, r in self.factors:
            if c <= 0 or r <= 0:
                raise ValueError(f"factor exponents must be positive, got {(c, r)}")


@dataclass(frozen=True)
class CoefficientTable:
    """values[r] = h3(q, r, e) for r <= R, exact."""

    q: int
    e: int
    values: Mapping[int, int]

    @property
    def R(self) -> int:
        return max(self.values)

    def partial_sum(self, below: int) -> int:
        """sum of values at 1 <= r < below (the r = 0 empty tuple excluded)."""
        return sum(v for r, v in self.values.items() if 1 <= r < below)


@dataclass(frozen=True)
class PoleReport:
    a: Fraction
    b: int
    dominant_radius: float
    caveat: str = EQUAL_MODULUS_CAVEAT


def euler_product(blocks: Sequence[OrbitBlock], q: int) -> RationalGF:
    """One factor (|O|, |O|*ind(O)) per block."""
    if not blocks:
        raise ValueError("no blocks given")
    if any(b.index == 0 for b in blocks):
        raise TrivialClassPresent("a block of index 0 (trivial class) was passed")
    es = {b.e for b in blocks}
    if len(es) > 1:
        raise ValueError(f"blocks for several twist types: {sorted(es)}")
    return RationalGF(q=q, factors=tuple((b.size, b.weight) for b in blocks))


def expand(gf: RationalGF, R: int, e: int = 1) -> CoefficientTable:
    """Exact coefficients of u^r for r <= R, by iterated convolution."""
    if R < 0:
        raise ValueError("R must be nonnegative")
    coeffs = [0] * (R + 1)
    coeffs[0] = 1
    for c, r in gf.factors:
        # multiply by the geometric series sum_m q^{cm} u^{rm}
        new = [0] * (R + 1)
        for k in range(R + 1):
            if coeffs[k] == 0:
                continue
            m = 0
            qpow = 1
            while k + m * r <= R:
                new[k + m * r] += coeffs[k] * qpow
                m += 1
                qpow *= gf.q**c
        coeffs = new
    return CoefficientTable(q=gf.q, e=e, values={r: v for r, v in enumerate(coeffs)})


def brute_force_h3(blocks: Sequence[OrbitBlock], q: int, R: int) -> CoefficientTable:
    """Independent oracle: enumerate all block multisets of weight <= R.

    Every rational class vector of the given type is a unique nonnegative
    combination sum a_O * O of blocks; it contributes q^(number of classes)
    at r = weighted size.
    """
    gf = euler_product(blocks, q)  # validates block set
    e = blocks[0].e
    values: dict[int, int] = {r: 0 for r in range(R + 1)}

    def descend(i: int, r: int, size: int):
        if i == len(gf.factors):
            values[r] = values.get(r, 0) + q**size
            return
        c, w = gf.factors[i]
        m = 0
        while r + m * w <= R:
            descend(i + 1, r + m * w, size + m * c)
            m += 1

    descend(0, 0, 0)
    return CoefficientTable(q=q, e=e, values=values)


def dominant_pole(gf: RationalGF) -> PoleReport:
    """a = max |O|/r(O) over factors; b = number of factors attaining it."""
    if not gf.factors:
        raise ValueError("empty generating function")
    a = max(Fraction(c, r) for c, r in gf.factors)
    b = sum(1 for c, r in gf.factors if Fraction(c, r) == a)
    return PoleReport(a=a, b=b, dominant_radius=float(gf.q) ** (-float(a)))


@dataclass(frozen=True)
class FitSummary:
    """Boundedness check of S(X) / (X^a (log X)^{b-1}) at X = q^j."""

    min_ratio: float
    max_ratio: float
    spread: float
    window: float
    ok: bool
    checkpoints: tuple[tuple[int, float], ...]


def tauberian_fit(
    table: CoefficientTable, report: PoleReport, window: float = 10.0
) -> FitSummary:
    """Ratios at support-aligned checkpoints X = q^{r+1}.

    S(X) = sum of coefficients at q^r < X.  A checkpoint is placed just
    above each nonzero term; sampling between terms of a lacunary series
    would oscillate by a factor q^{a * gap} regardless of the true
    growth.  Reports the ratios over the upper half of the checkpoints
    and flags failure when max_ratio / min_ratio exceeds the window.
    """
    R = table.R
    if R < 40:
        raise InsufficientRange(f"need R >= 40 coefficients, got {R}")
    q = table.q
    a = float(report.a)
    b = report.b
    support = sorted(r for r, v in table.values.items() if r >= 1 and v > 0)
    if len(support) < 2:
        raise InsufficientRange("fewer than two nonzero coefficients")
    checkpoints = []
    running = 0
    upper = support[len(support) // 2 :]
    for r in support:
        running += table.values[r]
        if r not in upper:
            continue
        j = r + 1
        X = float(q) ** j
        denom = X**a * (math.log(X)) ** (b - 1)
        checkpoints.append((j, running / denom))
    ratios = [r for _, r in checkpoints if r > 0]
    if not ratios:
        raise InsufficientRange("no positive partial sums in the upper half")
    lo, hi = min(ratios), max(ratios)
    spread = hi / lo
    return FitSummary(
        min_ratio=lo,
        max_ratio=hi,
        spread=spread,
        window=window,
        ok=spread <= window,
        checkpoints=tuple(checkpoints),
    )


def h2_desk_scale(
    G: FiniteGroup,
    N: FiniteGroup,
    spec: TwistSpec,
    R: int,
    node_cap: int = 10**8,
    visited_cap: int = 10**7,
) -> dict[int, int]:
    """Desk-scale h2: stable-orbit counts weighted by q^(vector length).

    For every rational type-e class vector of weight <= R (a block
    combination), count Frobenius-stable braid orbits (model) and
    accumulate count * q^length at r = weight.  Raises
    EnumerationCapExceeded with the partial table attached.
    """
    blocks = orbit_blocks(spec, restrict_minimal=False)
    q = spec.q
    table: dict[int, int] = {}
    combos: list[tuple[int, int, tuple[int, ...]]] = []  # (weight, length, mults)

    def descend(i: int, r: int, size: int, sofar: tuple[int, ...]):
        if i == len(blocks):
            if r > 0:
                combos.append((r, size, sofar))
            return
        blk = blocks[i]
        m = 0
        while r + m * blk.weight <= R:
            descend(i + 1, r + m * blk.weight, size + m * blk.size, sofar + (m,))
            m += 1

    descend(0, 0, 0, ())
    combos.sort()
    for r, size, mults in combos:
        counts: dict[int, int] = {}
        for blk, m in zip(blocks, mults):
            if m:
                for cid in blk.classes:
                    counts[cid] = counts.get(cid, 0) + m
        cv = ClassVector.from_counts(G, counts)
        try:
            orbits = braid_orbits(G, N, cv, node_cap, visited_cap)
        except EnumerationCapExceeded as err:
            raise EnumerationCapExceeded(
                f"h2 enumeration capped at weight {r}", partial=dict(table)
            ) from err
        stable = frobenius_stable_orbits(orbits, spec)
        if stable:
            table[r] = table.get(r, 0) + len(stable) * q**size
    return table


@dataclass(frozen=True)
class SandwichReport:
    """Smallest shift m and constant c1 validating the partial-sum sandwich.

    For every checkpoint R' <= R (with both sides nonzero at least once):
        sum_{1 <= r < R'-m} h3 <= sum_{1 <= r < R'} h2 <= c1 * sum_{1 <= r < R'} h3.
    """

    m: int
    c1: Fraction
    R: int
    violated: bool
    detail: str = ""


def prop_main_check(
    G: FiniteGroup,
    N: FiniteGroup,
    spec: TwistSpec,
    R: int,
    node_cap: int = 10**8,
    visited_cap: int = 10**7,
) -> SandwichReport:
    """Empirical sandwich between h2 and h3 partial sums at desk scale."""
    blocks = orbit_blocks(spec, restrict_minimal=False)
    h3 = brute_force_h3(blocks, spec.q, R)
    h2 = h2_desk_scale(G, N, spec, R, node_cap, visited_cap)

    def h2_sum(below: int) -> int:
        return sum(v for r, v in h2.items() if 1 <= r < below)

    # right side: smallest rational c1 with h2 partial sums <= c1 * h3 sums
    c1 = Fraction(1)
    for Rp in range(1, R + 2):
        s3 = h3.partial_sum(Rp)
        s2 = h2_sum(Rp)
        if s3 == 0:
            if s2 > 0:
                return SandwichReport(
                    m=0,
                    c1=Fraction(0),
                    R=R,
                    violated=True,
                    detail=f"h2 positive but h3 zero below R'={Rp}",
                )
            continue
        c1 = max(c1, Fraction(s2, s3))
    # left side: smallest m such that the shifted h3 sum never exceeds h2
    for m in range(0, R + 1):
        ok = True
        for Rp in range(1, R + 2):
            if h3.partial_sum(Rp - m) > h2_sum(Rp):
                ok = False
                break
        if ok:
            return SandwichReport(m=m, c1=c1, R=R, violated=False)
    return SandwichReport(
        m=R,
        c1=c1,
        R=R,
        violated=True,
        detail="no shift m <= R validates the lower bound",
    )

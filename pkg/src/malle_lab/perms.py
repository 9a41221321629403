"""Permutations on points 1..n, with cycle-notation parsing and printing.

Composition convention, used everywhere in this package: ``f * g`` means
"apply f first, then g", so a product of tuple entries g1 * g2 * ... * gk
is evaluated left to right.  Conjugation ``g.conjugate_by(h)`` is
h^{-1} g h in this convention, i.e. the permutation obtained from g by
relabelling every point p as h(p); the conjugate of the cycle (1 2 3) by h
is the cycle (h(1) h(2) h(3)).
"""

from __future__ import annotations

import re
from functools import reduce
from typing import Iterable, Sequence

from .errors import DegreeMismatch, ParseError, PointOutOfRange


class Permutation:
    """An element of S_n.  `images[i-1]` is the image of point i (1-based)."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection on 1..{n}: {images}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build a permutation from cycles of 1-based points.

        Cycles need not be disjoint; they are composed left to right.
        """
        result = cls.identity(degree)
        for cycle in cycles:
            images = list(range(1, degree + 1))
            for i, point in enumerate(cycle):
                if not 1 <= point <= degree:
                    raise PointOutOfRange(f"point {point} outside 1..{degree}")
                images[point - 1] = cycle[(i + 1) % len(cycle)]
            result = result * cls(images)
        return result

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # apply self first, then other
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for i, v in enumerate(self.images):
            images[v - 1] = i + 1
        return Permutation(images)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate_by(self, h: "Permutation") -> "Permutation":
        """h^{-1} * self * h: relabel points of self through h."""
        return h.inverse() * self * h

    def commutator(self, other: "Permutation") -> "Permutation":
        return self.inverse() * other.inverse() * self * other

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each rotated to start at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = []
            p = start
            while not seen[p - 1]:
                seen[p - 1] = True
                cycle.append(p)
                p = self.images[p - 1]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    @property
    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def order(self) -> int:
        k = 1
        p = self
        while not p.is_identity:
            p = p * self
            k += 1
        return k

    def index(self) -> int:
        """Degree minus the number of orbits on points (fixed points count)."""
        return self.degree - len(self.cycles(include_fixed=True))

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles(include_fixed=True)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def format_cycles(p: Permutation) -> str:
    """Canonical cycle string; the identity prints as 'id'."""
    cycles = p.cycles()
    if not cycles:
        return "id"
    return "".join("(" + " ".join(str(pt) for pt in c) + ")" for c in cycles)


_TOKEN = re.compile(r"\s*(\(|\)|\d+|id)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation like "(1 2 3)(4 5 6)" into a Permutation.

    Whitespace-insensitive; digits inside a cycle may also be run together
    when all points are single digits, e.g. "(123)(456)".  "id" and "()"
    denote the identity.  Cycles need not be disjoint and compose left to
    right.  Raises ParseError (with position) or PointOutOfRange.
    """
    pos = 0
    cycles: list[list[int]] = []
    current: list[int] | None = None
    saw_id = False
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}", pos)
        token = m.group(1)
        pos = m.end()
        if token == "(":
            if current is not None:
                raise ParseError("nested '('", pos - 1)
            current = []
        elif token == ")":
            if current is None:
                raise ParseError("')' without '('", pos - 1)
            cycles.append(current)
            current = None
        elif token == "id":
            if current is not None:
                raise ParseError("'id' inside a cycle", pos - len(token))
            saw_id = True
        else:
            if current is None:
                raise ParseError(f"number {token} outside a cycle", pos - len(token))
            if degree <= 9 and len(token) > 1:
                points = [int(ch) for ch in token]
            else:
                points = [int(token)]
            for point in points:
                if not 1 <= point <= degree:
                    raise PointOutOfRange(f"point {point} outside 1..{degree}")
                if point in current:
                    raise ParseError(f"point {point} repeated in cycle", pos - len(token))
                current.append(point)
    if current is not None:
        raise ParseError("unclosed '('", len(text))
    if not cycles and not saw_id and text.strip() == "":
        raise ParseError("empty input", 0)
    return Permutation.from_cycles([c for c in cycles if c], degree)


def product(perms: Sequence[Permutation], degree: int | None = None) -> Permutation:
    """Left-to-right product; the empty product needs an explicit degree."""
    if not perms:
        if degree is None:
            raise ValueError("empty product needs a degree")
        return Permutation.identity(degree)
    return reduce(lambda a, b: a * b, perms)

"""Permutations on {1..degree}, stored 0-based internally."""

from __future__ import annotations

import re
from math import lcm

from codegree.errors import GroupParseError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """An immutable permutation given by its image tuple.

    ``images[i]`` is the 0-based image of point ``i``.  Products compose
    left-to-right: ``(p * q)(i) == q(p(i))``.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images is not a bijection of {0..n-1}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(cycles, degree: int = 0) -> "Permutation":
        """Build a permutation from 1-based disjoint cycles."""
        maxpt = max((max(c) for c in cycles if c), default=0)
        n = max(degree, maxpt)
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            for pt in cycle:
                if pt < 1:
                    raise GroupParseError(f"points must be positive, got {pt}")
                if pt in seen:
                    raise GroupParseError(f"point {pt} repeated; cycles not disjoint")
                seen.add(pt)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b - 1
        return Permutation(images)

    @staticmethod
    def parse(text: str, degree: int = 0) -> "Permutation":
        """Parse one generator line, e.g. ``(1 2 3)(4 5)``."""
        stripped = text.strip()
        if stripped.count("(") != stripped.count(")"):
            raise GroupParseError(f"unbalanced parentheses in {text!r}")
        cycles = []
        for m in _CYCLE_RE.finditer(stripped):
            body = m.group(1).strip()
            if not body:
                cycles.append([])
                continue
            try:
                pts = [int(tok) for tok in body.split()]
            except ValueError as exc:
                raise GroupParseError(f"bad cycle {m.group(0)!r}") from exc
            cycles.append(pts)
        leftover = _CYCLE_RE.sub("", stripped).strip()
        if leftover:
            raise GroupParseError(f"unexpected text {leftover!r} in {text!r}")
        return Permutation.from_cycles(cycles, degree)

    def extend(self, degree: int) -> "Permutation":
        """Pad with fixed points up to ``degree``."""
        if degree < self.degree:
            raise ValueError("cannot shrink a permutation")
        if degree == self.degree:
            return self
        return Permutation(self.images + tuple(range(self.degree, degree)))

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            n = max(self.degree, other.degree)
            return self.extend(n) * other.extend(n)
        q = other.images
        return Permutation(q[i] for i in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return ``by^-1 * self * by``."""
        return by.inverse() * self * by

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()), 1)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles as 1-based tuples, smallest point first."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(p + 1 for p in cyc))
        return out

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

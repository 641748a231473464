"""Finite permutation-group engine at desk scale (order up to ~10^4).

Groups are given by generators; a deterministic Schreier-Sims stabilizer
chain (base points = smallest moved points) provides order and membership.
Conjugacy classes, normal closures, the Fitting subgroup and minimal normal
subgroups are computed by explicit element enumeration, which is the right
tool at this scale and keeps every result reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import lcm

import numpy as np

from codegree.errors import GroupParseError
from codegree.perm import Permutation


class _StabChain:
    """One level of a stabilizer chain; deterministic construction."""

    __slots__ = ("base", "gens", "transversal", "stab")

    def __init__(self):
        self.base = None
        self.gens = []
        self.transversal = {}
        self.stab = None

    def level_generators(self):
        gens = list(self.gens)
        if self.stab is not None:
            gens.extend(self.stab.level_generators())
        return gens

    def order(self) -> int:
        if self.base is None:
            return 1
        return len(self.transversal) * self.stab.order()

    def sift(self, g: Permutation) -> Permutation:
        node = self
        while node.base is not None:
            beta = g.images[node.base]
            u = node.transversal.get(beta)
            if u is None:
                return g
            g = g * u.inverse()
            node = node.stab
        return g

    def add_generator(self, g: Permutation) -> None:
        residue = self.sift(g)
        if residue.is_identity():
            return
        if self.base is None:
            self.base = min(i for i, j in enumerate(residue.images) if i != j)
            self.stab = _StabChain()
        self.gens.append(residue)
        self._close()

    def _close(self) -> None:
        gens = self.level_generators()
        ident = Permutation.identity(gens[0].degree)
        transversal = {self.base: ident}
        queue = [self.base]
        while queue:
            alpha = queue.pop(0)
            u_alpha = transversal[alpha]
            for g in gens:
                beta = g.images[alpha]
                if beta not in transversal:
                    transversal[beta] = u_alpha * g
                    queue.append(beta)
        self.transversal = transversal
        # Schreier generators stabilize the base point; push them down.
        for alpha in sorted(transversal):
            u_alpha = transversal[alpha]
            for g in gens:
                beta = g.images[alpha]
                schreier = u_alpha * g * transversal[beta].inverse()
                if not schreier.is_identity():
                    self.stab.add_generator(schreier)

    def elements(self):
        """Every element, as products of transversal representatives."""
        if self.base is None:
            return [None]
        out = []
        for u in self.transversal.values():
            for h in self.stab.elements():
                out.append(u if h is None else h * u)
        return out


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugacy class: minimal representative, size, element order."""

    representative: Permutation
    size: int
    element_order: int


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of some parent group, tracked by generators and order."""

    generators: tuple[Permutation, ...]
    order: int
    _elements: frozenset = field(repr=False, hash=False, compare=False)

    def contains_element(self, g: Permutation) -> bool:
        return g.images in self._elements


class _GroupData:
    """Element table plus conjugacy-class index data for kernel code."""

    def __init__(self, group: "PermutationGroup"):
        elems = group._chain.elements()
        degree = group.degree
        n = len(elems)
        table = np.empty((n, degree), dtype=np.int64)
        for i, g in enumerate(elems):
            table[i] = group._identity.images if g is None else g.images
        order_keys = np.lexsort(table.T[::-1])
        table = table[order_keys]
        self.elems = np.ascontiguousarray(table)
        self.n = n
        self.index = {self.elems[i].tobytes(): i for i in range(n)}
        inv = np.empty(n, dtype=np.int64)
        orders = np.empty(n, dtype=np.int64)
        for i in range(n):
            row = self.elems[i]
            inv_row = np.empty(degree, dtype=np.int64)
            inv_row[row] = np.arange(degree)
            inv[i] = self.index[inv_row.tobytes()]
            orders[i] = self._row_order(row)
        self.inv_idx = inv
        self.order_of = orders
        self._conjugacy(group)
        self._power_maps()

    @staticmethod
    def _row_order(row) -> int:
        n = len(row)
        seen = [False] * n
        result = 1
        for s in range(n):
            if seen[s]:
                continue
            length = 1
            seen[s] = True
            j = row[s]
            while j != s:
                seen[j] = True
                length += 1
                j = row[j]
            result = lcm(result, length)
        return result

    def _conjugacy(self, group: "PermutationGroup") -> None:
        gen_rows = [np.array(g.images, dtype=np.int64) for g in group.generators]
        geninv_rows = [np.array(g.inverse().images, dtype=np.int64) for g in group.generators]
        class_of = np.full(self.n, -1, dtype=np.int64)
        classes = []
        for seed in range(self.n):
            if class_of[seed] >= 0:
                continue
            cid = len(classes)
            members = [seed]
            class_of[seed] = cid
            queue = [seed]
            while queue:
                x = queue.pop()
                xrow = self.elems[x]
                for grow, ginvrow in zip(gen_rows, geninv_rows):
                    # y = g^-1 x g, i.e. t -> g[x[ginv[t]]]
                    yrow = grow[xrow[ginvrow]]
                    yi = self.index[yrow.tobytes()]
                    if class_of[yi] < 0:
                        class_of[yi] = cid
                        members.append(yi)
                        queue.append(yi)
            classes.append((seed, members))
        # canonical order: (element order, size, representative row)
        def key(entry):
            seed, members = entry
            return (int(self.order_of[seed]), len(members), tuple(self.elems[seed]))

        classes.sort(key=key)
        self.class_reps = np.empty(len(classes), dtype=np.int64)
        self.class_sizes = np.empty(len(classes), dtype=np.int64)
        mem_flat = []
        mem_off = [0]
        for new_id, (seed, members) in enumerate(classes):
            self.class_reps[new_id] = seed
            self.class_sizes[new_id] = len(members)
            mem_flat.extend(sorted(members))
            mem_off.append(len(mem_flat))
        new_class_of = np.empty(self.n, dtype=np.int64)
        for new_id, (seed, members) in enumerate(classes):
            for m in members:
                new_class_of[m] = new_id
        self.class_of = new_class_of
        self.mem_flat = np.array(mem_flat, dtype=np.int64)
        self.mem_off = np.array(mem_off, dtype=np.int64)
        self.k = len(classes)

    def _power_maps(self) -> None:
        """class of rep^j for each class and 0 <= j < exponent."""
        self.exponent = 1
        for cid in range(self.k):
            self.exponent = lcm(self.exponent, int(self.order_of[self.class_reps[cid]]))
        e = self.exponent
        pm = np.empty((self.k, e), dtype=np.int64)
        ident = self.index[np.arange(self.elems.shape[1], dtype=np.int64).tobytes()]
        for cid in range(self.k):
            rep = int(self.class_reps[cid])
            cur = ident
            for j in range(e):
                pm[cid, j] = self.class_of[cur]
                cur = self.product(cur, rep)
        self.power_class = pm
        self.identity_index = ident
        self.inverse_class = np.array(
            [self.class_of[self.inv_idx[self.class_reps[c]]] for c in range(self.k)],
            dtype=np.int64,
        )

    def product(self, a: int, b: int) -> int:
        """Index of elems[a] * elems[b] (apply a, then b)."""
        row = self.elems[b][self.elems[a]]
        return self.index[row.tobytes()]

    def conj(self, x: int, g: int) -> int:
        """Index of g^-1 x g."""
        gi = self.inv_idx[g]
        row = self.elems[g][self.elems[x][self.elems[gi]]]
        return self.index[row.tobytes()]


class PermutationGroup:
    """A finite group of permutations of {1..degree}."""

    def __init__(self, generators, degree: int | None = None):
        gens = [g for g in generators]
        if degree is None:
            degree = max((g.degree for g in gens), default=1)
        degree = max(degree, 1)
        self.generators = tuple(g.extend(degree) for g in gens)
        self.degree = degree
        self._identity = Permutation.identity(degree)

    @cached_property
    def _chain(self) -> _StabChain:
        chain = _StabChain()
        for g in self.generators:
            chain.add_generator(g)
        return chain

    @cached_property
    def _data(self) -> _GroupData:
        return _GroupData(self)

    def order(self) -> int:
        return self._chain.order()

    def contains(self, g: Permutation) -> bool:
        if g.degree > self.degree:
            if any(g.images[i] != i for i in range(self.degree, g.degree)):
                return False
            g = Permutation(g.images[: self.degree])
        elif g.degree < self.degree:
            g = g.extend(self.degree)
        return self._chain.sift(g).is_identity()

    def elements(self) -> tuple[Permutation, ...]:
        data = self._data
        return tuple(Permutation(row) for row in data.elems.tolist())

    def conjugacy_classes(self) -> list[ConjugacyClass]:
        data = self._data
        return [
            ConjugacyClass(
                representative=Permutation(data.elems[data.class_reps[c]].tolist()),
                size=int(data.class_sizes[c]),
                element_order=int(data.order_of[data.class_reps[c]]),
            )
            for c in range(data.k)
        ]

    def exponent(self) -> int:
        return self._data.exponent

    # -- normal-structure operations -------------------------------------

    def _closure_indices(self, seed_indices) -> frozenset[int]:
        """Subgroup closure of a set of element indices."""
        data = self._data
        seeds = sorted(set(int(s) for s in seed_indices))
        members = {data.identity_index}
        frontier = [data.identity_index]
        while frontier:
            x = frontier.pop()
            for s in seeds:
                y = data.product(x, s)
                if y not in members:
                    members.add(y)
                    frontier.append(y)
        return frozenset(members)

    def _conjugate_orbit(self, idx: int) -> list[int]:
        data = self._data
        gen_idx = [data.index[np.array(g.images, dtype=np.int64).tobytes()] for g in self.generators]
        orbit = {idx}
        queue = [idx]
        while queue:
            x = queue.pop()
            for g in gen_idx:
                y = data.conj(x, g)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        return sorted(orbit)

    def _subgroup_from_indices(self, elem_indices: frozenset[int]) -> Subgroup:
        data = self._data
        gens = []
        covered = {data.identity_index}
        for idx in sorted(elem_indices):
            if idx in covered:
                continue
            gens.append(idx)
            covered = self._closure_indices(gens)
        perms = tuple(Permutation(data.elems[i].tolist()) for i in gens)
        rows = frozenset(tuple(data.elems[i].tolist()) for i in elem_indices)
        return Subgroup(generators=perms, order=len(elem_indices), _elements=rows)

    def _element_index(self, g: Permutation) -> int:
        data = self._data
        g = g.extend(self.degree)
        key = np.array(g.images, dtype=np.int64).tobytes()
        if key not in data.index:
            raise ValueError(f"{g} is not a member of the group")
        return data.index[key]

    def normal_closure(self, g: Permutation) -> Subgroup:
        """Smallest normal subgroup containing g; errors when g is outside."""
        idx = self._element_index(g)
        orbit = self._conjugate_orbit(idx)
        closure = self._closure_indices(orbit)
        return self._subgroup_from_indices(closure)

    def _normal_closure_indices(self, idx: int) -> frozenset[int]:
        return self._closure_indices(self._conjugate_orbit(idx))

    def fitting_subgroup(self) -> Subgroup:
        """F(G) as the product of the p-cores O_p(G).

        O_p(G) is the join of the normal closures of the class
        representatives of p-power order whose closure is a p-group.
        """
        data = self._data
        n = self.order()
        contributors = []
        closure_cache: dict[int, frozenset[int]] = {}
        for p in _prime_factors(n):
            for cid in range(data.k):
                o = int(data.order_of[data.class_reps[cid]])
                if o == 1 or not _is_power_of(o, p):
                    continue
                rep = int(data.class_reps[cid])
                if rep not in closure_cache:
                    closure_cache[rep] = self._normal_closure_indices(rep)
                if _is_power_of(len(closure_cache[rep]), p):
                    contributors.append(rep)
        union = set()
        for rep in contributors:
            union.update(closure_cache[rep])
        union.add(data.identity_index)
        return self._subgroup_from_indices(self._closure_indices(union))

    def minimal_normal_subgroups(self) -> list[Subgroup]:
        """Inclusion-minimal nontrivial normal closures of class reps."""
        if self.order() == 1:
            raise ValueError("the trivial group has no minimal normal subgroups")
        data = self._data
        closures = []
        seen = set()
        for cid in range(1, data.k):
            rep = int(data.class_reps[cid])
            cl = self._normal_closure_indices(rep)
            if cl not in seen:
                seen.add(cl)
                closures.append(cl)
        minimal = [
            cl
            for cl in closures
            if not any(other < cl for other in closures)
        ]
        minimal.sort(key=lambda cl: (len(cl), sorted(cl)))
        return [self._subgroup_from_indices(cl) for cl in minimal]


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def parse_group(text: str) -> PermutationGroup:
    """Parse the group file format.

    Lines starting with ``#`` are comments; every other nonempty line is one
    generator written as a product of disjoint cycles, e.g. ``(1 2 3)(4 5)``.
    The degree is the largest point named; an empty file is the trivial
    group on one point.
    """
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            gens.append(Permutation.parse(line))
        except GroupParseError as exc:
            raise GroupParseError(f"line {lineno}: {exc}") from exc
    return PermutationGroup(gens)

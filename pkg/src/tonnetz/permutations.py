"""Finite permutation groups on {0, ..., n-1} with exact, exhaustive checks.

Everything here is small (degree <= 24, orders <= 1152), so groups are
materialized as explicit element sets and verified by enumeration rather
than by any clever structural shortcuts.  The one algorithm that needs
care is the centralizer of a semiregular group: it is computed from base
points, never by walking the full symmetric group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations as all_permutations
from typing import Iterable, Iterator, Optional, Sequence


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {0, ..., n-1}, stored as its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Compose right-to-left: (a * b)(x) = a(b(x))."""
        if self.degree != other.degree:
            raise ValueError("cannot compose permutations of different degrees")
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images):
            inv[img] = i
        return Permutation(tuple(inv))

    def order(self) -> int:
        power, n = self, 1
        identity = Permutation.identity(self.degree)
        while power != identity:
            power = power * self
            n += 1
        return n

    @property
    def is_identity(self) -> bool:
        return all(i == img for i, img in enumerate(self.images))


def commutes(a: Permutation, b: Permutation) -> bool:
    return a * b == b * a


@dataclass(frozen=True)
class PermGroup:
    """A group of permutations of common degree, with all elements listed."""

    degree: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]  # sorted, identity included

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.element_set

    @property
    def element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.element_set <= other.element_set


def generate(generators: Iterable[Permutation], degree: Optional[int] = None) -> PermGroup:
    """Close a generating set under composition (work-queue breadth-first).

    With no generators the trivial group is returned, in which case
    ``degree`` must be given.
    """
    gens = tuple(generators)
    if degree is None:
        if not gens:
            raise ValueError("degree is required when no generators are given")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators must share one degree")
    identity = Permutation.identity(degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g * p
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return PermGroup(degree, gens, tuple(sorted(seen)))


def from_elements(elements: Iterable[Permutation],
                  generators: Optional[Iterable[Permutation]] = None) -> PermGroup:
    """Package an explicit element set known to be a group.

    Identity and inverse membership are checked outright; full closure is
    left to callers' tests where exhaustive verification is wanted.
    """
    elems = tuple(sorted(set(elements)))
    if not elems:
        raise ValueError("a group needs at least the identity")
    degree = elems[0].degree
    ident = Permutation.identity(degree)
    pool = set(elems)
    if ident not in pool:
        raise ValueError("element set is missing the identity")
    for p in elems:
        if p.inverse() not in pool:
            raise ValueError(f"element set is missing the inverse of {p.images}")
    gens = tuple(generators) if generators is not None else elems
    return PermGroup(degree, gens, elems)


def orbit(group: PermGroup, point: int) -> frozenset[int]:
    """All images of a point under the group."""
    return frozenset(p(point) for p in group)


def stabilizer(group: PermGroup, point: int) -> PermGroup:
    """The subgroup fixing a point."""
    fixed = [p for p in group if p(point) == point]
    return from_elements(fixed)


def is_simply_transitive(group: PermGroup) -> bool:
    """One orbit, and exactly one group element per point of it."""
    return len(group) == group.degree and len(orbit(group, 0)) == group.degree


def _semiregular_violation(group: PermGroup) -> Optional[tuple[Permutation, int]]:
    for p in group:
        if p.is_identity:
            continue
        for point, img in enumerate(p.images):
            if point == img:
                return p, point
    return None


def centralizer_semiregular(group: PermGroup) -> PermGroup:
    """All permutations of the same degree commuting with a semiregular group.

    A centralizing map f is pinned by its images on one base point per
    orbit: semiregularity makes h |-> h(b) injective, so f(h(b)) = h(f(b))
    extends each choice f(b) = c to the whole orbit without ambiguity.
    Candidates are enumerated per base point and kept when the assembled
    map is a bijection commuting with the generators; the full symmetric
    group is never walked.
    """
    bad = _semiregular_violation(group)
    if bad is not None:
        perm, point = bad
        raise ValueError(
            f"group is not semiregular: point {point} is fixed by the "
            f"non-identity element {perm.images}"
        )
    degree = group.degree
    points = range(degree)
    # Orbits, each with its first point as base.
    orbit_of = [-1] * degree
    bases: list[int] = []
    for point in points:
        if orbit_of[point] == -1:
            idx = len(bases)
            bases.append(point)
            for p in group:
                orbit_of[p(point)] = idx
    bound = math.factorial(len(bases)) * len(group) ** len(bases)
    if bound > 10**7:
        raise ValueError(
            f"refusing to enumerate a centralizer with up to {bound} candidates; "
            "the acting group is too sparse for base-point enumeration"
        )
    found: list[Permutation] = []

    def assign(base_idx: int, image: list[Optional[int]], used_orbits: set[int]) -> None:
        if base_idx == len(bases):
            images = tuple(image)  # complete: every slot filled by construction
            candidate = Permutation(images)
            if all(commutes(candidate, g) for g in group.generators):
                found.append(candidate)
            return
        base = bases[base_idx]
        for target in points:
            t_orbit = orbit_of[target]
            if t_orbit in used_orbits:
                continue  # image would collide with an orbit already covered
            trial = list(image)
            ok = True
            for p in group:
                slot = p(base)
                value = p(target)
                if trial[slot] is not None and trial[slot] != value:
                    ok = False
                    break
                trial[slot] = value
            if ok:
                used_orbits.add(t_orbit)
                assign(base_idx + 1, trial, used_orbits)
                used_orbits.remove(t_orbit)

    assign(0, [None] * degree, set())
    return from_elements(found)


def centralizer_within(inner: PermGroup, ambient: PermGroup) -> PermGroup:
    """Elements of ``ambient`` commuting with every element of ``inner``."""
    if not inner.is_subgroup_of(ambient):
        raise ValueError("inner group must be a subgroup of the ambient group")
    gens = inner.generators
    kept = [p for p in ambient if all(commutes(p, g) for g in gens)]
    return from_elements(kept)


class GroupTableError(ValueError):
    """A multiplication table violating one of the group axioms."""

    def __init__(self, axiom: str, detail: str):
        self.axiom = axiom
        super().__init__(f"{axiom}: {detail}")


def validate_group_table(table: Sequence[Sequence[int]]) -> int:
    """Check a multiplication table is a group; returns the identity index."""
    n = len(table)
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupTableError("closure", f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise GroupTableError("closure", f"entry ({i},{j}) = {v} is out of range")
    identity = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise GroupTableError("identity", "no two-sided identity element")
    for g in range(n):
        if not any(table[g][h] == identity and table[h][g] == identity for h in range(n)):
            raise GroupTableError("inverses", f"element {g} has no two-sided inverse")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise GroupTableError(
                        "associativity", f"({a}*{b})*{c} != {a}*({b}*{c})"
                    )
    return identity


def regular_representations(table: Sequence[Sequence[int]]) -> tuple[PermGroup, PermGroup]:
    """Left and right regular actions of an abstract group on itself.

    The left copy sends x to g*x; the right copy sends x to x*g^{-1} (the
    inverse keeps it a homomorphism).  The two images centralize each
    other inside the symmetric group on the element set.
    """
    identity = validate_group_table(table)
    n = len(table)
    inverse = [0] * n
    for g in range(n):
        for h in range(n):
            if table[g][h] == identity:
                inverse[g] = h
                break
    left = [Permutation(tuple(table[g][x] for x in range(n))) for g in range(n)]
    right = [Permutation(tuple(table[x][inverse[g]] for x in range(n))) for g in range(n)]
    return from_elements(left), from_elements(right)


def is_dihedral_24(group: PermGroup) -> tuple[bool, Optional[tuple[Permutation, Permutation]]]:
    """Decide dihedrality of order 24 by exhibiting generators s, t with
    s^12 = t^2 = identity, t s t = s^{-1}, and <s, t> the whole group."""
    if len(group) != 24:
        return False, None
    rotations = [p for p in group if p.order() == 12]
    flips = [p for p in group if p.order() == 2]
    for s in rotations:
        s_inv = s.inverse()
        for t in flips:
            if t * s * t == s_inv and len(generate((s, t), group.degree)) == 24:
                return True, (s, t)
    return False, None


def cyclic_table(n: int) -> list[list[int]]:
    """Multiplication table of the cyclic group of order n."""
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def dihedral_table(n: int) -> list[list[int]]:
    """Multiplication table of the dihedral group of order 2n.

    Elements 0..n-1 are the rotations r^i, elements n..2n-1 the
    reflections r^i f, multiplied by r^a r^b = r^{a+b}, (r^a f)(r^b) =
    r^{a-b} f, r^a (r^b f) = r^{a+b} f, and (r^a f)(r^b f) = r^{a-b}.
    """
    size = 2 * n

    def mul(x: int, y: int) -> int:
        xa, xf = x % n, x >= n
        ya, yf = y % n, y >= n
        a = (xa - ya) % n if xf else (xa + ya) % n
        return a + (n if xf != yf else 0)

    return [[mul(x, y) for y in range(size)] for x in range(size)]


def symmetric_table(n: int) -> list[list[int]]:
    """Multiplication table of the symmetric group on n symbols.

    Elements are the permutations of 0..n-1 in lexicographic order and
    the product composes right-to-left, matching ``Permutation.__mul__``.
    """
    perms = [Permutation(p) for p in sorted(all_permutations(range(n)))]
    index = {p: i for i, p in enumerate(perms)}
    return [[index[a * b] for b in perms] for a in perms]

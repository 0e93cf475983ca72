"""Brute-force surface-group computations in small symmetric groups.

The closed genus-g surface group has one relation, the product of
commutators of the standard generator pairs; the punctured surface group
is free on the same generators.  Counting homomorphisms into a small
symmetric group on both sides (by plain enumeration, no group-theory
library) exhibits assignments satisfying the free group but violating the
relation; the concrete witness sends the first generator pair to a
transposition and a 3-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial

from .errors import SizeMismatch, TooLarge

#: Hard cap on enumerated generator assignments.
ENUMERATION_LIMIT = 2_000_000


@dataclass(frozen=True)
class Perm:
    """Permutation of {1..n}; ``images[i]`` is the image of i+1."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(tuple(range(1, n + 1)))

    @staticmethod
    def from_cycles(n: int, cycles) -> "Perm":
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return Perm(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def is_identity(self) -> bool:
        return all(self.images[i] == i + 1 for i in range(self.n))

    def inverse(self) -> "Perm":
        out = [0] * self.n
        for i, img in enumerate(self.images):
            out[img - 1] = i + 1
        return Perm(tuple(out))

    def cycle_notation(self) -> str:
        seen = set()
        parts = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                seen.add(start)
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            parts.append("(" + " ".join(map(str, cycle)) + ")")
        return "".join(parts) if parts else "id"


def compose(a: Perm, b: Perm) -> Perm:
    """a after b: (a . b)(i) = a(b(i))."""
    if a.n != b.n:
        raise SizeMismatch(f"sizes {a.n} and {b.n}")
    return Perm(tuple(a.images[b.images[i] - 1] for i in range(a.n)))


def commutator(a: Perm, b: Perm) -> Perm:
    """a b a^-1 b^-1."""
    return compose(compose(a, b), compose(a.inverse(), b.inverse()))


@dataclass(frozen=True)
class GeneratorAssignment:
    """Images of the 2g standard generators (a1, b1, ..., ag, bg)."""

    genus: int
    images: tuple[Perm, ...]

    def __post_init__(self):
        if len(self.images) != 2 * self.genus:
            raise ValueError("need exactly 2g generator images")


def surface_relation(assign: GeneratorAssignment) -> Perm:
    """The product of commutators [a1, b1] ... [ag, bg]."""
    n = assign.images[0].n
    out = Perm.identity(n)
    for i in range(assign.genus):
        out = compose(out, commutator(assign.images[2 * i], assign.images[2 * i + 1]))
    return out


def count_homs(genus: int, n: int) -> tuple[int, int]:
    """(surface_count, free_count) of homomorphisms into S_n.

    Every tuple of 2g permutations is a homomorphism of the free group;
    the surface count keeps those killing the product of commutators.
    """
    free_count = factorial(n) ** (2 * genus)
    if free_count > ENUMERATION_LIMIT:
        raise TooLarge(f"{free_count} assignments exceed the enumeration bound")
    perms = [Perm(p) for p in permutations(range(1, n + 1))]
    surface_count = 0
    for images in product(perms, repeat=2 * genus):
        if surface_relation(GeneratorAssignment(genus, images)).is_identity():
            surface_count += 1
    return surface_count, free_count


def conjugacy_class_count(n: int) -> int:
    """Number of conjugacy classes of S_n, by direct orbit enumeration."""
    perms = [Perm(p) for p in permutations(range(1, n + 1))]
    remaining = set(perms)
    classes = 0
    while remaining:
        rep = next(iter(remaining))
        orbit = {compose(compose(g, rep), g.inverse()) for g in perms}
        remaining -= orbit
        classes += 1
    return classes


def witness_nonextendable(genus: int) -> GeneratorAssignment:
    """An S3 assignment satisfying no surface relation: a1 -> (1 2), b1 -> (1 2 3).

    The remaining generators go to the identity; the relation value is a
    nontrivial 3-cycle, so the assignment is a homomorphism of the free
    (punctured-surface) group that does not factor through the closed
    surface group.
    """
    if genus < 1:
        raise ValueError("genus must be positive")
    a1 = Perm.from_cycles(3, [(1, 2)])
    b1 = Perm.from_cycles(3, [(1, 2, 3)])
    tail = tuple(Perm.identity(3) for _ in range(2 * genus - 2))
    assign = GeneratorAssignment(genus, (a1, b1) + tail)
    if surface_relation(assign).is_identity():  # pragma: no cover
        raise AssertionError("witness relation value is unexpectedly trivial")
    return assign

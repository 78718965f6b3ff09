"""Classical Weyl groups realized as signed permutations.

Elements are signed permutations of coordinates 1..rank.  A group is one of
the classical families needed downstream -- the symmetric group S_n acting on
n coordinates (type A), the full hyperoctahedral group (type B), its
even-sign-count subgroup (type D), and a block product S_r x S_r living in
rank 2r.  Lengths are computed by root counting, subgroups come from
generator closures, coset spaces carry canonical (lexicographically least)
representatives, and conjugation orbits are computed by breadth-first search.

>>> w = transposition(1, 3, 3)
>>> (w * w).is_identity()
True
>>> symmetric_group(3).length(w)
3
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

__all__ = [
    "SignedPerm",
    "WeylGroup",
    "RankMismatch",
    "NotInGroup",
    "NotASubgroup",
    "SubgroupTooLarge",
    "identity",
    "transposition",
    "sign_flip",
    "from_one_line",
    "symmetric_group",
    "hyperoctahedral_group",
    "even_hyperoctahedral_group",
    "product_symmetric_group",
    "canonical_key",
    "enumerate_subgroup",
    "coset_space",
    "conjugacy_classes",
    "SUBGROUP_CAP",
]

#: Hard cap on group enumeration sizes (2^8 * 8!).
SUBGROUP_CAP = 2**8 * 40320


class RankMismatch(ValueError):
    """Raised when combining signed permutations of different ranks."""


class NotInGroup(ValueError):
    """Raised when an element does not belong to the stated group."""


class NotASubgroup(ValueError):
    """Raised when alleged subgroup generators fall outside the group."""


class SubgroupTooLarge(RuntimeError):
    """Raised when a generator closure exceeds the enumeration cap."""


@dataclass(frozen=True, order=False)
class SignedPerm:
    """A signed permutation, stored as the tuple of signed images.

    ``images[j-1] == s*k`` means coordinate j maps to coordinate k with
    sign s (s is +1 or -1, coordinates are 1-based).
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        seen = sorted(abs(v) for v in self.images)
        if seen != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @property
    def rank(self) -> int:
        return len(self.images)

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        """Composition: ``(w * v)`` applies v first, then w."""
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")
        out = []
        for v in other.images:
            w = self.images[abs(v) - 1]
            out.append(w if v > 0 else -w)
        return SignedPerm(tuple(out))

    def inverse(self) -> "SignedPerm":
        out = [0] * self.rank
        for j, v in enumerate(self.images, start=1):
            out[abs(v) - 1] = j if v > 0 else -j
        return SignedPerm(tuple(out))

    def is_identity(self) -> bool:
        return all(v == j for j, v in enumerate(self.images, start=1))

    def is_involution(self) -> bool:
        return (self * self).is_identity()

    def apply(self, vector: Sequence) -> tuple:
        """Act on a rank-length coordinate vector."""
        if len(vector) != self.rank:
            raise RankMismatch(f"vector length {len(vector)} vs rank {self.rank}")
        out = [0] * self.rank
        for j, v in enumerate(self.images):
            out[abs(v) - 1] = vector[j] if v > 0 else -vector[j]
        return tuple(out)

    def conjugate_by(self, t: "SignedPerm") -> "SignedPerm":
        """Return ``t * self * t^-1``."""
        return t * self * t.inverse()

    def signs(self) -> tuple[int, ...]:
        return tuple(1 if v > 0 else -1 for v in self.images)

    def permutation(self) -> tuple[int, ...]:
        return tuple(abs(v) for v in self.images)

    def matrix(self) -> list[list[int]]:
        m = [[0] * self.rank for _ in range(self.rank)]
        for j, v in enumerate(self.images):
            m[abs(v) - 1][j] = 1 if v > 0 else -1
        return m

    def cycle_string(self) -> str:
        """Disjoint-cycle notation; sign flips appended as a +/- vector."""
        perm = self.permutation()
        seen = [False] * self.rank
        cycles = []
        for start in range(1, self.rank + 1):
            if seen[start - 1] or perm[start - 1] == start:
                seen[start - 1] = True
                continue
            cyc = [start]
            seen[start - 1] = True
            nxt = perm[start - 1]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt - 1] = True
                nxt = perm[nxt - 1]
            cycles.append("(" + " ".join(str(c) for c in cyc) + ")")
        body = "".join(cycles) if cycles else "e"
        if any(v < 0 for v in self.images):
            marks = "".join("+" if s > 0 else "-" for s in self.signs())
            return f"{body}[{marks}]"
        return body

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"SignedPerm{self.images}"


def identity(rank: int) -> SignedPerm:
    return SignedPerm(tuple(range(1, rank + 1)))


def transposition(i: int, j: int, rank: int) -> SignedPerm:
    """The plain transposition (i j); with i == j this is the identity."""
    out = list(range(1, rank + 1))
    out[i - 1], out[j - 1] = j, i
    return SignedPerm(tuple(out))


def sign_flip(coords: Iterable[int], rank: int) -> SignedPerm:
    out = list(range(1, rank + 1))
    for c in coords:
        out[c - 1] = -out[c - 1]
    return SignedPerm(tuple(out))


def from_one_line(images: Sequence[int]) -> SignedPerm:
    return SignedPerm(tuple(images))


def canonical_key(w: SignedPerm) -> tuple:
    """Sort key for canonical representatives: signs first, then one-line."""
    return (
        tuple(0 if v > 0 else 1 for v in w.images),
        tuple(abs(v) for v in w.images),
    )


def _a_roots(n: int) -> tuple[tuple[int, ...], ...]:
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            r = [0] * n
            r[i], r[j] = 1, -1
            roots.append(tuple(r))
    return tuple(roots)


def _b_roots(n: int) -> tuple[tuple[int, ...], ...]:
    roots = list(_a_roots(n))
    for i in range(n):
        for j in range(i + 1, n):
            r = [0] * n
            r[i], r[j] = 1, 1
            roots.append(tuple(r))
    for i in range(n):
        r = [0] * n
        r[i] = 1
        roots.append(tuple(r))
    return tuple(roots)


def _d_roots(n: int) -> tuple[tuple[int, ...], ...]:
    roots = list(_a_roots(n))
    for i in range(n):
        for j in range(i + 1, n):
            r = [0] * n
            r[i], r[j] = 1, 1
            roots.append(tuple(r))
    return tuple(roots)


def _axa_roots(r: int) -> tuple[tuple[int, ...], ...]:
    roots = []
    for block in (0, r):
        for i in range(block, block + r):
            for j in range(i + 1, block + r):
                v = [0] * (2 * r)
                v[i], v[j] = 1, -1
                roots.append(tuple(v))
    return tuple(roots)


@dataclass(frozen=True)
class WeylGroup:
    """One of the classical signed-permutation groups used downstream.

    ``kind`` is "A" (plain permutations), "B" (all signed permutations),
    "D" (even number of sign flips) or "AxA" (block-preserving permutations
    of rank 2r, no signs).
    """

    kind: str
    rank: int
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in ("A", "B", "D", "AxA"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "AxA" and self.rank % 2:
            raise ValueError("AxA groups need even rank")

    # -- membership and sizes -------------------------------------------

    def contains(self, w: SignedPerm) -> bool:
        if w.rank != self.rank:
            return False
        signs = w.signs()
        perm = w.permutation()
        if self.kind == "A":
            return all(s == 1 for s in signs)
        if self.kind == "B":
            return True
        if self.kind == "D":
            return signs.count(-1) % 2 == 0
        r = self.rank // 2
        if any(s != 1 for s in signs):
            return False
        return all((perm[j] <= r) == (j < r) for j in range(self.rank))

    @property
    def order(self) -> int:
        n = self.rank
        if self.kind == "A":
            return _factorial(n)
        if self.kind == "B":
            return 2**n * _factorial(n)
        if self.kind == "D":
            return 2 ** (n - 1) * _factorial(n) if n else 1
        r = n // 2
        return _factorial(r) ** 2

    # -- roots, simples, lengths ----------------------------------------

    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        if "proots" not in self._cache:
            fn = {"A": _a_roots, "B": _b_roots, "D": _d_roots}.get(self.kind)
            self._cache["proots"] = (
                fn(self.rank) if fn else _axa_roots(self.rank // 2)
            )
        return self._cache["proots"]

    def simple_reflections(self) -> tuple[SignedPerm, ...]:
        n = self.rank
        if self.kind == "A":
            return tuple(transposition(i, i + 1, n) for i in range(1, n))
        if self.kind == "B":
            simples = [transposition(i, i + 1, n) for i in range(1, n)]
            simples.append(sign_flip([n], n))
            return tuple(simples)
        if self.kind == "D":
            simples = [transposition(i, i + 1, n) for i in range(1, n)]
            if n >= 2:
                # Reflection in e_{n-1} + e_n: swap the last two
                # coordinates and negate both.
                out = list(range(1, n + 1))
                out[n - 2], out[n - 1] = -n, -(n - 1)
                simples.append(SignedPerm(tuple(out)))
            return tuple(simples)
        r = n // 2
        simples = [transposition(i, i + 1, n) for i in range(1, r)]
        simples += [transposition(r + i, r + i + 1, n) for i in range(1, r)]
        return tuple(simples)

    def length(self, w: SignedPerm) -> int:
        if w.rank != self.rank:
            raise RankMismatch(f"rank {w.rank} vs group rank {self.rank}")
        if not self.contains(w):
            raise NotInGroup(f"{w} is not in {self.describe()}")
        if "negset" not in self._cache:
            self._cache["negset"] = frozenset(
                tuple(-c for c in r) for r in self.positive_roots()
            )
        neg = self._cache["negset"]
        return sum(1 for a in self.positive_roots() if w.apply(a) in neg)

    def longest_element(self) -> SignedPerm:
        n = self.rank
        if self.kind == "A":
            w0 = SignedPerm(tuple(range(n, 0, -1)))
        elif self.kind == "B":
            w0 = sign_flip(range(1, n + 1), n)
        elif self.kind == "D":
            if n % 2 == 0:
                w0 = sign_flip(range(1, n + 1), n)
            else:
                w0 = sign_flip(range(1, n), n)
        else:
            r = n // 2
            out = list(range(r, 0, -1)) + list(range(n, r, -1))
            w0 = SignedPerm(tuple(out))
        assert self.length(w0) == len(self.positive_roots())
        return w0

    # -- enumeration ------------------------------------------------------

    def elements(self) -> Iterator[SignedPerm]:
        n = self.rank
        if self.kind == "A":
            for p in itertools.permutations(range(1, n + 1)):
                yield SignedPerm(p)
        elif self.kind in ("B", "D"):
            for p in itertools.permutations(range(1, n + 1)):
                for mask in itertools.product((1, -1), repeat=n):
                    if self.kind == "D" and mask.count(-1) % 2:
                        continue
                    yield SignedPerm(tuple(s * v for s, v in zip(mask, p)))
        else:
            r = n // 2
            for p in itertools.permutations(range(1, r + 1)):
                for q in itertools.permutations(range(r + 1, n + 1)):
                    yield SignedPerm(p + q)

    def element_set(self) -> frozenset[SignedPerm]:
        if "elements" not in self._cache:
            if self.order > SUBGROUP_CAP:
                raise SubgroupTooLarge(
                    f"|{self.describe()}| = {self.order} exceeds cap {SUBGROUP_CAP}"
                )
            self._cache["elements"] = frozenset(self.elements())
        return self._cache["elements"]

    def sorted_elements(self) -> tuple[SignedPerm, ...]:
        if "sorted" not in self._cache:
            self._cache["sorted"] = tuple(
                sorted(self.element_set(), key=canonical_key)
            )
        return self._cache["sorted"]

    def identity(self) -> SignedPerm:
        return identity(self.rank)

    def describe(self) -> str:
        return self.name or f"{self.kind}(rank {self.rank})"


@lru_cache(maxsize=None)
def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def symmetric_group(n: int) -> WeylGroup:
    return WeylGroup("A", n, name=f"S{n}")


def hyperoctahedral_group(n: int) -> WeylGroup:
    return WeylGroup("B", n, name=f"B{n}")


def even_hyperoctahedral_group(n: int) -> WeylGroup:
    return WeylGroup("D", n, name=f"D{n}")


def product_symmetric_group(r: int) -> WeylGroup:
    return WeylGroup("AxA", 2 * r, name=f"S{r}xS{r}")


def enumerate_subgroup(
    generators: Iterable[SignedPerm], cap: int = SUBGROUP_CAP
) -> frozenset[SignedPerm]:
    """Closure of the generators under composition (breadth-first)."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator (or pass the identity)")
    rank = gens[0].rank
    for g in gens:
        if g.rank != rank:
            raise RankMismatch("generators of mixed rank")
    seen = {identity(rank)}
    frontier = [identity(rank)]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                x = g * w
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
                    if len(seen) > cap:
                        raise SubgroupTooLarge(f"closure exceeds cap {cap}")
        frontier = nxt
    return frozenset(seen)


def coset_space(
    subgroup_generators: Iterable[SignedPerm], group: WeylGroup
) -> list[tuple[SignedPerm, frozenset[SignedPerm]]]:
    """Right cosets H\\W with canonical representatives.

    Returns (representative, coset) pairs sorted by representative; the
    representative is the lexicographically least member (signs first, then
    one-line), so the subgroup itself is represented by the identity.
    """
    gens = list(subgroup_generators)
    for g in gens:
        if not group.contains(g):
            raise NotASubgroup(f"generator {g} lies outside {group.describe()}")
    sub = enumerate_subgroup(gens) if gens else frozenset({group.identity()})
    out = []
    visited: set[SignedPerm] = set()
    for w in group.sorted_elements():
        if w in visited:
            continue
        coset = frozenset(h * w for h in sub)
        visited |= coset
        out.append((w, coset))
    return out


def conjugacy_classes(
    elements: Iterable[SignedPerm],
    conjugators: Iterable[SignedPerm],
) -> list[frozenset[SignedPerm]]:
    """Orbits of ``elements`` under conjugation by the group the
    conjugators generate (orbits computed generator-wise, so the
    conjugator group is never expanded)."""
    gens = [g for g in conjugators]
    gens += [g.inverse() for g in gens]
    todo = sorted(set(elements), key=canonical_key)
    member = set(todo)
    seen: set[SignedPerm] = set()
    classes = []
    for x in todo:
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = y.conjugate_by(g)
                    if z not in orbit:
                        if z not in member:
                            raise ValueError(
                                "conjugation leaves the supplied element set"
                            )
                        orbit.add(z)
                        nxt.append(z)
            frontier = nxt
        seen |= orbit
        classes.append(frozenset(orbit))
    return classes

"""Classification of stable maximal tori from an involution on the
cocharacter lattice.

The input is an integer involution M on the lattice of a maximally split
stable torus, together with the ambient Weyl group.  Everything is derived
from M by exact rational arithmetic: the (-1)-eigenspace, the restricted
root vectors (projections (alpha - M alpha)/2, kept with their non-reduced
multiplicities), the subsystem Psi0 of roots sent to their negatives, and
finally the classification itself -- involutions in the reflection group of
Psi0, up to conjugation by the reflections of the restricted roots.  Each
class corresponds to one conjugacy class of stable maximal tori; its
``minus_dimension`` is the split dimension of the corresponding torus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .weyl import (
    SignedPerm,
    WeylGroup,
    canonical_key,
    enumerate_subgroup,
    identity,
    sign_flip,
)

__all__ = [
    "ThetaLattice",
    "TorusClass",
    "root_reflection",
    "torus_classification",
]


def _kernel(rows: list[list[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel of a rational matrix."""
    m = [row[:] for row in rows]
    nrows = len(m)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(tuple(v))
    return basis


def _primitive_line(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Primitive integer vector spanning the same line, sign-normalized."""
    from math import gcd, lcm

    den = lcm(*(f.denominator for f in v)) if v else 1
    ints = [int(f * den) for f in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def root_reflection(alpha: Sequence[int], rank: int) -> SignedPerm:
    """Reflection in a root of shape e_i, e_i - e_j or e_i + e_j."""
    support = [(i, c) for i, c in enumerate(alpha, start=1) if c]
    if len(support) == 1:
        return sign_flip([support[0][0]], rank)
    if len(support) == 2 and all(abs(c) == 1 for _, c in support):
        (i, ci), (j, cj) = support
        out = list(range(1, rank + 1))
        if ci == cj:
            out[i - 1], out[j - 1] = -j, -i
        else:
            out[i - 1], out[j - 1] = j, i
        return SignedPerm(tuple(out))
    raise ValueError(f"no monomial reflection for root {tuple(alpha)}")


@dataclass(frozen=True)
class TorusClass:
    """One conjugacy class of stable maximal tori."""

    index: int
    representative: SignedPerm
    orbit_size: int
    minus_dimension: int


@dataclass(frozen=True)
class ThetaLattice:
    """Integer involution on the lattice of the split reference torus."""

    group: WeylGroup
    rows: tuple[tuple[int, ...], ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.group.rank
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError("lattice involution must be rank x rank")
        sq = [
            [
                sum(self.rows[i][k] * self.rows[k][j] for k in range(n))
                for j in range(n)
            ]
            for i in range(n)
        ]
        if sq != [[int(i == j) for j in range(n)] for i in range(n)]:
            raise ValueError("lattice map is not an involution")

    @property
    def rank(self) -> int:
        return self.group.rank

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.rank:
            raise ValueError(f"vector length {len(v)} vs lattice rank {self.rank}")
        return tuple(
            sum(self.rows[i][j] * v[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def as_signed_perm(self) -> SignedPerm:
        """The lattice map as a signed permutation (it must be monomial)."""
        images = [0] * self.rank
        for j in range(self.rank):
            col = [self.rows[i][j] for i in range(self.rank)]
            nz = [(i, c) for i, c in enumerate(col) if c]
            if len(nz) != 1 or abs(nz[0][1]) != 1:
                raise ValueError("lattice map is not a signed permutation")
            i, c = nz[0]
            images[j] = (i + 1) * (1 if c > 0 else -1)
        return SignedPerm(tuple(images))

    def all_roots(self) -> tuple[tuple[int, ...], ...]:
        pos = self.group.positive_roots()
        return pos + tuple(tuple(-c for c in a) for a in pos)

    def minus_space(self) -> tuple[tuple[Fraction, ...], ...]:
        """Basis of the (-1)-eigenspace (the split directions)."""
        if "minus" not in self._cache:
            n = self.rank
            rows = [
                [Fraction(self.rows[i][j] + int(i == j)) for j in range(n)]
                for i in range(n)
            ]
            self._cache["minus"] = tuple(_kernel(rows, n))
        return self._cache["minus"]

    def restricted_roots(self) -> tuple[tuple[Fraction, ...], ...]:
        """Distinct nonzero projections (alpha - theta alpha)/2 of all
        roots onto the minus eigenspace.  The collection may be
        non-reduced (both beta and 2*beta can occur)."""
        seen = set()
        out = []
        for a in self.all_roots():
            ta = self.apply(a)
            beta = tuple(Fraction(x - y, 2) for x, y in zip(a, ta))
            if any(beta) and beta not in seen:
                seen.add(beta)
                out.append(beta)
        return tuple(sorted(out))

    def psi0(self) -> tuple[tuple[int, ...], ...]:
        """Roots alpha with theta(alpha) = -alpha."""
        out = [
            a
            for a in self.all_roots()
            if self.apply(a) == tuple(-c for c in a)
        ]
        return tuple(sorted(out))


def _fix_dimension_on_minus(
    w: SignedPerm, minus_basis: Sequence[Sequence[Fraction]]
) -> int:
    """dim { v in span(minus_basis) : w v = v }."""
    if not minus_basis:
        return 0
    n = w.rank
    k = len(minus_basis)
    cols = [w.apply(b) for b in minus_basis]
    rows = [
        [Fraction(cols[j][i]) - Fraction(minus_basis[j][i]) for j in range(k)]
        for i in range(n)
    ]
    return len(_kernel(rows, k))


def torus_classification(theta: ThetaLattice) -> tuple[TorusClass, ...]:
    """Conjugacy classes of stable maximal tori.

    Involutions (including e) of the reflection group of Psi0, partitioned
    by conjugation under the reflections of the restricted roots (one per
    line).  An empty Psi0 yields the single class of the reference torus.
    """
    rank = theta.rank
    e = identity(rank)
    psi = theta.psi0()
    refl = []
    seen_lines = set()
    for a in psi:
        line = _primitive_line([Fraction(c) for c in a])
        if line not in seen_lines:
            seen_lines.add(line)
            refl.append(root_reflection(a, rank))
    w_psi = enumerate_subgroup(refl + [e])
    involutions = sorted(
        (w for w in w_psi if (w * w).is_identity()), key=canonical_key
    )
    member = {tuple(map(tuple, w.matrix())): w for w in w_psi}

    conj_mats = []
    seen_lines = set()
    for beta in theta.restricted_roots():
        line = _primitive_line(beta)
        if line in seen_lines:
            continue
        seen_lines.add(line)
        norm = sum(Fraction(x) * Fraction(x) for x in beta)
        conj_mats.append(
            [
                [
                    Fraction(int(i == j)) - 2 * beta[i] * beta[j] / norm
                    for j in range(rank)
                ]
                for i in range(rank)
            ]
        )

    def conjugate(w: SignedPerm, r: list[list[Fraction]]) -> SignedPerm:
        mw = w.matrix()
        prod = [
            [
                sum(
                    r[i][a] * mw[a][b] * r[b][j]
                    for a in range(rank)
                    for b in range(rank)
                )
                for j in range(rank)
            ]
            for i in range(rank)
        ]
        key = tuple(tuple(v) for v in prod)
        if any(x.denominator != 1 for row in prod for x in row):
            raise ValueError("reflection does not normalize the subsystem")
        ikey = tuple(tuple(int(x) for x in row) for row in key)
        if ikey not in member:
            raise ValueError("conjugate leaves the reflection subgroup")
        return member[ikey]

    minus = theta.minus_space()
    classes = []
    seen: set[SignedPerm] = set()
    for w in involutions:
        if w in seen:
            continue
        orbit = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for x in frontier:
                for r in conj_mats:
                    y = conjugate(x, r)
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        seen |= orbit
        rep = min(orbit, key=canonical_key)
        classes.append((rep, len(orbit), _fix_dimension_on_minus(rep, minus)))
    classes.sort(key=lambda t: (-t[2], canonical_key(t[0])))
    return tuple(
        TorusClass(i, rep, size, dim)
        for i, (rep, size, dim) in enumerate(classes)
    )

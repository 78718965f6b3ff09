"""Galois descent on orbit parameters.

The orbit parameters of a family are computed over the quadratic extension
(the Gaussian dyadics).  Conjugation of the extension permutes them; a
parameter fixed by the conjugation yields an orbit defined over the base
ring, while a swapped pair contributes a single orbit defined only after
the extension.  This module builds the conjugation action on canonical
coset representatives from the per-torus rule recorded in the catalog,
classifies parameters into fixed/paired, and tags each with its field of
definition.

Field tags: ``Z[1/2]`` for fixed parameters, ``Z[1/2,i]-pair`` for the two
members of a swapped pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog as _catalog
from .catalog import GroupSpec, cosets, springer, wk_subgroup
from .twisted import TwistContext
from .weyl import SignedPerm

__all__ = [
    "GaloisAction",
    "DescentRow",
    "DescentReport",
    "MissingGaloisData",
    "NotAnInvolution",
    "FIELD_FIXED",
    "FIELD_PAIR",
    "galois_action",
    "twisted_galois",
    "fixed_and_pairs",
    "descent_report",
    "rational_parameters",
]

FIELD_FIXED = "Z[1/2]"
FIELD_PAIR = "Z[1/2,i]-pair"


class MissingGaloisData(LookupError):
    """Raised when a torus descriptor carries no conjugation rule."""


class NotAnInvolution(ValueError):
    """Raised when a conjugation action fails to square to the identity."""


@dataclass
class GaloisAction:
    """A conjugation action on a finite parameter domain."""

    domain: tuple[SignedPerm, ...]
    mapping: dict[SignedPerm, SignedPerm]
    rule: str
    name: str = ""

    def apply(self, w: SignedPerm) -> SignedPerm:
        if w not in self.mapping:
            raise ValueError(f"{w} is not in the domain of {self.name or 'action'}")
        return self.mapping[w]

    def is_trivial(self) -> bool:
        return all(self.mapping[w] == w for w in self.domain)


def galois_action(spec: GroupSpec, i: int) -> GaloisAction:
    """Conjugation on the canonical coset representatives of torus i.

    The rule is assembled from the descriptor: an optional conjugation
    element, an optional left factor, an optional right factor.  Images
    are reduced to canonical representatives through the coset table, so
    the returned mapping is a permutation of the representative list.
    """
    desc = spec.descriptor(i)
    if desc.galois_rule is None:
        raise MissingGaloisData(
            f"{spec.name} torus {i} has no conjugation rule on cosets"
        )
    table = cosets(spec, i)
    lookup: dict[SignedPerm, SignedPerm] = {}
    for rep, coset in table:
        for x in coset:
            lookup[x] = rep
    mapping: dict[SignedPerm, SignedPerm] = {}
    for rep, _ in table:
        img = _apply_rule(desc, rep)
        mapping[rep] = lookup[img]
    return GaloisAction(
        domain=tuple(rep for rep, _ in table),
        mapping=mapping,
        rule=desc.galois_rule,
        name=f"{spec.name} torus {i}",
    )


def _apply_rule(desc, w: SignedPerm) -> SignedPerm:
    x = w
    if desc.galois_conj is not None:
        x = x.conjugate_by(desc.galois_conj)
    if desc.galois_left is not None:
        x = desc.galois_left * x
    if desc.galois_right is not None:
        x = x * desc.galois_right
    return x


def twisted_galois(
    ctx: TwistContext, rule: str, domain: tuple[SignedPerm, ...]
) -> GaloisAction:
    """Conjugation action on a set of twisted involutions.

    Rules: ``trivial`` (identity), ``conj_w0`` (a -> w0 a^-1 w0) and
    ``twist_conj`` (a -> w0 a w0).
    """
    w0 = ctx.group.longest_element()
    if rule == "trivial":
        sigma = lambda a: a  # noqa: E731
    elif rule == "conj_w0":
        sigma = lambda a: w0 * a.inverse() * w0  # noqa: E731
    elif rule == "twist_conj":
        sigma = lambda a: w0 * a * w0  # noqa: E731
    else:
        raise MissingGaloisData(f"unknown twisted conjugation rule {rule!r}")
    pool = set(domain)
    mapping = {}
    for a in domain:
        img = sigma(a)
        if img not in pool:
            raise ValueError(
                f"conjugation rule {rule!r} leaves the domain at {a}"
            )
        mapping[a] = img
    return GaloisAction(domain=tuple(domain), mapping=mapping, rule=rule)


def fixed_and_pairs(
    action: GaloisAction,
) -> tuple[tuple[SignedPerm, ...], tuple[tuple[SignedPerm, SignedPerm], ...]]:
    """Split a conjugation action into fixed points and swapped pairs."""
    for w in action.domain:
        if action.mapping[action.mapping[w]] != w:
            raise NotAnInvolution(
                f"{action.name or 'action'} does not square to the identity at {w}"
            )
    fixed: list[SignedPerm] = []
    pairs: list[tuple[SignedPerm, SignedPerm]] = []
    seen: set[SignedPerm] = set()
    for w in action.domain:
        img = action.mapping[w]
        if img == w:
            fixed.append(w)
        elif w not in seen:
            pairs.append((w, img))
            seen.add(w)
            seen.add(img)
    return tuple(fixed), tuple(pairs)


@dataclass(frozen=True)
class DescentRow:
    torus_index: int
    rep: SignedPerm
    value: SignedPerm
    field: str
    partner: SignedPerm | None


@dataclass(frozen=True)
class DescentReport:
    name: str
    rows: tuple[DescentRow, ...]
    fixed_count: int
    pair_count: int


def descent_report(spec: GroupSpec) -> DescentReport:
    """Field of definition for every orbit parameter of the family."""
    rows: list[DescentRow] = []
    fixed_total = 0
    pair_total = 0
    for desc in spec.tori:
        action = galois_action(spec, desc.index)
        fixed, pairs = fixed_and_pairs(action)
        if len(fixed) + 2 * len(pairs) != len(action.domain):
            raise NotAnInvolution(
                f"{action.name}: fixed/pair split does not cover the domain"
            )
        fixed_total += len(fixed)
        pair_total += len(pairs)
        partner = {w: img for w, img in action.mapping.items() if img != w}
        for rep in action.domain:
            rows.append(
                DescentRow(
                    torus_index=desc.index,
                    rep=rep,
                    value=springer(spec, desc.index, rep),
                    field=FIELD_FIXED if rep not in partner else FIELD_PAIR,
                    partner=partner.get(rep),
                )
            )
    return DescentReport(
        name=spec.name,
        rows=tuple(rows),
        fixed_count=fixed_total,
        pair_count=pair_total,
    )


def rational_parameters(spec: GroupSpec, i: int) -> tuple[SignedPerm, ...]:
    """Representatives whose coset satisfies the rationality condition
    w * w0 * w^-1 in the little Weyl group (the membership route; the
    conjugation action's fixed set gives the same answer through the
    coset table)."""
    w0 = spec.group.longest_element()
    wk = wk_subgroup(spec, i)
    return tuple(
        rep for rep, _ in cosets(spec, i) if rep * w0 * rep.inverse() in wk
    )

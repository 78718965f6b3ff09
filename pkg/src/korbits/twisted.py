"""Twisted involutions, the monoid action on them, and torus-class values.

A twist context packages a Weyl group W, a conjugation element t (a signed
permutation, not necessarily inside W) and a base element b of W.  The raw
twist is w -> t w t^-1; the effective twist theta(w) = b^-1 t w t^-1 b must
send simple reflections to simple reflections (checked on construction).
The twisted involutions are {w in W : theta(w) w = e}, equivalently the
solutions of (t w t^-1) b w = b.

On that set the monoid generated by the simple reflections acts by

    s * a = s a theta(s)   if that differs from a and is longer,
    s * a = s a            if s a theta(s) == a and s a is longer,
    s * a = a              otherwise,

and the downward-closure machinery below answers which elements reach the
top value under this action.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .weyl import SignedPerm, WeylGroup, canonical_key

__all__ = [
    "TwistContext",
    "ReachabilityGraph",
    "twisted_involutions",
    "is_twisted_involution",
    "monoid_star",
    "reachable_set",
    "image_set",
    "springer_value",
    "springer_image_sweep",
]


@dataclass(frozen=True)
class TwistContext:
    """Group with a conjugation twist and a base translation element."""

    group: WeylGroup
    twist: SignedPerm
    base: SignedPerm
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.group.contains(self.base):
            raise ValueError("base element must lie in the group")
        if not (self.theta_raw(self.base) * self.base).is_identity():
            raise ValueError("twist of the base times the base must be e")
        simples = set(self.group.simple_reflections())
        for s in simples:
            if self.theta(s) not in simples:
                raise ValueError(
                    "effective twist does not permute the simple reflections"
                )

    def theta_raw(self, w: SignedPerm) -> SignedPerm:
        return w.conjugate_by(self.twist)

    def theta(self, w: SignedPerm) -> SignedPerm:
        """Effective twist: conjugation followed by base translation."""
        b = self.base
        return b.inverse() * self.theta_raw(w) * b

    def simples(self) -> tuple[SignedPerm, ...]:
        if "simples" not in self._cache:
            self._cache["simples"] = self.group.simple_reflections()
        return self._cache["simples"]


def is_twisted_involution(ctx: TwistContext, w: SignedPerm) -> bool:
    return ctx.group.contains(w) and (ctx.theta(w) * w).is_identity()


def twisted_involutions(ctx: TwistContext) -> frozenset[SignedPerm]:
    key = "twisted"
    if key not in ctx._cache:
        ctx._cache[key] = frozenset(
            w for w in ctx.group.element_set() if (ctx.theta(w) * w).is_identity()
        )
    return ctx._cache[key]


def monoid_star(ctx: TwistContext, s: SignedPerm, a: SignedPerm) -> SignedPerm:
    """Monoid action of a simple reflection on a twisted involution."""
    length = ctx.group.length
    sa = s * a
    sas = sa * ctx.theta(s)
    if sas == a:
        return sa if length(sa) > length(a) else a
    return sas if length(sas) > length(a) else a


def reachable_set(ctx: TwistContext, a: SignedPerm) -> frozenset[SignedPerm]:
    """All twisted involutions obtainable from a by repeated monoid moves."""
    seen = {a}
    frontier = [a]
    while frontier:
        nxt = []
        for x in frontier:
            for s in ctx.simples():
                y = monoid_star(ctx, s, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def image_set(ctx: TwistContext, top: SignedPerm) -> frozenset[SignedPerm]:
    """Twisted involutions from which the monoid action reaches ``top``.

    Computed by one reverse breadth-first search over the full monoid move
    graph rather than one forward closure per element.
    """
    nodes = twisted_involutions(ctx)
    if top not in nodes:
        raise ValueError("top element is not a twisted involution")
    reverse: dict[SignedPerm, set[SignedPerm]] = {a: set() for a in nodes}
    for a in nodes:
        for s in ctx.simples():
            b = monoid_star(ctx, s, a)
            if b != a:
                reverse[b].add(a)
    seen = {top}
    frontier = [top]
    while frontier:
        nxt = []
        for x in frontier:
            for y in reverse[x]:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def springer_value(
    ctx: TwistContext, torus_element: SignedPerm, w: SignedPerm
) -> SignedPerm:
    """Twisted-involution value attached to a parameter (torus_element, w).

    The value is (t w t^-1)^-1 * c * w * b for conjugation twist t, torus
    class element c and base b; it is always a twisted involution for the
    context (checked).
    """
    value = ctx.theta_raw(w).inverse() * torus_element * w * ctx.base
    if not is_twisted_involution(ctx, value):
        raise ValueError(f"value {value} is not a twisted involution")
    return value


def springer_image_sweep(
    ctx: TwistContext, torus_element: SignedPerm, sweep: Iterable[SignedPerm]
) -> frozenset[SignedPerm]:
    """Set of values over a sweep of group elements (typically coset
    representatives, or the whole group when no subgroup data exists)."""
    return frozenset(springer_value(ctx, torus_element, w) for w in sweep)


@dataclass(frozen=True)
class ReachabilityGraph:
    """Monoid move graph on the twisted involutions of a context."""

    context: TwistContext
    nodes: tuple[SignedPerm, ...]
    edges: tuple[tuple[SignedPerm, int, SignedPerm], ...]

    @staticmethod
    def build(ctx: TwistContext) -> "ReachabilityGraph":
        nodes = sorted(twisted_involutions(ctx), key=canonical_key)
        edges = []
        for a in nodes:
            for idx, s in enumerate(ctx.simples(), start=1):
                b = monoid_star(ctx, s, a)
                if b != a:
                    edges.append((a, idx, b))
        edges.sort(key=lambda e: (canonical_key(e[0]), e[1]))
        return ReachabilityGraph(ctx, tuple(nodes), tuple(edges))

    def to_dot(self) -> str:
        length = self.context.group.length
        lines = ["digraph twisted {", "  rankdir=BT;"]
        for a in self.nodes:
            ident = ",".join(str(v) for v in a.images)
            lines.append(
                f'  "{ident}" [label="{a.cycle_string()} ({length(a)})"];'
            )
        for a, idx, b in self.edges:
            src = ",".join(str(v) for v in a.images)
            dst = ",".join(str(v) for v in b.images)
            lines.append(f'  "{src}" -> "{dst}" [label="s{idx}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

import pytest
from hypothesis import given
import hypothesis.strategies as st

from korbits.twisted import (
    ReachabilityGraph,
    TwistContext,
    image_set,
    is_twisted_involution,
    monoid_star,
    reachable_set,
    springer_image_sweep,
    springer_value,
    twisted_involutions,
)
from korbits.weyl import identity, sign_flip, symmetric_group
from oracle import all_elements, naive_twisted
from support import flip, perm, tr


def _gl_context(n):
    group = symmetric_group(n)
    return TwistContext(group, sign_flip(range(1, n + 1), n), group.longest_element())


CTX3 = _gl_context(3)


def test_context_validation():
    s3 = symmetric_group(3)
    with pytest.raises(ValueError):
        TwistContext(s3, sign_flip([1, 2, 3], 3), perm(2, 3, 1))
    with pytest.raises(ValueError):
        TwistContext(s3, identity(3), flip((1,), 3))
    with pytest.raises(ValueError):
        TwistContext(s3, tr(1, 2, 3), identity(3))


def test_involution_set_rank3():
    want = {perm(1, 2, 3), perm(2, 3, 1), perm(3, 1, 2), perm(3, 2, 1)}
    assert twisted_involutions(CTX3) == want
    for w in want:
        assert is_twisted_involution(CTX3, w)
    assert not is_twisted_involution(CTX3, tr(1, 2, 3))


def test_involution_set_matches_naive_filter():
    got = twisted_involutions(CTX3)
    assert got == naive_twisted(all_elements("A", 3), CTX3.twist, CTX3.base)
    # the raw twist is trivial on permutations, so the identity twist agrees
    assert got == naive_twisted(all_elements("A", 3), identity(3), CTX3.base)


def test_small_contexts():
    ctx2 = TwistContext(symmetric_group(2), identity(2), identity(2))
    assert twisted_involutions(ctx2) == {identity(2), tr(1, 2, 2)}
    ctx1 = TwistContext(symmetric_group(1), identity(1), identity(1))
    assert twisted_involutions(ctx1) == {identity(1)}


def test_monoid_star_moves():
    s1, s2 = CTX3.group.simple_reflections()
    assert monoid_star(CTX3, s1, identity(3)) == perm(2, 3, 1)
    assert monoid_star(CTX3, s2, identity(3)) == perm(3, 1, 2)
    top = perm(3, 2, 1)
    assert monoid_star(CTX3, s1, top) == top
    assert monoid_star(CTX3, s2, top) == top


@given(st.data())
def test_monoid_star_laws(data):
    ctx = _gl_context(4)
    nodes = sorted(twisted_involutions(ctx), key=lambda w: w.images)
    a = data.draw(st.sampled_from(nodes))
    s = data.draw(st.sampled_from(list(ctx.simples())))
    out = monoid_star(ctx, s, a)
    assert is_twisted_involution(ctx, out)
    assert monoid_star(ctx, s, out) == out
    delta = ctx.group.length(out) - ctx.group.length(a)
    assert delta in (0, 1, 2)


def test_reachability_and_image():
    inv = twisted_involutions(CTX3)
    top = perm(3, 2, 1)
    assert reachable_set(CTX3, identity(3)) == inv
    assert image_set(CTX3, top) == inv
    assert image_set(CTX3, identity(3)) == {identity(3)}
    with pytest.raises(ValueError):
        image_set(CTX3, tr(1, 2, 3))


def test_image_set_agrees_with_per_element_closure():
    ctx = _gl_context(4)
    top = ctx.group.longest_element()
    by_bfs = image_set(ctx, top)
    by_closure = {
        a for a in twisted_involutions(ctx) if top in reachable_set(ctx, a)
    }
    assert by_bfs == by_closure


def test_springer_value_formula():
    ctx = TwistContext(
        symmetric_group(2), sign_flip([1, 2], 2), tr(1, 2, 2)
    )
    e = identity(2)
    assert springer_value(ctx, e, e) == tr(1, 2, 2)
    assert springer_value(ctx, tr(1, 2, 2), e) == e
    assert springer_value(ctx, tr(1, 2, 2), tr(1, 2, 2)) == e
    assert springer_image_sweep(ctx, e, [e, tr(1, 2, 2)]) == {tr(1, 2, 2)}


def test_springer_value_rejects_non_involution_values():
    with pytest.raises(ValueError):
        springer_value(CTX3, perm(2, 3, 1), identity(3))


def test_reachability_graph():
    graph = ReachabilityGraph.build(CTX3)
    assert set(graph.nodes) == twisted_involutions(CTX3)
    length = CTX3.group.length
    for a, idx, b in graph.edges:
        assert 1 <= idx <= 2
        assert length(b) > length(a)
        assert monoid_star(CTX3, CTX3.simples()[idx - 1], a) == b
    dot = graph.to_dot()
    assert dot.startswith("digraph twisted {")
    assert dot.count("label=") == len(graph.nodes) + len(graph.edges)

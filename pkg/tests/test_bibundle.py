import random

import pytest
from hypothesis import given, settings

from fingroupoid import (
    Bibundle, GroupoidFunctor, NotSurjective, NotTransitive, action_groupoid, bibundle_of_functor,
    bibundle_violations, bundle_as_bibundle, compose_bibundles, compose_functors, cyclic, discrete_groupoid,
    find_bibundle_isomorphism, gauge_groupoid, group_groupoid, identity_bibundle, identity_functor,
    is_equivalence, is_left_principal, is_morita_morphism, morita_equivalent, pair_groupoid, product_bundle,
    product_groupoid, pullback_groupoid, quotient, symmetric, transitive_reduction, trivial_bundle,
    trivial_group, validate_bibundle, verify_witness,
)
from fingroupoid.actions import GroupoidAction, LEFT
from fingroupoid.corpus import (
    FUNCTOR_POOL, carrier_size, groupoid_types, homomorphism_functor, small_functors,
)
from fingroupoid.core import functors_between
from oracles import equivalence_functor_exists
from strategies import functors, groupoids


def quotient_functor(n, k):
    """Z_n -> Z_k reduction mod k."""
    return homomorphism_functor(cyclic(n), cyclic(k), {x: x % k for x in range(n)})


# ----------------------------------------------------------------- validation

def test_principal_bundle_read_as_bibundle():
    for b in (product_bundle([0, 1], cyclic(3)), trivial_bundle(pair_groupoid([0, 1]))):
        B = bundle_as_bibundle(b)
        validate_bibundle(B.left, B.right)


def test_arrows_as_the_identity_bibundle():
    for G in (group_groupoid(symmetric(3)), pair_groupoid([0, 1, 2])):
        B = identity_bibundle(G)
        validate_bibundle(B.left, B.right)


def test_incompatible_actions_name_the_witness():
    # conjugating the left action of S3 on itself by inversion gives another
    # left action, but one that no longer commutes with right multiplication
    S3 = symmetric(3)
    B = identity_bibundle(group_groupoid(S3))
    inv = S3.inverse.__getitem__
    twisted = {(g, p): inv(B.left.table[g, inv(p)]) for (g, p) in B.left.table}
    left = GroupoidAction(B.G, B.carrier, B.left_anchor, twisted, LEFT)
    found = bibundle_violations(left, B.right)
    assert found and {v.kind for v in found} == {"Incompatible"}


# ------------------------------------------------------------ bibundle of a functor

def test_bibundle_of_identity_has_the_arrows_as_carrier():
    G = group_groupoid(symmetric(3))
    B = bibundle_of_functor(identity_functor(G))
    assert len(B.carrier) == len(G.morphisms)
    assert find_bibundle_isomorphism(B, identity_bibundle(G)) is not None


def test_bibundle_of_z4_to_z2():
    B = bibundle_of_functor(quotient_functor(4, 2))
    assert len(B.carrier) == 2
    # 2 ∈ Z4 is in the kernel, so it fixes every point; 1 swaps them
    assert all(B.left.act(p, 2) == p for p in B.carrier)
    assert all(B.left.act(p, 1) != p for p in B.carrier)


@settings(max_examples=80, deadline=None)
@given(functors(max_morphisms=24))
def test_bibundle_of_a_functor_is_valid_and_counted(F):
    B = bibundle_of_functor(F)
    assert not bibundle_violations(B.left, B.right)
    C, D = F.source, F.target
    assert len(B.carrier) == sum(1 for u in C.objects for h in D.morphisms if D.target(h) == F.obj(u))


# ---------------------------------------------------------------- composition

def test_composing_with_the_identity_bibundle():
    F = quotient_functor(6, 3)
    Q = bibundle_of_functor(F)
    left = compose_bibundles(identity_bibundle(F.source), Q)
    right = compose_bibundles(Q, identity_bibundle(F.target))
    assert find_bibundle_isomorphism(left, Q) is not None
    assert find_bibundle_isomorphism(right, Q) is not None


def test_z8_z4_z2_quotients_compose():
    psi, phi = quotient_functor(8, 4), None
    Z4 = psi.target
    phi = GroupoidFunctor(Z4, group_groupoid(cyclic(2)), {"*": "*"}, {x: x % 2 for x in range(4)})
    P = compose_bibundles(bibundle_of_functor(psi), bibundle_of_functor(phi))
    Q = bibundle_of_functor(compose_functors(psi, phi))
    assert len(P.carrier) == len(Q.carrier) == 2
    assert find_bibundle_isomorphism(P, Q) is not None


def test_middle_mismatch_is_rejected():
    from fingroupoid import DomainMismatch
    with pytest.raises(DomainMismatch):
        compose_bibundles(bibundle_of_functor(quotient_functor(4, 2)), bibundle_of_functor(quotient_functor(6, 3)))


def test_composite_bibundles_are_bibundles():
    for psi in small_functors(6)[::7]:
        for phi in functors_between(psi.target, psi.target, limit=4):
            P = compose_bibundles(bibundle_of_functor(psi), bibundle_of_functor(phi))
            assert not bibundle_violations(P.left, P.right)


def composable_triples(max_carrier=6, count=60, seed=5):
    rng = random.Random(seed)
    pool = [make() for make in FUNCTOR_POOL]
    funs = {}

    def between(i, j):
        if (i, j) not in funs:
            funs[i, j] = [F for F in functors_between(pool[i], pool[j]) if carrier_size(F) <= max_carrier]
        return funs[i, j]

    out = []
    while len(out) < count:
        i, j, k, m = (rng.randrange(len(pool)) for _ in range(4))
        if between(i, j) and between(j, k) and between(k, m):
            out.append(tuple(rng.choice(between(*e)) for e in ((i, j), (j, k), (k, m))))
    return out


@pytest.mark.parametrize("triple", composable_triples(), ids=lambda t: "")
def test_composition_is_associative(triple):
    P, Q, R = (bibundle_of_functor(F) for F in triple)
    left = compose_bibundles(compose_bibundles(P, Q), R)
    right = compose_bibundles(P, compose_bibundles(Q, R))
    assert find_bibundle_isomorphism(left, right) is not None


def test_span_witness_composes_to_a_biprincipal_bibundle():
    G = action_groupoid(cyclic(2), [0, 1], {(x, g): (x + g) % 2 for x in (0, 1) for g in (0, 1)})
    H = group_groupoid(trivial_group())
    w = morita_equivalent(G, H).witness
    # the span G <- W -> H gives <left>^{-1} then <right>; compose the inverse of
    # a left-principal bibundle by flipping it
    L, R = bibundle_of_functor(w.left), bibundle_of_functor(w.right)
    assert is_left_principal(L) and is_left_principal(R)
    B = compose_bibundles(flip(L), R)
    assert not bibundle_violations(B.left, B.right)
    assert is_left_principal(B)


def flip(B):
    """The opposite bibundle: swap the sides using inverses."""
    H = B.H
    left = GroupoidAction(H, B.carrier, B.right_anchor,
                          {(H.inverse(h), p): q for (p, h), q in B.right.table.items()}, LEFT)
    right = B.left.as_right()
    return Bibundle(left, right)


# ---------------------------------------------------------- pull-back groupoid

def test_pullback_along_identity_is_a_copy():
    G = group_groupoid(symmetric(3))
    W, proj = pullback_groupoid(G, {"*": "*"})
    assert len(W.morphisms) == 6 and is_morita_morphism(proj)


def test_pullback_of_a_group_to_two_points():
    G = group_groupoid(cyclic(3))
    W, proj = pullback_groupoid(G, {0: "*", 1: "*"})
    assert len(W.objects) == 2 and len(W.morphisms) == 4 * 3
    assert morita_equivalent(W, product_groupoid(pair_groupoid([0, 1]), G)).equivalent


def test_pullback_needs_a_surjection():
    G = discrete_groupoid(["x", "y"])
    with pytest.raises(NotSurjective) as err:
        pullback_groupoid(G, {0: "x", 1: "x"})
    assert err.value.witness == "y"


@settings(max_examples=60, deadline=None)
@given(groupoids(max_objects=3, max_morphisms=24), groupoids(max_objects=2))
def test_pullback_projection_is_a_morita_morphism(G, extra):
    rng = random.Random(len(G.morphisms) * 31 + len(extra.morphisms))
    labels = list(G.objects) + [("extra", i) for i in range(len(extra.objects))]
    J = {x: x if x in G.objects else rng.choice(G.objects) for x in labels}
    if not G.objects:
        return
    W, proj = pullback_groupoid(G, J, labels)
    assert is_morita_morphism(proj)


# ------------------------------------------------------------- Morita morphism

def test_morita_morphism_examples():
    G = group_groupoid(symmetric(3))
    assert is_morita_morphism(identity_functor(G))
    P = pair_groupoid([0, 1, 2])
    K, incl, _ = transitive_reduction(P, 0)
    v = is_morita_morphism(incl)
    assert not v and v.witness in (1, 2)
    K1, incl1, _ = transitive_reduction(G)
    assert is_morita_morphism(incl1)


def test_non_full_functor_names_the_missing_triple():
    P = pair_groupoid([0, 1])
    F = GroupoidFunctor(discrete_groupoid([0, 1]), P, {0: 0, 1: 1}, {0: (0, 0), 1: (1, 1)})
    v = is_morita_morphism(F)
    assert not v
    a, x, b = v.witness
    assert x == (a, b) and a != b


def test_morita_iff_left_principal_for_object_surjective_functors():
    for F in small_functors(12):
        if {F.obj(a) for a in F.source.objects} != set(F.target.objects):
            continue
        assert bool(is_morita_morphism(F)) == is_left_principal(bibundle_of_functor(F))


def test_left_principal_iff_weak_equivalence():
    for F in small_functors(12):
        assert is_left_principal(bibundle_of_functor(F)) == is_equivalence(F)["equivalence"]


def test_point_into_pair_is_left_principal_but_not_morita():
    P = pair_groupoid([0, 1])
    F = GroupoidFunctor(discrete_groupoid([0]), P, {0: 0}, {0: (0, 0)})
    assert is_left_principal(bibundle_of_functor(F))
    assert not is_morita_morphism(F)


# -------------------------------------------------------------- Morita decision

def test_three_points_versus_the_trivial_group():
    r = morita_equivalent(discrete_groupoid([0, 1, 2]), group_groupoid(trivial_group()))
    assert not r.equivalent and r.detail == "component count 3 ≠ 1"


@pytest.mark.parametrize("G", [
    pair_groupoid([0, 1, 2]),
    action_groupoid(cyclic(2), [0, 1], {(x, g): (x + g) % 2 for x in (0, 1) for g in (0, 1)}),
])
def test_contractible_groupoids_are_equivalent_to_a_point(G):
    one = group_groupoid(trivial_group())
    r = morita_equivalent(G, one)
    assert r.equivalent == equivalence_functor_exists(G, one) == True
    assert verify_witness(r.witness)


def test_isotropy_must_match():
    Z4, V4 = group_groupoid(cyclic(4)), group_groupoid(__import__("fingroupoid").klein())
    r = morita_equivalent(Z4, V4)
    assert not r.equivalent and not equivalence_functor_exists(Z4, V4)


def test_morita_decision_on_a_sample_of_type_pairs():
    types = groupoid_types(2)
    for _, A in types:
        for _, B in types:
            assert morita_equivalent(A, B).equivalent == equivalence_functor_exists(A, B)


@settings(max_examples=50, deadline=None)
@given(groupoids(max_objects=3, max_morphisms=30), groupoids(max_objects=3, max_morphisms=30))
def test_every_positive_answer_carries_a_valid_witness(A, B):
    r = morita_equivalent(A, B)
    if r.equivalent:
        assert verify_witness(r.witness)
    assert r.equivalent == morita_equivalent(B, A).equivalent


# --------------------------------------------------------- transitive reduction

def test_transitive_reduction_examples():
    K, _, r = transitive_reduction(pair_groupoid([0, 1, 2]), 0)
    assert len(K.morphisms) == 1 and r.equivalent
    G = group_groupoid(symmetric(3))
    K, incl, r = transitive_reduction(G, "*")
    assert len(K.morphisms) == 6 and r.equivalent
    Gauge = gauge_groupoid(product_bundle([0, 1, 2], cyclic(2)))
    K, _, r = transitive_reduction(Gauge)
    assert len(K.morphisms) == 2 and r.equivalent and verify_witness(r.witness)


def test_transitive_reduction_needs_transitivity():
    with pytest.raises(NotTransitive):
        transitive_reduction(discrete_groupoid([0, 1]))


def test_quotient_is_not_an_equivalence_of_groups():
    Z2, proj = quotient(cyclic(4), [0, 2])
    assert not morita_equivalent(group_groupoid(cyclic(4)), group_groupoid(Z2)).equivalent

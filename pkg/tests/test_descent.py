import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from fingroupoid import (
    ValidationError, cyclic, group_groupoid, is_equivalence, morita_equivalent, pair_groupoid, symmetric,
)
from fingroupoid.actions import find_bundle_isomorphism, is_principal
from fingroupoid.descent import (
    BGPresheaf, ConstantPresheaf, Cover, DescentDatum, DescentGroupoid, ExplicitSite, FinSetSite,
    GloballyConstantPresheaf, PointwisePresheaf, SetMap, TwistedPresheaf, bg_presheaf, check_stack_condition,
    comparison_functor, descent_category, poset_site, presheaf_violations, set_pullback, site_violations,
    subset_covers, validate_site,
)
from oracles import pointwise_cocycle_holds
from strategies import groupoids, seeds

U2 = (0, 1)


def singletons(U):
    return Cover([SetMap.inclusion((u,), U) for u in U], U)


# ---------------------------------------------------------------- pull-backs

def test_pullback_along_identities():
    A = SetMap.identity("abc")
    P, p1, p2 = set_pullback(A, A)
    assert P == (("a", "a"), ("b", "b"), ("c", "c"))
    assert p1.images == p2.images == tuple("abc")


def test_pullback_of_disjoint_images_is_empty():
    f = SetMap.from_dict({0: "x"}, "xy")
    g = SetMap.from_dict({0: "y", 1: "y"}, "xy")
    assert set_pullback(f, g)[0] == ()


def test_pullback_of_two_collapses():
    f = SetMap((0, 1), ("*",), ("*", "*"))
    P, _, _ = set_pullback(f, f)
    assert len(P) == 4


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(1, 3), seeds)
def test_pullback_is_universal(a, b, c, seed):
    rng = random.Random(seed)
    C = tuple(range(c))
    f = SetMap(tuple(range(a)), C, tuple(rng.choice(C) for _ in range(a)))
    g = SetMap(tuple(range(b)), C, tuple(rng.choice(C) for _ in range(b)))
    P, p1, p2 = set_pullback(f, g)
    assert all(f(p1(x)) == g(p2(x)) for x in P)
    assert len(P) == sum(len(f.fiber(z)) * len(g.fiber(z)) for z in C)
    # any pair of maps from a point that agree downstairs factors through P exactly once
    for x, y in product(f.domain, g.domain):
        hits = [p for p in P if p1(p) == x and p2(p) == y]
        assert len(hits) == (f(x) == g(y))


# --------------------------------------------------------------------- sites

def test_finite_sets_form_a_site():
    validate_site(FinSetSite(cap=3))


def test_finite_sets_up_to_four_points():
    assert not site_violations(FinSetSite(cap=4, max_parts=2, max_domain=2))


def test_poset_of_opens_is_a_site():
    validate_site(poset_site([(), (0,), (1,), (0, 1)]))


def test_identity_coverings_alone_form_a_site():
    base = poset_site([(), (0,), (0, 1)])
    C = base.category
    only = {U: [((U, U),)] for U in C.objects}
    validate_site(ExplicitSite(C, base.pullbacks, only))


def test_dropping_a_pulled_back_family_is_caught():
    base = poset_site([(), (0,), (1,), (0, 1)])
    zero, empty = frozenset({0}), frozenset()
    needed = frozenset({(zero, zero), (empty, zero)})
    covers = {U: [f for f in fams if not (U == zero and frozenset(f) == needed)] for U, fams in base.covers.items()}
    with pytest.raises(ValidationError) as err:
        validate_site(ExplicitSite(base.category, base.pullbacks, covers))
    assert "PullbackNotCovering" in err.value.kinds
    assert any(frozenset(v.witness[2]) == needed for v in err.value.violations if v.kind == "PullbackNotCovering")


def test_missing_identity_covering_is_caught():
    base = poset_site([(), (0,)])
    covers = {U: [f for f in fams if len(f) != 1 or f[0] != (U, U)] for U, fams in base.covers.items()}
    kinds = {v.kind for v in site_violations(ExplicitSite(base.category, base.pullbacks, covers))}
    assert "IsoCoveringMissing" in kinds


# ---------------------------------------------------------------- presheaves

def test_bg_values():
    Z2 = group_groupoid(cyclic(2))
    P = bg_presheaf(Z2)
    empty = P.value(())
    assert len(empty.objects) == len(empty.morphisms) == 1
    S3 = group_groupoid(symmetric(3))
    pt = bg_presheaf(S3).value((0,))
    assert len(pt.objects) == 1 and pt.automorphism_count(pt.objects[0]) == 6
    two = P.value(U2)
    assert len(two.components()) == 1 and len(two.morphisms) == 4


def test_bg_objects_are_principal_bundles():
    G = pair_groupoid([0, 1])
    P = BGPresheaf(G)
    FU = P.value(U2)
    for c in FU.objects:
        b = P.bundle_of(U2, c)
        assert is_principal(b.action, b.proj, b.base)
    for delta in FU.morphisms:
        src, tgt = FU.source(delta), FU.target(delta)
        phi = P.bundle_map(U2, delta)
        a, b = P.bundle_of(U2, src), P.bundle_of(U2, tgt)
        assert sorted(phi.values()) == sorted(b.carrier)
        assert all(b.proj[phi[p]] == a.proj[p] for p in a.carrier)
        assert find_bundle_isomorphism(a, b) is not None


def test_pointwise_and_twisted_presheaves_are_coherent():
    K = group_groupoid(cyclic(2))
    sets = [(), (0,), (0, 1)]
    assert not presheaf_violations(PointwisePresheaf(K), sets)
    assert not presheaf_violations(TwistedPresheaf(K, {"*": 1}, 2), sets)
    Z3 = group_groupoid(cyclic(3))
    assert not presheaf_violations(TwistedPresheaf(Z3, {"*": 1}, 3), sets)


class BrokenTwist(TwistedPresheaf):
    """A twist whose composition isomorphism is off by one at a single map."""

    def alpha(self, f, g, x):
        out = super().alpha(f, g, x)
        if len(f.domain) == 1 and len(f.codomain) == 2 and f.images == (1,) and len(g.codomain) == 2:
            return tuple(self.K.compose(a, self.z[self.K.source(a)]) for a in out)
        return out


def test_incoherent_twist_is_caught():
    kinds = {v.kind for v in presheaf_violations(BrokenTwist(group_groupoid(cyclic(2)), {"*": 1}, 2),
                                                 [(0,), (0, 1)])}
    assert "AssociativityCoherence" in kinds


# ------------------------------------------------------------ descent groupoids

def test_identity_cover_gives_back_the_values():
    G = group_groupoid(symmetric(3))
    P = bg_presheaf(G)
    cov = Cover([SetMap.identity(U2)])
    F = comparison_functor(P, cov)
    assert is_equivalence(F)["equivalence"]
    assert len(descent_category(P, cov).objects) == len(P.value(U2).objects)


def test_empty_cover_of_the_empty_set():
    d = descent_category(bg_presheaf(group_groupoid(cyclic(2))), Cover([], ()))
    assert d.objects == [DescentDatum((), ())] and len(d.morphisms) == 1


def test_bz2_over_two_points_by_singletons():
    # one bundle per point up to the descent data, each with Z2 symmetry
    P = bg_presheaf(group_groupoid(cyclic(2)))
    d = descent_category(P, singletons(U2))
    assert len(d.objects) == 1
    assert d.automorphism_count(d.objects[0]) == 4
    FU = P.value(U2)
    assert len(d.components()) == len(FU.components())
    assert is_equivalence(comparison_functor(P, singletons(U2)))["equivalence"]


def test_descent_groupoid_tables_are_a_groupoid():
    from fingroupoid.core import groupoid_table_violations
    from fingroupoid.corpus import groupoid_tables
    P = bg_presheaf(pair_groupoid([0, 1]))
    cov = Cover([SetMap.inclusion((0, 1), (0, 1, 2)), SetMap.inclusion((1, 2), (0, 1, 2))])
    G = descent_category(P, cov).materialize()
    assert not groupoid_table_violations(*groupoid_tables(G))


def test_refining_to_singletons_preserves_the_descent_groupoid():
    U = (0, 1, 2)
    for K in (group_groupoid(cyclic(2)), pair_groupoid([0, 1])):
        P = bg_presheaf(K)
        fine = descent_category(P, singletons(U)).materialize()
        for cov in subset_covers(U, 2):
            coarse = descent_category(P, Cover(cov, U)).materialize()
            assert morita_equivalent(coarse, fine).equivalent


# ------------------------------------------------------------------- stacks

def test_constant_presheaf_is_fully_faithful():
    K = pair_groupoid([0, 1])
    for cov in subset_covers(U2, 2):
        r = check_stack_condition(ConstantPresheaf(K), Cover(cov, U2))
        assert r.full and r.faithful


def test_globally_constant_maps_do_not_glue():
    r = check_stack_condition(GloballyConstantPresheaf("ab"), singletons(U2))
    assert r.full and r.faithful and not r.ess_surjective
    assert len(set(r.witness.sections)) == 2


def test_identity_cover_always_glues():
    cov = Cover([SetMap.identity(U2)])
    for P in (GloballyConstantPresheaf("ab"), ConstantPresheaf(pair_groupoid([0, 1])),
              TwistedPresheaf(group_groupoid(cyclic(2)), {"*": 1}, 2)):
        assert check_stack_condition(P, cov)


def test_twisted_presheaf_is_a_stack():
    P = TwistedPresheaf(group_groupoid(cyclic(2)), {"*": 1}, 2)
    for cov in subset_covers(U2, 2):
        assert check_stack_condition(P, Cover(cov, U2))


@settings(max_examples=40, deadline=None)
@given(groupoids(max_objects=2, max_morphisms=6), st.integers(0, 3), seeds)
def test_pointwise_shortcut_agrees_with_the_whole_descent_groupoid(K, n, seed):
    U = tuple(range(n))
    covers = subset_covers(U, 2)
    cov = Cover(random.Random(seed).choice(covers), U)
    P = bg_presheaf(K)
    fast = check_stack_condition(P, cov)
    slow = check_stack_condition(P, cov, method="generic")
    assert fast.verdict() == slow.verdict() and fast.holds


# ------------------------------------------------------- cocycle vs oracle

def candidate_data(P, cov):
    c = cov
    parts = [P.value(f.domain) for f in c.maps]
    for sections in product(*[F.objects for F in parts]):
        options = []
        for (i, j) in c.pairs:
            F = P.value(c.overlap[i, j][0])
            pr1, pr2 = (P.restrict(c.overlap[i, j][k]) for k in (1, 2))
            options.append(F.hom(pr2.obj(sections[j]), pr1.obj(sections[i])))
        for trans in product(*options):
            yield sections, trans


@pytest.mark.parametrize("K", [group_groupoid(cyclic(2)), pair_groupoid([0, 1]), group_groupoid(cyclic(3))],
                         ids=["Z2", "pair", "Z3"])
def test_descent_objects_match_the_pointwise_cocycle_oracle(K):
    P = PointwisePresheaf(K)
    U = (0, 1)
    for maps in subset_covers(U, 2) + [(SetMap((0, 1, 2), U, (0, 1, 1)),), (SetMap((0, 1), U, (0, 1)),) * 2]:
        cov = Cover(maps, U)
        d = DescentGroupoid(P, cov)
        expected = {DescentDatum(s, t) for s, t in candidate_data(P, cov)
                    if pointwise_cocycle_holds(K, cov, dict(zip(cov.pairs, t)))}
        assert set(d.objects) == expected
        for s, t in candidate_data(P, cov):
            assert (not d.cocycle_failures(s, t)) == (DescentDatum(s, t) in expected)

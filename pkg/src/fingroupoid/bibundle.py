"""Bibundles, pull-back groupoids, Morita morphisms and the Morita decision."""

from __future__ import annotations

from dataclasses import dataclass

from ._search import find_equivariant_bijection
from ._unionfind import UnionFind
from .actions import LEFT, RIGHT, GroupoidAction, action_violations, principal_violations
from .core import (
    FiniteGroupoid,
    GroupoidFunctor,
    NatTransform,
    compose_functors,
    discrete_groupoid,
    functor_violations,
    is_equivalence,
    nat_violations,
)
from .errors import DomainMismatch, NotSurjective, NotTransitive, Verdict, Violation, raise_if
from .groups import ISO_CAP, find_isomorphism


class Bibundle:
    """A ``G``-``H`` bibundle: left ``G`` action and right ``H`` action on one carrier."""

    def __init__(self, left, right):
        if left.side != LEFT or right.side != RIGHT:
            raise ValueError("need a left action and a right action")
        if left.carrier != right.carrier:
            raise ValueError("actions must share a carrier")
        self.left = left
        self.right = right

    def __repr__(self):
        return f"Bibundle(|P|={len(self.carrier)})"

    @property
    def carrier(self):
        return self.left.carrier

    @property
    def G(self):
        return self.left.groupoid

    @property
    def H(self):
        return self.right.groupoid

    @property
    def left_anchor(self):
        return self.left.anchor

    @property
    def right_anchor(self):
        return self.right.anchor

    def __eq__(self, other):
        if not isinstance(other, Bibundle):
            return NotImplemented
        return self.left == other.left and self.right == other.right

    __hash__ = object.__hash__


def bibundle_violations(left, right):
    found = action_violations(left.groupoid, left.carrier, left.anchor, left.table, LEFT)
    found += action_violations(right.groupoid, right.carrier, right.anchor, right.table, RIGHT)
    if found:
        return found
    G = left.groupoid
    pv = principal_violations(right, left.anchor, G.objects)
    if pv:
        found.append(Violation("LeftAnchorNotPrincipal", tuple(v.witness for v in pv[:3]),
                               "; ".join(str(v) for v in pv[:3])))
    for p in left.carrier:
        for g in left.acting_arrows(p):
            gp = left.act(p, g)
            if right.anchor[gp] != right.anchor[p]:
                found.append(Violation("RightAnchorNotInvariant", (g, p)))
                continue
            for h in right.acting_arrows(p):
                if right.act(gp, h) != left.act(right.act(p, h), g):
                    found.append(Violation("Incompatible", (g, p, h)))
    return found


def validate_bibundle(left, right):
    raise_if("bibundle", bibundle_violations(left, right))
    return Bibundle(left, right)


def is_left_principal(bib):
    """Whether the right anchor, with the left action, is a principal ``G``-bundle."""
    return not principal_violations(bib.left.as_right(), bib.right_anchor, bib.H.objects)


def bundle_as_bibundle(bundle):
    """A principal ``H``-bundle over ``M`` as a ``[M⇉M]``-``H`` bibundle."""
    M = discrete_groupoid(bundle.base)
    table = {(bundle.proj[p], p): p for p in bundle.carrier}
    left = GroupoidAction(M, bundle.carrier, dict(bundle.proj), table, LEFT)
    return Bibundle(left, bundle.action)


def identity_bibundle(G):
    """``G1`` with ``G`` acting on both sides by composition."""
    left = GroupoidAction(G, G.morphisms, dict(G.tgt),
                          {(g, p): G.compose(p, g) for p in G.morphisms for g in G.out_arrows(G.target(p))}, LEFT)
    right = GroupoidAction(G, G.morphisms, dict(G.src),
                           {(p, g): G.compose(g, p) for p in G.morphisms for g in G.in_arrows(G.source(p))}, RIGHT)
    return Bibundle(left, right)


def bibundle_of_functor(phi):
    """The bibundle ``G0 ×_{H0} H1`` of a functor ``phi: G -> H``."""
    G, H = phi.source, phi.target
    carrier = [(u, h) for u in G.objects for h in H.in_arrows(phi.obj(u))]
    left_table, right_table = {}, {}
    for (u, h) in carrier:
        for g in G.out_arrows(u):
            left_table[g, (u, h)] = (G.target(g), H.compose(h, phi.arr(g)))
        for k in H.in_arrows(H.source(h)):
            right_table[(u, h), k] = (u, H.compose(k, h))
    left = GroupoidAction(G, carrier, {p: p[0] for p in carrier}, left_table, LEFT)
    right = GroupoidAction(H, carrier, {p: H.source(p[1]) for p in carrier}, right_table, RIGHT)
    return Bibundle(left, right)


def compose_bibundles(P, Q):
    """``Q ∘ P`` as the orbit set of ``P ×_{H0} Q`` under ``(p, q) ~ (p·h, h⁻¹·q)``."""
    if not (P.H is Q.G or P.H == Q.G):
        raise DomainMismatch("MiddleMismatch: the right groupoid of P is not the left groupoid of Q")
    H = P.H
    pi, qi = P.right.index, Q.left.index
    pairs = [(p, q) for p in P.carrier for q in Q.carrier if P.right_anchor[p] == Q.left_anchor[q]]
    uf = UnionFind(pairs, key={(p, q): (pi[p], qi[q]) for p, q in pairs})
    for (p, q) in pairs:
        for h in P.right.acting_arrows(p):
            uf.union((p, q), (P.right.act(p, h), Q.left.act(q, H.inverse(h))))
    classes = uf.classes()
    carrier = [c[0] for c in classes]
    rep = {x: c[0] for c in classes for x in c}

    left_table, right_table = {}, {}
    for (p, q) in carrier:
        for g in P.left.acting_arrows(p):
            left_table[g, (p, q)] = rep[P.left.act(p, g), q]
        for k in Q.right.acting_arrows(q):
            right_table[(p, q), k] = rep[p, Q.right.act(q, k)]
    left = GroupoidAction(P.G, carrier, {x: P.left_anchor[x[0]] for x in carrier}, left_table, LEFT)
    right = GroupoidAction(Q.H, carrier, {x: Q.right_anchor[x[1]] for x in carrier}, right_table, RIGHT)
    return Bibundle(left, right)


def find_bibundle_isomorphism(P, Q):
    """Bijection of carriers commuting with both actions, or None."""
    if not ((P.G is Q.G or P.G == Q.G) and (P.H is Q.H or P.H == Q.H)):
        return None

    def mover(bib, tag, g, on_left):
        act = bib.left if on_left else bib.right

        def move(x):
            y = act.act(x[1], g)
            return None if y is None else (tag, y)
        return move

    moves = [(mover(P, 1, g, True), mover(Q, 2, g, True)) for g in P.G.morphisms]
    moves += [(mover(P, 1, h, False), mover(Q, 2, h, False)) for h in P.H.morphisms]

    def key(x):
        b = P if x[0] == 1 else Q
        return (b.left_anchor[x[1]], b.right_anchor[x[1]])

    phi = find_equivariant_bijection([(1, p) for p in P.carrier], [(2, q) for q in Q.carrier], key, moves)
    return None if phi is None else {a[1]: b[1] for a, b in phi.items()}


# --------------------------------------------------------- pull-back groupoids

def pullback_groupoid(gamma, J, domain=None):
    """Pull back ``gamma`` along ``J: P0 -> gamma0``.

    Returns ``(groupoid, projection functor)``; morphisms are triples
    ``(p, x, q)`` with ``x: J(p) -> J(q)``.
    """
    if domain is None:
        domain = tuple(J)
    domain = tuple(domain)
    jmap = J if callable(J) else J.__getitem__
    hit = {jmap(p) for p in domain}
    missing = [c for c in gamma.objects if c not in hit]
    if missing:
        raise NotSurjective(f"object {missing[0]!r} is not in the image", witness=missing[0])
    mors = [(p, x, q) for p in domain for q in domain for x in gamma.hom(jmap(p), jmap(q))]
    W = FiniteGroupoid(
        domain, mors,
        {m: m[0] for m in mors}, {m: m[2] for m in mors},
        lambda f, g: (f[0], gamma.compose(f[1], g[1]), g[2]),
        {p: (p, gamma.identity(jmap(p)), p) for p in domain},
        {m: (m[2], gamma.inverse(m[1]), m[0]) for m in mors},
    )
    proj = GroupoidFunctor(W, gamma, {p: jmap(p) for p in domain}, {m: m[1] for m in mors})
    return W, proj


def is_morita_morphism(F):
    """Surjective on objects, and ``γ -> (src γ, Fγ, tgt γ)`` is a bijection onto
    the arrows of the pull-back groupoid along the object map."""
    C, D = F.source, F.target
    hit = {F.obj(a) for a in C.objects}
    for b in D.objects:
        if b not in hit:
            return Verdict(False, b, "object not in the image")
    for a in C.objects:
        for b in C.objects:
            arrows = C.hom(a, b)
            imgs = {F.arr(f) for f in arrows}
            if len(imgs) < len(arrows):
                seen = {}
                for f in arrows:
                    x = F.arr(f)
                    if x in seen:
                        return Verdict(False, (seen[x], f), "two arrows give the same triple")
                    seen[x] = f
            for x in D.hom(F.obj(a), F.obj(b)):
                if x not in imgs:
                    return Verdict(False, (a, x, b), "triple not hit")
    return Verdict(True)


# ------------------------------------------------------------------- Morita

@dataclass(frozen=True, eq=False)
class MoritaWitness:
    """``kind == "equivalence"``: functor, inverse, unit, counit.
    ``kind == "span"``: additionally an apex with two Morita legs."""

    kind: str
    functor: GroupoidFunctor
    inverse: GroupoidFunctor
    unit: NatTransform
    counit: NatTransform
    apex: FiniteGroupoid = None
    left: GroupoidFunctor = None
    right: GroupoidFunctor = None


def verify_witness(w):
    """Re-check every piece of a witness; returns a Verdict."""
    for name, F in (("functor", w.functor), ("inverse", w.inverse)):
        bad = functor_violations(F)
        if bad:
            return Verdict(False, bad[0], f"{name} is not a functor")
    if not is_equivalence(w.functor)["equivalence"]:
        return Verdict(False, None, "functor is not an equivalence")
    for name, a in (("unit", w.unit), ("counit", w.counit)):
        bad = nat_violations(a)
        if bad:
            return Verdict(False, bad[0], f"{name} is not natural")
    if w.kind == "span":
        for name, leg in (("left", w.left), ("right", w.right)):
            bad = functor_violations(leg)
            if bad:
                return Verdict(False, bad[0], f"{name} leg is not a functor")
            v = is_morita_morphism(leg)
            if not v:
                return Verdict(False, v.witness, f"{name} leg: {v.detail}")
    return Verdict(True)


class MoritaResult(Verdict):
    __slots__ = ()

    @property
    def equivalent(self):
        return self.holds


def _match_components(G, H, cap):
    """Pair components of G with components of H having isomorphic isotropy."""
    hc = H.components()
    hiso = [H.isotropy_group(c[0]) for c in hc]
    used, out = set(), []
    for comp in G.components():
        giso = G.isotropy_group(comp[0])
        for j, c in enumerate(hc):
            if j in used:
                continue
            phi = find_isomorphism(giso, hiso[j], cap=cap)
            if phi is not None:
                used.add(j)
                out.append((comp, c, phi))
                break
        else:
            return None, comp
    return out, None


def _skeleton_functor(G, H, matches):
    """Functor G -> H sending each component to its match through the isotropy iso."""
    paths = G.spanning_paths()
    f0, f1 = {}, {}
    for comp, hcomp, phi in matches:
        y = hcomp[0]
        for a in comp:
            f0[a] = y
        for a in comp:
            for g in G.out_arrows(a):
                loop = G.compose_path(paths[a], g, G.inverse(paths[G.target(g)]))
                f1[g] = phi[loop]
    return GroupoidFunctor(G, H, f0, f1), paths


def morita_equivalent(G, H, cap=ISO_CAP):
    """Decide Morita equivalence and build a witness.

    Finite groupoids are Morita equivalent exactly when their components can
    be matched with isomorphic isotropy groups.  On success the result holds
    a ``MoritaWitness`` of kind ``span``.
    """
    ng, nh = len(G.components()), len(H.components())
    if ng != nh:
        return MoritaResult(False, (ng, nh), f"component count {ng} ≠ {nh}")
    matches, bad = _match_components(G, H, cap)
    if matches is None:
        return MoritaResult(False, bad, f"no unmatched component of the second groupoid has "
                                        f"isotropy isomorphic to that at {bad[0]!r}")
    return MoritaResult(True, _span_witness(G, H, matches))


def _span_witness(G, H, matches):
    F, p = _skeleton_functor(G, H, matches)
    back = [(hcomp, comp, {v: k for k, v in phi.items()}) for comp, hcomp, phi in matches]
    Gq, q = _skeleton_functor(H, G, back)
    unit = NatTransform(compose_functors(F, Gq), _identity(G), {a: p[a] for a in G.objects})
    counit = NatTransform(compose_functors(Gq, F), _identity(H), {b: q[b] for b in H.objects})

    # apex: H pulled back along G0 ⊔ H0 -> H0
    labels = [("G", a) for a in G.objects] + [("H", b) for b in H.objects]
    J = {("G", a): F.obj(a) for a in G.objects}
    J.update({("H", b): b for b in H.objects})
    W, right = pullback_groupoid(H, J, labels)

    def K(x):
        return x[1] if x[0] == "G" else Gq.obj(x[1])

    def sigma(x):
        return p[x[1]] if x[0] == "G" else G.identity(Gq.obj(x[1]))

    left = GroupoidFunctor(
        W, G, {x: K(x) for x in labels},
        {m: G.compose_path(G.inverse(sigma(m[0])), Gq.arr(m[1]), sigma(m[2])) for m in W.morphisms},
    )
    return MoritaWitness("span", F, Gq, unit, counit, W, left, right)


def _identity(G):
    return GroupoidFunctor(G, G, lambda a: a, lambda f: f)


def transitive_reduction(G, x=None):
    """``(isotropy groupoid at x, its inclusion into G, Morita result)``."""
    if not G.is_transitive():
        raise NotTransitive(f"{len(G.components())} components")
    if x is None:
        if not G.objects:
            raise ValueError("the empty groupoid has no object to reduce to")
        x = G.objects[0]
    autos = G.automorphisms(x)
    K = FiniteGroupoid([x], autos, {g: x for g in autos}, {g: x for g in autos},
                       {(a, b): G.compose(a, b) for a in autos for b in autos},
                       {x: G.identity(x)}, {g: G.inverse(g) for g in autos})
    incl = GroupoidFunctor(K, G, {x: x}, {g: g for g in autos})
    # the match is known: conjugate loops at the spanning root over to x
    comp = G.components()[0]
    path = G.spanning_paths()[x]
    root = G.source(path)
    phi = {g: G.compose_path(G.inverse(path), g, path) for g in G.automorphisms(root)}
    return K, incl, MoritaResult(True, _span_witness(G, K, [(comp, [x], phi)]))


__all__ = [
    "Bibundle", "bibundle_violations", "validate_bibundle", "is_left_principal",
    "bundle_as_bibundle", "identity_bibundle", "bibundle_of_functor", "compose_bibundles",
    "find_bibundle_isomorphism", "pullback_groupoid", "is_morita_morphism", "MoritaWitness",
    "MoritaResult", "verify_witness", "morita_equivalent", "transitive_reduction",
]

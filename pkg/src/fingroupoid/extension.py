"""Groupoid extensions, the fiber product G ×_H G, gerbe conditions.

An extension is a functor ``G -> H`` between groupoids on the same object set
that is the identity on objects and onto on arrows.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bibundle import is_morita_morphism, pullback_groupoid
from .core import FiniteGroupoid, GroupoidFunctor, functor_violations
from .errors import NotFull, NotSurjective, NotSurjectiveOnObjects, Verdict, Violation, raise_if


@dataclass(frozen=True, eq=False)
class GroupoidExtension:
    G: FiniteGroupoid
    H: FiniteGroupoid
    functor: GroupoidFunctor

    @property
    def base(self):
        return self.G.objects

    def arr(self, g):
        return self.functor.arr(g)

    def __repr__(self):
        return f"GroupoidExtension({len(self.G.morphisms)} -> {len(self.H.morphisms)} arrows over {len(self.base)})"


def extension_violations(G, H, f1):
    if G.objects != H.objects:
        return [Violation("ObjectSetMismatch", (G.objects, H.objects))]
    F = f1 if isinstance(f1, GroupoidFunctor) else GroupoidFunctor(G, H, {a: a for a in G.objects}, f1)
    found = []
    for a in G.objects:
        if F.obj(a) != a:
            found.append(Violation("ObjectSetMismatch", (a,), "object map is not the identity"))
    bad = functor_violations(F)
    found += [Violation("NotAFunctor", v.witness, f"{v.kind}: {v.detail}") for v in bad]
    if found:
        return found
    hit = {F.arr(g) for g in G.morphisms}
    for h in H.morphisms:
        if h not in hit:
            found.append(Violation("NotSurjective", (h,), "arrow not hit"))
    return found


def validate_extension(G, H, f1):
    raise_if("extension", extension_violations(G, H, f1))
    F = f1 if isinstance(f1, GroupoidFunctor) else GroupoidFunctor(G, H, {a: a for a in G.objects}, f1)
    return GroupoidExtension(G, H, F)


def identity_extension(G):
    return GroupoidExtension(G, G, GroupoidFunctor(G, G, {a: a for a in G.objects}, {g: g for g in G.morphisms}))


# ---------------------------------------------------------------- fiber product

class FiberProductGroupoid(FiniteGroupoid):
    """``G ×_H G`` for an extension ``F: G -> H``.

    Objects are arrows ``k: a -> b`` of ``H``.  A morphism is stored as
    ``(g1, k, g2)`` with ``g1`` out of ``a`` and ``g2`` out of ``b``; it runs
    from ``k`` to ``F(g2)∘k∘F(g1)⁻¹``, and composition is componentwise.
    """

    def __init__(self, ext):
        G, H, F = ext.G, ext.H, ext.functor
        objects = list(H.morphisms)
        mul, image = H.compose, {g: F.arr(g) for g in G.morphisms}
        mors, tgt = [], {}
        for k in objects:
            outs = [(g2, image[g2]) for g2 in G.out_arrows(H.target(k))]
            for g1 in G.out_arrows(H.source(k)):
                k1 = mul(H.inverse(image[g1]), k)
                for g2, f2 in outs:
                    m = (g1, k, g2)
                    mors.append(m)
                    tgt[m] = mul(k1, f2)
        super().__init__(
            objects, mors, {m: m[1] for m in mors}, tgt,
            lambda f, g: (G.compose(f[0], g[0]), f[1], G.compose(f[2], g[2])),
            {k: (G.identity(H.source(k)), k, G.identity(H.target(k))) for k in objects},
            {m: (G.inverse(m[0]), tgt[m], G.inverse(m[2])) for m in mors},
        )
        self.extension = ext

    def middle_triple(self, m):
        """The view ``(g1, h, g2)`` with source ``h∘F(g1)`` and target ``F(g2)∘h``."""
        F, H = self.extension.functor, self.extension.H
        g1, k, g2 = m
        return (g1, H.compose(H.inverse(F.arr(g1)), k), g2)

    def from_middle_triple(self, t):
        F, H = self.extension.functor, self.extension.H
        g1, h, g2 = t
        return (g1, H.compose(F.arr(g1), h), g2)


def fiber_product_groupoid(ext):
    return FiberProductGroupoid(ext)


def diagonal_functor(ext, fp=None):
    """``a -> 1_a``, ``g -> (g, 1_{src g}, g)``."""
    fp = fp or fiber_product_groupoid(ext)
    G, H = ext.G, ext.H
    return GroupoidFunctor(
        G, fp, {a: H.identity(a) for a in G.objects},
        {g: (g, H.identity(G.source(g)), g) for g in G.morphisms},
    )


def is_transitive(G):
    return G.is_transitive()


# -------------------------------------------------------------- gerbe checks

@dataclass
class GerbeReport:
    objects_lift: bool
    arrows_lift: bool
    object_witness: object = None
    arrow_witness: tuple = None
    notes: list = field(default_factory=list)

    @property
    def gerbe(self):
        return self.objects_lift and self.arrows_lift

    def verdict(self):
        return {"objects_lift": self.objects_lift, "arrows_lift": self.arrows_lift, "gerbe": self.gerbe}


def check_gerbe_conditions(F):
    """Point-cover form of the two lifting conditions.

    Objects lift when every object of the target is isomorphic to an image;
    arrows lift when every ``p: F(a) -> F(b)`` is ``F(τ)`` for some ``τ: a -> b``.
    """
    C, D = F.source, F.target
    reached = {D.component_index(F.obj(a)) for a in C.objects}
    obj_witness = next((b for b in D.objects if D.component_index(b) not in reached), None)
    arrow_witness = None
    for a in C.objects:
        for b in C.objects:
            imgs = {F.arr(t) for t in C.hom(a, b)}
            for p in D.hom(F.obj(a), F.obj(b)):
                if p not in imgs:
                    arrow_witness = (a, b, p)
                    break
            if arrow_witness:
                break
        if arrow_witness:
            break
    return GerbeReport(obj_witness is None, arrow_witness is None, obj_witness, arrow_witness)


def induced_extension(F):
    """Extension ``G -> F0^*H`` over the objects of ``G``; arrows go to
    ``(src γ, F γ, tgt γ)``."""
    C, D = F.source, F.target
    hit = {F.obj(a) for a in C.objects}
    missing = [b for b in D.objects if b not in hit]
    if missing:
        raise NotSurjectiveOnObjects(f"object {missing[0]!r} is not an image", witness=missing[0])
    W, _ = pullback_groupoid(D, F.f0, C.objects)
    f1 = {g: (C.source(g), F.arr(g), C.target(g)) for g in C.morphisms}
    image = set(f1.values())
    for m in W.morphisms:
        if m not in image:
            raise NotFull(f"triple {m!r} is not the image of an arrow", witness=m)
    return GroupoidExtension(C, W, GroupoidFunctor(C, W, {a: a for a in C.objects}, f1))


def pullback_extension(ext, f, domain=None):
    """Pull an extension back along a surjection ``f: N -> M``.

    Returns ``(extension over N, (psi_G, psi_H))`` where the psi are the
    projection functors back to ``ext``.
    """
    if domain is None:
        domain = tuple(f)
    fmap = f if callable(f) else f.__getitem__
    G2, psi_G = pullback_groupoid(ext.G, fmap, domain)
    H2, psi_H = pullback_groupoid(ext.H, fmap, domain)
    F = ext.functor
    f1 = {m: (m[0], F.arr(m[1]), m[2]) for m in G2.morphisms}
    new = GroupoidExtension(G2, H2, GroupoidFunctor(G2, H2, {p: p for p in domain}, f1))
    return new, (psi_G, psi_H)


@dataclass(frozen=True, eq=False)
class ExtensionSpan:
    """An apex extension with a morphism of extensions into each side."""

    apex: GroupoidExtension
    first: tuple
    second: tuple


def _leg_report(apex, target, leg, which):
    psi_G, psi_H = leg
    for name, psi, src, dst in (("G", psi_G, apex.G, target.G), ("H", psi_H, apex.H, target.H)):
        if not (psi.source is src or psi.source == src) or not (psi.target is dst or psi.target == dst):
            return Verdict(False, name, f"{which} leg: {name}-functor has the wrong ends")
        bad = functor_violations(psi)
        if bad:
            return Verdict(False, bad[0].witness, f"{which} leg: {name}-functor {bad[0]}")
        v = is_morita_morphism(psi)
        if not v:
            return Verdict(False, v.witness, f"{which} leg: {name}-functor is not Morita ({v.detail})")
    for a in apex.G.objects:
        if psi_G.obj(a) != psi_H.obj(a):
            return Verdict(False, a, f"{which} leg: object maps differ")
    for g in apex.G.morphisms:
        if psi_H.arr(apex.arr(g)) != target.arr(psi_G.arr(g)):
            return Verdict(False, g, f"{which} leg: square fails at this arrow")
    return Verdict(True)


def verify_extension_morita(ext1, ext2, witness):
    """Both legs of ``witness`` must be Morita morphisms of extensions."""
    for target, leg, which in ((ext1, witness.first, "first"), (ext2, witness.second, "second")):
        v = _leg_report(witness.apex, target, leg, which)
        if not v:
            return v
    return Verdict(True)


def round_trip_witness(ext, induced):
    """Span between ``ext`` and ``induced_extension(ext.functor)``.

    The apex is ``ext`` pulled back along the two-sheeted cover of its base.
    """
    M = ext.base
    cover = [(i, a) for i in (0, 1) for a in M]
    apex, (psi_G, psi_H) = pullback_extension(ext, lambda x: x[1], cover)
    to_induced_H = GroupoidFunctor(
        apex.H, induced.H, {x: x[1] for x in cover},
        {m: (m[0][1], m[1], m[2][1]) for m in apex.H.morphisms},
    )
    return ExtensionSpan(apex, (psi_G, psi_H), (psi_G, to_induced_H))


__all__ = [
    "GroupoidExtension", "extension_violations", "validate_extension", "identity_extension",
    "FiberProductGroupoid", "fiber_product_groupoid", "diagonal_functor", "is_transitive",
    "GerbeReport", "check_gerbe_conditions", "induced_extension", "pullback_extension",
    "ExtensionSpan", "verify_extension_morita", "round_trip_witness", "NotSurjective",
]

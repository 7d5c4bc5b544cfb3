"""Finite categories and groupoids, functors, natural transformations.

Composition convention: ``comp[(f, g)]`` is ``g ∘ f`` and is defined exactly
when ``tgt(f) == src(g)``.  Every module uses the same orientation.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product

from ._unionfind import UnionFind
from .errors import (
    BoundaryMismatch,
    DomainMismatch,
    FormulaDisagreement,
    NotComposable,
    ValidationError,
    Violation,
    raise_if,
)
from .groups import FiniteGroup


class FiniteCategory:
    _table = None

    def __init__(self, objects, morphisms, src, tgt, comp, ident):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.ident = dict(ident)
        if callable(comp):
            self._mul = comp
        else:
            table = self._table = dict(comp)
            self.__dict__["comp"] = table
            self._mul = lambda f, g: table[f, g]

    def __repr__(self):
        return f"{type(self).__name__}({len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    # structure maps; lazy subclasses override these rather than the tables
    def source(self, f):
        return self.src[f]

    def target(self, f):
        return self.tgt[f]

    def identity(self, a):
        return self.ident[a]

    def compose(self, f, g):
        """``g ∘ f``."""
        if self._table is not None:
            try:
                return self._table[f, g]
            except KeyError:
                raise NotComposable(f"{f!r} then {g!r}") from None
        if self.target(f) != self.source(g):
            raise NotComposable(f"{f!r} then {g!r}")
        return self._mul(f, g)

    def compose_path(self, *arrows):
        """Compose arrows in the order they are traversed."""
        out = arrows[0]
        for g in arrows[1:]:
            out = self.compose(out, g)
        return out

    @cached_property
    def comp(self):
        return {(f, g): self._mul(f, g) for f in self.morphisms for g in self.out_arrows(self.target(f))}

    @cached_property
    def _object_index(self):
        return {a: i for i, a in enumerate(self.objects)}

    @cached_property
    def _hom_index(self):
        out, into, hom = {}, {}, {}
        for f in self.morphisms:
            a, b = self.source(f), self.target(f)
            out.setdefault(a, []).append(f)
            into.setdefault(b, []).append(f)
            hom.setdefault((a, b), []).append(f)
        return out, into, hom

    def out_arrows(self, a):
        return self._hom_index[0].get(a, [])

    def in_arrows(self, b):
        return self._hom_index[1].get(b, [])

    def hom(self, a, b):
        return self._hom_index[2].get((a, b), [])

    def object_index(self, a):
        return self._object_index[a]

    def has_object(self, a):
        return a in self._object_index

    def has_morphism(self, f):
        return f in self.src

    def tables(self):
        return (self.objects, self.morphisms, self.src, self.tgt, self.comp, self.ident)

    def __eq__(self, other):
        if not isinstance(other, FiniteCategory):
            return NotImplemented
        return self.tables() == other.tables() and getattr(self, "inv", None) == getattr(other, "inv", None)

    __hash__ = object.__hash__


class FiniteGroupoid(FiniteCategory):
    def __init__(self, objects, morphisms, src, tgt, comp, ident, inv):
        super().__init__(objects, morphisms, src, tgt, comp, ident)
        self.inv = dict(inv)

    def inverse(self, f):
        return self.inv[f]

    def automorphisms(self, a):
        return self.hom(a, a)

    def automorphism_count(self, a):
        return len(self.automorphisms(a))

    @cached_property
    def _components(self):
        uf = UnionFind(self.objects)
        ms = self.morphisms
        for a, b in set(zip(map(self.source, ms), map(self.target, ms))):
            if a != b:
                uf.union(a, b)
        comps = [tuple(c) for c in uf.classes()]
        where = {a: i for i, c in enumerate(comps) for a in c}
        return comps, where

    def components(self):
        """Connected components as tuples of objects, each in object order."""
        return self._components[0]

    def component_index(self, a):
        return self._components[1][a]

    def is_transitive(self):
        return len(self.components()) <= 1

    def spanning_paths(self, component=None):
        """For each object ``a`` of a component, an arrow from the component's
        smallest object to ``a`` (BFS tree)."""
        if component is None:
            return dict(self._spanning)
        return self._bfs([component])

    @cached_property
    def _spanning(self):
        return self._bfs(self.components())

    def _bfs(self, comps):
        paths = {}
        for comp in comps:
            root = comp[0]
            paths[root] = self.identity(root)
            frontier = [root]
            while frontier:
                nxt = []
                for a in frontier:
                    for f in self.out_arrows(a):
                        b = self.target(f)
                        if b not in paths:
                            paths[b] = self.compose(paths[a], f)
                            nxt.append(b)
                frontier = nxt
        return paths

    def isotropy_group(self, x):
        autos = self.automorphisms(x)
        return FiniteGroup(autos, lambda a, b: self.compose(a, b),
                           identity=self.identity(x), inverse={a: self.inverse(a) for a in autos})

    @cached_property
    def _generators(self):
        gens = []
        paths = self.spanning_paths()
        for comp in self.components():
            root = comp[0]
            for a in comp[1:]:
                gens.append(paths[a])
            autos = self.automorphisms(root)
            iso = self.isotropy_group(root)
            span = frozenset([self.identity(root)])
            chosen = []
            for g in autos:
                if g not in span:
                    chosen.append(g)
                    span = iso.closure(chosen)
            gens.extend(chosen)
        by_source = {}
        for g in gens:
            by_source.setdefault(self.source(g), []).append(g)
        return gens, by_source

    def generators(self):
        """Arrows generating the groupoid under composition and inversion."""
        return self._generators[0]

    def out_generators(self, a):
        return self._generators[1].get(a, [])


# ------------------------------------------------------------------ validation

def category_violations(objects, morphisms, src, tgt, comp, ident):
    objects, morphisms = tuple(objects), tuple(morphisms)
    objset, morset = set(objects), set(morphisms)
    found = []
    for name, table, keys, values in (("src", src, morset, objset), ("tgt", tgt, morset, objset),
                                      ("ident", ident, objset, morset)):
        for k in keys:
            if k not in table:
                found.append(Violation("DanglingIndex", (name, k), "missing entry"))
        for k, v in table.items():
            if k not in keys or v not in values:
                found.append(Violation("DanglingIndex", (name, k, v)))
    for (f, g), h in comp.items():
        if f not in morset or g not in morset or h not in morset:
            found.append(Violation("DanglingIndex", ("comp", f, g, h)))
    if found:
        return found

    for (f, g), h in comp.items():
        if tgt[f] != src[g]:
            found.append(Violation("CompositionDomainMismatch", (f, g), "entry on a non-composable pair"))
        elif src[h] != src[f] or tgt[h] != tgt[g]:
            found.append(Violation("CompositionDomainMismatch", (f, g, h), "composite has wrong endpoints"))
    outs = {}
    for f in morphisms:
        outs.setdefault(src[f], []).append(f)
    for f in morphisms:
        for g in outs.get(tgt[f], []):
            if (f, g) not in comp:
                found.append(Violation("CompositionDomainMismatch", (f, g), "composable pair has no entry"))

    for a in objects:
        e = ident[a]
        if src[e] != a or tgt[e] != a:
            found.append(Violation("UnitViolation", (e,), f"identity of {a!r} is not a loop at it"))
    for f in morphisms:
        left, right = comp.get((ident[src[f]], f)), comp.get((f, ident[tgt[f]]))
        if left is not None and left != f:
            found.append(Violation("UnitViolation", (f,), "f ∘ 1 != f"))
        if right is not None and right != f:
            found.append(Violation("UnitViolation", (f,), "1 ∘ f != f"))

    for (f, g), fg in comp.items():
        if tgt[f] != src[g]:
            continue
        for h in outs.get(tgt[g], []):
            gh = comp.get((g, h))
            lhs, rhs = comp.get((fg, h)), (comp.get((f, gh)) if gh is not None else None)
            if lhs is not None and rhs is not None and lhs != rhs:
                found.append(Violation("AssociativityViolation", (f, g, h)))
    return found


def validate_category(objects, morphisms, src, tgt, comp, ident):
    """Return a sealed ``FiniteCategory`` or raise with every violated instance."""
    raise_if("category", category_violations(objects, morphisms, src, tgt, comp, ident))
    return FiniteCategory(objects, morphisms, src, tgt, comp, ident)


def groupoid_violations(cat, inv):
    found = []
    morset = set(cat.morphisms)
    for f in cat.morphisms:
        if f not in inv or inv[f] not in morset:
            found.append(Violation("DanglingIndex", ("inv", f)))
    if found:
        return found
    for f in cat.morphisms:
        g = inv[f]
        if cat.source(g) != cat.target(f) or cat.target(g) != cat.source(f):
            found.append(Violation("NotInvertible", (f,), "src∘inv != tgt or tgt∘inv != src"))
            continue
        if cat.compose(f, g) != cat.identity(cat.source(f)):
            found.append(Violation("NotInvertible", (f,), "inv(f) ∘ f != 1_src"))
        if cat.compose(g, f) != cat.identity(cat.target(f)):
            found.append(Violation("NotInvertible", (f,), "f ∘ inv(f) != 1_tgt"))
    return found


def validate_groupoid(cat, inv):
    raise_if("groupoid", groupoid_violations(cat, inv))
    return FiniteGroupoid(cat.objects, cat.morphisms, cat.src, cat.tgt, cat.comp, cat.ident, inv)


def make_groupoid(objects, morphisms, src, tgt, comp, ident, inv):
    """Validate raw tables all the way to a groupoid."""
    return validate_groupoid(validate_category(objects, morphisms, src, tgt, comp, ident), inv)


def groupoid_table_violations(objects, morphisms, src, tgt, comp, ident, inv):
    """Violations of the whole groupoid axiom set (category + inverse), no raising."""
    found = category_violations(objects, morphisms, src, tgt, comp, ident)
    if found:
        return found
    cat = FiniteCategory(objects, morphisms, src, tgt, comp, ident)
    return groupoid_violations(cat, inv)


# ---------------------------------------------------------------- constructors

def discrete_groupoid(elements):
    elements = tuple(elements)
    same = {x: x for x in elements}
    return FiniteGroupoid(elements, elements, same, same, {(x, x): x for x in elements}, same, same)


def group_groupoid(group, obj="*"):
    """One-object groupoid; composition is the group multiplication."""
    els = group.elements
    return FiniteGroupoid(
        [obj], els, {g: obj for g in els}, {g: obj for g in els},
        dict(group.table), {obj: group.identity}, dict(group.inverse),
    )


def pair_groupoid(elements):
    """Exactly one arrow (a, b) between any two objects."""
    elements = tuple(elements)
    mors = [(a, b) for a in elements for b in elements]
    return FiniteGroupoid(
        elements, mors, {m: m[0] for m in mors}, {m: m[1] for m in mors},
        lambda f, g: (f[0], g[1]), {a: (a, a) for a in elements}, {m: (m[1], m[0]) for m in mors},
    )


def action_violations(group, elements, action):
    found = []
    for m in elements:
        if action.get((m, group.identity)) != m:
            found.append(Violation("NotAnAction", (m, group.identity, None), "m·e != m"))
        for g in group.elements:
            if (m, g) not in action or action[m, g] not in elements:
                found.append(Violation("NotAnAction", (m, g, None), "action undefined"))
    if found:
        return found
    for m in elements:
        for g in group.elements:
            for h in group.elements:
                if action[action[m, g], h] != action[m, group.mul(g, h)]:
                    found.append(Violation("NotAnAction", (m, g, h), "(m·g)·h != m·(gh)"))
    return found


def action_groupoid(group, elements, action):
    """Groupoid of a right action ``action[(m, g)] = m·g``.

    Morphism ``(m, g)`` runs from ``m`` to ``m·g``; composition is
    ``((m1, g1), (m2, g2)) -> (m1, g1 g2)``.
    """
    elements = tuple(elements)
    raise_if("action", action_violations(group, elements, action))
    mors = [(m, g) for m in elements for g in group.elements]
    return FiniteGroupoid(
        elements, mors,
        {mg: mg[0] for mg in mors},
        {mg: action[mg] for mg in mors},
        lambda f, g: (f[0], group.mul(f[1], g[1])),
        {m: (m, group.identity) for m in elements},
        {(m, g): (action[m, g], group.inv(g)) for (m, g) in mors},
    )


TABULATE_LIMIT = 250_000


def _maybe_tabulate(mors, src, tgt, mul):
    """Composition table of ``mul`` if it has at most TABULATE_LIMIT entries, else ``mul``."""
    into, out = {}, {}
    for f in mors:
        out.setdefault(src[f], []).append(f)
        into.setdefault(tgt[f], []).append(f)
    if sum(len(into[a]) * len(out.get(a, ())) for a in into) > TABULATE_LIMIT:
        return mul
    return {(f, g): mul(f, g) for a, fs in into.items() for f in fs for g in out.get(a, ())}


def disjoint_union(*groupoids):
    """Coproduct; labels are ``(index, label)``."""
    objs, mors, src, tgt, ident, inv = [], [], {}, {}, {}, {}
    for i, g in enumerate(groupoids):
        objs += [(i, a) for a in g.objects]
        for f in g.morphisms:
            m = (i, f)
            mors.append(m)
            src[m], tgt[m], inv[m] = (i, g.source(f)), (i, g.target(f)), (i, g.inverse(f))
        for a in g.objects:
            ident[i, a] = (i, g.identity(a))
    mul = _maybe_tabulate(mors, src, tgt, lambda f, g: (f[0], groupoids[f[0]].compose(f[1], g[1])))
    return FiniteGroupoid(objs, mors, src, tgt, mul, ident, inv)


def product_groupoid(first, second):
    objs = list(product(first.objects, second.objects))
    mors = list(product(first.morphisms, second.morphisms))
    src = {m: (first.source(m[0]), second.source(m[1])) for m in mors}
    tgt = {m: (first.target(m[0]), second.target(m[1])) for m in mors}
    mul = _maybe_tabulate(mors, src, tgt, lambda f, g: (first.compose(f[0], g[0]), second.compose(f[1], g[1])))
    return FiniteGroupoid(
        objs, mors, src, tgt, mul,
        {a: (first.identity(a[0]), second.identity(a[1])) for a in objs},
        {m: (first.inverse(m[0]), second.inverse(m[1])) for m in mors},
    )


def relabel(g, obj_label, mor_label):
    """Isomorphic copy under injective relabelling functions."""
    return FiniteGroupoid(
        [obj_label(a) for a in g.objects],
        [mor_label(f) for f in g.morphisms],
        {mor_label(f): obj_label(g.source(f)) for f in g.morphisms},
        {mor_label(f): obj_label(g.target(f)) for f in g.morphisms},
        {(mor_label(f), mor_label(h)): mor_label(v) for (f, h), v in g.comp.items()},
        {obj_label(a): mor_label(g.identity(a)) for a in g.objects},
        {mor_label(f): mor_label(g.inverse(f)) for f in g.morphisms},
    )


def components_and_isotropy(g):
    """``[(component, isotropy group at the component's smallest object)]``."""
    return [(comp, g.isotropy_group(comp[0])) for comp in g.components()]


def is_transitive(g):
    return g.is_transitive()


# -------------------------------------------------------------------- functors

class GroupoidFunctor:
    """A functor given by object and arrow maps (dicts or callables)."""

    def __init__(self, source, target, f0, f1):
        self.source = source
        self.target = target
        if callable(f0):
            self._obj = f0
        else:
            table0 = dict(f0)
            self.__dict__["f0"] = table0
            self._obj = table0.__getitem__
        if callable(f1):
            self._arr = f1
        else:
            table1 = dict(f1)
            self.__dict__["f1"] = table1
            self._arr = table1.__getitem__

    def __repr__(self):
        return f"GroupoidFunctor({self.source!r} -> {self.target!r})"

    def obj(self, a):
        return self._obj(a)

    def arr(self, f):
        return self._arr(f)

    @cached_property
    def f0(self):
        return {a: self._obj(a) for a in self.source.objects}

    @cached_property
    def f1(self):
        return {f: self._arr(f) for f in self.source.morphisms}

    def __eq__(self, other):
        if not isinstance(other, GroupoidFunctor):
            return NotImplemented
        return (self.source is other.source or self.source == other.source) and \
               (self.target is other.target or self.target == other.target) and \
               self.f0 == other.f0 and self.f1 == other.f1

    __hash__ = object.__hash__


def functor_violations(F, exhaustive=False):
    """Ways in which ``F`` fails to be a functor.

    Composition is checked on pairs ``(f, s)`` with ``s`` a generator or the
    inverse of one; every arrow is a word in those, so by induction on word
    length that is equivalent to checking all composable pairs.  Pass
    ``exhaustive=True`` to check all pairs anyway.
    """
    C, D = F.source, F.target
    found = []
    for a in C.objects:
        if F.obj(a) not in D._object_index:
            found.append(Violation("DanglingIndex", ("f0", a)))
        elif F.arr(C.identity(a)) != D.identity(F.obj(a)):
            found.append(Violation("NotAFunctor", (a,), "identity not preserved"))
    for f in C.morphisms:
        x = F.arr(f)
        try:
            ok = D.source(x) == F.obj(C.source(f)) and D.target(x) == F.obj(C.target(f))
        except KeyError:
            found.append(Violation("DanglingIndex", ("f1", f)))
            continue
        if not ok:
            found.append(Violation("NotAFunctor", (f,), "endpoints not preserved"))
    if found:
        return found
    if exhaustive:
        steps = C.out_arrows
    else:
        by_source = {}
        for s in C.generators():
            by_source.setdefault(C.source(s), []).append(s)
            by_source.setdefault(C.target(s), []).append(C.inverse(s))

        def steps(a):
            return by_source.get(a, ())

    for f in C.morphisms:
        for g in steps(C.target(f)):
            if F.arr(C.compose(f, g)) != D.compose(F.arr(f), F.arr(g)):
                found.append(Violation("NotAFunctor", (f, g), "composition not preserved"))
    return found


def validate_functor(F):
    raise_if("functor", functor_violations(F))
    return F


def identity_functor(g):
    return GroupoidFunctor(g, g, lambda a: a, lambda f: f)


def compose_functors(F, G):
    """``G ∘ F``: first ``F``, then ``G``."""
    if not (F.target is G.source or F.target == G.source):
        raise DomainMismatch("codomain of the first functor is not the domain of the second")
    return GroupoidFunctor(F.source, G.target,
                           {a: G.obj(F.obj(a)) for a in F.source.objects},
                           {f: G.arr(F.arr(f)) for f in F.source.morphisms})


# ------------------------------------------------------ natural transformations

class NatTransform:
    def __init__(self, F, G, eta):
        self.F, self.G = F, G
        self.eta = dict(eta)

    def __getitem__(self, a):
        return self.eta[a]

    def __repr__(self):
        return f"NatTransform({len(self.eta)} components)"

    def __eq__(self, other):
        if not isinstance(other, NatTransform):
            return NotImplemented
        return self.F == other.F and self.G == other.G and self.eta == other.eta

    __hash__ = object.__hash__


def nat_violations(alpha):
    F, G = alpha.F, alpha.G
    C, D = F.source, F.target
    found = []
    for a in C.objects:
        e = alpha.eta.get(a)
        if e is None or D.source(e) != F.obj(a) or D.target(e) != G.obj(a):
            found.append(Violation("BoundaryMismatch", (a,), "component has wrong endpoints"))
    if found:
        return found
    for f in C.morphisms:
        a, b = C.source(f), C.target(f)
        if D.compose(F.arr(f), alpha[b]) != D.compose(alpha[a], G.arr(f)):
            found.append(Violation("NotNatural", (f,)))
    return found


def validate_nat(alpha):
    raise_if("natural transformation", nat_violations(alpha))
    return alpha


def identity_nat(F):
    D = F.target
    return NatTransform(F, F, {a: D.identity(F.obj(a)) for a in F.source.objects})


def vcomp(alpha, beta):
    """Vertical composite ``beta ∘ alpha`` (alpha: F⇒G, beta: G⇒H)."""
    if alpha.G is not beta.F and alpha.G != beta.F:
        raise BoundaryMismatch("alpha's target functor differs from beta's source functor")
    mul, second = alpha.F.target.compose, beta.eta
    return NatTransform(alpha.F, beta.G, {a: mul(e, second[a]) for a, e in alpha.eta.items()})


def hcomp(alpha, beta):
    """Horizontal composite of alpha: F⇒G (C→D) and beta: F'⇒G' (D→E).

    Both ways round the naturality square are computed and must agree.
    """
    F, G, F2, G2 = alpha.F, alpha.G, beta.F, beta.G
    if not (F.target == F2.source):
        raise BoundaryMismatch("middle groupoids differ")
    E = F2.target
    eta = {}
    for a in F.source.objects:
        first = E.compose(beta[F.obj(a)], G2.arr(alpha[a]))
        second = E.compose(F2.arr(alpha[a]), beta[G.obj(a)])
        if first != second:
            raise FormulaDisagreement(f"horizontal composite formulas disagree at {a!r}")
        eta[a] = first
    return NatTransform(compose_functors(F, F2), compose_functors(G, G2), eta)


def whisker_right(alpha, H):
    """``H·alpha``."""
    return NatTransform(compose_functors(alpha.F, H), compose_functors(alpha.G, H),
                        {a: H.arr(e) for a, e in alpha.eta.items()})


def whisker_left(beta, F):
    """``beta·F``."""
    return NatTransform(compose_functors(F, beta.F), compose_functors(F, beta.G),
                        {a: beta[F.obj(a)] for a in F.source.objects})


# ---------------------------------------------------------------- equivalence

def is_equivalence(F, method="components"):
    """Fullness, faithfulness and essential surjectivity of ``F``.

    ``method="homsets"`` compares every hom-set map C(a,b) -> D(Fa,Fb).
    ``method="components"`` uses the groupoid reduction: F is faithful/full
    iff it is injective/surjective on Aut(a) at one object per component,
    with fullness additionally requiring injectivity on components.  It
    never enumerates arrows outside isotropy groups, so it works on lazily
    presented groupoids.
    """
    C, D = F.source, F.target
    if method == "homsets":
        full = faithful = True
        for a in C.objects:
            for b in C.objects:
                imgs = [F.arr(f) for f in C.hom(a, b)]
                if len(set(imgs)) < len(imgs):
                    faithful = False
                if len(set(imgs)) < len(D.hom(F.obj(a), F.obj(b))):
                    full = False
    elif method == "components":
        full = faithful = True
        hit = {}
        for comp in C.components():
            a = comp[0]
            fa = F.obj(a)
            autos = C.automorphisms(a)
            imgs = {F.arr(f) for f in autos}
            if len(imgs) < len(autos):
                faithful = False
            if len(imgs) < D.automorphism_count(fa):
                full = False
            k = D.component_index(fa)
            if k in hit:
                full = False
            hit[k] = a
    else:
        raise ValueError(method)
    reached = {D.component_index(F.obj(a)) for a in C.objects} if method == "homsets" else set(hit)
    ess = len(reached) == len(D.components())
    return {"full": full, "faithful": faithful, "ess_surjective": ess,
            "equivalence": full and faithful and ess}


def functors_between(C, D, limit=None):
    """Every functor C -> D, by backtracking over generator images.

    Images of the component spanning paths and isotropy generators determine
    the functor; candidates are checked by full functoriality.
    """
    paths = C.spanning_paths()
    comps = C.components()
    out = []

    def build(choice):
        # choice: per component (root image object, path images, iso hom)
        f0, f1 = {}, {}
        for comp, (root_img, path_imgs, rho) in zip(comps, choice):
            for a in comp:
                f0[a] = D.target(path_imgs[a])
            for a in comp:
                for f in C.out_arrows(a):
                    b = C.target(f)
                    # f = p_a^{-1} ... : loop = p_a ; f ; p_b^{-1}
                    loop = C.compose_path(paths[a], f, C.inverse(paths[b]))
                    f1[f] = D.compose_path(D.inverse(path_imgs[a]), rho[loop], path_imgs[b])
        return GroupoidFunctor(C, D, f0, f1)

    from .groups import homomorphisms

    per_comp = []
    for comp in comps:
        root = comp[0]
        iso = C.isotropy_group(root)
        opts = []
        for y in D.objects:
            target_iso = D.isotropy_group(y)
            homs = list(homomorphisms(iso, target_iso))
            rest = comp[1:]
            for ends in product(*[[f for f in D.out_arrows(y)] for _ in rest]):
                path_imgs = {root: D.identity(y)}
                path_imgs.update(zip(rest, ends))
                for rho in homs:
                    opts.append((y, path_imgs, rho))
        per_comp.append(opts)
    for choice in product(*per_comp):
        out.append(build(choice))
        if limit is not None and len(out) >= limit:
            break
    return out


def nat_transforms_between(F, G):
    """Every natural transformation F ⇒ G."""
    C, D = F.source, F.target
    paths = C._spanning
    per_comp = [[(comp, e) for e in D.hom(F.obj(comp[0]), G.obj(comp[0]))] for comp in C.components()]
    out = []
    for picks in product(*per_comp):
        eta = {}
        for comp, e in picks:
            for a in comp:
                # naturality along the tree path p: eta_a = G(p) ∘ eta_root ∘ F(p)^{-1}
                p = paths[a]
                eta[a] = D.compose_path(D.inverse(F.arr(p)), e, G.arr(p))
        alpha = NatTransform(F, G, eta)
        if not nat_violations(alpha):
            out.append(alpha)
    return out


__all__ = [
    "FiniteCategory", "FiniteGroupoid", "GroupoidFunctor", "NatTransform", "ValidationError",
    "category_violations", "validate_category", "groupoid_violations", "validate_groupoid",
    "make_groupoid", "discrete_groupoid", "group_groupoid", "pair_groupoid", "action_groupoid",
    "disjoint_union", "product_groupoid", "components_and_isotropy", "is_transitive",
    "functor_violations", "validate_functor", "identity_functor", "compose_functors",
    "nat_violations", "validate_nat", "identity_nat", "vcomp", "hcomp", "whisker_left",
    "whisker_right", "is_equivalence", "functors_between", "nat_transforms_between", "relabel",
    "groupoid_table_violations",
]

"""Finite sites, groupoid-valued presheaves, descent groupoids, stack checks.

The base category for descent is finite sets.  A covering of ``U`` is a
tuple of ``SetMap`` with codomain ``U``.  Fiber products are sets of pairs
(triples for triple overlaps) in lexicographic index order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations, product
from math import prod
from typing import NamedTuple

from ._unionfind import UnionFind
from .actions import pullback_bundle, trivial_bundle
from .core import FiniteCategory, FiniteGroupoid, GroupoidFunctor, discrete_groupoid, is_equivalence
from .errors import CapExceeded, Violation, raise_if


# ------------------------------------------------------------------ set maps

@dataclass(frozen=True)
class SetMap:
    domain: tuple
    codomain: tuple
    images: tuple

    def __post_init__(self):
        if len(self.images) != len(self.domain):
            raise ValueError("one image per domain element")

    @cached_property
    def _index(self):
        return {x: i for i, x in enumerate(self.domain)}

    def __call__(self, x):
        return self.images[self._index[x]]

    def then(self, g):
        """``g ∘ self``."""
        return SetMap(self.domain, g.codomain, tuple(g(y) for y in self.images))

    def is_surjective(self):
        return set(self.images) >= set(self.codomain)

    def fiber(self, y):
        return tuple(x for x, fx in zip(self.domain, self.images) if fx == y)

    @staticmethod
    def identity(S):
        S = tuple(S)
        return SetMap(S, S, S)

    @staticmethod
    def from_dict(mapping, codomain, domain=None):
        domain = tuple(mapping) if domain is None else tuple(domain)
        return SetMap(domain, tuple(codomain), tuple(mapping[x] for x in domain))

    @staticmethod
    def inclusion(sub, U):
        sub = tuple(sub)
        return SetMap(sub, tuple(U), sub)


def set_pullback(f, g):
    """``A ×_C B = {(a, b) : f(a) == g(b)}`` with its two projections."""
    if f.codomain != g.codomain:
        raise ValueError("maps must share a codomain")
    P = tuple((a, b) for a in f.domain for b in g.domain if f(a) == g(b))
    return P, SetMap(P, f.domain, tuple(p[0] for p in P)), SetMap(P, g.domain, tuple(p[1] for p in P))


def all_maps(A, B):
    A, B = tuple(A), tuple(B)
    return [SetMap(A, B, imgs) for imgs in product(B, repeat=len(A))]


def jointly_surjective(family, U):
    hit = set()
    for f in family:
        hit.update(f.images)
    return hit >= set(U)


# --------------------------------------------------------------------- sites

class FinSetSite:
    """Finite sets with jointly surjective families as coverings.

    The covering predicate is exact for any finite sets; ``cap``,
    ``max_parts`` and ``max_domain`` only bound the enumeration used when the
    axioms are checked.
    """

    def __init__(self, cap=3, max_parts=2, max_domain=2):
        self.cap, self.max_parts, self.max_domain = cap, max_parts, max_domain

    def objects(self):
        return [tuple(range(n)) for n in range(self.cap + 1)]

    def arrows_into(self, U):
        return [f for V in self.objects() for f in all_maps(V, U)]

    def is_covering(self, family, U):
        return all(f.codomain == tuple(U) for f in family) and jointly_surjective(family, U)

    def coverings(self, U):
        U = tuple(U)
        maps = [f for m in range(self.max_domain + 1) for f in all_maps(range(m), U)]
        out = []
        for k in range(self.max_parts + 1):
            for fam in product(maps, repeat=k):
                if jointly_surjective(fam, U):
                    out.append(fam)
        return out

    def isomorphisms_into(self, U):
        U = tuple(U)
        return [SetMap(tuple(range(len(U))), U, perm) for perm in permutations(U)]

    def pullback(self, g, f):
        return set_pullback(g, f)

    @staticmethod
    def compose(f, g):
        return f.then(g)


class ExplicitSite:
    """A finite category with chosen pullbacks and an explicit list of coverings.

    ``pullbacks[(g, f)] = (P, p1, p2)`` with ``p1: P -> dom g`` and
    ``p2: P -> dom f``; ``coverings[U]`` is a list of tuples of arrows into U.
    """

    def __init__(self, category, pullbacks, coverings):
        self.category = category
        self.pullbacks = dict(pullbacks)
        self.covers = {U: [tuple(fam) for fam in fams] for U, fams in coverings.items()}
        self._cover_sets = {U: {frozenset(fam) for fam in fams} for U, fams in self.covers.items()}

    def objects(self):
        return list(self.category.objects)

    def arrows_into(self, U):
        return list(self.category.in_arrows(U))

    def is_covering(self, family, U):
        return frozenset(family) in self._cover_sets.get(U, set())

    def coverings(self, U):
        return self.covers.get(U, [])

    def isomorphisms_into(self, U):
        C = self.category
        return [f for f in C.in_arrows(U)
                if any(C.compose(f, g) == C.identity(C.source(f)) and C.compose(g, f) == C.identity(U)
                       for g in C.hom(U, C.source(f)))]

    def pullback(self, g, f):
        return self.pullbacks[g, f]

    def compose(self, f, g):
        return self.category.compose(f, g)


def _dom(site, f):
    return f.domain if isinstance(f, SetMap) else site.category.source(f)


def site_violations(site):
    found = []
    for U in site.objects():
        for f in site.isomorphisms_into(U):
            if not site.is_covering((f,), U):
                found.append(Violation("IsoCoveringMissing", (U, f)))
    if isinstance(site, ExplicitSite):
        found += _pullback_square_violations(site)
    for U in site.objects():
        covers = site.coverings(U)
        for fam in covers:
            for choice in product(*[site.coverings(_dom(site, f)) for f in fam]):
                composite = tuple(site.compose(h, f) for f, sub in zip(fam, choice) for h in sub)
                if not site.is_covering(composite, U):
                    found.append(Violation("CompositionNotCovering", (fam, choice)))
            for g in site.arrows_into(U):
                pulled = tuple(site.pullback(g, f)[1] for f in fam)
                if not site.is_covering(pulled, _dom(site, g)):
                    found.append(Violation("PullbackNotCovering", (fam, g, pulled)))
    return found


def _pullback_square_violations(site):
    C = site.category
    found = []
    for (g, f), (P, p1, p2) in site.pullbacks.items():
        if C.compose(p1, g) != C.compose(p2, f):
            found.append(Violation("NotAPullback", (g, f), "square does not commute"))
            continue
        for X in C.objects:
            for a in C.hom(X, C.source(g)):
                for b in C.hom(X, C.source(f)):
                    if C.compose(a, g) != C.compose(b, f):
                        continue
                    us = [u for u in C.hom(X, P) if C.compose(u, p1) == a and C.compose(u, p2) == b]
                    if len(us) != 1:
                        found.append(Violation("NotAPullback", (g, f, a, b), f"{len(us)} mediating arrows"))
    return found


def validate_site(site):
    raise_if("site", site_violations(site))
    return site


def poset_site(opens):
    """Open sets of a finite space: inclusions as arrows, intersections as pullbacks,
    families with union ``U`` as coverings."""
    opens = [frozenset(o) for o in opens]
    objs = sorted(set(opens), key=lambda s: (len(s), sorted(s)))
    mors = [(a, b) for a in objs for b in objs if a <= b]
    cat = FiniteCategory(objs, mors, {m: m[0] for m in mors}, {m: m[1] for m in mors},
                         lambda f, g: (f[0], g[1]), {a: (a, a) for a in objs})
    pullbacks = {}
    for (v, u) in mors:
        for (w, u2) in mors:
            if u2 == u:
                p = v & w
                if p not in cat._object_index:
                    raise ValueError("opens must be closed under intersection")
                pullbacks[(v, u), (w, u)] = (p, (p, v), (p, w))
    coverings = {}
    for U in objs:
        subs = [o for o in objs if o <= U]
        fams = []
        for k in range(len(subs) + 1):
            for combo in combinations(subs, k):
                if frozenset().union(*combo) == U:
                    fams.append(tuple((o, U) for o in combo))
        coverings[U] = fams
    return ExplicitSite(cat, pullbacks, coverings)


# ---------------------------------------------------------------- presheaves

class GroupoidPresheaf:
    """Pseudo-functor from finite sets to finite groupoids.

    Subclasses supply ``_value(U)`` and ``_restrict(f)``; non-strict ones
    also override ``alpha`` and ``epsilon``.  ``alpha(f, g, x)`` is the arrow
    ``f*g*x -> (g∘f)*x`` in ``F(dom f)``; ``epsilon(U, x)`` is
    ``(1_U)*x -> x``.
    """

    strict = True
    pointwise = False

    def __init__(self):
        self._values, self._restrictions = {}, {}

    def value(self, U):
        U = tuple(U)
        if U not in self._values:
            self._values[U] = self._value(U)
        return self._values[U]

    def restrict(self, f):
        if f not in self._restrictions:
            self._restrictions[f] = self._restrict(f)
        return self._restrictions[f]

    def alpha(self, f, g, x):
        return self.value(f.domain).identity(self.restrict(f.then(g)).obj(x))

    def epsilon(self, U, x):
        return self.value(U).identity(x)


class PowerGroupoid(FiniteGroupoid):
    """``K^U``: objects and arrows are tuples indexed by the points of ``U``."""

    def __init__(self, K, n):
        objs = list(product(K.objects, repeat=n))
        mors = list(product(K.morphisms, repeat=n))
        super().__init__(
            objs, mors,
            {m: tuple(K.source(x) for x in m) for m in mors},
            {m: tuple(K.target(x) for x in m) for m in mors},
            lambda f, g: tuple(K.compose(a, b) for a, b in zip(f, g)),
            {c: tuple(K.identity(a) for a in c) for c in objs},
            {m: tuple(K.inverse(x) for x in m) for m in mors},
        )
        self.base = K


class PointwisePresheaf(GroupoidPresheaf):
    """``U -> K^U`` with restriction by precomposition (strict)."""

    pointwise = True

    def __init__(self, K, size_cap=None):
        super().__init__()
        self.K = K
        self.size_cap = size_cap

    def _value(self, U):
        if self.size_cap is not None and len(U) > self.size_cap:
            raise CapExceeded(f"set of size {len(U)} exceeds cap {self.size_cap}")
        return PowerGroupoid(self.K, len(U))

    def _restrict(self, f):
        pos = {u: i for i, u in enumerate(f.codomain)}
        idx = tuple(pos[y] for y in f.images)
        return GroupoidFunctor(
            self.value(f.codomain), self.value(f.domain),
            lambda c: tuple(c[i] for i in idx), lambda m: tuple(m[i] for i in idx),
        )


class BGPresheaf(PointwisePresheaf):
    """Principal ``G``-bundles over finite sets.

    Each bundle over ``U`` is isomorphic to a unique standard one: the
    pull-back of ``t: G1 -> G0`` along some ``c: U -> G0``.  Objects of
    ``F(U)`` are these maps ``c``; an arrow ``c -> c'`` is a family of arrows
    ``c(u) -> c'(u)``.  Pulling a standard bundle back gives a standard bundle
    on the nose, so restriction is strict.
    """

    def __init__(self, G, size_cap=4):
        super().__init__(G, size_cap)
        self.G = G

    def bundle_of(self, U, c):
        U = tuple(U)
        return pullback_bundle(trivial_bundle(self.G), dict(zip(U, c)), U)

    def bundle_map(self, U, delta):
        """Carrier map of the bundle isomorphism given by a family of arrows."""
        G = self.G
        src = tuple(G.source(d) for d in delta)
        pos = {u: i for i, u in enumerate(U)}
        return {(u, g): (u, G.compose(g, delta[pos[u]]))
                for (u, g) in self.bundle_of(U, src).carrier}


def bg_presheaf(G, size_cap=4):
    return BGPresheaf(G, size_cap)


class ConstantPresheaf(GroupoidPresheaf):
    def __init__(self, K):
        super().__init__()
        self.K = K

    def _value(self, U):
        return self.K

    def _restrict(self, f):
        return GroupoidFunctor(self.K, self.K, lambda a: a, lambda m: m)


class GloballyConstantPresheaf(GroupoidPresheaf):
    """Constant maps ``U -> X`` as a discrete groupoid; not local on
    disconnected covers."""

    def __init__(self, X):
        super().__init__()
        self.X = tuple(X)

    def _value(self, U):
        if not U:
            return discrete_groupoid([()])
        return discrete_groupoid([(x,) * len(U) for x in self.X])

    def _restrict(self, f):
        n = len(f.domain)
        return GroupoidFunctor(self.value(f.codomain), self.value(f.domain),
                               lambda c: (c[0],) * n if c else (), lambda c: (c[0],) * n if c else ())


class TwistedPresheaf(PointwisePresheaf):
    """``K^U`` with coherence isomorphisms twisted by a central family ``z``.

    ``z[a]`` is an automorphism of ``a`` commuting with every arrow.  With an
    integer weight ``b`` on set maps, ``alpha_{f,g}`` is ``z`` to the power
    ``b(f) + b(g) - b(g∘f)`` and ``epsilon_U`` is ``z`` to the power
    ``b(1_U)``, so the coherence laws hold while the isomorphisms are not
    identities.
    """

    strict = False
    pointwise = False

    def __init__(self, K, z, order, weight=None):
        super().__init__(K)
        self.z, self.order = dict(z), order
        self.weight = weight or _default_weight

    def _zpow(self, a, e):
        K = self.K
        out = K.identity(a)
        for _ in range(e % self.order):
            out = K.compose(out, self.z[a])
        return out

    def alpha(self, f, g, x):
        e = self.weight(f) + self.weight(g) - self.weight(f.then(g))
        y = self.restrict(f.then(g)).obj(x)
        return tuple(self._zpow(a, e) for a in y)

    def epsilon(self, U, x):
        return tuple(self._zpow(a, self.weight(SetMap.identity(U))) for a in x)


def _default_weight(f):
    pos = {u: i for i, u in enumerate(f.codomain)}
    return len(f.domain) + 2 * len(f.codomain) + sum(pos[y] for y in f.images)


def presheaf_violations(P, sets):
    """Pseudo-functor coherence over every map between the given sets."""
    sets = [tuple(S) for S in sets]
    maps = [f for A in sets for B in sets for f in all_maps(A, B)]
    found = []
    for f in maps:
        V, U = f.codomain, f.domain
        FV, FU = P.value(V), P.value(U)
        one_V, one_U = SetMap.identity(V), SetMap.identity(U)
        for x in FV.objects:
            if P.alpha(f, one_V, x) != P.restrict(f).arr(P.epsilon(V, x)):
                found.append(Violation("UnitCoherence", (f, x), "alpha(f, 1) != f*(epsilon)"))
            if P.alpha(one_U, f, x) != P.epsilon(U, P.restrict(f).obj(x)):
                found.append(Violation("UnitCoherence", (f, x), "alpha(1, f) != epsilon(f*)"))
    for f in maps:
        for g in (g for g in maps if g.domain == f.codomain):
            for h in (h for h in maps if h.domain == g.codomain):
                FU = P.value(f.domain)
                for x in P.value(h.codomain).objects:
                    lhs = FU.compose(P.alpha(f, g, P.restrict(h).obj(x)), P.alpha(f.then(g), h, x))
                    rhs = FU.compose(P.restrict(f).arr(P.alpha(g, h, x)), P.alpha(f, g.then(h), x))
                    if lhs != rhs:
                        found.append(Violation("AssociativityCoherence", (f, g, h, x)))
    return found


# ------------------------------------------------------------------- descent

class DescentDatum(NamedTuple):
    sections: tuple
    transitions: tuple  # aligned with Cover.pairs


class Cover:
    """Overlaps of a covering ``σ_i: U_i -> U`` of finite sets."""

    def __init__(self, maps, U=None):
        self.maps = tuple(maps)
        if U is None:
            if not self.maps:
                raise ValueError("pass U for the empty covering")
            U = self.maps[0].codomain
        self.U = tuple(U)
        for f in self.maps:
            if f.codomain != self.U:
                raise ValueError("every covering map must land in U")
        n = len(self.maps)
        self.pairs = [(i, j) for i in range(n) for j in range(n)]
        self.pair_index = {p: k for k, p in enumerate(self.pairs)}
        self.overlap = {}
        for (i, j) in self.pairs:
            self.overlap[i, j] = set_pullback(self.maps[i], self.maps[j])
        self.triples = {}
        for i, j, k in product(range(n), repeat=3):
            Uij, Ujk, Uik = self.overlap[i, j][0], self.overlap[j, k][0], self.overlap[i, k][0]
            fi, fj, fk = self.maps[i], self.maps[j], self.maps[k]
            T = tuple((x, y, z) for x in fi.domain for y in fj.domain for z in fk.domain
                      if fi(x) == fj(y) == fk(z))
            self.triples[i, j, k] = (
                T,
                SetMap(T, Uij, tuple((t[0], t[1]) for t in T)),
                SetMap(T, Ujk, tuple((t[1], t[2]) for t in T)),
                SetMap(T, Uik, tuple((t[0], t[2]) for t in T)),
            )

    def __len__(self):
        return len(self.maps)


class DescentGroupoid(FiniteGroupoid):
    """The descent groupoid of a presheaf over a covering, built lazily.

    Objects are cocycle data.  An arrow is ``(X, thetas)`` with
    ``thetas[i]: s_i -> t_i``; its target has transitions
    ``pr1*(θ_i) ∘ φ_ij ∘ pr2*(θ_j)⁻¹``.
    """

    def __init__(self, presheaf, cover):
        self.P = presheaf
        self.cover = cover if isinstance(cover, Cover) else Cover(cover)
        c = self.cover
        self.parts = [presheaf.value(f.domain) for f in c.maps]
        self.overlaps = {p: presheaf.value(c.overlap[p][0]) for p in c.pairs}
        self.pr = {p: (presheaf.restrict(c.overlap[p][1]), presheaf.restrict(c.overlap[p][2])) for p in c.pairs}

    def __repr__(self):
        return f"DescentGroupoid({len(self.cover)} parts)"

    # ------------------------------------------------------------ cocycles
    def _corrected(self, phi, a, b, r, sections):
        """Pull ``φ_ab`` back along ``r: T -> U_ab`` and move it onto
        ``q_b* s_b -> q_a* s_a`` using the coherence isomorphisms."""
        P, c = self.P, self.cover
        _, pr1, pr2 = c.overlap[a, b]
        FT = P.value(r.domain)
        x = P.restrict(r).arr(phi)
        if P.strict:
            return x
        return FT.compose_path(FT.inverse(P.alpha(r, pr2, sections[b])), x, P.alpha(r, pr1, sections[a]))

    def cocycle_failures(self, sections, transitions):
        """Triples ``(i, j, k)`` where the cocycle law fails."""
        c = self.cover
        phi = dict(zip(c.pairs, transitions))
        return [t for t in c.triples if not self._cocycle_at(t, sections, phi)]

    def _cocycle_at(self, t, sections, phi):
        i, j, k = t
        T, p12, p23, p13 = self.cover.triples[t]
        FT = self.P.value(T)
        lhs = self._corrected(phi[i, k], i, k, p13, sections)
        rhs = FT.compose(self._corrected(phi[j, k], j, k, p23, sections),
                         self._corrected(phi[i, j], i, j, p12, sections))
        return lhs == rhs

    @cached_property
    def objects(self):
        c = self.cover
        n = len(c)
        # triples to test once the pair with the largest index is assigned
        due = {p: [] for p in c.pairs}
        for t in c.triples:
            i, j, k = t
            last = max(c.pair_index[i, j], c.pair_index[j, k], c.pair_index[i, k])
            due[c.pairs[last]].append(t)
        out = []
        for sections in product(*[F.objects for F in self.parts]):
            options = []
            for (i, j) in c.pairs:
                F = self.overlaps[i, j]
                pr1, pr2 = self.pr[i, j]
                options.append(F.hom(pr2.obj(sections[j]), pr1.obj(sections[i])))
            phi = {}

            def extend(k):
                if k == len(c.pairs):
                    out.append(DescentDatum(sections, tuple(phi[p] for p in c.pairs)))
                    return
                p = c.pairs[k]
                for x in options[k]:
                    phi[p] = x
                    if all(self._cocycle_at(t, sections, phi) for t in due[p]):
                        extend(k + 1)
                del phi[p]

            if n == 0:
                out.append(DescentDatum((), ()))
            elif all(options):
                extend(0)
        return out

    # ------------------------------------------------------------ structure
    def source(self, m):
        return m[0]

    def target(self, m):
        X, thetas = m
        c = self.cover
        trans = []
        for (i, j), phi in zip(c.pairs, X.transitions):
            F = self.overlaps[i, j]
            pr1, pr2 = self.pr[i, j]
            trans.append(F.compose_path(F.inverse(pr2.arr(thetas[j])), phi, pr1.arr(thetas[i])))
        return DescentDatum(tuple(F.target(t) for F, t in zip(self.parts, thetas)), tuple(trans))

    def identity(self, X):
        return (X, tuple(F.identity(s) for F, s in zip(self.parts, X.sections)))

    def inverse(self, m):
        return (self.target(m), tuple(F.inverse(t) for F, t in zip(self.parts, m[1])))

    def compose(self, f, g):
        return (f[0], tuple(F.compose(a, b) for F, a, b in zip(self.parts, f[1], g[1])))

    def out_arrows(self, X):
        return [(X, th) for th in product(*[F.out_arrows(s) for F, s in zip(self.parts, X.sections)])]

    def hom(self, X, Y):
        return [m for m in self.out_arrows(X) if self.target(m) == Y]

    def in_arrows(self, Y):
        return [m for X in self.objects for m in self.hom(X, Y)]

    def automorphisms(self, X):
        return self.hom(X, X)

    def automorphism_count(self, X):
        k = self._components[1][X]
        return prod(len(F.out_arrows(s)) for F, s in zip(self.parts, X.sections)) // len(self._components[0][k])

    @cached_property
    def morphisms(self):
        return [m for X in self.objects for m in self.out_arrows(X)]

    @cached_property
    def src(self):
        return {m: m[0] for m in self.morphisms}

    @cached_property
    def tgt(self):
        return {m: self.target(m) for m in self.morphisms}

    @cached_property
    def ident(self):
        return {X: self.identity(X) for X in self.objects}

    @cached_property
    def inv(self):
        return {m: self.inverse(m) for m in self.morphisms}

    def _mul(self, f, g):
        return self.compose(f, g)

    @cached_property
    def _components(self):
        uf = UnionFind(self.objects)
        for X in self.objects:
            base = [F.identity(s) for F, s in zip(self.parts, X.sections)]
            for i, (F, s) in enumerate(zip(self.parts, X.sections)):
                for a in F.out_arrows(s):
                    th = list(base)
                    th[i] = a
                    uf.union(X, self.target((X, tuple(th))))
        comps = [tuple(c) for c in uf.classes()]
        return comps, {X: k for k, c in enumerate(comps) for X in c}

    def materialize(self):
        """An explicit ``FiniteGroupoid`` with the same tables."""
        mors = self.morphisms
        return FiniteGroupoid(self.objects, mors, self.src, self.tgt,
                              {(f, g): self.compose(f, g) for f in mors for g in self.out_arrows(self.target(f))},
                              self.ident, self.inv)


def descent_category(P, cover):
    return DescentGroupoid(P, cover)


def comparison_functor(P, cover, desc=None):
    """``F(U) -> Desc``: ``s -> ({σ_i* s}, α_{pr1,σ_i}(s)⁻¹ ∘ α_{pr2,σ_j}(s))``."""
    desc = desc or DescentGroupoid(P, cover)
    c = desc.cover
    FU = P.value(c.U)
    sigma = [P.restrict(f) for f in c.maps]

    def obj(s):
        trans = []
        for (i, j) in c.pairs:
            F = desc.overlaps[i, j]
            _, pr1, pr2 = c.overlap[i, j]
            if P.strict:
                trans.append(F.identity(desc.pr[i, j][1].obj(sigma[j].obj(s))))
            else:
                trans.append(F.compose(P.alpha(pr2, c.maps[j], s), F.inverse(P.alpha(pr1, c.maps[i], s))))
        return DescentDatum(tuple(r.obj(s) for r in sigma), tuple(trans))

    def arr(m):
        return (obj(FU.source(m)), tuple(r.arr(m) for r in sigma))

    return GroupoidFunctor(FU, desc, obj, arr)


@dataclass
class StackReport:
    full: bool
    faithful: bool
    ess_surjective: bool
    witness: object = None
    method: str = "generic"
    details: list = field(default_factory=list)

    @property
    def holds(self):
        return self.full and self.faithful and self.ess_surjective

    def __bool__(self):
        return self.holds

    def verdict(self):
        return {"full": self.full, "faithful": self.faithful,
                "ess_surjective": self.ess_surjective, "stack": self.holds}


def _generic_stack(P, cover):
    desc = DescentGroupoid(P, cover)
    F = comparison_functor(P, cover, desc)
    r = is_equivalence(F)
    witness = None
    if not r["ess_surjective"]:
        hit = {desc.component_index(F.obj(a)) for a in F.source.objects}
        witness = next(c[0] for k, c in enumerate(desc.components()) if k not in hit)
    return StackReport(r["full"], r["faithful"], r["ess_surjective"], witness, "generic")


_POINT = (0,)


def fiber_cover(cover, u):
    """The covering of a point by the fibers of each ``σ_i`` over ``u``."""
    return Cover([SetMap(tuple(range(len(f.fiber(u)))), _POINT, (0,) * len(f.fiber(u))) for f in cover.maps], _POINT)


def check_stack_condition(P, cover, method="auto", _memo=None):
    """Whether the comparison functor ``F(U) -> Desc`` is an equivalence.

    For pointwise presheaves ``U -> K^U`` both sides split as products over
    the points of ``U`` (the descent groupoid into the descent groupoids of
    the fiber coverings), and the check runs point by point, memoized on
    the fiber sizes.  ``method="generic"`` always builds the whole descent
    groupoid.
    """
    cover = cover if isinstance(cover, Cover) else Cover(cover)
    if method == "generic" or not getattr(P, "pointwise", False):
        return _generic_stack(P, cover)
    K = P.K
    if not K.objects and cover.U:
        covered = any(f.fiber(u) for u in cover.U for f in cover.maps)
        return StackReport(True, True, covered, None if covered else cover.U[0], "pointwise")
    memo = {} if _memo is None else _memo
    full = faithful = ess = True
    witness, details = None, []
    for u in cover.U:
        key = tuple(len(f.fiber(u)) for f in cover.maps)
        if key not in memo:
            local = PointwisePresheaf(K)
            memo[key] = _generic_stack(local, fiber_cover(cover, u))
        r = memo[key]
        details.append((u, key, r.verdict()))
        if not r.holds and witness is None:
            witness = (u, key, r.witness)
        full, faithful, ess = full and r.full, faithful and r.faithful, ess and r.ess_surjective
    return StackReport(full, faithful, ess, witness, "pointwise", details)


def subset_covers(U, max_parts=3):
    """Families of at most ``max_parts`` distinct subsets of ``U`` whose union is ``U``,
    as tuples of inclusions."""
    U = tuple(U)
    subsets = [tuple(x for k, x in enumerate(U) if mask >> k & 1) for mask in range(1 << len(U))]
    out = []
    for k in range(max_parts + 1):
        for combo in combinations(subsets, k):
            if set().union(*map(set, combo)) == set(U):
                out.append(tuple(SetMap.inclusion(s, U) for s in combo))
    return out


__all__ = [
    "SetMap", "set_pullback", "all_maps", "jointly_surjective", "FinSetSite", "ExplicitSite",
    "site_violations", "validate_site", "poset_site", "GroupoidPresheaf", "PowerGroupoid",
    "PointwisePresheaf", "BGPresheaf", "bg_presheaf", "ConstantPresheaf",
    "GloballyConstantPresheaf", "TwistedPresheaf", "presheaf_violations", "DescentDatum",
    "Cover", "DescentGroupoid", "descent_category", "comparison_functor", "StackReport",
    "check_stack_condition", "fiber_cover", "subset_covers",
]

"""Groupoid actions on finite sets and principal groupoid bundles.

Right action: ``p·γ`` is defined when ``tgt(γ) == anchor(p)`` and lands over
``src(γ)``, so ``(p·γ)·γ' == p·(γ∘γ')``.  Left action: ``γ·p`` is defined
when ``src(γ) == anchor(p)`` and lands over ``tgt(γ)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ._search import find_equivariant_bijection
from ._unionfind import UnionFind
from .core import FiniteGroupoid, group_groupoid
from .errors import ValidationError, Violation, raise_if

LEFT, RIGHT = "left", "right"


class GroupoidAction:
    """``table`` is keyed ``(p, γ)`` for right actions and ``(γ, p)`` for left ones."""

    def __init__(self, groupoid, carrier, anchor, table, side=RIGHT):
        if side not in (LEFT, RIGHT):
            raise ValueError(side)
        self.groupoid = groupoid
        self.carrier = tuple(carrier)
        self.anchor = dict(anchor)
        self.table = dict(table)
        self.side = side

    def __repr__(self):
        return f"GroupoidAction({self.side}, |P|={len(self.carrier)})"

    def act(self, p, g):
        """``p·g`` for a right action, ``g·p`` for a left one; None if undefined."""
        return self.table.get((p, g) if self.side == RIGHT else (g, p))

    def acting_arrows(self, p):
        """Arrows that may act on ``p``."""
        G = self.groupoid
        if self.side == RIGHT:
            return G.in_arrows(self.anchor[p])
        return G.out_arrows(self.anchor[p])

    @cached_property
    def index(self):
        return {p: i for i, p in enumerate(self.carrier)}

    def orbits(self):
        uf = UnionFind(self.carrier)
        for k, q in self.table.items():
            p = k[0] if self.side == RIGHT else k[1]
            uf.union(p, q)
        return [tuple(c) for c in uf.classes()]

    def as_right(self):
        """Right action ``p·γ := γ⁻¹·p`` (identity if already right)."""
        if self.side == RIGHT:
            return self
        G = self.groupoid
        table = {(p, G.inverse(g)): q for (g, p), q in self.table.items()}
        return GroupoidAction(G, self.carrier, self.anchor, table, RIGHT)

    def __eq__(self, other):
        if not isinstance(other, GroupoidAction):
            return NotImplemented
        return (self.side, self.carrier, self.anchor, self.table) == \
               (other.side, other.carrier, other.anchor, other.table) and self.groupoid == other.groupoid

    __hash__ = object.__hash__


def action_violations(groupoid, carrier, anchor, table, side=RIGHT):
    G = groupoid
    carrier = tuple(carrier)
    cset = set(carrier)
    found = []
    for p in carrier:
        if anchor.get(p) not in G._object_index:
            found.append(Violation("DanglingIndex", ("anchor", p)))
    if found:
        return found
    act = GroupoidAction(G, carrier, anchor, table, side)
    for k, q in table.items():
        g, p = (k[1], k[0]) if side == RIGHT else k
        if p not in cset or q not in cset or g not in G.src:
            found.append(Violation("DanglingIndex", ("act",) + tuple(k)))
        elif (G.target(g) if side == RIGHT else G.source(g)) != anchor[p]:
            found.append(Violation("DanglingIndex", ("act",) + tuple(k), "entry on a non-composable pair"))
    for p in carrier:
        for g in act.acting_arrows(p):
            if act.act(p, g) is None:
                found.append(Violation("DanglingIndex", (p, g), "action undefined on a composable pair"))
    if found:
        return found

    for p in carrier:
        if act.act(p, G.identity(anchor[p])) != p:
            found.append(Violation("IdentityLawFail", (p,)))
    for p in carrier:
        for g in act.acting_arrows(p):
            q = act.act(p, g)
            want = G.source(g) if side == RIGHT else G.target(g)
            if anchor[q] != want:
                found.append(Violation("AnchorShiftFail", (p, g)))
                continue
            for h in act.acting_arrows(q):
                # right: (p·g)·h = p·(g∘h) where h runs first; left: h·(g·p) = (h∘g)·p
                gh = G.compose(h, g) if side == RIGHT else G.compose(g, h)
                if act.act(q, h) != act.act(p, gh):
                    found.append(Violation("AssocFail", (p, g, h)))
    return found


def validate_action(groupoid, carrier, anchor, table, side=RIGHT):
    raise_if("action", action_violations(groupoid, carrier, anchor, table, side))
    return GroupoidAction(groupoid, carrier, anchor, table, side)


def composition_action(G):
    """``G`` acting on its own arrows from the right by precomposition.

    The anchor is ``src``; ``p·γ = p∘γ``.
    """
    table = {(p, g): G.compose(g, p) for p in G.morphisms for g in G.in_arrows(G.source(p))}
    return GroupoidAction(G, G.morphisms, dict(G.src), table, RIGHT)


def left_composition_action(G):
    """``G`` acting on its arrows from the left by postcomposition; anchor ``tgt``."""
    table = {(g, p): G.compose(p, g) for p in G.morphisms for g in G.out_arrows(G.target(p))}
    return GroupoidAction(G, G.morphisms, dict(G.tgt), table, LEFT)


def action_along(G, carrier, anchor):
    """A discrete groupoid acting through a map ``P -> G0`` (only identities act)."""
    table = {}
    for p in carrier:
        e = G.identity(anchor[p])
        table[p, e] = p
    return GroupoidAction(G, carrier, anchor, table, RIGHT)


# ------------------------------------------------------------ principal bundles

@dataclass(frozen=True, eq=False)
class PrincipalGroupoidBundle:
    action: GroupoidAction
    proj: dict
    base: tuple

    @property
    def groupoid(self):
        return self.action.groupoid

    @property
    def carrier(self):
        return self.action.carrier

    @property
    def anchor(self):
        return self.action.anchor

    def act(self, p, g):
        return self.action.act(p, g)

    @cached_property
    def _division(self):
        inv = {}
        for p in self.carrier:
            for g in self.action.acting_arrows(p):
                inv[self.act(p, g), p] = g
        return inv

    def delta(self, p, q):
        """The unique arrow ``γ`` with ``p·γ == q`` (same fiber required)."""
        return self._division[q, p]

    def fiber(self, m):
        return [p for p in self.carrier if self.proj[p] == m]

    def __eq__(self, other):
        if not isinstance(other, PrincipalGroupoidBundle):
            return NotImplemented
        return self.action == other.action and self.proj == other.proj and self.base == other.base

    __hash__ = object.__hash__


def principal_violations(action, proj, base):
    base = tuple(base)
    found = []
    if action.side != RIGHT:
        return [Violation("NotRightAction", ())]
    bset = set(base)
    for p in action.carrier:
        if proj.get(p) not in bset:
            found.append(Violation("DanglingIndex", ("proj", p)))
    if found:
        return found
    image = {}
    for p in action.carrier:
        for g in action.acting_arrows(p):
            q = action.act(p, g)
            if proj[q] != proj[p]:
                found.append(Violation("NotInvariant", (p, g)))
            pair = (q, p)
            if pair in image:
                found.append(Violation("DivisionNotInjective", ((p, image[pair]), (p, g)),
                                       f"both land on {pair!r}"))
            else:
                image[pair] = g
    for p in action.carrier:
        for q in action.carrier:
            if proj[p] == proj[q] and (q, p) not in image:
                found.append(Violation("DivisionNotSurjective", (q, p), "pair not of the form (p·γ, p)"))
    hit = {proj[p] for p in action.carrier}
    for m in base:
        if m not in hit:
            found.append(Violation("ProjNotSurjective", (m,)))
    return found


def validate_principal_bundle(action, proj, base):
    if action.side == LEFT:
        action = action.as_right()
    raise_if("principal bundle", principal_violations(action, proj, base))
    return PrincipalGroupoidBundle(action, dict(proj), tuple(base))


def is_principal(action, proj, base):
    if action.side == LEFT:
        action = action.as_right()
    return not principal_violations(action, proj, base)


def trivial_bundle(G):
    """``t: G1 -> G0`` with ``G`` acting by precomposition."""
    return PrincipalGroupoidBundle(composition_action(G), dict(G.tgt), G.objects)


def product_bundle(base, group):
    """``M × G -> M`` for a group ``G`` acting on the right factor."""
    GG = group_groupoid(group)
    carrier = [(m, g) for m in base for g in group.elements]
    table = {((m, g), h): (m, group.mul(g, h)) for (m, g) in carrier for h in group.elements}
    action = GroupoidAction(GG, carrier, {p: "*" for p in carrier}, table, RIGHT)
    return PrincipalGroupoidBundle(action, {p: p[0] for p in carrier}, tuple(base))


def pullback_bundle(bundle, f, domain=None):
    """Pull back along ``f: N -> M`` (a dict, or a callable with ``domain`` given).

    The carrier is ``{(n, p) : f(n) == π(p)}`` in lexicographic index order.
    """
    if domain is None:
        domain = tuple(f)
    fmap = f if callable(f) else f.__getitem__
    carrier = [(n, p) for n in domain for p in bundle.carrier if bundle.proj[p] == fmap(n)]
    anchor = {(n, p): bundle.anchor[p] for (n, p) in carrier}
    table = {}
    for (n, p) in carrier:
        for g in bundle.action.acting_arrows(p):
            table[(n, p), g] = (n, bundle.act(p, g))
    action = GroupoidAction(bundle.groupoid, carrier, anchor, table, RIGHT)
    return PrincipalGroupoidBundle(action, {x: x[0] for x in carrier}, tuple(domain))


def find_bundle_isomorphism(b1, b2):
    """Equivariant bijection over the identity of the base, or None."""
    if b1.base != b2.base or not (b1.groupoid is b2.groupoid or b1.groupoid == b2.groupoid):
        return None
    # the two carriers may share labels, so points are tagged by side
    moves = [(_mover(b1, g, 1), _mover(b2, g, 2)) for g in b1.groupoid.morphisms]

    def key(x):
        b = b1 if x[0] == 1 else b2
        return (b.proj[x[1]], b.anchor[x[1]])

    phi = find_equivariant_bijection([(1, p) for p in b1.carrier], [(2, p) for p in b2.carrier], key, moves)
    return None if phi is None else {p[1]: q[1] for p, q in phi.items()}


def _mover(bundle, g, tag):
    def move(x):
        y = bundle.act(x[1], g)
        return None if y is None else (tag, y)
    return move


# --------------------------------------------------------------- gauge groupoid

def gauge_groupoid(bundle):
    """Gauge groupoid of a principal bundle whose structure groupoid has one object.

    Morphisms are diagonal orbits ``[x1, x2]`` from ``π(x1)`` to ``π(x2)``,
    represented by the pair with the smallest carrier indices.
    """
    G = bundle.groupoid
    if len(G.objects) != 1:
        raise ValueError("gauge groupoid needs a group (one-object) structure groupoid")
    raise_if("principal bundle", principal_violations(bundle.action, bundle.proj, bundle.base))
    P, idx = bundle.carrier, bundle.action.index
    group = G.morphisms
    pairs = [(x, y) for x in P for y in P]
    uf = UnionFind(pairs, key={(x, y): (idx[x], idx[y]) for x, y in pairs})
    for (x, y) in pairs:
        for g in group:
            uf.union((x, y), (bundle.act(x, g), bundle.act(y, g)))
    rep = {pq: uf.find(pq) for pq in pairs}
    mors = [c[0] for c in uf.classes()]

    def comp(f, h):
        x1, x2 = f
        x3, x4 = h
        g = bundle.delta(x3, x2)
        return rep[x1, bundle.act(x4, g)]

    ident = {}
    for m in bundle.base:
        x = next(p for p in P if bundle.proj[p] == m)
        ident[m] = rep[x, x]
    return FiniteGroupoid(
        bundle.base, mors,
        {f: bundle.proj[f[0]] for f in mors},
        {f: bundle.proj[f[1]] for f in mors},
        comp, ident,
        {f: rep[f[1], f[0]] for f in mors},
    )


__all__ = [
    "GroupoidAction", "PrincipalGroupoidBundle", "LEFT", "RIGHT", "ValidationError",
    "action_violations", "validate_action", "composition_action", "left_composition_action",
    "action_along", "principal_violations", "validate_principal_bundle", "is_principal",
    "trivial_bundle", "product_bundle", "pullback_bundle", "find_bundle_isomorphism",
    "gauge_groupoid",
]

"""Finite groups given by multiplication tables.

Multiplication follows the groupoid convention used throughout the package:
``mul(a, b)`` is "first ``a``, then ``b``", so a group seen as a one-object
groupoid has ``comp(a, b) == mul(a, b)``.
"""

from __future__ import annotations

from itertools import permutations, product

from .errors import IsotropyTooLarge, Violation, raise_if

ISO_CAP = 64


class FiniteGroup:
    def __init__(self, elements, mul, identity=None, inverse=None, name=None):
        self.elements = tuple(elements)
        if callable(mul):
            self.table = {(a, b): mul(a, b) for a in self.elements for b in self.elements}
        else:
            self.table = dict(mul)
        if identity is None:
            identity = next(
                e for e in self.elements
                if all(self.table[e, x] == x for x in self.elements)
            )
        self.identity = identity
        if inverse is None:
            inverse = {
                a: next(b for b in self.elements if self.table[a, b] == identity)
                for a in self.elements
            }
        self.inverse = dict(inverse)
        self.name = name

    def __repr__(self):
        return f"FiniteGroup({self.name or len(self.elements)})"

    def __len__(self):
        return len(self.elements)

    @property
    def order(self):
        return len(self.elements)

    def mul(self, a, b):
        return self.table[a, b]

    def inv(self, a):
        return self.inverse[a]

    def power(self, a, k):
        x = self.identity
        for _ in range(k):
            x = self.table[x, a]
        return x

    def element_order(self, a):
        x, k = a, 1
        while x != self.identity:
            x = self.table[x, a]
            k += 1
        return k

    def is_abelian(self):
        return all(self.table[a, b] == self.table[b, a] for a in self.elements for b in self.elements)

    def closure(self, gens):
        """Subgroup generated by ``gens`` (as a frozenset)."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x, g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def generators(self):
        """Greedy generating set, preferring elements of large order."""
        gens, span = [], frozenset([self.identity])
        for a in sorted(self.elements, key=lambda x: (-self.element_order(x), self.elements.index(x))):
            if a not in span:
                gens.append(a)
                span = self.closure(gens)
            if len(span) == len(self.elements):
                break
        return gens

    def order_profile(self):
        prof = {}
        for a in self.elements:
            k = self.element_order(a)
            prof[k] = prof.get(k, 0) + 1
        return tuple(sorted(prof.items()))

    def same_table(self, other):
        return self.elements == other.elements and self.table == other.table


def group_violations(elements, table):
    elements = tuple(elements)
    found = []
    for a in elements:
        for b in elements:
            if (a, b) not in table or table[a, b] not in elements:
                found.append(Violation("NotClosed", (a, b)))
    if found:
        return found
    ids = [e for e in elements if all(table[e, x] == x == table[x, e] for x in elements)]
    if not ids:
        return [Violation("NoIdentity", ())]
    e = ids[0]
    for a in elements:
        if not any(table[a, b] == e == table[b, a] for b in elements):
            found.append(Violation("NoInverse", (a,)))
    for a, b, c in product(elements, repeat=3):
        if table[table[a, b], c] != table[a, table[b, c]]:
            found.append(Violation("NotAssociative", (a, b, c)))
            break
    return found


def validate_group(elements, table, name=None):
    """Return a ``FiniteGroup`` or raise ``ValidationError`` (NotAGroup)."""
    raise_if("group (NotAGroup)", group_violations(elements, table))
    return FiniteGroup(elements, table, name=name)


# ---------------------------------------------------------------- catalogue

def cyclic(n):
    return FiniteGroup(range(n), lambda a, b: (a + b) % n, identity=0, name=f"Z{n}")


def trivial_group():
    return cyclic(1)


def direct_product(g, h, name=None):
    elems = [(a, b) for a in g.elements for b in h.elements]
    return FiniteGroup(
        elems,
        lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])),
        identity=(g.identity, h.identity),
        name=name or f"{g.name}x{h.name}",
    )


def permutation_group(gens, degree, name=None):
    """Group of permutations of ``range(degree)`` generated by ``gens`` (tuples)."""
    ident = tuple(range(degree))

    def mul(a, b):
        return tuple(b[a[i]] for i in range(degree))

    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, tuple(g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return FiniteGroup(sorted(seen), mul, identity=ident, name=name)


def symmetric(n):
    return FiniteGroup(sorted(permutations(range(n))),
                       lambda a, b: tuple(b[a[i]] for i in range(n)),
                       identity=tuple(range(n)), name=f"S{n}")


def dihedral(n):
    """Symmetries of the n-gon, order 2n, elements (k, flip)."""
    # (k, f) acts as i -> (-1)^f i + k; mul(x, y) applies x first.
    def act(x, i):
        k, f = x
        return ((-i if f else i) + k) % n

    elems = [(k, f) for f in (0, 1) for k in range(n)]
    table = {}
    for x in elems:
        for y in elems:
            img = tuple(act(y, act(x, i)) for i in range(n))
            table[x, y] = next(z for z in elems if tuple(act(z, i) for i in range(n)) == img)
    return FiniteGroup(elems, table, identity=(0, 0), name=f"D{n}")


def quaternion():
    # elements are (sign, unit) with unit in 1,i,j,k
    units = "1ijk"
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for s in (1, -1) for u in units]

    def mul(x, y):
        s, u = mult[x[1], y[1]]
        return (x[0] * y[0] * s, u)

    return FiniteGroup(elems, mul, identity=(1, "1"), name="Q8")


def klein():
    return direct_product(cyclic(2), cyclic(2), name="V4")


def metacyclic(n, m, r, name=None):
    """``Z_n ⋊ Z_m`` where the generator of ``Z_m`` acts by ``x -> r x``.

    Needs ``r**m == 1 (mod n)``.  Elements are pairs ``(a, b)``.
    """
    if pow(r, m, n) != 1 % n:
        raise ValueError(f"{r}^{m} is not 1 mod {n}")
    elems = [(a, b) for b in range(m) for a in range(n)]
    return FiniteGroup(elems, lambda x, y: ((x[0] + pow(r, x[1], n) * y[0]) % n, (x[1] + y[1]) % m),
                       identity=(0, 0), name=name or f"Z{n}:{m}({r})")


def dicyclic(n, name=None):
    """Order ``4n``: ``a^(2n) = 1``, ``b^2 = a^n``, ``b a b^-1 = a^-1``; elements ``(i, j)`` mean ``a^i b^j``."""
    m = 2 * n

    def mul(x, y):
        i, j = x
        k, l = y
        if j == 0:
            return ((i + k) % m, l)
        if l == 0:
            return ((i - k) % m, 1)
        return ((i - k + n) % m, 0)

    elems = [(i, j) for j in (0, 1) for i in range(m)]
    return FiniteGroup(elems, mul, identity=(0, 0), name=name or f"Dic{n}")


def semidirect(N, H, act, name=None):
    """``N ⋊ H`` with ``act(h, n)`` the automorphism of ``N`` attached to ``h``."""
    elems = [(n, h) for h in H.elements for n in N.elements]
    return FiniteGroup(elems, lambda x, y: (N.mul(x[0], act(x[1], y[0])), H.mul(x[1], y[1])),
                       identity=(N.identity, H.identity), name=name)


def pauli():
    """Group generated by the Pauli matrices, with Gaussian-integer entries ``(re, im)``."""
    def cmul(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def madd(a, b):
        return (a[0] + b[0], a[1] + b[1])

    def mmul(A, B):
        return tuple(tuple(madd(cmul(A[i][0], B[0][k]), cmul(A[i][1], B[1][k])) for k in range(2))
                     for i in range(2))

    o, l, i_, mi, ml = (0, 0), (1, 0), (0, 1), (0, -1), (-1, 0)
    X = ((o, l), (l, o))
    Y = ((o, mi), (i_, o))
    Z = ((l, o), (o, ml))
    ident = ((l, o), (o, l))
    seen, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for A in frontier:
            for g in (X, Y, Z):
                B = mmul(A, g)
                if B not in seen:
                    seen.add(B)
                    nxt.append(B)
        frontier = nxt
    return FiniteGroup(sorted(seen), mmul, identity=ident, name="Pauli")


def alternating4():
    return permutation_group([(1, 2, 0, 3), (1, 0, 3, 2)], 4, name="A4")


def small_groups(max_order=16):
    """One representative per isomorphism type we use in corpora, up to ``max_order``.

    Every isomorphism type of order at most 16.
    """
    z = cyclic
    cands = [
        trivial_group(), z(2), z(3), z(4), klein(), z(5), z(6), dihedral(3),
        z(7), z(8), direct_product(z(4), z(2)), direct_product(klein(), z(2), name="Z2^3"),
        dihedral(4), quaternion(),
        z(9), direct_product(z(3), z(3)), z(10), dihedral(5), z(11), z(12),
        direct_product(z(6), z(2)), dihedral(6), alternating4(), dicyclic(3),
        z(13), z(14), dihedral(7), z(15),
        z(16), direct_product(z(4), z(4)), direct_product(z(8), z(2)),
        direct_product(z(4), klein(), name="Z4xZ2xZ2"), direct_product(klein(), klein(), name="Z2^4"),
        dihedral(8), metacyclic(8, 2, 3, name="SD16"), metacyclic(8, 2, 5, name="M16"),
        metacyclic(4, 4, 3, name="Z4:Z4"), direct_product(dihedral(4), z(2), name="D4xZ2"),
        direct_product(quaternion(), z(2)), dicyclic(4, name="Q16"), pauli(),
        semidirect(klein(), z(4), lambda h, v: v if h % 2 == 0 else (v[1], v[0]), name="V4:Z4"),
    ]
    return [g for g in cands if g.order <= max_order]


# ------------------------------------------------------- subgroups & quotients

def all_subgroups(g):
    subs = {frozenset([g.identity])}
    frontier = list(subs)
    while frontier:
        nxt = []
        for s in frontier:
            for a in g.elements:
                if a not in s:
                    t = g.closure(list(s) + [a])
                    if t not in subs:
                        subs.add(t)
                        nxt.append(t)
        frontier = nxt
    return sorted(subs, key=lambda s: (len(s), sorted(g.elements.index(x) for x in s)))


def is_normal(g, sub):
    return all(g.mul(g.mul(g.inv(a), n), a) in sub for a in g.elements for n in sub)


def normal_subgroups(g):
    return [s for s in all_subgroups(g) if is_normal(g, s)]


def quotient(g, normal):
    """Quotient group on cosets; returns (Q, projection dict)."""
    cosets, proj = [], {}
    for a in g.elements:
        if a in proj:
            continue
        coset = frozenset(g.mul(a, n) for n in normal)
        rep = min(coset, key=g.elements.index)
        cosets.append(rep)
        for x in coset:
            proj[x] = rep
    q = FiniteGroup(cosets, lambda x, y: proj[g.mul(x, y)], identity=proj[g.identity],
                    name=f"{g.name}/{len(normal)}")
    return q, proj


# ------------------------------------------------------------ homomorphisms

def is_homomorphism(g, h, phi):
    return all(phi[g.mul(a, b)] == h.mul(phi[a], phi[b]) for a in g.elements for b in g.elements)


def _extend(g, h, gens, images):
    """Extend generator images to a map on all of g, or None if inconsistent."""
    phi = {g.identity: h.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(gens, images):
                y, v = g.mul(x, s), h.mul(phi[x], t)
                if y in phi:
                    if phi[y] != v:
                        return None
                else:
                    phi[y] = v
                    nxt.append(y)
        frontier = nxt
    return phi


def homomorphisms(g, h):
    """Every homomorphism g -> h (generator-image search)."""
    gens = g.generators()
    cands = [[y for y in h.elements if g.element_order(s) % h.element_order(y) == 0] for s in gens]
    for imgs in product(*cands):
        phi = _extend(g, h, gens, imgs)
        if phi is not None and is_homomorphism(g, h, phi):
            yield phi


def find_isomorphism(g, h, cap=ISO_CAP):
    """Return an isomorphism dict g -> h or None.

    Exhaustive over images of a generating set, pruned by element orders.
    Raises ``IsotropyTooLarge`` above ``cap``.
    """
    if g.order > cap or h.order > cap:
        raise IsotropyTooLarge(f"group order {max(g.order, h.order)} exceeds cap {cap}")
    if g.order != h.order or g.order_profile() != h.order_profile():
        return None
    if g.is_abelian() != h.is_abelian():
        return None
    gens = g.generators()
    cands = [[y for y in h.elements if h.element_order(y) == g.element_order(s)] for s in gens]

    def search(i, imgs):
        if i == len(gens):
            phi = _extend(g, h, gens, imgs)
            if phi is None or len(set(phi.values())) != g.order:
                return None
            return phi if is_homomorphism(g, h, phi) else None
        for y in cands[i]:
            if y in imgs:
                continue
            out = search(i + 1, imgs + [y])
            if out is not None:
                return out
        return None

    return search(0, [])

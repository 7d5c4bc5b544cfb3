"""Seeded, deterministic families of test structures.

Everything here is built from constructors in the library, so each item is
valid by construction unless a function says it mutates something.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product

from .core import (GroupoidFunctor, NatTransform, action_groupoid, discrete_groupoid, disjoint_union,
                   functors_between, group_groupoid, hcomp, pair_groupoid,
                   product_groupoid, relabel, vcomp)
from .extension import GroupoidExtension, pullback_extension
from .groups import (FiniteGroup, all_subgroups, cyclic, homomorphisms, normal_subgroups, quotient,
                     small_groups, symmetric, trivial_group)
from .linrep import BundleSES, GroupoidVectorBundle, direct_sum, eye, inverse, kron, matmul, matrix, tensor

DEFAULT_SEED = 0


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = DEFAULT_SEED
    max_order: int = 16            # groups for quotient extensions
    action_max_order: int = 8      # groups for action-groupoid extensions
    max_points: int = 3
    non_full_max_order: int = 12
    transitive_max_objects: int = 5
    transitive_max_isotropy: int = 8


# ------------------------------------------------------------------ groups

def subgroup(G, elems, name=None):
    elems = sorted(elems, key=G.elements.index)
    return FiniteGroup(elems, {(a, b): G.mul(a, b) for a in elems for b in elems},
                       identity=G.identity, inverse={a: G.inv(a) for a in elems}, name=name)


def homomorphism_functor(G, H, phi, obj="*"):
    """``group_groupoid(G) -> group_groupoid(H)`` along the map ``phi``."""
    return GroupoidFunctor(group_groupoid(G, obj), group_groupoid(H, obj), {obj: obj}, dict(phi))


# -------------------------------------------------------------- extensions

def group_extensions(max_order=16):
    """``(name, extension)`` for every quotient map ``G -> G/N``."""
    out = []
    for G in small_groups(max_order):
        for N in normal_subgroups(G):
            Q, proj = quotient(G, N)
            F = homomorphism_functor(G, Q, proj)
            out.append((f"{G.name}->{G.name}/{len(N)}", GroupoidExtension(F.source, F.target, F)))
    return out


def permutation_actions(Q, k):
    """Right actions of ``Q`` on ``range(k)`` as dicts ``(x, q) -> x·q``."""
    S = symmetric(k)
    seen = set()
    for rho in homomorphisms(Q, S):
        table = {(x, q): rho[q][x] for x in range(k) for q in Q.elements}
        key = tuple(sorted(table.items()))
        if key not in seen:
            seen.add(key)
            yield table


def action_extensions(max_order=8, max_points=3):
    """``G ⋉ X -> (G/N) ⋉ X`` for every quotient and every action of the
    quotient on at most ``max_points`` points, pulled back to ``G``."""
    out = []
    for G in small_groups(max_order):
        for N in normal_subgroups(G):
            if len(N) == 1:
                continue
            Q, proj = quotient(G, N)
            for k in range(2, max_points + 1):
                for act in permutation_actions(Q, k):
                    X = tuple(range(k))
                    big = action_groupoid(G, X, {(x, g): act[x, proj[g]] for x in X for g in G.elements})
                    small = action_groupoid(Q, X, act)
                    F = GroupoidFunctor(big, small, {x: x for x in X}, {(x, g): (x, proj[g]) for (x, g) in big.morphisms})
                    out.append((f"{G.name}/{len(N)} on {k}", GroupoidExtension(big, small, F)))
    return out


def pulled_back_extensions(exts, sheets=(2, 3)):
    """Each extension pulled back along ``n`` copies of its base."""
    out = []
    for name, ext in exts:
        for n in sheets:
            cover = [(i, a) for i in range(n) for a in ext.base]
            new, _ = pullback_extension(ext, lambda x: x[1], cover)
            out.append((f"{name} x{n}", new))
    return out


def extension_corpus(cfg=CorpusConfig()):
    rng = random.Random(cfg.seed)
    groups = group_extensions(cfg.max_order)
    actions = action_extensions(cfg.action_max_order, cfg.max_points)
    small = [e for e in groups if len(e[1].G.morphisms) <= 8]
    picked = rng.sample(small, min(10, len(small))) + rng.sample(actions, min(5, len(actions)))
    return groups + actions + pulled_back_extensions(picked)


def non_full_functors(max_order=12):
    """Inclusions of proper subgroups; ``(name, functor, missing element)``."""
    out = []
    for G in small_groups(max_order):
        for H in all_subgroups(G):
            if len(H) == G.order:
                continue
            K = subgroup(G, H)
            missing = next(g for g in G.elements if g not in H)
            out.append((f"{len(H)}<{G.name}", homomorphism_functor(K, G, {h: h for h in K.elements}), missing))
    return out


# ---------------------------------------------------------------- groupoids

def coset_action_groupoid(G, H):
    """``G`` acting on the right cosets of ``H``; isotropy is conjugate to ``H``."""
    cosets, index = [], {}
    for g in G.elements:
        if g in index:
            continue
        c = frozenset(G.mul(h, g) for h in H)
        for x in c:
            index[x] = len(cosets)
        cosets.append(min(c, key=G.elements.index))
    X = tuple(range(len(cosets)))
    return action_groupoid(G, X, {(i, g): index[G.mul(cosets[i], g)] for i in X for g in G.elements})


def transitive_groupoids(max_objects=5, max_isotropy=8):
    """``(name, groupoid)`` covering every isomorphism type of transitive
    groupoid in range, once as a product and again as coset actions."""
    out = []
    for K in small_groups(max_isotropy):
        for n in range(1, max_objects + 1):
            out.append((f"pair{n}x{K.name}", product_groupoid(pair_groupoid(range(n)), group_groupoid(K))))
    for G in small_groups(16) + [symmetric(4)]:
        for H in all_subgroups(G):
            index = G.order // len(H)
            if 2 <= index <= max_objects and len(H) <= max_isotropy:
                out.append((f"{G.name}/{len(H)}", coset_action_groupoid(G, H)))
    return out


ISOTROPY_LIBRARY = (("1", trivial_group), ("Z2", lambda: cyclic(2)), ("Z3", lambda: cyclic(3)),
                    ("S3", lambda: symmetric(3)))


def groupoid_types(max_objects=3, isotropy=ISOTROPY_LIBRARY):
    """One groupoid per isomorphism type with at most ``max_objects`` objects
    and connected components drawn from ``pair(n) x K`` for ``K`` in ``isotropy``.
    Includes the empty groupoid."""
    groups = [(name, make()) for name, make in isotropy]
    blocks = [(n, i) for n in range(1, max_objects + 1) for i in range(len(groups))]
    out = []
    for k in range(max_objects + 1):
        for combo in combinations_with_replacement(blocks, k):
            if sum(n for n, _ in combo) > max_objects:
                continue
            parts = [product_groupoid(pair_groupoid(range(n)), group_groupoid(groups[i][1])) for n, i in combo]
            name = "+".join(f"pair{n}x{groups[i][0]}" for n, i in combo) or "empty"
            out.append((name, disjoint_union(*parts)))
    return out


def groupoids_up_to(max_morphisms=6):
    """One groupoid per isomorphism type with at most ``max_morphisms`` arrows,
    the empty groupoid included."""
    groups = small_groups(max_morphisms)
    blocks = [(n, K) for n in range(1, max_morphisms + 1) for K in groups if n * n * K.order <= max_morphisms]
    out = []

    def extend(start, left, chosen):
        name = "+".join(f"pair{n}x{K.name}" for n, K in chosen) or "empty"
        out.append((name, disjoint_union(*[product_groupoid(pair_groupoid(range(n)), group_groupoid(K))
                                           for n, K in chosen])))
        for i in range(start, len(blocks)):
            n, K = blocks[i]
            if n * n * K.order <= left:
                extend(i, left - n * n * K.order, chosen + [blocks[i]])

    extend(0, max_morphisms, [])
    return out


def random_small_groupoid(rng, max_objects=3, max_morphisms=None):
    """A random disjoint union of ``pair(n) x K`` with small ``K``."""
    pool = [trivial_group(), cyclic(2), cyclic(3), cyclic(4), symmetric(3)]
    while True:
        parts = []
        left = rng.randint(1, max_objects)
        while left:
            n = rng.randint(1, left)
            parts.append(product_groupoid(pair_groupoid(range(n)), group_groupoid(rng.choice(pool))))
            left -= n
        G = disjoint_union(*parts)
        if max_morphisms is None or len(G.morphisms) <= max_morphisms:
            return G


# ------------------------------------------------------------ random tables

def groupoid_tables(G):
    """Raw tables ``(objects, morphisms, src, tgt, comp, ident, inv)`` of ``G``."""
    comp = {(f, g): G.compose(f, g) for f in G.morphisms for g in G.out_arrows(G.target(f))}
    return (list(G.objects), list(G.morphisms), dict(G.src), dict(G.tgt), comp, dict(G.ident), dict(G.inv))


def _int_relabel(G, rng):
    objs = list(range(len(G.objects)))
    mors = list(range(len(G.morphisms)))
    rng.shuffle(objs)
    rng.shuffle(mors)
    op = dict(zip(G.objects, objs))
    mp = dict(zip(G.morphisms, mors))
    return relabel(G, op.__getitem__, mp.__getitem__)


def mutate_tables(tables, rng):
    """Change one entry of one table; may point outside the label sets."""
    objects, mors, src, tgt, comp, ident, inv = tables
    src, tgt, comp, ident, inv = dict(src), dict(tgt), dict(comp), dict(ident), dict(inv)
    choices = [t for t, d in (("src", src), ("tgt", tgt), ("comp", comp), ("ident", ident), ("inv", inv)) if d]
    which = rng.choice(choices)
    table = {"src": src, "tgt": tgt, "comp": comp, "ident": ident, "inv": inv}[which]
    key = rng.choice(sorted(table, key=repr))
    pool = objects if which in ("src", "tgt") else mors
    others = [v for v in pool if v != table[key]]
    if rng.random() < 0.15 or not others:
        table[key] = "dangling"
    elif which == "comp" and rng.random() < 0.2:
        del table[key]
    else:
        table[key] = rng.choice(others)
    return (objects, mors, src, tgt, comp, ident, inv), (which, key)


def random_tables(n=200, seed=DEFAULT_SEED):
    """Half valid constructor-built tables, half single-entry mutations."""
    rng = random.Random(seed)
    out = []
    for k in range(n):
        G = _int_relabel(random_small_groupoid(rng, max_objects=3), rng)
        tables = groupoid_tables(G)
        if k % 2:
            tables, _ = mutate_tables(tables, rng)
        out.append(tables)
    return out


# ------------------------------------------------------------ functor pairs

FUNCTOR_POOL = (
    lambda: discrete_groupoid([0]), lambda: discrete_groupoid([0, 1]), lambda: group_groupoid(cyclic(2)),
    lambda: group_groupoid(cyclic(3)), lambda: group_groupoid(symmetric(3)), lambda: pair_groupoid(range(2)),
    lambda: pair_groupoid(range(3)), lambda: product_groupoid(pair_groupoid(range(2)), group_groupoid(cyclic(2))),
    lambda: disjoint_union(group_groupoid(cyclic(2)), discrete_groupoid([0])),
)


def carrier_size(F):
    return sum(len(F.target.in_arrows(F.obj(u))) for u in F.source.objects)


def functor_pairs(count=100, seed=DEFAULT_SEED, max_carrier=12):
    """Composable pairs ``(psi: A -> B, phi: B -> C)`` whose bibundle carriers
    (for psi, phi and the composite) have at most ``max_carrier`` elements."""
    from .core import compose_functors
    rng = random.Random(seed)
    pool = [make() for make in FUNCTOR_POOL]
    cache = {}

    def funs(i, j):
        if (i, j) not in cache:
            cache[i, j] = functors_between(pool[i], pool[j])
        return cache[i, j]

    out = []
    while len(out) < count:
        i, j, k = (rng.randrange(len(pool)) for _ in range(3))
        if not funs(i, j) or not funs(j, k):
            continue
        psi, phi = rng.choice(funs(i, j)), rng.choice(funs(j, k))
        both = compose_functors(psi, phi)
        if max(carrier_size(psi), carrier_size(phi), carrier_size(both)) <= max_carrier:
            out.append((psi, phi))
    return out


def small_functors(max_carrier=12):
    """Every functor between members of the pool with carrier in range."""
    pool = [make() for make in FUNCTOR_POOL]
    return [F for C in pool for D in pool for F in functors_between(C, D) if carrier_size(F) <= max_carrier]


# ---------------------------------------------------------------- SES corpus

def _power_rep(G, M):
    """Cyclic group rep sending the element ``k`` to ``M^k``."""
    mats, X = {}, eye(len(M))
    for k in G.elements:
        mats[k] = X
        X = matmul(M, X)
    return mats


def _perm_matrix(p):
    n = len(p)
    return tuple(tuple(Fraction(int(p[j] == i)) for j in range(n)) for i in range(n))


def group_irreps(G):
    """Rational irreducible representations of Z2, Z3 and S3 as ``{element: matrix}``."""
    one = {g: eye(1) for g in G.elements}
    if G.order == 1:
        return [one]
    if G.name == "Z2":
        return [one, {0: eye(1), 1: matrix([[-1]])}]
    if G.name == "Z3":
        return [one, _power_rep(G, matrix([[0, -1], [1, -1]]))]
    if G.name == "S3":
        sign = {p: matrix([[(-1) ** sum(p[i] > p[j] for i in range(3) for j in range(i + 1, 3))]]) for p in G.elements}
        # permutation rep on the sum-zero plane, basis e0-e2, e1-e2
        B = matrix([[1, 0], [0, 1], [-1, -1]])
        coords = matrix([[1, 0, 0], [0, 1, 0]])
        std = {p: matmul(coords, matmul(_perm_matrix(p), B)) for p in G.elements}
        return [one, sign, std]
    raise ValueError(f"no irreducibles recorded for {G.name}")


def bundle_from_rep(G, comps, reps):
    """Vector bundle over ``disjoint_union(pair(n_i) x K_i)`` using ``reps[i]`` on component ``i``."""
    dim, mat = {}, {}
    for f in G.morphisms:
        i, (_, k) = f
        mat[f] = reps[i][k]
    for a in G.objects:
        dim[a] = len(mat[G.identity(a)])
    return GroupoidVectorBundle(G, dim, mat)


def random_invertible(rng, n):
    while True:
        T = tuple(tuple(Fraction(rng.randint(-2, 2)) for _ in range(n)) for _ in range(n))
        if n == 0 or inverse(T) is not None:
            return T


def _basis_twisted_ses(A, C, rng):
    """``0 -> A -> B -> C -> 0`` with ``B`` a random change of basis of ``A ⊕ C``."""
    G = A.groupoid
    S = direct_sum(A, C)
    T = {a: random_invertible(rng, S.dim[a]) for a in G.objects}
    Ti = {a: inverse(T[a]) for a in G.objects}
    B = GroupoidVectorBundle(G, dict(S.dim), {g: matmul(matmul(T[G.target(g)], S.mat[g]), Ti[G.source(g)])
                                              for g in G.morphisms})
    j = {a: matmul(T[a], tuple(tuple(Fraction(int(i == k)) for k in range(A.dim[a])) for i in range(S.dim[a])))
         for a in G.objects}
    q = {a: matmul(tuple(tuple(Fraction(int(k == A.dim[a] + i)) for k in range(S.dim[a])) for i in range(C.dim[a])),
                   Ti[a]) for a in G.objects}
    return BundleSES(A, B, C, j, q)


def regular_z2_ses():
    """Regular representation of Z2 as an extension of the sign rep by the trivial one."""
    G = group_groupoid(cyclic(2))
    A = GroupoidVectorBundle(G, {"*": 1}, {0: eye(1), 1: eye(1)})
    B = GroupoidVectorBundle(G, {"*": 2}, {0: eye(2), 1: matrix([[0, 1], [1, 0]])})
    C = GroupoidVectorBundle(G, {"*": 1}, {0: eye(1), 1: matrix([[-1]])})
    return BundleSES(A, B, C, {"*": matrix([[1], [1]])}, {"*": matrix([[1, -1]])})


def ses_corpus(count=60, seed=DEFAULT_SEED):
    """Sequences built from sums and tensor products of irreducibles over
    groupoids with at most two components, then twisted by random bases."""
    rng = random.Random(seed)
    groups = [trivial_group(), cyclic(2), cyclic(3), symmetric(3)]
    out = [("regular Z2", regular_z2_ses())]
    while len(out) < count:
        ncomp = rng.randint(1, 2)
        specs = [(rng.randint(1, 2), rng.choice(groups)) for _ in range(ncomp)]
        G = disjoint_union(*[product_groupoid(pair_groupoid(range(n)), group_groupoid(K)) for n, K in specs])

        def pick():
            reps = []
            for _, K in specs:
                irr = group_irreps(K)
                r = rng.choice(irr)
                if rng.random() < 0.3:
                    s = rng.choice(irr)
                    r = {g: kron(r[g], s[g]) for g in K.elements}
                reps.append(r)
            V = bundle_from_rep(G, specs, reps)
            if rng.random() < 0.3:
                V = direct_sum(V, bundle_from_rep(G, specs, [rng.choice(group_irreps(K)) for _, K in specs]))
            return V

        A, C = pick(), pick()
        if rng.random() < 0.2:
            A = tensor(A, C)
        name = "+".join(f"pair{n}x{K.name}" for n, K in specs)
        out.append((name, _basis_twisted_ses(A, C, rng)))
    return out


# ----------------------------------------------------------------- 2-cells

class HomGroupoid:
    """All functors C -> D with every 2-cell between them, indexed.

    The 2-cells out of ``F`` are exactly the conjugates of ``F`` by a family
    of arrows leaving each ``F(a)``, so they are enumerated that way.
    ``cells[i]`` runs from ``functors[ends[i][0]]`` to ``functors[ends[i][1]]``.
    """

    def __init__(self, C, D):
        self.C, self.D = C, D
        self.functors = functors_between(C, D)
        self._findex = {self.functor_key(F): i for i, F in enumerate(self.functors)}
        self.cells, self.ends, self.out = [], [], {}
        for a, F in enumerate(self.functors):
            for eta in product(*[D.out_arrows(F.obj(x)) for x in C.objects]):
                alpha = conjugate(F, dict(zip(C.objects, eta)))
                b = self.functor_index(alpha.G)
                self.out.setdefault(a, []).append(len(self.cells))
                self.cells.append(NatTransform(F, self.functors[b], alpha.eta))
                self.ends.append((a, b))
        self._cindex = {self.cell_key(c): i for i, c in enumerate(self.cells)}
        self._vc = {}

    def functor_key(self, F):
        return tuple(F.obj(a) for a in self.C.objects) + tuple(F.arr(f) for f in self.C.morphisms)

    def functor_index(self, F):
        return self._findex[self.functor_key(F)]

    def cell_key(self, alpha):
        eta = alpha.eta
        return (self.functor_index(alpha.F), self.functor_index(alpha.G), tuple([eta[a] for a in self.C.objects]))

    def index(self, alpha, ends=None):
        """Index of ``alpha``; ``ends`` may give its functor indices when already known."""
        if ends is None:
            return self._cindex[self.cell_key(alpha)]
        eta = alpha.eta
        return self._cindex[ends + (tuple([eta[a] for a in self.C.objects]),)]

    def composable_pairs(self):
        for i, (_, b) in enumerate(self.ends):
            for j in self.out.get(b, ()):
                yield i, j

    def vertical_table(self):
        """``[(i, j, index of vcomp(cells[i], cells[j]))]`` over all composable pairs.

        Components are composed straight from the target's table, which is
        what ``vcomp`` does, without building the intermediate cells.
        """
        if not hasattr(self, "_vtable"):
            objs, mul = self.C.objects, self.D.compose
            etas = [tuple([c.eta[a] for a in objs]) for c in self.cells]
            look, ends, vc = self._cindex, self.ends, self._vc
            table = []
            for i, j in self.composable_pairs():
                key = (ends[i][0], ends[j][1], tuple(map(mul, etas[i], etas[j])))
                k = vc[i, j] = look[key]
                table.append((i, j, k))
            self._vtable = table
        return self._vtable

    def vcomp_index(self, i, j):
        """Index of ``vcomp(cells[i], cells[j])``, computed once."""
        k = self._vc.get((i, j))
        if k is None:
            ends = (self.ends[i][0], self.ends[j][1])
            k = self._vc[i, j] = self.index(vcomp(self.cells[i], self.cells[j]), ends)
        return k


def conjugate(F, eta):
    """The 2-cell with components ``eta`` out of ``F``; its target is forced."""
    C, D = F.source, F.target
    G = GroupoidFunctor(C, D, {a: D.target(eta[a]) for a in C.objects},
                        {f: D.compose_path(D.inverse(eta[C.source(f)]), F.arr(f), eta[C.target(f)])
                         for f in C.morphisms})
    return NatTransform(F, G, eta)


def interchange_failures(left, right, outer):
    """Check the interchange law on every quadruple of 2-cells.

    ``left``, ``right`` and ``outer`` are the hom groupoids C -> D, D -> E and
    C -> E.  Each distinct vertical or horizontal composite is computed once by
    the library and then compared by index.  Returns the number of quadruples
    and the failing ones.
    """
    cache, composite = {}, {}

    def functor(i, j, F):
        # F is the composite of left.functors[i] and right.functors[j]
        if (i, j) not in composite:
            composite[i, j] = outer.functor_index(F)
        return composite[i, j]

    def h(i, j):
        k = cache.get((i, j))
        if k is None:
            alpha = hcomp(left.cells[i], right.cells[j])
            (f, g), (f2, g2) = left.ends[i], right.ends[j]
            k = cache[i, j] = outer.index(alpha, (functor(f, f2, alpha.F), functor(g, g2, alpha.G)))
        return k

    right_pairs = right.vertical_table()
    seen, bad = 0, []
    if not right_pairs or not left.cells:
        return seen, bad
    vc = outer._vc
    for a, a2, aa in left.vertical_table():
        for b, b2, bb in right_pairs:
            lhs = cache.get((aa, bb))
            if lhs is None:
                lhs = h(aa, bb)
            x, y = cache.get((a, b)), cache.get((a2, b2))
            if x is None:
                x = h(a, b)
            if y is None:
                y = h(a2, b2)
            rhs = vc.get((x, y))
            if rhs is None:
                rhs = outer.vcomp_index(x, y)
            if lhs != rhs:
                bad.append((a, a2, b, b2))
        seen += len(right_pairs)
    return seen, bad


def interchange_triples(max_morphisms=8):
    """Triples C -> D -> E of small groupoid types with at most ``max_morphisms`` arrows in total."""
    types = groupoids_up_to(max_morphisms)
    size = [len(G.morphisms) for _, G in types]
    for i, j, k in product(range(len(types)), repeat=3):
        if size[i] + size[j] + size[k] <= max_morphisms:
            yield types[i], types[j], types[k]


def conjugate_cell(rng, F):
    """A random 2-cell out of ``F``."""
    return conjugate(F, {a: rng.choice(F.target.out_arrows(F.obj(a))) for a in F.source.objects})


def random_interchange_instances(count=1000, seed=DEFAULT_SEED, pool_size=24, max_objects=3):
    """``count`` quadruples ``(alpha, alpha2, beta, beta2)`` of random 2-cells.

    The groupoids come from a seeded pool of ``pool_size`` random ones; each
    instance picks three, conjugates one of the first few functors between
    them to get random ``F`` and ``G``, then draws two composable cells on each.
    """
    rng = random.Random(seed)
    pool = [random_small_groupoid(rng, max_objects) for _ in range(pool_size)]
    funs = {}

    def some_functor(i, j):
        if (i, j) not in funs:
            funs[i, j] = functors_between(pool[i], pool[j], limit=8)
        return conjugate_cell(rng, rng.choice(funs[i, j])).G

    out = []
    for _ in range(count):
        i, j, k = (rng.randrange(pool_size) for _ in range(3))
        alpha = conjugate_cell(rng, some_functor(i, j))
        beta = conjugate_cell(rng, some_functor(j, k))
        out.append((alpha, conjugate_cell(rng, alpha.G), beta, conjugate_cell(rng, beta.G)))
    return out

__all__ = [
    "CorpusConfig", "DEFAULT_SEED", "subgroup", "homomorphism_functor", "group_extensions",
    "permutation_actions", "action_extensions", "pulled_back_extensions", "extension_corpus",
    "non_full_functors", "HomGroupoid", "interchange_failures", "interchange_triples", "conjugate",
    "conjugate_cell", "random_interchange_instances", "coset_action_groupoid", "groupoids_up_to", "transitive_groupoids", "groupoid_types",
    "random_small_groupoid", "groupoid_tables", "mutate_tables", "random_tables", "functor_pairs",
    "small_functors", "carrier_size", "group_irreps", "bundle_from_rep", "regular_z2_ses", "ses_corpus",
]

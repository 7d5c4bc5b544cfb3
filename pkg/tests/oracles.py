"""Reference implementations used to cross-check the library.

None of these call the library code they are checked against; they work
directly on the raw tables and only read ``objects``, ``morphisms``,
``source``, ``target``, ``compose``, ``identity`` and ``inverse``.
"""

from fractions import Fraction
from itertools import product


# ------------------------------------------------------------ axiom scanner

def scan_groupoid_axioms(objects, morphisms, src, tgt, comp, ident, inv):
    """True iff the tables define a groupoid, by checking every instance."""
    O, M = set(objects), set(morphisms)
    if len(O) != len(list(objects)) or len(M) != len(list(morphisms)):
        return False
    for table, dom, cod in ((src, M, O), (tgt, M, O), (ident, O, M), (inv, M, M)):
        if set(table) != dom or any(v not in cod for v in table.values()):
            return False
    composable = {(f, g) for f in M for g in M if tgt[f] == src[g]}
    if set(comp) != composable:
        return False
    for (f, g), h in comp.items():
        if h not in M or src[h] != src[f] or tgt[h] != tgt[g]:
            return False
    for a in O:
        e = ident[a]
        if src[e] != a or tgt[e] != a:
            return False
    for f in M:
        if comp[ident[src[f]], f] != f or comp[f, ident[tgt[f]]] != f:
            return False
    for f, g in composable:
        for h in M:
            if src[h] == tgt[g] and comp[comp[f, g], h] != comp[f, comp[g, h]]:
                return False
    for f in M:
        g = inv[f]
        if src[g] != tgt[f] or tgt[g] != src[f]:
            return False
        if comp[f, g] != ident[src[f]] or comp[g, f] != ident[tgt[f]]:
            return False
    return True


# ------------------------------------------------------ functor enumeration

def _hom(G, a, b):
    return [f for f in G.morphisms if G.source(f) == a and G.target(f) == b]


def all_functors(C, D, object_filter=None, arrow_filter=None):
    """Yield every functor C -> D as ``(f0, f1)`` dicts.

    Objects first, then arrows one at a time with the images of composites
    forced as soon as both factors are known.  ``object_filter(f0_partial, complete)``
    and ``arrow_filter(f0, f1_partial, newest)`` may prune partial assignments.
    """
    objs, mors = list(C.objects), list(C.morphisms)

    def arrows(f0):
        f1 = {}

        def consistent(f):
            # every composite relation involving f whose other members are known
            x = f1[f]
            for g in C.morphisms:
                if g not in f1:
                    continue
                if C.target(f) == C.source(g):
                    h = C.compose(f, g)
                    if h in f1 and f1[h] != D.compose(x, f1[g]):
                        return False
                if C.target(g) == C.source(f):
                    h = C.compose(g, f)
                    if h in f1 and f1[h] != D.compose(f1[g], x):
                        return False
                if C.source(g) == C.source(f):
                    # g then k equals f, with k = g^-1 then f
                    k = C.compose(C.inverse(g), f)
                    if k in f1 and D.compose(f1[g], f1[k]) != x:
                        return False
            return True

        def step(k):
            if k == len(mors):
                yield dict(f1)
                return
            f = mors[k]
            if f in f1:
                yield from step(k + 1)
                return
            for x in _hom(D, f0[C.source(f)], f0[C.target(f)]):
                f1[f] = x
                if consistent(f) and (arrow_filter is None or arrow_filter(f0, f1, f)):
                    yield from step(k + 1)
                del f1[f]

        for a in objs:
            f1[C.identity(a)] = D.identity(f0[a])
        yield from step(0)

    def objects_step(k, f0):
        if k == len(objs):
            if object_filter is not None and not object_filter(f0, True):
                return
            yield from ((dict(f0), f1) for f1 in arrows(f0))
            return
        for y in D.objects:
            f0[objs[k]] = y
            if object_filter is None or object_filter(f0, False):
                yield from objects_step(k + 1, f0)
            del f0[objs[k]]

    yield from objects_step(0, {})


def _iso_classes(G):
    cls = {}
    for a in G.objects:
        cls[a] = frozenset(b for b in G.objects if _hom(G, a, b))
    return cls


def equivalence_functor_exists(C, D):
    """Exhaustive search for a fully faithful, essentially surjective C -> D.

    Partial assignments are pruned only when they already violate a
    necessary condition: hom-set sizes must agree on assigned objects, and
    arrow images inside one hom-set must be distinct.
    """
    clsD = _iso_classes(D)

    def object_ok(f0, complete):
        if complete:
            hit = set()
            for y in f0.values():
                hit |= clsD[y]
            return hit == set(D.objects)
        a = list(f0)[-1]
        return all(len(_hom(C, a, b)) == len(_hom(D, f0[a], f0[b])) and
                   len(_hom(C, b, a)) == len(_hom(D, f0[b], f0[a])) for b in f0)

    def arrow_ok(f0, f1, f):
        a, b, x = C.source(f), C.target(f), f1[f]
        return not any(g != f and f1[g] == x and C.source(g) == a and C.target(g) == b for g in f1)

    for _ in all_functors(C, D, object_ok, arrow_ok):
        return True
    return False


def brute_equivalence(C, D, f0, f1):
    """Is ``(f0, f1)`` an equivalence?  Searched as an explicit quasi-inverse
    ``G`` with natural isomorphisms ``G∘F ≅ 1`` and ``F∘G ≅ 1``."""
    def natural_iso(S, T, P0, P1, Q0, Q1):
        # eta_a: P(a) -> Q(a) for every a; all arrows of T are invertible
        choices = [_hom(T, P0[a], Q0[a]) for a in S.objects]
        for eta in product(*choices):
            e = dict(zip(S.objects, eta))
            if all(T.compose(P1[f], e[S.target(f)]) == T.compose(e[S.source(f)], Q1[f]) for f in S.morphisms):
                return True
        return False

    idC0 = {a: a for a in C.objects}
    idC1 = {f: f for f in C.morphisms}
    idD0 = {a: a for a in D.objects}
    idD1 = {f: f for f in D.morphisms}
    for g0, g1 in all_functors(D, C):
        gf0 = {a: g0[f0[a]] for a in C.objects}
        gf1 = {f: g1[f1[f]] for f in C.morphisms}
        fg0 = {b: f0[g0[b]] for b in D.objects}
        fg1 = {f: f1[g1[f]] for f in D.morphisms}
        if natural_iso(C, C, gf0, gf1, idC0, idC1) and natural_iso(D, D, fg0, fg1, idD0, idD1):
            return True
    return False


# ----------------------------------------------------- averaging splitting

def _mm(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), Fraction(0)) for j in range(len(B[0]) if B else 0)]
            for i in range(len(A))]


def _inv(A):
    n = len(A)
    M = [list(map(Fraction, A[i])) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def _right_inverse(q):
    """Some ``r`` with ``q r = I`` for a surjective ``q`` (via q^T (q q^T)^-1)."""
    qt = [list(col) for col in zip(*q)]
    return _mm(qt, _inv(_mm(q, qt)))


def averaging_splitting(ses):
    """Average any linear section over each isotropy group, then transport it
    along one arrow from the component's root to every other object."""
    G, B, C = ses.B.groupoid, ses.B, ses.C
    r = {}
    seen = set()
    for root in G.objects:
        if root in seen:
            continue
        loops = [f for f in G.morphisms if G.source(f) == root and G.target(f) == root]
        r0 = _right_inverse(ses.q[root])
        n, m = B.dim[root], C.dim[root]
        acc = [[Fraction(0)] * m for _ in range(n)]
        for g in loops:
            term = _mm(_mm([list(x) for x in B.mat[g]], r0), _inv(C.mat[g]))
            acc = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(acc, term)]
        avg = [[x / len(loops) for x in row] for row in acc]
        for f in G.morphisms:
            if G.source(f) == root and G.target(f) not in seen:
                b = G.target(f)
                seen.add(b)
                r[b] = _mm(_mm([list(x) for x in B.mat[f]], avg), _inv(C.mat[f])) if b != root else avg
        r[root] = avg
    return {a: tuple(tuple(row) for row in M) for a, M in r.items()}


# ------------------------------------------------------ cocycle by indices

def pointwise_cocycle_holds(K, cover, transitions):
    """Cocycle law for ``U -> K^U`` data, evaluated point by point.

    ``transitions[(i, j)]`` is a tuple of arrows of K indexed like the
    overlap ``U_i ×_U U_j`` (pairs in lexicographic order).
    """
    maps = cover.maps
    n = len(maps)

    def overlap(i, j):
        return [(x, y) for x in maps[i].domain for y in maps[j].domain if maps[i](x) == maps[j](y)]

    for i, j, k in product(range(n), repeat=3):
        Oij, Ojk, Oik = overlap(i, j), overlap(j, k), overlap(i, k)
        for x in maps[i].domain:
            for y in maps[j].domain:
                for z in maps[k].domain:
                    if not (maps[i](x) == maps[j](y) == maps[k](z)):
                        continue
                    a = transitions[i, j][Oij.index((x, y))]
                    b = transitions[j, k][Ojk.index((y, z))]
                    c = transitions[i, k][Oik.index((x, z))]
                    # phi_ik = phi_ij ∘ phi_jk, i.e. first phi_jk then phi_ij
                    if K.compose(b, a) != c:
                        return False
    return True

"""Linear representations of finite groupoids over the rationals.

Matrices are tuples of rows of ``Fraction``.  A vector bundle assigns a
space ``Q^dim(a)`` to each object and an invertible matrix to each arrow,
with ``mat[g∘f] == mat[g] @ mat[f]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import Violation, raise_if


# ------------------------------------------------------------ matrix helpers

def matrix(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def zeros(n, m):
    return tuple(tuple(Fraction(0) for _ in range(m)) for _ in range(n))


def eye(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def shape(A, cols_if_empty=0):
    return (len(A), len(A[0]) if A else cols_if_empty)


def matmul(A, B):
    if not A:
        return ()
    inner = len(B)
    cols = len(B[0]) if B else 0
    return tuple(tuple(sum((A[i][k] * B[k][j] for k in range(inner)), Fraction(0)) for j in range(cols))
                 for i in range(len(A)))


def transpose(A, cols=0):
    n, m = shape(A, cols)
    return tuple(tuple(A[i][j] for i in range(n)) for j in range(m))


def block_diag(A, B, a_cols=None, b_cols=None):
    ac = len(A[0]) if A else (a_cols or 0)
    bc = len(B[0]) if B else (b_cols or 0)
    top = tuple(tuple(r) + (Fraction(0),) * bc for r in A)
    bottom = tuple((Fraction(0),) * ac + tuple(r) for r in B)
    return top + bottom


def kron(A, B):
    return tuple(tuple(a * b for a in ra for b in rb) for ra in A for rb in B)


def row_reduce(A, cols=None):
    """Reduced row echelon form and pivot columns.

    Pivots are taken as the first nonzero entry scanning columns left to
    right, rows top to bottom.  Rows are held sparsely while reducing since
    the constraint systems here are mostly zeros.
    """
    rows = [{j: Fraction(x) for j, x in enumerate(r) if x} for r in A]
    n = len(rows)
    m = len(A[0]) if A else (cols or 0)
    pivots, r = [], 0
    for c in range(m):
        p = next((i for i in range(r, n) if c in rows[i]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        pr = rows[r] = {j: x * inv for j, x in rows[r].items()}
        for i in range(n):
            f = rows[i].get(c) if i != r else None
            if f:
                row = rows[i]
                for j, y in pr.items():
                    v = row.get(j, 0) - f * y
                    if v:
                        row[j] = v
                    else:
                        del row[j]
        pivots.append(c)
        r += 1
        if r == n:
            break
    zero = Fraction(0)
    return [[row.get(j, zero) for j in range(m)] for row in rows], pivots


def rank(A):
    return len(row_reduce(A)[1])


def inverse(A):
    n = len(A)
    aug = [list(A[i]) + list(eye(n)[i]) for i in range(n)]
    R, piv = row_reduce(aug)
    if piv[:n] != list(range(n)):
        return None
    return tuple(tuple(R[i][n:]) for i in range(n))


def solve(rows, rhs, nvars):
    """One solution of ``rows @ x == rhs`` (free variables set to 0), or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, piv = row_reduce(aug, nvars + 1)
    if nvars in piv:
        return None
    x = [Fraction(0)] * nvars
    for i, c in enumerate(piv):
        x[c] = R[i][nvars]
    return x


def nullspace(A, cols):
    R, piv = row_reduce(A, cols)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, c in enumerate(piv):
            v[c] = -R[i][f]
        basis.append(tuple(v))
    return basis


def format_fraction(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ------------------------------------------------------------- vector bundles

@dataclass(frozen=True, eq=False)
class GroupoidVectorBundle:
    groupoid: object
    dim: dict
    mat: dict

    def __eq__(self, other):
        if not isinstance(other, GroupoidVectorBundle):
            return NotImplemented
        return self.dim == other.dim and self.mat == other.mat

    __hash__ = object.__hash__


def vector_bundle_violations(G, dim, mat):
    found = []
    for a in G.objects:
        if a not in dim or dim[a] < 0:
            found.append(Violation("ShapeMismatch", (a,), "missing or negative dimension"))
    if found:
        return found
    for g in G.morphisms:
        M = mat.get(g)
        want = (dim[G.target(g)], dim[G.source(g)])
        if M is None or len(M) != want[0] or any(len(r) != want[1] for r in M):
            found.append(Violation("ShapeMismatch", (g,), f"expected {want[0]}x{want[1]}"))
    if found:
        return found
    for g in G.morphisms:
        if rank(mat[g]) < dim[G.source(g)] or dim[G.source(g)] != dim[G.target(g)]:
            found.append(Violation("Singular", (g,)))
    for a in G.objects:
        if mat[G.identity(a)] != eye(dim[a]):
            found.append(Violation("NotFunctorial", (G.identity(a),), "identity not sent to I"))
    for f in G.morphisms:
        for g in G.out_arrows(G.target(f)):
            if mat[G.compose(f, g)] != matmul(mat[g], mat[f]):
                found.append(Violation("NotFunctorial", (f, g)))
    return found


def validate_vector_bundle(G, dim, mat):
    mat = {g: matrix(M) for g, M in mat.items()}
    raise_if("vector bundle", vector_bundle_violations(G, dim, mat))
    return GroupoidVectorBundle(G, dict(dim), mat)


def direct_sum(A, B):
    G = A.groupoid
    dim = {a: A.dim[a] + B.dim[a] for a in G.objects}
    mat = {g: block_diag(A.mat[g], B.mat[g], A.dim[G.source(g)], B.dim[G.source(g)]) for g in G.morphisms}
    return GroupoidVectorBundle(G, dim, mat)


def tensor(A, B):
    G = A.groupoid
    return GroupoidVectorBundle(G, {a: A.dim[a] * B.dim[a] for a in G.objects},
                                {g: kron(A.mat[g], B.mat[g]) for g in G.morphisms})


def change_basis(V, T):
    """``V`` transported along invertible ``T[a]``: ``mat'(γ) = T_tgt mat(γ) T_src⁻¹``."""
    G = V.groupoid
    Tinv = {a: inverse(T[a]) for a in G.objects}
    return GroupoidVectorBundle(G, dict(V.dim),
                                {g: matmul(matmul(T[G.target(g)], V.mat[g]), Tinv[G.source(g)]) for g in G.morphisms})


# ------------------------------------------------------------ exact sequences

@dataclass(frozen=True, eq=False)
class BundleSES:
    A: GroupoidVectorBundle
    B: GroupoidVectorBundle
    C: GroupoidVectorBundle
    j: dict
    q: dict


def ses_violations(A, B, C, j, q):
    G = B.groupoid
    found = []
    for a in G.objects:
        ja, qa = j[a], q[a]
        if shape(ja, A.dim[a]) != (B.dim[a], A.dim[a]) or shape(qa, B.dim[a]) != (C.dim[a], B.dim[a]):
            found.append(Violation("ShapeMismatch", (a,)))
            continue
        rj = rank(ja) if ja and ja[0] else 0
        rq = rank(qa) if qa and qa[0] else 0
        exact = rj == A.dim[a] and rq == C.dim[a] and rj + rq == B.dim[a] and \
            all(x == 0 for row in matmul(qa, ja) for x in row)
        if not exact:
            found.append(Violation("NotExactAt", (a,)))
    if found:
        return found
    for g in G.morphisms:
        s, t = G.source(g), G.target(g)
        if matmul(B.mat[g], j[s]) != matmul(j[t], A.mat[g]):
            found.append(Violation("NotEquivariant", (g, "j")))
        if matmul(C.mat[g], q[s]) != matmul(q[t], B.mat[g]):
            found.append(Violation("NotEquivariant", (g, "q")))
    return found


def validate_ses(A, B, C, j, q):
    j = {a: matrix(M) for a, M in j.items()}
    q = {a: matrix(M) for a, M in q.items()}
    raise_if("short exact sequence", ses_violations(A, B, C, j, q))
    return BundleSES(A, B, C, j, q)


def split_ses(A, C):
    """``0 -> A -> A ⊕ C -> C -> 0`` with the block maps."""
    G = A.groupoid
    B = direct_sum(A, C)
    j = {a: tuple(tuple(Fraction(int(i == k)) for k in range(A.dim[a])) for i in range(B.dim[a]))
         for a in G.objects}
    q = {a: tuple(tuple(Fraction(int(k == A.dim[a] + i)) for k in range(B.dim[a])) for i in range(C.dim[a]))
         for a in G.objects}
    return BundleSES(A, B, C, j, q)


def splitting_system(ses):
    """Linear constraints on the entries of ``r_a`` (row-major, objects in order)."""
    G, B, C = ses.B.groupoid, ses.B, ses.C
    offset, n = {}, 0
    for a in G.objects:
        offset[a] = n
        n += B.dim[a] * C.dim[a]

    def var(a, i, k):
        return offset[a] + i * C.dim[a] + k

    rows, rhs = [], []
    # q_a r_a = I
    for a in G.objects:
        qa = ses.q[a]
        for i in range(C.dim[a]):
            for k in range(C.dim[a]):
                row = [Fraction(0)] * n
                for m in range(B.dim[a]):
                    row[var(a, m, k)] += qa[i][m]
                rows.append(row)
                rhs.append(Fraction(int(i == k)))
    # B(γ) r_s = r_t C(γ)
    for g in G.morphisms:
        s, t = G.source(g), G.target(g)
        Bg, Cg = B.mat[g], C.mat[g]
        for i in range(B.dim[t]):
            for k in range(C.dim[s]):
                row = [Fraction(0)] * n
                for m in range(B.dim[s]):
                    row[var(s, m, k)] += Bg[i][m]
                for m in range(C.dim[t]):
                    row[var(t, i, m)] -= Cg[m][k]
                rows.append(row)
                rhs.append(Fraction(0))
    return rows, rhs, n, var


def satisfies_splitting(ses, r):
    G = ses.B.groupoid
    for a in G.objects:
        if matmul(ses.q[a], r[a]) != eye(ses.C.dim[a]):
            return False
    for g in G.morphisms:
        s, t = G.source(g), G.target(g)
        if matmul(ses.B.mat[g], r[s]) != matmul(r[t], ses.C.mat[g]):
            return False
    return True


def find_equivariant_splitting(ses):
    """Per-object matrices ``r_a: C_a -> B_a`` with ``q r = I`` commuting with
    every arrow, or None when no such family exists."""
    G = ses.B.groupoid
    rows, rhs, n, var = splitting_system(ses)
    x = solve(rows, rhs, n)
    if x is None:
        return None
    B, C = ses.B, ses.C
    return {a: tuple(tuple(x[var(a, i, k)] for k in range(C.dim[a])) for i in range(B.dim[a]))
            for a in G.objects}


__all__ = [
    "matrix", "zeros", "eye", "matmul", "transpose", "block_diag", "kron", "row_reduce", "rank",
    "inverse", "solve", "nullspace", "format_fraction", "GroupoidVectorBundle",
    "vector_bundle_violations", "validate_vector_bundle", "direct_sum", "tensor", "change_basis",
    "BundleSES", "ses_violations", "validate_ses", "split_ses", "splitting_system",
    "satisfies_splitting", "find_equivariant_splitting",
]

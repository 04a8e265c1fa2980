"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts mapping a hashable key to a nonzero Fraction.
Everything here is deterministic: pivots are chosen by the caller's key order.
"""
import heapq
from fractions import Fraction


def _ident(k):
    return k


class _Rev:
    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return other.k < self.k

    def __eq__(self, other):
        return self.k == other.k


def frac(x):
    """Coerce ints, strings like "3/4" and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted, use exact rationals")
    return Fraction(x)


def vadd(u, v, c=1):
    """Return u + c*v as a new dict."""
    out = dict(u)
    iadd(out, v, c)
    return out


def iadd(u, v, c=1):
    """In place u += c*v, dropping zeros."""
    if c == 0:
        return u
    for k, x in v.items():
        y = u.get(k, 0) + c * x
        if y:
            u[k] = y
        else:
            u.pop(k, None)
    return u


def vscale(v, c):
    if c == 0:
        return {}
    return {k: c * x for k, x in v.items()}


def clean(v):
    return {k: x for k, x in v.items() if x}


class Echelon:
    """Incremental row echelon form with optional combination tracking.

    `order` ranks keys; the pivot of a row is its key of largest rank, so
    callers ordering by degree get pivots on top-degree terms.
    """

    def __init__(self, order=None, track=False):
        self.order = order
        self.rows = {}      # pivot key -> row (pivot coefficient 1)
        self.combos = {}    # pivot key -> combination of inserted vectors
        self.track = track

    def _pivot(self, v):
        if self.order is None:
            return max(v)
        return max(v, key=self.order)

    def reduce(self, v, combo=None):
        v = dict(v)
        combo = dict(combo) if combo is not None else None
        key = self.order or _ident
        heap = [(_Rev(key(k)), k) for k in v if k in self.rows]
        heapq.heapify(heap)
        seen = set()
        while heap:
            _, k = heapq.heappop(heap)
            if k in seen:
                continue
            seen.add(k)
            c = v.get(k)
            if not c:
                continue
            row = self.rows[k]
            for j in row:
                if j != k and j in self.rows and j not in seen:
                    heapq.heappush(heap, (_Rev(key(j)), j))
            iadd(v, row, -c)
            if combo is not None:
                iadd(combo, self.combos[k], -c)
        return v, combo

    def add(self, v, tag=None):
        """Insert v. Returns (True, None) if independent, else (False, relation)."""
        combo = {tag: Fraction(1)} if self.track else None
        r, combo = self.reduce(v, combo)
        if not r:
            return False, combo
        p = self._pivot(r)
        c = r[p]
        r = vscale(r, 1 / c)
        if combo is not None:
            combo = vscale(combo, 1 / c)
        self.rows[p] = r
        if self.track:
            self.combos[p] = combo
        return True, None

    def contains(self, v):
        return not self.reduce(v)[0]

    def rank(self):
        return len(self.rows)

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows, key=self.order)] if self.order else \
            [self.rows[p] for p in sorted(self.rows)]


def rank(vectors, order=None):
    e = Echelon(order)
    for v in vectors:
        e.add(v)
    return e.rank()


def kernel(images, order=None):
    """Basis of {x : sum_i x_i images[i] = 0}, as dicts index -> coefficient.

    The returned basis is in reduced form: each vector has a distinct top index
    (largest i) with coefficient 1, and no other basis vector touches it.
    """
    e = Echelon(order, track=True)
    rel = []
    for i, v in enumerate(images):
        ok, combo = e.add(v, tag=i)
        if not ok:
            rel.append(clean(combo))
    return reduced_basis(rel)


def reduced_basis(vectors, order=None):
    """Reduced echelon basis of the span, pivots at largest keys."""
    e = Echelon(order)
    for v in vectors:
        e.add(v)
    piv = sorted(e.rows, key=order) if order else sorted(e.rows)
    out = []
    for p in piv:
        r = dict(e.rows[p])
        # rows only carry keys below their pivot, so one descending sweep suffices
        for q in reversed(piv):
            if q != p and q in r:
                iadd(r, e.rows[q], -r[q])
        out.append(r)
    return out


def span_intersection(A, B, order=None):
    """Basis of span(A) ∩ span(B)."""
    if not A or not B:
        return []
    images = list(A) + [vscale(b, -1) for b in B]
    rel = kernel(images)
    out = []
    for r in rel:
        v = {}
        for i, c in r.items():
            if i < len(A):
                iadd(v, A[i], c)
        if v:
            out.append(v)
    return reduced_basis(out, order)


def solve_in_span(basis, v):
    """Coefficients c with sum c_i basis[i] = v, or None if v is not in the span."""
    e = Echelon(track=True)
    for i, b in enumerate(basis):
        e.add(b, tag=i)
    # express v: reduce with tracked rows, then read off
    r, combo = e.reduce(v, {})
    if r:
        return None
    out = {}
    for k, c in combo.items():
        if c:
            out[k] = -c
    return out


# dense helpers for small matrices (lists of lists of Fractions)

def mat_identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_zero(m, n=None):
    n = m if n is None else n
    return [[Fraction(0)] * n for _ in range(m)]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = mat_zero(n, m)
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    if Bt[j]:
                        row[j] += a * Bt[j]
    return out


def mat_add(A, B, c=1):
    return [[a + c * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[c * a for a in r] for r in A]


def mat_vec(A, v):
    return [sum((a * x for a, x in zip(r, v)), Fraction(0)) for r in A]


def mat_transpose(A):
    return [list(r) for r in zip(*A)]


def commutator(A, B):
    return mat_add(mat_mul(A, B), mat_mul(B, A), -1)


def mat_inverse(A):
    """Gauss-Jordan inverse; raises ValueError when A is singular."""
    n = len(A)
    M = [list(map(frac, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(A)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            raise ValueError("matrix is singular")
        M[c], M[p] = M[p], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [r[n:] for r in M]


def mat_rank(A):
    return rank([{j: x for j, x in enumerate(r) if x} for r in A])


def mat_kernel(A):
    """Null space of a dense matrix A (acting on column vectors)."""
    if not A:
        return []
    ncols = len(A[0])
    cols = [{i: A[i][j] for i in range(len(A)) if A[i][j]} for j in range(ncols)]
    return [[r.get(j, Fraction(0)) for j in range(ncols)] for r in kernel(cols)]


def mat_is_zero(A):
    return all(x == 0 for r in A for x in r)


def to_sparse(v):
    return {i: x for i, x in enumerate(v) if x}


def to_dense(v, n):
    return [v.get(i, Fraction(0)) for i in range(n)]

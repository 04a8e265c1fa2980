"""Exterior forms on d, the operator Psi = omega ^ -, and sp(d)-modules.

A p-form is a dict keyed by sorted p-tuples S with value alpha(d_S).  The
wedge uses the convention (a^b)(..) = 1/(p!q!) sum over permutations, so
x^S ^ x^T = sign * x^{S u T}.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebra import derive_invariants
from .linalg import Echelon, iadd, mat_zero, mat_inverse, mat_mul, mat_add, \
    mat_identity, commutator, reduced_basis, kernel


def sort_sign(seq):
    """(sign, sorted tuple) of seq, or (0, None) with repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, None
    sign = 1
    # bubble sort parity
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign, tuple(seq)


class FormSpace:
    def __init__(self, spec):
        self.spec = spec
        self.n = spec.dim
        self.basis = {p: list(combinations(range(self.n), p)) for p in range(self.n + 1)}
        self.index = {p: {S: i for i, S in enumerate(b)} for p, b in self.basis.items()}

    def dim(self, p):
        return len(self.basis[p]) if 0 <= p <= self.n else 0

    def evaluate(self, alpha, idx):
        sign, S = sort_sign(idx)
        if not sign:
            return Fraction(0)
        return sign * alpha.get(S, 0)

    def xS(self, S):
        return {tuple(S): Fraction(1)}

    def covector(self, v):
        """The 1-form sum_k v_k x^k."""
        return {(k,): Fraction(c) for k, c in enumerate(v) if c}

    def two_form(self, M):
        return {(i, j): M[i][j] for i, j in combinations(range(self.n), 2) if M[i][j]}

    def omega(self):
        return self.two_form(self.spec.omega)

    def wedge(self, a, b):
        out = {}
        for S, x in a.items():
            for T, y in b.items():
                sign, U = sort_sign(S + T)
                if sign:
                    out[U] = out.get(U, 0) + sign * x * y
        return {k: v for k, v in out.items() if v}

    def d0(self, alpha):
        """Chevalley-Eilenberg differential with trivial coefficients."""
        p = _form_degree(alpha)
        if p is None:
            return {}
        out = {}
        for T in self.basis.get(p + 1, []):
            s = Fraction(0)
            for i in range(p + 1):
                for j in range(i + 1, p + 1):
                    rest = T[:i] + T[i + 1:j] + T[j + 1:]
                    sgn = -1 if (i + j) % 2 else 1   # (-1)^{(i+1)+(j+1)}
                    for k, c in self.spec.struct[T[i]][T[j]].items():
                        s += sgn * c * self.evaluate(alpha, (k,) + rest)
            if s:
                out[T] = s
        return out

    def contract(self, v, alpha):
        """iota_v alpha = alpha(v ^ ...)."""
        p = _form_degree(alpha)
        if not p:
            return {}
        out = {}
        for T in self.basis[p - 1]:
            s = sum((c * self.evaluate(alpha, (k,) + T) for k, c in enumerate(v) if c), Fraction(0))
            if s:
                out[T] = s
        return out

    def gl_act(self, A, alpha):
        """(A.alpha)(a_1..a_p) = sum_i (-1)^i alpha(A a_i, a_1, ^i, a_p) = -alpha(A-derivation)."""
        out = {}
        for S, x in alpha.items():
            # A.x^S = -sum_{s in S} sum_t A[s][t] x^{S with s -> t}
            for pos, s in enumerate(S):
                for t in range(self.n):
                    a = A[s][t]
                    if not a:
                        continue
                    sign, U = sort_sign(S[:pos] + (t,) + S[pos + 1:])
                    if sign:
                        out[U] = out.get(U, 0) - sign * a * x
        return {k: v for k, v in out.items() if v}

    def psi(self, alpha, power=1):
        om = self.omega()
        for _ in range(power):
            alpha = self.wedge(om, alpha)
        return alpha

    # subspaces

    def order(self, p):
        idx = self.index[p]
        return lambda S: idx[S]

    def I_basis(self, p):
        """Basis of I^p = omega ^ Omega^{p-2}."""
        if p < 2:
            return []
        return reduced_basis([self.psi(self.xS(S)) for S in self.basis[p - 2]], self.order(p))

    def J_basis(self, p):
        """Basis of J^p = ker(omega ^ -) on Omega^p."""
        images = [self.psi(self.xS(S)) for S in self.basis[p]]
        ker = kernel(images)
        vecs = [{self.basis[p][i]: c for i, c in v.items()} for v in ker]
        return reduced_basis(vecs, self.order(p))


def _form_degree(alpha):
    for S in alpha:
        return len(S)
    return None


class SpBasis:
    """The basis f^{ij} (i <= j) of sp(d) and coordinates with respect to it."""

    def __init__(self, spec, derived=None):
        self.spec = spec
        self.derived = derived or derive_invariants(spec)
        self.keys = sorted(self.derived.f)
        self.mats = [self.derived.f[k] for k in self.keys]
        self._ech = Echelon(track=True)
        for t, M in enumerate(self.mats):
            self._ech.add(_flat(M), tag=t)

    def coords(self, A):
        """dict key -> coefficient with A = sum coeff * f^key; ValueError if A is not in sp."""
        r, combo = self._ech.reduce(_flat(A), {})
        if r:
            raise ValueError("matrix is not in sp(d)")
        return {self.keys[t]: -c for t, c in combo.items() if c}

    def bracket(self, a, b):
        return commutator(self.derived.f[a], self.derived.f[b])


def _flat(M):
    return {(i, j): x for i, row in enumerate(M) for j, x in enumerate(row) if x}


@dataclass
class SpRepresentation:
    spb: SpBasis
    f: dict            # key (i,j) -> matrix
    name: str = ""

    @property
    def dim(self):
        return len(next(iter(self.f.values())))

    def of(self, A):
        out = mat_zero(self.dim)
        for k, c in self.spb.coords(A).items():
            out = mat_add(out, self.f[k], c)
        return out

    def is_lie_hom(self):
        keys = self.spb.keys
        for a in keys:
            for b in keys:
                lhs = commutator(self.f[a], self.f[b])
                if lhs != self.of(self.spb.bracket(a, b)):
                    return False
        return True

    def label(self):
        return highest_weight_labels(self)


def rep_from_gl(spb, act, dim, name=""):
    """Build an sp-representation from a map act(A) -> matrix valid on sp."""
    return SpRepresentation(spb, {k: act(spb.derived.f[k]) for k in spb.keys}, name)


def trivial_rep(spb):
    return SpRepresentation(spb, {k: [[Fraction(0)]] for k in spb.keys}, "trivial")


def vector_rep(spb):
    return SpRepresentation(spb, {k: [list(r) for r in spb.derived.f[k]] for k in spb.keys}, "d")


def sym2_rep(spb):
    """S^2 d, highest weight 2 pi_1."""
    n = spb.spec.dim
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    idx = {p: i for i, p in enumerate(pairs)}

    def act(A):
        M = mat_zero(len(pairs))
        for col, (a, b) in enumerate(pairs):
            for l in range(n):
                if A[l][a]:
                    M[idx[tuple(sorted((l, b)))]][col] += A[l][a]
                if A[l][b]:
                    M[idx[tuple(sorted((a, l)))]][col] += A[l][b]
        return M
    return rep_from_gl(spb, act, len(pairs), "S2d")


class QuotientRep:
    """Omega^p / I^p with complement basis chosen by graded-lex pivoting."""

    def __init__(self, fs, p):
        self.fs = fs
        self.p = p
        self.ech = Echelon(fs.order(p))
        for v in fs.I_basis(p):
            self.ech.add(v)
        self.complement = [S for S in fs.basis[p] if S not in self.ech.rows]
        self.pos = {S: i for i, S in enumerate(self.complement)}

    @property
    def dim(self):
        return len(self.complement)

    def lift(self, i):
        return {self.complement[i]: Fraction(1)}

    def project(self, alpha):
        r, _ = self.ech.reduce(alpha)
        return {self.pos[S]: c for S, c in r.items()}

    def in_I(self, alpha):
        return not self.ech.reduce(alpha)[0]

    def act(self, A):
        M = mat_zero(self.dim)
        for j in range(self.dim):
            for i, c in self.project(self.fs.gl_act(A, self.lift(j))).items():
                M[i][j] = c
        return M


class KernelRep:
    """J^p = ker Psi, with its reduced basis."""

    def __init__(self, fs, p):
        self.fs = fs
        self.p = p
        self.basis = fs.J_basis(p)
        order = fs.order(p)
        self.pivots = [max(v, key=order) for v in self.basis]

    @property
    def dim(self):
        return len(self.basis)

    def lift(self, i):
        return dict(self.basis[i])

    def coords(self, alpha):
        """Coordinates of alpha in J; ValueError if alpha is not in J."""
        out = {i: alpha[p] for i, p in enumerate(self.pivots) if alpha.get(p)}
        check = {}
        for i, c in out.items():
            iadd(check, self.basis[i], c)
        if check != {k: v for k, v in alpha.items() if v}:
            raise ValueError("form is not in J^%d" % self.p)
        return out

    def act(self, A):
        M = mat_zero(self.dim)
        for j in range(self.dim):
            for i, c in self.coords(self.fs.gl_act(A, self.lift(j))).items():
                M[i][j] = c
        return M


def quotient_rep(spb, p):
    q = QuotientRep(FormSpace(spb.spec), p)
    return rep_from_gl(spb, q.act, q.dim, "Omega^%d/I^%d" % (p, p)), q


def kernel_rep(spb, p):
    k = KernelRep(FormSpace(spb.spec), p)
    return rep_from_gl(spb, k.act, k.dim, "J^%d" % p), k


def build_fundamental_rep(spb, n):
    """R(pi_n) realised on J^{2N-n}; n = 0 gives the trivial rep on omega^N."""
    N = spb.spec.N
    if not 0 <= n <= N:
        raise ValueError("fundamental weights are pi_0..pi_N")
    rep, _ = kernel_rep(spb, 2 * N - n)
    rep.name = "pi%d" % n if n else "0"
    return rep


def fiber_iso_J_to_quotient(fs, m_top, qrep, krep):
    """The sp-isomorphism J^{N+m} -> Omega^{N-m}/I^{N-m} via (Psi^m)^{-1}.

    Returns a matrix from J coordinates to quotient coordinates.
    """
    N = fs.spec.N
    m = krep.p - N
    low = N - m
    assert qrep.p == low and m >= 0
    # Psi^m : Omega^low -> Omega^{N+m} is an isomorphism; invert it on the basis
    src = fs.basis[low]
    tgt = fs.basis[krep.p]
    P = mat_zero(len(tgt), len(src))
    for j, S in enumerate(src):
        for T, c in fs.psi(fs.xS(S), m).items():
            P[fs.index[krep.p][T]][j] = c
    Pinv = mat_inverse(P)
    M = mat_zero(qrep.dim, krep.dim)
    for j in range(krep.dim):
        v = krep.lift(j)
        col = [v.get(T, Fraction(0)) for T in tgt]
        beta = {src[i]: sum((Pinv[i][t] * col[t] for t in range(len(tgt))), Fraction(0)) for i in range(len(src))}
        beta = {k: x for k, x in beta.items() if x}
        for i, c in qrep.project(beta).items():
            M[i][j] = c
    return M


# highest weights

def symplectic_basis(spec):
    """Vectors b_1..b_2N with omega(b_i, b_{N+i}) = 1 and all other pairings 0."""
    n = spec.dim
    N = n // 2

    def om(a, b):
        return sum((a[i] * b[j] * spec.omega[i][j] for i in range(n) for j in range(n) if a[i] and b[j]), Fraction(0))

    pool = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    firsts, seconds = [], []
    while pool:
        v = pool.pop(0)
        if not any(v):
            continue
        w_i = next((i for i, u in enumerate(pool) if om(v, u)), None)
        if w_i is None:
            continue
        w = pool.pop(w_i)
        c = om(v, w)
        w = [x / c for x in w]
        new = []
        for u in pool:
            a, b = om(w, u), om(v, u)
            new.append([x + a * y - b * z for x, y, z in zip(u, v, w)])
        pool = new
        firsts.append(v)
        seconds.append(w)
    assert len(firsts) == N
    return firsts + seconds


def cartan_and_raising(spec):
    """Cartan elements H_i and simple raising operators, as matrices in the d_k basis."""
    n = spec.dim
    N = n // 2
    b = symplectic_basis(spec)
    B = [[b[c][r] for c in range(n)] for r in range(n)]   # columns are the b's
    Binv = mat_inverse(B)

    def conj(E):
        return mat_mul(mat_mul(B, E), Binv)

    def unitm(pairs):
        E = mat_zero(n)
        for (i, j), c in pairs:
            E[i][j] += c
        return E

    H = [conj(unitm([((i, i), 1), ((i + N, i + N), -1)])) for i in range(N)]
    raising = [conj(unitm([((i, i + 1), 1), ((i + 1 + N, i + N), -1)])) for i in range(N - 1)]
    raising.append(conj(unitm([((N - 1, n - 1), 1)])))
    return H, raising


def _common_kernel(mats, dim, within=None):
    """Basis (as dense vectors) of the common kernel of mats, inside span(within)."""
    if within is None:
        within = [[Fraction(int(i == j)) for i in range(dim)] for j in range(dim)]
    if not within:
        return []
    images = []
    for w in within:
        img = {}
        for t, M in enumerate(mats):
            for i in range(dim):
                s = sum((M[i][j] * w[j] for j in range(dim) if w[j]), Fraction(0))
                if s:
                    img[(t, i)] = s
        images.append(img)
    ker = kernel(images)
    out = []
    for v in ker:
        vec = [Fraction(0)] * dim
        for t, c in v.items():
            vec = [x + c * y for x, y in zip(vec, within[t])]
        out.append(vec)
    return out


def weight_spaces(Hs, vectors, dim, bound=12):
    """Split span(vectors) into joint eigenspaces of the commuting Hs.

    Returns a list of (weight tuple, basis).
    """
    spaces = [((), vectors)]
    for Hm in Hs:
        nxt = []
        for wt, vecs in spaces:
            found = 0
            for m in range(bound, -bound - 1, -1):
                shifted = mat_add(Hm, mat_identity(dim), -m)
                sub = _common_kernel([shifted], dim, vecs)
                if sub:
                    nxt.append((wt + (m,), sub))
                    found += len(sub)
            if found != len(vecs):
                raise ValueError("Cartan action is not diagonalisable with small integer weights")
        spaces = nxt
    return spaces


def dynkin_label(weight):
    N = len(weight)
    a = [weight[i] - weight[i + 1] for i in range(N - 1)] + [weight[-1]]
    parts = []
    for i, x in enumerate(a):
        if x:
            parts.append(("%dpi%d" % (x, i + 1)) if x != 1 else "pi%d" % (i + 1))
    return "+".join(parts) if parts else "0"


def highest_weight_labels_from(H, raising, act, dim):
    """Labels of irreducible constituents for a representation given by act(A)."""
    Hm = [act(h) for h in H]
    Rm = [act(e) for e in raising]
    hw = _common_kernel(Rm, dim)
    out = {}
    for wt, vecs in weight_spaces(Hm, hw, dim):
        out[dynkin_label(wt)] = out.get(dynkin_label(wt), 0) + len(vecs)
    return out


def highest_weight_labels(rep):
    H, raising = cartan_and_raising(rep.spb.spec)
    return highest_weight_labels_from(H, raising, rep.of, rep.dim)

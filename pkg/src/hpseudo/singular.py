"""Singular vectors of tensor modules and their d' ⊕ sp structure.

A vector v of V = H ⊗ R is singular when its left normal form
e * v = sum_I (d^(I) ⊗ 1) ⊗_H v'_I has v'_I = 0 for |I| >= 3.  Singular
vectors are stored as module vectors (dicts (J, a) -> c); the space of them
up to a degree cap carries the representation rho_sing, recovered here from
the low coefficients v'_I with |I| <= 2.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .ann import fourier_coefficients
from .forms import (SpBasis, build_fundamental_rep, cartan_and_raising, weight_spaces,
                    dynkin_label, highest_weight_labels, _common_kernel)
from .algebra import solve_frobenius_splitting, DPrimeModule
from .hopf import unit, mi_add
from .linalg import Echelon, kernel, reduced_basis, iadd, vscale, mat_zero, mat_identity, mat_add, solve_in_span
from .pseudo import dbar_terms
from .tensor import vec_key, kron, TensorModule


def vec_degree(v):
    return max((sum(J) for J, _ in v), default=-1)


def homogeneous_part(v, k):
    return {key: c for key, c in v.items() if sum(key[0]) == k}


def _high_part(L, low=3):
    return {(I, k): c for I, w in L.items() if sum(I) >= low for k, c in w.items()}


@dataclass
class SingularBasis:
    module: object
    cap: int
    vectors: list                     # reduced echelon basis, pivots on top-degree terms
    method: str = "left-normal"

    @property
    def dim(self):
        return len(self.vectors)

    def degrees(self):
        return [vec_degree(v) for v in self.vectors]

    def graded_dims(self):
        out = [0] * (self.cap + 1)
        for d in self.degrees():
            out[d] += 1
        return out

    def span_upto(self, k):
        """Basis of sing ∩ fil^k (pivots sit on top-degree terms)."""
        return [v for v in self.vectors if vec_degree(v) <= k]


def _kernel_basis(module, D, images):
    basis = module.basis(D)
    rel = kernel(images)
    vecs = [{basis[i]: c for i, c in r.items()} for r in rel]
    return reduced_basis(vecs, vec_key(module.H.n))


def is_singular(module, v):
    return not _high_part(module.left_action(v))


def solve_singular(module, D):
    """Basis of sing V ∩ fil^D from the left normal form of e * v."""
    images = [_high_part(module.left_coeffs(J, a)) for J, a in module.basis(D)]
    return SingularBasis(module, D, _kernel_basis(module, D, images))


def solve_singular_dual(module, D):
    """Basis of the common kernel of the P_1-action: (x_K ⊗_H e).v = 0 for |K| >= 3.

    The Fourier coefficients w_K of v satisfy (x ⊗_H e).v = sum <x, d^(K)> w_K,
    so the kernel is cut out by w_K = 0 for |K| >= 3.
    """
    H = module.H
    images = []
    for key in module.basis(D):
        fc = fourier_coefficients(H, module, {key: Fraction(1)})
        images.append(_high_part(fc))
    return SingularBasis(module, D, _kernel_basis(module, D, images), method="P1-action")


def same_span(A, B, n):
    order = vec_key(n)
    return reduced_basis(A, order) == reduced_basis(B, order)


# coordinates inside sing V

class SingCoords:
    def __init__(self, sb):
        self.sb = sb
        self.m = sb.dim
        self._ech = Echelon(vec_key(sb.module.H.n), track=True)
        for t, v in enumerate(sb.vectors):
            self._ech.add(v, tag=t)

    def coords(self, v):
        r, combo = self._ech.reduce(v, {})
        if r:
            raise ValueError("vector is not in the singular span")
        out = [Fraction(0)] * self.m
        for t, c in combo.items():
            out[t] = -c
        return out

    def contains(self, v):
        return not self._ech.reduce(v)[0]

    def vector(self, coords):
        out = {}
        for t, c in enumerate(coords):
            if c:
                iadd(out, self.sb.vectors[t], c)
        return out


@dataclass
class RhoSing:
    """rho_sing in the coordinates of a SingularBasis: matrices act on columns."""
    f: dict          # sp basis key -> matrix
    hat: list        # rho(d_i^), i = 0..2N-1
    c: list          # rho(c)
    spb: SpBasis

    def gens(self):
        return list(self.hat) + [self.c] + [self.f[k] for k in self.spb.keys]

    def of_sp(self, A):
        m = len(self.c)
        out = mat_zero(m)
        for k, x in self.spb.coords(A).items():
            out = mat_add(out, self.f[k], x)
        return out


def _columns(vectors, sc):
    cols = [sc.coords(v) for v in vectors]
    m = sc.m
    return [[cols[j][i] for j in range(m)] for i in range(m)]


def rho_sing(sb, spb=None):
    """rho_sing on sing V from the low left-normal coefficients.

    For singular v, e * v = sum (dbar_i dbar_j ⊗ 1) ⊗_H rho(f^ij)v
    - sum (dbar_k ⊗ 1) ⊗_H (rho(d^k^ + adsp d^k)v - d^k v) + (1 ⊗ 1) ⊗_H rho(c)v,
    so rho(f^ij)v = v'_{e_i+e_j}/2 and the rest follows by peeling off terms.
    """
    module = sb.module
    H = module.H
    spec = H.spec
    d = module.derived
    n = H.n
    spb = spb or SpBasis(spec, d)
    sc = SingCoords(sb)
    zero = H.zero_index
    dbar = [dbar_terms(H, k) for k in range(n)]
    dbar2 = {(i, j): H.mul(dbar[i], dbar[j]) for i in range(n) for j in range(n)}
    dual = [H.vector(d.dual[k]) for k in range(n)]
    adsp_coords = [spb.coords(d.adsp[k]) for k in range(n)]
    f_img = {k: [] for k in spb.keys}
    hat_up_img = [[] for _ in range(n)]
    c_img = []
    for s in sb.vectors:
        L = module.left_action(s)
        F = {}
        for (i, j) in spb.keys:
            F[i, j] = vscale(L.get(mi_add(unit(n, i), unit(n, j)), {}), Fraction(1, 2))
            f_img[i, j].append(F[i, j])
        R = {I: dict(w) for I, w in L.items()}
        for i in range(n):
            for j in range(n):
                Fij = F[min(i, j), max(i, j)]
                if not Fij:
                    continue
                for I, x in dbar2[i, j].items():
                    iadd(R.setdefault(I, {}), Fij, -x)
        if any(w and sum(I) >= 2 for I, w in R.items()):
            raise ValueError("vector is not singular")
        G = [vscale(R.get(unit(n, k), {}), -1) for k in range(n)]
        C = dict(R.get(zero, {}))
        for k in range(n):
            if spec.chi[k]:
                iadd(C, G[k], -spec.chi[k])
        c_img.append(C)
        for k in range(n):
            w = dict(G[k])
            iadd(w, module.hmul(dual[k], s))
            for key, x in adsp_coords[k].items():
                iadd(w, F[key], -x)
            hat_up_img[k].append(w)
    f = {k: _columns(v, sc) for k, v in f_img.items()}
    hat_up = [_columns(v, sc) for v in hat_up_img]
    hat = []
    for i in range(n):
        M = mat_zero(sc.m)
        for j in range(n):
            if spec.omega[i][j]:
                M = mat_add(M, hat_up[j], spec.omega[i][j])
        hat.append(M)
    return RhoSing(f, hat, _columns(c_img, sc), spb)


def rho_sing_relations(rho, spec):
    """Failures of the d' ⊕ sp relations for rho_sing (empty list when it is a representation)."""
    from .linalg import commutator
    bad = []
    n = spec.dim
    m = len(rho.c)
    for i in range(n):
        for j in range(i + 1, n):
            rhs = mat_scale_add(rho.c, spec.omega[i][j], m)
            for k, x in spec.struct[i][j].items():
                rhs = mat_add(rhs, rho.hat[k], x)
            if commutator(rho.hat[i], rho.hat[j]) != rhs:
                bad.append(("hat", i, j))
    for a in rho.spb.keys:
        for b in rho.spb.keys:
            if commutator(rho.f[a], rho.f[b]) != rho.of_sp(rho.spb.bracket(a, b)):
                bad.append(("sp", a, b))
        for i in range(n):
            if commutator(rho.f[a], rho.hat[i]) != mat_zero(m):
                bad.append(("mixed", a, i))
        if commutator(rho.f[a], rho.c) != mat_zero(m):
            bad.append(("central", a))
    for i in range(n):
        if commutator(rho.hat[i], rho.c) != mat_zero(m):
            bad.append(("central", i))
    return bad


def mat_scale_add(M, c, m):
    out = mat_zero(m)
    return mat_add(out, M, c)


def rho_sing_on_constants(sb, rho):
    """rho_sing(A)(1 ⊗ u) = 1 ⊗ rho_R(A)u for constant u (and rho(c) = lambda)."""
    module = sb.module
    sc = SingCoords(sb)
    zero = module.H.zero_index
    dim = module.rank
    act_mats = [kron(a, mat_identity(module.q)) for a in module.dmod.act]
    ok = True
    for a in range(dim):
        v = {(zero, a): Fraction(1)}
        col = sc.coords(v)

        def apply(M):
            return sc.vector([sum((M[i][j] * col[j] for j in range(sc.m) if col[j]), Fraction(0))
                              for i in range(sc.m)])

        def expect(M):
            return {(zero, b): M[b][a] for b in range(dim) if M[b][a]}
        for key in rho.spb.keys:
            ok &= apply(rho.f[key]) == expect(module.fiber["f"][key])
        for i, M in enumerate(rho.hat):
            ok &= apply(M) == expect(act_mats[i])
        ok &= apply(rho.c) == ({(zero, a): module.dmod.lam} if module.dmod.lam else {})
    return ok


# representations given by generator matrices

def fiber_gens(dmod, rep, shift=None):
    """Generators (d_i^..., c, f^key...) of Pi' ⊠ U, with Pi' optionally twisted by a covector."""
    p, q = dmod.dim, rep.dim
    Ip, Iq = mat_identity(p), mat_identity(q)
    acts = dmod.act
    if shift is not None:
        acts = [mat_add(a, Ip, s) for a, s in zip(acts, shift)]
    gens = [kron(a, Iq) for a in acts]
    gens.append([[dmod.lam if i == j else Fraction(0) for j in range(p * q)] for i in range(p * q)])
    gens += [kron(Ip, rep.f[k]) for k in rep.spb.keys]
    return gens


def hom_space(src, tgt):
    """Basis of {T : T S_g = T_g T for all g} as dense matrices (tgt_dim x src_dim)."""
    ds, dt = len(src[0]), len(tgt[0])
    columns = []
    for p in range(dt):
        for q in range(ds):
            col = {}
            for g, (S, T) in enumerate(zip(src, tgt)):
                for b in range(ds):
                    if S[q][b]:
                        col[(g, p, b)] = col.get((g, p, b), 0) + S[q][b]
                for a in range(dt):
                    if T[a][p]:
                        col[(g, a, q)] = col.get((g, a, q), 0) - T[a][p]
            columns.append({k: v for k, v in col.items() if v})
    out = []
    for v in kernel(columns):
        M = mat_zero(dt, ds)
        for idx, c in v.items():
            M[idx // ds][idx % ds] = c
        out.append(M)
    return out


def _closure(start, gens):
    """Span of the smallest gens-invariant subspace containing start (dense vectors)."""
    m = len(start[0])
    ech = Echelon()
    basis = []
    queue = list(start)
    while queue:
        v = queue.pop()
        d = {i: x for i, x in enumerate(v) if x}
        if not d:
            continue
        ok, _ = ech.add(d)
        if not ok:
            continue
        basis.append(v)
        for M in gens:
            queue.append([sum((M[i][j] * v[j] for j in range(m) if v[j]), Fraction(0)) for i in range(m)])
    return basis


def restrict(gens, basis):
    """Matrices of gens on the invariant subspace spanned by basis (dense vectors)."""
    m = len(basis[0])
    ech = Echelon(track=True)
    for t, b in enumerate(basis):
        ech.add({i: x for i, x in enumerate(b) if x}, tag=t)
    out = []
    k = len(basis)
    for M in gens:
        R = mat_zero(k)
        for t, b in enumerate(basis):
            img = {i: s for i in range(m)
                   if (s := sum((M[i][j] * b[j] for j in range(m) if b[j]), Fraction(0)))}
            r, combo = ech.reduce(img, {})
            if r:
                raise ValueError("subspace is not invariant")
            for u, c in combo.items():
                R[u][t] = -c
        out.append(R)
    return out


@dataclass
class Block:
    label: str              # sp highest weight
    degree: int             # filtration degree of the block
    coords: list            # dense vectors in sing coordinates
    vectors: list           # the same vectors in V
    gens: list = field(default_factory=list, repr=False)   # restricted (d_i^..., c, f...)

    @property
    def dim(self):
        return len(self.coords)

    def dprime_character(self):
        """The scalars by which d_i^ and c act, or None if they are not scalar."""
        n = len(self.gens) - 1
        out = []
        k = self.dim
        for M in self.gens[:n + 1]:
            x = M[0][0]
            if M != [[x if i == j else Fraction(0) for j in range(k)] for i in range(k)]:
                return None
            out.append(x)
        return out


def _filtration_adapted(maps, order):
    """Reorder/recombine a basis of V-valued linear maps so that each has a distinct top term.

    maps[t] is a list of module vectors (images of the source basis).  Returns
    (degree, map) pairs sorted by degree, where degree is the filtration degree.
    """
    flat = []
    for cols in maps:
        f = {}
        for col, v in enumerate(cols):
            for key, c in v.items():
                f[(key, col)] = c
        flat.append(f)

    def key(k):
        return order(k[0]) + (k[1],)
    out = []
    for f in reduced_basis(flat, key):
        cols = {}
        for (k, col), c in f.items():
            cols.setdefault(col, {})[k] = c
        mp = [cols.get(col, {}) for col in range(len(maps[0]))]
        out.append((max(vec_degree(v) for v in mp), mp))
    out.sort(key=lambda t: t[0])
    return out


def decompose_isotypic(sb, rho=None):
    """Split sing V into irreducible d' ⊕ sp blocks.

    The highest weight vectors of each weight form a d'-module W.  Copies of
    Pi'_{j chi/2} inside W (j = 0..cap) are found as images of d'-module maps,
    with a basis of maps adapted to the filtration so that each copy has a
    well defined degree; each copy is then closed under sp.
    """
    module = sb.module
    spec = module.H.spec
    if rho is None:
        rho = rho_sing(sb)
    sc = SingCoords(sb)
    m = sc.m
    if m == 0:
        return []
    Hc, Rc = cartan_and_raising(spec)
    Hm = [rho.of_sp(A) for A in Hc]
    Rm = [rho.of_sp(A) for A in Rc]
    hw = _common_kernel(Rm, m)
    order = vec_key(module.H.n)
    dgens = list(rho.hat) + [rho.c]
    p = module.dmod.dim
    cands = []
    for wt, W in weight_spaces(Hm, hw, m):
        label = dynkin_label(wt)
        Wg = restrict(dgens, W)
        for j in range(sb.cap + 1):
            src = [mat_add(a, mat_identity(p), Fraction(j, 2) * x) for a, x in zip(module.dmod.act, spec.chi)]
            src.append([[module.dmod.lam if r == c else Fraction(0) for c in range(p)] for r in range(p)])
            homs = hom_space(src, Wg)
            if not homs:
                continue
            maps = []
            for T in homs:
                cols = []
                for col in range(p):
                    dense = [sum((W[t][i] * T[t][col] for t in range(len(W))), Fraction(0)) for i in range(m)]
                    cols.append(sc.vector(dense))
                maps.append(cols)
            for k, mp in _filtration_adapted(maps, order):
                cands.append((k, label, [sc.coords(v) for v in mp]))
    cands.sort(key=lambda t: (t[0], t[1]))
    gens = rho.gens()
    covered = Echelon()
    blocks = []
    for k, label, cols in cands:
        if all(covered.contains({i: x for i, x in enumerate(c) if x}) for c in cols):
            continue
        basis = _closure(cols, gens)
        for b in basis:
            covered.add({i: x for i, x in enumerate(b) if x})
        vecs = [sc.vector(b) for b in basis]
        blocks.append(Block(label, max(vec_degree(v) for v in vecs), basis, vecs, restrict(gens, basis)))
    return blocks


# comparison with the classification

def fundamental_index(rep):
    """n if rep is irreducible of highest weight pi_n (n = 0 for the trivial rep), else None."""
    labels = highest_weight_labels(rep)
    if len(labels) != 1 or sum(labels.values()) != 1:
        return None
    (lab,) = labels
    if lab == "0":
        return 0
    if lab.startswith("pi") and lab[2:].isdigit():
        return int(lab[2:])
    return None


def expected_summands(spec, rep):
    """[(label, degree, chi multiple)] predicted for sing V(Pi', U)."""
    N = spec.N
    n = fundamental_index(rep)

    def lab(k):
        return "pi%d" % k if k else "0"
    if n is None:
        return [(highest_weight_labels(rep) and next(iter(highest_weight_labels(rep))), 0, 0)]
    if n == 0:
        return [("0", 0, 0), ("pi1", 1, Fraction(1, 2))]
    if n < N:
        return [(lab(n), 0, 0), (lab(n - 1), 1, Fraction(1, 2)), (lab(n + 1), 1, Fraction(1, 2)),
                (lab(n), 2, 1)]
    return [(lab(N), 0, 0), (lab(N - 1), 1, Fraction(1, 2)), (lab(N), 2, 1)]


def _label_rep(spb, label, rep):
    if label == "0":
        return build_fundamental_rep(spb, 0)
    if label.startswith("pi") and label[2:].isdigit():
        return build_fundamental_rep(spb, int(label[2:]))
    return rep


@dataclass
class Verdict:
    ok: bool
    checks: list                     # (name, ok, detail)
    blocks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))
        self.ok = self.ok and bool(ok)


def classify_compare(module, D, lam_reference=True):
    """Solve, decompose and compare with the classification of singular vectors."""
    H = module.H
    spec = H.spec
    spb = SpBasis(spec, module.derived)
    sb = solve_singular(module, D)
    rho = rho_sing(sb, spb)
    blocks = decompose_isotypic(sb, rho)
    v = Verdict(True, [], blocks)
    v.data["sing_dim"] = sb.dim
    v.data["graded_dims"] = sb.graded_dims()
    v.add("rho_sing is a d'+sp representation", not rho_sing_relations(rho, spec))
    v.add("rho_sing on constants matches the fiber action", rho_sing_on_constants(sb, rho))
    v.add("blocks exhaust sing", sum(b.dim for b in blocks) == sb.dim)
    expected = expected_summands(spec, module.rep)
    v.data["expected"] = [(lab, deg) for lab, deg, _ in expected]
    v.data["found"] = [(b.label, b.degree, b.dim) for b in blocks]
    remaining = list(blocks)
    all_matched = True
    for lab, deg, mult in expected:
        src = fiber_gens(module.dmod, _label_rep(spb, lab, module.rep),
                         [mult * x for x in spec.chi])
        hit = None
        for b in remaining:
            if b.label == lab and b.degree == deg and b.dim == len(src[0]) and hom_space(src, b.gens):
                hit = b
                break
        if hit is None:
            all_matched = False
        else:
            remaining.remove(hit)
    v.add("blocks match the predicted summands", all_matched and not remaining,
          "found %s, expected %s" % (v.data["found"], v.data["expected"]))
    v.add("no singular vectors above degree 2", all(b.degree <= 2 for b in blocks))
    if module.dmod.lam and lam_reference:
        lam_checks(module, D, sb, v)
    return v


def ell_vector(spec, derived, zeta):
    """The coordinates of l = sum_k zeta(d^k) d_k."""
    n = spec.dim
    return [sum((derived.r[k][l] * zeta[l] for l in range(n)), Fraction(0)) for k in range(n)]


def psi_top(module, u):
    """Top part of sum_{i,j} d_i d_j ⊗ rho_R(f^ij) u, for a fiber vector u (dict a -> c)."""
    n = module.H.n
    out = {}
    for (i, j), M in module.fiber["f"].items():
        I = mi_add(unit(n, i), unit(n, j))
        for a, c in u.items():
            for b in range(module.rank):
                if M[b][a]:
                    out[(I, b)] = out.get((I, b), 0) + 2 * M[b][a] * c
    return {k: x for k, x in out.items() if x}


def untwisted_module(module, zeta):
    """The lambda = 0 module on the same vector space (act - zeta lambda)."""
    lam = module.dmod.lam
    p = module.dmod.dim
    act = [mat_add(a, mat_identity(p), -z * lam) for a, z in zip(module.dmod.act, zeta)]
    return TensorModule(module.H, DPrimeModule(act, Fraction(0)), module.rep, module.derived)


def lam_checks(module, D, sb, verdict):
    """sing ∩ fil^1 is independent of lambda, and degree-two vectors deform as S + sigma lambda l ⊗ u."""
    H = module.H
    spec = H.spec
    n = H.n
    zeta, _ = solve_frobenius_splitting(spec)
    lam = module.dmod.lam
    m0 = untwisted_module(module, zeta)
    sb0 = solve_singular(m0, D)
    verdict.add("sing ∩ fil^1 independent of lambda", same_span(sb.span_upto(1), sb0.span_upto(1), n))
    blocks0 = decompose_isotypic(sb0)
    deg2 = [v for b in blocks0 if b.degree == 2 for v in b.vectors]
    if not deg2:
        return
    ell = ell_vector(spec, module.derived, zeta)
    basis_tops = [psi_top(module, {a: Fraction(1)}) for a in range(module.rank)]
    sigmas = []
    for S in deg2:
        u = solve_in_span(basis_tops, homogeneous_part(S, 2))
        if u is None:
            verdict.add("degree-two vector has top part psi(u)", False)
            return
        lu = {}
        for k in range(n):
            if ell[k]:
                for a, c in u.items():
                    lu[(unit(n, k), a)] = lu.get((unit(n, k), a), 0) + ell[k] * c
        works = []
        for sigma in (1, -1):
            T = dict(S)
            iadd(T, lu, sigma * lam)
            if is_singular(module, T):
                works.append(sigma)
        sigmas.append(tuple(works))
    sig = set(sigmas)
    verdict.data["S_lambda_sign"] = sorted(sig)
    verdict.add("S_lambda = S + sigma lambda l ⊗ u singular with a uniform sign",
                len(sig) == 1 and len(next(iter(sig))) == 1, "signs %s" % sorted(sig))

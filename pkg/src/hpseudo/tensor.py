"""Free modules V(R) = H ⊗ R, tensor modules, H-linear maps and twisting.

A vector of V = H ⊗ R is a dict (J, a) -> coefficient, meaning d^(J) ⊗ r_a.
The pseudoaction of the generator e is stored per fiber basis vector in free
form, see pseudo.py.
"""
from fractions import Fraction

from .algebra import derive_invariants, shift_module
from .hopf import multi_indices_upto, glex_key, mi_sub, sub_indices, unit, degree
from .linalg import iadd, mat_zero, mat_add, mat_mul, mat_identity, mat_scale, Echelon
from .pseudo import _acc, mult_legs, push_through, left_normal, swap12, dbar_terms, iota_e


def kron(A, B):
    p, q = len(A), len(B)
    out = mat_zero(p * q)
    for i in range(p):
        for j in range(p):
            a = A[i][j]
            if a:
                for k in range(q):
                    for l in range(q):
                        if B[k][l]:
                            out[i * q + k][j * q + l] = a * B[k][l]
    return out


def matrix_of_H(H, mats, h):
    """rho(h) for a d-representation given by generator matrices."""
    p = len(mats[0])
    out = mat_zero(p)
    for I, c in h.items():
        M = mat_identity(p)
        for k, e in enumerate(I):
            for t in range(e):
                M = mat_mul(M, mats[k])
            if e > 1:
                f = 1
                for t in range(2, e + 1):
                    f *= t
                M = mat_scale(M, Fraction(1, f))
        out = mat_add(out, M, c)
    return out


def vec_key(n):
    """Ordering of basis vectors (J, a) of H ⊗ R: graded-lex in J, then a."""
    def key(k):
        J, a = k
        return glex_key(J) + (a,)
    return key


class FreeModule:
    """V = H ⊗ R with a pseudoaction given on 1 ⊗ r_a by gen_action[a]."""

    def __init__(self, H, rank, gen_action, name=""):
        self.H = H
        self.rank = rank
        self.gen_action = gen_action
        self.name = name
        self._ln = {}

    def basis(self, D):
        return [(J, a) for J in multi_indices_upto(self.H.n, D) for a in range(self.rank)]

    def order(self):
        return vec_key(self.H.n)

    def action(self, v):
        """e * v in free form."""
        out = {}
        for (J, a), c in v.items():
            base = self.gen_action[a]
            if not any(J):
                iadd(out, base, c)
            else:
                iadd(out, mult_legs(self.H, base, None, {J: 1}), c)
        return out

    def left_coeffs(self, J, a):
        """The v'_I of e * (d^(J) ⊗ r_a), memoised."""
        key = (J, a)
        if key not in self._ln:
            self._ln[key] = left_normal(self.H, self.action({key: Fraction(1)}))
        return self._ln[key]

    def left_action(self, v):
        out = {}
        for (J, a), c in v.items():
            for I, w in self.left_coeffs(J, a).items():
                iadd(out.setdefault(I, {}), w, c)
        return {I: w for I, w in out.items() if w}

    def hmul(self, h, v):
        out = {}
        for (J, a), c in v.items():
            for I, x in h.items():
                for K, y in self.H.mul_basis(I, J).items():
                    _acc(out, (K, a), c * x * y)
        return out

    def module_axiom_defect(self, He, v):
        """[e*e]*v - e*(e*v) + (sigma12 ⊗_H id) e*(e*v) in the three-leg free form."""
        H = self.H
        ev = self.action(v)
        lhs = {}
        for (P, Q, _), c in He.gen_bracket(0, 0).items():
            for (R, S, b), w in ev.items():
                for A in sub_indices(R):
                    B = mi_sub(R, A)
                    for P2, x in H.mul_basis(P, A).items():
                        for Q2, y in H.mul_basis(Q, B).items():
                            _acc(lhs, (P2, Q2, S, b), c * w * x * y)
        eev = {}
        for (P, Q, b), c in ev.items():
            for (R, S, b2), w in self.gen_action[b].items():
                for A in sub_indices(S):
                    B = mi_sub(S, A)
                    for P2, x in H.mul_basis(P, A).items():
                        for Q2, y in H.mul_basis(Q, B).items():
                            _acc(eev, (R, P2, Q2, b2), c * w * x * y)
        out = dict(lhs)
        iadd(out, eev, -1)
        iadd(out, swap12(eev), 1)
        return out


class TensorModule(FreeModule):
    """V(Pi', U) with fiber Pi' ⊗ U, index alpha * dim U + beta."""

    def __init__(self, H, dmod, rep, derived=None, name=""):
        self.derived = derived or derive_invariants(H.spec)
        self.dmod = dmod
        self.rep = rep
        p, q = dmod.dim, rep.dim
        self.p, self.q = p, q
        n = H.n
        d = self.derived
        Ip, Iq = mat_identity(p), mat_identity(q)
        fmat = {key: kron(Ip, M) for key, M in rep.f.items()}
        hat_up = []
        for k in range(n):
            M = mat_zero(p)
            for l in range(n):
                if d.r[k][l]:
                    M = mat_add(M, dmod.act[l], d.r[k][l])
            hat_up.append(kron(M, Iq))
        adsp = [kron(Ip, rep.of(d.adsp[k])) for k in range(n)]
        self.fiber = {"f": fmat, "hat_up": hat_up, "adsp": adsp}
        dim = p * q
        zero = H.zero_index
        dbar = [dbar_terms(H, k) for k in range(n)]
        dbar2 = {(i, j): H.mul(dbar[i], dbar[j]) for i in range(n) for j in range(n)}
        dual = [H.vector(d.dual[k]) for k in range(n)]
        gen = []
        for a in range(dim):
            out = {}
            for i in range(n):
                for j in range(n):
                    M = fmat[min(i, j), max(i, j)]
                    for b in range(dim):
                        x = M[b][a]
                        if x:
                            for P, y in dbar2[i, j].items():
                                _acc(out, (P, zero, b), x * y)
            for k in range(n):
                M = mat_add(hat_up[k], adsp[k])
                for b in range(dim):
                    x = M[b][a]
                    if x:
                        for P, y in dbar[k].items():
                            _acc(out, (P, zero, b), -x * y)
                # (dbar_k ⊗ 1) ⊗_H (d^k ⊗ r_a)
                for P, y in dbar[k].items():
                    for Q, z in dual[k].items():
                        # Δ(d_Q) = d_Q ⊗ 1 + 1 ⊗ d_Q for degree one Q
                        for P2, w in H.mul_basis(P, Q).items():
                            _acc(out, (P2, zero, a), y * z * w)
                        _acc(out, (P, Q, a), y * z)
            if dmod.lam:
                _acc(out, (zero, zero, a), dmod.lam)
            gen.append(out)
        super().__init__(H, dim, gen, name or "V")

    def fiber_of(self, key, which):
        return self.fiber[which][key]


def t_module(H, dmod, rep, derived=None, name=""):
    """T(Pi', U) = V(Pi'_{-phi}, U)."""
    derived = derived or derive_invariants(H.spec)
    return TensorModule(H, shift_module(dmod, [-x for x in derived.phi]), rep, derived, name or "T")


def t_form_action_direct(H, dmod, rep, derived=None):
    """Generator actions of T(Pi', U) straight from the T-form formula, for cross-checks."""
    derived = derived or derive_invariants(H.spec)
    d = derived
    n = H.n
    p, q = dmod.dim, rep.dim
    Ip, Iq = mat_identity(p), mat_identity(q)
    zero = H.zero_index
    gens = []
    for a in range(p * q):
        out = {}

        def apply(M):
            return {b: M[b][a] for b in range(p * q) if M[b][a]}
        for k in range(n):
            dbar = dbar_terms(H, k)
            # (dbar_k ⊗ d^k) ⊗_H v
            for P, y in dbar.items():
                for l in range(n):
                    if d.r[k][l]:
                        _acc(out, (P, unit(n, l), a), y * d.r[k][l])
            hat = mat_zero(p)
            for l in range(n):
                if d.r[k][l]:
                    hat = mat_add(hat, dmod.act[l], d.r[k][l])
            M = mat_add(kron(hat, Iq), kron(Ip, rep.of(d.adsp[k])))
            for b, x in apply(M).items():
                for P, y in dbar.items():
                    _acc(out, (P, zero, b), -x * y)
        if dmod.lam:
            _acc(out, (zero, zero, a), dmod.lam)
        for i in range(n):
            for j in range(n):
                M = kron(Ip, rep.f[min(i, j), max(i, j)])
                for b, x in apply(M).items():
                    for P, y in H.mul(dbar_terms(H, i), dbar_terms(H, j)).items():
                        _acc(out, (P, zero, b), x * y)
        gens.append(out)
    return gens


def w_tensor_restricted(H, pi_mats, gl_act, qdim, derived=None):
    """Restrict the W(d) tensor module T(Pi, U) to He through iota.

    gl_act(A) is the matrix of A in gl(d) on U.  Returns generator actions of e
    in free form, computed from the W(d) action formula and H-bilinearity.
    """
    from .algebra import ad_matrix
    derived = derived or derive_invariants(H.spec)
    n = H.n
    p = len(pi_mats[0])
    Ip, Iq = mat_identity(p), mat_identity(qdim)
    zero = H.zero_index
    # W(d)-generator actions (1 ⊗ d_i) * (1 ⊗ v)
    wgen = []
    for i in range(n):
        e_i = [Fraction(int(t == i)) for t in range(n)]
        ad_on_U = kron(Ip, gl_act(ad_matrix(H.spec, e_i)))
        d_on_Pi = kron(pi_mats[i], Iq)
        acts = []
        for a in range(p * qdim):
            out = {}
            for b in range(p * qdim):
                x = ad_on_U[b][a] + d_on_Pi[b][a]
                if x:
                    _acc(out, (zero, zero, b), x)
            for j in range(n):
                E = mat_zero(n)
                E[i][j] = Fraction(1)
                M = kron(Ip, gl_act(E))
                for b in range(p * qdim):
                    if M[b][a]:
                        _acc(out, (unit(n, j), zero, b), M[b][a])
            _acc(out, (zero, unit(n, i), a), -1)
            acts.append(out)
        wgen.append(acts)
    gens = []
    for a in range(p * qdim):
        out = {}
        for (I, i), c in iota_e(H, derived).items():
            iadd(out, mult_legs(H, wgen[i][a], {I: 1}, None), c)
        gens.append(out)
    return gens


def twist_action(H, gen_action, pi_mats, rank0):
    """T_Pi of a free module: e*(1⊗u⊗v_a) = sum (f ⊗ g_(1)) ⊗_H (1 ⊗ S(g_(2))u ⊗ v_b).

    New fiber index is u * rank0 + a.
    """
    p = len(pi_mats[0])
    out_gens = []
    cache = {}
    for u in range(p):
        for a in range(rank0):
            out = {}
            for (P, Q, b), c in gen_action[a].items():
                for A in sub_indices(Q):
                    B = mi_sub(Q, A)
                    if B not in cache:
                        cache[B] = matrix_of_H(H, pi_mats, H.antipode_basis(B))
                    M = cache[B]
                    for u2 in range(p):
                        x = M[u2][u]
                        if x:
                            _acc(out, (P, A, u2 * rank0 + b), c * x)
            out_gens.append(out)
    return out_gens


class ModuleMap:
    """An H-linear map H ⊗ R -> H ⊗ R' given by images[a] of 1 ⊗ r_a."""

    def __init__(self, H, images, src_rank, tgt_rank, shift=None, name=""):
        self.H = H
        self.images = [{k: Fraction(v) for k, v in im.items() if v} for im in images]
        self.src_rank = src_rank
        self.tgt_rank = tgt_rank
        self.shift = max((degree({J: 1}) for im in self.images for (J, _) in im), default=0) \
            if shift is None else shift
        self.name = name

    def apply(self, v):
        out = {}
        for (J, a), c in v.items():
            for (K, b), x in self.images[a].items():
                for L, y in self.H.mul_basis(J, K).items():
                    _acc(out, (L, b), c * x * y)
        return out

    def compose(self, other):
        """self ∘ other."""
        return ModuleMap(self.H, [self.apply(im) for im in other.images], other.src_rank, self.tgt_rank,
                         name="%s.%s" % (self.name, other.name))

    def is_zero(self):
        return not any(self.images)

    def intertwines(self, src, tgt):
        """(id ⊗ id ⊗_H beta)(e * r_a) == e * beta(r_a) for all fiber basis vectors."""
        for a in range(self.src_rank):
            lhs = push_through(self.H, src.gen_action[a], self.images)
            rhs = tgt.action(self.images[a])
            if lhs != rhs:
                return False
        return True

    def filtered_ranks(self, D):
        """rank of the map restricted to fil^k, for k = 0..D."""
        ech = Echelon(vec_key(self.H.n))
        ranks = []
        for k in range(D + 1):
            for J in multi_indices_upto(self.H.n, k):
                if sum(J) != k:
                    continue
                for a in range(self.src_rank):
                    ech.add(self.apply({(J, a): Fraction(1)}))
            ranks.append(ech.rank())
        return ranks

    def image_basis(self, D):
        """Echelon basis of beta(fil^D)."""
        ech = Echelon(vec_key(self.H.n))
        for J in multi_indices_upto(self.H.n, D):
            for a in range(self.src_rank):
                ech.add(self.apply({(J, a): Fraction(1)}))
        return ech


def twist_map(H, images, pi_mats, src_rank0, tgt_rank0):
    """T_Pi(beta)(1⊗u⊗v_a) = sum h_(1) ⊗ S(h_(2))u ⊗ v'_b."""
    p = len(pi_mats[0])
    out = []
    cache = {}
    for u in range(p):
        for a in range(src_rank0):
            im = {}
            for (J, b), c in images[a].items():
                for A in sub_indices(J):
                    B = mi_sub(J, A)
                    if B not in cache:
                        cache[B] = matrix_of_H(H, pi_mats, H.antipode_basis(B))
                    M = cache[B]
                    for u2 in range(p):
                        x = M[u2][u]
                        if x:
                            _acc(im, (A, u2 * tgt_rank0 + b), c * x)
            out.append(im)
    return ModuleMap(H, out, p * src_rank0, p * tgt_rank0)


def tensor_module(H, dmod, rep, derived=None, name=""):
    """V(Pi', U) after checking Pi' against the central extension relations.

    A nonzero central charge needs chi = 0 and an exact omega.
    """
    from .algebra import SpecError, validate_dprime_module, solve_frobenius_splitting
    spec = H.spec
    if dmod.lam:
        try:
            solve_frobenius_splitting(spec)
        except ValueError as exc:
            raise SpecError("lambda != 0 is inadmissible: %s" % exc) from None
    report = validate_dprime_module(spec, dmod)
    if not report.ok:
        raise SpecError("; ".join("%s %s" % f for f in report.failures()))
    return TensorModule(H, dmod, rep, derived, name)

"""Two-sided elements of (H⊗H)⊗_H V and pseudoalgebra brackets.

Throughout, V = H ⊗ V0 is free and an element of (H⊗H)⊗_H V is stored in
its free form: a dict (P, Q, a) -> coefficient meaning
(d^(P) ⊗ d^(Q)) ⊗_H (1 ⊗ v_a).  Every element has a unique free form, since
(f⊗g) ⊗_H (h⊗u) = ((f⊗g) Δ(h)) ⊗_H (1⊗u).
The same convention with three H factors is used for (H⊗H⊗H)⊗_H V.
"""
from fractions import Fraction

from .algebra import derive_invariants
from .hopf import mi_sub, sub_indices, unit
from .linalg import iadd, vscale, mat_zero


def _acc(out, key, val):
    v = out.get(key, 0) + val
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def free_from_raw(H, raw):
    """raw: iterable of (f, g, v) with f, g in H and v in H⊗V0 (dict (J, a) -> c)."""
    out = {}
    for f, g, v in raw:
        for (J, a), c in v.items():
            for A in sub_indices(J):
                B = mi_sub(J, A)
                for P, x in H.mul(f, {A: 1}).items():
                    for Q, y in H.mul(g, {B: 1}).items():
                        _acc(out, (P, Q, a), c * x * y)
    return out


def left_normal(H, X):
    """Free form -> {I: v'_I} with X = sum_I (d^(I) ⊗ 1) ⊗_H v'_I, v'_I in H⊗V0."""
    out = {}
    for (P, Q, a), c in X.items():
        # f⊗g⊗u = sum (f S(g_(1)) ⊗ 1) ⊗_H g_(2) u
        for A in sub_indices(Q):
            B = mi_sub(Q, A)
            for I, x in H.mul({P: 1}, H.antipode_basis(A)).items():
                slot = out.setdefault(I, {})
                _acc(slot, (B, a), c * x)
    return {I: v for I, v in out.items() if v}


def right_normal(H, X):
    """Free form -> {I: v''_I} with X = sum_I (1 ⊗ d^(I)) ⊗_H v''_I."""
    out = {}
    for (P, Q, a), c in X.items():
        # f⊗g⊗u = sum (1 ⊗ g S(f_(2))) ⊗_H f_(1) u
        for A in sub_indices(P):
            B = mi_sub(P, A)
            for I, x in H.mul({Q: 1}, H.antipode_basis(B)).items():
                slot = out.setdefault(I, {})
                _acc(slot, (A, a), c * x)
    return {I: v for I, v in out.items() if v}


def from_left_normal(H, L):
    one = H.one()
    return free_from_raw(H, [({I: 1}, one, v) for I, v in L.items()])


def from_right_normal(H, R):
    one = H.one()
    return free_from_raw(H, [(one, {I: 1}, v) for I, v in R.items()])


class TwoSidedElement:
    """An element of (H⊗H)⊗_H V, compared through its free form."""

    def __init__(self, H, free):
        self.H = H
        self.free = {k: Fraction(v) for k, v in free.items() if v}

    @classmethod
    def from_left(cls, H, L):
        return cls(H, from_left_normal(H, L))

    @classmethod
    def from_raw(cls, H, raw):
        return cls(H, free_from_raw(H, raw))

    def left(self):
        return left_normal(self.H, self.free)

    def right(self):
        return right_normal(self.H, self.free)

    def __eq__(self, other):
        return self.free == other.free

    def __add__(self, other):
        return TwoSidedElement(self.H, iadd(dict(self.free), other.free))

    def __sub__(self, other):
        return TwoSidedElement(self.H, iadd(dict(self.free), other.free, -1))

    def scale(self, c):
        return TwoSidedElement(self.H, vscale(self.free, c))

    def swap(self):
        """(sigma ⊗_H id)."""
        return TwoSidedElement(self.H, swap12(self.free))

    def __repr__(self):
        return "TwoSidedElement(%d terms)" % len(self.free)


def swap12(X):
    out = {}
    for key, c in X.items():
        out[(key[1], key[0]) + key[2:]] = c
    return out


def mult_legs(H, X, f=None, g=None):
    """(f ⊗ g) X for X in free form; None means 1."""
    out = {}
    for (P, Q, a), c in X.items():
        left = H.mul(f, {P: 1}) if f is not None else {P: Fraction(1)}
        right = H.mul(g, {Q: 1}) if g is not None else {Q: Fraction(1)}
        for P2, x in left.items():
            for Q2, y in right.items():
                _acc(out, (P2, Q2, a), c * x * y)
    return out


def push_through(H, X, images):
    """(P⊗Q) ⊗_H images[a] for each free term, where images[a] is in H⊗V0'.

    This is (id ⊗ id ⊗_H beta) for an H-linear map beta with beta(1⊗v_a) = images[a].
    Works for two or three H legs.
    """
    out = {}
    for key, c in X.items():
        legs, a = key[:-1], key[-1]
        for (J, b), y in images[a].items():
            if len(legs) == 2:
                for A in sub_indices(J):
                    B = mi_sub(J, A)
                    for P, u in H.mul_basis(legs[0], A).items():
                        for Q, w in H.mul_basis(legs[1], B).items():
                            _acc(out, (P, Q, b), c * y * u * w)
            else:
                for A in sub_indices(J):
                    rest = mi_sub(J, A)
                    for B in sub_indices(rest):
                        C = mi_sub(rest, B)
                        for P, u in H.mul_basis(legs[0], A).items():
                            for Q, w in H.mul_basis(legs[1], B).items():
                                for R, z in H.mul_basis(legs[2], C).items():
                                    _acc(out, (P, Q, R, b), c * y * u * w * z)
    return out


class PseudoAlgebra:
    """A pseudoalgebra on H ⊗ g0 given by brackets of the generators 1⊗g_a.

    Elements of H ⊗ g0 are dicts (I, a) -> coefficient.
    """

    def __init__(self, H, ngens, gen_bracket, name=""):
        self.H = H
        self.ngens = ngens
        self._gb = gen_bracket
        self._cache = {}
        self.name = name

    def gen(self, a):
        return {(self.H.zero_index, a): Fraction(1)}

    def gen_bracket(self, a, b):
        key = (a, b)
        if key not in self._cache:
            self._cache[key] = {k: Fraction(v) for k, v in self._gb(a, b).items() if v}
        return self._cache[key]

    def bracket(self, x, y):
        """[x * y] in free form, by H-bilinearity."""
        out = {}
        for (I, a), c in x.items():
            for (J, b), d in y.items():
                base = self.gen_bracket(a, b)
                if not any(I) and not any(J):
                    iadd(out, base, c * d)
                else:
                    iadd(out, mult_legs(self.H, base, {I: 1}, {J: 1}), c * d)
        return out

    def _bracket_left_expanded(self, X, z):
        """[[x*y]*z] given X = [x*y] in free form."""
        H = self.H
        out = {}
        for (P, Q, d), c in X.items():
            for (R, S, e), w in self.bracket(self.gen(d), z).items():
                for A in sub_indices(R):
                    B = mi_sub(R, A)
                    for P2, u in H.mul_basis(P, A).items():
                        for Q2, v in H.mul_basis(Q, B).items():
                            _acc(out, (P2, Q2, S, e), c * w * u * v)
        return out

    def _bracket_right_expanded(self, x, X):
        """[x*[y*z]] given X = [y*z] in free form."""
        H = self.H
        out = {}
        for (P, Q, d), c in X.items():
            for (R, S, e), w in self.bracket(x, self.gen(d)).items():
                for A in sub_indices(S):
                    B = mi_sub(S, A)
                    for P2, u in H.mul_basis(P, A).items():
                        for Q2, v in H.mul_basis(Q, B).items():
                            _acc(out, (R, P2, Q2, e), c * w * u * v)
        return out

    def jacobi_defect(self, x, y, z):
        """[[x*y]*z] - [x*[y*z]] + (sigma12 ⊗_H id)[y*[x*z]] in free form."""
        lhs = self._bracket_left_expanded(self.bracket(x, y), z)
        r1 = self._bracket_right_expanded(x, self.bracket(y, z))
        r2 = self._bracket_right_expanded(y, self.bracket(x, z))
        out = dict(lhs)
        iadd(out, r1, -1)
        iadd(out, swap12(r2), 1)
        return out

    def skew_defect(self, x, y):
        out = dict(self.bracket(y, x))
        iadd(out, swap12(self.bracket(x, y)), 1)
        return out

    def check_axioms(self, elements=None):
        """Skew-symmetry and Jacobi on all triples from `elements` (default: generators)."""
        if elements is None:
            elements = [self.gen(a) for a in range(self.ngens)]
        skew = all(not self.skew_defect(x, y) for x in elements for y in elements)
        jac = all(not self.jacobi_defect(x, y, z) for x in elements for y in elements for z in elements)
        return {"skew": skew, "jacobi": jac}


def w_algebra(H):
    """W(d) on H⊗d."""
    n = H.n
    spec = H.spec
    zero = H.zero_index

    def gb(a, b):
        out = {}
        for k, c in spec.struct[a][b].items():
            _acc(out, (zero, zero, k), c)
        _acc(out, (zero, unit(n, a), b), -1)
        _acc(out, (unit(n, b), zero, a), 1)
        return out
    return PseudoAlgebra(H, n, gb, "W")


def dbar_terms(H, k):
    """dbar_k = d_k - chi_k as an element of H."""
    return iadd(H.gen(k), {H.zero_index: -H.spec.chi[k]})


def h_algebra(H, r=None):
    """H(d, chi, omega) on H⊗ke, with [e*e] = sum r^ij dbar_i ⊗ dbar_j ⊗_H e.

    Passing a different r builds a (possibly broken) mutant for negative tests.
    """
    if r is None:
        r = derive_invariants(H.spec).r
    n = H.n

    def gb(a, b):
        out = {}
        for i in range(n):
            for j in range(n):
                if r[i][j]:
                    for P, x in dbar_terms(H, i).items():
                        for Q, y in dbar_terms(H, j).items():
                            _acc(out, (P, Q, 0), r[i][j] * x * y)
        return out
    return PseudoAlgebra(H, 1, gb, "H")


def current_algebra(H, basis_mats, bracket_coords, name="Cur"):
    """Cur g0 = H ⊗ g0 with [a*b] = (1⊗1) ⊗_H [a,b].

    bracket_coords(a, b) returns {c: coefficient} for the Lie bracket of basis elements.
    """
    zero = H.zero_index

    def gb(a, b):
        return {(zero, zero, c): v for c, v in bracket_coords(a, b).items()}
    return PseudoAlgebra(H, len(basis_mats), gb, name)


def iota_e(H, derived=None):
    """iota(e) = -sum_i dbar_i ⊗ d^i in H⊗d."""
    derived = derived or derive_invariants(H.spec)
    out = {}
    n = H.n
    for i in range(n):
        for l in range(n):
            rl = derived.r[i][l]
            if rl:
                for P, x in dbar_terms(H, i).items():
                    _acc(out, (P, l), -rl * x)
    return out


def check_iota_homomorphism(H, derived=None):
    """[iota(e) * iota(e)]_W == (id⊗id⊗_H iota)[e*e]_H."""
    derived = derived or derive_invariants(H.spec)
    W = w_algebra(H)
    He = h_algebra(H, derived.r)
    ie = iota_e(H, derived)
    lhs = W.bracket(ie, ie)
    img = {0: {(I, a): c for (I, a), c in ie.items()}}
    rhs = push_through(H, He.gen_bracket(0, 0), img)
    return lhs == rhs


# the gl(d)-valued image tau(iota(e)), stored as {(I, (row, col)): c}

def _add_mat(out, I, M, c=1):
    for r_, row in enumerate(M):
        for c_, x in enumerate(row):
            if x:
                _acc(out, (I, (r_, c_)), c * x)


def tau_direct(H, derived=None):
    """tau(h⊗d_i) = h⊗ad d_i + sum_j h d_j ⊗ e_i^j applied to iota(e)."""
    from .algebra import ad_matrix
    derived = derived or derive_invariants(H.spec)
    n = H.n
    out = {}
    for (I, a), c in iota_e(H, derived).items():
        e_a = [Fraction(int(t == a)) for t in range(n)]
        _add_mat(out, I, ad_matrix(H.spec, e_a), c)
        for j in range(n):
            E = mat_zero(n)
            E[a][j] = Fraction(1)
            for K, y in H.mul_basis(I, unit(n, j)).items():
                _add_mat(out, K, E, c * y)
    return out


def tau_sp_form(H, derived=None):
    """-sum_k dbar_k ⊗ (ad^sp d^k + chi(d^k)/2 I) + sum_{i,j} dbar_i dbar_j ⊗ f^{ij}."""
    derived = derived or derive_invariants(H.spec)
    n = H.n
    out = {}
    for k in range(n):
        M = [list(r) for r in derived.adsp[k]]
        for t in range(n):
            M[t][t] += derived.chi_dual[k] / 2
        for P, x in dbar_terms(H, k).items():
            _add_mat(out, P, M, -x)
    for i in range(n):
        for j in range(n):
            f = derived.f[min(i, j), max(i, j)]
            for P, x in H.mul(dbar_terms(H, i), dbar_terms(H, j)).items():
                _add_mat(out, P, f, x)
    return out


def tau_gl_form(H, derived=None):
    """-sum_k dbar_k ⊗ (ad d^k + d^k ⊗ chi) - sum_{i,j} dbar_i dbar_j ⊗ e^{ij}."""
    derived = derived or derive_invariants(H.spec)
    n = H.n
    out = {}
    for k in range(n):
        M = [list(r) for r in derived.ad_dual[k]]
        for l in range(n):
            for j in range(n):
                M[l][j] += derived.r[k][l] * H.spec.chi[j]
        for P, x in dbar_terms(H, k).items():
            _add_mat(out, P, M, -x)
    for i in range(n):
        for j in range(n):
            for P, x in H.mul(dbar_terms(H, i), dbar_terms(H, j)).items():
                _add_mat(out, P, derived.e_up[i, j], -x)
    return out

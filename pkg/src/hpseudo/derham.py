"""Pseudo de Rham complexes, plain and conformally symplectic.

Fiber coordinates of Pi ⊗ W (W a space of forms) are u * dim W + w.
Intermediate form-valued elements of H ⊗ Pi ⊗ Omega^p are dicts
(J, u, S) -> coefficient.
"""
from dataclasses import dataclass
from fractions import Fraction

from .algebra import derive_invariants, DPrimeModule
from .forms import FormSpace, QuotientRep, KernelRep, SpBasis, rep_from_gl
from .hopf import unit, fil_dim
from .linalg import mat_identity, mat_add, mat_inverse, mat_zero
from .pseudo import _acc
from .tensor import ModuleMap, TensorModule


class DeRham:
    """d_Pi on H ⊗ Pi ⊗ Lambda d*, for a d-module Pi given by matrices."""

    def __init__(self, H, pi_mats, derived=None):
        self.H = H
        self.spec = H.spec
        self.fs = FormSpace(H.spec)
        self.derived = derived or derive_invariants(H.spec)
        self.pi = pi_mats
        self.p = len(pi_mats[0])
        N = self.spec.N
        # Psi : Omega^{N-1} -> Omega^{N+1} is invertible
        src, tgt = self.fs.basis[N - 1], self.fs.basis[N + 1]
        P = mat_zero(len(tgt), len(src))
        for j, S in enumerate(src):
            for T, c in self.fs.psi(self.fs.xS(S)).items():
                P[self.fs.index[N + 1][T]][j] = c
        self._psi_inv = mat_inverse(P)

    def shifted(self, covector):
        """The d-module Pi_covector."""
        mats = [mat_add(m, mat_identity(self.p), c) for m, c in zip(self.pi, covector)]
        return DeRham(self.H, mats, self.derived)

    def d_fiber(self, u, alpha):
        """d_Pi(1 ⊗ u ⊗ alpha) as a form-valued element."""
        fs = self.fs
        out = {}
        zero = self.H.zero_index
        for S, c in fs.d0(alpha).items():
            _acc(out, (zero, u, S), c)
        for k in range(self.spec.dim):
            w = fs.wedge({(k,): Fraction(1)}, alpha)
            if not w:
                continue
            for S, c in w.items():
                _acc(out, (unit(self.H.n, k), u, S), -c)
                for u2 in range(self.p):
                    x = self.pi[k][u2][u]
                    if x:
                        _acc(out, (zero, u2, S), x * c)
        return out

    def d(self, elem):
        """d_Pi on an arbitrary form-valued element, by H-linearity."""
        out = {}
        cache = {}
        for (J, u, S), c in elem.items():
            key = (u, S)
            if key not in cache:
                cache[key] = self.d_fiber(u, {S: Fraction(1)})
            for (K, u2, T), x in cache[key].items():
                for L, y in self.H.mul_basis(J, K).items():
                    _acc(out, (L, u2, T), c * x * y)
        return out

    def psi(self, elem, power=1):
        out = {}
        for (J, u, S), c in elem.items():
            for T, x in self.fs.psi({S: Fraction(1)}, power).items():
                _acc(out, (J, u, T), c * x)
        return out

    def psi_inverse_mid(self, elem):
        """(Psi|Omega^{N-1})^{-1} on an Omega^{N+1}-valued element."""
        N = self.spec.N
        fs = self.fs
        src = fs.basis[N - 1]
        out = {}
        for (J, u, T), c in elem.items():
            t = fs.index[N + 1][T]
            for i, S in enumerate(src):
                x = self._psi_inv[i][t]
                if x:
                    _acc(out, (J, u, S), c * x)
        return out

    # fiber coordinate conversions

    def to_full(self, elem, p):
        dim = self.fs.dim(p)
        idx = self.fs.index[p]
        return {(J, u * dim + idx[S]): c for (J, u, S), c in elem.items()}

    def to_quotient(self, elem, q):
        out = {}
        groups = {}
        for (J, u, S), c in elem.items():
            groups.setdefault((J, u), {})[S] = c
        for (J, u), alpha in groups.items():
            for i, c in q.project(alpha).items():
                _acc(out, (J, u * q.dim + i), c)
        return out

    def to_kernel(self, elem, k):
        out = {}
        groups = {}
        for (J, u, S), c in elem.items():
            groups.setdefault((J, u), {})[S] = c
        for (J, u), alpha in groups.items():
            for i, c in k.coords(alpha).items():
                _acc(out, (J, u * k.dim + i), c)
        return out

    # maps

    def full_map(self, n):
        """d_Pi : Omega^n_Pi -> Omega^{n+1}_Pi."""
        fs = self.fs
        images = []
        for u in range(self.p):
            for S in fs.basis[n]:
                images.append(self.to_full(self.d_fiber(u, {S: Fraction(1)}), n + 1))
        return ModuleMap(self.H, images, self.p * fs.dim(n), self.p * fs.dim(n + 1), name="d%d" % (n + 1))

    def full_psi_map(self, n):
        fs = self.fs
        images = []
        zero = self.H.zero_index
        for u in range(self.p):
            for S in fs.basis[n]:
                images.append(self.to_full(self.psi({(zero, u, S): Fraction(1)}), n + 2))
        return ModuleMap(self.H, images, self.p * fs.dim(n), self.p * fs.dim(n + 2), name="Psi")

    def untwisted_images(self, n):
        """Images of d on Omega^n with Pi = k, in full coordinates (for twisting checks)."""
        triv = DeRham(self.H, [[[Fraction(0)]] for _ in range(self.spec.dim)], self.derived)
        return [triv.to_full(triv.d_fiber(0, {S: Fraction(1)}), n + 1) for S in self.fs.basis[n]]


@dataclass
class Term:
    kind: str          # "lower" (Omega^n/I^n) or "upper" (J^m)
    deg: int
    space: object      # QuotientRep or KernelRep
    module: TensorModule
    label: str


class SymplecticComplex:
    """The conformally symplectic pseudo de Rham complex twisted by Pi.

    Terms: Omega^n_Pi/I^n for n = 0..N, then J^m_{Pi-chi} for m = N..2N.
    Maps: d_Pi on the lower half, the second order map d^R in the middle and
    d_{Pi-chi} on the upper half.
    """

    def __init__(self, H, pi_mats, derived=None, spb=None):
        self.H = H
        spec = H.spec
        self.spec = spec
        self.derived = derived or derive_invariants(spec)
        self.spb = spb or SpBasis(spec, self.derived)
        self.low = DeRham(H, pi_mats, self.derived)
        self.high = self.low.shifted([-x for x in spec.chi])
        fs = self.low.fs
        N = spec.N
        phi = self.derived.phi
        chi = spec.chi
        p = self.low.p
        self.terms = []
        for n in range(N + 1):
            q = QuotientRep(fs, n)
            rep = rep_from_gl(self.spb, q.act, q.dim, "Omega^%d/I^%d" % (n, n))
            act = [mat_add(pi_mats[i], mat_identity(p), -Fraction(n, 2) * chi[i] - phi[i])
                   for i in range(spec.dim)]
            mod = TensorModule(H, DPrimeModule(act), rep, self.derived)
            self.terms.append(Term("lower", n, q, mod, "pi%d" % n if n else "0"))
        for m in range(N, 2 * N + 1):
            k = KernelRep(fs, m)
            rep = rep_from_gl(self.spb, k.act, k.dim, "J^%d" % m)
            act = [mat_add(pi_mats[i], mat_identity(p), -chi[i] - Fraction(m, 2) * chi[i] - phi[i])
                   for i in range(spec.dim)]
            mod = TensorModule(H, DPrimeModule(act), rep, self.derived)
            j = 2 * N - m
            self.terms.append(Term("upper", m, k, mod, "pi%d" % j if j else "0"))
        self.maps = []
        for n in range(1, N + 1):
            self.maps.append(self._lower_map(n))
        self.maps.append(self._rumin_map())
        for m in range(N + 1, 2 * N + 1):
            self.maps.append(self._upper_map(m))

    def _lower_map(self, n):
        src = self.terms[n - 1].space
        tgt = self.terms[n].space
        images = []
        for u in range(self.low.p):
            for i in range(src.dim):
                el = self.low.d_fiber(u, src.lift(i))
                images.append(self.low.to_quotient(el, tgt))
        return ModuleMap(self.H, images, self.low.p * src.dim, self.low.p * tgt.dim, name="d%d" % n)

    def _rumin_map(self):
        N = self.spec.N
        src = self.terms[N].space
        tgt = self.terms[N + 1].space
        images = []
        for u in range(self.low.p):
            for i in range(src.dim):
                el = self.low.d_fiber(u, src.lift(i))
                el = self.low.psi_inverse_mid(el)
                el = self.high.d(el)
                images.append(self.high.to_kernel(el, tgt))
        return ModuleMap(self.H, images, self.low.p * src.dim, self.low.p * tgt.dim, name="dR")

    def _upper_map(self, m):
        src = self.terms[m].space
        tgt = self.terms[m + 1].space
        images = []
        for u in range(self.high.p):
            for i in range(src.dim):
                el = self.high.d_fiber(u, src.lift(i))
                images.append(self.high.to_kernel(el, tgt))
        return ModuleMap(self.H, images, self.high.p * src.dim, self.high.p * tgt.dim, name="d%d" % m)

    def map_shifts(self):
        N = self.spec.N
        return [1] * N + [2] + [1] * N

    def check_d_squared(self):
        return [self.maps[t + 1].compose(self.maps[t]).is_zero() for t in range(len(self.maps) - 1)]

    def check_intertwining(self):
        return [mp.intertwines(self.terms[t].module, self.terms[t + 1].module)
                for t, mp in enumerate(self.maps)]


def check_psi_intertwining(H, pi_mats, derived=None):
    """Psi_chi d_Pi = d_{Pi_chi} Psi_chi on every Omega^n, compared on generators."""
    dr = DeRham(H, pi_mats, derived)
    drc = dr.shifted(H.spec.chi)
    zero = H.zero_index
    fs = dr.fs
    out = []
    for n in range(H.n - 1):
        ok = True
        for u in range(dr.p):
            for S in fs.basis[n]:
                a = dr.psi(dr.d_fiber(u, {S: Fraction(1)}))
                b = drc.d(dr.psi({(zero, u, S): Fraction(1)}))
                if a != b:
                    ok = False
        out.append(ok)
    return out


def filtered_exactness(H, maps, shifts, src_ranks, cap):
    """Compare dim(ker d_t ∩ fil^k) with rank(d_{t-1} on fil^{k-s}) for each middle term.

    maps[t] goes from term t to term t+1; src_ranks[t] is the fiber rank of term t.
    The second number is a lower bound for dim(im d_{t-1} ∩ fil^k) and the first an
    upper bound, so equality proves exactness in filtration degree k.
    Returns {t: [(k, kernel_dim, image_lower_bound), ...]} for t = 0..len(maps)-1,
    where term 0 checks injectivity.
    """
    n = H.n
    ranks = [mp.filtered_ranks(cap) for mp in maps]
    out = {}
    for t in range(len(maps)):
        rows = []
        for k in range(cap + 1):
            ker = src_ranks[t] * fil_dim(n, k) - ranks[t][k]
            if t == 0:
                img = 0
            else:
                kk = k - shifts[t - 1]
                img = ranks[t - 1][kk] if kk >= 0 else 0
            rows.append((k, ker, img))
        out[t] = rows
    return out, ranks


def top_cokernel(H, last_map, tgt_rank, shift, cap):
    """dim fil^k(target) - rank(last map on fil^{k-shift}) for k = 0..cap."""
    ranks = last_map.filtered_ranks(cap)
    out = []
    for k in range(cap + 1):
        kk = k - shift
        out.append(tgt_rank * fil_dim(H.n, k) - (ranks[kk] if kk >= 0 else 0))
    return out

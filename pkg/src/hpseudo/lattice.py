"""Generated submodules and the submodule lattices of reducible tensor modules.

Every V(Pi + b, R(pi_k)) below is realised with fiber Pi ⊗ Omega^k/I^k
(quotient coordinates); maps of the conformally symplectic complex that land
in or leave a J^m term are transported along the sp-isomorphism J^{2N-k} ≅
Omega^k/I^k.  Twists are tracked as covectors b added to Pi.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .algebra import DPrimeModule, derive_invariants
from .derham import SymplecticComplex, filtered_exactness
from .forms import SpBasis, QuotientRep, FormSpace, rep_from_gl, build_fundamental_rep, fiber_iso_J_to_quotient
from .hopf import fil_dim, multi_indices_upto
from .linalg import Echelon, reduced_basis, span_intersection, iadd, vscale, mat_add, mat_identity, mat_inverse
from .singular import (Verdict, decompose_isotypic, fiber_gens, hom_space, rho_sing, solve_singular,
                       SingCoords, vec_degree)
from .tensor import ModuleMap, TensorModule, kron, vec_key


# generated submodules

@dataclass
class Submodule:
    """W ∩ fil^D for a submodule W of a free module, as a reduced echelon basis."""
    module: object
    cap: int
    basis: list
    status: str = "exact"
    name: str = ""
    _ech: object = field(default=None, repr=False)

    def __post_init__(self):
        self._ech = Echelon(vec_key(self.module.H.n))
        for v in self.basis:
            self._ech.add(v)

    @property
    def dim(self):
        return len(self.basis)

    def graded_dims(self):
        """dim (W ∩ fil^k) / (W ∩ fil^{k-1}) for k = 0..cap."""
        out = [0] * (self.cap + 1)
        for v in self.basis:
            out[vec_degree(v)] += 1
        return out

    def contains(self, v):
        return self._ech.contains(v)

    def within(self, other):
        return all(other.contains(v) for v in self.basis)

    def same(self, other):
        return self.dim == other.dim and self.within(other)


def _cut(vectors, module, D):
    """Reduced basis of span(vectors) ∩ fil^D (pivots sit on top-degree terms)."""
    return [v for v in reduced_basis(vectors, vec_key(module.H.n)) if vec_degree(v) <= D]


def _closure(module, vectors, C):
    """Span of the smallest set containing vectors and closed (inside fil^C) under
    d_k . and the coefficient extraction v -> v'_I."""
    H = module.H
    n = H.n
    ech = Echelon(vec_key(n))
    found = []
    queue = [v for v in vectors if v]
    gens = [H.gen(k) for k in range(n)]
    while queue:
        v = queue.pop()
        if not v or vec_degree(v) > C:
            continue
        r, _ = ech.reduce(v)
        if not r:
            continue
        ech.add(r)
        found.append(r)
        for h in gens:
            queue.append(module.hmul(h, r))
        for w in module.left_action(r).values():
            queue.append(w)
    return found


def generate_submodule(module, vectors, D, extra=1):
    """The submodule generated by vectors, cut down to fil^D.

    The closure is computed inside fil^{D+extra}; if the part in fil^D
    differs from a closure computed inside fil^D alone, lower degrees were
    reached through higher ones and the result is reported "cap-limited"
    unless a further step changes nothing.
    """
    wide = _cut(_closure(module, vectors, D + extra), module, D)
    narrow = _cut(_closure(module, vectors, D), module, D)
    status = "stabilized" if len(wide) == len(narrow) else "cap-limited"
    return Submodule(module, D, wide, status)


def whole(module, D):
    return Submodule(module, D, [{(J, a): Fraction(1)} for J in multi_indices_upto(module.H.n, D)
                                 for a in range(module.rank)], name="V")


def image_submodule(mp, module, D, shift, name=""):
    """span mp(fil^{D-shift}) as a Submodule of the target (a lower bound for im ∩ fil^D)."""
    imgs = [mp.apply({(J, a): Fraction(1)}) for J in multi_indices_upto(mp.H.n, D - shift)
            for a in range(mp.src_rank)] if D >= shift else []
    return Submodule(module, D, _cut(imgs, module, D), name=name)


def sum_submodule(A, B, name=""):
    return Submodule(A.module, A.cap, _cut(A.basis + B.basis, A.module, A.cap), name=name)


def meet_submodule(A, B, name=""):
    order = vec_key(A.module.H.n)
    return Submodule(A.module, A.cap, span_intersection(A.basis, B.basis, order), name=name)


# maps of the complex, transported to quotient coordinates

def _add(a, b, c=1):
    return tuple(x + c * y for x, y in zip(a, b))


def _transport(mp, p, src_iso=None, tgt_iso=None):
    """Change fiber coordinates of an H-linear map.

    src_iso expresses the new source basis in old coordinates (columns), tgt_iso
    sends old target coordinates to new ones; both act on the U factor of Pi ⊗ U.
    """
    images = mp.images
    src_rank, tgt_rank = mp.src_rank, mp.tgt_rank
    if src_iso is not None:
        S = kron(mat_identity(p), src_iso)
        new = []
        for a2 in range(len(S[0])):
            im = {}
            for a in range(len(S)):
                if S[a][a2]:
                    iadd(im, images[a], S[a][a2])
            new.append(im)
        images, src_rank = new, len(S[0])
    if tgt_iso is not None:
        T = kron(mat_identity(p), tgt_iso)
        new = []
        for im in images:
            out = {}
            for (J, b), c in im.items():
                for b2 in range(len(T)):
                    if T[b2][b]:
                        key = (J, b2)
                        x = out.get(key, 0) + c * T[b2][b]
                        if x:
                            out[key] = x
                        else:
                            out.pop(key)
            new.append(out)
        images, tgt_rank = new, len(T)
    return ModuleMap(mp.H, images, src_rank, tgt_rank, shift=mp.shift, name=mp.name)


class ComplexMaps:
    """Differentials d^n, d^{2N-n} and the Rumin map between modules V(Pi + b, R(pi_k)).

    low(b, n):  d^n       V(Pi + b + chi/2, R(pi_{n-1})) -> V(Pi + b, R(pi_n)),  1 <= n <= N
    up(b, n):   d^{2N-n}  V(Pi + b + chi/2, R(pi_{n+1})) -> V(Pi + b, R(pi_n)),  0 <= n < N
    rumin(b):   d^R       V(Pi + b + chi, R(pi_N))       -> V(Pi + b, R(pi_N))
    Each is cut out of a complex twisted so that its target has d'-action Pi + b.
    """

    def __init__(self, H, pi_mats, derived=None):
        self.H = H
        self.spec = H.spec
        self.derived = derived or derive_invariants(H.spec)
        self.spb = SpBasis(self.spec, self.derived)
        self.fs = FormSpace(self.spec)
        self.pi = pi_mats
        self.p = len(pi_mats[0])
        self.N = self.spec.N
        self.zero = tuple(Fraction(0) for _ in range(self.spec.dim))
        self.chi = tuple(Fraction(x) for x in self.spec.chi)
        self._cx = {}
        self._q = {}
        self._iso = {}
        self._maps = {}

    def half(self, k=1):
        return tuple(Fraction(k, 2) * x for x in self.chi)

    def quotient(self, k):
        if k not in self._q:
            self._q[k] = QuotientRep(self.fs, k)
        return self._q[k]

    def rep(self, k):
        q = self.quotient(k)
        return rep_from_gl(self.spb, q.act, q.dim, "pi%d" % k if k else "0")

    def vmodule(self, b, k):
        act = [mat_add(m, mat_identity(self.p), x) for m, x in zip(self.pi, b)]
        return TensorModule(self.H, DPrimeModule(act), self.rep(k), self.derived)

    def complex(self, cov):
        if cov not in self._cx:
            mats = [mat_add(m, mat_identity(self.p), x) for m, x in zip(self.pi, cov)]
            self._cx[cov] = SymplecticComplex(self.H, mats, self.derived, self.spb)
        return self._cx[cov]

    def iso(self, m):
        """J^m -> Omega^{2N-m}/I^{2N-m} on the U factor."""
        if m not in self._iso:
            from .forms import KernelRep
            self._iso[m] = fiber_iso_J_to_quotient(self.fs, None, self.quotient(2 * self.N - m),
                                                   KernelRep(self.fs, m))
        return self._iso[m]

    def _check_act(self, term, b):
        want = [mat_add(m, mat_identity(self.p), x) for m, x in zip(self.pi, b)]
        if term.module.dmod.act != want:
            raise AssertionError("twist bookkeeping is off for %s" % term.label)

    def _base(self, b, n):
        phi = tuple(self.derived.phi)
        return _add(_add(b, phi), self.chi, Fraction(n, 2))

    def low(self, b, n):
        key = ("low", b, n)
        if key not in self._maps:
            cx = self.complex(self._base(b, n))
            self._check_act(cx.terms[n], b)
            self._check_act(cx.terms[n - 1], _add(b, self.half()))
            mp = cx.maps[n - 1]
            mp = ModuleMap(self.H, mp.images, mp.src_rank, mp.tgt_rank, shift=1, name="d%d" % n)
            self._maps[key] = mp
        return self._maps[key]

    def up(self, b, n):
        key = ("up", b, n)
        if key not in self._maps:
            N = self.N
            m = 2 * N - n
            cx = self.complex(_add(self._base(b, m), self.chi))
            self._check_act(cx.terms[m + 1], b)
            self._check_act(cx.terms[m], _add(b, self.half()))
            mp = cx.maps[m]
            src = mat_inverse(self.iso(m - 1))
            mp = _transport(mp, self.p, src, self.iso(m))
            mp.shift, mp.name = 1, "d%d" % m
            self._maps[key] = mp
        return self._maps[key]

    def rumin(self, b):
        key = ("rumin", b)
        if key not in self._maps:
            N = self.N
            cx = self.complex(_add(self._base(b, N), self.chi))
            self._check_act(cx.terms[N + 1], b)
            self._check_act(cx.terms[N], _add(b, self.chi))
            mp = _transport(cx.maps[N], self.p, None, self.iso(N))
            mp.shift, mp.name = 2, "dR"
            self._maps[key] = mp
        return self._maps[key]

    def dd_star(self, b, n):
        """d^n d^{2N-n+1}: V(Pi + b + chi, R(pi_n)) -> V(Pi + b, R(pi_n)), 1 <= n <= N."""
        return self.low(b, n).compose(self.up(_add(b, self.half()), n - 1))

    def d_star_d(self, b, n):
        """d^{2N-n} d^{n+1} on the same modules, 0 <= n < N."""
        return self.up(b, n).compose(self.low(_add(b, self.half()), n + 1))


def proportional(A, B):
    """The scalar c with A = c B when both maps are nonzero and proportional, else None."""
    if A.is_zero() or B.is_zero() or A.src_rank != B.src_rank:
        return None
    c = None
    for a, b in zip(A.images, B.images):
        keys = set(a) | set(b)
        for k in keys:
            x, y = a.get(k, 0), b.get(k, 0)
            if not y:
                if x:
                    return None
                continue
            r = Fraction(x) / y
            if c is None:
                c = r
            elif r != c:
                return None
    return c


# lattices, lambda = 0

def _blocks_by(blocks, degree, label=None):
    return [b for b in blocks if b.degree == degree and (label is None or b.label == label)]


def _subset_lattice(module, blocks, D, named, verdict, mixed=None):
    """Every nonempty union of blocks (and optional extra vectors) generates one of the named submodules."""
    seen = {}
    opts = [(b.label + "@%d" % b.degree, b.vectors) for b in blocks]
    if mixed:
        opts.append(mixed)
    ok = True
    status_ok = True
    for r in range(1, len(opts) + 1):
        for combo in combinations(opts, r):
            vecs = [v for _, vs in combo for v in vs]
            W = generate_submodule(module, vecs, D)
            status_ok &= W.status == "stabilized"
            hit = next((nm for nm, S in named if W.same(S)), None)
            seen[" + ".join(c[0] for c in combo)] = hit
            if hit is None:
                ok = False
    verdict.data["generated_by"] = seen
    verdict.add("every union of singular blocks generates a listed submodule", ok,
                ", ".join("%s -> %s" % kv for kv in seen.items()))
    verdict.add("generation stabilized inside the cap", status_ok)


def lattice_top(H, pi_mats, D, derived=None, cm=None):
    """V(Pi, R(pi_N)) ⊃ im d^N ⊃ im d^R ⊃ 0."""
    cm = cm or ComplexMaps(H, pi_mats, derived)
    N = cm.N
    zero, half = cm.zero, cm.half()
    V = cm.vmodule(zero, N)
    v = Verdict(True, [], [])
    sb = solve_singular(V, D)
    blocks = decompose_isotypic(sb)
    v.blocks = blocks
    v.data["singular_blocks"] = [(b.label, b.degree, b.dim) for b in blocks]
    b0, b1, b2 = _blocks_by(blocks, 0), _blocks_by(blocks, 1), _blocks_by(blocks, 2)
    if not (len(b0) == len(b1) == len(b2) == 1):
        v.add("singular blocks in degrees 0, 1, 2", False, str(v.data["singular_blocks"]))
        return v
    dN, dR, ddst = cm.low(zero, N), cm.rumin(zero), cm.dd_star(zero, N)
    v.add("d^N intertwines", dN.intertwines(cm.vmodule(half, N - 1), V))
    v.add("d^R intertwines", dR.intertwines(cm.vmodule(cm.chi, N), V))
    v.add("d^R d^N = 0", dR.compose(cm.low(cm.chi, N)).is_zero())
    c = proportional(ddst, dR)
    v.data["dR_over_dd*"] = None if c is None else str(1 / c)
    v.add("d^N d^{N+1} and d^R agree up to a nonzero scalar", c is not None)
    full = whole(V, D)
    imN = image_submodule(dN, V, D, 1, "im d^N")
    imR = image_submodule(dR, V, D, 2, "im d^R")
    W0 = generate_submodule(V, b0[0].vectors, D)
    W1 = generate_submodule(V, b1[0].vectors, D)
    W2 = generate_submodule(V, b2[0].vectors, D)
    v.data["graded_dims"] = {"V": full.graded_dims(), "im d^N": imN.graded_dims(), "im d^R": imR.graded_dims()}
    v.add("constants generate V", W0.same(full))
    v.add("degree-one singular vectors generate im d^N", W1.same(imN))
    v.add("degree-two singular vectors generate im d^R", W2.same(imR))
    v.add("V ⊋ im d^N ⊋ im d^R ⊋ 0", imR.within(imN) and 0 < imR.dim < imN.dim < full.dim)
    mixed = None
    if not any(cm.chi):
        # f_{ab}(fil^0) with a, b != 0: a non-homogeneous singular block
        mixed = ("const + deg2", [vscale(x, 1) for x in _mixed(b0[0], b2[0])])
    named = [("V", full), ("im d^N", imN), ("im d^R", imR)]
    _subset_lattice(V, [b0[0], b1[0], b2[0]], D, named, v, mixed)
    return v


def _mixed(bconst, btwo):
    """Pair the two isomorphic blocks through a d'⊕sp isomorphism and add them."""
    T = hom_space(bconst.gens, btwo.gens)
    if len(T) != 1:
        return list(bconst.vectors)
    M = T[0]
    out = []
    for j, x in enumerate(bconst.vectors):
        w = dict(x)
        for i, y in enumerate(btwo.vectors):
            if M[i][j]:
                iadd(w, y, M[i][j])
        out.append(w)
    return out


def lattice_middle(H, pi_mats, n, D, derived=None, cm=None):
    """V(Pi, R(pi_n)), 1 <= n < N: V ⊃ im d + im d* ⊃ im d, im d* ⊃ im d ∩ im d* ⊃ 0."""
    cm = cm or ComplexMaps(H, pi_mats, derived)
    zero, half = cm.zero, cm.half()
    V = cm.vmodule(zero, n)
    v = Verdict(True, [], [])
    sb = solve_singular(V, D)
    blocks = decompose_isotypic(sb)
    v.blocks = blocks
    v.data["singular_blocks"] = [(b.label, b.degree, b.dim) for b in blocks]
    lo = "pi%d" % (n - 1) if n > 1 else "0"
    hi = "pi%d" % (n + 1)
    b0, b2 = _blocks_by(blocks, 0), _blocks_by(blocks, 2)
    bl, bh = _blocks_by(blocks, 1, lo), _blocks_by(blocks, 1, hi)
    if not all(len(x) == 1 for x in (b0, b2, bl, bh)):
        v.add("singular blocks as classified", False, str(v.data["singular_blocks"]))
        return v
    d, ds = cm.low(zero, n), cm.up(zero, n)
    A, B = cm.dd_star(zero, n), cm.d_star_d(zero, n)
    v.add("d^n intertwines", d.intertwines(cm.vmodule(half, n - 1), V))
    v.add("d^{2N-n} intertwines", ds.intertwines(cm.vmodule(half, n + 1), V))
    v.add("d^{n+1} d^n = 0", cm.low(zero, n + 1).compose(cm.low(half, n)).is_zero())
    before = cm.up(half, n + 1) if n + 1 < cm.N else cm.rumin(half)
    v.add("d^{2N-n} composed with the preceding map is 0", ds.compose(before).is_zero())
    c = proportional(A, B)
    v.data["dd*_over_d*d"] = None if c is None else str(c)
    v.add("d^n d^{2N-n+1} and d^{2N-n} d^{n+1} agree up to a nonzero scalar", c is not None)
    full = whole(V, D)
    imd = image_submodule(d, V, D, 1, "im d")
    imds = image_submodule(ds, V, D, 1, "im d*")
    imA = image_submodule(A, V, D, 2, "im dd*")
    plus = sum_submodule(imd, imds, "im d + im d*")
    meet = meet_submodule(imd, imds, "im d ∩ im d*")
    v.data["graded_dims"] = {S.name or "V": S.graded_dims() for S in (full, plus, imd, imds, meet)}
    v.add("im d ∩ im d* = im dd*", meet.same(imA))
    v.add("constants generate V", generate_submodule(V, b0[0].vectors, D).same(full))
    v.add("degree-one %s vectors generate im d" % lo, generate_submodule(V, bl[0].vectors, D).same(imd))
    v.add("degree-one %s vectors generate im d*" % hi, generate_submodule(V, bh[0].vectors, D).same(imds))
    v.add("degree-two vectors generate im d ∩ im d*", generate_submodule(V, b2[0].vectors, D).same(meet))
    dims = [full.dim, plus.dim, imd.dim, imds.dim, meet.dim]
    v.add("five distinct nonzero members with the stated inclusions",
          meet.within(imd) and meet.within(imds) and plus.dim < full.dim and meet.dim > 0
          and imd.dim < plus.dim and imds.dim < plus.dim and meet.dim < min(imd.dim, imds.dim),
          "dims %s" % dims)
    named = [("V", full), ("im d + im d*", plus), ("im d", imd), ("im d*", imds), ("im d ∩ im d*", meet)]
    _subset_lattice(V, [b0[0], bl[0], bh[0], b2[0]], D, named, v)
    return v


# lambda != 0

class DMaps:
    """The maps D^1..D^N, D^R, D^{N+1}..D^{2N} between the modules V(Pi', R(pi_k)).

    Each sends 1 ⊗ u to the singular vectors of the matching type; D^R is the
    combination of the two maps fil^0 -> sing with D^R D^N = 0.
    """

    def __init__(self, H, dmod, cap=2, derived=None):
        if not dmod.lam:
            raise ValueError("lambda = 0: use the conformally symplectic complex instead")
        self.H = H
        spec = H.spec
        self.derived = derived or derive_invariants(spec)
        spb = SpBasis(spec, self.derived)
        N = spec.N
        self.N = N
        self.modules = [TensorModule(H, dmod, build_fundamental_rep(spb, k), self.derived) for k in range(N + 1)]
        self._sing = {}
        chain = [k for k in range(N + 1)] + [N - j for j in range(N + 1)]
        self.terms = [self.modules[k] for k in chain]
        self.maps = []
        self.names = []
        for t in range(len(chain) - 1):
            s, g = chain[t], chain[t + 1]
            if t == N:
                continue
            homs = self._homs(s, g, cap)
            if len(homs) != 1:
                raise ValueError("expected a unique map R(pi_%d) -> R(pi_%d), found %d" % (s, g, len(homs)))
            self.maps.append(homs[0])
            self.names.append("D%d" % (t + 1 if t < N else t))
        homs = self._homs(N, N, cap)
        dN = self.maps[N - 1]
        comps = [h.compose(dN) for h in homs]
        rel = _relation(comps)
        if rel is None:
            raise ValueError("no combination of endomorphisms kills im D^N")
        DR = _combine(homs, rel)
        self.maps.insert(N, _normalized(DR))
        self.names.insert(N, "DR")

    def _homs(self, s, g, cap):
        src, tgt = self.modules[s], self.modules[g]
        if g not in self._sing:
            sb = solve_singular(tgt, cap)
            self._sing[g] = (sb, rho_sing(sb), SingCoords(sb))
        sb, rho, sc = self._sing[g]
        out = []
        for T in hom_space(fiber_gens(src.dmod, src.rep), rho.gens()):
            images = [sc.vector([row[a] for row in T]) for a in range(src.rank)]
            mp = ModuleMap(self.H, images, src.rank, tgt.rank)
            out.append(_normalized(mp))
        return out

    def shifts(self):
        return [1] * self.N + [2] + [1] * self.N


def _flat(mp):
    return {(a, k): c for a, im in enumerate(mp.images) for k, c in im.items()}


def _relation(maps):
    from .linalg import kernel
    rel = kernel([_flat(m) for m in maps])
    return rel[0] if len(rel) == 1 else None


def _combine(maps, coeffs):
    images = []
    for a in range(maps[0].src_rank):
        im = {}
        for i, c in coeffs.items():
            iadd(im, maps[i].images[a], c)
        images.append(im)
    return ModuleMap(maps[0].H, images, maps[0].src_rank, maps[0].tgt_rank)


def _normalized(mp):
    """Scale so that the first nonzero coordinate (image by image, graded-lex) is 1."""
    order = vec_key(mp.H.n)
    for im in mp.images:
        if im:
            c = im[min(im, key=order)]
            return ModuleMap(mp.H, [vscale(x, 1 / c) for x in mp.images], mp.src_rank, mp.tgt_rank,
                             name=mp.name)
    return mp


def dmap_check(H, dmod, cap, derived=None, irr_cap=4):
    """Exactness and splitting of the lambda != 0 complex, and irreducibility of V(Pi', k)."""
    dm = DMaps(H, dmod, derived=derived)
    v = Verdict(True, [], [])
    v.data["maps"] = dm.names
    N = dm.N
    maps, terms = dm.maps, dm.terms
    v.add("maps intertwine", all(mp.intertwines(terms[t], terms[t + 1]) for t, mp in enumerate(maps)))
    v.add("consecutive compositions vanish",
          all(maps[t + 1].compose(maps[t]).is_zero() for t in range(len(maps) - 1)))
    shifts = dm.shifts()
    rows, ranks = filtered_exactness(H, maps, shifts, [m.rank for m in terms], cap)
    ok = all(ker == img for t in rows for (_, ker, img) in rows[t])
    v.data["exactness"] = {dm.names[t]: rows[t] for t in rows}
    v.add("exact at every term up to the cap (filtered)", ok)
    last, tgt = maps[-1], terms[-1]
    surj = True
    for k in range(cap):
        img = image_submodule(last, tgt, k + 1, 0)
        surj &= all(img.contains({(J, a): Fraction(1)}) for J in multi_indices_upto(H.n, k)
                    for a in range(tgt.rank))
    v.add("last map: fil^k lies in the image of fil^{k+1}", surj)
    # V(Pi', R(pi_k)) = im D^k ⊕ im D^{2N-k} (im D^N ⊕ im D^R for k = N).  The
    # filtration does not split, so preimages are taken in a window two degrees wider.
    split = {}
    ok = True
    C = cap + 2
    for k in range(1, N + 1):
        t_in, t_co = k - 1, (2 * N - k if k < N else N)
        A = image_submodule(maps[t_in], terms[k], C, shifts[t_in])
        B = image_submodule(maps[t_co], terms[k], C, shifts[t_co])
        S = sum_submodule(A, B)
        ok &= S.dim == A.dim + B.dim

        def upto(W, d):
            return sum(1 for x in W.basis if vec_degree(x) <= d)
        rows_k = [(d, upto(A, d), upto(B, d), upto(S, d), fil_dim(H.n, d) * terms[k].rank)
                  for d in range(cap + 1)]
        ok &= all(s_ == f for (_, _, _, s_, f) in rows_k)
        split[dm.names[t_in] + "+" + dm.names[t_co]] = rows_k
    v.data["splitting"] = split
    v.add("middle terms are the direct sum of the two images (independent, spanning fil^cap)", ok)
    V0 = terms[0]
    sb = solve_singular(V0, 2)
    ones = [x for x in sb.vectors if vec_degree(x) == 1]
    W = generate_submodule(V0, ones, irr_cap)
    v.add("degree-one singular vectors of V(Pi', k) generate all of fil^%d" % irr_cap,
          W.same(whole(V0, irr_cap)))
    return v, dm

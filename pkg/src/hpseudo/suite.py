"""Verification sections shared by the CLI, the acceptance tests and the demos.

Each function returns a report section (see report.section).
"""
from fractions import Fraction

from .algebra import (DPrimeModule, SpecError, derive_invariants, dprime_from_dmodule,
                      solve_frobenius_splitting, validate_dprime_module, validate_spec)
from .ann import check_iota_star_homomorphism, distinguished_images
from .derham import DeRham, SymplecticComplex, check_psi_intertwining, filtered_exactness, top_cokernel
from .forms import SpBasis, build_fundamental_rep, sym2_rep, trivial_rep, vector_rep, SpRepresentation
from .hopf import EnvelopingAlgebra, check_hopf_axioms, multi_indices_upto
from .jets import Jet
from .lattice import dmap_check, lattice_middle, lattice_top
from .pseudo import check_iota_homomorphism, h_algebra, tau_direct, tau_gl_form, tau_sp_form, w_algebra
from .report import section
from .singular import classify_compare, fundamental_index, same_span, solve_singular, solve_singular_dual
from .tensor import tensor_module


def zero_pi(spec):
    return [[[Fraction(0)]] for _ in range(spec.dim)]


def make_rep(spec, selector, derived=None):
    """U from a selector: "pi:n", "trivial", "vector", "sym2", or an SpRepresentation."""
    if isinstance(selector, SpRepresentation):
        return selector
    spb = SpBasis(spec, derived)
    if selector in (None, "trivial", "pi:0"):
        return build_fundamental_rep(spb, 0) if selector == "pi:0" else trivial_rep(spb)
    if selector == "vector":
        return vector_rep(spb)
    if selector == "sym2":
        return sym2_rep(spb)
    if isinstance(selector, str) and selector.startswith("pi:"):
        try:
            n = int(selector[3:])
        except ValueError:
            raise SpecError("bad sp representation selector %r" % selector) from None
        if not 0 <= n <= spec.N:
            raise SpecError("pi:%d is not a fundamental weight for 2N=%d" % (n, spec.dim))
        return build_fundamental_rep(spb, n)
    raise SpecError("unknown sp representation selector %r" % (selector,))


def validate_section(spec):
    rep = validate_spec(spec)
    data = {"name": spec.name, "dim": spec.dim}
    if rep.ok:
        d = derive_invariants(spec)
        data.update({"r": d.r, "phi": d.phi, "rho": d.rho})
        try:
            zeta, unique = solve_frobenius_splitting(spec)
            data["zeta"] = zeta
            data["zeta_unique"] = unique
        except ValueError:
            data["zeta"] = None
    return section("validate %s" % spec.name, rep.checks, data)


def axioms_section(spec, cap=4, jet_order=4):
    H = EnvelopingAlgebra(spec)
    d = derive_invariants(spec)
    checks = list(check_hopf_axioms(H, cap))
    elems = []
    W = w_algebra(H)
    for a in range(W.ngens):
        elems.append(W.gen(a))
    elems.append({(H.zero_index, 0): Fraction(1), (tuple(int(t == H.n - 1) for t in range(H.n)), 1): Fraction(2)})
    res = W.check_axioms(elems)
    checks += [("W(d) skew-symmetry", res["skew"]), ("W(d) Jacobi", res["jacobi"])]
    He = h_algebra(H, d.r)
    one = He.gen(0)
    hx = {(tuple(int(t == 0) for t in range(H.n)), 0): Fraction(1), (H.zero_index, 0): Fraction(-1, 2)}
    res = He.check_axioms([one, hx])
    checks += [("H(d,chi,omega) skew-symmetry", res["skew"]), ("H(d,chi,omega) Jacobi", res["jacobi"])]
    checks.append(("iota is a pseudoalgebra homomorphism", check_iota_homomorphism(H, d)))
    t1, t2, t3 = tau_direct(H, d), tau_sp_form(H, d), tau_gl_form(H, d)
    checks.append(("tau(iota e): sp form equals the direct computation", t1 == t2))
    checks.append(("tau(iota e): gl form equals the direct computation", t1 == t3))
    for name, ok in distinguished_images(H, d, jet_order).items():
        checks.append(("iota_* image: %s" % name, ok))
    jets = [Jet(jet_order, {I: 1}) for I in multi_indices_upto(H.n, 2)]
    checks.append(("iota_* is a Lie algebra homomorphism on low jets", check_iota_star_homomorphism(H, d, jets)))
    V = tensor_module(H, DPrimeModule(zero_pi(spec)), trivial_rep(SpBasis(spec, d)), d)
    unit_vec = {(H.zero_index, 0): Fraction(1)}
    checks.append(("V(k, k) satisfies the module axiom", not V.module_axiom_defect(He, unit_vec)))
    return section("axioms %s" % spec.name, checks, {"hopf_cap": cap, "jet_order": jet_order})


def derham_section(spec, cap=5):
    """Exactness of the plain pseudo de Rham complex with trivial coefficients."""
    H = EnvelopingAlgebra(spec)
    dr = DeRham(H, zero_pi(spec))
    n = spec.dim
    maps = [dr.full_map(k) for k in range(n)]
    checks = [("d^2 = 0 on Omega^%d" % k, maps[k + 1].compose(maps[k]).is_zero()) for k in range(n - 1)]
    rows, _ = filtered_exactness(H, maps, [1] * n, [len(dr.fs.basis[k]) for k in range(n)], cap)
    for t in range(1, n):
        checks.append(("exact at Omega^%d up to degree %d" % (t, cap), all(k == i for _, k, i in rows[t])))
    coker = top_cokernel(H, maps[-1], 1, 1, cap)
    checks.append(("Omega^2N / d Omega^(2N-1) is one-dimensional", all(x == 1 for x in coker)))
    return section("de Rham %s" % spec.name, checks, {"exactness": rows, "top_cokernel": coker})


def complex_section(spec, pi_mats=None, cap=4):
    """The conformally symplectic complex twisted by Pi."""
    H = EnvelopingAlgebra(spec)
    d = derive_invariants(spec)
    pi_mats = pi_mats or zero_pi(spec)
    rep = validate_dprime_module(spec, DPrimeModule(pi_mats))
    if not rep.ok:
        raise SpecError("Pi is not a d-module: %s" % rep.failures())
    cx = SymplecticComplex(H, pi_mats, d)
    N = spec.N
    checks = []
    for t, ok in enumerate(cx.check_d_squared()):
        checks.append(("%s %s = 0" % (cx.maps[t + 1].name, cx.maps[t].name), ok))
    for t, ok in enumerate(cx.check_intertwining()):
        checks.append(("%s is a module map" % cx.maps[t].name, ok))
    for k, ok in enumerate(check_psi_intertwining(H, pi_mats, d)):
        checks.append(("Psi_chi intertwines d on Omega^%d" % k, ok))
    rows, _ = filtered_exactness(H, cx.maps, cx.map_shifts(), [t.module.rank for t in cx.terms], cap)
    for t in range(2 * N):
        term = cx.terms[t]
        checks.append(("exact at %s^%d up to degree %d" % ("Omega/I" if term.kind == "lower" else "J", term.deg, cap),
                       all(k == i for _, k, i in rows[t])))
    terms = [{"kind": t.kind, "degree": t.deg, "fiber_rank": t.module.rank, "sp": t.label,
              "twist": t.module.dmod.act and [m[0][0] if len(m) == 1 else m for m in t.module.dmod.act]}
             for t in cx.terms]
    return section("complex %s" % spec.name, checks, {"terms": terms, "exactness": rows,
                                                       "complements": {t.deg: getattr(t.space, "complement", None)
                                                                       for t in cx.terms if t.kind == "lower"}})


def singular_section(spec, pi_mats=None, rep_sel="pi:1", lam=0, cap=3, dual=True):
    H = EnvelopingAlgebra(spec)
    d = derive_invariants(spec)
    pi_mats = pi_mats or zero_pi(spec)
    rep = make_rep(spec, rep_sel, d)
    dmod = dprime_from_dmodule(spec, pi_mats, Fraction(lam))
    M = tensor_module(H, dmod, rep, d)
    v = classify_compare(M, cap)
    checks = list(v.checks)
    if dual:
        sd = solve_singular_dual(M, cap)
        checks.append(("left normal form and P_1-action detectors agree", same_span(
            sd.vectors, solve_singular(M, cap).vectors, H.n)))
    data = {k: v.data[k] for k in ("sing_dim", "graded_dims", "found", "expected") if k in v.data}
    if "S_lambda_sign" in v.data:
        data["S_lambda_sign"] = v.data["S_lambda_sign"]
    sections = [section("singular %s U=%s lambda=%s" % (spec.name, rep.name, lam), checks, data)]
    if lam and fundamental_index(rep) is not None:
        sections.append(dmap_section(spec, pi_mats, lam, cap))
    return sections


def dmap_section(spec, pi_mats, lam, cap=3, irr_cap=4):
    H = EnvelopingAlgebra(spec)
    d = derive_invariants(spec)
    dmod = dprime_from_dmodule(spec, pi_mats, Fraction(lam))
    v, dm = dmap_check(H, dmod, cap, d, irr_cap)
    return section("split exact complex %s lambda=%s" % (spec.name, lam), v.checks, v.data)


def lattice_section(spec, pi_mats=None, n=None, cap=3, lam=0):
    pi_mats = pi_mats or zero_pi(spec)
    if lam:
        return dmap_section(spec, pi_mats, lam, cap)
    H = EnvelopingAlgebra(spec)
    N = spec.N
    n = N if n is None else n
    if not 1 <= n <= N:
        raise SpecError("lattices are computed for U = pi:n with 1 <= n <= N")
    v = lattice_top(H, pi_mats, cap) if n == N else lattice_middle(H, pi_mats, n, cap)
    data = {k: x for k, x in v.data.items()}
    return section("lattice %s U=pi%d" % (spec.name, n), v.checks, data)

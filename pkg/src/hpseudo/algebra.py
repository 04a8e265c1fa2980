"""Lie algebra data (d, chi, omega), validation and derived invariants.

Indices are 0-based in Python.  Spec files use 1-based indices, matching
the usual notation d_1, ..., d_2N.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import yaml

from .linalg import frac, mat_inverse, mat_identity, mat_add, mat_scale, \
    mat_zero, commutator, kernel


class SpecError(ValueError):
    """Raised for malformed spec files."""


@dataclass
class LieAlgebraSpec:
    dim: int
    # struct[i][j] = {k: c_ij^k}, complete and antisymmetric
    struct: list
    chi: list
    omega: list
    name: str = ""

    @property
    def N(self):
        return self.dim // 2

    @classmethod
    def from_brackets(cls, dim, brackets=(), chi=None, omega=None, name=""):
        """brackets: iterable of (i, j, k, c) meaning c_ij^k = c, 0-based.

        The antisymmetric partner is filled in unless given explicitly.
        """
        struct = [[{} for _ in range(dim)] for _ in range(dim)]
        given = set()
        for i, j, k, c in brackets:
            c = frac(c)
            if c:
                struct[i][j][k] = struct[i][j].get(k, 0) + c
            given.add((i, j))
        for i, j in list(given):
            if (j, i) not in given:
                struct[j][i] = {k: -c for k, c in struct[i][j].items()}
        chi = [frac(x) for x in (chi or [0] * dim)]
        omega = [[frac(x) for x in row] for row in omega]
        return cls(dim, struct, chi, omega, name)

    def bracket(self, i, j):
        return self.struct[i][j]

    def bracket_vec(self, u, v):
        """[u, v] for coordinate vectors u, v (lists)."""
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in self.struct[i][j].items():
                    out[k] += a * b * c
        return out

    def is_abelian(self):
        return all(not self.struct[i][j] for i in range(self.dim) for j in range(self.dim))

    def chi_is_zero(self):
        return all(x == 0 for x in self.chi)


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    def add(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [(n, d) for n, ok, d in self.checks if not ok]

    def lines(self):
        return ["%s: %s%s" % (n, "pass" if ok else "FAIL", (" (" + d + ")") if d and not ok else "")
                for n, ok, d in self.checks]


def _omega(spec, a, b):
    """omega on coordinate vectors."""
    s = Fraction(0)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    s += x * y * spec.omega[i][j]
    return s


def _unit(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def validate_spec(spec):
    """Check the Lie, cocycle and nondegeneracy conditions. Never raises."""
    rep = ValidationReport()
    n = spec.dim
    rep.add("even_dim", n > 0 and n % 2 == 0, "dim=%d" % n)
    shape_ok = (len(spec.struct) == n and all(len(r) == n for r in spec.struct)
                and len(spec.chi) == n and len(spec.omega) == n
                and all(len(r) == n for r in spec.omega))
    rep.add("shapes", shape_ok)
    if not shape_ok:
        return rep
    bad = [(i, j) for i in range(n) for j in range(n)
           if {k: -c for k, c in spec.struct[i][j].items()} != spec.struct[j][i]]
    rep.add("bracket_skew", not bad, "first offending pair %s" % (bad[0],) if bad else "")
    e = [_unit(n, i) for i in range(n)]
    witness = None
    for i, j, k in combinations(range(n), 3):
        a, b, c = e[i], e[j], e[k]
        t1 = spec.bracket_vec(a, spec.bracket_vec(b, c))
        t2 = spec.bracket_vec(b, spec.bracket_vec(c, a))
        t3 = spec.bracket_vec(c, spec.bracket_vec(a, b))
        if any(x + y + z for x, y, z in zip(t1, t2, t3)):
            witness = (i, j, k)
            break
    rep.add("jacobi", witness is None, "fails on %s" % (witness,) if witness else "")
    bad = [(i, j) for i in range(n) for j in range(n)
           if sum(c * spec.chi[k] for k, c in spec.struct[i][j].items())]
    rep.add("chi_cocycle", not bad, "chi([d_i,d_j]) != 0 at %s" % (bad[0],) if bad else "")
    bad = [(i, j) for i in range(n) for j in range(n) if spec.omega[i][j] != -spec.omega[j][i]]
    rep.add("omega_skew", not bad, "at %s" % (bad[0],) if bad else "")
    try:
        mat_inverse(spec.omega)
        nondeg = True
    except ValueError:
        nondeg = False
    rep.add("omega_nondegenerate", nondeg)
    # d0 omega + chi ^ omega = 0, evaluated on basis triples
    witness = None
    for i, j, k in combinations(range(n), 3):
        a, b, c = e[i], e[j], e[k]
        d0 = (-_omega(spec, spec.bracket_vec(a, b), c) + _omega(spec, spec.bracket_vec(a, c), b)
              - _omega(spec, spec.bracket_vec(b, c), a))
        cw = spec.chi[i] * spec.omega[j][k] - spec.chi[j] * spec.omega[i][k] + spec.chi[k] * spec.omega[i][j]
        if d0 + cw:
            witness = (i, j, k)
            break
    rep.add("omega_twisted_closed", witness is None, "fails on %s" % (witness,) if witness else "")
    return rep


@dataclass
class DerivedData:
    r: list            # inverse of omega: sum_k r[i][k] omega[k][j] = delta
    dual: list         # d^i = sum_l dual[i][l] d_l
    s: list            # s = sum_i chi(d_i) d^i, coordinates
    rho: list          # 1/2 sum r^ij [d_i, d_j]
    phi: list          # phi = iota_{rho - s} omega = -chi + iota_rho omega
    trace_ad: list
    chi_dual: list     # chi(d^k)
    e_up: dict         # (i,j) -> matrix of e^{ij}
    f: dict            # (i,j), i<=j -> matrix of f^{ij}
    adsp: list         # k -> matrix of ad^sp d^k
    ad_dual: list      # k -> matrix of ad d^k


def ad_matrix(spec, v):
    """Matrix M with M[l][j] = coefficient of d_l in [v, d_j]."""
    n = spec.dim
    M = mat_zero(n)
    for j in range(n):
        col = spec.bracket_vec(v, _unit(n, j))
        for l in range(n):
            M[l][j] = col[l]
    return M


def derive_invariants(spec):
    n = spec.dim
    r = mat_inverse(spec.omega)
    dual = [list(r[i]) for i in range(n)]
    s = [sum((spec.chi[i] * r[i][l] for i in range(n)), Fraction(0)) for l in range(n)]
    rho = [Fraction(0)] * n
    for i in range(n):
        for j in range(n):
            if r[i][j]:
                for k, c in spec.struct[i][j].items():
                    rho[k] += r[i][j] * c / 2
    phi = [sum(((rho[m] - s[m]) * spec.omega[m][a] for m in range(n)), Fraction(0)) for a in range(n)]
    trace_ad = [sum((spec.struct[a][l].get(l, 0) for l in range(n)), Fraction(0)) for a in range(n)]
    chi_dual = [sum((r[k][l] * spec.chi[l] for l in range(n)), Fraction(0)) for k in range(n)]
    e_up = {}
    for i in range(n):
        for j in range(n):
            M = mat_zero(n)
            for a in range(n):
                M[a][j] = r[i][a]
            e_up[i, j] = M
    f = {}
    for i in range(n):
        for j in range(i, n):
            f[i, j] = mat_scale(mat_add(e_up[i, j], e_up[j, i]), Fraction(-1, 2))
    ad_dual = [ad_matrix(spec, dual[k]) for k in range(n)]
    adsp = []
    for k in range(n):
        M = [list(row) for row in ad_dual[k]]
        for l in range(n):
            for j in range(n):
                M[l][j] += r[k][l] * spec.chi[j]
        for i in range(n):
            for b in range(n):
                cb = spec.struct[i][b].get(k, 0)
                if cb:
                    for a in range(n):
                        M[a][b] += cb * r[i][a] / 2
        for a in range(n):
            M[a][a] -= chi_dual[k] / 2
        adsp.append(M)
    return DerivedData(r, dual, s, rho, phi, trace_ad, chi_dual, e_up, f, adsp, ad_dual)


def is_symplectic_matrix(spec, A):
    """omega(A d_i, d_j) + omega(d_i, A d_j) = 0 for all i, j."""
    n = spec.dim
    for i in range(n):
        for j in range(n):
            s = sum((A[a][i] * spec.omega[a][j] + A[a][j] * spec.omega[i][a] for a in range(n)), Fraction(0))
            if s:
                return False
    return True


def solve_frobenius_splitting(spec):
    """A covector zeta with omega(a, b) = -zeta([a, b]).

    Returns (zeta, unique).  When several solutions exist the one with all
    free coordinates zero is returned.  Raises ValueError when chi != 0 or no
    solution exists.
    """
    if not spec.chi_is_zero():
        raise ValueError("a central extension by omega needs chi = 0")
    n = spec.dim
    # unknowns zeta_k; equation (i,j): sum_k c_ij^k zeta_k = -omega_ij
    rows = []
    rhs = []
    for i in range(n):
        for j in range(i + 1, n):
            rows.append(spec.struct[i][j])
            rhs.append(-spec.omega[i][j])
    # solve via kernel of the augmented system with a marker column
    cols = []
    for k in range(n):
        cols.append({e: row.get(k, 0) for e, row in enumerate(rows) if row.get(k, 0)})
    cols.append({e: -b for e, b in enumerate(rhs) if b})
    ker = kernel(cols)
    sol = [v for v in ker if n in v]
    if not sol:
        raise ValueError("omega is not exact: no Frobenius splitting")
    v = sol[0]
    zeta = [v.get(k, Fraction(0)) / v[n] for k in range(n)]
    unique = len(ker) == 1
    return zeta, unique


@dataclass
class DPrimeModule:
    """A finite-dimensional module over d' = d + kc.

    act[i] is the matrix of the lifted generator d_i^ (acting on column
    vectors) and the central element c acts by the scalar lam.
    """
    act: list
    lam: Fraction = Fraction(0)

    @property
    def dim(self):
        return len(self.act[0]) if self.act else 0


def validate_dprime_module(spec, mod):
    """[act_i, act_j] = sum_k c_ij^k act_k + omega_ij lam."""
    rep = ValidationReport()
    n = spec.dim
    rep.add("count", len(mod.act) == n, "expected %d matrices" % n)
    if len(mod.act) != n:
        return rep
    p = mod.dim
    bad = None
    for i in range(n):
        for j in range(i + 1, n):
            lhs = commutator(mod.act[i], mod.act[j])
            rhs = mat_scale(mat_identity(p), spec.omega[i][j] * mod.lam)
            for k, c in spec.struct[i][j].items():
                rhs = mat_add(rhs, mod.act[k], c)
            if lhs != rhs:
                bad = (i, j)
                break
        if bad:
            break
    rep.add("central_extension_relations", bad is None, "fails at %s" % (bad,) if bad else "")
    if mod.lam and not spec.chi_is_zero():
        rep.add("lambda_needs_chi_zero", False, "c acts nontrivially but chi != 0")
    return rep


def dprime_from_dmodule(spec, rho_mats, lam=0):
    """Lift a d-module to d' through the splitting d_i -> d_i^ + zeta(d_i) c."""
    lam = frac(lam)
    p = len(rho_mats[0])
    if lam:
        zeta, _ = solve_frobenius_splitting(spec)
    else:
        zeta = [Fraction(0)] * spec.dim
    act = [mat_add(rho_mats[i], mat_identity(p), zeta[i] * lam) for i in range(spec.dim)]
    return DPrimeModule(act, lam)


def character_module(spec, covector, lam=0):
    """One-dimensional d'-module with d_i^ acting by covector[i]."""
    return DPrimeModule([[[frac(x)]] for x in covector], frac(lam))


def shift_module(mod, covector):
    """Tensor with the character `covector` (act_i += covector_i)."""
    p = mod.dim
    return DPrimeModule([mat_add(a, mat_identity(p), frac(c)) for a, c in zip(mod.act, covector)], mod.lam)


# spec files

def _parse_coeff(x, where):
    try:
        return frac(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise SpecError("bad coefficient %r in %s" % (x, where))


def parse_spec_text(text, name=""):
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise SpecError("not valid YAML: %s" % exc)
    if not isinstance(data, dict):
        raise SpecError("spec must be a mapping")
    for key in ("dim", "omega"):
        if key not in data:
            raise SpecError("missing field %r" % key)
    dim = data["dim"]
    if not isinstance(dim, int) or dim <= 0:
        raise SpecError("dim must be a positive integer")
    brackets = []
    for entry in data.get("brackets") or []:
        if not isinstance(entry, (list, tuple)) or len(entry) != 4:
            raise SpecError("bracket entries are [i, j, k, coeff]: %r" % (entry,))
        i, j, k, c = entry
        for x in (i, j, k):
            if not isinstance(x, int) or not 1 <= x <= dim:
                raise SpecError("bracket index out of range: %r" % (entry,))
        brackets.append((i - 1, j - 1, k - 1, _parse_coeff(c, "brackets")))
    chi = data.get("chi") or [0] * dim
    if len(chi) != dim:
        raise SpecError("chi must have %d entries" % dim)
    chi = [_parse_coeff(x, "chi") for x in chi]
    omega = data["omega"]
    if not isinstance(omega, list) or len(omega) != dim or any(
            not isinstance(r, list) or len(r) != dim for r in omega):
        raise SpecError("omega must be a %dx%d matrix" % (dim, dim))
    omega = [[_parse_coeff(x, "omega") for x in r] for r in omega]
    return LieAlgebraSpec.from_brackets(dim, brackets, chi, omega, name=data.get("name", name))


def load_spec(path):
    with open(path) as fh:
        return parse_spec_text(fh.read(), name=str(path))


def spec_to_text(spec):
    lines = ["name: %s" % (spec.name or "unnamed"), "dim: %d" % spec.dim, "brackets:"]
    for i in range(spec.dim):
        for j in range(i + 1, spec.dim):
            for k, c in sorted(spec.struct[i][j].items()):
                lines.append('  - [%d, %d, %d, "%s"]' % (i + 1, j + 1, k + 1, c))
    lines.append("chi: [%s]" % ", ".join('"%s"' % x for x in spec.chi))
    lines.append("omega:")
    for r in spec.omega:
        lines.append("  - [%s]" % ", ".join('"%s"' % x for x in r))
    return "\n".join(lines) + "\n"


# the fixed battery

def _std_omega(n):
    N = n // 2
    om = [[0] * n for _ in range(n)]
    for i in range(N):
        om[2 * i][2 * i + 1] = 1
        om[2 * i + 1][2 * i] = -1
    return om


def abelian(n):
    return LieAlgebraSpec.from_brackets(n, [], None, _std_omega(n), name="A%d" % n)


def frobenius2():
    return LieAlgebraSpec.from_brackets(2, [(0, 1, 0, 1)], None, _std_omega(2), name="F2")


def twisted2():
    return LieAlgebraSpec.from_brackets(2, [(0, 1, 0, 1)], [0, 1], _std_omega(2), name="X2")


def frobenius4():
    return LieAlgebraSpec.from_brackets(4, [(0, 1, 0, 1), (2, 3, 2, 1)], None, _std_omega(4), name="F4")


def battery():
    return {"A2": abelian(2), "F2": frobenius2(), "X2": twisted2(), "A4": abelian(4), "F4": frobenius4()}

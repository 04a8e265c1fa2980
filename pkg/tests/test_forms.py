from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from hypothesis import given, settings, strategies as st

from hpseudo.algebra import battery, derive_invariants
from hpseudo.forms import (FormSpace, SpBasis, build_fundamental_rep, kernel_rep, quotient_rep,
                           sort_sign, sym2_rep, trivial_rep, vector_rep)
from hpseudo.linalg import rank

BAT = battery()


def perm_sign(p):
    return sort_sign(p)[0]


def oracle_wedge(fs, a, p, b, q):
    """(a^b)(d_T) = 1/(p!q!) sum over permutations of T, from the alternating-function definition."""
    out = {}
    for T in combinations(range(fs.n), p + q):
        s = Fraction(0)
        for sigma in permutations(range(p + q)):
            args = [T[i] for i in sigma]
            s += perm_sign(sigma) * fs.evaluate(a, args[:p]) * fs.evaluate(b, args[p:])
        s /= factorial(p) * factorial(q)
        if s:
            out[T] = s
    return out


def forms(n, p):
    keys = list(combinations(range(n), p))
    return st.dictionaries(st.sampled_from(keys), st.integers(-3, 3).map(Fraction), max_size=4).map(
        lambda d: {k: v for k, v in d.items() if v})


@given(st.integers(0, 4), st.integers(0, 4), st.data())
@settings(max_examples=60, deadline=None)
def test_wedge_matches_permutation_sum(p, q, data):
    fs = FormSpace(BAT["A4"])
    if p + q > 4:
        return
    a, b = data.draw(forms(4, p)), data.draw(forms(4, q))
    assert fs.wedge(a, b) == oracle_wedge(fs, a, p, b, q)


@given(st.sampled_from(sorted(BAT)), st.integers(0, 3), st.data())
@settings(max_examples=40, deadline=None)
def test_d0_squares_to_zero(name, p, data):
    fs = FormSpace(BAT[name])
    if p > fs.n:
        return
    a = data.draw(forms(fs.n, p))
    assert fs.d0(fs.d0(a)) == {}


def test_d0_examples():
    assert FormSpace(BAT["A2"]).d0({(0,): 1}) == {}
    assert FormSpace(BAT["F2"]).d0({(0,): 1}) == {(0, 1): -1}


def test_contract_example():
    fs = FormSpace(BAT["A2"])
    assert fs.contract([1, 0], {(0, 1): 1}) == {(1,): 1}


def test_subspace_dimensions():
    fs2 = FormSpace(BAT["A2"])
    assert len(fs2.J_basis(1)) == fs2.dim(1) == 2
    fs4 = FormSpace(BAT["A4"])
    assert len(fs4.J_basis(3)) == 4 and len(fs4.I_basis(3)) == 4 and fs4.dim(3) == 4
    # R(pi_2) lives on J^2 = ker(omega ^ -: Omega^2 -> Omega^4), dimension 6 - 1
    assert len(fs4.J_basis(2)) == 5 and len(fs4.I_basis(4)) == 1 and len(fs4.J_basis(4)) == 1


def test_psi_powers_are_isomorphisms():
    for name in ("A2", "A4"):
        fs = FormSpace(BAT[name])
        N = fs.n // 2
        assert fs.psi({(): 1}, N) != {}
        for m in range(N + 1):
            src = fs.basis[N - m]
            imgs = [fs.psi({S: 1}, m) for S in src]
            assert rank(imgs) == len(src) == fs.dim(N + m)


def test_fundamental_reps():
    spb4 = SpBasis(BAT["A4"])
    assert [build_fundamental_rep(spb4, n).dim for n in range(3)] == [1, 4, 5]
    for name in ("A2", "X2", "A4"):
        spb = SpBasis(BAT[name])
        for n in range(BAT[name].N + 1):
            rep = build_fundamental_rep(spb, n)
            assert rep.is_lie_hom()
            assert rep.label() == {("pi%d" % n) if n else "0": 1}
    spb2 = SpBasis(BAT["A2"])
    assert build_fundamental_rep(spb2, 1).label() == vector_rep(spb2).label()
    assert sym2_rep(spb4).label() == {"2pi1": 1} and sym2_rep(spb4).dim == 10
    assert trivial_rep(spb4).label() == {"0": 1}


def test_quotient_and_kernel_match():
    # Omega^{N-m}/I^{N-m} and J^{N+m} carry the same irreducible
    spb = SpBasis(BAT["A4"])
    for m in range(3):
        q, _ = quotient_rep(spb, 2 - m)
        k, _ = kernel_rep(spb, 2 + m)
        assert q.label() == k.label() and q.dim == k.dim


def test_f_basis_is_symplectic(any_spec):
    from hpseudo.algebra import is_symplectic_matrix
    d = derive_invariants(any_spec)
    assert all(is_symplectic_matrix(any_spec, M) for M in d.f.values())
    assert all(is_symplectic_matrix(any_spec, M) for M in d.adsp)

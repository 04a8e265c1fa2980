from fractions import Fraction

from hypothesis import given, settings, strategies as st

from hpseudo.algebra import LieAlgebraSpec, battery, derive_invariants, validate_spec
from hpseudo.hopf import EnvelopingAlgebra, multi_indices_upto
from hpseudo.linalg import mat_inverse
from hpseudo.pseudo import (TwoSidedElement, check_iota_homomorphism, current_algebra, from_left_normal,
                            from_right_normal, h_algebra, iota_e, left_normal, right_normal, tau_direct,
                            tau_gl_form, tau_sp_form, w_algebra)

BAT = battery()


def test_left_normal_one_step(A2):
    H = EnvelopingAlgebra(A2)
    X = {((0, 0), (1, 0), 0): Fraction(1)}            # (1 ⊗ d_1) ⊗_H (1 ⊗ u)
    assert left_normal(H, X) == {(1, 0): {((0, 0), 0): -1}, (0, 0): {((1, 0), 0): 1}}
    Y = {((2, 1), (0, 0), 0): Fraction(3)}            # already left normal
    assert left_normal(H, Y) == {(2, 1): {((0, 0), 0): 3}}


def free_elements(n, deg=3):
    keys = multi_indices_upto(n, deg)
    return st.dictionaries(st.tuples(st.sampled_from(keys), st.sampled_from(keys), st.integers(0, 1)),
                           st.integers(-3, 3).map(Fraction), max_size=4).map(
        lambda d: {k: v for k, v in d.items() if v})


@given(st.sampled_from(["A2", "F2", "X2"]), st.data())
@settings(max_examples=40, deadline=None)
def test_normal_forms_round_trip(name, data):
    H = EnvelopingAlgebra(BAT[name])
    X = data.draw(free_elements(2))
    assert from_left_normal(H, left_normal(H, X)) == X
    assert from_right_normal(H, right_normal(H, X)) == X
    t = TwoSidedElement(H, X)
    assert TwoSidedElement.from_left(H, t.left()) == t


def test_h_bracket_abelian(A2):
    He = h_algebra(EnvelopingAlgebra(A2))
    assert He.gen_bracket(0, 0) == {((1, 0), (0, 1), 0): -1, ((0, 1), (1, 0), 0): 1}


def test_w_bracket_abelian(A2):
    W = w_algebra(EnvelopingAlgebra(A2))
    assert W.gen_bracket(0, 1) == {((0, 0), (1, 0), 1): -1, ((0, 1), (0, 0), 0): 1}


def test_current_algebra_abelian(A2):
    Cur = current_algebra(EnvelopingAlgebra(A2), [None, None], lambda a, b: {})
    assert Cur.bracket(Cur.gen(0), Cur.gen(1)) == {}
    assert Cur.check_axioms() == {"skew": True, "jacobi": True}


def test_iota_abelian(A2):
    assert iota_e(EnvelopingAlgebra(A2)) == {((1, 0), 1): 1, ((0, 1), 0): -1}


def test_tau_abelian_is_sum_of_f(A4):
    H = EnvelopingAlgebra(A4)
    d = derive_invariants(A4)
    expect = {}
    for i in range(4):
        for j in range(4):
            f = d.f[min(i, j), max(i, j)]
            for P, x in H.mul(H.gen(i), H.gen(j)).items():
                for a in range(4):
                    for b in range(4):
                        if f[a][b]:
                            k = (P, (a, b))
                            expect[k] = expect.get(k, 0) + x * f[a][b]
    expect = {k: v for k, v in expect.items() if v}
    assert tau_direct(H, d) == expect


def test_tau_forms_agree(any_spec):
    H = EnvelopingAlgebra(any_spec)
    t = tau_direct(H)
    assert t == tau_sp_form(H) == tau_gl_form(H)


def test_axioms_on_battery(any_spec):
    H = EnvelopingAlgebra(any_spec)
    assert w_algebra(H).check_axioms() == {"skew": True, "jacobi": True}
    assert h_algebra(H).check_axioms() == {"skew": True, "jacobi": True}
    assert check_iota_homomorphism(H)


def test_w_axioms_on_non_generators(F2):
    H = EnvelopingAlgebra(F2)
    W = w_algebra(H)
    x = {((1, 0), 0): Fraction(1), ((0, 0), 1): Fraction(-2)}
    y = {((0, 1), 1): Fraction(1, 2)}
    assert W.check_axioms([x, y]) == {"skew": True, "jacobi": True}


def test_mutated_r_breaks_jacobi():
    spec = BAT["F4"]
    H = EnvelopingAlgebra(spec)
    r = [list(row) for row in derive_invariants(spec).r]
    r[1][3] += 1
    r[3][1] -= 1
    res = h_algebra(H, r).check_axioms()
    assert res["skew"] and not res["jacobi"]
    # the matching omega fails the cocycle condition
    mut = LieAlgebraSpec(spec.dim, spec.struct, spec.chi, mat_inverse(r))
    assert not validate_spec(mut).ok


def test_non_skew_r_breaks_both(any_spec):
    H = EnvelopingAlgebra(any_spec)
    r = [list(row) for row in derive_invariants(any_spec).r]
    r[0][0] += 1
    assert h_algebra(H, r).check_axioms() == {"skew": False, "jacobi": False}

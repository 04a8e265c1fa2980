from fractions import Fraction
from importlib import resources

import pytest

from hpseudo.algebra import (DPrimeModule, LieAlgebraSpec, SpecError, battery, derive_invariants,
                             dprime_from_dmodule, load_spec, parse_spec_text, solve_frobenius_splitting,
                             spec_to_text, validate_dprime_module, validate_spec)

OM2 = [[0, 1], [-1, 0]]


def spec2(brackets=(), chi=None):
    return LieAlgebraSpec.from_brackets(2, brackets, chi, OM2)


def test_battery_is_admissible(any_spec):
    rep = validate_spec(any_spec)
    assert rep.ok, rep.failures()


def test_twisted_trace_condition_passes():
    assert validate_spec(spec2([(0, 1, 0, 1)], [0, 1])).ok


def test_chi_on_bracket_fails():
    rep = validate_spec(spec2([(0, 1, 0, 1)], [1, 0]))
    assert not rep.ok
    assert [name for name, ok, _ in rep.checks if not ok] == ["chi_cocycle"]


def test_distinct_diagnostics():
    odd = LieAlgebraSpec.from_brackets(3, [], None, [[0] * 3] * 3)
    assert "even_dim" in [n for n, ok, _ in validate_spec(odd).checks if not ok]
    sing = LieAlgebraSpec.from_brackets(2, [], None, [[0, 0], [0, 0]])
    assert [n for n, ok, _ in validate_spec(sing).checks if not ok] == ["omega_nondegenerate"]
    # [1,2]=2, [2,3]=3 breaks Jacobi on (1,2,3)
    bad = LieAlgebraSpec.from_brackets(4, [(0, 1, 1, 1), (1, 2, 2, 1)], None,
                                       [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    rep = validate_spec(bad)
    fails = {n: d for n, ok, d in rep.checks if not ok}
    assert "jacobi" in fails and "(0, 1, 2)" in fails["jacobi"]


def test_r_is_inverse_of_omega(A2):
    d = derive_invariants(A2)
    assert d.r == [[0, -1], [1, 0]]


def test_abelian_invariants(A4):
    d = derive_invariants(A4)
    assert d.rho == [0] * 4 and d.phi == [0] * 4
    assert all(all(x == 0 for row in M for x in row) for M in d.adsp)


def test_abelian_phi_with_chi():
    spec = LieAlgebraSpec.from_brackets(2, [], [3, 5], OM2)
    d = derive_invariants(spec)
    assert d.rho == [0, 0]
    # phi = -N chi + tr ad = -chi here
    assert d.phi == [-3, -5]


def test_frobenius_splitting():
    b = battery()
    zeta, unique = solve_frobenius_splitting(b["F2"])
    # zeta(d_2) is free; the convention sets free coordinates to zero
    assert zeta == [-1, 0] and not unique
    zeta, _ = solve_frobenius_splitting(b["F4"])
    assert zeta == [-1, 0, -1, 0]
    with pytest.raises(ValueError):
        solve_frobenius_splitting(b["A2"])
    with pytest.raises(ValueError):
        solve_frobenius_splitting(b["X2"])


def test_dprime_module_examples(F2):
    # c acting by 5 on a 1-dim module with zero d-action violates [d1,d2] = d1 + omega_12 c
    assert not validate_dprime_module(F2, DPrimeModule([[[0]], [[0]]], Fraction(5))).ok
    assert validate_dprime_module(F2, DPrimeModule([[[-5]], [[0]]], Fraction(5))).ok
    assert dprime_from_dmodule(F2, [[[0]], [[0]]], 5).act == [[[-5]], [[0]]]
    assert validate_dprime_module(F2, dprime_from_dmodule(F2, [[[0]], [[0]]], 0)).ok


def test_lambda_on_abelian_refused(A2):
    with pytest.raises(ValueError):
        dprime_from_dmodule(A2, [[[0]], [[0]]], 7)


def test_round_trip_and_bundled_files():
    for fname, key in [("abelian2.alg", "A2"), ("frobenius2.alg", "F2"), ("twisted2.alg", "X2"),
                       ("abelian4.alg", "A4"), ("frobenius4.alg", "F4")]:
        spec = battery()[key]
        again = parse_spec_text(spec_to_text(spec))
        assert (again.struct, again.chi, again.omega) == (spec.struct, spec.chi, spec.omega)
        with resources.as_file(resources.files("hpseudo") / "data" / fname) as p:
            on_disk = load_spec(p)
        assert (on_disk.struct, on_disk.chi, on_disk.omega) == (spec.struct, spec.chi, spec.omega)


@pytest.mark.parametrize("text", [
    "dim: 2\n",
    "dim: 2\nomega: [[0, 1]]\n",
    "dim: 2\nomega: [[0, 1], [-1, 0]]\nbrackets: [[1, 3, 1, 1]]\n",
    "dim: 2\nomega: [[0, 1], [-1, 0]]\nchi: [1]\n",
    "dim: 2\nomega: [[0, x], [-1, 0]]\n",
    "dim: [2\n",
    "- 1\n",
])
def test_parse_errors(text):
    with pytest.raises(SpecError):
        parse_spec_text(text)


def test_rational_strings():
    spec = parse_spec_text('dim: 2\nomega: [["0", "3/2"], ["-3/2", 0]]\n')
    assert spec.omega[0][1] == Fraction(3, 2)

from fractions import Fraction

import pytest

from hpseudo.algebra import battery, dprime_from_dmodule
from hpseudo.forms import SpBasis, trivial_rep
from hpseudo.hopf import EnvelopingAlgebra
from hpseudo.lattice import (dmap_check, generate_submodule, lattice_top, meet_submodule, proportional,
                             sum_submodule, whole)
from hpseudo.singular import solve_singular, vec_degree
from hpseudo.tensor import ModuleMap, tensor_module

BAT = battery()


def zero_pi(spec):
    return [[[Fraction(0)]]] * spec.dim


def trivial_module(name):
    spec = BAT[name]
    H = EnvelopingAlgebra(spec)
    return tensor_module(H, dprime_from_dmodule(spec, zero_pi(spec), 0), trivial_rep(SpBasis(spec)))


@pytest.mark.parametrize("name", ["A2", "F2"])
def test_unique_proper_submodule_of_trivial(name):
    V = trivial_module(name)
    D = 4
    ones = [v for v in solve_singular(V, 2).vectors if vec_degree(v) == 1]
    W = generate_submodule(V, ones, D)
    assert W.status == "stabilized"
    # the quotient is one-dimensional, sitting in degree 0
    assert [a - b for a, b in zip(whole(V, D).graded_dims(), W.graded_dims())] == [1, 0, 0, 0, 0]
    # the constant generates everything
    assert generate_submodule(V, [{((0, 0), 0): Fraction(1)}], D).same(whole(V, D))


def test_generated_submodule_is_closed():
    V = trivial_module("F2")
    ones = [v for v in solve_singular(V, 2).vectors if vec_degree(v) == 1]
    D = 3
    W = generate_submodule(V, ones, D)
    for b in W.basis:
        for k in range(2):
            w = V.hmul(V.H.gen(k), b)
            if vec_degree(w) <= D:
                assert W.contains(w)
        for coeff in V.left_action(b).values():
            if vec_degree(coeff) <= D:
                assert W.contains(coeff)


def test_sum_and_meet():
    V = trivial_module("A2")
    D = 3
    A = generate_submodule(V, [{((1, 0), 0): Fraction(1)}], D)
    B = generate_submodule(V, [{((0, 1), 0): Fraction(1)}], D)
    S, M = sum_submodule(A, B), meet_submodule(A, B)
    assert S.dim + M.dim == A.dim + B.dim
    assert M.within(A) and M.within(B) and A.within(S) and B.within(S)


def test_proportional():
    H = EnvelopingAlgebra(BAT["A2"])
    a = ModuleMap(H, [{((1, 0), 0): Fraction(2)}], 1, 1)
    b = ModuleMap(H, [{((1, 0), 0): Fraction(-1)}], 1, 1)
    c = ModuleMap(H, [{((0, 1), 0): Fraction(1)}], 1, 1)
    assert proportional(a, b) == -2
    assert proportional(a, c) is None
    assert proportional(a, ModuleMap(H, [{}], 1, 1)) is None


@pytest.mark.parametrize("name", ["A2", "X2"])
def test_top_lattice_chain(name):
    spec = BAT[name]
    H = EnvelopingAlgebra(spec)
    v = lattice_top(H, zero_pi(spec), 3)
    assert v.ok, [c for c in v.checks if not c[1]]
    assert v.data["dR_over_dd*"] == "1"
    g = v.data["graded_dims"]
    assert g["V"] == [2, 4, 6, 8] and g["im d^N"] == [0, 1, 2, 3] and g["im d^R"] == [0, 0, 2, 3]


def test_lambda_nonzero_complex_on_F2():
    spec = BAT["F2"]
    H = EnvelopingAlgebra(spec)
    v, dm = dmap_check(H, dprime_from_dmodule(spec, zero_pi(spec), 1), 2, irr_cap=3)
    assert v.ok, [c for c in v.checks if not c[1]]
    assert dm.names == ["D1", "DR", "D2"]

from fractions import Fraction
from math import factorial

from hypothesis import given, settings, strategies as st

from hpseudo.algebra import LieAlgebraSpec, battery
from hpseudo.hopf import (EnvelopingAlgebra, check_hopf_axioms, from_text, multi_indices_upto,
                          to_text, unit)
from hpseudo.jets import Jet, exp_minus_chi, jet_mul, pair, right_act, right_dbar
from hpseudo.linalg import iadd

BAT = battery()


# brute-force oracle: straighten words in the free algebra with d_j d_k -> d_k d_j + [d_j, d_k]

def straighten(spec, word):
    """Ordered-monomial expansion {I: c} of the product d_{w1} d_{w2} ... ."""
    out = {}
    todo = [(tuple(word), Fraction(1))]
    while todo:
        w, c = todo.pop()
        for p in range(len(w) - 1):
            if w[p] > w[p + 1]:
                j, k = w[p], w[p + 1]
                todo.append((w[:p] + (k, j) + w[p + 2:], c))
                for l, x in spec.struct[j][k].items():
                    todo.append((w[:p] + (l,) + w[p + 2:], c * x))
                break
        else:
            I = tuple(w.count(t) for t in range(spec.dim))
            out[I] = out.get(I, 0) + c
    return {I: c for I, c in out.items() if c}


def oracle_mul(spec, I, J):
    """d^(I) d^(J) via words; d^(K) = ordered word / K!."""
    def word(K):
        return [t for t in range(spec.dim) for _ in range(K[t])]

    def fact(K):
        out = 1
        for x in K:
            out *= factorial(x)
        return out

    res = straighten(spec, word(I) + word(J))
    scale = Fraction(1, fact(I) * fact(J))
    return {K: c * scale * fact(K) for K, c in res.items()}


def test_product_matches_word_oracle(any_spec):
    H = EnvelopingAlgebra(any_spec)
    idx = multi_indices_upto(H.n, 3 if H.n == 2 else 2)
    for I in idx:
        for J in idx:
            assert H.mul_basis(I, J) == oracle_mul(any_spec, I, J), (I, J)


def test_product_examples():
    A2 = EnvelopingAlgebra(BAT["A2"])
    assert A2.mul_basis((1, 0), (1, 0)) == {(2, 0): 2}
    F2 = EnvelopingAlgebra(BAT["F2"])
    assert F2.mul(F2.gen(1), F2.gen(0)) == {(1, 1): 1, (1, 0): -1}
    h = {(1, 2): Fraction(3), (0, 0): Fraction(-1)}
    assert F2.mul(F2.one(), h) == h and F2.mul(h, F2.one()) == h


def test_coproduct_examples():
    A2 = EnvelopingAlgebra(BAT["A2"])
    assert A2.coproduct({(2, 0): 1}) == {((2, 0), (0, 0)): 1, ((1, 0), (1, 0)): 1, ((0, 0), (2, 0)): 1}
    assert A2.coproduct(A2.one()) == {((0, 0), (0, 0)): 1}


def test_antipode_and_bar_examples():
    A2 = EnvelopingAlgebra(BAT["A2"])
    assert A2.antipode({(0, 2): 1}) == {(0, 2): 1}
    spec = LieAlgebraSpec.from_brackets(2, [], [3, 0], [[0, 1], [-1, 0]])
    H = EnvelopingAlgebra(spec)
    assert H.bar(H.gen(0)) == {(1, 0): 1, (0, 0): -3}
    assert H.antipode(H.bar(H.antipode(H.gen(0)))) == {(1, 0): 1, (0, 0): 3}
    assert H.bar_inverse(H.bar(H.gen(0))) == H.gen(0)


def test_hopf_axioms_on_basis(any_spec):
    H = EnvelopingAlgebra(any_spec)
    for name, ok in check_hopf_axioms(H, 4 if H.n == 2 else 3):
        assert ok, name


def elements(n, deg=4):
    keys = multi_indices_upto(n, deg)
    return st.dictionaries(st.sampled_from(keys), st.integers(-4, 4).map(Fraction), max_size=5).map(
        lambda d: {k: v for k, v in d.items() if v})


@given(st.sampled_from(sorted(BAT)), st.data())
@settings(max_examples=40, deadline=None)
def test_hopf_identities_on_random_elements(name, data):
    H = EnvelopingAlgebra(BAT[name])
    h = data.draw(elements(H.n))
    g = data.draw(elements(H.n, 2))
    D = H.coproduct(h)
    # (eps ⊗ id) Delta = id = (id ⊗ eps) Delta
    left, right = {}, {}
    for (A, B), c in D.items():
        if not any(A):
            iadd(left, {B: c})
        if not any(B):
            iadd(right, {A: c})
    assert left == h and right == h
    # S(h_(1)) h_(2) = eps(h)
    s = {}
    for (A, B), c in D.items():
        iadd(s, H.mul(H.antipode({A: 1}), {B: c}))
    assert s == ({H.zero_index: H.counit(h)} if H.counit(h) else {})
    # Delta and bar are multiplicative, S is antimultiplicative
    hg = H.mul(h, g)
    assert H.coproduct(hg) == H.tensor_mul(H.coproduct(h), H.coproduct(g))
    assert H.antipode(hg) == H.mul(H.antipode(g), H.antipode(h))
    assert H.bar(hg) == H.mul(H.bar(h), H.bar(g))


@given(st.sampled_from(["A2", "F2", "X2"]), st.data())
@settings(max_examples=30, deadline=None)
def test_associativity(name, data):
    H = EnvelopingAlgebra(BAT[name])
    a, b, c = (data.draw(elements(H.n, 2)) for _ in range(3))
    assert H.mul(H.mul(a, b), c) == H.mul(a, H.mul(b, c))


def test_text_round_trip():
    h = {(0, 1): Fraction(-2, 3), (2, 0): Fraction(5), (0, 0): Fraction(1)}
    text = to_text(h)
    assert text == "(0,0): 1\n(0,1): -2/3\n(2,0): 5\n"
    assert from_text(text) == h
    x = Jet(3, h)
    assert Jet.from_text(x.to_text()) == x


def test_jet_pairing_is_dual_basis():
    idx = multi_indices_upto(2, 3)
    for I in idx:
        for J in idx:
            assert pair(Jet(3, {I: 1}), {J: 1}) == (I == J)


def test_jet_pairing_refuses_lossy():
    try:
        pair(Jet(2, {(1, 0): 1}), {(3, 0): 1})
    except ValueError:
        pass
    else:
        raise AssertionError


def test_exp_minus_chi():
    A2 = EnvelopingAlgebra(BAT["A2"])
    assert exp_minus_chi(A2, 4).c == {(0, 0): 1}
    X2 = EnvelopingAlgebra(BAT["X2"])
    E = exp_minus_chi(X2, 3)
    assert E.c == {(0, 0): 1, (0, 1): -1, (0, 2): Fraction(1, 2), (0, 3): Fraction(-1, 6)}


def test_twisted_right_action():
    # (x^1 e^{-chi}) dbar_2 = (x^1 d_2) e^{-chi} on X2
    H = EnvelopingAlgebra(BAT["X2"])
    x1 = Jet(4, {unit(2, 0): 1})
    E = exp_minus_chi(H, 4)
    lhs = right_dbar(H, jet_mul(x1, E), 1)
    rhs = jet_mul(right_act(H, x1, H.gen(1)), E)
    assert lhs.same(rhs) and min(lhs.order, rhs.order) >= 3

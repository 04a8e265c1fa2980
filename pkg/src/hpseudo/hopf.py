"""The universal enveloping algebra H = U(d) in divided-power PBW coordinates.

An element of H is a dict mapping a multi-index I (tuple of length dim) to
its coefficient on d^(I) = d_1^{i_1} ... d_n^{i_n} / I!.  Elements of H⊗H
are dicts keyed by pairs (I, J).
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial

from .linalg import iadd, vscale


def glex_key(I):
    """Graded-lex rank: lower degree first, then d_1-heavy before d_2-heavy."""
    return (sum(I), tuple(-x for x in I))


@lru_cache(maxsize=None)
def multi_indices(n, d):
    """All multi-indices of length n and degree d, in graded-lex order."""
    if n == 0:
        return ((),) if d == 0 else ()
    out = []
    for a in range(d, -1, -1):
        for rest in multi_indices(n - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def multi_indices_upto(n, D):
    out = []
    for d in range(D + 1):
        out.extend(multi_indices(n, d))
    return tuple(out)


def fil_dim(n, D):
    """dim fil^D H = number of multi-indices of degree <= D."""
    return comb(D + n, n) if D >= 0 else 0


def mi_add(I, J):
    return tuple(a + b for a, b in zip(I, J))


def mi_sub(I, J):
    return tuple(a - b for a, b in zip(I, J))


def mi_factorial(I):
    out = 1
    for a in I:
        out *= factorial(a)
    return out


def mi_binom(I, A):
    out = 1
    for i, a in zip(I, A):
        out *= comb(i, a)
    return out


def sub_indices(I):
    """All A with A <= I componentwise."""
    return product(*(range(i + 1) for i in I))


def unit(n, k, power=1):
    return tuple(power if i == k else 0 for i in range(n))


def degree(h):
    return max((sum(I) for I in h), default=-1)


def to_text(h):
    """One "(i1,...,in): p/q" line per nonzero term, in graded-lex order."""
    return "".join("(%s): %s\n" % (",".join(map(str, I)), Fraction(h[I]))
                   for I in sorted(h, key=glex_key) if h[I])


def from_text(text):
    out = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, val = line.partition(":")
        I = tuple(int(x) for x in key.strip().strip("()").split(","))
        out[I] = Fraction(val.strip())
    return out


class EnvelopingAlgebra:
    def __init__(self, spec):
        self.spec = spec
        self.n = spec.dim
        self.zero_index = (0,) * self.n
        self.abelian = spec.is_abelian()
        self._gen = {}
        self._ord = {}
        self._S = {}

    # basic elements

    def one(self):
        return {self.zero_index: Fraction(1)}

    def gen(self, k):
        return {unit(self.n, k): Fraction(1)}

    def vector(self, coords):
        """The element sum_k coords[k] d_k of d inside H."""
        return {unit(self.n, k): Fraction(c) for k, c in enumerate(coords) if c}

    def divided(self, I):
        return {tuple(I): Fraction(1)}

    def counit(self, h):
        return h.get(self.zero_index, Fraction(0))

    # multiplication, done on ordinary monomials d^I = I! d^(I)

    def _gen_mul(self, j, I):
        key = (j, I)
        hit = self._gen.get(key)
        if hit is not None:
            return hit
        k = next((t for t, a in enumerate(I) if a), None)
        if k is None or k >= j:
            res = {tuple(a + (t == j) for t, a in enumerate(I)): Fraction(1)}
        else:
            rest = tuple(a - (t == k) for t, a in enumerate(I))
            res = {}
            # d_j d_k M = d_k (d_j M) + [d_j, d_k] M
            for M, c in self._gen_mul(j, rest).items():
                iadd(res, self._gen_mul(k, M), c)
            for l, c in self.spec.struct[j][k].items():
                iadd(res, self._gen_mul(l, rest), c)
        self._gen[key] = res
        return res

    def _ord_mul(self, I, J):
        key = (I, J)
        hit = self._ord.get(key)
        if hit is not None:
            return hit
        if not any(I):
            res = {J: Fraction(1)}
        else:
            a = max(t for t, x in enumerate(I) if x)
            rest = tuple(x - (t == a) for t, x in enumerate(I))
            res = {}
            for K, c in self._gen_mul(a, J).items():
                iadd(res, self._ord_mul(rest, K), c)
        self._ord[key] = res
        return res

    def mul_basis(self, I, J):
        """d^(I) d^(J) as an element of H."""
        if self.abelian:
            K = mi_add(I, J)
            return {K: Fraction(mi_binom(K, I))}
        scale = Fraction(1, mi_factorial(I) * mi_factorial(J))
        return {K: c * scale * mi_factorial(K) for K, c in self._ord_mul(I, J).items()}

    def mul(self, a, b):
        out = {}
        for I, x in a.items():
            for J, y in b.items():
                iadd(out, self.mul_basis(I, J), x * y)
        return out

    def mul_many(self, *hs):
        out = self.one()
        for h in hs:
            out = self.mul(out, h)
        return out

    def power(self, h, k):
        out = self.one()
        for _ in range(k):
            out = self.mul(out, h)
        return out

    def commutator(self, a, b):
        return iadd(self.mul(a, b), self.mul(b, a), -1)

    # Hopf structure

    def coproduct_basis(self, I):
        return {(A, mi_sub(I, A)): Fraction(1) for A in sub_indices(I)}

    def coproduct(self, h):
        out = {}
        for I, c in h.items():
            for A in sub_indices(I):
                key = (A, mi_sub(I, A))
                out[key] = out.get(key, 0) + c
        return {k: v for k, v in out.items() if v}

    def antipode_basis(self, I):
        hit = self._S.get(I)
        if hit is not None:
            return hit
        res = self.one()
        for k in range(self.n - 1, -1, -1):
            if I[k]:
                res = self.mul(res, {unit(self.n, k, I[k]): Fraction(1)})
        if sum(I) % 2:
            res = vscale(res, -1)
        self._S[I] = res
        return res

    def antipode(self, h):
        out = {}
        for I, c in h.items():
            iadd(out, self.antipode_basis(I), c)
        return out

    def bar(self, h, covector=None):
        """The automorphism d -> d - covector(d); covector defaults to chi."""
        cov = self.spec.chi if covector is None else covector
        out = {}
        for I, c in h.items():
            for A in sub_indices(I):
                w = c
                for k in range(self.n):
                    e = I[k] - A[k]
                    if e:
                        w *= Fraction((-cov[k]) ** e, factorial(e))
                if w:
                    out[A] = out.get(A, 0) + w
        return {k: v for k, v in out.items() if v}

    def bar_inverse(self, h):
        return self.bar(h, [-x for x in self.spec.chi])

    def dbar(self, k):
        """bar(d_k) = d_k - chi(d_k)."""
        return self.bar(self.gen(k))

    def dual_vector(self, derived, k):
        """d^k = sum_l r^{kl} d_l."""
        return self.vector(derived.dual[k])

    # tensor helpers

    def tensor_mul(self, a, b):
        """Product in H⊗H of dicts keyed by (I, J)."""
        out = {}
        for (I1, J1), x in a.items():
            for (I2, J2), y in b.items():
                left = self.mul_basis(I1, I2)
                right = self.mul_basis(J1, J2)
                for K, u in left.items():
                    for L, v in right.items():
                        key = (K, L)
                        val = out.get(key, 0) + x * y * u * v
                        if val:
                            out[key] = val
                        else:
                            out.pop(key, None)
        return out

    def tensor(self, a, b):
        return {(I, J): x * y for I, x in a.items() for J, y in b.items()}

    def basis_upto(self, D):
        return multi_indices_upto(self.n, D)


def check_hopf_axioms(H, cap):
    """Verify the bialgebra and Hopf identities on all basis elements of degree <= cap.

    Returns a list of (name, ok) pairs.
    """
    results = []
    basis = H.basis_upto(cap)
    n = H.n
    # coassociativity
    ok = True
    for I in basis:
        left = {}
        right = {}
        for (A, B), c in H.coproduct_basis(I).items():
            for (A1, A2), d in H.coproduct_basis(A).items():
                left[(A1, A2, B)] = left.get((A1, A2, B), 0) + c * d
            for (B1, B2), d in H.coproduct_basis(B).items():
                right[(A, B1, B2)] = right.get((A, B1, B2), 0) + c * d
        if left != right:
            ok = False
            break
    results.append(("coassociativity", ok))
    # counit and antipode
    ok_counit = ok_anti = True
    for I in basis:
        D = H.coproduct_basis(I)
        l = {}
        r = {}
        a1 = {}
        a2 = {}
        for (A, B), c in D.items():
            if not any(A):
                iadd(l, {B: c})
            if not any(B):
                iadd(r, {A: c})
            iadd(a1, H.mul(H.antipode_basis(A), {B: c}))
            iadd(a2, H.mul({A: c}, H.antipode_basis(B)))
        if l != {I: 1} or r != {I: 1}:
            ok_counit = False
        eps = {H.zero_index: Fraction(1)} if not any(I) else {}
        if a1 != eps or a2 != eps:
            ok_anti = False
    results.append(("counit", ok_counit))
    results.append(("antipode", ok_anti))
    # coproduct multiplicative, antipode antimultiplicative, bar multiplicative
    half = multi_indices_upto(n, max(cap // 2, 1))
    ok_mult = ok_smult = ok_bar = True
    for I in half:
        for J in half:
            prod = H.mul_basis(I, J)
            lhs = H.coproduct(prod)
            rhs = H.tensor_mul(H.coproduct_basis(I), H.coproduct_basis(J))
            if lhs != rhs:
                ok_mult = False
            if H.antipode(prod) != H.mul(H.antipode_basis(J), H.antipode_basis(I)):
                ok_smult = False
            if H.bar(prod) != H.mul(H.bar({I: 1}), H.bar({J: 1})):
                ok_bar = False
    results.append(("coproduct_multiplicative", ok_mult))
    results.append(("antipode_antimultiplicative", ok_smult))
    results.append(("bar_multiplicative", ok_bar))
    ok_inv = all(H.bar_inverse(H.bar({I: 1})) == {I: 1} for I in basis)
    results.append(("bar_invertible", ok_inv))
    # S(bar(S(d))) = d + chi(d)
    ok_sbs = True
    for k in range(n):
        lhs = H.antipode(H.bar(H.antipode(H.gen(k))))
        rhs = iadd(H.gen(k), {H.zero_index: H.spec.chi[k]})
        if lhs != rhs:
            ok_sbs = False
    results.append(("S_bar_S_on_generators", ok_sbs))
    # cocommutativity
    ok_cc = all(
        {(B, A): c for (A, B), c in H.coproduct_basis(I).items()} == H.coproduct_basis(I) for I in basis)
    results.append(("cocommutative", ok_cc))
    return results

"""Truncated elements of the dual X = H* (jets).

x_I is the functional <x_I, d^(J)> = delta_IJ.  With divided powers on the
H side the product is x_I x_J = x_{I+J}, so X is a polynomial algebra in
x^k = x_{e_k}.  A jet of order M only knows its pairings with fil^M H.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .hopf import degree, from_text, multi_indices_upto, mi_add, to_text, unit
from .linalg import iadd, vscale


@dataclass
class Jet:
    order: int
    c: dict = field(default_factory=dict)

    def __post_init__(self):
        self.c = {I: Fraction(v) for I, v in self.c.items() if v and sum(I) <= self.order}

    def __add__(self, other):
        return Jet(min(self.order, other.order), iadd(dict(self.c), other.c))

    def __sub__(self, other):
        return Jet(min(self.order, other.order), iadd(dict(self.c), other.c, -1))

    def scale(self, a):
        return Jet(self.order, vscale(self.c, Fraction(a)))

    def truncate(self, order):
        return Jet(min(order, self.order), self.c)

    def low_degree(self):
        """Smallest |I| with a nonzero coefficient (x lies in fil_{low-1} X)."""
        return min((sum(I) for I in self.c), default=None)

    def is_zero(self):
        return not self.c

    def to_text(self):
        return "order: %d\n" % self.order + to_text(self.c)

    @classmethod
    def from_text(cls, text):
        head, _, body = text.partition("\n")
        return cls(int(head.split(":")[1]), from_text(body))

    def same(self, other):
        """Equality on the common order."""
        m = min(self.order, other.order)
        return self.truncate(m).c == other.truncate(m).c


def jet_x(n, I, order):
    return Jet(order, {tuple(I): 1})


def jet_one(n, order):
    return Jet(order, {(0,) * n: 1})


def jet_linear(covector, order):
    n = len(covector)
    return Jet(order, {unit(n, k): c for k, c in enumerate(covector) if c})


def pair(x, h):
    """<x, h>.  Pairing with elements beyond the jet order is refused."""
    if degree(h) > x.order:
        raise ValueError("pairing a jet of order %d with an element of degree %d" % (x.order, degree(h)))
    return sum((x.c.get(I, 0) * v for I, v in h.items()), Fraction(0))


def jet_mul(x, y):
    order = min(x.order, y.order)
    out = {}
    for I, a in x.c.items():
        for J, b in y.c.items():
            K = mi_add(I, J)
            if sum(K) <= order:
                out[K] = out.get(K, 0) + a * b
    return Jet(order, out)


def left_act(H, h, x):
    """h x with <h x, f> = <x, S(h) f>."""
    d = max(degree(h), 0)
    order = x.order - d
    Sh = H.antipode(h)
    out = {}
    for K in multi_indices_upto(H.n, order):
        v = pair(x, H.mul(Sh, {K: 1}))
        if v:
            out[K] = v
    return Jet(order, out)


def right_act(H, x, h):
    """x h with <x h, f> = <x, f S(h)>."""
    d = max(degree(h), 0)
    order = x.order - d
    Sh = H.antipode(h)
    out = {}
    for K in multi_indices_upto(H.n, order):
        v = pair(x, H.mul({K: 1}, Sh))
        if v:
            out[K] = v
    return Jet(order, out)


def right_dbar(H, x, k):
    """x dbar_k = x d_k - chi(d_k) x."""
    y = right_act(H, x, H.gen(k))
    return y - x.scale(H.spec.chi[k])


def exp_minus(covector, order):
    """exp(-sum_k covector_k x^k), truncated."""
    n = len(covector)
    out = {}
    for I in multi_indices_upto(n, order):
        v = Fraction(1)
        for k, e in enumerate(I):
            if e:
                v *= Fraction((-covector[k]) ** e, factorial(e))
        if v:
            out[I] = v
    return Jet(order, out)


def exp_minus_chi(H, order):
    return exp_minus(H.spec.chi, order)

"""Annihilation algebras realised on jets.

P = X ⊗_H He is identified with X (x <-> x ⊗_H e), W = X ⊗ d is stored as
a list of 2N jets (the coefficients of d_0, ..., d_{2N-1}).
"""
from .hopf import multi_indices_upto, mi_sub, sub_indices, unit
from .jets import Jet, jet_mul, right_act, right_dbar, exp_minus_chi, jet_x, pair
from .linalg import iadd, kernel, mat_zero
from .pseudo import _acc


def p_bracket(H, derived, x, y):
    """[x, y] = sum r^ij (x dbar_i)(y dbar_j)."""
    n = H.n
    xd = [right_dbar(H, x, i) for i in range(n)]
    yd = [right_dbar(H, y, j) for j in range(n)]
    out = Jet(min(x.order, y.order) - 1, {})
    for i in range(n):
        for j in range(n):
            if derived.r[i][j]:
                out = out + jet_mul(xd[i], yd[j]).scale(derived.r[i][j])
    return out


def w_zero(n, order):
    return [Jet(order, {}) for _ in range(n)]


def w_bracket(H, u, v):
    """[x⊗a, y⊗b] = xy⊗[a,b] - x(ya)⊗b + (xb)y⊗a, extended bilinearly."""
    n = H.n
    order = min(u[0].order, v[0].order) - 1
    out = w_zero(n, order)
    spec = H.spec
    for a in range(n):
        for b in range(n):
            x, y = u[a], v[b]
            if x.is_zero() or y.is_zero():
                continue
            xy = jet_mul(x, y)
            for k, c in spec.struct[a][b].items():
                out[k] = out[k] + xy.scale(c)
            ya = right_act(H, y, H.gen(a))
            xb = right_act(H, x, H.gen(b))
            out[b] = out[b] - jet_mul(x, ya)
            out[a] = out[a] + jet_mul(xb, y)
    return [j.truncate(order) for j in out]


def iota_star(H, derived, x):
    """iota_*(x ⊗_H e) = -sum_i x dbar_i ⊗ d^i."""
    n = H.n
    out = w_zero(n, x.order - 1)
    for i in range(n):
        xd = right_dbar(H, x, i)
        for l in range(n):
            if derived.r[i][l]:
                out[l] = out[l] - xd.scale(derived.r[i][l])
    return out


def w_same(u, v):
    return all(a.same(b) for a, b in zip(u, v))


def iota_star_kernel(H, derived, order):
    """Basis of the kernel of iota_* on jets of the given order (as coefficient dicts)."""
    basis = multi_indices_upto(H.n, order)
    images = []
    for I in basis:
        img = {}
        for l, j in enumerate(iota_star(H, derived, Jet(order, {I: 1}))):
            for K, c in j.c.items():
                img[(l, K)] = c
        images.append(img)
    return [{basis[i]: c for i, c in v.items()} for v in kernel(images)]


def mod_w1(u):
    """Truncate W elements to their class modulo W_1 (coefficients of degree <= 1)."""
    return [j.truncate(1) for j in u]


def w0_to_gl(n, u):
    """W_0/W_1 -> gl(d): x ⊗ a -> -a ⊗ (x mod fil_1 X)."""
    M = mat_zero(n)
    for a, j in enumerate(u):
        for I, c in j.c.items():
            if sum(I) == 1:
                b = I.index(1)
                M[a][b] -= c
    return M


def w0_constant_free(u):
    return all(all(sum(I) >= 1 for I in j.c) for j in u)


def distinguished_images(H, derived, order=4):
    """Check the images of e^{-chi}, x^k e^{-chi} and x^i x^j e^{-chi} under iota_*."""
    n = H.n
    spec = H.spec
    E = exp_minus_chi(H, order)
    res = {}
    img0 = iota_star(H, derived, E)
    res["e^-chi -> 0"] = all(j.is_zero() for j in img0)
    ok = True
    for k in range(n):
        lhs = mod_w1(iota_star(H, derived, jet_mul(jet_x(n, unit(n, k), order), E)))
        rhs = w_zero(n, 1)
        E1 = E.truncate(1)
        for l in range(n):
            if derived.dual[k][l]:
                rhs[l] = rhs[l] + E1.scale(derived.dual[k][l])
        for i in range(n):
            for j in range(i + 1, n):
                c = spec.struct[i][j].get(k, 0)
                if c:
                    xj = jet_mul(jet_x(n, unit(n, j), 1), E1)
                    for l in range(n):
                        if derived.dual[i][l]:
                            rhs[l] = rhs[l] - xj.scale(c * derived.dual[i][l])
        if not w_same(lhs, rhs):
            ok = False
    res["x^k e^-chi"] = ok
    ok = True
    for i in range(n):
        for j in range(i, n):
            x = jet_mul(jet_x(n, tuple(a + b for a, b in zip(unit(n, i), unit(n, j))), order), E)
            img = mod_w1(iota_star(H, derived, x))
            if not w0_constant_free(img):
                ok = False
                continue
            target = [[2 * v for v in row] for row in derived.f[i, j]]
            if w0_to_gl(n, img) != target:
                ok = False
    res["x^i x^j e^-chi = 2 f^ij"] = ok
    return res


def check_iota_star_homomorphism(H, derived, jets):
    ok = True
    for x in jets:
        for y in jets:
            lhs = iota_star(H, derived, p_bracket(H, derived, x, y))
            rhs = w_bracket(H, iota_star(H, derived, x), iota_star(H, derived, y))
            if not w_same(lhs, rhs):
                ok = False
    return ok


# action on modules

def fourier_coefficients(H, module, v):
    """{K: w} with (x ⊗_H e).v = sum_K <x, d^(K)> w_K, read off the free form of e * v.

    Uses <x, S(f g_(-1))> = <x, g_(1) S(f)> (cocommutativity)."""
    out = {}
    for (P, Q, b), c in module.action(v).items():
        SP = H.antipode_basis(P)
        for A in sub_indices(Q):
            B = mi_sub(Q, A)
            for K, y in H.mul({A: 1}, SP).items():
                _acc(out.setdefault(K, {}), (B, b), c * y)
    return {K: w for K, w in out.items() if w}


def ann_act(H, module, x, v):
    """(x ⊗_H e) . v for a jet x; the jet order must cover deg(v) + 2."""
    out = {}
    for K, w in fourier_coefficients(H, module, v).items():
        if sum(K) > x.order:
            raise ValueError("jet order %d too small for a degree %d coefficient" % (x.order, sum(K)))
        s = x.c.get(K)
        if s:
            iadd(out, w, s)
    return out


def ann_act_left(H, module, x, v):
    """Same action computed from the left normal form: sum_I <x, S(d^(I))> v'_I."""
    out = {}
    for I, w in module.left_action(v).items():
        s = pair(x, H.antipode_basis(I))
        if s:
            iadd(out, w, s)
    return out


def reconstruct_action(H, module, v, twisted=False):
    """Rebuild e * v from the Fourier coefficients (x_I ⊗_H e) . v.

    With twisted=True uses bar(S(d^(I))) and x_I e^{-chi}.
    """
    from .pseudo import free_from_raw
    D = max(sum(J) for J, _ in v) + 2
    E = exp_minus_chi(H, D)
    raw = []
    one = H.one()
    for I in multi_indices_upto(H.n, D):
        x = Jet(D, {I: 1})
        if twisted:
            x = jet_mul(x, E)
            coef = H.bar(H.antipode_basis(I))
        else:
            coef = H.antipode_basis(I)
        w = ann_act(H, module, x, v)
        if w:
            raw.append((coef, one, w))
    return free_from_raw(H, raw)


def classical_poisson_check(H, derived, jets):
    """For abelian d and chi = 0: the jet bracket is the constant Poisson bracket
    sum r^ij (-d_i x)(-d_j y), i.e. {x,y} with Poisson tensor r in the t-coordinates."""
    n = H.n

    def deriv(x, i):
        out = {}
        for I, c in x.c.items():
            if I[i]:
                out[mi_sub(I, unit(n, i))] = c * I[i]
        return Jet(x.order - 1, out)
    ok = True
    for x in jets:
        for y in jets:
            lhs = p_bracket(H, derived, x, y)
            rhs = Jet(lhs.order, {})
            for i in range(n):
                for j in range(n):
                    if derived.r[i][j]:
                        rhs = rhs + jet_mul(deriv(x, i), deriv(y, j)).scale(derived.r[i][j])
            if not lhs.same(rhs):
                ok = False
    return ok

"""
Singular vectors of a tensor module
===================================

Build V = H ⊗ (Pi ⊗ U) over the abelian 2-dim algebra with U the vector
representation, solve for the singular vectors up to degree 3, and look at
what they are.
"""
from fractions import Fraction

from hpseudo.algebra import battery, dprime_from_dmodule
from hpseudo.forms import SpBasis, build_fundamental_rep
from hpseudo.hopf import EnvelopingAlgebra
from hpseudo.singular import classify_compare, solve_singular, solve_singular_dual, same_span
from hpseudo.tensor import tensor_module

spec = battery()["A2"]
H = EnvelopingAlgebra(spec)
pi = [[[Fraction(0)]] for _ in range(spec.dim)]      # Pi = trivial 1-dim d-module
U = build_fundamental_rep(SpBasis(spec), 1)
V = tensor_module(H, dprime_from_dmodule(spec, pi, 0), U)

# the kernel of the |I| >= 3 coefficients, filtered by degree
sb = solve_singular(V, 3)
print("dim sing ∩ fil^3 =", sb.dim)
print("by degree:", sb.graded_dims())
for v in sb.vectors:
    print("  ", {k: str(c) for k, c in sorted(v.items())})

# same space from the action of the degree-1 piece on the dual side
print("dual detector agrees:", same_span(sb.vectors, solve_singular_dual(V, 3).vectors, H.n))

# the sp-module structure of each graded piece
verdict = classify_compare(V, 3)
print("blocks (label, degree, dim):", verdict.data["found"])
print("all checks pass:", verdict.ok)

"""
Submodule lattices
==================

For U = pi_N the singular vectors generate a chain; for 1 <= n < N the
images of the two complex maps meeting at R(pi_n) give a small lattice.
"""
from fractions import Fraction

from hpseudo.algebra import battery
from hpseudo.hopf import EnvelopingAlgebra
from hpseudo.lattice import lattice_middle, lattice_top

bat = battery()

# top fundamental rep on the twisted algebra
spec = bat["X2"]
v = lattice_top(EnvelopingAlgebra(spec), [[[Fraction(0)]]] * spec.dim, 3)
print(spec.name, "U = pi_1, ok:", v.ok)
for name, dims in v.data["graded_dims"].items():
    print("   %-12s %s" % (name, dims))

# middle rep on the 4-dim abelian algebra: takes a few seconds
spec = bat["A4"]
v = lattice_middle(EnvelopingAlgebra(spec), [[[Fraction(0)]]] * spec.dim, 1, 3)
print(spec.name, "U = pi_1, ok:", v.ok)
for name, dims in v.data["graded_dims"].items():
    print("   %-16s %s" % (name, dims))

# which submodule each set of singular blocks generates
for blocks, name in v.data["generated_by"].items():
    print("   <%s> = %s" % (blocks, name))
print("dd* / d*d on the constant block:", v.data["dd*_over_d*d"])

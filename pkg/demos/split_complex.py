"""
Nonzero central charge
======================

On the Frobenius algebra F2 with lambda = 1 the complex splits: the maps
still square to zero and are exact, and V(Pi', k) is irreducible.
Same thing through the report layer the command line uses.
"""
from hpseudo.algebra import battery
from hpseudo.report import make_report, render
from hpseudo.suite import singular_section

spec = battery()["F2"]
sections = singular_section(spec, None, "pi:1", 1, 3)
report = make_report("singular", {"spec": spec.name, "lambda": 1}, sections)
print(render(report))

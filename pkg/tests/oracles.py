"""Brute-force oracles shared by the unit and acceptance tests.

Linear algebra here goes through sympy's DomainMatrix over QQ, independent
of hpseudo.linalg.
"""
from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def nullity(columns, nrows_keys=None):
    """Nullity of the matrix whose columns are sparse dicts of Fractions."""
    rows = {}
    for col, v in enumerate(columns):
        for key, c in v.items():
            rows.setdefault(key, {})[col] = QQ(c.numerator, c.denominator)
    if not columns:
        return 0
    if not rows:
        return len(columns)
    M = DomainMatrix({r: e for r, e in enumerate(rows.values())}, (len(rows), len(columns)), QQ)
    return len(columns) - M.rank()


def sing_graded_dims(V, D):
    """dim (sing ∩ fil^k)/(sing ∩ fil^{k-1}) from the dense system v'_I = 0, |I| >= 3."""
    cols = []
    for J, a in V.basis(D):
        cols.append({(I, key): c for I, w in V.left_coeffs(J, a).items() if sum(I) >= 3
                     for key, c in w.items()})
    dims = []
    for k in range(D + 1):
        keep = [c for (J, _), c in zip(V.basis(D), cols) if sum(J) <= k]
        dims.append(nullity(keep))
    return [dims[0]] + [dims[k] - dims[k - 1] for k in range(1, D + 1)]

#!/usr/bin/env python3
"""Tour the unitrade families and their structural properties.

Diagonals attain the minimum cardinality 2^(n/2) and are bipartite;
L*(n) is irreducible and non-bipartite with a constant-weight
translate; concatenation multiplies cardinalities and preserves
bipartiteness exactly when both factors are bipartite.
"""

from fractions import Fraction
from random import Random

from hampack.analysis import (
    average_distance,
    inner_radius,
    is_antipodal,
    is_bipartite_unitrade,
    oa_strength1_check,
    reducibility_certificate,
)
from hampack.constructions import concatenate, diagonal_unitrade, l_star
from hampack.core import Code, Space, Word

rng = Random(1)

zoo = {
    "diag(6)": diagonal_unitrade(6),
    "diag(8)": diagonal_unitrade(8),
    "L*(6)": l_star(6),
    "L*(8)": l_star(8),
    "L*(10)": l_star(10),
    "L*(6)x{10,01}": concatenate(l_star(6), Code.from_bits(Space(2, 2), [1, 2])),
    "diag(4)xdiag(4)": concatenate(diagonal_unitrade(4), diagonal_unitrade(4)),
}

print(f"{'name':>16} {'n':>3} {'size':>5} {'bip':>5} {'antip':>6} {'inner':>6} {'reducibility':>14}")
for name, t in zoo.items():
    n = t.space.n
    bip = is_bipartite_unitrade(t, extended=True).bipartite
    cert = reducibility_certificate(t)
    print(
        f"{name:>16} {n:>3} {len(t):>5} {str(bip):>5} {str(is_antipodal(t)):>6} "
        f"{inner_radius(t):>6} {cert.kind:>14}"
    )
    assert oa_strength1_check(t)
    v = Word(t.space, rng.randrange(1 << n))
    assert average_distance(t, v) == Fraction(n, 2)

print()
print("every family is a strength-1 orthogonal array, and the average")
print("distance from any word to the set is exactly n/2")

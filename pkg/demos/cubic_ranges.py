"""
Curves on a smooth cubic surface
================================

Classes are 7-tuples (delta, m1, ..., m6).  We look at the conjectured
non-reducedness range, the proven sub-ranges and a constructive existence
check by enumerating tuples.
"""

from spacecurves import (
    SevenTuple,
    bound_ordering,
    enumerate_tuples,
    existence_48,
    existence_witness,
    gap_integers,
    range_verdict,
    tuple_invariants,
)

print(tuple_invariants(SevenTuple.of(12, 4, 4, 4, 4, 4, 2)))

for d, g in [(14, 24), (14, 22), (36, 148), (57, 390)]:
    v = range_verdict(d, g)
    print((d, g), v.in_conjecture_range, sorted(c.value for c in v.proven_by), v.existence_48.value)

# every tuple with invariants (20, 45)
for t in enumerate_tuples(20, 45):
    print("  ", t)

# a witness for every existence pair of degree 20
d = 20
pairs = [g for g in range(d * d // 8 + 1) if existence_48(d, g).value == "Yes"]
print(d, {g: str(existence_witness(d, g)) for g in pairs})

# the inequalities behind the existence range, decided without floats
print(bound_ordering(14), gap_integers(14))

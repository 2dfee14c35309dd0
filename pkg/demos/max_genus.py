"""
Maximum genus G(d, s)
=====================

G(d, s) is the largest genus of a smooth connected space curve of degree d
lying on no surface of degree s - 1.
"""

from spacecurves import max_genus

for d, s in [(36, 5), (36, 6), (22, 5), (50, 8), (57, 8)]:
    print(f"G({d},{s}) =", max_genus(d, s))

# two values outside the proven range are only conjectured
print("G(22,6) =", max_genus(22, 6))
print("G(32,7) =", max_genus(32, 7))

# the table for s = 6, showing where each formula takes over
for d in range(24, 40):
    ans = max_genus(d, 6)
    print(f"  d={d:3d}  {ans.regime.value:16s} {ans.value}")

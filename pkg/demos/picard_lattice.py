"""
Divisor classes on a degree-s surface containing a line
========================================================

The Picard lattice has basis f1 (the line) and f2 = H - f1.  Every number
below is an exact integer.
"""

from spacecurves import DivisorClass, SurfaceContext, chi_surface, degree, genus, h1_ideal, h1_surface

ctx = SurfaceContext(4)
C = DivisorClass(12, 8)

# degree and genus via the intersection form and adjunction
print("d =", degree(C, ctx), " g =", genus(C, ctx), " t =", C.t(ctx))

# the hyperplane class and its Euler characteristic
H = ctx.hyperplane
print("H.H =", degree(H, ctx), " chi(O_S) =", ctx.chi_structure_sheaf)
print("chi(O_S(C)) =", chi_surface(C, ctx))

# h1 from the vanishing tables; outside their reach the answer is Unknown
print("h1(O_S(C))  =", h1_surface(C, ctx))
print("h1(I_C(4))  =", h1_ideal(C, 4, ctx))
print("h1(O_S)     =", h1_surface(DivisorClass(0, 0), ctx))

# sweep a small grid and count how often the tables decide h1(I_C(s))
for s in range(4, 8):
    ctx = SurfaceContext(s)
    known = sum(h1_ideal(DivisorClass(a, b), s, ctx).is_known for a in range(30) for b in range(30))
    print(f"s={s}: {known}/900 classes with a decided h1(I_C(s))")

"""Tour 2: colon, saturation, intersection, and dimension in quotient rings.

Ideals of A = P/I_A are carried as ideals of P that contain I_A, so the same
basis engine drives everything.
"""

from formcone import QQ, PolynomialRing, PresentedIdeal

R = PolynomialRing(QQ, ("x", "y"))
x, y = R.gens()

# (1) Plain polynomial ideals: base is empty.
I = PresentedIdeal(R, (), (x * x * y,))
sat, exponent = I.saturation(x)
print("(x^2*y) : x^infinity =", [str(g) for g in sat.groebner().generators],
      "  stabilizes at exponent", exponent)

meet = PresentedIdeal(R, (), (x * x, y)).intersect(PresentedIdeal(R, (), (x,)))
print("(x^2, y) cap (x) =", [str(g) for g in meet.groebner().generators])

# (2) Quotient-ring ideals: the base ideal is added automatically.
# In A = k[x,y]/(x^2, xy) the colon ((y^2) : y) picks up x because x*y dies.
base = (x * x, x * y)
col = PresentedIdeal(R, base, (y * y,)).colon(y)
print("in k[x,y]/(x^2,xy):  (y^2) : y contains x ->", col.contains(x))

# (3) Krull dimension straight from the leading ideal.
RS = PolynomialRing(QQ, ("X", "Y", "Z"))
X, Y, Z = RS.gens()
curve = PresentedIdeal(RS, (), (X**4 - Y * Z, Y**3 - X * Z, Z**2 - X**3 * Y**2))
print("dim of the monomial-curve ring:", curve.krull_dim())
cone = PresentedIdeal(RS, (), (X * Z, Y * Z, Y**4, Z * Z))
print("dim of its tangent cone:      ", cone.krull_dim())

# (4) Membership by normal form: Y^4 - X^5 vanishes on (t^4, t^5, t^11).
print("Y^4 - X^5 in the curve ideal:", curve.contains(Y**4 - X**5))

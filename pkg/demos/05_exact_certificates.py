"""Exact arithmetic: surds, Sturm counting, and the five-point certificate.

Floating point cannot decide rank questions at algebraic inner products or
count real roots with certainty; the exactnum layer does both over Q and
Q(sqrt(d)).  The showcase is the degree-16 polynomial satisfied by the
z-coordinate of the last point of a 5-point degree-4 design on S^2: it
factors into two even octics, each with the full eight real roots, which is
how the 5-point configurations are pinned down.
"""

from fractions import Fraction

from hidesign import QuadExt, fraction_free_rank, sturm_count_roots
from hidesign.designs import FIVE_POINT_Z_MINPOLY, FIVE_POINT_Z_OCTICS, FIVE_POINT_Z_SCALE
from hidesign.tightness import musin_reduce

print("=" * 72)
print("Quadratic surd arithmetic")
print("=" * 72)
a = QuadExt(1, 1, 33)
print(f"(1+√33)(1-√33) = {a * a.conjugate()}")
b2 = QuadExt.parse("(7+√33)/4")
print(f"b^2 = {b2};  b^2 - 1 = {b2 - 1};  (b^2)^-1 = {1 / b2}")
alpha = QuadExt.sqrt(Fraction(3, 8))
print(f"sqrt(3/8) = {alpha}  (exactly; squares back to {alpha * alpha})")
red = musin_reduce(alpha)
print(f"sphere reduction of +-{alpha}: {red.plus} only "
      f"(the second value {red.minus} is below -1, impossible)")
print(f"sign((2√6-3)/5) = {red.plus.sign()}  decided by comparing 24 against 9")

print()
print("=" * 72)
print("Sturm certificates")
print("=" * 72)
oct_a, oct_b = FIVE_POINT_Z_OCTICS
print(f"octic A = {oct_a}")
print(f"octic B = {oct_b}")
print(f"real roots of A (all of R):    {sturm_count_roots(oct_a)}")
print(f"real roots of B (all of R):    {sturm_count_roots(oct_b)}")
print(f"roots of A in (0, 1]:          {sturm_count_roots(oct_a, 0, 1)}")
print(f"roots of A in (1/2, 1]:        {sturm_count_roots(oct_a, Fraction(1, 2), 1)}")

print()
print("The product identity certifying the factorization, coefficient by")
print("coefficient (the scale 866761 = 931^2 clears the denominators):")
product = oct_a * oct_b
target = FIVE_POINT_Z_SCALE * FIVE_POINT_Z_MINPOLY
print(f"  A*B == 866761 * (monic degree-16 polynomial): {product == target}")
print(f"  leading coefficient of the product: {product.coeffs[-1]} = 931^2")
print(f"  constant term: {product.coeffs[0]} = 9 * 9")

print()
print("=" * 72)
print("Exact rank over Q(sqrt(d))")
print("=" * 72)
s2 = QuadExt(0, 1, 2)
m1 = [[1, s2], [s2, 2]]
m2 = [[1, s2], [s2, 3]]
print(f"rank [[1, √2], [√2, 2]] = {fraction_free_rank(m1)}  (rows proportional)")
print(f"rank [[1, √2], [√2, 3]] = {fraction_free_rank(m2)}")
gram = [[QuadExt(1) if i == j else red.plus for j in range(4)] for i in range(4)]
print(f"rank of the 4x4 Gram matrix at inner product {red.plus}: "
      f"{fraction_free_rank(gram)} > 3, so four such points cannot sit on S^2")

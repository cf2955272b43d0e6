"""Kernels and the Fisher-type bound.

The reproducing kernel Q_{n,t} of the degree-t harmonics on S^{n-1} is a
rescaled Gegenbauer polynomial with Q_{n,t}(1) = dim.  Its most negative
value c_{n,t} on [-1,1] controls how small a harmonic-index t-design can
be: |X| >= b_{n,t} = 1 + dim / c_{n,t}.
"""

import numpy as np

from hidesign import KernelSpec, bound_table, dim_harmonic, fisher_bound, q_eval, q_min, q_roots
from hidesign.bounds import table_text

print("=" * 72)
print("The kernel Q_{3,4} (dimension 3, degree 4)")
print("=" * 72)
spec = KernelSpec(3, 4)
print(f"dim of degree-4 harmonics on R^3 : {dim_harmonic(3, 4)}")
print(f"Q(1)  = {q_eval(spec, 1.0):.15g}   (equals the dimension)")
print(f"Q(0)  = {q_eval(spec, 0.0):.15g}   (equals 27/8 = {27 / 8})")
print(f"roots : {np.array2string(q_roots(spec), precision=10)}")
rep = q_min(spec)
print(f"minimum: -c with c = {rep.c:.15g} = 27/7, attained at x = {rep.argmin:.10f}")
print(f"argmin^2 = {rep.argmin ** 2:.15g} = 3/7")

print()
print("=" * 72)
print("Fisher-type bounds b_{n,t} = 1 + dim / c")
print("=" * 72)
for n, t in [(3, 4), (5, 4), (8, 10), (2, 20)]:
    r = fisher_bound(n, t)
    extra = f" (exact {r.closed_form})" if r.closed_form is not None else ""
    print(f"b_{{{n},{t}}} = {r.b:.10g}{extra}  integral: {r.integral}")

print()
print("Grid for n = 3..10, even t = 4..20, truncated display:")
print()
reports = bound_table(range(3, 11), range(4, 21, 2))
print(table_text(reports, truncate=2))

print()
print("Degree-4 column closed form: b_{n,4} = (n+1)(n+2)/6, an integer")
print("exactly when n is not divisible by 3:")
for n in range(3, 12):
    r = fisher_bound(n, 4)
    print(f"  n={n:2d}: b = {r.b:9.5f}  exact {str(r.closed_form):>6}  integral: {r.integral}")

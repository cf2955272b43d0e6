"""Large-degree behaviour of the bound b_{n,t}.

Mehler-Heine scaling turns the kernels into Bessel functions, so the limit
of b_{n,t} for fixed n is governed by the first zero j1 of J_{(n-1)/2} and
the value of F_n(z) = (z/2)^(-(n-3)/2) J_{(n-3)/2}(z) there.  Two numbers
are reported per dimension:

  limit            = 1 - 1/F_n(j1), the conventional tabulated value;
  limit_corrected  = 1 - 1/(Gamma((n-1)/2) F_n(j1)).

The binomial C(t+a, t) grows like t^a / Gamma(a+1), not t^a, and the
Gamma factor survives into the limit, so the sequence b_{n,t} converges to
limit_corrected.  The two agree exactly for n = 3 and n = 5 where the
Gamma factor is 1.
"""

from hidesign import asymptotic_bound, fisher_bound

print(f"{'n':>3} {'j1':>14} {'F_n(j1)':>15} {'limit':>14} {'corrected':>14} {'n(n+1)/2':>9}")
for n in range(3, 11):
    rep = asymptotic_bound(n)
    print(f"{n:>3} {rep.j1:>14.10f} {rep.Fvalue:>15.10f} "
          f"{rep.limit:>14.7f} {rep.limit_corrected:>14.7f} {n * (n + 1) // 2:>9}")

print()
print("Convergence of b_{n,t} to the corrected limit:")
print(f"{'n':>3} {'b(t=20)':>12} {'b(t=40)':>12} {'b(t=80)':>12} {'corrected':>12} {'rel err @80':>12}")
for n in range(3, 11):
    rep = asymptotic_bound(n)
    bs = [fisher_bound(n, t).b for t in (20, 40, 80)]
    rel = abs(bs[-1] - rep.limit_corrected) / rep.limit_corrected
    print(f"{n:>3} {bs[0]:>12.5f} {bs[1]:>12.5f} {bs[2]:>12.5f} "
          f"{rep.limit_corrected:>12.5f} {rel:>12.2e}")

print()
print("For n >= 8 the corrected limit already exceeds the absolute bound")
print("n(n+1)/2 on equiangular lines, so minimum-size designs cannot exist")
print("once the degree is large enough:")
for n in (8, 9, 10):
    rep = asymptotic_bound(n)
    cap = n * (n + 1) // 2
    verdict = "exceeds" if rep.limit_corrected > cap else "stays below"
    print(f"  n={n}: corrected limit {rep.limit_corrected:.4f} {verdict} {cap}")

print()
print("n = 4 is the slow-growth case: b_{4,t} climbs monotonically through")
print("the conventional value 5.0796 toward the corrected limit 5.6033:")
for t in (4, 10, 20, 40, 80, 160):
    print(f"  t={t:3d}: b_{{4,t}} = {fisher_bound(4, t).b:.7f}")

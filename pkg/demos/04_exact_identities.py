"""The identities as exact statements about truncated power series.

The coefficients v_k^+ and v_k^- are kept as formal variables of degree k and
everything is computed over the rationals modulo terms of degree > d.  There
are no tolerances here: a check passes only if the difference is exactly 0.
"""
from toeplitz_fredholm import formal

d = 4
print("D_2 at d=4:          ", formal.exact_toeplitz_det(2, d))
print("Z at d=4:            ", formal.szego_poly(d))
print("K(0,0) at d=4:       ", formal.exact_kernel_entry(0, 0, d))
print("det(1-K) on {1,...}: ", formal.exact_fredholm(1, d))

print()
for n in range(1, 5):
    reports = [formal.exact_verify(n, 8), formal.gessel_check(n, 8),
               formal.inclusion_exclusion_check(n, 8)]
    print(f"n={n}, d=8: " + ", ".join(f"{r.check} {r.status}" for r in reports))

for X in [(), (0,), (-1, 1), (3,)]:
    r = formal.correlation_check(X, 6)
    print(f"correlation X={X}: {r.status}  (lhs has {len(r.lhs.terms)} terms)")

# a wrong statement is caught: D_1 is not the Schur sum with lambda_1 <= 2
wrong = formal.schur_pair_sum(6, lambda lam: lam.first <= 2) - formal.exact_toeplitz_det(1, 6)
print("\nnegative control, nonzero difference:", wrong)

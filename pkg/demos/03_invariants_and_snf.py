"""Monomial types and the p-adic elementary divisors of line incidence.

For PG(2, 4) lists every basis monomial with its type tuples and invariant
exponent, sums them into the predicted multiset of p-adic valuations, and
confirms the prediction against an exact integer Smith-normal-form run on
the actual 21 x 21 line-point incidence matrix.

Run:  python3 demos/03_invariants_and_snf.py
"""

from collections import Counter

from unitals import (
    enum_basis_monomials,
    field_for_q,
    incidence_matrix,
    monomial_invariant_exponent,
    snf_valuation_multiset,
    theta_bound,
    type_of,
)

f = field_for_q(2)
p, t = f.p, f.t

print("=== basis monomials of PG(2, 4), p = 2 ===")
print("monomial     lambda   s        alpha")
mons = enum_basis_monomials(2, f)
for m in mons:
    alpha = monomial_invariant_exponent(m, p, t, r=2)
    if any(m):
        tt = type_of(m, p, t)
        print(f"{str(m):12} {str(tt.lam):8} {str(tt.s):8} {alpha}")
    else:
        print(f"{str(m):12} {'-':8} {'-':8} {alpha}  (constant)")

formula = Counter(monomial_invariant_exponent(m, p, t, 2) for m in mons)
print(f"\npredicted valuation multiset: {dict(sorted(formula.items()))}")

print("\n=== exact SNF of the 21 x 21 incidence matrix over Z_(2) ===")
A = incidence_matrix(2, 2, f)
vals = snf_valuation_multiset(A.to_dense(), p)
snf = Counter(vals)
print(f"computed multiset:            {dict(sorted(snf.items()))}")
print(f"multisets equal: {snf == formula}")
assert snf == formula

print("\nthe r-subspace divisibility exponent for a few shapes:")
for n, r, beta in ((3, 2, 1), (2, 2, 1), (2, 2, 2), (4, 3, 3)):
    print(f"  theta_bound(n={n}, r={r}, beta={beta}) = {theta_bound(n, r, beta)}")

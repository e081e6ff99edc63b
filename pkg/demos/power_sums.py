"""Tour of the generalized power-sum identity and its numeric corollaries.

Run as `python demos/power_sums.py`.  Everything prints exact values;
there is no floating point anywhere in the package.
"""

from girardlab import (
    good_word_sum,
    power_sum_direct,
    power_sum_lhs,
    power_sum_rhs,
    power_sum_via_bernoulli,
    power_sum_via_stirling,
    power_sum_via_stirling_prefactored,
    rhs_inner_sum,
    verify_binomial_transform,
)

# -- the symbolic identity ---------------------------------------------------
#
# The left side sums Pi_r([k]) y_{k+1} over k = 1..m, where Pi_r(P) is the
# product of the r "alphabet rows" sum_{i in P} x_i^(j).  The right side
# re-expresses it as a signed double sum over subsets U of [m+1].  A third
# route builds the same polynomial monomial by monomial from the good
# words x_{i_1}^(1) ... x_{i_r}^(r) y_t with all i_p < t.

m, r = 2, 2
lhs = power_sum_lhs(m, r)
print(f"m = {m}, r = {r}")
print("  lhs        =", lhs)
print("  rhs        =", power_sum_rhs(m, r))
print("  good words =", good_word_sum(m, r))
assert lhs == power_sum_rhs(m, r) == good_word_sum(m, r)

# The collapse mechanism: every subset U with |U| - 1 > r contributes the
# zero polynomial, because its inner signed sum telescopes away.
print("\ninner sum over U = {1, 2, 3} at r = 1:", rhs_inner_sum([1, 2, 3], 1))
print("inner sum over U = {1, 2, 3} at r = 2:", rhs_inner_sum([1, 2, 3], 2))

# -- the binomial-transform specialization ------------------------------------

c = [3, -1, 4, 1, -5]
print(f"\nbinomial transform check, alpha = 3, c = {c}:",
      verify_binomial_transform(3, c))

# -- numeric closed forms ------------------------------------------------------
#
# Two exact closed forms for power sums.  The Stirling form computes
# 1^m + ... + n^m; the Bernoulli form computes the sum *below* n.

m, n = 5, 10
print(f"\n1^{m} + ... + {n}^{m}:")
print("  directly        =", power_sum_direct(m, n))
print("  via Stirling    =", power_sum_via_stirling(m, n))
print("  via Bernoulli   =", power_sum_via_bernoulli(m, n) + n**m)

# A cautionary note: a commonly printed variant of the Stirling formula
# carries a spurious 1/(m+1) prefactor.  It is wrong already at m = n = 1:
wrong = power_sum_via_stirling_prefactored(1, 1)
print(f"\nprefactored variant at (1, 1) gives {wrong}, not "
      f"{power_sum_direct(1, 1)} -- kept only as a negative check")

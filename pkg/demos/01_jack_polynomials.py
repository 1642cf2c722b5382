"""
Jack polynomials and their Schur coefficients
=============================================

Build J_mu exactly, flip it to J~_mu = alpha^n J_mu(1/alpha), and read off
the Schur coefficients in the two binomial bases.
"""

from jacklab import a_coeffs, b_coeffs, jack_J, jack_tilde, schur_coeff
from jacklab.jack import schur_expansion
from jacklab.partitions import partitions_of

# integral form, monomial basis
print("J_(3) =", jack_J((3,)).as_symfun())
print("J_(2,1) =", jack_J((2, 1)).as_symfun())

# the transformed version and its Schur expansion
print("J~_(2) =", jack_tilde((2,)).as_symfun())
print("J~_(2) in s:", schur_expansion((2,)))

# every coefficient at n = 4, in both bases
n = 4
print(f"\n<J~_mu, s_lam> for n = {n}")
for mu in partitions_of(n):
    for lam in partitions_of(n):
        a = [int(x) for x in a_coeffs(mu, lam)]
        b = [int(x) for x in b_coeffs(mu, lam)]
        print(f"  mu={mu!s:14} lam={lam!s:14} a={a}  b={b}  poly={schur_coeff(mu, lam)}")

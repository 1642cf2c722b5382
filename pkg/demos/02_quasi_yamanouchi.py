"""
Quasi-Yamanouchi tableaux and the row case
==========================================

Destandardization sends each standard tableau to a quasi-Yamanouchi one.
For mu = (n) the binomial coefficients a_k count those tableaux.
"""

from math import factorial

from jacklab import a_coeffs
from jacklab.partitions import conjugate, partitions_of
from jacklab.tableaux import descent_set, destandardize, enumerate_qyt, enumerate_syt, qyt_distribution

shape = (2, 2, 1)
print(f"quasi-Yamanouchi tableaux of shape {shape}:")
for t in enumerate_qyt(shape):
    print(t, "\n")
print("count by max entry:", {m: c for m, c in enumerate(qyt_distribution(shape)) if c})

# destandardization, tableau by tableau
for t in enumerate_syt(shape):
    print(f"Des={sorted(descent_set(t))}  ->  max entry {destandardize(t).max_entry()}")

# a_k((n), lam) = n! * QYT_{=k+1}(lam')
n = 5
for lam in partitions_of(n):
    dist = qyt_distribution(conjugate(lam))
    qyt = [factorial(n) * (dist[k + 1] if k + 1 < len(dist) else 0) for k in range(n + 1)]
    a = [int(x) for x in a_coeffs((n,), lam)]
    print(f"{lam!s:16} a={a}  n!*QYT={qyt}  {'ok' if a == qyt else 'MISMATCH'}")

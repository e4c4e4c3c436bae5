"""
Graded decomposition matrices in small degree
=============================================

Compute the matrix for e = 2 and d = 3, 4, 5 and print it with row and
column labels.  Rows are all partitions of d and columns the e-restricted
ones, both in decreasing lexicographic order.
"""

from graded_decomp import decomposition_matrix

for d in (3, 4, 5):
    M = decomposition_matrix(d, 2)
    print(f"e = 2, d = {d}")
    print(M.to_text(labels=True))
    print()

# The table m_lam(D(mu)) is produced alongside; its diagonal is r_lam.
M = decomposition_matrix(4, 2)
print(M.mtable_text())

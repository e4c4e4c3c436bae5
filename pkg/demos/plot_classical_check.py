"""
Specialising at q = 1
=====================

Setting q = 1 gives ungraded decomposition numbers.  Summing them against
the dimensions of the simple modules must recover the number of standard
tableaux of each shape.
"""

from graded_decomp import decomposition_matrix, reconstruct_irreducible_characters, specht_character

e, d = 3, 6
M = decomposition_matrix(d, e)
dims = {lam: ch.dimension() for lam, ch in reconstruct_irreducible_characters(M).items()}

print(M.to_text(at_one=True, labels=True))
print()
for mu in M.rows:
    total = sum(M.entry(mu, lam).at_one() * dims[lam] for lam in M.cols)
    print(f"{mu.compact():>10}  {total:4d}  {specht_character(mu, e).dimension():4d}")

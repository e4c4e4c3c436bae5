"""
Graded characters of Specht and simple modules
==============================================

A graded Specht character is a sum over standard tableaux of q^deg(T)
times the residue sequence of T.  Subtracting lower columns of the
decomposition matrix leaves the characters of the simple modules.
"""

from graded_decomp import (
    Partition,
    decomposition_matrix,
    ladder_weight,
    r_lambda,
    reconstruct_irreducible_characters,
    specht_character,
)

e = 2
mu = Partition((3, 1))
for seq, poly in sorted(specht_character(mu, e).terms.items()):
    print(seq, poly)

# simple characters for d = 4
M = decomposition_matrix(4, e)
chars = reconstruct_irreducible_characters(M)
for lam, ch in chars.items():
    j = ladder_weight(lam, e)
    print(f"D{lam.compact()}: dim {ch.dimension()}, j = {j}, coefficient {ch[j]} (r = {r_lambda(lam, e)})")

"""
Canonical basis columns and the first approximation
===================================================

G(lam) is a column of the decomposition matrix read as a vector in the
Fock space.  r_lam * A(lam) collects the multiplicities of the ladder
weight of lam in every Specht character, and expands in the canonical
basis with bar-invariant coefficients.
"""

from graded_decomp import (
    Partition,
    b_coefficients,
    canonical_basis_column,
    decomposition_matrix,
    first_approximation,
)

e, d = 2, 5
M = decomposition_matrix(d, e)
lam = Partition((2, 2, 1))

print("G    =", canonical_basis_column(lam, M))
print("r*A  =", first_approximation(lam, e))

# r*A(lam) = sum_nu b_nu G(nu)
for nu, b in b_coefficients(lam, M).items():
    if b:
        print(f"  b{nu.compact()} = {b}")

print(canonical_basis_column(lam, M).to_latex(f"G{lam.compact()}"))

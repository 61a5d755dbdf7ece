"""Symplectic, odd orthogonal and even orthogonal kernels.

The type BC kernel carries a parameter beta: beta = 0 gives the symplectic
kernel, beta = 1 the odd orthogonal one.  Symmetrizing the x variables with
pi_omega turns each key expansion into a classical Littlewood identity.
"""
from nscauchy import KernelSpec, kernel_series, theorem6_rhs
from nscauchy.kernels import check_lemma4, check_lemma5, phi_words, symmetric_corollaries

N, DEG = 2, 3

bc = kernel_series(KernelSpec("BC", N), DEG)
print("Omega^BC, degree-1 slice:", bc.slices[1].pretty())
print("beta=0 gives Omega^C:", bc.substitute("beta", 0) == kernel_series(KernelSpec("C", N), DEG))
print("beta=1 gives Omega^B:", bc.substitute("beta", 1) == kernel_series(KernelSpec("B", N), DEG))

print("\nPhi^BC word on y:", " ".join(op.token for op in phi_words("BC", N)))
print("Omega^A * Phi^BC == Omega^BC:", check_lemma4(N, DEG).passed)
print("Phi^D word on y:", " ".join(op.token for op in phi_words("D", 3)))
print("Omega^A_2 * Phi_3^D == Omega^D (x3 = 0):", check_lemma5(3, DEG).passed)

print("\nKey expansion of Omega^BC matches the product:", theorem6_rhs("BC", N, DEG) == bc)

report = symmetric_corollaries(N, DEG)
print(f"\nCauchy/Littlewood identities after pi_omega: {report.status} ({report.checks} checks)")

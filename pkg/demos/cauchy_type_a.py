"""The non-symmetric Cauchy kernel in two variables.

Expands prod_{i+j<=3} (1 - x_i y_j)^-1 to x-degree 3, rebuilds it from the
dominant monomials with the Xi operator, and reads off the pairing between
hatted keys in x and Demazure characters in y.
"""
from nscauchy import KernelSpec, kernel_series, key, theorem6_rhs
from nscauchy.kernels import dominant_series, xi_operator

N, DEG = 2, 3

omega_a = kernel_series(KernelSpec("A", N), DEG)
print("Omega^A up to x-degree", DEG)
for d, s in enumerate(omega_a.slices):
    print(f"  [{d}] {s.pretty()}")

# only x^lambda y^lambda with lambda a partition survive in the dominant series
dom = dominant_series(N, DEG)
xi = xi_operator(N)
print("\nXi_2 words:", [" ".join(str(op) for op in w) for w in xi.direct])
print("dominant series * Xi_2 == Omega^A:", xi.apply_factored(dom) == omega_a)

print("\nThe kernel is diagonal in keys: sum of K^_v(x) K_{v omega}(y)")
for v in [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]:
    hx = key("A", v, hatted=True)
    ky = key("A", tuple(reversed(v)), block="y")
    print(f"  v={v}:  ({hx.pretty()}) * ({ky.pretty()})")
print("equal to the kernel:", theorem6_rhs("A", N, DEG) == omega_a)

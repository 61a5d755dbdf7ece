"""Scalar products that make the two key families dual.

Prints small Gram matrices, shows the sign carried by the longest element
in the raw weight, and contrasts with Weyl's symmetric scalar product,
for which Schur functions are orthonormal but key polynomials are not.
"""
from nscauchy import key, orthogonality_matrix, scalar, schur_oracle, standard_varset
from nscauchy.scalarprod import weyl_symmetric_scalar


def show(gtype, n, bound):
    gram = orthogonality_matrix(gtype, n, bound)
    labels = [",".join(map(str, u)) for u in gram.cols]
    print(f"\n(K_v, K^_u) for type {gtype}, n={n}, |v| <= {bound}")
    print("v \\ u".ljust(10) + " ".join(s.rjust(6) for s in labels))
    for v, row in zip(gram.rows, gram.entries):
        cells = ["." if e is None else (e.pretty() if e.involves("beta") else str(e.constant_value())) for e in row]
        print(",".join(map(str, v)).ljust(10) + " ".join(c.rjust(6) for c in cells))


show("C", 1, 2)
show("BC", 1, 2)
show("A", 2, 2)  # K_v pairs with K^_{v omega}

vs = standard_varset(3)
print("\nraw CT(x^rho Delta^C) at n=3:", scalar("C", vs.one(), vs.one(), normalized=False).pretty())
print("normalized (1, 1)^C at n=3:  ", scalar("C", vs.one(), vs.one()).pretty())

s2, s11 = schur_oracle((2,), 2), schur_oracle((1, 1), 2)
print("\nWeyl's product: (s_2, s_2) =", weyl_symmetric_scalar(s2, s2).pretty(),
      " (s_2, s_11) =", weyl_symmetric_scalar(s2, s11).pretty())
k, kh = key("A", (0, 1)), key("A", (0, 1), hatted=True)
print("but (K_01, K^_01) =", weyl_symmetric_scalar(k, kh).pretty(), "under it")

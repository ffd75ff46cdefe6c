"""Cones, duality, rays, and Hilbert bases.

Walks through the polyhedral side of the toolkit on the cone whose
semigroup ring is F[x, xz, xz^2, y, yz, yz^2]: the dual cone generated by
(1,0,0), (0,1,0), (1,0,2), (0,1,2) and its Hilbert basis of six points.
"""

from torica import Cone, IntMatrix, hilbert_basis, kernel_basis, smith_normal_form


def main():
    # The semigroup of exponent vectors (a, b, c) of monomials x^a y^b z^c
    # appearing in F[x, xz, xz^2, y, yz, yz^2] spans this cone.
    sigma_dual = Cone(3, [(1, 0, 0), (0, 1, 0), (1, 0, 2), (0, 1, 2)])
    print("dual cone generators:", list(sigma_dual.generators))
    print("dual cone rays:      ", list(sigma_dual.rays()))

    sigma = sigma_dual.dual()
    print("\nprimal cone rays:", list(sigma.rays()))
    print("biduality holds: ", set(sigma.dual().rays()) == set(sigma_dual.rays()))

    semigroup = hilbert_basis(sigma_dual)
    print("\nHilbert basis of the dual cone (6 irreducible monomials):")
    names = {
        (1, 0, 0): "x", (1, 0, 1): "xz", (1, 0, 2): "xz^2",
        (0, 1, 0): "y", (0, 1, 1): "yz", (0, 1, 2): "yz^2",
    }
    for g in sorted(semigroup.hilbert_generators):
        print("   ", g, "=", names[g])

    # Membership is a finite set of ray pairings, so it is cheap and exact.
    print("\n(2, 1, 3) in the semigroup cone:", sigma_dual.contains((2, 1, 3)))
    print("(1, 0, 3) in the semigroup cone:", sigma_dual.contains((1, 0, 3)))

    # The lattice of relations among the six generators comes from the
    # integer kernel of the 3 x 6 exponent matrix.
    phi = IntMatrix.from_columns(
        [(1, 0, 1), (1, 0, 2), (1, 0, 0), (0, 1, 1), (0, 1, 2), (0, 1, 0)]
    )
    ker = kernel_basis(phi)
    print("\nkernel basis of the exponent matrix (columns):")
    for col in ker.columns():
        print("   ", col)

    snf = smith_normal_form(phi)
    print("invariant factors of the exponent matrix:", snf.invariant_factors)


if __name__ == "__main__":
    main()

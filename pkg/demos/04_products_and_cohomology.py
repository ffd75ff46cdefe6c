"""Products, the 2^k multiplicity law, and cohomology on (P^1)^n.

Products of the surface with itself and with affine lines multiply the
half-canonical generator counts, giving the 2^k table. The vanishing
hypothesis behind that argument is checked by exact line-bundle
cohomology on products of projective lines.
"""

from torica import (
    canonical_class,
    check_danilov_hypothesis,
    danilov_violations,
    h_dim_p1,
    h_dim_product,
    half_canonical,
    module_generators,
    multiplicity,
    steinberg_multiplicity,
    steinberg_product_variety,
)


def main():
    print("multiplicity table, k surface factors and s affine lines:")
    for k, s in ((0, 0), (1, 0), (1, 2), (2, 0), (3, 1)):
        print("    k={} s={}:  {}".format(k, s, steinberg_multiplicity(k, s)))

    w = steinberg_product_variety(2, 1)
    cg = w.class_group()
    print("\nproduct of two surfaces and a line:")
    print("    class group: free rank", cg.free_rank, "torsion", list(cg.torsion))
    print("    canonical class:", list(canonical_class(w).free))
    half = half_canonical(w)
    print("    half-canonical class:", list(half.free))
    gens = module_generators(w, cg.representative(half)).generators
    print("    half-canonical module generators:", len(gens))
    print("    multiplicity:", multiplicity(w))

    print("\ncohomology of O(d) on P^1: h^0 and h^1 for d in -3..3")
    for d in range(-3, 4):
        print("    d={:>2}: h0={} h1={}".format(d, h_dim_p1(0, d), h_dim_p1(1, d)))

    print("\nKunneth on P^1 x P^1: h^i of O(2) x O(1)")
    for i in range(3):
        print("    h^{} = {}".format(i, h_dim_product(i, (2, 1))))

    print("\nvanishing hypothesis for the (2, 1) family, twists 0..50:")
    print("    holds:", check_danilov_hypothesis([(2, 1)], i_max=50))
    print("    violations:", danilov_violations([(2, 1)], i_max=50))

    # A family that fails the hypothesis, for contrast.
    print("\nsame check for the (-3, 1) family:")
    bad = danilov_violations([(-3, 1)], i_max=3)
    print("    holds:", check_danilov_hypothesis([(-3, 1)], i_max=3))
    print("    first violations:", bad[:3])


if __name__ == "__main__":
    main()

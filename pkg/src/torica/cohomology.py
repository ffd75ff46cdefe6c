"""Line bundle cohomology on products of projective lines.

Everything here is the closed form for P^1 pushed through the Kunneth
formula: on one factor h^0(O(d)) = max(0, d+1), h^1(O(d)) = max(0, -d-1),
and nothing above degree one. A bundle on a product is a tuple of factor
degrees. The descent hypothesis checker asks for vanishing of H^1 and H^2
of all non-negative twists of each listed bundle.
"""

from itertools import product as iproduct


class LineBundleOnP1Product:
    """External tensor product O(d_1) x ... x O(d_n) on (P^1)^n."""

    __slots__ = ("factor_degrees",)

    def __init__(self, factor_degrees):
        self.factor_degrees = tuple(int(d) for d in factor_degrees)

    def twist(self, i):
        return LineBundleOnP1Product(tuple(i * d for d in self.factor_degrees))

    def __eq__(self, other):
        return (
            isinstance(other, LineBundleOnP1Product)
            and self.factor_degrees == other.factor_degrees
        )

    def __hash__(self):
        return hash(self.factor_degrees)

    def __repr__(self):
        return f"LineBundleOnP1Product({list(self.factor_degrees)})"

    def to_json(self):
        return {"factor_degrees": list(self.factor_degrees)}


def _degrees(bundle):
    if isinstance(bundle, LineBundleOnP1Product):
        return bundle.factor_degrees
    return tuple(int(d) for d in bundle)


def h_dim_p1(d, deg) -> int:
    """dim H^d(P^1, O(deg))."""
    d = int(d)
    if d < 0:
        raise ValueError("cohomological degree must be non-negative")
    deg = int(deg)
    if d == 0:
        return max(0, deg + 1)
    if d == 1:
        return max(0, -deg - 1)
    return 0


def h_dim_product(d, bundle) -> int:
    """dim H^d of O(d_1) x ... x O(d_n) on (P^1)^n, by the Kunneth formula."""
    d = int(d)
    if d < 0:
        raise ValueError("cohomological degree must be non-negative")
    degrees = _degrees(bundle)
    if not degrees:
        return 1 if d == 0 else 0
    total = 0
    # each factor only contributes in degrees 0 and 1
    for split in iproduct((0, 1), repeat=len(degrees)):
        if sum(split) != d:
            continue
        term = 1
        for e, deg in zip(split, degrees):
            term *= h_dim_p1(e, deg)
            if term == 0:
                break
        total += term
    return total


def danilov_violations(factors, i_max=50):
    """All (factor_index, d, i) with H^d of the i-th twist non-zero, d in {1,2}."""
    out = []
    for idx, bundle in enumerate(factors):
        degrees = _degrees(bundle)
        for i in range(0, int(i_max) + 1):
            twisted = tuple(i * deg for deg in degrees)
            for d in (1, 2):
                if h_dim_product(d, twisted) != 0:
                    out.append({"factor": idx, "d": d, "i": i})
    return out


def check_danilov_hypothesis(factors, i_max=50) -> bool:
    """True iff H^1 and H^2 of every twist L^i, 0 <= i <= i_max, vanish.

    For bundles with all factor degrees >= 0 the closed form makes the
    conclusion independent of i_max: every twist keeps all degrees >= 0,
    so every h^1 factor max(0, -deg-1) is zero already.
    """
    return not danilov_violations(factors, i_max)

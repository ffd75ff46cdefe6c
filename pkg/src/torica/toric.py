"""Monomial maps and their lattice ideals.

Builds toric ideals as saturated lattice ideals from an integer matrix
whose columns record the monomial substitution, and packages the specific
rings used across the library: the base surface ring on six variables
(A,B,C,X,Y,Z with A=xz, B=xz^2, C=x, X=yz, Y=yz^2, Z=y) and tensor-power
products of it with polynomial variables.
"""

from __future__ import annotations

from .cone import Cone, Semigroup
from .errors import InfiniteCokernel
from .polyring import Ideal, PolyRing, saturate
from .zlinalg import IntMatrix, kernel_basis, rank

PHI_COLUMNS = ((1, 0, 1), (1, 0, 2), (1, 0, 0), (0, 1, 1), (0, 1, 2), (0, 1, 0))
STEINBERG_VARIABLES = ("A", "B", "C", "X", "Y", "Z")
STEINBERG_SUBSTITUTION = dict(zip(STEINBERG_VARIABLES, PHI_COLUMNS))


class MonomialMap:
    """Z^h -> Z^d, columns giving the lattice point of each variable."""

    __slots__ = ("phi", "variable_names")

    def __init__(self, phi: IntMatrix, variable_names):
        names = tuple(str(v) for v in variable_names)
        if phi.cols != len(names):
            raise ValueError("one variable name per column required")
        self.phi = phi
        self.variable_names = names

    def __repr__(self):
        return f"MonomialMap(vars={list(self.variable_names)}, phi={self.phi!r})"

    def to_json(self):
        return {"phi": self.phi.to_json(), "vars": list(self.variable_names)}

    @classmethod
    def from_json(cls, data):
        return cls(IntMatrix.from_json(data["phi"]), data["vars"])


class ToricPresentation:
    """A semigroup ring presented as F[variables]/lattice ideal."""

    __slots__ = ("map", "ideal", "semigroup", "_lift_cone", "_lift_weight", "_lift_memo")

    def __init__(self, map: MonomialMap, ideal: Ideal, semigroup: Semigroup):
        self.map = map
        self.ideal = ideal
        self.semigroup = semigroup
        self._lift_cone = None
        self._lift_weight = None
        self._lift_memo = None

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    def __repr__(self):
        return (
            f"ToricPresentation(vars={list(self.map.variable_names)}, "
            f"dim={self.semigroup.ambient_dim})"
        )

    def _lift_setup(self):
        if self._lift_cone is None:
            d = self.map.phi.rows
            cone = Cone(d, self.map.phi.columns())
            if not cone.is_strongly_convex():
                raise ValueError("lattice-point lifting needs a pointed column cone")
            duals = cone.dual_generators()
            self._lift_cone = cone
            self._lift_weight = tuple(sum(n[i] for n in duals) for i in range(d))
            self._lift_memo = {}
        return self._lift_cone, self._lift_weight

    def lift_lattice_point(self, m):
        """Exponent tuple e with phi @ e == m, or None if m is not in the semigroup."""
        cone, weight = self._lift_setup()
        m = tuple(int(x) for x in m)
        cols = self.map.phi.columns()
        memo = self._lift_memo

        def grade(v):
            return sum(w * x for w, x in zip(weight, v))

        def search(v):
            if v in memo:
                return memo[v]
            if all(x == 0 for x in v):
                return ()
            result = None
            if cone.contains(v):
                gv = grade(v)
                for idx, col in enumerate(cols):
                    if any(col) and grade(col) <= gv:
                        tail = search(tuple(a - b for a, b in zip(v, col)))
                        if tail is not None:
                            result = (idx,) + tail
                            break
            memo[v] = result
            return result

        picks = search(m)
        if picks is None:
            return None
        exps = [0] * len(cols)
        for idx in picks:
            exps[idx] += 1
        return tuple(exps)

    def monomial_for(self, m):
        """The ring monomial representing the character at lattice point m."""
        exps = self.lift_lattice_point(m)
        if exps is None:
            raise ValueError(f"{m!r} is not in the semigroup")
        return self.ring.monomial(exps)


def toric_ideal(map: MonomialMap, char) -> ToricPresentation:
    """Presentation of the semigroup ring of the columns of `map`.

    The lattice ideal of an HNF kernel basis is saturated at the product
    of all variables, which removes the dependence on the choice of
    kernel basis.
    """
    phi = map.phi
    if rank(phi) < phi.rows:
        raise InfiniteCokernel("the column lattice has infinite cokernel")
    ring = PolyRing(char, map.variable_names)
    ker = kernel_basis(phi)
    gens = [ring.binomial_from_vector(col) for col in ker.columns()]
    if gens:
        lattice_ideal = Ideal(ring, gens)
        all_vars = ring.monomial((1,) * ring.nvars)
        ideal = saturate(lattice_ideal, all_vars)
    else:
        ideal = Ideal(ring, [])
    seen = []
    for col in phi.columns():
        if col not in seen:
            seen.append(col)
    semigroup = Semigroup(phi.rows, seen)
    return ToricPresentation(map, ideal, semigroup)


def steinberg_monomial_map() -> MonomialMap:
    return MonomialMap(IntMatrix.from_columns(PHI_COLUMNS), STEINBERG_VARIABLES)


def steinberg_ring_mod_l(char) -> ToricPresentation:
    """The six-variable surface ring at an odd prime."""
    if char == 2:
        raise ValueError("the surface ring is only considered at odd primes")
    return toric_ideal(steinberg_monomial_map(), char)


def steinberg_minors_ideal(ring: PolyRing) -> Ideal:
    """The 2x2-minors ideal of [[A,B,X,Y],[C,A,Z,X]] in a compatible ring."""
    top = ("A", "B", "X", "Y")
    bottom = ("C", "A", "Z", "X")
    gens = []
    for i in range(4):
        for j in range(i + 1, 4):
            a = ring.variable(top[i]) * ring.variable(bottom[j])
            b = ring.variable(top[j]) * ring.variable(bottom[i])
            gens.append(a - b)
    return Ideal(ring, gens)


def product_ring(k, s, char) -> ToricPresentation:
    """Presentation of the k-fold tensor power with s polynomial variables.

    Variables are A..Z per surface factor (suffixed 1..k when k >= 2) and
    x1..xs for the polynomial part; the ideal is the disjoint sum of the
    factor ideals, which presents the tensor product over the ground field.
    """
    k, s = int(k), int(s)
    if k < 0 or s < 0 or k + s < 1:
        raise ValueError("need k >= 0, s >= 0, k + s >= 1")
    if k == 1 and s == 0:
        return steinberg_ring_mod_l(char)

    names = []
    for f in range(k):
        suffix = str(f + 1) if k >= 2 else ""
        names.extend(name + suffix for name in STEINBERG_VARIABLES)
    names.extend(f"x{j + 1}" for j in range(s))

    dim = 3 * k + s
    columns = []
    for f in range(k):
        for col in PHI_COLUMNS:
            embedded = [0] * dim
            embedded[3 * f : 3 * f + 3] = list(col)
            columns.append(tuple(embedded))
    for j in range(s):
        embedded = [0] * dim
        embedded[3 * k + j] = 1
        columns.append(tuple(embedded))
    map = MonomialMap(IntMatrix.from_columns(columns, rows=dim), names)

    ring = PolyRing(char, names)
    gens = []
    if k:
        base = steinberg_ring_mod_l(char)
        base_gens = base.ideal.generators
        for f in range(k):
            offset = 6 * f
            for g in base_gens:
                shifted = {}
                for exps, coeff in g.terms.items():
                    e = [0] * len(names)
                    e[offset : offset + 6] = list(exps)
                    shifted[tuple(e)] = coeff
                gens.append(ring.polynomial(shifted))
    ideal = Ideal(ring, gens)
    semigroup = Semigroup(dim, columns)
    return ToricPresentation(map, ideal, semigroup)

"""Torus-invariant divisors and divisor class groups on affine toric varieties.

A variety is a full-dimensional strongly convex cone with its rays, dual
semigroup, and (optionally) a ring presentation. Divisors are integer
coefficient vectors over the lex-ordered rays. Class groups come from the
Smith normal form of the ray-pairing matrix; product varieties use
concatenated per-factor coordinates so that factor classes stay visible.

Divisorial modules O(D) are handled through their lattice regions
{m : <m, u_rho> >= -a_rho}; minimal generator sets are found by exact
enumeration below a certified grade bound.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product as iproduct
from math import ceil, floor

from .cone import Cone
from .errors import NonUnique, NoSolution, VarietyMismatch
from .polyring import module_regular_sequence
from .toric import PHI_COLUMNS, product_ring, steinberg_ring_mod_l
from .zlinalg import IntMatrix, invert_unimodular, smith_normal_form, solve_rational


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


class ToricVariety:
    """Normal affine toric variety: a pointed full-dimensional cone plus caches."""

    __slots__ = (
        "cone",
        "rays",
        "semigroup",
        "presentation",
        "factors",
        "name",
        "dual_cone",
        "_ray_split",
        "_offsets",
        "_class_group",
    )

    def __init__(self, cone: Cone, presentation=None, factors=None, name=None):
        if not cone.is_strongly_convex():
            raise ValueError("a normal affine toric variety needs a strongly convex cone")
        if cone.dim() != cone.ambient_dim:
            raise ValueError("cone must be full-dimensional")
        self.cone = cone
        self.rays = cone.rays()
        self.dual_cone = cone.dual()
        self.presentation = presentation
        self.name = name or f"X({cone.ambient_dim}d)"
        self.factors = tuple(factors) if factors else (self,)
        self._class_group = None

        if len(self.factors) > 1:
            offsets = []
            at = 0
            for f in self.factors:
                offsets.append(at)
                at += f.cone.ambient_dim
            if at != cone.ambient_dim:
                raise ValueError("factor dimensions do not sum to the ambient dimension")
            self._offsets = tuple(offsets)
            split = []
            for u in self.rays:
                hit = None
                for pos, f in enumerate(self.factors):
                    lo = offsets[pos]
                    hi = lo + f.cone.ambient_dim
                    block = u[lo:hi]
                    if any(block):
                        if hit is not None or any(u[:lo]) or any(u[hi:]):
                            raise ValueError("ray is not embedded from a single factor")
                        hit = (pos, f.rays.index(block))
                split.append(hit)
            self._ray_split = tuple(split)
            gens = []
            for pos, f in enumerate(self.factors):
                lo = self._offsets[pos]
                for h in f.semigroup.hilbert_generators:
                    v = [0] * cone.ambient_dim
                    v[lo : lo + f.cone.ambient_dim] = list(h)
                    gens.append(tuple(v))
            from .cone import Semigroup

            self.semigroup = Semigroup(cone.ambient_dim, sorted(gens))
        else:
            self._offsets = (0,)
            self._ray_split = tuple((0, i) for i in range(len(self.rays)))
            self.semigroup = self.dual_cone.hilbert_basis()

    def __repr__(self):
        return f"ToricVariety({self.name}, rays={len(self.rays)})"

    def is_product(self):
        return len(self.factors) > 1

    def divisor(self, coeffs) -> "TorusDivisor":
        return TorusDivisor(self, coeffs)

    def zero_divisor(self) -> "TorusDivisor":
        return TorusDivisor(self, (0,) * len(self.rays))

    def class_group(self) -> "ClassGroup":
        if self._class_group is None:
            self._class_group = ClassGroup(self)
        return self._class_group

    def split_divisor(self, d: "TorusDivisor"):
        """Per-factor divisors of a divisor on a product variety."""
        parts = [[0] * len(f.rays) for f in self.factors]
        for stored_idx, (pos, fray) in enumerate(self._ray_split):
            parts[pos][fray] = d.coeffs[stored_idx]
        return [TorusDivisor(f, tuple(c)) for f, c in zip(self.factors, parts)]

    def join_coeffs(self, factor_coeff_lists):
        """Inverse of split_divisor, back to the stored ray order."""
        coeffs = [0] * len(self.rays)
        for stored_idx, (pos, fray) in enumerate(self._ray_split):
            coeffs[stored_idx] = factor_coeff_lists[pos][fray]
        return tuple(coeffs)

    def semigroup_contains(self, v) -> bool:
        return self.dual_cone.contains(v)


def product(v1: ToricVariety, v2: ToricVariety, presentation=None, name=None) -> ToricVariety:
    cone = v1.cone.product(v2.cone)
    name = name or f"{v1.name} x {v2.name}"
    return ToricVariety(
        cone,
        presentation=presentation,
        factors=v1.factors + v2.factors,
        name=name,
    )


def steinberg_variety(field=101) -> ToricVariety:
    """The base surface cone with its six-variable presentation."""
    cone = Cone(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 2, -1)])
    return ToricVariety(cone, presentation=steinberg_ring_mod_l(field), name="S")


def a1_variety() -> ToricVariety:
    """The quadric cone surface (one A1 singular point)."""
    return ToricVariety(Cone(2, [(1, 0), (1, 2)]), name="A1")


def affine_line_variety() -> ToricVariety:
    return ToricVariety(Cone(1, [(1,)]), name="A^1")


def affine_space_variety(n) -> ToricVariety:
    n = int(n)
    if n < 1:
        raise ValueError("need dimension >= 1")
    gens = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return ToricVariety(Cone(n, gens), name=f"A^{n}")


def steinberg_product_variety(k, s, field=101) -> ToricVariety:
    """S^k x A^s with the matching product ring presentation."""
    k, s = int(k), int(s)
    if k < 0 or s < 0 or k + s < 1:
        raise ValueError("need k >= 0, s >= 0, k + s >= 1")
    factors = [steinberg_variety(field) for _ in range(k)]
    factors += [affine_line_variety() for _ in range(s)]
    if len(factors) == 1:
        return factors[0]
    variety = factors[0]
    for f in factors[1:]:
        variety = product(variety, f)
    variety.presentation = product_ring(k, s, field)
    variety.name = f"S^{k} x A^{s}"
    return variety


class TorusDivisor:
    """Integer combination of the ray divisors, in stored (lex) ray order."""

    __slots__ = ("variety", "coeffs")

    def __init__(self, variety: ToricVariety, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != len(variety.rays):
            raise ValueError("one coefficient per ray required")
        self.variety = variety
        self.coeffs = coeffs

    def _check(self, other):
        if self.variety is not other.variety:
            raise VarietyMismatch("divisors on different varieties")

    def __add__(self, other):
        self._check(other)
        return TorusDivisor(self.variety, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return TorusDivisor(self.variety, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TorusDivisor(self.variety, tuple(-a for a in self.coeffs))

    def __mul__(self, n):
        return TorusDivisor(self.variety, tuple(int(n) * a for a in self.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, TorusDivisor)
            and self.variety is other.variety
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.variety), self.coeffs))

    def __repr__(self):
        return f"TorusDivisor({list(self.coeffs)})"

    def divisor_class(self) -> "DivisorClass":
        return self.variety.class_group().project(self)

    def to_json(self):
        return {"coeffs": list(self.coeffs)}


class DivisorClass:
    """Element of Cl in normalized coordinates: free vector + torsion residues."""

    __slots__ = ("variety", "free", "torsion")

    def __init__(self, variety: ToricVariety, free, torsion=()):
        cg = variety.class_group()
        free = tuple(int(x) for x in free)
        torsion = tuple(int(x) for x in torsion)
        if len(free) != cg.free_rank or len(torsion) != len(cg.torsion):
            raise ValueError("coordinate shape does not match the class group")
        self.variety = variety
        self.free = free
        self.torsion = tuple(r % m for r, m in zip(torsion, cg.torsion))

    def _check(self, other):
        if self.variety is not other.variety:
            raise VarietyMismatch("classes on different varieties")

    def __add__(self, other):
        self._check(other)
        return DivisorClass(
            self.variety,
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.torsion, other.torsion)),
        )

    def __neg__(self):
        return DivisorClass(
            self.variety,
            tuple(-a for a in self.free),
            tuple(-a for a in self.torsion),
        )

    def __sub__(self, other):
        return self + (-other)

    def dual(self) -> "DivisorClass":
        return canonical_class(self.variety) - self

    def is_zero(self):
        return not any(self.free) and not any(self.torsion)

    def __eq__(self, other):
        return (
            isinstance(other, DivisorClass)
            and self.variety is other.variety
            and self.free == other.free
            and self.torsion == other.torsion
        )

    def __hash__(self):
        return hash((id(self.variety), self.free, self.torsion))

    def __repr__(self):
        if self.torsion:
            return f"DivisorClass(free={list(self.free)}, torsion={list(self.torsion)})"
        return f"DivisorClass({list(self.free)})"

    def to_json(self):
        return {"free": list(self.free), "torsion": list(self.torsion)}


class _AtomicClassData:
    """SNF cokernel data of the ray-pairing matrix of one atomic variety."""

    __slots__ = ("nrays", "u", "u_inv", "free_positions", "torsion_positions", "moduli")

    def __init__(self, variety: ToricVariety):
        rays = variety.rays
        self.nrays = len(rays)
        pairing = IntMatrix(rays)  # row rho = u_rho, so pairing @ m = div(chi^m)
        snf = smith_normal_form(pairing)
        factors = [f for f in snf.invariant_factors if f != 0]
        r = len(factors)
        u_rows = [list(row) for row in snf.u.entries]
        self.free_positions = tuple(range(r, self.nrays))
        self.torsion_positions = tuple(i for i in range(r) if factors[i] > 1)
        self.moduli = tuple(factors[i] for i in self.torsion_positions)

        # orient free generators so the canonical class is non-negative
        canonical = [-1] * self.nrays
        for pos in self.free_positions:
            val = _dot(u_rows[pos], canonical)
            flip = val < 0
            if val == 0:
                lead = next((x for x in u_rows[pos] if x != 0), 1)
                flip = lead < 0
            if flip:
                u_rows[pos] = [-x for x in u_rows[pos]]
        self.u = IntMatrix(u_rows)
        self.u_inv = invert_unimodular(self.u)

    def coords(self, coeffs):
        b = self.u @ tuple(coeffs)
        free = tuple(b[pos] for pos in self.free_positions)
        torsion = tuple(b[pos] % m for pos, m in zip(self.torsion_positions, self.moduli))
        return free, torsion

    def representative(self, free, torsion):
        b = [0] * self.nrays
        for pos, val in zip(self.free_positions, free):
            b[pos] = val
        for pos, val in zip(self.torsion_positions, torsion):
            b[pos] = val
        return self.u_inv @ tuple(b)


class ClassGroup:
    """Cl(X) with projection and section, concatenated over product factors."""

    __slots__ = ("variety", "blocks", "free_rank", "torsion")

    def __init__(self, variety: ToricVariety):
        self.variety = variety
        self.blocks = tuple(_AtomicClassData(f) for f in variety.factors)
        self.free_rank = sum(len(b.free_positions) for b in self.blocks)
        self.torsion = tuple(m for b in self.blocks for m in b.moduli)

    def __repr__(self):
        return f"ClassGroup(free_rank={self.free_rank}, torsion={list(self.torsion)})"

    def project(self, d: TorusDivisor) -> DivisorClass:
        if d.variety is not self.variety:
            raise VarietyMismatch("divisor lives on a different variety")
        per_factor = [[0] * b.nrays for b in self.blocks]
        for stored_idx, (pos, fray) in enumerate(self.variety._ray_split):
            per_factor[pos][fray] = d.coeffs[stored_idx]
        free = []
        torsion = []
        for block, coeffs in zip(self.blocks, per_factor):
            f, t = block.coords(coeffs)
            free.extend(f)
            torsion.extend(t)
        return DivisorClass(self.variety, tuple(free), tuple(torsion))

    def representative(self, cls: DivisorClass) -> TorusDivisor:
        if cls.variety is not self.variety:
            raise VarietyMismatch("class lives on a different variety")
        factor_coeffs = []
        fi = ti = 0
        for block in self.blocks:
            nf = len(block.free_positions)
            nt = len(block.moduli)
            factor_coeffs.append(
                list(block.representative(cls.free[fi : fi + nf], cls.torsion[ti : ti + nt]))
            )
            fi += nf
            ti += nt
        return TorusDivisor(self.variety, self.variety.join_coeffs(factor_coeffs))

    def presentation(self):
        return self.free_rank, self.torsion


def class_group(v: ToricVariety) -> ClassGroup:
    return v.class_group()


def div_of_character(v: ToricVariety, m) -> TorusDivisor:
    m = tuple(int(x) for x in m)
    if len(m) != v.cone.ambient_dim:
        raise ValueError("character lattice point has wrong dimension")
    return TorusDivisor(v, tuple(_dot(m, u) for u in v.rays))


def divisor_from_ray_coeffs(v: ToricVariety, ray_coeffs) -> TorusDivisor:
    """Build a divisor from {ray vector: coefficient}, unmentioned rays get 0."""
    coeffs = [0] * len(v.rays)
    for ray, c in dict(ray_coeffs).items():
        ray = tuple(int(x) for x in ray)
        coeffs[v.rays.index(ray)] = int(c)
    return TorusDivisor(v, coeffs)


def canonical_divisor(v: ToricVariety) -> TorusDivisor:
    return TorusDivisor(v, (-1,) * len(v.rays))


def canonical_class(v: ToricVariety) -> DivisorClass:
    return canonical_divisor(v).divisor_class()


def class_arithmetic(a: DivisorClass, b, op: str) -> DivisorClass:
    if op == "add":
        return a + b
    if op == "negate_then_add_canonical":
        return canonical_class(a.variety) - a
    raise ValueError(f"unknown class operation {op!r}")


def half_canonical(v: ToricVariety) -> DivisorClass:
    """The class c with 2c = canonical, when it exists uniquely."""
    cg = v.class_group()
    c = canonical_class(v)
    free = []
    for x in c.free:
        if x % 2:
            raise NoSolution(f"free canonical coordinate {x} is odd, no half class")
        free.append(x // 2)
    count = 1
    torsion = []
    for residue, mod in zip(c.torsion, cg.torsion):
        if mod % 2 == 0:
            if residue % 2:
                raise NoSolution(f"canonical residue {residue} mod {mod} is odd")
            torsion.append(residue // 2)
            count *= 2
        else:
            torsion.append((residue * pow(2, -1, mod)) % mod)
    if count > 1:
        raise NonUnique(f"{count} classes square to the canonical class", count)
    return DivisorClass(v, tuple(free), tuple(torsion))


class DivisorialModule:
    """O(D) as a lattice region plus its minimal monomial generators."""

    __slots__ = ("divisor", "generators")

    def __init__(self, divisor: TorusDivisor, generators):
        self.divisor = divisor
        self.generators = tuple(tuple(int(x) for x in g) for g in generators)

    def contains(self, m) -> bool:
        v = self.divisor.variety
        return all(
            _dot(m, u) >= -a for u, a in zip(v.rays, self.divisor.coeffs)
        )

    def __repr__(self):
        return f"DivisorialModule(generators={list(self.generators)})"

    def to_json(self):
        return {
            "coeffs": list(self.divisor.coeffs),
            "generators": [list(g) for g in self.generators],
        }


def _region_member(rays, coeffs, m):
    return all(_dot(m, u) >= -a for u, a in zip(rays, coeffs))


def _atomic_module_generators(v: ToricVariety, d: TorusDivisor):
    rays = v.rays
    dim = v.cone.ambient_dim
    coeffs = d.coeffs
    weight = tuple(sum(u[i] for u in rays) for i in range(dim))
    dual_rays = v.dual_cone.rays()
    hilbert = v.semigroup.hilbert_generators

    def grade(m):
        return _dot(weight, m)

    # vertices of the region
    rows = [list(u) for u in rays]
    rhs = [-a for a in coeffs]
    vertices = []
    for subset in combinations(range(len(rays)), dim):
        mat = IntMatrix([rows[i] for i in subset])
        sol = solve_rational(mat, [rhs[i] for i in subset])
        if sol is None:
            continue
        if all(
            sum(Fraction(u[i]) * sol[i] for i in range(dim)) >= -a
            for u, a in zip(rays, coeffs)
        ):
            vertices.append(tuple(sol))
    if not vertices:
        raise ValueError("region has no vertex; divisor region is degenerate")

    vertex_grades = [sum(Fraction(w) * x for w, x in zip(weight, vert)) for vert in vertices]
    bound = ceil(max(vertex_grades)) + sum(grade(r) for r in dual_rays)

    # bounding box of the grade-truncated region, via its vertices
    cap_rows = rows + [[-w for w in weight]]
    cap_rhs = rhs + [-bound]
    box_pts = []
    for subset in combinations(range(len(cap_rows)), dim):
        mat = IntMatrix([cap_rows[i] for i in subset])
        sol = solve_rational(mat, [cap_rhs[i] for i in subset])
        if sol is None:
            continue
        if all(
            sum(Fraction(r[i]) * sol[i] for i in range(dim)) >= b
            for r, b in zip(cap_rows, cap_rhs)
        ):
            box_pts.append(tuple(sol))
    lo = [floor(min(p[i] for p in box_pts)) for i in range(dim)]
    hi = [ceil(max(p[i] for p in box_pts)) for i in range(dim)]

    minimal = []
    for point in iproduct(*(range(lo[i], hi[i] + 1) for i in range(dim))):
        if grade(point) > bound or not _region_member(rays, coeffs, point):
            continue
        if all(not _region_member(rays, coeffs, _sub(point, h)) for h in hilbert):
            minimal.append(point)
    minimal.sort()
    return minimal


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def module_generators(v: ToricVariety, d: TorusDivisor) -> DivisorialModule:
    """Minimal monomial generators of O(D) over the semigroup ring."""
    if d.variety is not v:
        raise VarietyMismatch("divisor lives on a different variety")
    if v.is_product():
        parts = v.split_divisor(d)
        factor_gens = [
            module_generators(f, df).generators for f, df in zip(v.factors, parts)
        ]
        dim = v.cone.ambient_dim
        combined = []
        for combo in iproduct(*factor_gens):
            vec = [0] * dim
            for pos, g in enumerate(combo):
                lo = v._offsets[pos]
                vec[lo : lo + len(g)] = list(g)
            combined.append(tuple(vec))
        combined.sort()
        return DivisorialModule(d, combined)
    return DivisorialModule(d, _atomic_module_generators(v, d))


def multiplicity(v: ToricVariety) -> int:
    """Minimal generator count of the half-canonical module, over the factors."""
    total = 1
    for f in v.factors:
        half = half_canonical(f)
        rep = f.class_group().representative(half)
        total *= len(module_generators(f, rep).generators)
    return total


def steinberg_multiplicity(k, s, field=101) -> int:
    """Multiplicity of the (k, s) product; the empty product is the field."""
    k, s = int(k), int(s)
    if k < 0 or s < 0:
        raise ValueError("need k >= 0 and s >= 0")
    if k + s == 0:
        return 1
    return multiplicity(steinberg_product_variety(k, s, field))


def _module_minimal_generators(v: ToricVariety, points):
    """Minimal generators of the module generated by a finite monomial set."""
    pts = sorted(set(points))
    out = []
    for p in pts:
        if not any(q != p and v.semigroup_contains(_sub(p, q)) for q in pts):
            out.append(p)
    return out


def trace_surjectivity_witness(v: ToricVariety, d: TorusDivisor, other=None, target=None):
    """Monomial witness that O(d) * O(other) equals a character times O(target).

    Returns (True, m) when the product of the two generator sets generates
    exactly chi^m * O(target); otherwise (False, None). `other` defaults to
    d and `target` to the canonical divisor.
    """
    if other is None:
        other = d
    if target is None:
        target = canonical_divisor(v)
    gens_a = module_generators(v, d).generators
    gens_b = module_generators(v, other).generators
    sums = {_add(a, b) for a in gens_a for b in gens_b}
    product_gens = _module_minimal_generators(v, sums)
    target_gens = list(module_generators(v, target).generators)
    if len(product_gens) != len(target_gens):
        return False, None
    shift = _sub(product_gens[0], target_gens[0])
    if all(_add(t, shift) == p for t, p in zip(target_gens, product_gens)):
        return True, shift
    return False, None


def _steinberg_parameter_sequence(presentation):
    """Images of (x, yz^2, y - xz^2) in the presentation ring."""
    x = presentation.monomial_for((1, 0, 0))
    yz2 = presentation.monomial_for((0, 1, 2))
    y = presentation.monomial_for((0, 1, 0))
    xz2 = presentation.monomial_for((1, 0, 2))
    return [x, yz2, y - xz2]


def module_is_maximal_cohen_macaulay(v: ToricVariety, gens, sequence=None) -> bool:
    """Certify depth = dim for the module generated by lattice points `gens`.

    The generators are translated into the semigroup, lifted to monomials
    of the presentation ring, and the parameter sequence is certified to be
    regular on the module by exact Hilbert-series bookkeeping.
    """
    pres = v.presentation
    if pres is None:
        raise ValueError("variety has no ring presentation")
    if sequence is None:
        if list(pres.map.phi.columns()) != list(PHI_COLUMNS):
            raise ValueError("no default parameter sequence for this presentation")
        sequence = _steinberg_parameter_sequence(pres)
    interior = tuple(
        sum(h[i] for h in v.semigroup.hilbert_generators)
        for i in range(v.cone.ambient_dim)
    )
    shift = 0
    for u in v.rays:
        pu = _dot(interior, u)
        for g in gens:
            need = -_dot(g, u)
            if need > 0:
                shift = max(shift, -(-need // pu))
    translated = [_add(g, tuple(shift * x for x in interior)) for g in gens]
    module_gens = [pres.monomial_for(m) for m in translated]
    return module_regular_sequence(pres.ideal, module_gens, sequence)


def enumerate_mcm_rank_one_candidates(
    v: ToricVariety, gen_bound=4, scan_window=10, band=5, sequence=None
):
    """Scan classes k in [-w-band, w+band] for small Cohen-Macaulay modules.

    Returns (class, generator count) for every class whose module has at
    most gen_bound minimal generators AND whose parameter sequence is
    certified regular on it. The extra band beyond the window guards the
    claim that nothing new appears just outside the scanned range.
    """
    cg = v.class_group()
    if cg.free_rank != 1 or cg.torsion:
        raise ValueError("scan expects an infinite cyclic class group")
    results = []
    for k in range(-scan_window - band, scan_window + band + 1):
        cls = DivisorClass(v, (k,))
        rep = cg.representative(cls)
        gens = module_generators(v, rep).generators
        if len(gens) > gen_bound:
            continue
        if module_is_maximal_cohen_macaulay(v, gens, sequence=sequence):
            results.append((cls, len(gens)))
    return results

"""Multivariate polynomials over a prime field with a Buchberger engine.

Polynomials are dicts mapping exponent tuples to nonzero coefficients in
F_p. Ideals carry a monomial order tag and cache their reduced Groebner
basis. On top of the basis machinery this module provides elimination,
saturation, quotient vector-space dimensions, and exact Hilbert-series
certificates for regular sequences (on quotient rings and on monomial
modules presented by ideals).
"""

from __future__ import annotations

from heapq import heappop, heappush
from itertools import product as iproduct

from .errors import InconclusiveAtBound, NotHomogeneous

INFINITE = float("inf")


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def order_key(order, nvars):
    """Key function on exponent tuples; larger key = larger monomial."""

    def grevlex(e):
        return (sum(e), tuple(-x for x in reversed(e)))

    if order == "grevlex":
        return grevlex
    if order == "lex":
        return lambda e: tuple(e)
    if isinstance(order, tuple) and len(order) == 2 and order[0] == "elim":
        k = order[1]
        if not 0 < k < nvars:
            raise ValueError("elimination block size out of range")
        return lambda e: (grevlex(e[:k]), grevlex(e[k:]))
    raise ValueError(f"unknown monomial order: {order!r}")


class PolyRing:
    """F_p[x_1..x_n] for a prime p and named variables."""

    __slots__ = ("char", "variables", "_index")

    def __init__(self, char, variables):
        char = int(char)
        if not _is_prime(char):
            raise ValueError(f"characteristic must be prime, got {char}")
        names = tuple(str(v) for v in variables)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.char = char
        self.variables = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def nvars(self):
        return len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.char == other.char
            and self.variables == other.variables
        )

    def __hash__(self):
        return hash((self.char, self.variables))

    def __repr__(self):
        return f"PolyRing(char={self.char}, variables={list(self.variables)})"

    # -- polynomial constructors ----------------------------------------------

    def polynomial(self, terms):
        return Polynomial(self, terms)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, name):
        e = [0] * self.nvars
        e[self._index[name]] = 1
        return Polynomial(self, {tuple(e): 1})

    def monomial(self, exponents, coeff=1):
        return Polynomial(self, {tuple(int(x) for x in exponents): coeff})

    def binomial_from_vector(self, vec):
        """z^(positive part) - z^(negative part) for an integer vector."""
        pos = tuple(max(x, 0) for x in vec)
        neg = tuple(max(-x, 0) for x in vec)
        return Polynomial(self, {pos: 1}) - Polynomial(self, {neg: 1})

    def ideal(self, generators, order="grevlex"):
        return Ideal(self, generators, order=order)

    # -- parsing ----------------------------------------------------------------

    def parse(self, text):
        """Parse `A^2 - B*C` style syntax into a Polynomial."""
        tokens = _tokenize(text)
        parser = _Parser(self, tokens)
        poly = parser.expression()
        parser.expect_end()
        return poly


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j])))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif ch in "+-*^()":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in polynomial")
    return tokens


class _Parser:
    def __init__(self, ring, tokens):
        self.ring = ring
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_end(self):
        if self.pos != len(self.tokens):
            raise ValueError(f"trailing input at token {self.tokens[self.pos]!r}")

    def expression(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.next()[0] == "-" else 1
        result = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self):
        result = self.factor()
        while self.peek() == "*":
            self.next()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.base()
        if self.peek() == "^":
            self.next()
            kind, value = self.next()
            if kind != "num":
                raise ValueError("exponent must be a number")
            return base ** value
        return base

    def base(self):
        kind, value = self.next()
        if kind == "num":
            return self.ring.constant(value)
        if kind == "name":
            if value not in self.ring._index:
                raise ValueError(f"unknown variable {value!r}")
            return self.ring.variable(value)
        if kind == "(":
            inner = self.expression()
            if self.next()[0] != ")":
                raise ValueError("unbalanced parentheses")
            return inner
        raise ValueError(f"unexpected token {value!r}")


class Polynomial:
    """Element of a PolyRing; immutable by convention."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        p = ring.char
        clean = {}
        for exps, coeff in terms.items():
            c = int(coeff) % p
            if c:
                e = tuple(int(x) for x in exps)
                if len(e) != ring.nvars or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent vector {e!r}")
                clean[e] = c
        self.ring = ring
        self.terms = clean

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check(other)
        p = self.ring.char
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = (out.get(e, 0) + c) % p
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        result = Polynomial.__new__(Polynomial)
        result.ring = self.ring
        result.terms = out
        return result

    def __neg__(self):
        p = self.ring.char
        result = Polynomial.__new__(Polynomial)
        result.ring = self.ring
        result.terms = {e: p - c for e, c in self.terms.items()}
        return result

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.char
            if c == 0:
                return self.ring.zero()
            result = Polynomial.__new__(Polynomial)
            result.ring = self.ring
            result.terms = {e: (c * v) % self.ring.char for e, v in self.terms.items()}
            return result
        self._check(other)
        p = self.ring.char
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = (out.get(e, 0) + c1 * c2) % p
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        result = Polynomial.__new__(Polynomial)
        result.ring = self.ring
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- structure ----------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading_term(self, key):
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def monic(self, key):
        if not self.terms:
            return self
        _, c = self.leading_term(key)
        inv = pow(c, -1, self.ring.char)
        return self * inv

    # -- display --------------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        key = order_key("grevlex", self.ring.nvars)
        p = self.ring.char
        parts = []
        for e in sorted(self.terms, key=key, reverse=True):
            c = self.terms[e]
            lifted = c if c <= p // 2 else c - p
            parts.append((lifted, e))
        pieces = []
        for i, (c, e) in enumerate(parts):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = "*".join(
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(self.ring.variables, e)
                if k
            )
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({self})"


# -- division and Buchberger -----------------------------------------------------


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce_terms(ring, terms, reducers, key):
    """Full remainder of a term dict modulo (lt, inv_lc, poly) reducers."""
    p = ring.char
    work = dict(terms)
    remainder = {}
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        hit = None
        for lt, inv_lc, g in reducers:
            if _divides(lt, e):
                hit = (lt, inv_lc, g)
                break
        if hit is None:
            remainder[e] = c
            continue
        lt, inv_lc, g = hit
        shift = _sub(e, lt)
        factor = (c * inv_lc) % p
        for ge, gc in g.terms.items():
            te = _add(ge, shift)
            s = (work.get(te, 0) - factor * gc) % p
            if te == e:
                continue  # cancelled exactly
            if s:
                work[te] = s
            elif te in work:
                del work[te]
    return remainder


def _prepare_reducers(polys, key):
    reducers = []
    for g in polys:
        if g.is_zero():
            continue
        lt, lc = g.leading_term(key)
        reducers.append((lt, pow(lc, -1, g.ring.char), g))
    return reducers


def _normal_form(f, polys, key):
    reducers = _prepare_reducers(polys, key)
    rem = _reduce_terms(f.ring, f.terms, reducers, key)
    out = Polynomial.__new__(Polynomial)
    out.ring = f.ring
    out.terms = rem
    return out


def _s_poly(f, g, key):
    p = f.ring.char
    lt_f, lc_f = f.leading_term(key)
    lt_g, lc_g = g.leading_term(key)
    lcm = _lcm(lt_f, lt_g)
    mf = f.ring.monomial(_sub(lcm, lt_f), pow(lc_f, -1, p))
    mg = f.ring.monomial(_sub(lcm, lt_g), pow(lc_g, -1, p))
    return mf * f - mg * g


def _buchberger(generators, key):
    basis = []
    for g in generators:
        if not g.is_zero():
            basis.append(g.monic(key))
    basis.sort(key=lambda g: key(g.leading_term(key)[0]))
    lts = [g.leading_term(key)[0] for g in basis]
    heap = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            heappush(heap, (key(_lcm(lts[i], lts[j])), i, j))
    while heap:
        _, i, j = heappop(heap)
        if _lcm(lts[i], lts[j]) == _add(lts[i], lts[j]):
            continue  # coprime leading terms: S-polynomial reduces to zero
        s = _s_poly(basis[i], basis[j], key)
        r = _normal_form(s, basis, key)
        if not r.is_zero():
            r = r.monic(key)
            basis.append(r)
            lts.append(r.leading_term(key)[0])
            new = len(basis) - 1
            for k in range(new):
                heappush(heap, (key(_lcm(lts[k], lts[new])), k, new))
    return basis


def _reduce_basis(basis, key):
    """Minimalize and inter-reduce a Groebner basis; sorted, monic output."""
    polys = [g for g in basis if not g.is_zero()]
    polys.sort(key=lambda g: key(g.leading_term(key)[0]))
    minimal = []
    for g in polys:
        lt = g.leading_term(key)[0]
        if any(_divides(m.leading_term(key)[0], lt) for m in minimal):
            continue
        minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        r = _normal_form(g, others, key) if others else g
        reduced.append(r.monic(key))
    reduced.sort(key=lambda g: key(g.leading_term(key)[0]))
    return reduced


class Ideal:
    """Ideal presented by generators, with a monomial order and GB cache."""

    __slots__ = ("ring", "generators", "order", "_gb")

    def __init__(self, ring, generators, order="grevlex"):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        order_key(order, ring.nvars)  # validate
        self.order = order
        self._gb = None

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({gens})"

    def key(self):
        return order_key(self.order, self.ring.nvars)

    def groebner(self):
        """The reduced Groebner basis, as a cached list of polynomials."""
        if self._gb is None:
            key = self.key()
            self._gb = tuple(_reduce_basis(_buchberger(list(self.generators), key), key))
        return list(self._gb)

    def normal_form(self, f):
        if isinstance(f, str):
            f = self.ring.parse(f)
        return _normal_form(f, self.groebner(), self.key())

    def contains(self, f):
        return self.normal_form(f).is_zero()

    def leading_exponents(self):
        key = self.key()
        return [g.leading_term(key)[0] for g in self.groebner()]

    def with_order(self, order):
        return Ideal(self.ring, self.generators, order=order)


def groebner_basis(i: Ideal) -> Ideal:
    """A new Ideal generated by the reduced Groebner basis of `i`."""
    gb = i.groebner()
    out = Ideal(i.ring, gb, order=i.order)
    out._gb = tuple(gb)
    return out


def normal_form(f, i: Ideal):
    return i.normal_form(f)


def ideal_equal(i: Ideal, j: Ideal) -> bool:
    if i.ring != j.ring:
        raise ValueError("ideals in different rings")
    if i.order == j.order:
        return i.groebner() == j.groebner()
    return i.groebner() == j.with_order(i.order).groebner()


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    if i.ring != j.ring:
        raise ValueError("ideals in different rings")
    return Ideal(i.ring, list(i.generators) + list(j.generators), order=i.order)


def saturate(i: Ideal, f) -> Ideal:
    """(i : f^infinity), computed with one extra elimination variable."""
    ring = i.ring
    if isinstance(f, str):
        f = ring.parse(f)
    aux = "t_"
    while aux in ring.variables:
        aux += "_"
    ext = PolyRing(ring.char, (aux,) + ring.variables)

    def lift(poly):
        return Polynomial(ext, {(0,) + e: c for e, c in poly.terms.items()})

    t = ext.variable(aux)
    gens = [lift(g) for g in i.generators]
    gens.append(t * lift(f) - ext.one())
    elim = Ideal(ext, gens, order=("elim", 1))
    kept = []
    for g in elim.groebner():
        if all(e[0] == 0 for e in g.terms):
            kept.append(Polynomial(ring, {e[1:]: c for e, c in g.terms.items()}))
    return Ideal(ring, kept, order=i.order)


def quotient_dimension(i: Ideal):
    """dim_F of ring/i as a vector space, or INFINITE."""
    mono = standard_monomials(i)
    return INFINITE if mono is None else len(mono)


def standard_monomials(i: Ideal):
    """Monomials not in the leading-term ideal, or None if infinitely many."""
    n = i.ring.nvars
    lead = i.leading_exponents()
    if any(sum(e) == 0 for e in lead):
        return []
    bounds = []
    for v in range(n):
        pure = [e[v] for e in lead if sum(e) == e[v]]
        if not pure:
            return None
        bounds.append(min(pure))
    out = []
    for exps in iproduct(*(range(b) for b in bounds)):
        if not any(_divides(le, exps) for le in lead):
            out.append(exps)
    key = order_key("grevlex", n)
    out.sort(key=key)
    return out


# -- Hilbert series ------------------------------------------------------------


def _poly_trim(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_sub(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_shift(a, k):
    return _poly_trim([0] * k + list(a)) if a else []

def _minimize_monomials(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


def _monomial_numerator(gens, memo):
    """Numerator of the Hilbert series of R/(monomial ideal) over (1-t)^n."""
    gens = tuple(sorted(gens))
    if gens in memo:
        return memo[gens]
    if not gens:
        result = [1]
    elif any(sum(g) == 0 for g in gens):
        result = []
    elif len(gens) == 1:
        result = _poly_sub([1], _poly_shift([1], sum(gens[0])))
    else:
        rest = list(gens[:-1])
        m = gens[-1]
        colon = _minimize_monomials(
            [tuple(max(g[i] - m[i], 0) for i in range(len(m))) for g in rest]
        )
        n_rest = _monomial_numerator(tuple(rest), memo)
        n_colon = _monomial_numerator(tuple(colon), memo)
        result = _poly_sub(n_rest, _poly_shift(n_colon, sum(m)))
    memo[gens] = result
    return result


def hilbert_numerator(i: Ideal):
    """Coefficients of N(t) with HS(ring/i) = N(t)/(1-t)^nvars.

    Computed from the leading-term ideal (Macaulay), exactly over the
    integers; the passage to leading terms preserves the Hilbert series
    only for homogeneous input, so that is enforced. The zero ideal gives
    [1]; the unit ideal gives [].
    """
    _check_homogeneous(i.generators)
    lead = _minimize_monomials(i.leading_exponents())
    return _monomial_numerator(tuple(lead), {})


def hilbert_function(numerator, nvars, upto):
    """Values HF(0..upto) of a series N(t)/(1-t)^nvars."""
    vals = list(numerator[: upto + 1]) + [0] * max(0, upto + 1 - len(numerator))
    for _ in range(nvars):
        for d in range(1, upto + 1):
            vals[d] += vals[d - 1]
    return vals


def _check_homogeneous(polys):
    for f in polys:
        if isinstance(f, Polynomial) and not f.is_homogeneous():
            raise NotHomogeneous(f"{f} is not homogeneous")


def _support_degree(numerator):
    return max((d for d, c in enumerate(numerator) if c), default=-1)


def is_regular_sequence(elements, i: Ideal, degree_bound=12) -> bool:
    """Regular-sequence test on ring/i, certified up to degree_bound.

    Uses the Hilbert-series identity: a homogeneous f of degree e is a
    nonzerodivisor on the graded quotient Q iff N(Q/f) = N(Q)*(1 - t^e).
    Numerator coefficients are compared degree by degree. A mismatch
    within the bound is a definite False; agreement is a certificate when
    both numerators are supported within the bound, and otherwise raises
    InconclusiveAtBound rather than guessing.
    """
    ring = i.ring
    elements = [ring.parse(f) if isinstance(f, str) else f for f in elements]
    _check_homogeneous(list(i.generators) + elements)
    current = list(i.generators)
    n_prev = hilbert_numerator(i)
    for f in elements:
        if f.is_zero():
            return not n_prev  # 0 is regular only on the zero module
        e = f.degree()
        current.append(f)
        n_next = hilbert_numerator(Ideal(ring, current, order=i.order))
        expected = _poly_mul(n_prev, _poly_sub([1], _poly_shift([1], e)))
        top = max(len(n_next), len(expected))
        for d in range(min(degree_bound, top - 1) + 1):
            got = n_next[d] if d < len(n_next) else 0
            want = expected[d] if d < len(expected) else 0
            if got != want:
                return False
        if max(_support_degree(n_next), _support_degree(expected)) > degree_bound:
            raise InconclusiveAtBound(
                f"numerator support exceeds degree bound {degree_bound}", degree_bound
            )
        n_prev = n_next
    return True


def module_regular_sequence(i: Ideal, module_gens, elements) -> bool:
    """Regular-sequence test for elements acting on the module (J+i)/i.

    J is the ideal generated by `module_gens`. Successive quotients
    M/(f_1..f_j)M = (J+i)/(i + f_1 J + .. + f_j J) have Hilbert series
    HS(R/(i + sum f_a J)) - HS(R/(i+J)), and each step is certified by
    the same numerator identity as is_regular_sequence.
    """
    ring = i.ring
    module_gens = [ring.parse(g) if isinstance(g, str) else g for g in module_gens]
    elements = [ring.parse(f) if isinstance(f, str) else f for f in elements]
    _check_homogeneous(list(i.generators) + module_gens + elements)
    if not module_gens:
        return False  # zero module: nothing to certify
    base = list(i.generators)
    n_top = hilbert_numerator(Ideal(ring, base + module_gens, order=i.order))
    n_prev = _poly_sub(hilbert_numerator(i), n_top)
    if not n_prev:
        return False  # module is zero
    cut = []
    for f in elements:
        if f.is_zero():
            return False
        e = f.degree()
        cut.extend(f * g for g in module_gens)
        n_k = hilbert_numerator(Ideal(ring, base + cut, order=i.order))
        n_mod = _poly_sub(n_k, n_top)
        expected = _poly_mul(n_prev, _poly_sub([1], _poly_shift([1], e)))
        if n_mod != expected:
            return False
        n_prev = n_mod
    return True

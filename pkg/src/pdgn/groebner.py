"""Buchberger's algorithm over the rationals for weight orders.

The term order compares total degree, then weight under the MIN convention
(smaller <w, u> is larger in the order, so leading terms are w-minimal),
then graded reverse lexicographic order on the ring's variable order.

Inside the engine a monomial is a packed integer with 8 bits per variable,
the top bit of each field reserved as a guard for divisibility tests.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidInput, UnsupportedShape
from .poly import Polynomial, Ring

_BITS = 8
_MAXEXP = (1 << (_BITS - 1)) - 1


class TermOrder:
    def __init__(self, nvars, weights=None):
        self.nvars = nvars
        self.weights = tuple(int(x) for x in weights) if weights is not None else (0,) * nvars
        if len(self.weights) != nvars:
            raise InvalidInput("weight vector length does not match the ring")
        self.guard = sum(1 << (_BITS * r + _BITS - 1) for r in range(nvars))
        self._keys = {}

    def pack(self, u) -> int:
        m = 0
        for r, e in enumerate(u):
            if e > _MAXEXP:
                raise InvalidInput("exponent too large for the packed encoding")
            m |= e << (_BITS * r)
        return m

    def unpack(self, m) -> tuple:
        mask = (1 << _BITS) - 1
        return tuple((m >> (_BITS * r)) & mask for r in range(self.nvars))

    def key(self, m):
        k = self._keys.get(m)
        if k is None:
            u = self.unpack(m)
            k = (sum(u), -sum(a * b for a, b in zip(u, self.weights)),
                 tuple(-x for x in reversed(u)))
            self._keys[m] = k
        return k

    def divides(self, a, b) -> bool:
        return ((b | self.guard) - a) & self.guard == self.guard

    def lcm(self, a, b) -> int:
        mask = (1 << _BITS) - 1
        out = 0
        for r in range(self.nvars):
            s = _BITS * r
            out |= max((a >> s) & mask, (b >> s) & mask) << s
        return out

    def coprime(self, a, b) -> bool:
        return self.lcm(a, b) == a + b


def _to_engine(f: Polynomial, order):
    return {order.pack(u): Fraction(c) for u, c in f.terms.items()}


def _from_engine(ring, terms, order) -> Polynomial:
    return Polynomial(ring, {order.unpack(m): c for m, c in terms.items()})


def _leading(terms, order):
    return max(terms, key=order.key)


def _make_monic(terms, order):
    lc = terms[_leading(terms, order)]
    if lc == 1:
        return terms
    inv = 1 / lc
    return {m: c * inv for m, c in terms.items()}


def _reduce(terms, basis, order, full=True):
    """Normal form of ``terms`` modulo ``basis`` (list of (lm, monic terms))."""
    f = dict(terms)
    rem = {}
    key = order.key
    while f:
        m = max(f, key=key)
        c = f[m]
        for lm, g in basis:
            if order.divides(lm, m):
                q = m - lm
                for gm, gc in g.items():
                    t = gm + q
                    v = f.get(t, 0) - c * gc
                    if v:
                        f[t] = v
                    else:
                        f.pop(t, None)
                break
        else:
            rem[m] = c
            del f[m]
            if not full:
                rem.update(f)
                break
    return rem


def _spoly(f, flm, g, glm, order):
    l = order.lcm(flm, glm)
    a, b = l - flm, l - glm
    out = {}
    for m, c in f.items():
        out[m + a] = c
    for m, c in g.items():
        t = m + b
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def groebner_engine(polys, order):
    """Reduced Groebner basis as a list of monic engine dicts, sorted by leader."""
    basis = []  # list of (lm, terms)
    pairs = set()
    key = order.key

    def add(h):
        h = _make_monic(h, order)
        hlm = _leading(h, order)
        idx = len(basis)
        basis.append((hlm, h))
        pairs.update((j, idx) for j in range(idx))

    for p in polys:
        r = _reduce(p, basis, order)
        if r:
            add(r)
    while pairs:
        i, j = min(pairs, key=lambda p: (key(order.lcm(basis[p[0]][0], basis[p[1]][0])), p))
        pairs.discard((i, j))
        (ilm, fi), (jlm, fj) = basis[i], basis[j]
        if order.coprime(ilm, jlm):
            continue
        l = order.lcm(ilm, jlm)
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            klm = basis[k][0]
            if order.divides(klm, l) and (min(i, k), max(i, k)) not in pairs \
                    and (min(j, k), max(j, k)) not in pairs:
                skip = True
                break
        if skip:
            continue
        s = _spoly(fi, ilm, fj, jlm, order)
        if not s:
            continue
        r = _reduce(s, basis, order)
        if r:
            add(r)
    return _interreduce([b[1] for b in basis], order)


def _interreduce(polys, order):
    items = [(_leading(p, order), p) for p in polys if p]
    keep = []
    for r, (lm, p) in enumerate(items):
        dominated = False
        for s, (lm2, _) in enumerate(items):
            if s == r:
                continue
            if order.divides(lm2, lm) and (lm2 != lm or s < r):
                dominated = True
                break
        if not dominated:
            keep.append((lm, p))
    out = []
    for r, (lm, p) in enumerate(keep):
        others = [kp for s, kp in enumerate(keep) if s != r]
        tail = _reduce({m: c for m, c in p.items() if m != lm}, others, order)
        tail[lm] = p[lm]
        out.append((lm, _make_monic(tail, order)))
    out.sort(key=lambda x: order.key(x[0]), reverse=True)
    return [p for _, p in out]


class ReducedBasis:
    """Reduced Groebner basis of an ideal for a weight order with grevlex tie-break."""

    def __init__(self, ring: Ring, generators, weights=None):
        self.ring = ring
        self.weights = tuple(weights) if weights is not None else (0,) * ring.nvars
        self.generators = tuple(generators)

    def __eq__(self, other):
        return (isinstance(other, ReducedBasis) and self.ring == other.ring
                and self.weights == other.weights
                and set(self.generators) == set(other.generators))

    def __hash__(self):
        return hash(frozenset(self.generators))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def order(self) -> TermOrder:
        return TermOrder(self.ring.nvars, self.weights)

    def normal_form(self, f: Polynomial) -> Polynomial:
        order = self.order
        basis = [(_leading(t, order), t) for t in (_to_engine(g, order) for g in self.generators)]
        return _from_engine(self.ring, _reduce(_to_engine(f, order), basis, order), order)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def leading_monomials(self) -> list:
        order = self.order
        return [order.unpack(_leading(_to_engine(g, order), order)) for g in self.generators]

    def to_strings(self) -> list:
        return sorted(str(g) for g in self.generators)

    def to_dict(self) -> dict:
        return {"weights": list(self.weights), "tie_break": "grevlex",
                "generators": self.to_strings()}


def buchberger_reduced(gens, weights=None, ring=None) -> ReducedBasis:
    """Reduced Groebner basis of <gens> for the weight order (MIN convention)."""
    gens = [g for g in gens if g]
    if ring is None:
        if not gens:
            raise InvalidInput("need at least one nonzero generator or a ring")
        ring = gens[0].ring
    order = TermOrder(ring.nvars, weights)
    engine = [_to_engine(g, order) for g in gens]
    basis = groebner_engine(engine, order)
    return ReducedBasis(ring, [_from_engine(ring, b, order) for b in basis], order.weights)


def initial_form(f: Polynomial, weights) -> Polynomial:
    """Terms of f whose weight <w, u> is minimal."""
    if not f:
        raise InvalidInput("initial form of the zero polynomial")
    w = tuple(weights)
    if len(w) != f.ring.nvars:
        raise InvalidInput("weight vector length does not match the ring")
    score = {u: sum(a * b for a, b in zip(u, w)) for u in f.terms}
    low = min(score.values())
    return Polynomial(f.ring, {u: c for u, c in f.terms.items() if score[u] == low})


def initial_ideal(gens, weights) -> ReducedBasis:
    """Reduced grevlex basis of in_w(<gens>), via a Groebner basis for the w-order."""
    gb = buchberger_reduced(gens, weights)
    forms = [initial_form(g, weights) for g in gb.generators]
    return buchberger_reduced(forms, None, gb.ring)


def same_ideal(a: ReducedBasis, b: ReducedBasis) -> bool:
    if a.weights != b.weights:
        b = buchberger_reduced(b.generators, a.weights, a.ring)
    return set(a.generators) == set(b.generators)


def is_monomial_free(b: ReducedBasis) -> bool:
    """Decide monomial-freeness of an ideal with a binomial/monomial reduced basis."""
    for g in b.generators:
        if len(g) > 2:
            raise UnsupportedShape("reduced basis has a generator with three or more terms")
    return all(len(g) == 2 for g in b.generators)


def _move_last(f: Polynomial, ring: Ring, r: int) -> Polynomial:
    perm = [s for s in range(ring.nvars) if s != r] + [r]
    return Polynomial(ring, {tuple(u[s] for s in perm): c for u, c in f.terms.items()})


def _move_back(f: Polynomial, ring: Ring, r: int) -> Polynomial:
    n = ring.nvars
    out = {}
    for u, c in f.terms.items():
        v = list(u[:r]) + [u[-1]] + list(u[r:n - 1])
        out[tuple(v)] = c
    return Polynomial(ring, out)


def saturate_variable(gens, r: int, ring: Ring = None) -> list:
    """Generators of <gens> : x_r^infinity for a homogeneous ideal.

    Uses a grevlex basis with x_r as the smallest variable; dividing each
    element by its largest power of x_r generates the saturation.
    """
    gens = [g for g in gens if g]
    ring = ring or gens[0].ring
    moved = Ring([ring.names[s] for s in range(ring.nvars) if s != r] + [ring.names[r]])
    gb = buchberger_reduced([_move_last(g, moved, r) for g in gens], None, moved)
    out = []
    for g in gb.generators:
        low = min(u[-1] for u in g.terms)
        terms = {u[:-1] + (u[-1] - low,): c for u, c in g.terms.items()}
        out.append(_move_back(Polynomial(moved, terms), ring, r))
    return out


def contains_monomial(gens, ring: Ring = None) -> bool:
    """True iff the homogeneous ideal <gens> contains a monomial.

    Saturates by every variable in turn; the ideal contains a monomial
    exactly when the saturation by the product of all variables is the
    unit ideal.  Slower than ``is_monomial_free`` but works for any shape.
    """
    gens = [g for g in gens if g]
    ring = ring or gens[0].ring
    for r in range(ring.nvars):
        gens = saturate_variable(gens, r, ring)
        if any(g.degree() == 0 for g in gens):
            return True
    return False

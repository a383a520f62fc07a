"""Shared generators and independent oracles for the test suite."""

from itertools import combinations
import math

from hypothesis import strategies as st

from pdgn.polygon import Triangulation, crosses


def random_triangulation(n, rng):
    """Random triangulation: close the side (first, last) with a random apex, recurse."""
    diagonals = []

    def fill(verts):
        if len(verts) < 3:
            return
        m = rng.randrange(1, len(verts) - 1)
        if m > 1:
            diagonals.append((verts[0], verts[m]))
        if m < len(verts) - 2:
            diagonals.append((verts[m], verts[-1]))
        fill(verts[:m + 1])
        fill(verts[m:])

    fill(list(range(1, n + 1)))
    return Triangulation(n, diagonals)


def triangulations(min_n=4, max_n=10):
    return st.tuples(st.integers(min_n, max_n), st.randoms(use_true_random=False)).map(
        lambda pair: random_triangulation(pair[0], pair[1]))


def catalan(m):
    return math.comb(2 * m, m) // (m + 1)


def brute_force_triangulations(n):
    """All (n-3)-sets of pairwise non-crossing diagonals."""
    cand = [(a, b) for a, b in combinations(range(1, n + 1), 2)
            if (b - a) % n not in (1, n - 1)]
    return sorted(tuple(s) for s in combinations(cand, n - 3)
                  if all(not crosses(d, e) for d, e in combinations(s, 2)))


def cyclic_members(p, q, n):
    """Members of [[p, q]] by walking p, p+1, ... until q (independent of CyclicInterval)."""
    out = [p]
    while out[-1] != q:
        out.append(out[-1] % n + 1)
    return set(out)


def count_connections(diagonals, p, q, s, t, n):
    A, B = cyclic_members(p, q, n), cyclic_members(s, t, n)
    return sum(1 for a, b in diagonals if (a in A and b in B) or (a in B and b in A))


def monomials(nvars, degree):
    """Exponent vectors of the given total degree."""
    if nvars == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - e):
            yield (e,) + rest


def standard_monomial_count(leading, nvars, degree):
    """Monomials of the degree divisible by no leading monomial: dim of (R/I)_degree."""
    return sum(1 for u in monomials(nvars, degree)
               if not any(all(a <= b for a, b in zip(m, u)) for m in leading))


def gr2_hilbert(n, d):
    """Dimension of the degree-d part of the coordinate ring of Gr(2, n)."""
    return math.comb(n + d - 1, d) * math.comb(n + d - 2, d) // (d + 1)


def sympy_groebner(polys, weights):
    """Reduced basis from sympy for the same weight order, as sets of term dicts."""
    import sympy
    from fractions import Fraction
    from sympy.polys.orderings import MonomialOrder

    class WeightOrder(MonomialOrder):
        alias = "weighted_grevlex"
        is_global = True
        is_default = False

        def __init__(self, w):
            self.w = tuple(w)

        def __call__(self, m):
            return (sum(m), -sum(a * b for a, b in zip(self.w, m)),
                    tuple(-x for x in reversed(m)))

        def __eq__(self, other):
            return isinstance(other, WeightOrder) and other.w == self.w

        def __hash__(self):
            return hash(self.w)

    nvars = polys[0].ring.nvars
    xs = sympy.symbols(f"x0:{nvars}")
    exprs = [sum(sympy.Rational(c.numerator, c.denominator) *
                 sympy.Mul(*[x ** e for x, e in zip(xs, u)]) for u, c in f.terms.items())
             for f in polys]
    G = sympy.groebner(exprs, *xs, order=WeightOrder(weights), domain="QQ")
    out = set()
    for g in G.exprs:
        p = sympy.Poly(g, *xs)
        out.add(frozenset((m, Fraction(int(c.p), int(c.q))) for m, c in p.terms()))
    return out

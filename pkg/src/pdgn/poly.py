"""Sparse polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
import re

from .errors import InvalidInput


class Ring:
    """Polynomial ring with named variables in a fixed order (x_1 > x_2 > ...)."""

    def __init__(self, names):
        self.names = tuple(names)
        self.index = {name: r for r, name in enumerate(self.names)}
        if len(self.index) != len(self.names):
            raise InvalidInput("duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def var(self, name) -> "Polynomial":
        u = [0] * self.nvars
        u[self.index[name]] = 1
        return Polynomial(self, {tuple(u): Fraction(1)})

    def monomial(self, exps, coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): Fraction(coeff)})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def format_var(self, r) -> str:
        return self.names[r]

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)


class PluckerRing(Ring):
    """Variables P_I for the k-subsets I of 1..n, in the given index order."""

    def __init__(self, k, n, subsets=None):
        self.k, self.n = k, n
        subsets = tuple(combinations(range(1, n + 1), k)) if subsets is None else \
            tuple(tuple(sorted(s)) for s in subsets)
        self.subsets = subsets
        super().__init__(subsets)

    def P(self, subset) -> "Polynomial":
        return self.var(tuple(sorted(subset)))

    def format_var(self, r) -> str:
        return "P_{" + "".join(str(x) for x in self.names[r]) + "}"


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero Fractions."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        clean = {}
        for u, c in terms.items():
            c = Fraction(c)
            if c:
                if len(u) != ring.nvars:
                    raise InvalidInput("exponent vector has the wrong length")
                clean[tuple(u)] = c
        self.terms = clean
        self._hash = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def _combine(self, other, sign):
        if not isinstance(other, Polynomial):
            other = Polynomial(self.ring, {(0,) * self.ring.nvars: other})
        out = dict(self.terms)
        for u, c in other.terms.items():
            out[u] = out.get(u, 0) + sign * c
        return Polynomial(self.ring, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Polynomial(self.ring, {u: -c for u, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(self.ring, {u: c * other for u, c in self.terms.items()})
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                m = tuple(x + y for x, y in zip(u, v))
                out[m] = out.get(m, 0) + a * b
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def degree(self) -> int:
        return max((sum(u) for u in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(u) for u in self.terms}) <= 1

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def sorted_terms(self):
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self.terms.items(), reverse=True)

    def monic(self) -> "Polynomial":
        """Scale so the lex-largest term has coefficient 1."""
        if not self.terms:
            return self
        lead = self.sorted_terms()[0][1]
        return self * (1 / lead)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    parts = []
    for u, c in f.sorted_terms():
        factors = []
        for r, e in enumerate(u):
            if e:
                name = f.ring.format_var(r)
                factors.extend([name] * e)
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_polynomial(ring: Ring, text: str) -> Polynomial:
    """Inverse of ``format_polynomial`` for the ring's own variable names."""
    lookup = {ring.format_var(r): r for r in range(ring.nvars)}
    text = text.strip()
    if text == "0":
        return ring.zero()
    terms = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise InvalidInput(f"cannot parse polynomial near {text[pos:]!r}")
        sign, body = m.group(1), m.group(2).strip()
        pos = m.end()
        coeff = Fraction(-1 if sign == "-" else 1)
        u = [0] * ring.nvars
        for factor in body.split("*"):
            factor = factor.strip()
            if factor in lookup:
                u[lookup[factor]] += 1
            else:
                try:
                    coeff *= Fraction(factor)
                except ValueError:
                    raise InvalidInput(f"unknown variable {factor!r}") from None
        terms[tuple(u)] = terms.get(tuple(u), 0) + coeff
    return Polynomial(ring, terms)

"""Pluecker ideals, their weight initial forms, and the symmetric-group action."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .errors import InvalidInput, NotInTropicalVariety
from .groebner import (ReducedBasis, TermOrder, _leading, _reduce, _to_engine,
                       buchberger_reduced, initial_form)
from .poly import PluckerRing, Polynomial
from .weights import WeightVector

PAIRINGS = ("ij|kl", "ik|jl", "il|jk")


def sort_sign(seq):
    """(sign, sorted tuple) of a sequence; sign 0 when an entry repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, None
    inversions = sum(1 for a, b in combinations(seq, 2) if a > b)
    return (-1) ** inversions, tuple(sorted(seq))


def plucker_ring(k: int, n: int, subsets=None) -> PluckerRing:
    return PluckerRing(k, n, subsets)


def _relation_2(R, i, j, k, l):
    P = R.P
    return P((i, j)) * P((k, l)) - P((i, k)) * P((j, l)) + P((i, l)) * P((j, k))


def plucker_generators(k: int, n: int, ring: PluckerRing = None) -> list:
    """Quadratic Pluecker relations generating I_{k,n}."""
    if ring is None:
        ring = PluckerRing(k, n)
    if (ring.k, ring.n) != (k, n):
        raise InvalidInput("ring does not match (k, n)")
    if k == 2 and n >= 4:
        return [_relation_2(ring, *q) for q in combinations(range(1, n + 1), 4)]
    if (k, n) == (3, 6):
        return exchange_relations(ring, dedupe=True)
    raise InvalidInput(f"unsupported (k, n) = ({k}, {n})")


def exchange_relations(ring: PluckerRing, dedupe=True) -> list:
    """sum_r (-1)^r P_{I+j_r} P_{J-j_r} over 2-subsets I... of size k-1 and J of size k+1."""
    k, n = ring.k, ring.n
    out, seen = [], set()
    for I in combinations(range(1, n + 1), k - 1):
        for J in combinations(range(1, n + 1), k + 1):
            f = ring.zero()
            for r, j in enumerate(J):
                s1, left = sort_sign(I + (j,))
                if not s1:
                    continue
                s2, right = sort_sign(J[:r] + J[r + 1:])
                f = f + ring.P(left) * ring.P(right) * ((-1) ** r * s1 * s2)
            if not f:
                continue
            if dedupe:
                g = f.monic()
                if g in seen:
                    continue
                seen.add(g)
            out.append(f)
    return out


def ring_weights(ring: PluckerRing, w) -> tuple:
    """Weights in the ring's variable order, from a WeightVector or a plain sequence."""
    if isinstance(w, WeightVector):
        if (w.k, w.n) != (ring.k, ring.n):
            raise InvalidInput("weight vector does not match the ring")
        d = w.as_dict()
        return tuple(d[s] for s in ring.subsets)
    w = tuple(w)
    if len(w) != ring.nvars:
        raise InvalidInput("weight vector length does not match the ring")
    return w


@dataclass
class Gr2Initial:
    generators: list
    dropped: dict = field(default_factory=dict)  # quadruple -> dropped pairing or None


def gr2_initial_generators(w: WeightVector, ring: PluckerRing = None) -> Gr2Initial:
    """Initial forms of the three-term relations, checking the four-point condition."""
    if w.k != 2:
        raise InvalidInput("need a weight vector over 2-subsets")
    n = w.n
    ring = ring or PluckerRing(2, n)
    wd = w.as_dict()
    weights = ring_weights(ring, w)
    gens, dropped = [], {}
    for q in combinations(range(1, n + 1), 4):
        i, j, k, l = q
        sums = [wd[(i, j)] + wd[(k, l)], wd[(i, k)] + wd[(j, l)], wd[(i, l)] + wd[(j, k)]]
        low = min(sums)
        if sums.count(low) < 2:
            raise NotInTropicalVariety(f"four-point condition fails at {q}")
        dropped[q] = PAIRINGS[sums.index(max(sums))] if max(sums) > low else None
        gens.append(initial_form(_relation_2(ring, *q), weights))
    return Gr2Initial(gens, dropped)


# -- symmetric group action --------------------------------------------------


def _check_perm(sigma, n):
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise InvalidInput(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def _variable_map(ring: PluckerRing, sigma):
    """Index map r -> (sign, r') for P_I -> sign * P_{sort sigma(I)}."""
    sigma = _check_perm(sigma, ring.n)
    out = []
    for s in ring.subsets:
        sign, img = sort_sign(sigma[x - 1] for x in s)
        out.append((sign, ring.index[img]))
    return out


def signed_permutation_action(p, sigma):
    """Apply sigma to a Polynomial, ReducedBasis (generators) or WeightVector."""
    if isinstance(p, WeightVector):
        sigma = _check_perm(sigma, p.n)
        mapping = {}
        for s, x in p.as_dict().items():
            _, img = sort_sign(sigma[v - 1] for v in s)
            mapping[img] = x
        return WeightVector.from_mapping(p.k, p.n, mapping, p.subsets, p.order)
    if isinstance(p, ReducedBasis):
        return [signed_permutation_action(g, sigma) for g in p.generators]
    if isinstance(p, Polynomial):
        vm = _variable_map(p.ring, sigma)
        terms = {}
        for u, c in p.terms.items():
            v = [0] * len(u)
            sign = 1
            for r, e in enumerate(u):
                if e:
                    s, r2 = vm[r]
                    v[r2] += e
                    sign *= s ** e
            terms[tuple(v)] = c * sign
        return Polynomial(p.ring, terms)
    raise InvalidInput(f"cannot act on {type(p).__name__}")


@dataclass
class OrbitPartition:
    classes: list  # lists of input indices, each sorted, ordered by first member
    witnesses: dict  # index -> (representative index, sigma) for non-representatives

    def class_of(self, idx) -> int:
        return next(r for r, c in enumerate(self.classes) if idx in c)


def _contained(gens_engine, basis_engine, order):
    return all(not _reduce(g, basis_engine, order) for g in gens_engine)


def orbit_classify(bases, n: int, confirm: bool = True) -> OrbitPartition:
    """Partition reduced bases (of ideals sharing a Hilbert function) into S_n orbits.

    A permutation sigma identifies basis a with basis b when every signed
    image of a generator of a reduces to zero modulo b; equal Hilbert functions
    then force sigma(I_a) = I_b.  With ``confirm`` each witness is re-checked
    by recomputing the reduced basis of sigma(I_a) and comparing exactly.
    """
    if not bases:
        return OrbitPartition([], {})
    ring = bases[0].ring
    order = TermOrder(ring.nvars, bases[0].weights)
    engine = []
    for b in bases:
        if b.ring != ring or b.weights != bases[0].weights:
            raise InvalidInput("bases must share ring and term order")
        gens = [_to_engine(g, order) for g in b.generators]
        engine.append([(_leading(g, order), g) for g in gens])
    perms = list(permutations(range(1, n + 1)))

    def image(idx, sigma):
        return [_to_engine(signed_permutation_action(g, sigma), order)
                for g in bases[idx].generators]

    reps, classes, witnesses = [], [], {}
    for idx in range(len(bases)):
        placed = False
        for c, rep in enumerate(reps):
            for sigma in perms:
                first = _to_engine(signed_permutation_action(bases[rep].generators[0], sigma), order)
                if _reduce(first, engine[idx], order):
                    continue
                if _contained(image(rep, sigma), engine[idx], order):
                    if confirm:
                        moved = buchberger_reduced(
                            [signed_permutation_action(g, sigma) for g in bases[rep].generators],
                            bases[0].weights, ring)
                        if set(moved.generators) != set(bases[idx].generators):
                            continue
                    classes[c].append(idx)
                    witnesses[idx] = (rep, sigma)
                    placed = True
                    break
            if placed:
                break
        if not placed:
            reps.append(idx)
            classes.append([idx])
    return OrbitPartition(classes, witnesses)

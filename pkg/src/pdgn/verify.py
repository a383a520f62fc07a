"""Verification runs shared by the command line and the acceptance tests.

Each function returns plain dictionaries: a list of named checks, each with
a pass flag and, when it fails, a counterexample.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from .atlas import monomial_free
from .errors import InvalidInput, NotInTropicalVariety
from .flows import plabic_weight_vector
from .groebner import buchberger_reduced, initial_ideal
from .plabic import kw_graph
from .plucker import gr2_initial_generators, plucker_generators, ring_weights
from .polygon import (Triangulation, a_degree_vector, enumerate_triangulations, flip_diagonal,
                      x_degree_vector)
from .poly import PluckerRing
from .tree import (EXCHANGE_AFTER, EXCHANGE_BEFORE, edge_for_diagonal, four_point_check,
                   inner_edge_regions, mutation_exchange, role_pairing,
                   tree_from_triangulation, tree_weight_vector)
from .weights import WeightVector

ENGINES = ("generators", "buchberger")


def check(name, ok, counterexample=None) -> dict:
    out = {"name": name, "pass": bool(ok)}
    if not ok:
        out["counterexample"] = counterexample
    return out


def _initial_forms(w: WeightVector, ring):
    try:
        return gr2_initial_generators(w, ring), None
    except NotInTropicalVariety as exc:
        return None, str(exc)


def gr2_case(t: Triangulation, engine: str = "generators") -> dict:
    """All Gr(2,n) checks for one triangulation."""
    if engine not in ENGINES:
        raise InvalidInput(f"engine must be one of {ENGINES}")
    n = t.n
    wt = tree_weight_vector(tree_from_triangulation(t))
    wg = plabic_weight_vector(kw_graph(t))
    checks = [
        check("tree_degree_equals_a_degree", list(wt.entries) == list(a_degree_vector(t)),
              {"tree": list(wt.entries), "a_degree": list(a_degree_vector(t))}),
        check("plabic_degree_equals_x_degree", list(wg.entries) == list(x_degree_vector(t)),
              {"plabic": list(wg.entries), "x_degree": list(x_degree_vector(t))}),
    ]
    ok, quad = four_point_check(wg, sign=1)
    checks.append(check("four_point_plabic", ok, {"quadruple": quad}))
    ok, quad = four_point_check(wt, sign=-1)
    checks.append(check("four_point_tree", ok, {"quadruple": quad}))

    ring = PluckerRing(2, n)
    tree_side, err_t = _initial_forms(-wt, ring)
    plabic_side, err_g = _initial_forms(wg, ring)
    if tree_side is None or plabic_side is None:
        checks.append(check("initial_forms_agree", False, {"error": err_t or err_g}))
    else:
        quads = list(combinations(range(1, n + 1), 4))
        diff = [list(q) for q, a, b in zip(quads, tree_side.generators, plabic_side.generators)
                if a != b]
        checks.append(check("initial_forms_agree", not diff, {"quadruples": diff}))
        if engine == "buchberger":
            gens = plucker_generators(2, n, ring)
            full_t = initial_ideal(gens, ring_weights(ring, -wt))
            full_g = initial_ideal(gens, ring_weights(ring, wg))
            from_forms = buchberger_reduced(plabic_side.generators, None, ring)
            checks.append(check("buchberger_ideals_equal", full_t == full_g,
                                {"tree": full_t.to_strings(), "plabic": full_g.to_strings()}))
            checks.append(check("buchberger_matches_generators", full_g == from_forms,
                                {"buchberger": full_g.to_strings(),
                                 "generators": from_forms.to_strings()}))
    return {"triangulation": t.to_dict(), "checks": checks,
            "pass": all(c["pass"] for c in checks)}


def _gr2_job(args):
    data, engine = args
    return gr2_case(Triangulation.from_dict(data), engine)


def gr2_verify(n: int, engine: str = "generators", jobs: int = 1) -> dict:
    """Run ``gr2_case`` over every triangulation of the n-gon."""
    limit = 8 if engine == "generators" else 6
    if engine not in ENGINES:
        raise InvalidInput(f"engine must be one of {ENGINES}")
    if not 4 <= n <= limit:
        raise InvalidInput(f"n must lie in 4..{limit} for the {engine} engine")
    work = [(t.to_dict(), engine) for t in enumerate_triangulations(n)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cases = list(pool.map(_gr2_job, work))
    else:
        cases = [_gr2_job(w) for w in work]
    failed = [c for c in cases if not c["pass"]]
    return {"n": n, "engine": engine, "checked": len(cases),
            "checks": [check("all_triangulations", not failed,
                             [c["triangulation"] for c in failed])],
            "failures": failed}


def mutation_case(t: Triangulation, d) -> dict:
    """Flip ``d``, recompute the degenerate relations, and compare with the prediction."""
    d = tuple(sorted(d))
    if d not in t.diagonal_set:
        raise InvalidInput(f"{d} is not a diagonal of the triangulation")
    tr = tree_from_triangulation(t)
    e = edge_for_diagonal(t, d)
    regions = inner_edge_regions(tr, e)
    flipped = flip_diagonal(t, d)
    ring = PluckerRing(2, t.n)
    before = gr2_initial_generators(-tree_weight_vector(tr), ring)
    after = gr2_initial_generators(-tree_weight_vector(tree_from_triangulation(flipped)), ring)
    quads = list(combinations(range(1, t.n + 1), 4))
    changed = {q for q, a, b in zip(quads, before.generators, after.generators) if a != b}
    records = mutation_exchange(tr, e)
    predicted = {r.quad for r in records if r.meets_all_regions}
    wrong_form = []
    listing = []
    for r in records:
        if r.quad not in changed:
            continue
        rb = role_pairing(regions, r.quad, before.dropped[r.quad])
        ra = role_pairing(regions, r.quad, after.dropped[r.quad])
        listing.append({"quadruple": list(r.quad), "roles": r.roles,
                        "dropped_before": before.dropped[r.quad],
                        "dropped_after": after.dropped[r.quad],
                        "role_before": rb, "role_after": ra})
        if (rb, ra) != (EXCHANGE_BEFORE, EXCHANGE_AFTER):
            wrong_form.append(list(r.quad))
    checks = [
        check("changed_iff_all_regions", changed == predicted,
              {"unexpected": sorted(map(list, changed - predicted)),
               "missing": sorted(map(list, predicted - changed))}),
        check("exchange_form", not wrong_form, {"quadruples": wrong_form}),
    ]
    return {
        "triangulation": t.to_dict(), "diagonal": list(d),
        "flipped": flipped.to_dict(), "edge": list(e),
        "regions": {name: sorted(getattr(regions, name)) for name in "ADEC"},
        "case": regions.case, "changed": listing, "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }


def tropical_check(w: WeightVector) -> dict:
    """Four-point test for k=2; initial ideal and monomial test for Gr(3,6)."""
    if w.k == 2:
        ok, quad = four_point_check(w, sign=1)
        checks = [check("four_point", ok, {"quadruple": list(quad) if quad else None})]
        return {"k": 2, "n": w.n, "checks": checks, "pass": ok}
    if (w.k, w.n) == (3, 6):
        ring = PluckerRing(3, 6)
        ideal = initial_ideal(plucker_generators(3, 6, ring), ring_weights(ring, w))
        binomial, free = monomial_free(ideal)
        checks = [check("monomial_free", free, {"initial_ideal": ideal.to_strings()})]
        return {"k": 3, "n": 6, "binomial": binomial, "generators": len(ideal),
                "initial_ideal": ideal.to_strings(), "checks": checks, "pass": free}
    raise InvalidInput(f"unsupported (k, n) = ({w.k}, {w.n})")

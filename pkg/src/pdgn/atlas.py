"""The 34 reduced plabic graphs for Gr(3,6) and their weight vectors.

Reference data for the dictionary table ships in ``REFERENCE_ROWS``: internal face
labels, weight vector (in ``paper36_order``), cone class, the recorded
permutation and an opaque seed number, verbatim except that the
basis order's eighteenth entry is read as 256.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import csv
import io
import json

from .errors import StructuralError, UnsupportedShape
from .flows import find_perfect_orientation, plabic_weight_vector
from .groebner import contains_monomial, initial_ideal, is_monomial_free
from .plabic import (BLACK, WHITE, PlabicGraph, enumerate_move_class, face_labels,
                     from_embedding, normalize, pi_kn, trip_permutation)
from .plucker import orbit_classify, plucker_generators, ring_weights
from .poly import PluckerRing
from .weights import PAPER36, WeightVector, paper36_order


CLASS_NAMES = ("GG", "EEFF1", "EEFF2", "EFFG", "EEEG", "EEFG")

# Cone types of the tropical Grassmannian as listed in the reference (EEFG appears twice there).
LISTED_TYPES = ("FFGG", "EEEE", "EEFF1", "EEFF2", "EEFG", "EEEG", "EEFG")

REFERENCE_ROWS = (
    ("135 235 145 136", "0,0,1,1,1,1,1,1,1,4,1,1,1,1,1,4,4,4,5,5", "GG", "123456", 49),
    ("124 246 346 256", "0,0,0,3,0,0,3,3,4,4,3,3,4,4,4,4,4,4,4,7", "GG", "134562", 23),
    ("125 235 245 256", "0,0,1,1,0,1,1,2,2,5,3,3,3,3,3,5,3,3,5,6", "EEFF1", "124563", 17),
    ("235 136 236 356", "0,0,0,0,0,0,0,1,1,2,0,0,0,1,1,2,2,2,3,5", "EEFF1", "123456", 11),
    ("124 125 145 245", "0,0,2,3,1,2,3,2,3,6,4,4,4,4,4,6,5,5,6,6", "EEFF1", "135642", 15),
    ("124 125 245 256", "0,0,1,2,0,1,2,2,3,5,4,4,4,4,4,5,4,4,5,6", "EEFF1", "134562", 27),
    ("235 236 256 356", "0,0,0,0,0,0,0,2,2,3,1,1,1,2,2,3,2,2,3,6", "EEFF1", "123564", 29),
    ("136 236 346 356", "0,0,0,1,0,0,1,2,2,2,0,0,1,2,2,2,3,3,3,6", "EEFF1", "312456", 12),
    ("236 346 256 356", "0,0,0,1,0,0,1,3,3,3,1,1,2,3,3,3,3,3,3,7", "EEFF1", "312564", 28),
    ("134 136 146 346", "0,0,0,3,1,1,3,2,3,3,1,1,3,2,3,3,5,5,5,6", "EEFF1", "356421", 9),
    ("134 145 136 146", "0,0,1,3,2,2,3,2,3,4,2,2,3,2,3,4,6,6,6,6", "EEFF1", "345612", 8),
    ("124 134 145 146", "0,0,1,4,2,2,4,2,4,5,3,3,4,3,4,5,6,6,6,6", "EEFF1", "145632", 32),
    ("125 235 145 245", "0,0,2,2,1,2,2,2,2,6,3,3,3,3,3,6,4,4,6,6", "EEFF1", "125643", 14),
    ("124 134 146 346", "0,0,0,4,1,1,4,2,4,4,2,2,4,3,4,4,5,5,5,6", "EEFF1", "156432", 31),
    ("125 235 256 356", "0,0,0,0,0,0,0,2,2,4,2,2,2,3,3,4,3,3,4,6", "EEFF2", "125346", 30),
    ("124 134 125 145", "0,0,1,3,1,1,3,1,3,5,3,3,4,3,4,5,5,5,5,5", "EEFF2", "163452", 33),
    ("134 136 346 356", "0,0,0,2,0,0,2,2,3,3,0,0,2,2,3,3,4,4,4,6", "EEFF2", "512634", 10),
    ("136 236 146 346", "0,0,0,2,1,1,2,2,2,2,1,1,2,2,2,2,4,4,4,6", "EEFF2", "612534", 13),
    ("124 145 245 146", "0,0,2,4,2,3,4,3,4,6,4,4,4,4,4,6,6,6,7,7", "EEFF2", "153462", 16),
    ("235 245 236 256", "0,0,1,1,0,1,1,2,2,4,2,2,2,2,2,4,2,2,4,6", "EEFF2", "126345", 18),
    ("125 135 235 145", "0,0,1,1,1,1,1,1,1,5,2,2,2,2,2,5,4,4,5,5", "EFFG", "123456", 43),
    ("135 235 136 356", "0,0,0,0,0,0,0,1,1,3,0,0,0,1,1,3,3,3,4,5", "EFFG", "345612", 45),
    ("236 246 346 256", "0,0,0,2,0,0,2,3,3,3,2,2,3,3,3,3,3,3,3,7", "EFFG", "612345", 26),
    ("124 146 246 346", "0,0,0,4,1,1,4,3,4,4,3,3,4,4,4,4,5,5,5,7", "EFFG", "134562", 21),
    ("134 135 145 136", "0,0,1,2,1,1,2,1,2,4,1,1,2,1,2,4,5,5,5,5", "EFFG", "561234", 47),
    ("124 245 246 256", "0,0,1,3,0,1,3,3,4,5,4,4,4,4,4,5,4,4,5,7", "EFFG", "356124", 24),
    ("245 236 146 246", "0,0,1,3,1,2,3,3,3,4,3,3,3,3,3,4,4,4,5,7", "EEEG", "265341", 20),
    ("134 125 135 356", "0,0,0,1,0,0,1,1,2,4,1,1,2,2,3,4,4,4,4,5", "EEEG", "126534", 48),
    ("125 135 235 356", "0,0,0,0,0,0,0,1,1,4,1,1,1,2,2,4,3,3,4,5", "EEFG", "342156", 42),
    ("134 125 135 145", "0,0,1,2,1,1,2,1,2,5,2,2,3,2,3,5,5,5,5,5", "EEFG", "563421", 44),
    ("134 135 136 356", "0,0,0,1,0,0,1,1,2,3,0,0,1,1,2,3,4,4,4,5", "EEFG", "215634", 46),
    ("245 236 246 256", "0,0,1,2,0,1,2,3,3,4,3,3,3,3,3,4,3,3,4,7", "EEFG", "156342", 25),
    ("236 146 246 346", "0,0,0,3,1,1,3,3,3,3,2,2,3,3,3,3,4,4,4,7", "EEFG", "634215", 19),
    ("124 245 146 246", "0,0,1,4,1,2,4,3,4,5,4,4,4,4,4,5,5,5,6,7", "EEFG", "321564", 22),
)

SOURCE_SET = frozenset({1, 2, 3})
DEGREE_SIDE = "right"


def _subset(word):
    return tuple(int(c) for c in word)



@dataclass(frozen=True)
class TableRow:
    labels: frozenset
    weight: tuple
    class_name: str
    permutation: str
    bcl_id: int


def reference_table() -> list:
    return [TableRow(frozenset(_subset(w) for w in labels.split()),
                     tuple(int(x) for x in weight.split(",")), cls, perm, bcl)
            for labels, weight, cls, perm, bcl in REFERENCE_ROWS]


def _grid_graph() -> PlabicGraph:
    """Grid graph of the 3x3 rectangle, each node split into a white/black pair.

    Box (i, j) holds a white vertex joined to its east and north neighbours
    and a black vertex joined to west and south; row i exits to boundary i
    on the left, column j exits to boundary 4+j at the bottom.
    """
    k, m = 3, 3
    coords, colors, edges = {}, {}, []
    for i in range(1, k + 1):
        coords[i] = (-(m + 1), -i)
    for j in range(1, m + 1):
        coords[k + (m - j + 1)] = (-j, -(k + 1))
    ids = {}
    nxt = 7
    for i in range(1, k + 1):
        for j in range(1, m + 1):
            for part, dx, dy, col in (("u", .2, .2, WHITE), ("v", -.2, -.2, BLACK)):
                ids[i, j, part] = nxt
                coords[nxt] = (-(j + dx), -i + dy)
                colors[nxt] = col
                nxt += 1
            edges.append((ids[i, j, "u"], ids[i, j, "v"]))
    for i in range(1, k + 1):
        for j in range(1, m + 1):
            east = ids[i, j + 1, "v"] if j < m else i
            south = ids[i + 1, j, "u"] if i < k else k + (m - j + 1)
            edges.append((ids[i, j, "u"], east))
            edges.append((ids[i, j, "v"], south))
    degree = {}
    for a, b in edges:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    leaves = {v for v in colors if degree[v] == 1}
    edges = [e for e in edges if not set(e) & leaves]
    for v in leaves:
        del colors[v], coords[v]
    return normalize(from_embedding(6, coords, colors, edges, range(1, 7)))


def seed_graph_36() -> PlabicGraph:
    """A reduced plabic graph for Gr(3,6), validated before use."""
    g = _grid_graph()
    if trip_permutation(g) != pi_kn(3, 6):
        raise StructuralError("seed graph has the wrong trip permutation")
    if len(g.faces()) != 10 or len(g.internal_faces()) != 4:
        raise StructuralError("seed graph has the wrong face counts")
    labels = face_labels(g)
    cyclic = {tuple(sorted((i - 1 + r) % 6 + 1 for r in range(3))) for i in range(1, 7)}
    if set(labels.boundary_labels) != cyclic:
        raise StructuralError("seed boundary faces are not the cyclic intervals")
    if frozenset(labels.internal_labels) not in {row.labels for row in reference_table()}:
        raise StructuralError("seed internal labels are not a dictionary row")
    return g


@dataclass
class AtlasRow:
    internal_labels: frozenset
    weight: WeightVector
    graph: PlabicGraph = field(repr=False)
    table_index: int = -1
    class_name: str = ""
    bcl_id: int = 0
    permutation: str = ""

    def labels_text(self) -> str:
        return ";".join("".join(map(str, s)) for s in sorted(self.internal_labels))


def graph_weight(g: PlabicGraph) -> WeightVector:
    o = find_perfect_orientation(g, SOURCE_SET)
    if o.source_set != SOURCE_SET:
        raise StructuralError("source set {1,2,3} is not achievable")
    return plabic_weight_vector(g, paper36_order(), o, "paper36", side=DEGREE_SIDE)


def enumerate_rows() -> list:
    """One row per graph in the move class of the seed, weights attached."""
    graphs = enumerate_move_class(seed_graph_36())
    if len(graphs) != 34:
        raise StructuralError(f"expected 34 graphs, found {len(graphs)}")
    reference = {row.labels: r for r, row in enumerate(reference_table())}
    rows = []
    for g in graphs:
        labels = frozenset(face_labels(g).internal_labels)
        row = AtlasRow(labels, graph_weight(g), g)
        if labels in reference:
            ref = reference_table()[reference[labels]]
            row.table_index = reference[labels]
            row.bcl_id, row.permutation = ref.bcl_id, ref.permutation
        rows.append(row)
    rows.sort(key=lambda r: (r.table_index, r.labels_text()))
    return rows


def _ideal_for(weight_entries):
    ring = PluckerRing(3, 6)
    w = WeightVector(3, 6, paper36_order(), weight_entries, "paper36")
    return initial_ideal(plucker_generators(3, 6, ring), ring_weights(ring, w))


def initial_ideals(rows, jobs: int = 1) -> list:
    weights = [r.weight.entries for r in rows]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_ideal_for, weights))
    return [_ideal_for(w) for w in weights]


def name_classes(partition, rows) -> dict:
    """Class index -> table name, by the column-3 labels of the members."""
    names = {}
    for c, members in enumerate(partition.classes):
        found = {reference_table()[rows[i].table_index].class_name for i in members
                 if rows[i].table_index >= 0}
        names[c] = found.pop() if len(found) == 1 else "?"
    return names


def atlas(jobs: int = 1, ideals=None) -> tuple:
    """(rows, ideals, partition): the 34 rows with class names filled in."""
    rows = enumerate_rows()
    ideals = ideals if ideals is not None else initial_ideals(rows, jobs)
    partition = orbit_classify(ideals, 6)
    names = name_classes(partition, rows)
    for c, members in enumerate(partition.classes):
        for i in members:
            rows[i].class_name = names[c]
    return rows, ideals, partition


def monomial_free(ideal) -> tuple:
    """(binomial, monomial_free) for an initial ideal's reduced basis."""
    try:
        return True, is_monomial_free(ideal)
    except UnsupportedShape:
        return False, not contains_monomial(ideal.generators, ideal.ring)


def class_report(rows, ideals, partition) -> dict:
    classes = []
    flags = [monomial_free(b) for b in ideals]
    for c, members in enumerate(partition.classes):
        classes.append({
            "class": rows[members[0]].class_name,
            "size": len(members),
            "members": [rows[i].labels_text() for i in members],
            "witnesses": {rows[i].labels_text(): {
                "representative": rows[rep].labels_text(),
                "sigma": "".join(map(str, sigma))}
                for i, (rep, sigma) in partition.witnesses.items() if i in members},
            "binomial": [flags[i][0] for i in members],
            "monomial_free": [flags[i][1] for i in members],
        })
    realized = {c["class"] for c in classes}
    distinct_types = sorted(set(LISTED_TYPES))
    return {
        "classes": classes,
        "class_count": len(classes),
        "notice": ("the reference list of seven cone types repeats EEFG and the reference basis "
                   "repeats 236 (read as 256); exactly 6 of 7 types are realized by plabic graphs "
                   "when the GG edge class is counted with the five maximal types"),
        "listed_types": list(LISTED_TYPES),
        "distinct_listed_types": distinct_types,
        "realized": sorted(realized),
    }


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["internal_labels", "weight", "class", "bcl_id"])
    for r in rows:
        writer.writerow([r.labels_text(), ",".join(map(str, r.weight.entries)),
                         r.class_name, r.bcl_id])
    return buf.getvalue()


def rows_to_json(rows) -> str:
    return json.dumps([{"internal_labels": r.labels_text().split(";"),
                        "weight": list(r.weight.entries), "class": r.class_name,
                        "bcl_id": r.bcl_id} for r in rows], indent=1)


def compare_with_table(rows, partition=None) -> list:
    """Human-readable mismatches against the embedded reference data."""
    problems = []
    ref = reference_table()
    if len(rows) != len(ref):
        problems.append(f"{len(rows)} rows instead of {len(ref)}")
    if {r.internal_labels for r in rows} != {t.labels for t in ref}:
        problems.append("internal label sets differ from the table")
    for r in rows:
        if r.table_index < 0:
            continue
        t = ref[r.table_index]
        if r.weight.entries != t.weight:
            problems.append(f"weight mismatch at {r.labels_text()}")
        if partition is not None and r.class_name != t.class_name:
            problems.append(f"class mismatch at {r.labels_text()}: {r.class_name} vs {t.class_name}")
    return problems

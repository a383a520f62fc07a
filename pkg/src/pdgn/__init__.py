"""Toric degenerations of Grassmannians from plabic graphs and triangulations.

Exact arithmetic throughout: triangulations and trees give A-, X- and tree
degrees, plabic graphs give flow degrees, and weight vectors give initial
ideals of Pluecker ideals through a built-in Buchberger engine.
"""

from .errors import (InvalidInput, NoFlowError, NotApplicable, NotInTropicalVariety,
                     ResourceError, StructuralError, UnsupportedShape)
from .flows import (find_perfect_orientation, all_perfect_orientations, plabic_degree,
                    plabic_weight_vector)
from .groebner import buchberger_reduced, initial_ideal, is_monomial_free
from .plabic import (PlabicGraph, canonical_key, enumerate_move_class, face_labels, kw_graph,
                     normalize, square_move, trip_permutation)
from .plucker import orbit_classify, plucker_generators, signed_permutation_action
from .polygon import (Triangulation, a_degree, connection_number, enumerate_triangulations,
                      flip_diagonal, palm_triangulation, x_degree)
from .tree import (LabelledTree, four_point_check, inner_edge_regions, tree_degree,
                   tree_from_triangulation, tree_mutation, tree_weight_vector)
from .weights import WeightVector

__version__ = "0.1.0"

"""Higher laminations for SL_m / PGL_m on polygons and annuli.

Exact truncated Laurent series over Q, their tropicalization by ``-val``,
flag configurations and their A/X coordinates, lattices in the affine
Grassmannian, good lifts and virtual configurations, monodromy lengths,
and the log-compactification experiment.
"""
from .charts import Chart
from .errors import *  # noqa: F401,F403
from .flags import (AffineFlag, FlagConfig, a_chart, f_ijk, generate_positive, is_positive_chart,
                    reconstruct_from_coords, torus_act)
from .lattice import Lattice, distance, f_trop_lattice, lattice_equal, smith_dvr
from .laurent import (LaurentSeries, PositiveWitness, ls_add, ls_div, ls_is_positive, ls_mul,
                      ls_val, neg_val, precision, retry_with_precision, t)
from .matrix import Matrix
from .monodromy import (AnnulusSpec, MonodromyDatum, NewtonPolygon, annulus_from_gluing, c_lengths,
                        char_poly, loop_length, monodromy)
from .triangulation import FlipMove, Triangulation, all_triangulations, fan_triangulation, flip
from .tropical import (Coweight, DominantCoweight, Order, dominance_compare, neg_w0,
                       pair_fundamental, standard_compare, trop_add, trop_mul)
from .virtual import (VirtualConfig, VirtualPoint, equivalent, extended_coord, glue_a, good_lift,
                      tropical_a_chart)
from .xcoords import g_edge, g_face, g_trop_from_f_trop, tropical_x_chart, x_chart

__version__ = "0.1.0"

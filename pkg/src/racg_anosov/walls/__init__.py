from .wall import Wall, canonical_prefix, make_wall, translate, walls_cross, separates
from .poset import WallPoset, poset_of_word, walls_of, linear_extensions, DEFAULT_EXTENSION_LIMIT
from .itinerary import Itinerary, efficient_itinerary, gamma_of
from .decomposition import (OVER_CAP, DEFAULT_BPP_CAP, bpp_constant, low_crossing_bound, decomposition_bound,
                            minimal_wall_low_crossings, disjoint_decomposition, DisjointDecomposition, Window)

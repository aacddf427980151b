from .coxeter import CoxeterSystem, parse_nerve, is_irreducible, is_finite, induced_subsystem
from .words import NormalForm, identity, normalize, multiply, invert, conjugate, support, in_standard_subgroup, right_descents, left_descents, parse_word, format_word
from .ball import enumerate_ball, random_geodesic, DEFAULT_RADIUS_CAP
from .builtins import BUILTIN_NERVES, builtin_system, load_system

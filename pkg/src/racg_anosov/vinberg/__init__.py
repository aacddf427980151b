from .cartan import (CartanMatrix, parse_rational, cartan_from_rows, load_cartan, geometric_cartan, validate_cartan,
                     is_fully_nondegenerate, is_symmetrizable, cartan_signature, is_negative_type, random_fully_nondegenerate,
                     DEFAULT_MINOR_CAP, DEFAULT_RANGE)
from .representation import SimplicialRep, build_rep, geometric_rep, evaluate, dual_rep
from .restriction import RestrictedRep, restrict

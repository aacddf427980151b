from .exact_lp import LPResult, exact_lp, cone_margin, in_cone, OPTIMAL, INFEASIBLE, UNBOUNDED
from .wall_geometry import WallGeometry, wall_geometry, halfspace_side, dual_wall, projective_point
from .domain import DomainApprox, tile_domain, DEFAULT_DEPTH_CAP
from .halfcone import (HalfConeApprox, DepthRecord, NestingProbeReport, halfcone_approx, halfcone_containment_check,
                       halfspaces_nest, point_margins, nesting_probe, classify, halfcone_duality_check, shared_face_vertices,
                       CROSSING, NESTED, STRONGLY_NESTED_AT_DEPTH, MARGIN_DECAY, INCONCLUSIVE)
from .hilbert import PolyhedralBody, BallBody, hilbert_distance, hilbert_diameter, hilbert_gap_bound_check
from .sigma import SigmaPolytope, MinDomainApprox, sigma_polytope, min_domain_approx, satisfies_sigma_inequalities
from .appendix import CertificationReport, Incidence, appendix_certify, certify_a1, certify_a2, fixed_subspace, DEFAULT_DEPTHS

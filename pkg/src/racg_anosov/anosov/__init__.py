from .singular import (SingularReport, singular_report, mu_vector, second_compound, compound, check_additivity, check_transversality,
                       additivity_sweep, transversality_sweep, float_product, GAP_THRESHOLD)
from .gaps import (GapTrace, GapFit, GapScan, gap_trace, trace_from_matrices, trace_from_rows, load_trace, fit_gaps,
                   fit_regularity, uniform_regularity_check, gap_scan, CSV_HEADER, DEFAULT_B_CAP)
from .diagnostics import convergence_check, halfcone_subspace_check, projective_angle, cone_distance, UNDEFINED, DEFINED
from ..projgeom.hilbert import hilbert_gap_bound_check

"""Dense minors in graphs of large average degree.

Certified extraction of dense t-vertex minors, the extremal constructions
that bound what can be guaranteed, and brute-force oracles for small cases.
"""

from .graph import (Graph, GraphError, avg_degree, complete_graph, contract, cycle_graph,
                    disjoint_union, empty_graph, induced, path_graph, petersen_graph)
from .models import (ContractionTrace, InvalidModelError, MinorModel, VerificationReport,
                     model_edge_count, realized_edges, verify_model)
from .reduction import (PreconditionError, ReductionResult, mader_reduce, minimalize_vertices,
                        removal_preserves)
from .extraction import (DensityCertificate, ExtractionParams, RestartNeeded, SeedOutcome,
                         case2_extract, densify_to_t, extend_to_t, extract_dense_minor,
                         find_dense_seed, sqrt2_lower)
from .constructions import (CockadeSpec, SGraphSpec, cockade, f_bound, k5_minus,
                            line_graph_complete, path_power, s_graph, theorem13_witness)

__version__ = "0.1.0"

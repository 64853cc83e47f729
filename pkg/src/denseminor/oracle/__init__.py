"""Exact brute-force engines and desk-scale claim verifiers."""

from .connectivity import Separation, is_k_connected, min_separation
from .enumeration import (EnumerationCapError, canonical_form, enumerate_graphs,
                          graph_classes, is_isomorphic)
from .search import (SearchResult, has_clique_minor, has_minor, has_subgraph,
                     max_minor_edges, max_subgraph_edges)
from .verify import (SMALL_T_VALUES, Report, minor_subgraph_mismatches, verify_6v12e_claim,
                     verify_6v12e_report, verify_extremal11, verify_lemma32, verify_small_theorem)

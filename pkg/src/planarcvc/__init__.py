"""11/3k kernelization for Connected Vertex Cover on planar graphs."""

from .embedding import Embedding, Face, NonPlanarGraphError, embed, enumerate_faces
from .facematch import AuxGraph, PlanarizedMatching, build_aux_graph, planarize_matching, run_phase2
from .generators import (
    gen_exception_graph,
    gen_random_planar,
    gen_tightness,
    validate_tightness,
)
from .graph import Graph, VertexId, graph_from_edges
from .matching import Matching, matching_bound_holds, maximum_matching
from .oracle import CoverCertificate, TooLargeError, decide_cvc, minimum_cvc, verify_cvc
from .pipeline import (
    Instance,
    Kernel,
    KernelOutcome,
    No,
    NonPlanarInputError,
    NoReason,
    Partition,
    ReductionJournal,
    check_size_bound,
    kernelize,
    partition_bound_holds,
    lift_solution,
    partition_stats,
)
from .reductions import (
    ReductionStep,
    RuleId,
    apply_rule,
    detect_rule,
    run_phase1,
)

__all__ = [
    "AuxGraph",
    "CoverCertificate",
    "Embedding",
    "Face",
    "Graph",
    "Instance",
    "Kernel",
    "KernelOutcome",
    "Matching",
    "No",
    "NoReason",
    "NonPlanarGraphError",
    "NonPlanarInputError",
    "Partition",
    "PlanarizedMatching",
    "ReductionJournal",
    "ReductionStep",
    "RuleId",
    "TooLargeError",
    "VertexId",
    "apply_rule",
    "build_aux_graph",
    "check_size_bound",
    "decide_cvc",
    "detect_rule",
    "embed",
    "enumerate_faces",
    "gen_exception_graph",
    "gen_random_planar",
    "gen_tightness",
    "graph_from_edges",
    "kernelize",
    "partition_bound_holds",
    "matching_bound_holds",
    "lift_solution",
    "maximum_matching",
    "minimum_cvc",
    "partition_stats",
    "planarize_matching",
    "run_phase1",
    "run_phase2",
    "validate_tightness",
    "verify_cvc",
]

"""hexcube: 3-valent plane graphs with q-gonal and hexagonal faces.

Exhaustive isomorph-free generation, isometric hypercube embedding
(partial-cube recognition with certificates), pentagonal-inequality scans,
zone analysis and Goldberg-Coxeter subdivision of the cube, plus planar_code
interchange and a command-line front end.
"""

from .bruteforce import enumerate_rotation_maps
from .canonical import (
    are_isomorphic,
    automorphism_count,
    canonical_code,
    is_chiral,
    rooted_code,
)
from .embedding import (
    EmbeddingSearchOutcome,
    FiveGonalWitness,
    HypercubeEmbedding,
    NonBipartiteError,
    RecognitionFailure,
    RecognitionResult,
    ThetaClasses,
    five_gonal_scan,
    is_five_gonal,
    recognize_partial_cube,
    search_halfcube_embedding,
    search_scale_embedding,
    t_embed_obstruction,
    theta_classes,
    verify_scale_embedding,
)
from .generator import FILTER_NAMES, GenSpec, GenerationResult, generate_q6
from .goldberg import goldberg_coxeter_cube
from .named import make_named, named_graph_names
from .planar_code import (
    PlanarCodeError,
    graph_to_planar_code,
    read_planar_code,
    to_dot,
    write_planar_code,
)
from .plane_graph import (
    Bipartition,
    Face,
    MapError,
    PlaneGraph,
    all_pairs_distances,
    alpha,
    bipartition,
    dual,
    face_vector,
    is_q6,
    is_three_connected,
    is_three_valent,
    mirror,
    trace_faces,
    truncate,
)
from .reports import (
    CheckReport,
    TheoremReport,
    ZoneSurveyReport,
    check_graph,
    check_many,
    reproduce_zone_computation,
    verify_theorem,
)
from .zones import (
    OddFaceError,
    Zone,
    edge_based_self_intersection,
    face_isometric,
    opposite_edge,
    trace_zones,
    zone_clean,
    zone_report,
)

__version__ = "0.1.0"

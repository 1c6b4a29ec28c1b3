"""Covering-type bounds for closed surfaces via mod-2 simplicial
(co)homology: complexes, GF(2) linear algebra, cup products, a
homotopy-preserving reduction pipeline, and the resulting vertex-count
certificates."""

from .bundled import bundled_names, bundled_text, load_bundled
from .cohomology import (
    Cochain,
    PairingTensor,
    coboundary_matrix,
    cochain_support,
    cup_1_1,
    h1_cocycle_basis,
    has_property_A,
    pairing_tensor,
    property_a_witness,
)
from .complexes import (
    MoveRecord,
    Simplex,
    SimplicialComplex,
    apply_move,
    build_complex,
    collapse_free_face,
    contract_edge,
    identify_vertices,
    make_simplex,
    remove_two_simplex,
)
from .errors import (
    CoveringTypeError,
    DomainError,
    InconsistencyError,
    MalformedInputError,
    NotFoundError,
    ParseError,
    PreconditionError,
    PropertyAViolationError,
    StageError,
)
from .fileformat import (
    ComplexFile,
    complex_to_text,
    parse_complex_file,
    parse_complex_text,
    write_complex_file,
)
from .gf2 import (
    Gf2Matrix,
    Gf2Vector,
    image_basis,
    kernel_basis,
    rank,
    solve,
    subspace_intersection,
)
from .homology import (
    ChainData,
    HomologyProfile,
    betti_numbers,
    chain_data,
    h2_epi_witness,
    homology_basis,
    homology_profile,
    surplus_cycle,
)
from .reduction import (
    BoundCertificate,
    ReductionTrace,
    certify_lower_bound,
    collapse_all,
    eliminate_maximal_edges,
    excise_to_surface_homology,
    reduce_to_certificate,
)
from .surfaces import (
    SurfaceCheckReport,
    SurfaceClass,
    build_nine_vertex_m2,
    check_closed_surface,
    classify_surface,
    covering_type,
    delta,
    orientable,
    pinch_and_fill,
    rho,
    surface_from_name,
)

__version__ = "0.1.0"

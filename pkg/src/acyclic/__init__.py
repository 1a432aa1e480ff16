"""Exact homological toolkit for acyclic spaces and perfect groups.

Integer Smith normal form, chain complexes with reduced homology, simplicial
complexes with join/suspension/wedge, finitely presented groups and their
abelianizations, small permutation groups, edge-path fundamental groups and
k-acyclicity reports.
"""

from .acyclicity import (
    CAVEAT,
    INFINITY,
    AcyclicityReport,
    analyze_chain,
    analyze_complex,
    analyze_presentation,
    homological_connectivity,
    k_acyclic,
)
from .chaincomplex import (
    ChainComplex,
    ChainComplexError,
    HomologyGroup,
    cohomology,
    direct_sum,
    homology,
    reduced_tensor,
    relative,
    shift,
)
from .fundgroup import Pi1Presentation, edge_path_presentation, pi1_abelianized
from .grouppres import (
    AbelianizationResult,
    Presentation,
    PresentationError,
    Word,
    abelianization,
    baumslag_solitar,
    commutator,
    cyclic,
    exponent_matrix,
    free,
    hatcher,
    higman,
    higman_n,
    is_perfect,
    presentation_complex_chain,
)
from .intlinalg import IntMatrix, SNFDecomposition, cokernel_structure, invariant_factors, snf
from .parsing import ParseError, parse_complex, parse_matrix, parse_presentation
from .permgroup import (
    FiniteGroup,
    GroupCapError,
    Permutation,
    alternating,
    from_cycles,
    generate,
    is_perfect_finite,
    satisfies,
)
from .simplicial import (
    SimplicialComplex,
    SimplicialError,
    chain_complex,
    circle,
    cone,
    from_maximal_simplices,
    join,
    rp2_6,
    sphere,
    suspension,
    torus7,
    wedge,
)

__version__ = "0.1.0"

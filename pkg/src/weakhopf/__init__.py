"""Finite-dimensional weak Hopf C*-algebras (C*-quantum groupoids) as dense block matrices."""
from .algebra import (
    AlgElement,
    BlockAlgebra,
    C,
    GaugedInvolution,
    LinearMapRep,
    adjoint,
    center_expectation,
    default_tol,
    flip,
    invert,
    is_positive,
    is_strictly_positive,
    mul,
    opposite_embed,
    recover_matrix_units,
    spectrum,
    sqrt_positive,
    standardize,
    tensor,
    tensor_elem,
    tensor_map,
    trace_canonical,
)
from .deform import (
    AdmissibleK,
    CanonicalElement,
    admissible_from_base,
    canonical_element,
    canonical_properties,
    check_kappa_squared_inner,
    deform,
    deform_to_involutive_base,
    is_admissible,
    sample_admissible,
    spectra_distinct,
    spectrum_invariant,
)
from .errors import WeakHopfError
from .hopf import (
    AXIOMS,
    CartanData,
    WeakHopf,
    antipode_inverse,
    cartan_source,
    cartan_target,
    check_axioms,
    check_f_separating,
    counit_source,
    counit_target,
    haar_measure,
    haar_projection,
    is_weak_kac,
)
from .instances import (
    FiniteGroupoid,
    function_algebra_from_table,
    function_algebra_wha,
    op_tensor_wha,
    pair_groupoid_wha,
)
from .io import load, save
from .report import StructureReport
from .separating import (
    SeparatingElement,
    check_projection_characterizations,
    gauge_from_separating,
    is_orthogonal_in_gauged,
    is_separating,
    mult_map,
    separating_from_gauge,
    symmetric_e,
)

__version__ = "0.1.0"

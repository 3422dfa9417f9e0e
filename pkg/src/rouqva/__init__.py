"""Exact symbolic verification of root-of-unity quantum vertex algebra data.

The package builds, at finite truncation and in exact arithmetic over
Q(zeta_p), the scalar and series data attached to a finite Cartan type at
a root of unity: bracket functionals and structure constants, the abelian
group of compatibility tuples with its canonical member, the exchange
operator on the generator span with its unitarity and Yang-Baxter checks,
delta-function decomposition identities, symmetric-group shuffle
combinatorics, and the quiver/Heisenberg decomposition data, each with an
executable verification.
"""

from .cartan import (
    CartanData,
    RootUnityCtx,
    bracket,
    bracket_constant,
    bracket_periodic,
    build_context,
    check_const_identities,
    struct_const,
    structure_constants,
)
from .exact import (
    CycloField,
    CycloScalar,
    LaurentPoly,
    cyclo_inverse,
    eval_zeta,
    get_field,
    laurent_substitute,
)
from .qcomb import (
    IntPoly,
    c_poly,
    check_antisym,
    check_c_poly_integrality,
    check_qb_mult,
    cyclotomic_poly,
    qbinom,
    qfactorial,
    qint,
)
from .qyb import (
    SCache,
    basis,
    build_ybe_tau,
    check_h_trivial,
    check_shift_equivariance,
    check_unitarity,
    check_xi_tilde_bracket,
    check_ybe,
    default_triple_sample,
    s_apply,
)
from .series import TruncSeries, capC, capE, check_E_identities, series_ops, theta_series
from .symcomb import check_shuffle_counts, check_sym_gps, compositions, enumerate_shuffles
from .tau import (
    TauTuple,
    canonical_tau,
    check_entry_shift_structure,
    check_kernel_equivalence,
    check_membership,
    check_zeta10,
    identity_tau,
    perturbed_tau,
    tau_group_op,
)
from .dist import (
    check_delta_decomposition,
    check_normal_order,
    check_partial_fraction_delta,
    iota_expand,
)
from .quiver import (
    Quiver,
    build_loops,
    build_quiver,
    check_arrow_counts,
    check_dft,
    heisenberg_gram,
)
from .cli import RunConfig, emit_report, main, run_suite

__version__ = "0.1.0"

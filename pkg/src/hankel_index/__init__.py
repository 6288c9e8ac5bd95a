"""Exact apolarity, rank ladders and Hankel indices of real binary forms."""

from .apolarity import (
    ApolarIdeal,
    Decomposition,
    Node,
    apolar_generators,
    catalecticant_kernel,
    form_from_apolar,
    generalized_decomposition,
    is_apolar_member,
    nodes_of,
)
from .corepoly import (
    BinaryForm,
    Gaussian,
    RootClass,
    RootProfile,
    RootSignature,
    apolar_pair,
    classify_roots,
    descartes_support_bound,
    form,
    parse_form,
    projective_support_bound,
    root_signature,
    sturm_count,
)
from .curve import ProjectedCurve, bound_report, gl_index, hankel_index, make_curve, scroll_type
from .errors import *  # noqa: F401,F403
from .quadforms import SymQuadForm, inertia, is_psd, middle_catalecticant, restrict
from .ranks import (
    ExistenceAnswer,
    RankInterval,
    RankReport,
    RootCondition,
    arrank,
    cbrank,
    crank,
    exists_almost_real,
    rank_report,
    rbrank,
    rrank,
    verify_certificate,
    verify_witness,
)
from .rays import (
    RayCase,
    RaySpec,
    VerificationReport,
    assemble_L,
    check_no_proper_divisor,
    construct_ray,
    construct_ray_numeric,
    exact_node_member,
    solve_coefficients,
    verify_ray,
)

__version__ = "0.1.0"

"""Discrete Hilbert transforms, sine/cosine re-expansion, and SU(2) summability tools."""

from .sequences import (
    BoundaryReport,
    Coeff1D,
    CoeffND,
    ParityVector,
    WeightExponent,
    boundary_vanish_check,
    l1_norm,
    load_sequence,
    log_weighted_sum,
    save_sequence,
    series_eval,
    weight_apply,
)
from .hilbert import (
    KINDS,
    TransformRequest,
    dht_even,
    dht_even_halved,
    dht_full,
    dht_mixed,
    dht_odd,
    dht_odd_halved,
    dht_tensor,
    transform,
)
from .reexpand import (
    ReexpandSpec,
    SummabilityReport,
    WeightedReexpansion,
    cos_to_sin,
    quadrature_oracle,
    quadrature_oracle_box,
    reexpand_nd,
    reexpand_weighted,
    sin_to_cos,
    summability_report,
)
from .weyl import (
    CentralCoeffTable,
    Q2Diagnostic,
    RootSystem,
    TelescopingResult,
    WeylDenomSq,
    character_coeff,
    character_coeff_quadrature,
    condition_q1_sum,
    diag_fourier_coeff,
    ext_fourier_table,
    parity_check,
    q2_diagnostic,
    schatten_lp_norm,
    su2_character,
    su2_sufficiency,
    su2_weights,
    telescoping_sum,
    weyl_denom_sq_coeffs,
    weyl_dimension,
)

__version__ = "0.1.0"

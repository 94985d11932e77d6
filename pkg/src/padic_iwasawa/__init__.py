"""Iwasawa-algebra measures over exact p-adic arithmetic, with Coleman units and the p-adic zeta pseudo-measure."""
from .coleman import (
    ColemanUnit,
    cocycle_measure,
    col,
    cw,
    cyclotomic_unit,
    kappa_p,
    restricted_unit_measure,
    unit_product,
)
from .measures import UnitMeasure, ZpMeasure, convolve, dirac, moment
from .padic import ApproxScalar, PadicContext, PadicScalar, iwasawa_log, log_q, teichmuller
from .series import TruncatedSeries, coleman_norm, delta, phi, psi
from .zeta import e1c, f_measure, lp_at_integer, lp_general, make_zeta, zeta_times

__version__ = "0.1.0"

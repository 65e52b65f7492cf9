"""Bounds on the corner points, sum rate and excess rate of two-user Gaussian
interference channels in standard form."""

from .asymptotics import convergence_probe, delta_slope, gdof, normalized_loss
from .channel import (BoundValue, ChannelParams, RatePair, Regime, RegimeClass,
                      classify, conjectured_corner_rates, single_user_capacity)
from .corners import (CornerBounds, CornerInterval, etw_kramer_threshold,
                      mixed_corner_report, one_sided_corner_bounds,
                      rate_tradeoff_bound, symmetric_corner_upper,
                      weak_corner_bounds)
from .errors import DomainError, GICError, InfeasibleGridError, RegimeError
from .excess import (DeltaReport, corner_total_bounds, delta_asymptotic_bounds,
                     delta_bounds_improved, delta_lower_simple,
                     delta_upper_improved, delta_upper_simple)
from .optimizer import GridSpec, OptimizationResult, optimize
from .regions import (LinearRateConstraint, RateRegion, etw_region,
                      kramer_r2_at_r1, region_contains, telatar_tse_region)
from .sumrate import (best_sum_bounds, etkin_sum_upper, etw_sum_upper,
                      hk_rho, hk_sum_lower_half_bit, hk_sum_lower_optimized,
                      kramer_sum_upper, validity_certificate, tin_subclass)

__version__ = "0.1.0"

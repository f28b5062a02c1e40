from bounds.conditions import (BOUNDS, BoundInputs, evaluate_bound, invert_ratio,
                               measurement_ratio, min_measurements, rhs_cor5,
                               rhs_cor6, rhs_thm2, rhs_thm3)
from bounds.limits import (WeightRanges, cor5_log_count_bound, cor5_set_count,
                           cor6_set_count, limiting_measurements_cor5,
                           optimal_weight, scaling_standard, scaling_weighted,
                           union_epsilon, weight_ranges)
from sensing.types import support_error_size

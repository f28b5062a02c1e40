from recovery.l1 import (RecoveryResult, RecoverySettings, check_exact,
                         is_unique_minimizer, relative_error, solve_l1,
                         solve_weighted_l1)
from recovery.weights import WeightVector

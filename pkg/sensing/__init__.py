from sensing.generators import (gen_gaussian_matrix, gen_sparse_signal,
                                gen_support_estimate, estimate_cardinalities)
from sensing.nullspace import null_space_basis
from sensing.rng import Rng, derive_seed
from sensing.types import (ProblemInstance, SupportEstimate, as_dense_matrix,
                           as_index_set, support_error_size, symmetric_difference)

from nsp_verifier.composed import (composed_constant, max_weight_for_recovery,
                                  standard_implies_weighted)
from nsp_verifier.constants import (nsp_constant, nsp_constant_nonuniform,
                                    nsp_constant_standard, nsp_constant_uniform,
                                    nsp_constant_uniform_star)
from nsp_verifier.model import (NspCertificate, NspMode, NspQuery, NspSettings,
                                nsp_ratio)
from nsp_verifier.witness import WitnessInstance, witness_instance

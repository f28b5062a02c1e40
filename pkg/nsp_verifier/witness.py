import logging
from dataclasses import dataclass

import numpy as np

from errors import ArgumentError
from nsp_verifier.model import NspCertificate
from sensing.types import SupportEstimate, as_dense_matrix, symmetric_difference

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessInstance:
    """A sparse signal, a support estimate and a competing feasible point."""
    signal: np.ndarray
    support: np.ndarray
    estimate: SupportEstimate
    competitor: np.ndarray
    measurements: np.ndarray


def witness_instance(certificate: NspCertificate, a) -> WitnessInstance:
    """
    Turn a certificate into a recovery instance.

    With h the witness, x = h_T and the estimate T~ = T xor S, the point
    -h_{T^c} produces the same measurements as x. When C* >= 1 its weighted
    norm is no larger than that of x, so x is not the unique minimizer.
    """
    a = as_dense_matrix(a)
    h = certificate.witness
    if h.shape[0] != a.shape[1]:
        raise ArgumentError(f"Witness has length {h.shape[0]}, matrix has {a.shape[1]} columns")
    t = certificate.witness_T
    signal = np.zeros_like(h)
    signal[t] = h[t]
    competitor = signal - h
    estimate = SupportEstimate(symmetric_difference(t, certificate.witness_S), certificate.weight)
    logger.debug(f"Witness instance: |T|={t.size}, |T~|={estimate.size}, C*={certificate.optimal_constant:.6g}")
    return WitnessInstance(signal=signal, support=t, estimate=estimate,
                           competitor=competitor, measurements=a @ signal)

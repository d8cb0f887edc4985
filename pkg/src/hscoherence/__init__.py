"""Hilbert-Schmidt coherence of multi-qudit states.

Bloch-vector machinery over generalized Gell-Mann bases, coherence
quantifiers (Hilbert-Schmidt, l1-norm, relative entropy), qutrit
damping channels, and a Monte Carlo study of how the Hilbert-Schmidt
distance ordering behaves under two-copy tensor products.
"""
from .bloch import BlochVector, from_bloch, hsd_bloch, hsd_direct, qubit_state, to_bloch
from .channels import (
    KrausChannel,
    SweepResult,
    ad_channel,
    ad_coherence_closed,
    apply,
    pd_channel,
    rho_w,
    sweep,
)
from .coherence import (
    CoherenceReport,
    CoherenceVector,
    coherence_report,
    coherence_vector,
    dephase,
    hsc,
    l1c,
    optimal_incoherent_state,
    qubit_rec_closed,
    rec,
    two_copy_closed_forms,
    two_qubit_split,
)
from .gellmann import (
    Anti,
    Diag,
    GeneratorBasis,
    GeneratorClass,
    Id,
    Sym,
    build_basis,
    is_coherence_index,
    multi_index_space,
)
from .matops import (
    DensityMatrix,
    InvalidStateError,
    hermitian_eigenvalues,
    partial_trace,
    pure_state,
    purity,
    random_density,
    tensor,
    vn_entropy,
)
from .nmutp import (
    NmutpEstimate,
    Quartet,
    coherence_inversion_demo,
    estimate,
    hsd_tensor_power,
    is_inverted,
)

__version__ = "0.1.0"

from spinwig.kernel.clebsch_gordan import clebsch_gordan
from spinwig.kernel.spectrum import (
    KernelIdentityReport,
    KernelSpectrum,
    extreme_eigenvalue_trend,
    kernel_eigenvalue,
    kernel_matrix,
    kernel_spectrum,
    verify_kernel_identities,
)

__all__ = [
    "KernelIdentityReport",
    "KernelSpectrum",
    "clebsch_gordan",
    "extreme_eigenvalue_trend",
    "kernel_eigenvalue",
    "kernel_matrix",
    "kernel_spectrum",
    "verify_kernel_identities",
]

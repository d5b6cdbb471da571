"""The recursive filling procedure and its certificates."""

from .certificate import DegreeProfile, FillCertificate, FillRequest, ParityStatus, parity_status
from .engine import (
    base_case_small_n,
    fill,
    fill_dim1,
    fill_dim2_f2,
    fill_dim2_q,
    fill_dim3_f2,
    fill_general,
    is_friendly,
)
from .frames import Fill, Frame

__all__ = [
    "DegreeProfile",
    "Fill",
    "FillCertificate",
    "FillRequest",
    "Frame",
    "ParityStatus",
    "base_case_small_n",
    "fill",
    "fill_dim1",
    "fill_dim2_f2",
    "fill_dim2_q",
    "fill_dim3_f2",
    "fill_general",
    "is_friendly",
    "parity_status",
]

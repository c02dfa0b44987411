from .cosines import cosine_sequence, idempotent_order, spectral_wr_order, u2_extremes
from .eigen import eigendecomposition, minimal_idempotents, spectrum
from .representation import (
    check_coincident_images,
    coincident_images,
    cover_prediction,
    representation,
    representation_quotient,
)

__all__ = [
    "check_coincident_images",
    "coincident_images",
    "cosine_sequence",
    "cover_prediction",
    "eigendecomposition",
    "idempotent_order",
    "minimal_idempotents",
    "representation",
    "representation_quotient",
    "spectral_wr_order",
    "spectrum",
    "u2_extremes",
]

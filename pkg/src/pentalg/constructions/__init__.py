"""Word carriers, presentations, tensor builders and the named example algebras."""
from .words import (BoundedFreeSemigroup, FreeBand, band_key, free_211_semigroup, free_band,
                    free_semigroup_bounded, generator_names)
from .tensor import BoundedTensor, audit_well_defined, bounded_tensor, ltd_tensor, rtd_tensor

__all__ = [
    "BoundedFreeSemigroup", "FreeBand", "band_key", "free_211_semigroup", "free_band",
    "free_semigroup_bounded", "generator_names",
    "BoundedTensor", "audit_well_defined", "bounded_tensor", "ltd_tensor", "rtd_tensor",
]

"""Index of symmetry of Lie groups with left-invariant metrics, in exact arithmetic."""

__version__ = "0.1.0"

from .catalog import CatalogEntry  # noqa: E402
from .curvature import CurvatureJets, flags, levi_civita, sectional_curvature  # noqa: E402
from .killing import index_of_symmetry, isotropy_algebra, symmetric_subspace  # noqa: E402
from .liealg import MetricLieAlgebra, validate  # noqa: E402
from .quotient import oneill_base_curvature, submersion_check  # noqa: E402

__all__ = [
    "CatalogEntry",
    "CurvatureJets",
    "MetricLieAlgebra",
    "flags",
    "index_of_symmetry",
    "isotropy_algebra",
    "levi_civita",
    "oneill_base_curvature",
    "sectional_curvature",
    "submersion_check",
    "symmetric_subspace",
    "validate",
]

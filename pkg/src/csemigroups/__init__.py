"""Exact computation with affine C-semigroups.

Build validated semigroup models from generators or gap sets, compute the
classical gap-side invariants (Apery sets, pseudo-Frobenius elements,
conductor, type and reduced type), classify symmetry properties, construct
the standard families, and decompose into irreducible C-semigroups. All
arithmetic is exact.
"""

from . import errors
from .constructions import (
    antichain_semigroup,
    bresinsky,
    glue,
    nice_extension,
    s_family,
    t_graded,
    thicken,
)
from .decomposition import decompose, decomposition_lower_bound, verify_decomposition
from .invariants import (
    InvariantReport,
    classify,
    conductor,
    cone_maximal_gaps,
    frobenius_allowable,
    pseudo_frobenius,
    reduced_type,
    special_gaps,
    type_of,
)
from .lattice import (
    RationalCone,
    cone_contains,
    cone_from_rays,
    cone_order,
    leq,
    maximals,
    natural_order,
    orthant,
    parallelepiped_lattice_points,
    semigroup_order,
)
from .numerical import NumericalSemigroup, numerical_semigroup
from .semigroup import (
    AperySet,
    CSemigroupModel,
    GapSetPresentation,
    GeneratorsPresentation,
    apery_maximals,
    apery_set,
    build,
    from_gap_set,
    from_generators,
)

__version__ = "0.1.0"

__all__ = [
    "AperySet",
    "CSemigroupModel",
    "GapSetPresentation",
    "GeneratorsPresentation",
    "InvariantReport",
    "NumericalSemigroup",
    "RationalCone",
    "antichain_semigroup",
    "apery_maximals",
    "apery_set",
    "bresinsky",
    "build",
    "classify",
    "conductor",
    "cone_contains",
    "cone_from_rays",
    "cone_maximal_gaps",
    "cone_order",
    "decompose",
    "decomposition_lower_bound",
    "errors",
    "frobenius_allowable",
    "from_gap_set",
    "from_generators",
    "glue",
    "leq",
    "maximals",
    "natural_order",
    "nice_extension",
    "numerical_semigroup",
    "orthant",
    "parallelepiped_lattice_points",
    "pseudo_frobenius",
    "reduced_type",
    "s_family",
    "semigroup_order",
    "special_gaps",
    "t_graded",
    "thicken",
    "type_of",
    "verify_decomposition",
]

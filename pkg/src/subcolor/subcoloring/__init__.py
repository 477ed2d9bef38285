"""Exact 2-subcolouring, saturation, and defective colourings."""
from .coloring import (BLUE, NO_CONSTRAINTS, RED, Color, DefectBound, PartialAssignment, Subcoloring,
                       is_cluster_graph, is_saturated, monochromatic_p3, satisfies,
                       verify_2_subcoloring)
from .defective import PreconditionError, lovasz_partition, verify_defective_coloring
from .solver import (MAX_ENUM_N, EnumerationGuardError, enumerate_2_subcolorings, solve_2_subcoloring,
                     subcoloring_cnf)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Reduction from 2-subcolouring of triangle-free planar graphs to the target class."""
from .certify import ClassMembershipReport, Verdict, check_class_membership, p3_neighborhood_reduction
from .construct import (EdgeCopy, ReductionIntegrityError, ReductionOutput, ReductionRefused,
                        check_preconditions, reduce)
from .experiment import (CSV_COLUMNS, ExperimentResult, InstanceRow, equivalence_experiment,
                         experiment_instances, export_gprime, run_instance)
from .transfer import SaturationAudit, extend_coloring, project_coloring

__all__ = [name for name in dir() if not name.startswith("_")]

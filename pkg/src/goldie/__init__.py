"""Goldie ranks of primitive quotients via region closures and Ehrhart counting."""

from .arrangement import ArrangementSpec, SpecError, validate_spec
from .closure import AssumptionError, closure_inclusion, closure_membership, region_closure
from .ehrhart import GoldieFamily, QuasiPolynomial
from .oracle import oracle_component_count
from .pipeline import analyze, goldie_family, goldie_rank, load_instance

__version__ = "0.1.0"

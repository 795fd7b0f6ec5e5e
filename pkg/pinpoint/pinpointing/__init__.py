from .search_tree import NodeStatus, SearchTree, is_path_redundant
from .blackbox import (
    BlackBoxPinpointer, compute_core, enumerate_all_justifications, single_justification,
    sort_family, union_of_all_justifications,
)
from .dpll import DpllSolver, SatOracle, sat
from .encoding import PinpointingFormula, encode, restrict_to_cone
from .mus import MembershipChecker, SatPinpointer, mus_membership, union_via_membership
from .repair import RepairFinder, is_repair, minimal_hitting_sets, optimal_repairs

__all__ = [
    "NodeStatus", "SearchTree", "is_path_redundant",
    "BlackBoxPinpointer", "compute_core", "enumerate_all_justifications", "single_justification",
    "sort_family", "union_of_all_justifications",
    "DpllSolver", "SatOracle", "sat",
    "PinpointingFormula", "encode", "restrict_to_cone",
    "MembershipChecker", "SatPinpointer", "mus_membership", "union_via_membership",
    "RepairFinder", "is_repair", "minimal_hitting_sets", "optimal_repairs",
]

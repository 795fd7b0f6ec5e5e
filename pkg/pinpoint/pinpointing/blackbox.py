# filepath: pinpoint/pinpointing/blackbox.py
"""
Black-box pinpointing: everything here only asks an entailment oracle
whether a sub-ontology entails the goal.

    compute_core                   axioms whose removal breaks the entailment
    single_justification           deletion sweep that never tests core axioms
    union_of_all_justifications    hitting set tree search with union pruning
    enumerate_all_justifications   the same search without pruning
"""
import logging
from typing import Callable, Iterable, List, Optional, Set

from pinpoint.core.config import Settings, settings as default_settings
from pinpoint.core.exceptions import NotEntailed
from pinpoint.models import Gci, Ontology
from pinpoint.reasoner import entails as tableau_entails
from pinpoint.reasoner.locality import module_for_goal
from pinpoint.schemas import PinpointResult
from .search_tree import NodeStatus, SearchTree, is_path_redundant

logger = logging.getLogger(__name__)

Oracle = Callable[[Ontology, Gci], bool]


class BlackBoxPinpointer:
    """Pinpointing with a counted entailment oracle (tableau by default)"""

    def __init__(self, settings: Optional[Settings] = None, oracle: Optional[Oracle] = None):
        self.settings = settings or default_settings
        self._oracle = oracle or (lambda o, goal: tableau_entails(o, goal, self.settings))
        self.oracle_calls = 0

    def entails(self, o: Ontology, goal: Gci) -> bool:
        self.oracle_calls += 1
        return self._oracle(o, goal)

    def _require(self, o: Ontology, goal: Gci):
        if not self.entails(o, goal):
            raise NotEntailed(f"{goal} is not entailed")

    def compute_core(self, o: Ontology, goal: Gci) -> List[str]:
        """
        Intersection of all justifications.

        Args:
            o: ontology
            goal: entailed inclusion

        Returns:
            Core axiom ids in ontology order

        Raises:
            NotEntailed: goal does not follow from o
        """
        module = module_for_goal(o, goal)
        self._require(module, goal)
        core = [ax.id for ax in module if not self.entails(module.without((ax.id,)), goal)]
        logger.info(f"Core of {goal}: {len(core)} of {len(module)} module axioms")
        return core

    def single_justification(
        self,
        o: Ontology,
        goal: Gci,
        core: Iterable[str] = (),
        is_module: bool = False,
        verify: bool = True,
    ) -> List[str]:
        """
        One justification, found by a deletion sweep over the module.

        Core axioms belong to every justification and are never tested.
        With is_module the input is used as it is instead of re-extracting
        a module; verify=False skips the entailment precheck.
        """
        module = o if is_module else module_for_goal(o, goal)
        if verify:
            self._require(module, goal)
        keep = set(core)
        current = module
        for ax in module:
            if ax.id in keep:
                continue
            candidate = current.without((ax.id,))
            if self.entails(candidate, goal):
                current = candidate
        return current.ids

    def union_of_all_justifications(
        self,
        o: Ontology,
        goal: Gci,
        core: Optional[Iterable[str]] = None,
        prune: bool = True,
    ) -> PinpointResult:
        """
        Union of all justifications via hitting set tree search.

        Nodes whose remaining axioms lie inside the union found so far are
        pruned, and the search stops as soon as a justification equals the
        core. With prune=False both shortcuts are off and every
        justification is found.

        Raises:
            NotEntailed: goal does not follow from o
        """
        method = "blackbox" if prune else "enumerate"
        module = module_for_goal(o, goal)
        self._require(module, goal)
        core_ids = list(core) if core is not None else self.compute_core(module, goal)
        core_set = set(core_ids)

        if self.entails(Ontology(), goal):
            # tautology: the empty set is the only justification
            return PinpointResult(
                method=method, goal=str(goal), module_size=len(module), core=[], union=[],
                justifications=[[]], oracle_calls=self.oracle_calls,
            )

        union: Set[str] = set(core_set)
        found: List[List[str]] = []
        tree = SearchTree()
        queue: List[int] = [SearchTree.ROOT]
        early = False

        while queue:
            node = queue.pop(0)
            removed = tree.removed(node)

            if is_path_redundant(tree, removed, tree.explored):
                tree.mark(node, NodeStatus.REDUNDANT)
                continue

            remaining = module.without(removed)
            if not self.entails(remaining, goal):
                tree.mark(node, NodeStatus.CLOSED)
                continue

            # the root always gets a justification, so a unique one is reported
            if prune and node != SearchTree.ROOT and set(remaining.ids) <= union:
                tree.mark(node, NodeStatus.PRUNED)
                continue

            just = next((j for j in found if removed.isdisjoint(j)), None)
            if just is None:
                just = self.single_justification(remaining, goal, core_set, is_module=True, verify=False)
                found.append(just)
                union.update(just)
                logger.debug(f"Node {node}: new justification {just}")

            tree.mark(node, NodeStatus.EXPANDED)

            if prune and set(just) == core_set:
                early = True
                break

            children = [tree.add_child(node, ax_id) for ax_id in just if ax_id not in core_set]
            queue = children + queue

        logger.info(
            f"Union of {goal}: {len(union)} axioms, {len(found)} justifications, "
            f"{self.oracle_calls} oracle calls, {len(tree)} tree nodes"
        )
        return PinpointResult(
            method=method,
            goal=str(goal),
            module_size=len(module),
            core=core_ids,
            union=module.sort_ids(union),
            justifications=found,
            oracle_calls=self.oracle_calls,
            early_return=early,
        )

    def enumerate_all_justifications(self, o: Ontology, goal: Gci) -> List[List[str]]:
        """All justifications, sorted by size then ontology order"""
        result = self.union_of_all_justifications(o, goal, prune=False)
        return sort_family(o, result.justifications)


def sort_family(o: Ontology, family: Iterable[Iterable[str]]) -> List[List[str]]:
    """Deduplicate a family of id sets and order it deterministically"""
    unique = {frozenset(s) for s in family}
    ordered = [o.sort_ids(s) for s in unique]
    return sorted(ordered, key=lambda s: (len(s), [o.position(i) for i in s]))


def compute_core(o: Ontology, goal: Gci, settings: Optional[Settings] = None) -> List[str]:
    return BlackBoxPinpointer(settings).compute_core(o, goal)


def single_justification(o: Ontology, goal: Gci, core: Iterable[str] = (), settings: Optional[Settings] = None) -> List[str]:
    return BlackBoxPinpointer(settings).single_justification(o, goal, core)


def union_of_all_justifications(
    o: Ontology, goal: Gci, core: Optional[Iterable[str]] = None, settings: Optional[Settings] = None
) -> PinpointResult:
    return BlackBoxPinpointer(settings).union_of_all_justifications(o, goal, core)


def enumerate_all_justifications(o: Ontology, goal: Gci, settings: Optional[Settings] = None) -> List[List[str]]:
    return BlackBoxPinpointer(settings).enumerate_all_justifications(o, goal)

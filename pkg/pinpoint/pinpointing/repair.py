# filepath: pinpoint/pinpointing/repair.py
"""
Repairs: maximal sub-ontologies that no longer entail the goal.

Repairs are complements of minimal hitting sets of the justifications;
optimal (maximum cardinality) repairs come from the smallest hitting sets.
When the core is nonempty every single core axiom is already a smallest
hitting set, so no justification has to be enumerated.
"""
import logging
from typing import Iterable, List, Optional

from pysat.examples.hitman import Hitman

from pinpoint.core.config import Settings, settings as default_settings
from pinpoint.core.exceptions import EmptyMember, NoRepair
from pinpoint.models import Gci, Ontology
from pinpoint.reasoner import entails
from pinpoint.schemas import RepairSet
from .blackbox import BlackBoxPinpointer

logger = logging.getLogger(__name__)


def minimal_hitting_sets(family: Iterable[Iterable[str]]) -> List[List[str]]:
    """
    All inclusion-minimal hitting sets of a family of id sets.

    Results come in order of increasing size; members are sorted.

    Raises:
        EmptyMember: the family contains the empty set
    """
    sets = [sorted(set(s)) for s in family]
    if any(not s for s in sets):
        raise EmptyMember("cannot hit a family containing the empty set")
    if not sets:
        return [[]]

    result: List[List[str]] = []
    with Hitman(bootstrap_with=sets, htype="sorted") as hitman:
        while True:
            hset = hitman.get()
            if hset is None:
                break
            result.append(sorted(hset))
            hitman.block(hset)
    return sorted(result, key=lambda s: (len(s), s))


def is_repair(o: Ontology, goal: Gci, r: Iterable[str], settings: Optional[Settings] = None) -> bool:
    """r does not entail the goal, and adding back any removed axiom does"""
    kept = set(r)
    if entails(o.subset(kept), goal, settings):
        return False
    return all(entails(o.subset(kept | {ax.id}), goal, settings) for ax in o if ax.id not in kept)


class RepairFinder:
    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or default_settings
        self.pinpointer = BlackBoxPinpointer(self.settings)

    def optimal_repairs(self, o: Ontology, goal: Gci, use_core: bool = True) -> RepairSet:
        """
        Maximum-cardinality repairs of o for goal.

        Args:
            o: ontology
            goal: entailed inclusion
            use_core: take the shortcut through a nonempty core

        Raises:
            NotEntailed: goal does not follow from o
            NoRepair: goal already follows from the empty ontology
        """
        if self.pinpointer.entails(Ontology(), goal):
            raise NoRepair(f"{goal} holds in every interpretation")

        core = self.pinpointer.compute_core(o, goal)
        if use_core and core:
            removed = [[ax_id] for ax_id in core]
            via_core = True
        else:
            family = self.pinpointer.enumerate_all_justifications(o, goal)
            hitting = minimal_hitting_sets(family)
            smallest = min(len(h) for h in hitting)
            removed = [o.sort_ids(h) for h in hitting if len(h) == smallest]
            via_core = False

        repairs = [o.without(r).ids for r in removed]
        logger.info(f"Optimal repairs for {goal}: {len(repairs)} of size {len(repairs[0])}")
        return RepairSet(repairs=repairs, removed=removed, optimal=True, via_core=via_core)


def optimal_repairs(o: Ontology, goal: Gci, settings: Optional[Settings] = None) -> RepairSet:
    return RepairFinder(settings).optimal_repairs(o, goal)

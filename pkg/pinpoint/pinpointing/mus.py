# filepath: pinpoint/pinpointing/mus.py
"""
MUS membership and the SAT-based union of all justifications.

A soft clause c lies in some minimal unsatisfiable subset iff there is a
set S of other soft clauses such that hard ∪ S is satisfiable and
hard ∪ S ∪ {c} is not. Small formulas are checked by exhaustive search over
S; larger ones by a map-guided search that grows satisfiable seeds to
maximal ones and shrinks unsatisfiable seeds to minimal ones, blocking
each refuted region in the map.
"""
import itertools
import logging
from typing import Iterable, List, Optional, Sequence, Set, Union

from pinpoint.core.config import Settings, settings as default_settings
from pinpoint.core.exceptions import NotEntailed, PreconditionViolated
from pinpoint.models import Gci, Ontology
from pinpoint.reasoner import normalize, saturate_with_tracing
from pinpoint.reasoner.locality import module_for_goal
from pinpoint.schemas import PinpointResult
from .dpll import Clause, DpllSolver, SatOracle
from .encoding import PinpointingFormula, encode, restrict_to_cone

logger = logging.getLogger(__name__)


class MembershipChecker:
    """Decides MUS membership of soft clauses of one unsatisfiable formula"""

    def __init__(
        self,
        clauses: Sequence[Clause],
        soft: Optional[Iterable[int]] = None,
        settings: Optional[Settings] = None,
        oracle: Optional[SatOracle] = None,
    ):
        self.settings = settings or default_settings
        self.oracle = oracle or SatOracle(self.settings)
        self.clauses = [tuple(c) for c in clauses]
        self.soft: List[int] = sorted(soft) if soft is not None else list(range(len(self.clauses)))
        soft_set = set(self.soft)
        self.hard = [c for i, c in enumerate(self.clauses) if i not in soft_set]
        self.exhaustive = len(self.clauses) < self.settings.mus_exhaustive_threshold

    def check_unsat(self):
        if self.oracle.is_sat(self.clauses):
            raise PreconditionViolated("MUS membership needs an unsatisfiable formula")

    def _sat(self, subset: Iterable[int]) -> bool:
        return self.oracle.is_sat(self.hard + [self.clauses[i] for i in sorted(subset)])

    def is_member(self, index: int) -> bool:
        if index not in self.soft:
            raise PreconditionViolated(f"clause {index} is not soft")
        others = [i for i in self.soft if i != index]
        if self.exhaustive:
            return self._exhaustive(index, others)
        return self._map_search(index, others)

    def _exhaustive(self, c: int, others: List[int]) -> bool:
        satisfiable: List[Set[int]] = []
        for size in range(len(others), -1, -1):
            for combo in itertools.combinations(others, size):
                subset = set(combo)
                if any(subset <= t for t in satisfiable):
                    continue
                if self._sat(subset):
                    if not self._sat(subset | {c}):
                        return True
                    satisfiable.append(subset)
        return False

    def _map_search(self, c: int, others: List[int]) -> bool:
        selector = {i: k + 1 for k, i in enumerate(others)}
        blocks: List[List[int]] = []
        while True:
            model = DpllSolver(blocks).solve(phase=True)
            if model is None:
                return False
            seed = {i for i in others if model.get(selector[i], True)}

            if self._sat(seed):
                for i in others:
                    if i not in seed and self._sat(seed | {i}):
                        seed.add(i)
                if not self._sat(seed | {c}):
                    return True
                # no subset of this maximal satisfiable set can witness membership
                blocks.append([selector[i] for i in others if i not in seed])
            else:
                core = [i for i in others if i in seed]
                for i in list(core):
                    trial = [j for j in core if j != i]
                    if not self._sat(trial):
                        core = trial
                if not core:
                    return False
                blocks.append([-selector[i] for i in core])


def mus_membership(
    f: Union[PinpointingFormula, Sequence[Clause]],
    index: int,
    settings: Optional[Settings] = None,
) -> bool:
    """
    True iff clause `index` belongs to some minimal unsatisfiable subset.

    For a PinpointingFormula only its soft clauses (the axiom units) are
    candidates and the rest is always kept; a plain clause list treats every
    clause as soft.

    Raises:
        PreconditionViolated: the formula is satisfiable, or the clause is hard
    """
    if isinstance(f, PinpointingFormula):
        checker = MembershipChecker(f.clauses, f.soft, settings)
    else:
        checker = MembershipChecker(f, None, settings)
    checker.check_unsat()
    return checker.is_member(index)


class SatPinpointer:
    """Union of all justifications through MUS membership of axiom selectors"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or default_settings
        self.oracle = SatOracle(self.settings)

    def formula(self, o: Ontology, goal: Gci, cone: bool = True, use_module: bool = True) -> PinpointingFormula:
        scope = module_for_goal(o, goal) if use_module else o
        trace = saturate_with_tracing(normalize(scope), goal, self.settings)
        f = encode(trace, scope, goal)
        return restrict_to_cone(f) if cone else f

    def union(self, o: Ontology, goal: Gci) -> PinpointResult:
        """
        Raises:
            NotEntailed: the pinpointing formula is satisfiable
            PreconditionViolated: goal is not an atomic inclusion
        """
        module = module_for_goal(o, goal)
        f = self.formula(module, goal, use_module=False)
        if self.oracle.is_sat(f.clauses):
            raise NotEntailed(f"{goal} is not entailed")

        checker = MembershipChecker(f.clauses, f.soft, self.settings, self.oracle)
        members: List[str] = []
        for ax in module:
            idx = f.axiom_units.get(ax.id)
            if idx is not None and checker.is_member(idx):
                members.append(ax.id)
        logger.info(f"MUS membership union of {goal}: {len(members)} axioms, {self.oracle.calls} SAT calls")
        return PinpointResult(
            method="musmem",
            goal=str(goal),
            module_size=len(module),
            union=members,
            oracle_calls=self.oracle.calls,
        )


def union_via_membership(o: Ontology, goal: Gci, settings: Optional[Settings] = None) -> List[str]:
    return SatPinpointer(settings).union(o, goal).union

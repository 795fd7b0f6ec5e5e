# filepath: pinpoint/harness/oracle.py
"""
Reference oracles used to cross-check the pinpointing engines.

    brute_force_justifications   minimal entailing subsets of the module, by definition
    semantic_entails             countermodel search over small finite domains
    brute_force_muses            minimal unsatisfiable soft subsets of a formula
"""
import itertools
import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union

from pysat.formula import IDPool
from pysat.solvers import Solver

from pinpoint.core.config import Settings, settings as default_settings
from pinpoint.core.exceptions import CapExceeded, NotEntailed
from pinpoint.models import (
    All, And, Bot, ConceptExpr, Gci, Name, Not, Ontology, Or, RoleInclusion, Some, Top,
    render,
)
from pinpoint.pinpointing.dpll import SatOracle
from pinpoint.pinpointing.encoding import PinpointingFormula
from pinpoint.reasoner import entails, module_for_goal
from pinpoint.schemas import BruteForceResult

logger = logging.getLogger(__name__)


def brute_force_justifications(o: Ontology, goal: Gci, settings: Optional[Settings] = None) -> BruteForceResult:
    """
    Every justification of goal, by testing subsets of the module in order of size.

    Raises:
        CapExceeded: module larger than settings.brute_force_cap
        NotEntailed: goal does not follow from o
    """
    settings = settings or default_settings
    module = module_for_goal(o, goal)
    if len(module) > settings.brute_force_cap:
        raise CapExceeded(len(module), settings.brute_force_cap)

    calls = 0
    found: List[FrozenSet[str]] = []
    for size in range(len(module) + 1):
        for combo in itertools.combinations(module.ids, size):
            subset = frozenset(combo)
            if any(j <= subset for j in found):
                continue
            calls += 1
            if entails(module.subset(subset), goal, settings):
                found.append(subset)
    if not found:
        raise NotEntailed(f"{goal} is not entailed")

    core = frozenset.intersection(*found)
    union = frozenset.union(*found)
    justifications = sorted(
        (module.sort_ids(j) for j in found),
        key=lambda j: (len(j), [module.position(i) for i in j]),
    )
    logger.debug(f"Brute force for {goal}: {len(found)} justifications, {calls} entailment checks")
    return BruteForceResult(
        module_size=len(module),
        core=module.sort_ids(core),
        union=module.sort_ids(union),
        justifications=justifications,
        oracle_calls=calls,
    )


class _ModelEncoder:
    """CNF whose models are interpretations of a fixed finite domain"""

    def __init__(self, size: int):
        self.domain = range(size)
        self.pool = IDPool()
        self.clauses: List[List[int]] = []
        self._cache: Dict[Tuple[str, int], int] = {}
        self._true = self.pool.id("true")
        self.clauses.append([self._true])

    def role(self, r: str, x: int, y: int) -> int:
        return self.pool.id(("role", r, x, y))

    def _define_and(self, v: int, lits: Sequence[int]):
        for lit in lits:
            self.clauses.append([-v, lit])
        self.clauses.append([v] + [-lit for lit in lits])

    def _define_or(self, v: int, lits: Sequence[int]):
        for lit in lits:
            self.clauses.append([v, -lit])
        self.clauses.append([-v] + list(lits))

    def lit(self, c: ConceptExpr, x: int) -> int:
        """Literal true iff element x is in the extension of c"""
        if isinstance(c, Top):
            return self._true
        if isinstance(c, Bot):
            return -self._true
        if isinstance(c, Name):
            return self.pool.id(("name", c.name, x))
        if isinstance(c, Not):
            return -self.lit(c.c, x)

        key = (render(c), x)
        if key in self._cache:
            return self._cache[key]
        v = self._cache[key] = self.pool.id(("concept",) + key)

        if isinstance(c, And):
            self._define_and(v, [self.lit(d, x) for d in c.cs])
        elif isinstance(c, Or):
            self._define_or(v, [self.lit(d, x) for d in c.cs])
        elif isinstance(c, Some):
            witnesses = []
            for y in self.domain:
                w = self.pool.id(("witness",) + key + (y,))
                self._define_and(w, [self.role(c.role, x, y), self.lit(c.c, y)])
                witnesses.append(w)
            self._define_or(v, witnesses)
        elif isinstance(c, All):
            checks = []
            for y in self.domain:
                w = self.pool.id(("check",) + key + (y,))
                self._define_or(w, [-self.role(c.role, x, y), self.lit(c.c, y)])
                checks.append(w)
            self._define_and(v, checks)
        else:
            raise TypeError(f"not a concept: {c!r}")
        return v

    def add_ontology(self, o: Ontology):
        for ax in o:
            if isinstance(ax.kind, RoleInclusion):
                for x in self.domain:
                    for y in self.domain:
                        self.clauses.append([-self.role(ax.kind.sub, x, y), self.role(ax.kind.sup, x, y)])
            else:
                for x in self.domain:
                    self.clauses.append([-self.lit(ax.kind.lhs, x), self.lit(ax.kind.rhs, x)])


def semantic_entails(
    o: Ontology,
    goal: Gci,
    max_domain: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> bool:
    """
    False iff some interpretation with at most max_domain elements satisfies o
    and puts an element in goal.lhs but not in goal.rhs.

    A True answer only says that no small countermodel exists.
    """
    settings = settings or default_settings
    max_domain = max_domain or settings.model_check_domain
    for size in range(1, max_domain + 1):
        enc = _ModelEncoder(size)
        enc.add_ontology(o)
        enc.clauses.append([enc.lit(goal.lhs, 0)])
        enc.clauses.append([-enc.lit(goal.rhs, 0)])
        with Solver(name=settings.pysat_solver, bootstrap_with=enc.clauses) as solver:
            if solver.solve():
                logger.debug(f"Countermodel for {goal} with {size} elements")
                return False
    return True


def brute_force_muses(
    f: Union[PinpointingFormula, Sequence[Sequence[int]]],
    settings: Optional[Settings] = None,
) -> List[List[int]]:
    """
    All minimal unsatisfiable subsets of the soft clauses, as sorted clause
    indices. Hard clauses are always present.
    """
    if isinstance(f, PinpointingFormula):
        clauses, soft = list(f.clauses), f.soft_indices()
    else:
        clauses = list(f)
        soft = list(range(len(clauses)))
    soft_set = set(soft)
    hard = [c for i, c in enumerate(clauses) if i not in soft_set]
    oracle = SatOracle(settings)

    found: List[Set[int]] = []
    for size in range(len(soft) + 1):
        for combo in itertools.combinations(soft, size):
            subset = set(combo)
            if any(m <= subset for m in found):
                continue
            if not oracle.is_sat(hard + [clauses[i] for i in combo]):
                found.append(subset)
    return sorted(sorted(m) for m in found)


def muses_as_justifications(f: PinpointingFormula, muses: List[List[int]]) -> List[FrozenSet[str]]:
    """Map MUSes over axiom-unit clauses back to axiom id sets"""
    by_index = {idx: ax_id for ax_id, idx in f.axiom_units.items()}
    return [frozenset(by_index[i] for i in mus) for mus in muses]

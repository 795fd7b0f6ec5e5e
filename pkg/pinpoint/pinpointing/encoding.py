# filepath: pinpoint/pinpointing/encoding.py
"""
Propositional pinpointing formula built from a saturation trace.

Variables: one selector per ontology axiom (ontology order), then one per
derived fact in order of first occurrence in the trace. Clauses: a unit
p_β for every axiom, one Horn clause per trace step (premises and the
selectors of side-condition axioms imply the conclusion), and ¬p_goal.
The formula is unsatisfiable iff the traced axioms entail the goal.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Set, Tuple, Union

import networkx as nx

from pinpoint.core.exceptions import PreconditionViolated
from pinpoint.models import Gci, Ontology
from pinpoint.reasoner.saturation import Fact, InferenceTrace, goal_fact

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AxiomLabel:
    id: str

    def __str__(self) -> str:
        return f"axiom {self.id}"


@dataclass(frozen=True)
class DerivedLabel:
    fact: Fact

    def __str__(self) -> str:
        return f"derived {self.fact}"


Label = Union[AxiomLabel, DerivedLabel]
ClauseT = Tuple[int, ...]


@dataclass
class PinpointingFormula:
    clauses: List[ClauseT] = field(default_factory=list)
    labels: Dict[int, Label] = field(default_factory=dict)
    goal_var: int = 0
    axiom_units: Dict[str, int] = field(default_factory=dict)
    # clause indices that may be dropped; None means every clause
    soft: Optional[FrozenSet[int]] = None

    @property
    def num_vars(self) -> int:
        return max(self.labels, default=0)

    def var_of(self, label: Label) -> Optional[int]:
        for var, lab in self.labels.items():
            if lab == label:
                return var
        return None

    def selector(self, axiom_id: str) -> Optional[int]:
        return self.var_of(AxiomLabel(axiom_id))

    def soft_indices(self) -> List[int]:
        if self.soft is None:
            return list(range(len(self.clauses)))
        return sorted(self.soft)

    def __len__(self) -> int:
        return len(self.clauses)


def encode(trace: InferenceTrace, o: Ontology, goal: Gci) -> PinpointingFormula:
    """
    Build ψ = φ_trace ∧ φ_O ∧ ¬p_goal.

    Only the axiom units are soft, so the minimal unsatisfiable soft subsets
    correspond to the justifications of the goal.
    """
    var_of: Dict[Label, int] = {}
    labels: Dict[int, Label] = {}

    def alloc(label: Label) -> int:
        var = var_of.get(label)
        if var is None:
            var = var_of[label] = len(var_of) + 1
            labels[var] = label
        return var

    for ax in o:
        alloc(AxiomLabel(ax.id))

    clauses: List[ClauseT] = []
    axiom_units: Dict[str, int] = {}
    for ax in o:
        axiom_units[ax.id] = len(clauses)
        clauses.append((var_of[AxiomLabel(ax.id)],))

    seen: Set[FrozenSet[int]] = set()
    for step in trace.steps:
        premise_vars = [alloc(DerivedLabel(p)) for p in step.premises]
        concl = alloc(DerivedLabel(step.conclusion))
        if concl in premise_vars:
            continue
        selectors = []
        for ax_id in step.axioms:
            sel = var_of.get(AxiomLabel(ax_id))
            if sel is None:
                raise PreconditionViolated(f"trace uses axiom {ax_id} outside the ontology")
            selectors.append(sel)
        clause = tuple(dict.fromkeys([-v for v in premise_vars] + [-s for s in selectors] + [concl]))
        key = frozenset(clause)
        if key in seen:
            continue
        seen.add(key)
        clauses.append(clause)

    target = trace.goal if trace.goal is not None else goal_fact(str(goal.lhs), str(goal.rhs))
    goal_var = alloc(DerivedLabel(target))
    clauses.append((-goal_var,))

    formula = PinpointingFormula(
        clauses=clauses,
        labels=labels,
        goal_var=goal_var,
        axiom_units=axiom_units,
        soft=frozenset(axiom_units.values()),
    )
    logger.debug(f"Encoded {len(trace)} steps into {len(clauses)} clauses over {len(labels)} variables")
    return formula


def restrict_to_cone(f: PinpointingFormula) -> PinpointingFormula:
    """
    Keep the clauses reachable backwards from the goal variable.

    A clause is kept when its positive literal is reachable from the goal
    through conclusion -> premise edges; the ¬p_goal unit is always kept.
    Satisfiability and the minimal unsatisfiable soft subsets are unchanged.
    """
    graph = nx.DiGraph()
    graph.add_node(f.goal_var)
    for clause in f.clauses:
        heads = [lit for lit in clause if lit > 0]
        if len(heads) != 1:
            continue
        graph.add_node(heads[0])
        for lit in clause:
            if lit < 0:
                graph.add_edge(heads[0], -lit)
    reach = nx.descendants(graph, f.goal_var) | {f.goal_var}

    kept: List[ClauseT] = []
    remap: Dict[int, int] = {}
    for idx, clause in enumerate(f.clauses):
        heads = [lit for lit in clause if lit > 0]
        if clause == (-f.goal_var,) or (len(heads) == 1 and heads[0] in reach):
            remap[idx] = len(kept)
            kept.append(clause)

    axiom_units = {ax_id: remap[idx] for ax_id, idx in f.axiom_units.items() if idx in remap}
    soft = None if f.soft is None else frozenset(remap[i] for i in f.soft if i in remap)
    logger.debug(f"Cone keeps {len(kept)} of {len(f.clauses)} clauses")
    return PinpointingFormula(
        clauses=kept,
        labels=dict(f.labels),
        goal_var=f.goal_var,
        axiom_units=axiom_units,
        soft=soft,
    )

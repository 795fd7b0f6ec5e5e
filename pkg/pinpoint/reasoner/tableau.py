# filepath: pinpoint/reasoner/tableau.py
"""
Tableau decision procedure for ALC concept satisfiability w.r.t. a TBox.

Concepts are kept in negation normal form. Inclusions with a concept name
(or a conjunction of names) on the left are unfolded lazily; every other
inclusion C ⊑ D is internalized as ¬C ⊔ D and added to each node. Role
inclusions are handled through the reflexive-transitive role closure.
Termination is ensured by subset blocking against ancestor labels.
"""
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from pinpoint.core.config import Settings, settings as default_settings
from pinpoint.core.exceptions import ResourceLimit
from pinpoint.models import (
    All, And, Bot, ConceptExpr, Gci, Name, Not, Ontology, Or, Some, Top,
    nnf, nnf_not, render, signature_of,
)
from .roles import RoleClosure

logger = logging.getLogger(__name__)


class TableauReasoner:
    """Entailment oracle for one ontology. Instances are not shared across threads."""

    def __init__(self, ontology: Ontology, settings: Optional[Settings] = None):
        self.ontology = ontology
        self.settings = settings or default_settings
        self.node_budget = self.settings.reasoner.node_budget
        self.roles = RoleClosure(ontology)

        self._unfold: Dict[str, List[ConceptExpr]] = {}
        self._conj_unfold: Dict[str, List[Tuple[FrozenSet[Name], ConceptExpr]]] = {}
        universal: List[ConceptExpr] = []

        for ax in ontology:
            if not isinstance(ax.kind, Gci):
                continue
            lhs, rhs = ax.kind.lhs, nnf(ax.kind.rhs)
            if isinstance(lhs, Bot):
                continue
            if isinstance(lhs, Top):
                universal.append(rhs)
            elif isinstance(lhs, Name):
                self._unfold.setdefault(lhs.name, []).append(rhs)
            elif isinstance(lhs, And) and all(isinstance(c, Name) for c in lhs.cs):
                names = frozenset(lhs.cs)
                for c in lhs.cs:
                    self._conj_unfold.setdefault(c.name, []).append((names, rhs))
            else:
                universal.append(nnf(Or((nnf_not(lhs), rhs))))

        self._universal: FrozenSet[ConceptExpr] = frozenset(universal)
        self._unsat_cache: Set[FrozenSet[ConceptExpr]] = set()
        self.nodes = 0

    def is_satisfiable(self, concepts: Iterable[ConceptExpr]) -> bool:
        """Satisfiability of the conjunction of the given concepts w.r.t. the ontology"""
        label = frozenset(nnf(c) for c in concepts) | self._universal
        self.nodes = 0
        try:
            return self._node(label, ())
        except RecursionError:
            raise ResourceLimit("tableau recursion depth exceeded")

    def entails(self, goal: Gci) -> bool:
        """O ⊨ C ⊑ D iff C ⊓ ¬D is unsatisfiable w.r.t. O"""
        result = not self.is_satisfiable((nnf(goal.lhs), nnf_not(goal.rhs)))
        logger.debug(f"Tableau: |O|={len(self.ontology)} {goal} -> {result} ({self.nodes} nodes)")
        return result

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise ResourceLimit(f"tableau node budget of {self.node_budget} exceeded")

    def _node(self, initial: FrozenSet[ConceptExpr], ancestors: Tuple[FrozenSet[ConceptExpr], ...]) -> bool:
        self._tick()
        if initial in self._unsat_cache:
            return False
        label = set(initial)
        ok = self._expand(label, list(initial)) and self._branch(label, ancestors)
        if not ok:
            # unsatisfiable labels stay unsatisfiable under any ancestors
            self._unsat_cache.add(initial)
        return ok

    def _expand(self, label: Set[ConceptExpr], queue: List[ConceptExpr]) -> bool:
        """Apply the deterministic rules; False on clash"""
        while queue:
            c = queue.pop()
            if isinstance(c, Bot):
                return False
            if isinstance(c, Not):
                if c.c in label:
                    return False
            elif isinstance(c, Name):
                if Not(c) in label:
                    return False
                for d in self._unfold.get(c.name, ()):
                    if d not in label:
                        label.add(d)
                        queue.append(d)
                for names, d in self._conj_unfold.get(c.name, ()):
                    if d not in label and names <= label:
                        label.add(d)
                        queue.append(d)
            elif isinstance(c, And):
                for d in c.cs:
                    if d not in label:
                        label.add(d)
                        queue.append(d)
        return True

    def _branch(self, label: Set[ConceptExpr], ancestors: Tuple[FrozenSet[ConceptExpr], ...]) -> bool:
        open_or = None
        for c in sorted((c for c in label if isinstance(c, Or)), key=render):
            if not any(d in label for d in c.cs):
                open_or = c
                break

        if open_or is not None:
            for d in open_or.cs:
                self._tick()
                choice = set(label)
                choice.add(d)
                if self._expand(choice, [d]) and self._branch(choice, ancestors):
                    return True
            return False

        frozen = frozenset(label)
        if any(frozen <= anc for anc in ancestors):
            return True

        alls = [c for c in label if isinstance(c, All)]
        path = ancestors + (frozen,)
        for some in sorted((c for c in label if isinstance(c, Some)), key=render):
            supers = self.roles.supers(some.role)
            succ = {some.c}
            succ.update(a.c for a in alls if a.role in supers)
            succ.update(self._universal)
            if not self._node(frozenset(succ), path):
                return False
        return True


def entails(o: Ontology, goal: Gci, settings: Optional[Settings] = None) -> bool:
    """
    Decide O ⊨ goal with the tableau.

    Raises:
        ResourceLimit: node budget exceeded
    """
    return TableauReasoner(o, settings).entails(goal)


def classify(o: Ontology, settings: Optional[Settings] = None) -> List[Gci]:
    """All entailed A ⊑ B over distinct concept names of the ontology, sorted by (A, B)"""
    names = sorted(signature_of(o).concept_names)
    reasoner = TableauReasoner(o, settings)
    result: List[Gci] = []
    for a in names:
        for b in names:
            if a == b:
                continue
            goal = Gci(Name(a), Name(b))
            if reasoner.entails(goal):
                result.append(goal)
    logger.info(f"Classified {len(names)} names: {len(result)} subsumptions")
    return result

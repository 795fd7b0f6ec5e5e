# filepath: pinpoint/reasoner/saturation.py
"""
Consequence-based saturation for normalized ALC TBoxes, with tracing.

Derived facts are subsumptions H ⊑ M where H is a conjunction of literals
(the context) and M a disjunction of concept names and existentials ∃R.K
over contexts K. Starting from the goal's left-hand side, the rules below
are applied until no new fact appears; every distinct rule instance is kept
in the trace, so the trace is complete for every subset of the axioms and
can be turned into a propositional pinpointing formula.

    R_A+    H ⊑ A                                   for A ∈ H
    R_A-    H ⊑ N ⊔ A                 => H ⊑ N        if ¬A ∈ H
    R_and   H ⊑ Ni ⊔ Ai (i=1..n)      => H ⊑ ⊔Ni ⊔ M  with A1 ⊓..⊓ An ⊑ M
    R_ex+   H ⊑ N ⊔ A                 => H ⊑ N ⊔ ∃R.B with A ⊑ ∃R.B
    R_ex-   H ⊑ M ⊔ ∃R.K, K ⊑ N ⊔ A   => H ⊑ M ⊔ B ⊔ ∃R.(K ⊓ ¬A)
                                          with R ⊑* S, ∃S.A ⊑ B
    R_bot   H ⊑ M ⊔ ∃R.K, K ⊑ ⊥       => H ⊑ M
    R_all   H ⊑ M ⊔ ∃R.K, H ⊑ N ⊔ A   => H ⊑ M ⊔ N ⊔ ∃R.(K ⊓ B)
                                          with R ⊑* S, A ⊑ ∀S.B
    R_r0    R ⊑* R
    R_r     R ⊑* T                    => R ⊑* S       with T ⊑ S
    R_weak  A ⊑ ⊥                     => A ⊑ B        for the goal A ⊑ B

Rules are ordered: a premise H ⊑ M takes part only through its maximal
disjunct. Concept names come first with the goal's right-hand side lowest,
existentials after them by filler size. The order is fixed per goal and
does not depend on the axioms, so restricting the trace to the steps of a
subset gives exactly the ordered saturation of that subset. Conclusions
that repeat a positive context literal (A ∈ H and A in M) are dropped.
"""
import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple, Union

from pinpoint.core.config import Settings, settings as default_settings
from pinpoint.core.exceptions import PreconditionViolated, ResourceLimit
from pinpoint.models import Gci, Name, Ontology
from .normalization import (
    ClauseAxiom, ExistsLeft, ExistsRight, ForAllRight, NormalAxiom, NormalizedTBox, RoleAxiom,
    normalize,
)

logger = logging.getLogger(__name__)


class Rules:
    INIT = "R_A+"
    NEG = "R_A-"
    AND = "R_and"
    EX_POS = "R_ex+"
    EX_NEG = "R_ex-"
    BOT = "R_bot"
    ALL = "R_all"
    ROLE_INIT = "R_r0"
    ROLE = "R_r"
    WEAKEN = "R_weak"


@dataclass(frozen=True, order=True)
class Literal:
    name: str
    positive: bool = True

    def __str__(self) -> str:
        return self.name if self.positive else f"¬{self.name}"


def _conj(lits: Iterable[Literal]) -> str:
    return " ⊓ ".join(str(lit) for lit in sorted(lits)) or "⊤"


@dataclass(frozen=True)
class Existential:
    role: str
    filler: FrozenSet[Literal]

    def __str__(self) -> str:
        return f"∃{self.role}.({_conj(self.filler)})"


Disjunct = Union[str, Existential]


def disjunct_key(d: Disjunct):
    if isinstance(d, str):
        return (0, d, ())
    return (1, d.role, tuple(sorted(d.filler)))


@dataclass(frozen=True)
class DerivedSubsumption:
    lhs: FrozenSet[Literal]
    rhs: FrozenSet[Disjunct]

    def __str__(self) -> str:
        rhs = " ⊔ ".join(str(d) for d in sorted(self.rhs, key=disjunct_key)) or "⊥"
        return f"{_conj(self.lhs)} ⊑ {rhs}"


@dataclass(frozen=True)
class RoleSubsumption:
    sub: str
    sup: str

    def __str__(self) -> str:
        return f"{self.sub} ⊑* {self.sup}"


Fact = Union[DerivedSubsumption, RoleSubsumption]


@dataclass(frozen=True)
class TraceStep:
    rule: str
    premises: Tuple[Fact, ...]
    axioms: Tuple[str, ...]
    conclusion: Fact

    def __str__(self) -> str:
        premises = ", ".join(str(p) for p in self.premises)
        axioms = ", ".join(self.axioms)
        return f"{self.rule}; {premises}; {axioms}; {self.conclusion}"


@dataclass
class InferenceTrace:
    steps: List[TraceStep] = field(default_factory=list)
    goal: Optional[DerivedSubsumption] = None
    concluded: bool = False
    contexts: int = 0

    def dump(self) -> str:
        """One step per line: RULE; premises; axioms; conclusion"""
        return "\n".join(str(step) for step in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def goal_fact(lhs: str, rhs: str) -> DerivedSubsumption:
    return DerivedSubsumption(frozenset((Literal(lhs),)), frozenset((rhs,)))


class DisjunctOrder:
    """Total order on disjuncts used to pick the one a premise resolves on"""

    def __init__(self, lowest: str):
        self.lowest = lowest

    def rank(self, d: Disjunct):
        if isinstance(d, str):
            return (0 if d == self.lowest else 1, d)
        return (2, len(d.filler), d.role, tuple(sorted(d.filler)))

    def maximal(self, rhs: FrozenSet[Disjunct]) -> Disjunct:
        return max(rhs, key=self.rank)


def is_tautology(fact: DerivedSubsumption) -> bool:
    return any(isinstance(d, str) and Literal(d) in fact.lhs for d in fact.rhs)


class Saturator:
    """Applies the calculus for one goal. Instantiated per query."""

    def __init__(self, axioms: Iterable[NormalAxiom], settings: Optional[Settings] = None):
        self.settings = settings or default_settings
        self.context_budget = self.settings.reasoner.context_budget
        self.step_budget = self.settings.reasoner.step_budget

        self.clauses_by_body: Dict[str, List[ClauseAxiom]] = {}
        self.unit_clauses: List[ClauseAxiom] = []
        self.exists_right: Dict[str, List[ExistsRight]] = {}
        self.exists_left: Dict[str, List[ExistsLeft]] = {}
        self.forall_right: Dict[str, List[ForAllRight]] = {}
        self.role_axioms: Dict[str, List[RoleAxiom]] = {}
        roles: Set[str] = set()

        for ax in axioms:
            if isinstance(ax, ClauseAxiom):
                if not ax.body:
                    self.unit_clauses.append(ax)
                for name in ax.body:
                    self.clauses_by_body.setdefault(name, []).append(ax)
            elif isinstance(ax, ExistsRight):
                self.exists_right.setdefault(ax.lhs, []).append(ax)
                roles.add(ax.role)
            elif isinstance(ax, ExistsLeft):
                self.exists_left.setdefault(ax.filler, []).append(ax)
                roles.add(ax.role)
            elif isinstance(ax, ForAllRight):
                self.forall_right.setdefault(ax.lhs, []).append(ax)
                roles.add(ax.role)
            elif isinstance(ax, RoleAxiom):
                self.role_axioms.setdefault(ax.sub, []).append(ax)
                roles.update((ax.sub, ax.sup))
        self.roles = sorted(roles)

        self.steps: List[TraceStep] = []
        self._step_keys: Set[TraceStep] = set()
        self._derived: Set[DerivedSubsumption] = set()
        self._queue: Deque[DerivedSubsumption] = deque()
        self._contexts: Set[FrozenSet[Literal]] = set()
        self._atoms: Dict[FrozenSet[Literal], Dict[str, List[DerivedSubsumption]]] = {}
        self._exists_in: Dict[FrozenSet[Literal], List[Tuple[DerivedSubsumption, Existential]]] = {}
        self._exist_users: Dict[FrozenSet[Literal], List[Tuple[DerivedSubsumption, Existential]]] = {}
        self._bottoms: Dict[FrozenSet[Literal], DerivedSubsumption] = {}
        self._role_sups: Dict[str, Dict[str, RoleSubsumption]] = {}
        self._goal: Optional[DerivedSubsumption] = None
        self._goal_ctx: Optional[FrozenSet[Literal]] = None
        self.order: Optional[DisjunctOrder] = None

    def run(self, lhs: str, rhs: str) -> InferenceTrace:
        self._goal = goal_fact(lhs, rhs)
        self._goal_ctx = self._goal.lhs
        self.order = DisjunctOrder(rhs)
        self._saturate_roles()
        self._activate(self._goal_ctx)
        while self._queue:
            self._process(self._queue.popleft())
        concluded = self._goal in self._derived
        logger.debug(
            f"Saturation for {lhs} ⊑ {rhs}: {len(self.steps)} steps, "
            f"{len(self._contexts)} contexts, concluded={concluded}"
        )
        return InferenceTrace(self.steps, self._goal, concluded, len(self._contexts))

    # bookkeeping

    def _record(self, rule: str, premises: Tuple[Fact, ...], axioms: Tuple[Optional[str], ...], conclusion: Fact) -> bool:
        if rule != Rules.INIT and isinstance(conclusion, DerivedSubsumption) and is_tautology(conclusion):
            return False
        step = TraceStep(rule, premises, tuple(a for a in axioms if a is not None), conclusion)
        if step in self._step_keys:
            return False
        if len(self.steps) >= self.step_budget:
            raise ResourceLimit(f"saturation step budget of {self.step_budget} exceeded")
        self._step_keys.add(step)
        self.steps.append(step)
        if isinstance(conclusion, DerivedSubsumption) and conclusion not in self._derived:
            self._derived.add(conclusion)
            self._queue.append(conclusion)
        return True

    def _activate(self, ctx: FrozenSet[Literal]):
        if ctx in self._contexts:
            return
        if len(self._contexts) >= self.context_budget:
            raise ResourceLimit(f"saturation context budget of {self.context_budget} exceeded")
        self._contexts.add(ctx)
        self._atoms[ctx] = {}
        self._exists_in[ctx] = []
        for lit in sorted(ctx):
            if lit.positive:
                self._record(Rules.INIT, (), (), DerivedSubsumption(ctx, frozenset((lit.name,))))
        for cl in self.unit_clauses:
            self._record(Rules.AND, (), (cl.source,), DerivedSubsumption(ctx, frozenset(cl.head)))

    def _saturate_roles(self):
        queue: Deque[RoleSubsumption] = deque()
        for r in self.roles:
            fact = RoleSubsumption(r, r)
            self._record(Rules.ROLE_INIT, (), (), fact)
            self._role_sups[r] = {r: fact}
            queue.append(fact)
        while queue:
            fact = queue.popleft()
            for ax in self.role_axioms.get(fact.sup, ()):
                concl = RoleSubsumption(fact.sub, ax.sup)
                self._record(Rules.ROLE, (fact,), (ax.source,), concl)
                sups = self._role_sups[fact.sub]
                if ax.sup not in sups:
                    sups[ax.sup] = concl
                    queue.append(concl)

    def _role_fact(self, sub: str, sup: str) -> Optional[RoleSubsumption]:
        return self._role_sups.get(sub, {}).get(sup)

    # rule application

    def _process(self, fact: DerivedSubsumption):
        ctx, rhs = fact.lhs, fact.rhs

        if not rhs:
            self._bottoms[ctx] = fact
            for g, e in list(self._exist_users.get(ctx, ())):
                self._record(Rules.BOT, (g, fact), (), DerivedSubsumption(g.lhs, g.rhs - {e}))
            if ctx == self._goal_ctx:
                self._record(Rules.WEAKEN, (fact,), (), self._goal)
            return

        top = self.order.maximal(rhs)
        if isinstance(top, str):
            self._atoms[ctx].setdefault(top, []).append(fact)
            self._process_atom(fact, top)
        else:
            self._exists_in[ctx].append((fact, top))
            self._exist_users.setdefault(top.filler, []).append((fact, top))
            self._process_existential(fact, top)

    def _process_atom(self, fact: DerivedSubsumption, a: str):
        ctx = fact.lhs
        rest = fact.rhs - {a}

        if Literal(a, False) in ctx:
            self._record(Rules.NEG, (fact,), (), DerivedSubsumption(ctx, rest))

        for cl in self.clauses_by_body.get(a, ()):
            self._hyperresolve(fact, a, cl)

        for ax in self.exists_right.get(a, ()):
            ex = Existential(ax.role, frozenset((Literal(ax.filler),)))
            self._record(Rules.EX_POS, (fact,), (ax.source,), DerivedSubsumption(ctx, rest | {ex}))

        for ax in self.forall_right.get(a, ()):
            for g, e in list(self._exists_in[ctx]):
                self._apply_all(g, e, fact, a, ax)

        for ax in self.exists_left.get(a, ()):
            for g, e in list(self._exist_users.get(ctx, ())):
                self._apply_exists_left(g, e, fact, a, ax)

    def _process_existential(self, fact: DerivedSubsumption, e: Existential):
        ctx, k = fact.lhs, e.filler
        self._activate(k)

        if k in self._bottoms:
            self._record(Rules.BOT, (fact, self._bottoms[k]), (), DerivedSubsumption(ctx, fact.rhs - {e}))

        for a, facts in list(self._atoms[k].items()):
            for ax in self.exists_left.get(a, ()):
                for f in list(facts):
                    self._apply_exists_left(fact, e, f, a, ax)

        for a, facts in list(self._atoms[ctx].items()):
            for ax in self.forall_right.get(a, ()):
                for f in list(facts):
                    self._apply_all(fact, e, f, a, ax)

    def _hyperresolve(self, fact: DerivedSubsumption, a: str, cl: ClauseAxiom):
        atoms = self._atoms[fact.lhs]
        others = [b for b in cl.body if b != a]
        choices = [atoms.get(b) for b in others]
        if any(not c for c in choices):
            return
        for combo in itertools.product(*choices):
            chosen = dict(zip(others, combo))
            chosen[a] = fact
            premises = tuple(chosen[b] for b in cl.body)
            rhs = frozenset(cl.head).union(*(chosen[b].rhs - {b} for b in cl.body))
            self._record(Rules.AND, premises, (cl.source,), DerivedSubsumption(fact.lhs, rhs))

    def _apply_all(self, g: DerivedSubsumption, e: Existential, f: DerivedSubsumption, a: str, ax: ForAllRight):
        role_fact = self._role_fact(e.role, ax.role)
        b = Literal(ax.filler)
        if role_fact is None or b in e.filler:
            return
        ex = Existential(e.role, e.filler | {b})
        rhs = (g.rhs - {e}) | (f.rhs - {a}) | {ex}
        self._record(Rules.ALL, (g, f, role_fact), (ax.source,), DerivedSubsumption(g.lhs, rhs))

    def _apply_exists_left(self, g: DerivedSubsumption, e: Existential, f: DerivedSubsumption, a: str, ax: ExistsLeft):
        role_fact = self._role_fact(e.role, ax.role)
        neg = Literal(a, False)
        if role_fact is None or neg in e.filler:
            return
        ex = Existential(e.role, e.filler | {neg})
        rhs = (g.rhs - {e}) | {ax.rhs, ex}
        self._record(Rules.EX_NEG, (g, f, role_fact), (ax.source,), DerivedSubsumption(g.lhs, rhs))


def _atomic_goal(goal: Gci) -> Tuple[str, str]:
    if not (isinstance(goal.lhs, Name) and isinstance(goal.rhs, Name)):
        raise PreconditionViolated(f"saturation needs an atomic goal A ⊑ B, got {goal}")
    return goal.lhs.name, goal.rhs.name


def saturate_with_tracing(n: NormalizedTBox, goal: Gci, settings: Optional[Settings] = None) -> InferenceTrace:
    """
    Saturate the normalized TBox from the goal's left-hand side.

    Args:
        n: normalized TBox
        goal: atomic inclusion A ⊑ B

    Returns:
        InferenceTrace whose concluded flag tells whether A ⊑ B was derived

    Raises:
        PreconditionViolated: goal is not atomic
        ResourceLimit: context or step budget exceeded
    """
    lhs, rhs = _atomic_goal(goal)
    return Saturator(n.axioms, settings).run(lhs, rhs)


def saturation_entails(o: Ontology, goal: Gci, settings: Optional[Settings] = None) -> bool:
    """Entailment decided by the saturation engine instead of the tableau"""
    return saturate_with_tracing(normalize(o), goal, settings).concluded

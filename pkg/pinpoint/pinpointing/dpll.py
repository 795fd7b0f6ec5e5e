# filepath: pinpoint/pinpointing/dpll.py
"""
Propositional satisfiability for pinpointing formulas.

DpllSolver is a complete DPLL procedure with two watched literals and
chronological backtracking. SatOracle wraps it (or a python-sat solver,
depending on settings.sat_backend) and counts calls.
"""
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pysat.solvers import Solver

from pinpoint.core.config import Settings, settings as default_settings

logger = logging.getLogger(__name__)

Clause = Sequence[int]
Model = Dict[int, bool]


class DpllSolver:
    def __init__(self, clauses: Iterable[Clause]):
        self.clauses: List[List[int]] = []
        self.units: List[int] = []
        self.has_empty = False
        variables = set()
        for clause in clauses:
            lits = list(dict.fromkeys(clause))
            variables.update(abs(lit) for lit in lits)
            if not lits:
                self.has_empty = True
            elif any(-lit in lits for lit in lits):
                continue
            elif len(lits) == 1:
                self.units.append(lits[0])
            else:
                self.clauses.append(lits)
        self.variables = sorted(variables)

    def solve(self, phase: bool = False) -> Optional[Model]:
        """
        Search for a model.

        Args:
            phase: polarity tried first at decisions and given to unconstrained variables

        Returns:
            A total model over the formula's variables, or None when unsatisfiable
        """
        if self.has_empty:
            return None

        clauses = [list(c) for c in self.clauses]
        watches: Dict[int, List[int]] = {}
        for idx, c in enumerate(clauses):
            watches.setdefault(c[0], []).append(idx)
            watches.setdefault(c[1], []).append(idx)

        assign: Model = {}
        trail: List[int] = []
        qhead = 0

        def value(lit: int) -> Optional[bool]:
            v = assign.get(abs(lit))
            return None if v is None else v == (lit > 0)

        def enqueue(lit: int) -> bool:
            v = value(lit)
            if v is None:
                assign[abs(lit)] = lit > 0
                trail.append(lit)
                return True
            return v

        def propagate() -> bool:
            nonlocal qhead
            while qhead < len(trail):
                false_lit = -trail[qhead]
                qhead += 1
                watching = watches.get(false_lit)
                if not watching:
                    continue
                kept: List[int] = []
                i = 0
                while i < len(watching):
                    idx = watching[i]
                    i += 1
                    c = clauses[idx]
                    if c[0] == false_lit:
                        c[0], c[1] = c[1], c[0]
                    if value(c[0]) is True:
                        kept.append(idx)
                        continue
                    moved = False
                    for k in range(2, len(c)):
                        if value(c[k]) is not False:
                            c[1], c[k] = c[k], c[1]
                            watches.setdefault(c[1], []).append(idx)
                            moved = True
                            break
                    if moved:
                        continue
                    kept.append(idx)
                    if value(c[0]) is False:
                        kept.extend(watching[i:])
                        watches[false_lit] = kept
                        return False
                    enqueue(c[0])
                watches[false_lit] = kept
            return True

        for unit in self.units:
            if not enqueue(unit):
                return None

        decisions: List[Tuple[int, bool, int]] = []
        while True:
            if not propagate():
                while decisions:
                    lit, flipped, mark = decisions.pop()
                    for undone in trail[mark:]:
                        del assign[abs(undone)]
                    del trail[mark:]
                    qhead = mark
                    if not flipped:
                        decisions.append((-lit, True, mark))
                        enqueue(-lit)
                        break
                else:
                    return None
                continue

            var = next((v for v in self.variables if v not in assign), None)
            if var is None:
                return dict(assign)
            lit = var if phase else -var
            decisions.append((lit, False, len(trail)))
            enqueue(lit)


class SatOracle:
    """Counted satisfiability checks on the configured backend"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or default_settings
        self.backend = self.settings.sat_backend
        self.calls = 0

    def solve(self, clauses: Sequence[Clause], phase: bool = False) -> Optional[Model]:
        self.calls += 1
        if self.backend == "pysat":
            return self._solve_pysat(clauses, phase)
        return DpllSolver(clauses).solve(phase)

    def is_sat(self, clauses: Sequence[Clause]) -> bool:
        return self.solve(clauses) is not None

    def _solve_pysat(self, clauses: Sequence[Clause], phase: bool) -> Optional[Model]:
        if any(len(c) == 0 for c in clauses):
            return None
        variables = sorted({abs(lit) for c in clauses for lit in c})
        with Solver(name=self.settings.pysat_solver, bootstrap_with=[list(c) for c in clauses]) as solver:
            solver.set_phases([v if phase else -v for v in variables])
            if not solver.solve():
                return None
            model = {abs(lit): lit > 0 for lit in solver.get_model() or []}
        return {v: model.get(v, phase) for v in variables}


def sat(clauses: Iterable[Clause]) -> bool:
    """True iff the clause set is satisfiable"""
    return DpllSolver(clauses).solve() is not None

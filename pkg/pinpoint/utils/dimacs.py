# filepath: pinpoint/utils/dimacs.py
"""
Export of pinpointing formulas for external SAT and group-MUS tools.

DIMACS output carries the variable map as comment lines:
    c axiom <id> var <k>
    c goal var <k>
GCNF puts every non-axiom clause in the hard group {0} and each axiom unit
in its own group, numbered by ontology order.
"""
import io
import logging
from pathlib import Path
from typing import List, Union

from pysat.formula import CNF

from pinpoint.pinpointing.encoding import AxiomLabel, PinpointingFormula

logger = logging.getLogger(__name__)


def _comments(f: PinpointingFormula) -> List[str]:
    lines = [f"c axiom {label.id} var {var}" for var, label in sorted(f.labels.items()) if isinstance(label, AxiomLabel)]
    lines.append(f"c goal var {f.goal_var}")
    return lines


def formula_to_dimacs(f: PinpointingFormula) -> str:
    cnf = CNF(from_clauses=[list(c) for c in f.clauses])
    cnf.nv = max(cnf.nv, f.num_vars)
    buffer = io.StringIO()
    cnf.to_fp(buffer, comments=_comments(f))
    return buffer.getvalue()


def formula_to_gcnf(f: PinpointingFormula) -> str:
    groups = {idx: g for g, (_, idx) in enumerate(sorted(f.axiom_units.items(), key=lambda kv: kv[1]), start=1)}
    lines = _comments(f)
    lines.append(f"p gcnf {f.num_vars} {len(f.clauses)} {len(groups)}")
    for idx, clause in enumerate(f.clauses):
        lits = " ".join(str(lit) for lit in clause)
        lines.append(f"{{{groups.get(idx, 0)}}} {lits} 0")
    return "\n".join(lines) + "\n"


def write_formula(f: PinpointingFormula, path: Union[str, Path], gcnf: bool = False):
    text = formula_to_gcnf(f) if gcnf else formula_to_dimacs(f)
    Path(path).write_text(text, encoding="utf-8")
    logger.info(f"Wrote {'GCNF' if gcnf else 'DIMACS'} formula with {len(f)} clauses to {path}")

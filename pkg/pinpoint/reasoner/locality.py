# filepath: pinpoint/reasoner/locality.py
"""
Syntactic ⊥- and ⊤-locality and ⊥⊤* module extraction.

An axiom is ⊥-local (⊤-local) w.r.t. a signature when replacing every
concept and role name outside the signature by ⊥ (by ⊤ and the universal
role) turns it into a tautology. The checks below are the usual syntactic
approximations via the classes of ⊥- and ⊤-equivalent concepts.
"""
import logging
from typing import Set

from pinpoint.models import (
    All, And, Axiom, Bot, ConceptExpr, Gci, Name, Not, Ontology, Or, RoleInclusion, Signature, Some, Top,
    signature_of,
)

logger = logging.getLogger(__name__)


def _bot_equiv(c: ConceptExpr, sig: Signature, top_mode: bool) -> bool:
    if isinstance(c, Bot):
        return True
    if isinstance(c, Top):
        return False
    if isinstance(c, Name):
        return not top_mode and c.name not in sig.concept_names
    if isinstance(c, Not):
        return _top_equiv(c.c, sig, top_mode)
    if isinstance(c, And):
        return any(_bot_equiv(x, sig, top_mode) for x in c.cs)
    if isinstance(c, Or):
        return all(_bot_equiv(x, sig, top_mode) for x in c.cs)
    if isinstance(c, Some):
        if not top_mode and c.role not in sig.role_names:
            return True
        return _bot_equiv(c.c, sig, top_mode)
    if isinstance(c, All):
        return top_mode and c.role not in sig.role_names and _bot_equiv(c.c, sig, top_mode)
    raise TypeError(f"not a concept: {c!r}")


def _top_equiv(c: ConceptExpr, sig: Signature, top_mode: bool) -> bool:
    if isinstance(c, Top):
        return True
    if isinstance(c, Bot):
        return False
    if isinstance(c, Name):
        return top_mode and c.name not in sig.concept_names
    if isinstance(c, Not):
        return _bot_equiv(c.c, sig, top_mode)
    if isinstance(c, And):
        return all(_top_equiv(x, sig, top_mode) for x in c.cs)
    if isinstance(c, Or):
        return any(_top_equiv(x, sig, top_mode) for x in c.cs)
    if isinstance(c, Some):
        return top_mode and c.role not in sig.role_names and _top_equiv(c.c, sig, top_mode)
    if isinstance(c, All):
        if not top_mode and c.role not in sig.role_names:
            return True
        return _top_equiv(c.c, sig, top_mode)
    raise TypeError(f"not a concept: {c!r}")


def _is_local(ax: Axiom, sig: Signature, top_mode: bool) -> bool:
    kind = ax.kind
    if isinstance(kind, RoleInclusion):
        if top_mode:
            return kind.sup not in sig.role_names
        return kind.sub not in sig.role_names
    if isinstance(kind, Gci):
        return _bot_equiv(kind.lhs, sig, top_mode) or _top_equiv(kind.rhs, sig, top_mode)
    raise TypeError(f"not an axiom: {ax!r}")


def is_bot_local(ax: Axiom, sig: Signature) -> bool:
    return _is_local(ax, sig, top_mode=False)


def is_top_local(ax: Axiom, sig: Signature) -> bool:
    return _is_local(ax, sig, top_mode=True)


def _extract(o: Ontology, sig: Signature, top_mode: bool) -> Ontology:
    current = sig
    selected: Set[str] = set()
    changed = True
    while changed:
        changed = False
        for ax in o:
            if ax.id in selected or _is_local(ax, current, top_mode):
                continue
            selected.add(ax.id)
            current = current | signature_of(ax)
            changed = True
    return o.subset(selected)


def extract_bot_module(o: Ontology, sig: Signature) -> Ontology:
    return _extract(o, sig, top_mode=False)


def extract_top_module(o: Ontology, sig: Signature) -> Ontology:
    return _extract(o, sig, top_mode=True)


def extract_star_module(o: Ontology, sig: Signature) -> Ontology:
    """
    ⊥⊤* module: alternate ⊥- and ⊤-extraction until nothing changes.

    The result keeps the source ids and order and preserves every entailment
    (hence every justification) over the signature.
    """
    module = o
    while True:
        shrunk = extract_top_module(extract_bot_module(module, sig), sig)
        if len(shrunk) == len(module):
            break
        module = shrunk
    logger.debug(f"Star module: {len(module)} of {len(o)} axioms")
    return module


def module_for_goal(o: Ontology, goal: Gci) -> Ontology:
    return extract_star_module(o, signature_of(goal))

from .concept import (
    TOP, BOT, All, And, Bot, ConceptExpr, Name, Not, Or, Some, Top,
    conjunction, disjunction, nnf, nnf_not, render,
)
from .axiom import Axiom, AxiomKind, Gci, RoleInclusion
from .ontology import Ontology, Signature, signature_of

__all__ = [
    "TOP", "BOT", "All", "And", "Bot", "ConceptExpr", "Name", "Not", "Or", "Some", "Top",
    "conjunction", "disjunction", "nnf", "nnf_not", "render",
    "Axiom", "AxiomKind", "Gci", "RoleInclusion",
    "Ontology", "Signature", "signature_of",
]

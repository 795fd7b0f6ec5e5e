# filepath: pinpoint/models/axiom.py
from dataclasses import dataclass
from typing import Union

from .concept import ConceptExpr, Name, render


@dataclass(frozen=True)
class Gci:
    """General concept inclusion lhs ⊑ rhs"""
    lhs: ConceptExpr
    rhs: ConceptExpr

    @property
    def is_atomic(self) -> bool:
        return isinstance(self.lhs, Name) and isinstance(self.rhs, Name)

    def __str__(self) -> str:
        return f"(sub {render(self.lhs)} {render(self.rhs)})"


@dataclass(frozen=True)
class RoleInclusion:
    """Role inclusion sub ⊑ sup"""
    sub: str
    sup: str

    def __str__(self) -> str:
        return f"(rsub {self.sub} {self.sup})"


AxiomKind = Union[Gci, RoleInclusion]


@dataclass(frozen=True)
class Axiom:
    id: str
    kind: AxiomKind

    def __str__(self) -> str:
        return f"{self.id}: {self.kind}"

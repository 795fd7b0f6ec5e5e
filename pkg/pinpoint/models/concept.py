# filepath: pinpoint/models/concept.py
"""
ALC concept expressions.

Concepts are immutable, hashable values so they can be used as dictionary
keys and set members by the reasoners. Equality is structural.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union


@dataclass(frozen=True)
class Top:
    def __str__(self) -> str:
        return "Top"


@dataclass(frozen=True)
class Bot:
    def __str__(self) -> str:
        return "Bot"


@dataclass(frozen=True)
class Name:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Not:
    c: "ConceptExpr"

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class And:
    cs: Tuple["ConceptExpr", ...]

    def __post_init__(self):
        if len(self.cs) < 2:
            raise ValueError("And requires at least two conjuncts")

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Or:
    cs: Tuple["ConceptExpr", ...]

    def __post_init__(self):
        if len(self.cs) < 2:
            raise ValueError("Or requires at least two disjuncts")

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Some:
    role: str
    c: "ConceptExpr"

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class All:
    role: str
    c: "ConceptExpr"

    def __str__(self) -> str:
        return render(self)


ConceptExpr = Union[Top, Bot, Name, Not, And, Or, Some, All]

TOP = Top()
BOT = Bot()


@lru_cache(maxsize=None)
def render(c: ConceptExpr) -> str:
    """Canonical s-expression text of a concept (also used as a sort key)"""
    if isinstance(c, (Top, Bot, Name)):
        return str(c)
    if isinstance(c, Not):
        return f"(not {render(c.c)})"
    if isinstance(c, And):
        return "(and " + " ".join(render(x) for x in c.cs) + ")"
    if isinstance(c, Or):
        return "(or " + " ".join(render(x) for x in c.cs) + ")"
    if isinstance(c, Some):
        return f"(some {c.role} {render(c.c)})"
    if isinstance(c, All):
        return f"(all {c.role} {render(c.c)})"
    raise TypeError(f"not a concept: {c!r}")


def conjunction(cs) -> ConceptExpr:
    """Build a conjunction, collapsing the 0- and 1-element cases"""
    cs = tuple(cs)
    if not cs:
        return TOP
    if len(cs) == 1:
        return cs[0]
    return And(cs)


def disjunction(cs) -> ConceptExpr:
    """Build a disjunction, collapsing the 0- and 1-element cases"""
    cs = tuple(cs)
    if not cs:
        return BOT
    if len(cs) == 1:
        return cs[0]
    return Or(cs)


@lru_cache(maxsize=None)
def nnf(c: ConceptExpr) -> ConceptExpr:
    """Negation normal form: negation is pushed down to concept names"""
    if isinstance(c, (Top, Bot, Name)):
        return c
    if isinstance(c, Not):
        return nnf_not(c.c)
    if isinstance(c, And):
        return And(tuple(nnf(x) for x in c.cs))
    if isinstance(c, Or):
        return Or(tuple(nnf(x) for x in c.cs))
    if isinstance(c, Some):
        return Some(c.role, nnf(c.c))
    if isinstance(c, All):
        return All(c.role, nnf(c.c))
    raise TypeError(f"not a concept: {c!r}")


@lru_cache(maxsize=None)
def nnf_not(c: ConceptExpr) -> ConceptExpr:
    """Negation normal form of the complement of c"""
    if isinstance(c, Top):
        return BOT
    if isinstance(c, Bot):
        return TOP
    if isinstance(c, Name):
        return Not(c)
    if isinstance(c, Not):
        return nnf(c.c)
    if isinstance(c, And):
        return Or(tuple(nnf_not(x) for x in c.cs))
    if isinstance(c, Or):
        return And(tuple(nnf_not(x) for x in c.cs))
    if isinstance(c, Some):
        return All(c.role, nnf_not(c.c))
    if isinstance(c, All):
        return Some(c.role, nnf_not(c.c))
    raise TypeError(f"not a concept: {c!r}")

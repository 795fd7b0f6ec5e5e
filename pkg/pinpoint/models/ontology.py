# filepath: pinpoint/models/ontology.py
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

from pinpoint.core.exceptions import DuplicateId
from .axiom import Axiom, Gci, RoleInclusion
from .concept import All, And, Bot, ConceptExpr, Name, Not, Or, Some, Top


class Ontology:
    """
    Ordered, immutable collection of axioms with unique ids.

    Iteration follows textual order; every search algorithm relies on this
    order for determinism. Set operations work on axiom ids.
    """

    __slots__ = ("_axioms", "_index", "_position")

    def __init__(self, axioms: Iterable[Axiom] = ()):
        self._axioms: Tuple[Axiom, ...] = tuple(axioms)
        self._index: Dict[str, Axiom] = {}
        self._position: Dict[str, int] = {}
        for pos, ax in enumerate(self._axioms):
            if ax.id in self._index:
                raise DuplicateId(ax.id)
            self._index[ax.id] = ax
            self._position[ax.id] = pos

    @property
    def axioms(self) -> Tuple[Axiom, ...]:
        return self._axioms

    @property
    def ids(self) -> List[str]:
        return [ax.id for ax in self._axioms]

    def __len__(self) -> int:
        return len(self._axioms)

    def __iter__(self) -> Iterator[Axiom]:
        return iter(self._axioms)

    def __contains__(self, axiom_id: object) -> bool:
        return axiom_id in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ontology):
            return NotImplemented
        return self._axioms == other._axioms

    def __hash__(self) -> int:
        return hash(self._axioms)

    def __repr__(self) -> str:
        return f"Ontology({[str(ax) for ax in self._axioms]})"

    def get(self, axiom_id: str) -> Optional[Axiom]:
        return self._index.get(axiom_id)

    def position(self, axiom_id: str) -> int:
        return self._position[axiom_id]

    def subset(self, ids: Iterable[str]) -> "Ontology":
        """Sub-ontology with the given ids, in this ontology's order"""
        keep = set(ids)
        return Ontology(ax for ax in self._axioms if ax.id in keep)

    def without(self, ids: Iterable[str]) -> "Ontology":
        drop = set(ids)
        return Ontology(ax for ax in self._axioms if ax.id not in drop)

    def sort_ids(self, ids: Iterable[str]) -> List[str]:
        """Order axiom ids by their position in this ontology"""
        return sorted(ids, key=self._position.__getitem__)


@dataclass(frozen=True)
class Signature:
    concept_names: FrozenSet[str] = frozenset()
    role_names: FrozenSet[str] = frozenset()

    def __or__(self, other: "Signature") -> "Signature":
        return Signature(self.concept_names | other.concept_names, self.role_names | other.role_names)

    def __len__(self) -> int:
        return len(self.concept_names) + len(self.role_names)


def _collect(c: ConceptExpr, concepts: set, roles: set):
    if isinstance(c, Name):
        concepts.add(c.name)
    elif isinstance(c, (Top, Bot)):
        return
    elif isinstance(c, Not):
        _collect(c.c, concepts, roles)
    elif isinstance(c, (And, Or)):
        for x in c.cs:
            _collect(x, concepts, roles)
    elif isinstance(c, (Some, All)):
        roles.add(c.role)
        _collect(c.c, concepts, roles)
    else:
        raise TypeError(f"not a concept: {c!r}")


def signature_of(x: Union[Axiom, Gci, RoleInclusion, ConceptExpr, Ontology]) -> Signature:
    """Concept and role names occurring syntactically in x"""
    concepts: set = set()
    roles: set = set()
    items = x if isinstance(x, Ontology) else (x,)
    for item in items:
        kind = item.kind if isinstance(item, Axiom) else item
        if isinstance(kind, Gci):
            _collect(kind.lhs, concepts, roles)
            _collect(kind.rhs, concepts, roles)
        elif isinstance(kind, RoleInclusion):
            roles.update((kind.sub, kind.sup))
        else:
            _collect(kind, concepts, roles)
    return Signature(frozenset(concepts), frozenset(roles))

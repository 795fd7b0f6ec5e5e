# filepath: pinpoint/reasoner/normalization.py
"""
Structural transformation of ALC TBoxes into the normal forms consumed by
the saturation calculus:

    A1 ⊓ ... ⊓ An ⊑ B1 ⊔ ... ⊔ Bm     (ClauseAxiom, n, m >= 0)
    A ⊑ ∃R.B                          (ExistsRight)
    ∃R.A ⊑ B                          (ExistsLeft)
    A ⊑ ∀R.B                          (ForAllRight)
    R ⊑ S                             (RoleAxiom)

Each axiom is transformed on its own, so the normal form of a sub-ontology
is exactly the union of the normal forms of its axioms. Fresh names are
derived from the axiom id ('#ax3.1', '#ax3.2', ...); '#' never occurs in
parsed names.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from pinpoint.models import (
    All, And, Bot, ConceptExpr, Name, Not, Ontology, Or, RoleInclusion, Some, Top,
    nnf, nnf_not,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClauseAxiom:
    body: Tuple[str, ...]
    head: Tuple[str, ...]
    source: Optional[str] = None

    def __str__(self) -> str:
        lhs = " ⊓ ".join(self.body) or "⊤"
        rhs = " ⊔ ".join(self.head) or "⊥"
        return f"{lhs} ⊑ {rhs}"


@dataclass(frozen=True)
class ExistsRight:
    lhs: str
    role: str
    filler: str
    source: Optional[str] = None

    def __str__(self) -> str:
        return f"{self.lhs} ⊑ ∃{self.role}.{self.filler}"


@dataclass(frozen=True)
class ExistsLeft:
    role: str
    filler: str
    rhs: str
    source: Optional[str] = None

    def __str__(self) -> str:
        return f"∃{self.role}.{self.filler} ⊑ {self.rhs}"


@dataclass(frozen=True)
class ForAllRight:
    lhs: str
    role: str
    filler: str
    source: Optional[str] = None

    def __str__(self) -> str:
        return f"{self.lhs} ⊑ ∀{self.role}.{self.filler}"


@dataclass(frozen=True)
class RoleAxiom:
    sub: str
    sup: str
    source: Optional[str] = None

    def __str__(self) -> str:
        return f"{self.sub} ⊑ {self.sup}"


NormalAxiom = Union[ClauseAxiom, ExistsRight, ExistsLeft, ForAllRight, RoleAxiom]


@dataclass
class NormalizedTBox:
    axioms: List[NormalAxiom] = field(default_factory=list)
    fresh_names: FrozenSet[str] = frozenset()

    @property
    def provenance(self) -> Dict[NormalAxiom, FrozenSet[str]]:
        return {ax: frozenset((ax.source,)) for ax in self.axioms if ax.source is not None}

    def __len__(self) -> int:
        return len(self.axioms)


# an item is a disjunct of a clause ⊤ ⊑ ⊔ items, tagged with the side it came from
_Item = Tuple[ConceptExpr, bool]  # (concept in NNF, from_lhs)


def _disjuncts(c: ConceptExpr) -> List[ConceptExpr]:
    if isinstance(c, Or):
        out: List[ConceptExpr] = []
        for d in c.cs:
            out.extend(_disjuncts(d))
        return out
    return [c]


def _is_literal(c: ConceptExpr) -> bool:
    return isinstance(c, Name) or (isinstance(c, Not) and isinstance(c.c, Name))


class _AxiomNormalizer:
    """Normal forms of a single axiom"""

    def __init__(self, source: Optional[str], prefix: str):
        self.source = source
        self.prefix = prefix
        self.counter = 0
        self.out: List[NormalAxiom] = []
        self.fresh: List[str] = []

    def fresh_name(self) -> str:
        self.counter += 1
        name = f"#{self.prefix}.{self.counter}"
        self.fresh.append(name)
        return name

    def gci(self, lhs: ConceptExpr, rhs: ConceptExpr):
        items = [(d, True) for d in _disjuncts(nnf_not(lhs))]
        items += [(d, False) for d in _disjuncts(nnf(rhs))]
        self.clause(items)

    def name_pos(self, c: ConceptExpr) -> str:
        """A name X with X ⊑ c"""
        if isinstance(c, Name):
            return c.name
        x = self.fresh_name()
        if not isinstance(c, Top):
            self.clause([(Not(Name(x)), True)] + [(d, False) for d in _disjuncts(c)])
        return x

    def name_neg(self, c: ConceptExpr) -> str:
        """A name W with c ⊑ W"""
        if isinstance(c, Name):
            return c.name
        w = self.fresh_name()
        if not isinstance(c, Bot):
            self.clause([(d, True) for d in _disjuncts(nnf_not(c))] + [(Name(w), False)])
        return w

    def clause(self, items: List[_Item]):
        """Emit normal forms for ⊤ ⊑ ⊔ items"""
        flat: List[_Item] = []
        for c, from_lhs in items:
            for d in _disjuncts(c):
                if isinstance(d, Top):
                    return
                if isinstance(d, Bot):
                    continue
                flat.append((d, from_lhs))

        ands = [i for i, (c, _) in enumerate(flat) if isinstance(c, And)]
        if len(ands) == 1 and all(_is_literal(c) for i, (c, _) in enumerate(flat) if i != ands[0]):
            # distribute the single conjunction over the literal disjuncts
            conj, side = flat[ands[0]]
            rest = flat[:ands[0]] + flat[ands[0] + 1:]
            for d in conj.cs:
                self.clause(rest + [(d, side)])
            return

        body: List[str] = []
        head: List[str] = []
        complex_items: List[_Item] = []
        for c, from_lhs in flat:
            if isinstance(c, Name):
                head.append(c.name)
            elif isinstance(c, Not) and isinstance(c.c, Name):
                body.append(c.c.name)
            else:
                complex_items.append((c, from_lhs))

        if len(complex_items) == 1 and len(body) == 1 and not head:
            c, from_lhs = complex_items[0]
            if isinstance(c, Some):
                self.out.append(ExistsRight(body[0], c.role, self.name_pos(c.c), self.source))
                return
            if isinstance(c, All) and not from_lhs:
                self.out.append(ForAllRight(body[0], c.role, self.name_pos(c.c), self.source))
                return

        if len(complex_items) == 1 and not body and len(head) == 1:
            c, from_lhs = complex_items[0]
            if isinstance(c, All) and from_lhs:
                filler = self.name_neg(nnf_not(c.c))
                self.out.append(ExistsLeft(c.role, filler, head[0], self.source))
                return

        for c, from_lhs in complex_items:
            if isinstance(c, Some):
                x = self.fresh_name()
                self.out.append(ExistsRight(x, c.role, self.name_pos(c.c), self.source))
                head.append(x)
            elif isinstance(c, All) and from_lhs:
                z = self.fresh_name()
                filler = self.name_neg(nnf_not(c.c))
                self.out.append(ExistsLeft(c.role, filler, z, self.source))
                body.append(z)
            elif isinstance(c, All):
                x = self.fresh_name()
                self.out.append(ForAllRight(x, c.role, self.name_pos(c.c), self.source))
                head.append(x)
            elif isinstance(c, And):
                head.append(self.name_pos(c))
            else:
                raise TypeError(f"unexpected concept in clause: {c!r}")

        self.out.append(ClauseAxiom(
            tuple(dict.fromkeys(body)), tuple(dict.fromkeys(head)), self.source
        ))


def normalize(o: Ontology) -> NormalizedTBox:
    """
    Normalize every axiom of the ontology.

    Each normal axiom records the id of the axiom it was produced from in
    its source field; all fresh names are disjoint from the source signature.
    """
    axioms: List[NormalAxiom] = []
    fresh: List[str] = []
    for ax in o:
        if isinstance(ax.kind, RoleInclusion):
            axioms.append(RoleAxiom(ax.kind.sub, ax.kind.sup, ax.id))
            continue
        normalizer = _AxiomNormalizer(ax.id, ax.id)
        normalizer.gci(ax.kind.lhs, ax.kind.rhs)
        axioms.extend(normalizer.out)
        fresh.extend(normalizer.fresh)
    tbox = NormalizedTBox(axioms, frozenset(fresh))
    logger.debug(f"Normalized {len(o)} axioms into {len(tbox)} normal axioms ({len(fresh)} fresh names)")
    return tbox


# filepath: pinpoint/harness/generator.py
"""
Deterministic random ontologies for tests and benchmarks.

Most axioms are inclusions between concept names so that entailed atomic
inclusions with several justifications are common; the rest mix in complex
concepts of the chosen profile and the occasional role inclusion.
"""
import logging
import random
import string
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from pinpoint.core.config import Settings, settings as default_settings
from pinpoint.models import (
    BOT, TOP, All, And, Axiom, ConceptExpr, Gci, Name, Not, Ontology, Or, RoleInclusion, Some,
)

logger = logging.getLogger(__name__)

ROLE_LETTERS = "rstuvwxyz"
LAYER_WIDTH = 2
SUITE_SIZES = (8, 9, 10, 11, 12)


class Profile(str, Enum):
    EL = "el"
    ALC = "alc"
    LAYERED = "layered"  # name inclusions between adjacent layers only


def concept_names(n: int) -> List[str]:
    letters = string.ascii_uppercase
    return [letters[i] if i < len(letters) else f"A{i}" for i in range(n)]


def role_names(n: int) -> List[str]:
    return [ROLE_LETTERS[i] if i < len(ROLE_LETTERS) else f"r{i}" for i in range(n)]


class OntologyGenerator:
    def __init__(self, seed: int, profile: Profile = Profile.EL, settings: Optional[Settings] = None):
        settings = settings or default_settings
        self.rng = random.Random(seed)
        self.profile = Profile(profile)
        self.names = concept_names(settings.generator_concept_names)
        self.roles = role_names(settings.generator_role_names)
        self.layers = [self.names[i:i + LAYER_WIDTH] for i in range(0, len(self.names), LAYER_WIDTH)]

    def name(self) -> Name:
        return Name(self.rng.choice(self.names))

    def concept(self, depth: int = 2) -> ConceptExpr:
        rng = self.rng
        if depth == 0 or rng.random() < 0.4:
            roll = rng.random()
            if roll < 0.05:
                return TOP
            if self.profile is Profile.ALC and roll < 0.08:
                return BOT
            return self.name()

        if self.profile is Profile.EL:
            ctor = rng.choice(["and", "some"])
        else:
            ctor = rng.choice(["and", "or", "not", "some", "all"])

        if ctor == "and":
            return And((self.concept(depth - 1), self.concept(depth - 1)))
        if ctor == "or":
            return Or((self.concept(depth - 1), self.concept(depth - 1)))
        if ctor == "not":
            return Not(self.concept(depth - 1))
        role = rng.choice(self.roles)
        if ctor == "some":
            return Some(role, self.concept(depth - 1))
        return All(role, self.concept(depth - 1))

    def layered_axiom(self) -> Gci:
        """X ⊑ Y with Y one layer below X, occasionally two"""
        i = self.rng.randrange(len(self.layers) - 1)
        j = i + 2 if i + 2 < len(self.layers) and self.rng.random() < 0.2 else i + 1
        return Gci(Name(self.rng.choice(self.layers[i])), Name(self.rng.choice(self.layers[j])))

    def axiom_kind(self):
        if self.profile is Profile.LAYERED:
            return self.layered_axiom()
        roll = self.rng.random()
        if roll < 0.05 and len(self.roles) > 1:
            sub, sup = self.rng.sample(self.roles, 2)
            return RoleInclusion(sub, sup)
        if roll < 0.5:
            return Gci(self.name(), self.name())
        if roll < 0.75:
            return Gci(self.name(), self.concept())
        if roll < 0.9:
            return Gci(self.concept(), self.name())
        return Gci(self.concept(1), self.concept(1))

    def generate(self, n: int) -> Ontology:
        if n < 1:
            raise ValueError("an ontology needs at least one axiom")
        if self.profile is Profile.LAYERED and len(self.layers) < 2:
            raise ValueError(f"the layered profile needs at least {LAYER_WIDTH + 1} concept names")
        axioms = [Axiom(f"ax{i}", self.axiom_kind()) for i in range(1, n + 1)]
        return Ontology(axioms)


def generate_ontology(
    seed: int,
    n: int,
    profile: Profile = Profile.EL,
    settings: Optional[Settings] = None,
) -> Ontology:
    """
    Pseudo-random ontology with n axioms; the same seed gives the same ontology.

    Args:
        seed: random seed
        n: number of axioms (at least 1)
        profile: el (⊓, ∃, Top), alc (adds ¬, ⊔, ∀, Bot) or layered
            (A ⊑ B between consecutive layers of concept names)
    """
    o = OntologyGenerator(seed, profile, settings).generate(n)
    logger.debug(f"Generated {Profile(profile).value} ontology seed={seed} size={n}")
    return o


def generate_suite(
    seeds: Iterable[int],
    profile: Profile = Profile.EL,
    sizes: Sequence[int] = SUITE_SIZES,
    settings: Optional[Settings] = None,
) -> Iterator[Tuple[int, Ontology]]:
    """Yield (seed, ontology) with the size picked from sizes by seed"""
    for seed in seeds:
        yield seed, generate_ontology(seed, sizes[seed % len(sizes)], profile, settings)

# filepath: pinpoint/schemas/pinpoint.py
"""
Result schemas for core/union/justification queries.
"""

from typing import List, Optional

from pydantic import BaseModel, Field, model_validator


class PinpointResult(BaseModel):
    """Outcome of a union or enumeration query"""
    method: str = Field(..., description="Method tag: blackbox, enumerate, musmem or brute")
    goal: str = Field(..., description="Goal inclusion in ontology syntax")
    module_size: int = Field(0, ge=0, description="Size of the star module of the goal signature")
    core: List[str] = Field(default_factory=list, description="Axioms in every justification")
    union: List[str] = Field(default_factory=list, description="Axioms in some justification")
    justifications: List[List[str]] = Field(
        default_factory=list,
        description="Justifications found on the way (all of them for enumeration)"
    )
    oracle_calls: int = Field(0, ge=0, description="Entailment checks (SAT calls for musmem)")
    early_return: bool = Field(False, description="Search stopped because a justification equals the core")

    model_config = {
        "json_schema_extra": {
            "example": {
                "method": "blackbox",
                "goal": "(sub A C)",
                "module_size": 3,
                "core": [],
                "union": ["ax1", "ax2", "ax3"],
                "justifications": [["ax3"], ["ax1", "ax2"]],
                "oracle_calls": 11,
                "early_return": False,
            }
        }
    }

    @model_validator(mode="after")
    def check_containment(self):
        core, union = set(self.core), set(self.union)
        if not core <= union:
            raise ValueError("core must be contained in the union")
        for just in self.justifications:
            if not core <= set(just) or not set(just) <= union:
                raise ValueError(f"justification {just} violates core ⊆ J ⊆ union")
        return self

    @property
    def single_justification(self) -> Optional[List[str]]:
        return self.justifications[0] if self.justifications else None


class BruteForceResult(BaseModel):
    """Definitional oracle answer: all justifications and their intersection and union"""
    module_size: int = Field(..., ge=0)
    core: List[str] = Field(default_factory=list)
    union: List[str] = Field(default_factory=list)
    justifications: List[List[str]] = Field(default_factory=list)
    oracle_calls: int = Field(0, ge=0)

    @model_validator(mode="after")
    def check_containment(self):
        core, union = set(self.core), set(self.union)
        for just in self.justifications:
            if not core <= set(just) <= union:
                raise ValueError(f"justification {just} violates core ⊆ J ⊆ union")
        return self

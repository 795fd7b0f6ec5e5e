# filepath: pinpoint/schemas/repair.py
from typing import List

from pydantic import BaseModel, Field, model_validator


class RepairSet(BaseModel):
    """Family of repairs, each given as the axiom ids that are kept"""
    repairs: List[List[str]] = Field(default_factory=list, description="Kept axiom ids per repair")
    removed: List[List[str]] = Field(default_factory=list, description="Removed axiom ids per repair")
    optimal: bool = Field(True, description="All repairs have maximum cardinality")
    via_core: bool = Field(False, description="Computed from the core instead of all justifications")

    @model_validator(mode="after")
    def check_cardinality(self):
        if self.optimal and len({len(r) for r in self.repairs}) > 1:
            raise ValueError("optimal repairs must all have the same cardinality")
        return self

    def as_sets(self) -> set:
        return {frozenset(r) for r in self.repairs}

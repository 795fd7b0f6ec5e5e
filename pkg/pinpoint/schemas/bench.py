# filepath: pinpoint/schemas/bench.py
from typing import List, Optional

from pydantic import BaseModel, Field

CSV_COLUMNS = [
    "ontology", "goal", "method", "module_size", "core_size", "just_size",
    "union_size", "n_justifications", "oracle_calls", "time_ms",
]


class BenchRow(BaseModel):
    """One CSV row: one method on one entailed atomic inclusion"""
    ontology: str
    goal: str
    method: str
    module_size: int = Field(..., ge=0)
    core_size: Optional[int] = None
    just_size: Optional[int] = None
    union_size: int = Field(..., ge=0)
    n_justifications: Optional[int] = None
    oracle_calls: Optional[int] = None
    time_ms: Optional[float] = None
    union: List[str] = Field(default_factory=list, exclude=True)

    def sort_key(self):
        return (self.ontology, self.goal, self.method)

    def to_csv(self) -> List[str]:
        values = self.model_dump()
        out = []
        for col in CSV_COLUMNS:
            value = values[col]
            if value is None:
                out.append("")
            elif col == "time_ms":
                out.append(f"{value:.3f}")
            else:
                out.append(str(value))
        return out

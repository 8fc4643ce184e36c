from pydantic import BaseModel, ConfigDict, computed_field

from app.src.sequences.models import ConstraintSet, Sequence


class Optimum(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: ConstraintSet
    engine: str
    best: Sequence
    f: int
    g: int
    unbeaten: list[Sequence]
    explored: int

    @computed_field
    @property
    def unbeaten_count(self) -> int:
        return len(self.unbeaten)

    @property
    def unique(self) -> bool:
        return self.unbeaten_count == 1


class LocalSearchResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    start: Sequence
    end: Sequence
    steps: int

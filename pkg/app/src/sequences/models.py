from collections.abc import Iterator
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, RootModel, model_validator


class ConnectivityKind(str, Enum):
    VERTEX = "kappa"
    EDGE = "lambda"


class Sequence(RootModel[tuple[PositiveInt, ...]]):
    """
    Sequência de graus de distância (n_0, ..., n_d).
    Índices fora de 0..d valem 0 (ver `at`).
    """

    model_config = ConfigDict(frozen=True)

    @classmethod
    def of(cls, *entries: int) -> "Sequence":
        return cls(tuple(entries))

    def __iter__(self) -> Iterator[int]:
        return iter(self.root)

    def __len__(self) -> int:
        return len(self.root)

    def __getitem__(self, i: int) -> int:
        return self.root[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.root)) + ")"

    def at(self, i: int) -> int:
        return self.root[i] if 0 <= i < len(self.root) else 0

    @property
    def d(self) -> int:
        return len(self.root) - 1

    @property
    def total(self) -> int:
        return sum(self.root)

    def reverse(self) -> "Sequence":
        return Sequence(self.root[::-1])


class ConstraintSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: ConnectivityKind
    level: int = Field(ge=2)
    n: int
    d: int = Field(ge=3)

    @model_validator(mode="after")
    def _order_fits_diameter(self) -> "ConstraintSet":
        if self.n < self.d + 1:
            raise ValueError(f"order {self.n} too small for diameter {self.d}")
        return self

    def label(self) -> str:
        return f"{self.kind.value}={self.level} n={self.n} d={self.d}"


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    rule: str
    index: int | None = None

    def __str__(self) -> str:
        return self.rule if self.index is None else f"{self.rule}@{self.index}"

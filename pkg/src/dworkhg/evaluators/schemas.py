from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from dworkhg.padic.number import PadicNum


class Quantities(Enum):
    DWORK = "dwork"
    DF = "df"

    def __eq__(self, other):
        if isinstance(other, str):
            return self.value == other
        elif isinstance(other, Quantities):
            return self.value == other.value
        else:
            raise ValueError("Expect value to be an instance of string or Quantities")

    def __hash__(self):
        return hash(self.value)


class EvaluationResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    value: PadicNum = Field(description="The computed value, known mod p^n.")
    residue: int = Field(description="Canonical representative of the value in [0, p^n).")
    runtime_ms: float = Field(description="Wall-clock time of the evaluation in milliseconds.")
    method: str = Field(description="Name of the evaluator that produced the value.")

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from dworkhg.frobenius.schemas import TwistConfig
from dworkhg.padic.number import PadicNum


class EvalPoint(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: PadicNum = Field(description="The evaluation point, a unit with residue other than 0 and 1.")
    beta: PadicNum = Field(description="The point at which the Frobenius chain is evaluated.")
    twist: TwistConfig = Field(description="The Frobenius lift in force at alpha.")

    @classmethod
    def at(cls, alpha: PadicNum, c: PadicNum) -> "EvalPoint":
        """The point alpha under the lift t -> c t^p, with beta = c alpha^p."""
        return cls(alpha=alpha, beta=c * alpha**alpha.p, twist=TwistConfig(c=c, provenance="user"))


class FrobMatrix(BaseModel):
    """The 2x2 matrix [[pA(beta), B(beta)], [pC(beta), D(beta)]] for one orbit index."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int = Field(description="Orbit index of the parameter pair.")
    entries: tuple[PadicNum, PadicNum, PadicNum, PadicNum] = Field(
        description="Row-major entries pA, B, pC, D evaluated at beta."
    )

    def as_array(self) -> np.ndarray:
        matrix = np.empty((2, 2), dtype=object)
        matrix[0, 0], matrix[0, 1], matrix[1, 0], matrix[1, 1] = self.entries
        return matrix

    def determinant(self) -> PadicNum:
        pA, B, pC, D = self.entries
        return pA * D - B * pC

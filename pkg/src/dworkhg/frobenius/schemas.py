from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from dworkhg.frobenius.bounds import EntryKind
from dworkhg.padic.number import PadicNum
from dworkhg.series.truncated import SeriesTrunc
from dworkhg.special.dwork import RationalParam


class TwistConfig(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    c: PadicNum = Field(description="Twist constant of the Frobenius lift t -> c*t^p, congruent to 1 mod p.")
    provenance: Literal["user", "beta"] = Field(
        default="user",
        description='"user" for a caller-supplied c, "beta" for c = beta^(1-p) derived from the evaluation point.',
    )


class FrobeniusEntrySet(BaseModel):
    """Truncated series of the Frobenius matrix entries for one orbit index."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int = Field(description="Orbit index of the parameter pair.")
    a: RationalParam
    b: RationalParam
    twist: TwistConfig
    degree_bound: int = Field(description="Truncation degree D* = p*e_n + 2p.")
    A: SeriesTrunc
    B: SeriesTrunc
    C: SeriesTrunc
    D: SeriesTrunc
    E: SeriesTrunc
    tau_sigma: SeriesTrunc = Field(description="The twisted tau series used to build A and C.")

    def entry(self, kind: EntryKind) -> SeriesTrunc:
        """The series for one matrix position, without the factor p of pA and pC."""
        return {EntryKind.PA: self.A, EntryKind.B: self.B, EntryKind.PC: self.C, EntryKind.D: self.D}[kind]

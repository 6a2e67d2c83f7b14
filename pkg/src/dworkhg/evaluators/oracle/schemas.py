from pydantic import BaseModel, Field

from dworkhg.config import ORACLE_MAX_N, ORACLE_MAX_TERMS


class OracleBudget(BaseModel):
    """Limits on the size of the brute-force truncated sums."""

    n_max: int = Field(default=ORACLE_MAX_N, ge=1, description="Largest admissible precision exponent n.")
    max_terms: int = Field(
        default=ORACLE_MAX_TERMS, ge=1, description="Largest admissible number of series terms in one sum."
    )


class ConditionReport(BaseModel):
    ok: bool = Field(description="Whether every truncated series of the orbit is nonzero at the point mod p.")
    failing_index: int | None = Field(default=None, description="First orbit index at which the condition fails.")

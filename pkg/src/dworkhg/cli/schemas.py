from typing import Literal

from pydantic import BaseModel, Field

from dworkhg.config import DEFAULT_EIGEN_METHOD, DEFAULT_GUARD


class JobSpec(BaseModel):
    """One command-line job, as parsed from the arguments."""

    subcommand: Literal["eval", "df", "oracle", "check", "digamma", "bench"]
    p: int = Field(description="The odd prime.")
    n: int = Field(default=1, description="Target precision: values are printed mod p^n.")
    a: str | None = Field(default=None, description='First parameter as a reduced fraction "r/N".')
    b: str | None = Field(default=None, description='Second parameter as a reduced fraction "r/N".')
    alpha: int | None = Field(default=None, description="Evaluation point, an integer with residue not 0 or 1.")
    c: int = Field(default=1, description="Twist constant, congruent to 1 mod p.")
    out: Literal["decimal", "digits", "json"] = Field(default="decimal", description="Output mode.")
    guard: int = Field(default=DEFAULT_GUARD, description="Guard digits of the precision policy.")
    k: int = Field(default=0, description="Orbit index for F'/F values.")
    eigen: Literal["newton", "power"] = Field(default=DEFAULT_EIGEN_METHOD, description="Unit eigenvector method.")
    method: Literal["frobenius", "oracle"] = Field(default="frobenius", description="Evaluator used by eval and df.")
    compare: bool = Field(default=False, description="Run both evaluators and compare (oracle subcommand).")
    arg: str | None = Field(default=None, description='Digamma argument "i/N".')
    n_list: list[int] = Field(default_factory=list, description="Precisions to benchmark.")
    show_time: bool = Field(default=False, description="Also print the wall-clock time.")


class EvaluationReport(BaseModel):
    p: int
    n: int
    a: str
    b: str
    alpha: int
    c: int
    value: int = Field(description="Canonical representative in [0, p^n).")
    digits: list[int] = Field(description="Base-p digits of the value, least significant first.")
    runtime_ms: float
    method: str


class CompareReport(BaseModel):
    p: int
    n: int
    solver_value: int
    oracle_value: int
    agree: bool

    def message(self) -> str:
        if self.agree:
            return f"agree mod {self.p}^{self.n}"
        return f"DISAGREE mod {self.p}^{self.n}: solver={self.solver_value}, oracle={self.oracle_value}"


class DigammaReport(BaseModel):
    p: int
    n: int
    arg: str
    value: int
    digits: list[int]
    method: str


class BenchRow(BaseModel):
    n: int
    e_n: int
    degree_bound: int
    wall_ms: float
    ratio: float | None = Field(default=None, description="Runtime relative to the previous row.")
    value: int

import argparse
import json
import sys
from collections.abc import Callable

from pydantic import BaseModel, ValidationError

from dworkhg.cli import commands
from dworkhg.cli.schemas import BenchRow, CompareReport, JobSpec
from dworkhg.config import DEFAULT_EIGEN_METHOD, DEFAULT_GUARD, EigenMethods, OutputModes
from dworkhg.evaluators.oracle.schemas import ConditionReport
from dworkhg.exceptions import ConditionViolatedError, DworkError


COMMANDS: dict[str, Callable[[JobSpec], object]] = {
    "eval": commands.cmd_eval,
    "df": commands.cmd_df,
    "oracle": commands.cmd_oracle,
    "check": commands.cmd_check,
    "digamma": commands.cmd_digamma,
    "bench": commands.cmd_bench,
}


def _n_list(text: str) -> list[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"--n-list expects comma-separated integers, got {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dworkhg",
        description="Dwork's p-adic hypergeometric function and F'/F modulo p^n in polynomial time.",
    )
    subparsers = ap.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="An odd prime.")
    common.add_argument("--n", type=int, default=1, help="Target precision: values are printed mod p^n.")
    common.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="Guard digits of the precision policy.")
    common.add_argument(
        "--out", choices=[mode.value for mode in OutputModes], default=OutputModes.DECIMAL.value, help="Output mode."
    )
    common.add_argument("--time", dest="show_time", action="store_true", help="Print the wall-clock time to stderr.")

    point = argparse.ArgumentParser(add_help=False)
    point.add_argument("--a", required=True, help='First parameter as a reduced fraction "r/N".')
    point.add_argument("--b", required=True, help='Second parameter as a reduced fraction "r/N".')
    point.add_argument("--alpha", type=int, required=True, help="Evaluation point with residue not 0 or 1 mod p.")
    point.add_argument("--c", type=int, default=1, help="Twist constant, congruent to 1 mod p.")

    eigen = argparse.ArgumentParser(add_help=False)
    eigen.add_argument(
        "--eigen",
        choices=[em.value for em in EigenMethods],
        default=str(DEFAULT_EIGEN_METHOD),
        help="Unit-root eigenvector method.",
    )

    for name, help_text in (
        ("eval", "Evaluate the Dwork hypergeometric function at alpha."),
        ("df", "Evaluate F'/F at alpha for an orbit index."),
    ):
        sub = subparsers.add_parser(name, parents=[common, point, eigen], help=help_text)
        sub.add_argument("--method", choices=["frobenius", "oracle"], default="frobenius")
        if name == "df":
            sub.add_argument("--k", type=int, default=0, help="Orbit index.")

    oracle = subparsers.add_parser(
        "oracle", parents=[common, point, eigen], help="Brute-force value through Dwork's congruences."
    )
    oracle.add_argument("--compare", action="store_true", help="Also run the solver and compare.")

    subparsers.add_parser("check", parents=[common, point], help="Check the non-vanishing condition along the orbit.")

    digamma = subparsers.add_parser("digamma", parents=[common], help="p-adic digamma value psi~(i/N).")
    digamma.add_argument("--arg", required=True, help='Argument "i/N" with 0 <= i < N.')
    digamma.add_argument("--method", choices=["frobenius", "oracle"], default="frobenius")

    bench = subparsers.add_parser("bench", parents=[common, point, eigen], help="Time the solver over precisions.")
    bench.add_argument("--n-list", dest="n_list", type=_n_list, default=[], help="Comma-separated precisions.")
    return ap


def render(result: object, out: str) -> str:
    """Render a command result in the requested output mode."""
    if isinstance(result, ConditionReport):
        if out == OutputModes.JSON:
            return result.model_dump_json()
        return "ok" if result.ok else f"fail (orbit index {result.failing_index})"
    if isinstance(result, CompareReport):
        return result.model_dump_json() if out == OutputModes.JSON else result.message()
    if isinstance(result, list):
        if out == OutputModes.JSON:
            return json.dumps([row.model_dump() for row in result])
        lines = [",".join(BenchRow.model_fields)]
        for row in result:
            lines.append(",".join("" if v is None else str(v) for v in row.model_dump().values()))
        return "\n".join(lines)
    if isinstance(result, BaseModel):
        if out == OutputModes.JSON:
            return result.model_dump_json()
        if out == OutputModes.DIGITS:
            return json.dumps(result.digits)
        return str(result.value)
    raise TypeError(f"Cannot render result of type {type(result).__name__}")


def main(argv: list[str] | None = None) -> int:
    """Entry point of the dworkhg command.

    Returns:
        The process exit code: 0 on success, 2 for invalid input, 3 when the
        non-vanishing condition fails, 4 for a non-unit or internal inconsistency,
        5 when the oracle budget is exceeded.
    """
    args = build_parser().parse_args(argv)
    try:
        job = JobSpec(**{key: value for key, value in vars(args).items() if value is not None})
        result = COMMANDS[job.subcommand](job)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ConditionViolatedError as e:
        print(f"fail (orbit index {e.index}): {e}", file=sys.stderr)
        return e.exit_code
    except DworkError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    print(render(result, job.out))
    if job.show_time and hasattr(result, "runtime_ms"):
        print(f"time: {result.runtime_ms:.1f} ms", file=sys.stderr)
    if isinstance(result, ConditionReport) and not result.ok:
        return ConditionViolatedError.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())

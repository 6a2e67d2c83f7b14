import os
import logging
from enum import Enum
from dotenv import load_dotenv

load_dotenv()  # load environment variables from .env file

LOG_LEVEL = os.getenv("DWORKHG_LOG_LEVEL", "INFO").upper()

logging.basicConfig(
    level=LOG_LEVEL,
    format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
)

logger = logging.getLogger(__name__)


class EigenMethods(Enum):
    NEWTON = "newton"
    POWER = "power"

    def __eq__(self, other):
        if isinstance(other, str):
            return self.value == other
        elif isinstance(other, EigenMethods):
            return self.value == other.value
        else:
            raise ValueError("Expect value to be an instance of string or EigenMethods")

    def __hash__(self):
        return hash(self.value)


class OutputModes(Enum):
    DECIMAL = "decimal"
    DIGITS = "digits"
    JSON = "json"

    def __eq__(self, other):
        if isinstance(other, str):
            return self.value == other
        elif isinstance(other, OutputModes):
            return self.value == other.value
        else:
            raise ValueError("Expect value to be an instance of string or OutputModes")

    def __hash__(self):
        return hash(self.value)


def _int_from_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got: {raw!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got: {value}")
    return value


# lower bound on nu - n; the precision policy already carries a fixed slack of 4
DEFAULT_GUARD = _int_from_env("DWORKHG_GUARD", default=4, minimum=0)

# limits for the brute-force congruence evaluators
ORACLE_MAX_N = _int_from_env("DWORKHG_ORACLE_MAX_N", default=8, minimum=1)
ORACLE_MAX_TERMS = _int_from_env("DWORKHG_ORACLE_MAX_TERMS", default=400_000, minimum=1)

DEFAULT_EIGEN_METHOD = os.getenv("DWORKHG_EIGEN_METHOD", EigenMethods.NEWTON.value)

if DEFAULT_EIGEN_METHOD not in [em.value for em in EigenMethods]:
    raise ValueError(
        f'Selected eigenvector method is not supported: "{DEFAULT_EIGEN_METHOD}"\n'
        f"Supported methods are: {[em.value for em in EigenMethods]}"
    )

logger.debug(
    f"dworkhg defaults: guard={DEFAULT_GUARD}, oracle n_max={ORACLE_MAX_N}, "
    f"oracle max terms={ORACLE_MAX_TERMS}, eigen method={DEFAULT_EIGEN_METHOD}"
)

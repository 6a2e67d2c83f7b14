from .context import PrecisionContext, ctx_new
from .number import PadicNum, RingOp, divide_exact, ring_ops, unit_inverse

__all__ = [
    "PrecisionContext",
    "ctx_new",
    "PadicNum",
    "RingOp",
    "ring_ops",
    "unit_inverse",
    "divide_exact",
]

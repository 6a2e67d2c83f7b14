from .truncated import (
    SeriesTrunc,
    s_add,
    s_binpow,
    s_derivative,
    s_divide_exact,
    s_eval,
    s_integrate,
    s_inv,
    s_mul,
    s_scale,
    s_shift,
    s_sub,
    s_subst_frob,
    s_truncate,
)

__all__ = [
    "SeriesTrunc",
    "s_add",
    "s_binpow",
    "s_derivative",
    "s_divide_exact",
    "s_eval",
    "s_integrate",
    "s_inv",
    "s_mul",
    "s_scale",
    "s_shift",
    "s_sub",
    "s_subst_frob",
    "s_truncate",
]

"""Exact curve-counting engine: Severi degrees, sum-formula convolution and
rational elliptic surface series, backed by a C++ core."""

from ._gwsum import (
    GwsumError,
    Series,
    binom,
    connected_from_severi,
    convolve,
    derivative_t,
    enum_sequences,
    exp,
    f0_via_ode,
    f0_via_product,
    h_via_sum,
    h_via_trr,
    invert_smatrix,
    kontsevich,
    log,
    order_pow,
    point_conditions,
    selftest,
    severi,
    sigma_series,
    weight,
)

__all__ = [
    "GwsumError",
    "Series",
    "binom",
    "connected_from_severi",
    "convolve",
    "derivative_t",
    "enum_sequences",
    "exp",
    "f0_via_ode",
    "f0_via_product",
    "h_via_sum",
    "h_via_trr",
    "invert_smatrix",
    "kontsevich",
    "log",
    "order_pow",
    "point_conditions",
    "selftest",
    "severi",
    "sigma_series",
    "weight",
]

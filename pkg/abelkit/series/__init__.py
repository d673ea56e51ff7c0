from .abel_form import AbelForm, integrate_with_log
from .linear import LinearForm, as_rational
from .logmultiple import LogMultiple
from .power import (
    LaurentSeries,
    PowerSeries,
    coefficient_at,
    coefficient_of_product,
    laurent_reciprocal,
    series_add,
    series_compose,
    series_int_pow,
    series_mul,
)

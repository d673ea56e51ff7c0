from . import reference  # noqa: F401
from .catalog import (
    REGISTRY,
    BaseFunction,
    catalog_frame,
    eval_forward,
    eval_inverse,
    get_function,
    list_functions,
    power_family,
    power_family_q,
    taylor_coefficient,
)
from .lambertw import lambert_w0

from . import (
    data,  # noqa: F401
    models,  # noqa: F401
    series,  # noqa: F401
    utils,  # noqa: F401
)
from .errors import AbelKitError, NumericFailure  # noqa: F401

__version__ = "0.1.0"

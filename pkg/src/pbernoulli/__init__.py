"""pbernoulli."""

# Set default logging handler to avoid logging with logging.lastResort logger.
import logging

from ._constants import EXIT_CODES, IDENTITY_KEYS, REPORT_KEYS, ROUTE_KEYS, SELECTOR_KEYS
from ._settings import settings

# this import needs to come after prior imports to prevent circular import
from . import numerics, series, triangles, bernoulli, harness, utils

package_name = "pbernoulli"
__version__ = "0.1.0"

settings.verbosity = logging.INFO

pbernoulli_logger = logging.getLogger("pbernoulli")
pbernoulli_logger.propagate = False


__all__ = [
    "settings",
    "IDENTITY_KEYS",
    "ROUTE_KEYS",
    "SELECTOR_KEYS",
    "REPORT_KEYS",
    "EXIT_CODES",
    "numerics",
    "series",
    "triangles",
    "bernoulli",
    "harness",
    "utils",
]

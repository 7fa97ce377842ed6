"""Library-wide defaults and hard limits."""

SCHEMA_VERSION = 1

# Fiber-full family check: first- and second-order obstructions.
DEFAULT_Q_MAX = 3

# Prime fields must satisfy p < MAX_PRIME.
MAX_PRIME = 2**31

MAX_EXPONENT = 2**31 - 1

DEFAULT_ORDER = "grevlex"

# Default signature window is [-(reg + n + WINDOW_EXTRA), reg + n + WINDOW_EXTRA].
WINDOW_EXTRA = 2

VARIABLE_PREFIX = "x"
PARAMETER_NAME = "t"

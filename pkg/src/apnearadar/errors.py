"""Exception hierarchy shared by the library, the service, and the CLI.

Each exception class carries the process exit code the CLI maps it to, so
the service and the CLI report identical machine-readable codes.
"""


class ApneaRadarError(Exception):
    """Base class for recoverable pipeline errors."""

    exit_code = 1


class SchemaError(ApneaRadarError):
    """Scene plan / run config violates the documented schema."""

    exit_code = 2


class CubeFormatError(ApneaRadarError):
    """Unreadable, corrupt, or unsupported-version .rdc cube."""

    exit_code = 3


class NoTargetError(ApneaRadarError):
    """No scattering center found in any epoch: nothing to analyze."""

    exit_code = 4


class RecordingMismatchError(ApneaRadarError):
    """Event file and truth record refer to different recordings."""

    exit_code = 5


class BaselineError(ApneaRadarError):
    """ABM baseline window contains no usable breathing signal."""

    exit_code = 1

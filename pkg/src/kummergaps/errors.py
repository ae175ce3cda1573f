"""Exception hierarchy. Each class carries the exit status the CLI reports for it."""


class KummerGapsError(ValueError):
    exit_code = 1
    code = "error"


class CurveError(KummerGapsError):
    exit_code = 3
    code = "invalid-curve"


class PlaceError(KummerGapsError):
    exit_code = 4
    code = "invalid-place"


class ParameterError(KummerGapsError):
    """Shape or range precondition of a closed form, family or construction."""

    exit_code = 5
    code = "invalid-parameters"


class WindowError(KummerGapsError):
    """Violation of 2g - 2 < deg G < n <= N - #places."""

    exit_code = 6
    code = "code-window"


class BoxError(KummerGapsError):
    """A claimed box of consecutive pure gaps contains a non-pure-gap."""

    exit_code = 6
    code = "invalid-box"


class VerificationError(KummerGapsError):
    """An independent re-check disagreed with the fast path."""

    exit_code = 7
    code = "verification-failed"

class ReportError(Exception):
    """Base class for report and run-configuration errors."""


class ConfigError(ReportError):
    pass


class ReportFormatError(ReportError):
    """A serialized report does not match the report schema."""

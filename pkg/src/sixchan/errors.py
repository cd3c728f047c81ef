"""Exception types shared across the package."""


class SixchanError(Exception):
    """Base class for all package errors."""


class ConfigurationError(SixchanError):
    """Invalid configuration or empty/ill-formed inputs."""


class DimensionError(SixchanError):
    """Shape, channel-count, or value-range mismatch."""


class PairingError(SixchanError):
    """Real/fake samples that do not belong together."""


class ManifestFormatError(SixchanError):
    """Corrupt or invariant-violating on-disk manifest."""

    def __init__(self, message, byte_offset=None):
        if byte_offset is not None:
            message = f"{message} (byte offset {byte_offset})"
        super().__init__(message)
        self.byte_offset = byte_offset


class IngestionError(SixchanError):
    """Label ingestion failed; carries the offending records."""

    def __init__(self, message, records=()):
        super().__init__(message)
        self.records = list(records)


class NumericDomainError(SixchanError):
    """Degenerate geometry fed to a numeric kernel."""


class EvaluationError(SixchanError):
    """Detections that cannot be matched to the ground-truth set."""


class StageFailure(SixchanError):
    """A pipeline stage failed; names the stage for the CLI."""

    def __init__(self, stage, cause):
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause

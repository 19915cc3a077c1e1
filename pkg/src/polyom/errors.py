"""Shared exception types."""


class InputError(ValueError):
    """Malformed user input: files, coordinates, tuples out of range."""


class CatalogIntegrityError(InputError):
    """A catalog file whose checksum or record count does not match."""


class DegenerateConfigError(RuntimeError):
    """Random sampling failed to produce a uniform configuration in time."""


class SoundnessError(RuntimeError):
    """A point configuration produced a sign map outside the catalog."""

"""Exceptions raised by the library, each carrying the CLI exit code it maps to."""


class QuantumAngleError(Exception):
    exit_code: int = 1


class InputError(QuantumAngleError, ValueError):
    """Bad input: dimension mismatch, zero vector, malformed file, non-Hermitian matrix."""

    exit_code = 2


class GuardError(QuantumAngleError, ValueError):
    """A numerical guard was violated (under-resolved or clipped packet, tensor overflow)."""

    exit_code = 3

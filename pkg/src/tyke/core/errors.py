"""
Exception hierarchy for Tyke.
"""

from pathlib import Path
from typing import Optional, Union


class TykeError(Exception):
    """Base class for all Tyke errors."""


class ModelDomainError(TykeError, ValueError):
    """An input lies outside the domain of a model operation."""


class DeviceSaturationError(ModelDomainError):
    """Flux drives the memristance radicand negative."""

    def __init__(self, flux: float, radicand: float, index: Optional[int] = None):
        self.flux = flux
        self.radicand = radicand
        self.index = index
        where = f" at index {index}" if index is not None else ""
        super().__init__(
            f"memristor saturated{where}: flux {flux!r} Wb gives radicand {radicand!r}"
        )


class InputParseError(TykeError, ValueError):
    """A user-supplied file could not be parsed."""

    def __init__(self, path: Union[str, Path], line: int, message: str):
        self.path = str(path)
        self.line = line
        super().__init__(f"{self.path}:{line}: {message}")

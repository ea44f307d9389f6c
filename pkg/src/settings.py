import logging
import math
from dataclasses import dataclass, replace
from os import getenv

from .singleton import SingletonClass

logger = logging.getLogger(__name__)

TOLERANCE_ENV_VAR = "QH2_TOL"


@dataclass(frozen=True)
class Tolerances:
    accept: float = 1e-9
    """Accept/reject threshold for every reality, positivity and residual verdict."""
    internal: float = 1e-10
    """Self-check threshold, kept two orders below ``accept``."""
    pivot: float = 1e-10
    """Rank threshold of the linear solver, relative to the largest pivot."""
    hermitian_abs: float = 1e-12
    cross_validation: float = 1e-8


class InvalidTolerance(ValueError):
    def __init__(self, raw: str):
        super().__init__(f"{TOLERANCE_ENV_VAR} must be a positive finite number, got {raw!r}")
        self.raw = raw


def parse_tolerance(raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise InvalidTolerance(raw) from None
    if not math.isfinite(value) or value <= 0:
        raise InvalidTolerance(raw)
    return value


class Settings(SingletonClass):
    tolerances: Tolerances

    def __init__(self):
        if getattr(self, "_loaded", False):
            return
        self.tolerances = Tolerances()
        raw = getenv(TOLERANCE_ENV_VAR)
        if raw:
            self.tolerances = replace(self.tolerances, accept=parse_tolerance(raw))
            logger.debug("Accept tolerance overridden to %g", self.tolerances.accept)
        self._loaded = True


def get_tolerances() -> Tolerances:
    return Settings().tolerances

"""Exception types and the verdict value returned by law checkers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


class ArtifactError(Exception):
    """Base class for every error raised by this package."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class SizeError(ArtifactError):
    pass


class MembershipError(ArtifactError):
    pass


class StructureError(ArtifactError):
    pass


class PreconditionError(ArtifactError):
    pass


class RepresentabilityError(ArtifactError):
    pass


class UnsupportedError(ArtifactError):
    pass


class InvariantError(ArtifactError):
    """Two routes that must agree did not."""


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Any = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)


def fail(reason: str, witness: Any = None) -> Verdict:
    return Verdict(False, witness, reason)

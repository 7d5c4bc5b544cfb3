"""Exception types and violation records shared by every validator."""

from __future__ import annotations

from typing import NamedTuple


class Violation(NamedTuple):
    kind: str
    witness: tuple
    detail: str = ""

    def __str__(self):
        w = ", ".join(map(repr, self.witness))
        return f"{self.kind}({w})" + (f": {self.detail}" if self.detail else "")


class ValidationError(ValueError):
    """Raised by ``validate_*`` functions; carries every violated instance."""

    def __init__(self, what, violations):
        self.what = what
        self.violations = list(violations)
        first = self.violations[0] if self.violations else "?"
        super().__init__(
            f"invalid {what}: {len(self.violations)} violation(s), first {first}"
        )

    @property
    def kinds(self):
        return {v.kind for v in self.violations}


def raise_if(what, violations):
    if violations:
        raise ValidationError(what, violations)


class NotComposable(ValueError):
    pass


class DomainMismatch(ValueError):
    pass


class BoundaryMismatch(ValueError):
    pass


class FormulaDisagreement(AssertionError):
    pass


class NotTransitive(ValueError):
    pass


class NotSurjective(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSurjectiveOnObjects(NotSurjective):
    pass


class NotFull(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class IsotropyTooLarge(ValueError):
    pass


class CapExceeded(ValueError):
    pass


class Verdict:
    """Truthy outcome of a check, with a concrete witness when it fails."""

    __slots__ = ("holds", "witness", "detail")

    def __init__(self, holds, witness=None, detail=""):
        self.holds = bool(holds)
        self.witness = witness
        self.detail = detail

    def __bool__(self):
        return self.holds

    def __repr__(self):
        if self.holds:
            return "Verdict(True)"
        return f"Verdict(False, witness={self.witness!r}, detail={self.detail!r})"

"""Error types shared by all modules.

Every validator reports the *first* violated axiom together with a witness
tuple of element labels, so a failure can always be replayed by hand.
"""

from __future__ import annotations


class CheckError(Exception):
    """A mathematical axiom failed.

    code     -- short machine-readable name of the violated axiom
                (e.g. "NotAssociative", "PeifferFail", "TetrahedronFail").
    witness  -- tuple of element labels exhibiting the failure.
    """

    def __init__(self, code: str, witness: tuple = (), message: str = ""):
        self.code = code
        self.witness = witness
        text = code
        if witness:
            text += " witness=" + repr(witness)
        if message:
            text += ": " + message
        super().__init__(text)


class SizeGuardExceeded(CheckError):
    """A brute-force search was refused because the input exceeds a guard."""

    def __init__(self, guard_name: str, size: int, limit: int):
        self.guard_name = guard_name
        self.size = size
        self.limit = limit
        super().__init__(
            "SizeGuardExceeded",
            (guard_name, size, limit),
            f"{guard_name}: size {size} exceeds guard {limit} (raise the guard to override)",
        )


class DomainMismatch(CheckError):
    """Two objects that must share a domain/codomain structurally do not."""

    def __init__(self, message: str):
        super().__init__("DomainMismatch", (), message)


class InternalDefect(AssertionError):
    """A construction whose validity is a theorem failed validation; a bug."""

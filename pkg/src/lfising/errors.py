"""Exception types raised across the package."""


class LFIsingError(ValueError):
    """Base class for invalid-input errors in this package."""


class OutOfDomainError(LFIsingError):
    """A parameter lies outside the domain a formula is valid for (e.g. negative mass)."""


class DegenerateBlockError(LFIsingError):
    """The Bogoliubov angle is undefined (gapless k=0 mode at the critical coupling)."""


class UnpairedModeError(LFIsingError):
    """A momentum grid contains self-conjugate modes that do not form (k, -k) pairs."""


class ZeroModeError(LFIsingError):
    """The k^1 = 0 mode has no assignment in the massless light-front case split."""


class SizeCapError(LFIsingError):
    """A dense construction or exhaustive enumeration would exceed its size guard."""


class FrameError(LFIsingError):
    """A momentum grid of the wrong frame was supplied."""

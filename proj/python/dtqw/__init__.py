"""Discrete-time quantum walk spectra, topology and geometry."""

from ._dtqw import *  # noqa: F401,F403
from ._dtqw import Band, DomainError, Family, WalkModel  # noqa: F401

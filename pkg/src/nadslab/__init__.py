"""Exact checks for two non-autonomous dynamical systems: a Thue-Morse driven
shift on {0,1}^N and an alternating-exponent schedule on a circle rotation."""

from .config import CapExceeded, cap_limit
from .report import Certificate
from .schedules import Schedule
from .shift import Cylinder, Point, metric, shift
from .words import Word

__version__ = "0.1.0"

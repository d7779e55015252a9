"""Core components - fundamental classes and definitions."""

from drccbo.core.constants import *
from drccbo.core.exceptions import *
from drccbo.core.models import *

__all__ = ['constants', 'exceptions', 'models', 'types']

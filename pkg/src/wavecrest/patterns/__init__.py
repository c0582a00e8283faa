"""
Design Patterns Implementation
Singleton and Observer patterns
"""

from .singleton import SingletonMeta
from .observer import (
    AssertionOutcome, Observer, Subject,
    ConsoleObserver, SummaryObserver, AssertionBoard
)

__all__ = [
    # Singleton
    'SingletonMeta',
    # Observer
    'AssertionOutcome',
    'Observer',
    'Subject',
    'ConsoleObserver',
    'SummaryObserver',
    'AssertionBoard',
]

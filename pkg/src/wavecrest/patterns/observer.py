"""
Assertion board
Experiment assertions are published by a subject and consumed by observers
(console PASS/FAIL lines, JSON summary collection)
"""

import logging
import sys
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass, asdict
from typing import Any, Dict, List, TextIO


@dataclass(frozen=True)
class AssertionOutcome:
    """Result of one built-in experiment assertion"""
    experiment: str
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class Subject(ABC):
    """Publisher of assertion outcomes; AssertionBoard is the one used by the runner"""

    @abstractmethod
    def attach(self, observer: 'Observer') -> None:
        """Start sending outcomes to observer"""

    @abstractmethod
    def detach(self, observer: 'Observer') -> None:
        """Stop sending outcomes to observer"""

    @abstractmethod
    def notify(self, outcome: AssertionOutcome) -> None:
        """Deliver one outcome to every attached observer, in attach order"""


class Observer(ABC):
    """Consumer of assertion outcomes (console report, JSON summary)"""

    @abstractmethod
    def update(self, outcome: AssertionOutcome) -> None:
        """Handle one outcome; called once per check, from the publishing thread"""


class ConsoleObserver(Observer):
    """Prints one PASS/FAIL line per outcome"""

    def __init__(self, stream: TextIO = None):
        self.stream = stream

    def update(self, outcome: AssertionOutcome) -> None:
        stream = self.stream or sys.stdout
        mark = '✅ PASS' if outcome.passed else '❌ FAIL'
        print(f"{mark}  {outcome.experiment}.{outcome.name}: {outcome.detail}",
              file=stream, flush=True)


class SummaryObserver(Observer):
    """Collects outcomes for the JSON summary"""

    def __init__(self):
        self.outcomes: List[AssertionOutcome] = []

    def update(self, outcome: AssertionOutcome) -> None:
        self.outcomes.append(outcome)

    def for_experiment(self, experiment: str) -> List[Dict[str, Any]]:
        return [o.to_dict() for o in self.outcomes if o.experiment == experiment]


class AssertionBoard(Subject):
    """
    Publishes assertion outcomes to attached observers

    Example:
        >>> board = AssertionBoard()
        >>> summary = SummaryObserver()
        >>> board.attach(summary)
        >>> board.check('tail', 'slope', True, 'slope -0.61 <= -0.3')
        True
        >>> board.all_passed
        True
    """

    def __init__(self):
        self._observers: List[Observer] = []
        self._lock = threading.Lock()
        self._failures = 0

    def attach(self, observer: Observer) -> None:
        with self._lock:
            self._observers.append(observer)

    def detach(self, observer: Observer) -> None:
        with self._lock:
            if observer in self._observers:
                self._observers.remove(observer)

    def notify(self, outcome: AssertionOutcome) -> None:
        with self._lock:
            observers = list(self._observers)
        for observer in observers:
            try:
                observer.update(outcome)
            except Exception as e:
                logging.error(f"Observer {observer!r} failed: {e}")

    def check(self, experiment: str, name: str, passed: bool, detail: str) -> bool:
        """
        Record one assertion and publish it

        Returns:
            passed, as a plain bool
        """
        passed = bool(passed)
        if not passed:
            self._failures += 1
            logging.warning(f"Assertion failed: {experiment}.{name}: {detail}")
        self.notify(AssertionOutcome(experiment, name, passed, detail))
        return passed

    @property
    def all_passed(self) -> bool:
        return self._failures == 0

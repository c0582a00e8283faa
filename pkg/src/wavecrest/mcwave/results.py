"""
Monte Carlo results
MCResult and its JSON / CSV serialization
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..utils.csv_io import write_rows
from ..utils.json_encoder import json_dumps_numpy

PathLike = Union[str, Path]


@dataclass(frozen=True)
class CharfnPoint:
    """Empirical and exact standardized characteristic function at t"""
    t: float
    empirical: complex
    exact: complex
    gaussian: float


@dataclass(frozen=True)
class TailRow:
    """
    Two-sided exceedance frequency at y standard deviations

    upper_95 is the one-sided 95% Clopper-Pearson upper bound on the
    exceedance probability (meaningful when no exceedance was observed).
    """
    y: float
    frequency: float
    chernoff: float
    upper_95: float


@dataclass(frozen=True)
class MCResult:
    n_samples: int
    seed: int
    ks_distance: float
    charfn_grid: List[CharfnPoint] = field(default_factory=list)
    tail_rows: List[TailRow] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Plain dict; complex values stay complex until JSON encoding"""
        return {
            'n_samples': self.n_samples,
            'seed': self.seed,
            'ks_distance': self.ks_distance,
            'charfn_grid': [vars(p).copy() for p in self.charfn_grid],
            'tail_rows': [vars(r).copy() for r in self.tail_rows],
            'metadata': dict(self.metadata),
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        """JSON text with complex numbers as [re, im] pairs"""
        return json_dumps_numpy(self.to_dict(), indent=indent)


CHARFN_COLUMNS = ['t', 'empirical_re', 'empirical_im', 'exact_re', 'exact_im', 'gaussian']
TAIL_COLUMNS = ['y', 'frequency', 'chernoff', 'upper_95']


def charfn_table(result: MCResult) -> List[List[float]]:
    """One row per grid point, complex values split into re/im columns"""
    return [[p.t, p.empirical.real, p.empirical.imag, p.exact.real, p.exact.imag, p.gaussian]
            for p in result.charfn_grid]


def tail_table(result: MCResult) -> List[List[float]]:
    return [[r.y, r.frequency, r.chernoff, r.upper_95] for r in result.tail_rows]


def _stamped(result: MCResult, rows: List[List[Any]]) -> List[List[Any]]:
    version = result.metadata.get('version', '')
    return [row + [result.seed, version] for row in rows]


def write_charfn_csv(result: MCResult, path: PathLike) -> Path:
    return write_rows(path, CHARFN_COLUMNS + ['seed', 'version'], _stamped(result, charfn_table(result)))


def write_tail_csv(result: MCResult, path: PathLike) -> Path:
    return write_rows(path, TAIL_COLUMNS + ['seed', 'version'], _stamped(result, tail_table(result)))

"""
CSV utilities
Comma-separated, header row, 17-significant-digit floats, LF line endings
"""

import csv
import math
from pathlib import Path
from typing import Any, Iterable, List, Sequence, Union

import numpy as np

PathLike = Union[str, Path]


def format_value(value: Any) -> str:
    """
    Format one CSV cell

    Floats use 17 significant digits so they round-trip exactly; complex
    values are not written to CSV (split them into re/im columns first).

    Example:
        >>> format_value(0.1)
        '0.10000000000000001'
    """
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return 'nan'
        return format(value, '.17g')
    if value is None:
        return ''
    return str(value)


def write_rows(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    """
    Write a CSV file with a header row

    Args:
        path: Destination file (parent directories are created)
        header: Column names
        rows: Row sequences, one value per column

    Returns:
        The written path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(list(header))
        for row in rows:
            if len(row) != len(header):
                raise ValueError(f"Row has {len(row)} cells, header has {len(header)}")
            writer.writerow([format_value(v) for v in row])
    return path


def read_rows(path: PathLike) -> List[dict]:
    """
    Read a CSV file written by write_rows

    Returns:
        One dict per row, values left as strings
    """
    with open(path, 'r', newline='', encoding='utf-8') as f:
        return list(csv.DictReader(f))

"""
JSON encoding utilities
Handles numpy scalars/arrays and complex numbers in experiment summaries
"""

import json
from typing import Any

import numpy as np


class NumpyEncoder(json.JSONEncoder):
    """JSON encoder for numpy types and complex numbers (as [re, im] pairs)"""

    def default(self, obj: Any) -> Any:
        """
        Override default encoding for numeric types json does not know

        Args:
            obj: Object to encode

        Returns:
            JSON-compatible representation
        """
        if isinstance(obj, (complex, np.complexfloating)):
            return [float(obj.real), float(obj.imag)]
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        return super(NumpyEncoder, self).default(obj)


def json_dumps_numpy(obj: Any, **kwargs) -> str:
    """
    Serialize to JSON with numpy and complex support

    Keys are sorted so identical inputs give byte-identical output.

    Args:
        obj: Object to serialize
        **kwargs: Additional arguments for json.dumps

    Returns:
        JSON string

    Example:
        >>> json_dumps_numpy({'phi': 1 + 2j, 'n': np.int64(3)})
        '{"n": 3, "phi": [1.0, 2.0]}'
    """
    kwargs.setdefault('sort_keys', True)
    return json.dumps(obj, cls=NumpyEncoder, **kwargs)

"""
Division protocols for FamCake.
"""

from .average import divide_average
from .democratic import divide_democratic_k, divide_democratic_two
from .protocol_factory import ProtocolFactory, divide
from .result import ProtocolResult
from .unanimous import divide_unanimous

__all__ = [
    "ProtocolFactory",
    "ProtocolResult",
    "divide",
    "divide_average",
    "divide_democratic_k",
    "divide_democratic_two",
    "divide_unanimous",
]

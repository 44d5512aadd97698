"""
Factory for picking a division protocol by criterion and method.
"""
import logging
from typing import Any, Callable, Dict, Optional, Tuple

from ..fairness import Criterion
from ..instance import Instance
from .average import divide_average
from .democratic import divide_democratic_k, divide_democratic_two
from .result import ProtocolResult
from .unanimous import divide_unanimous

logger = logging.getLogger(__name__)

METHODS: Dict[Criterion, Tuple[str, ...]] = {
    Criterion.AVERAGE: ("auto", "connected", "recursive"),
    Criterion.UNANIMOUS: ("choose", "recursive"),
    Criterion.DEMOCRATIC: ("auto", "two", "equal", "entitled"),
}


class ProtocolFactory:
    """Resolve (criterion, method) pairs to protocol calls."""

    def __init__(self):
        """Initialize the factory with the default method of each criterion."""
        self._default_methods = {
            Criterion.AVERAGE: "auto",
            Criterion.UNANIMOUS: "recursive",
            Criterion.DEMOCRATIC: "auto",
        }

    def methods(self, criterion: Any) -> Tuple[str, ...]:
        return METHODS[self._criterion(criterion)]

    def _criterion(self, criterion: Any) -> Criterion:
        criterion = Criterion.parse(criterion)
        if criterion not in METHODS:
            raise ValueError(f"no division protocol for criterion {criterion.value!r}")
        return criterion

    def resolve(self, inst: Instance, criterion: Any, method: Optional[str] = None) -> str:
        """Concrete method name for an instance (``auto`` is resolved here).

        Args:
            inst: The instance to divide
            criterion: Criterion or alias
            method: Method name, or None for the default

        Returns:
            The method that will run
        """
        criterion = self._criterion(criterion)
        method = method or self._default_methods[criterion]
        if method not in METHODS[criterion]:
            raise ValueError(f"invalid method {method!r} for {criterion.value}; "
                             f"valid methods are {list(METHODS[criterion])}")
        if method != "auto":
            return method
        if criterion is Criterion.AVERAGE:
            return "connected" if inst.equal_entitlements else "recursive"
        if not inst.equal_entitlements:
            return "entitled"
        return "two" if inst.k == 2 else "equal"

    def get_protocol(self, inst: Instance, criterion: Any, method: Optional[str] = None,
                     compact: bool = False) -> Callable[[], ProtocolResult]:
        """Bind a protocol to an instance without running it."""
        criterion = self._criterion(criterion)
        method = self.resolve(inst, criterion, method)
        if criterion is Criterion.AVERAGE:
            return lambda: divide_average(inst, method, compact)
        if criterion is Criterion.UNANIMOUS:
            return lambda: divide_unanimous(inst, method, compact)
        if method == "two":
            return lambda: divide_democratic_two(inst)
        return lambda: divide_democratic_k(inst, method, compact)

    def divide(self, inst: Instance, criterion: Any, method: Optional[str] = None,
               compact: bool = False) -> ProtocolResult:
        protocol = self.get_protocol(inst, criterion, method, compact)
        result = protocol()
        logger.info("%s/%s: %d component(s), implementation bound %d",
                    result.criterion, result.method, result.comp, result.impl_bound)
        return result

    def set_default_method(self, criterion: Any, method: str) -> None:
        """Set the method used when none is given.

        Args:
            criterion: Criterion or alias
            method: One of the criterion's methods
        """
        criterion = self._criterion(criterion)
        if method not in METHODS[criterion]:
            raise ValueError(f"invalid method {method!r} for {criterion.value}; "
                             f"valid methods are {list(METHODS[criterion])}")
        self._default_methods[criterion] = method


_factory = ProtocolFactory()


def divide(inst: Instance, criterion: Any, method: Optional[str] = None, compact: bool = False) -> ProtocolResult:
    """Run the protocol for ``criterion`` with the shared factory."""
    return _factory.divide(inst, criterion, method, compact)

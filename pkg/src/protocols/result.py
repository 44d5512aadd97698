"""
Protocol output: the allocation, its component count and both bounds.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..allocation import Allocation
from ..errors import SchemaError


@dataclass
class ProtocolResult:
    """What a division protocol returns.

    ``paper_bound`` is the existence bound of the matching theorem and is
    only reported; ``impl_bound`` is guaranteed by this construction.
    """

    allocation: Allocation
    criterion: str
    method: str
    paper_bound: Optional[int]
    impl_bound: int
    trace: List[str] = field(default_factory=list)

    @property
    def comp(self) -> int:
        return self.allocation.comp()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "criterion": self.criterion,
            "method": self.method,
            "allocation": self.allocation.to_list(),
            "comp": self.comp,
            "paper_bound": self.paper_bound,
            "impl_bound": self.impl_bound,
            "trace": list(self.trace),
        }

    @classmethod
    def from_dict(cls, raw: Any) -> "ProtocolResult":
        if not isinstance(raw, dict) or "allocation" not in raw:
            raise SchemaError("allocation", "expected a protocol result object with an 'allocation' field")
        for key in ("criterion", "method", "impl_bound"):
            if key not in raw:
                raise SchemaError(key, "missing")
        return cls(
            allocation=Allocation.from_list(raw["allocation"]),
            criterion=str(raw["criterion"]),
            method=str(raw["method"]),
            paper_bound=raw.get("paper_bound"),
            impl_bound=int(raw["impl_bound"]),
            trace=[str(line) for line in raw.get("trace", [])],
        )

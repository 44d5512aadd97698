"""
Problem instances: families of agents with entitlements.

Instances come from JSON fixtures, from the named presets in the
``presets`` package, or from the seeded random generator below.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from presets import get_interleaved_table, get_nonadditive_table, get_land_table, get_weighted_gap_table

from .errors import InstanceError, SchemaError
from .measure import ValueMeasure
from .rational import format_rational, parse_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Member:
    """One agent: a name and a value measure."""

    name: str
    measure: ValueMeasure


@dataclass(frozen=True)
class Family:
    """A group of agents sharing one piece, entitled to ``weight`` of the cake."""

    name: str
    weight: Fraction
    members: Tuple[Member, ...]

    def __post_init__(self):
        object.__setattr__(self, "weight", Fraction(self.weight))
        object.__setattr__(self, "members", tuple(self.members))
        if self.weight <= 0:
            raise InstanceError(f"family {self.name!r} has non-positive weight {self.weight}")
        if not self.members:
            raise InstanceError(f"family {self.name!r} has no members")

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def measures(self) -> List[ValueMeasure]:
        return [member.measure for member in self.members]


@dataclass(frozen=True)
class Instance:
    """k families whose weights sum to 1."""

    families: Tuple[Family, ...]

    def __post_init__(self):
        object.__setattr__(self, "families", tuple(self.families))
        if not self.families:
            raise InstanceError("an instance needs at least one family")
        total = sum((family.weight for family in self.families), Fraction(0))
        if total != 1:
            raise InstanceError(f"weights sum to {total}, expected 1")

    @property
    def k(self) -> int:
        return len(self.families)

    @property
    def n(self) -> int:
        return sum(family.size for family in self.families)

    @property
    def weights(self) -> List[Fraction]:
        return [family.weight for family in self.families]

    @property
    def sizes(self) -> List[int]:
        return [family.size for family in self.families]

    @property
    def equal_entitlements(self) -> bool:
        return all(weight == Fraction(1, self.k) for weight in self.weights)

    def agents(self) -> List[Tuple[int, Member]]:
        """All agents as (family index, member) pairs, family by family."""
        return [(j, member) for j, family in enumerate(self.families) for member in family.members]

    def restricted(self, members: Sequence[Sequence[int]]) -> "Instance":
        """Sub-instance keeping the listed member indices of every family (weights unchanged)."""
        if len(members) != self.k:
            raise InstanceError(f"expected a member selection for each of {self.k} families")
        families = []
        for family, chosen in zip(self.families, members):
            families.append(Family(family.name, family.weight, tuple(family.members[i] for i in chosen)))
        return Instance(tuple(families))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "families": [
                {
                    "name": family.name,
                    "weight": format_rational(family.weight),
                    "members": [{"name": member.name, "density": member.measure.to_list()}
                                for member in family.members],
                }
                for family in self.families
            ]
        }

    @classmethod
    def from_dict(cls, raw: Any) -> "Instance":
        """Parse the instance JSON document.

        Raises:
            SchemaError: naming the first offending field
        """
        if not isinstance(raw, dict) or not isinstance(raw.get("families"), list):
            raise SchemaError("families", "expected an object with a 'families' list")
        families = []
        for j, entry in enumerate(raw["families"]):
            path = f"families[{j}]"
            if not isinstance(entry, dict):
                raise SchemaError(path, "expected an object")
            for key in ("name", "weight", "members"):
                if key not in entry:
                    raise SchemaError(f"{path}.{key}", "missing")
            if not isinstance(entry["name"], str):
                raise SchemaError(f"{path}.name", "expected a string")
            if not isinstance(entry["members"], list) or not entry["members"]:
                raise SchemaError(f"{path}.members", "expected a non-empty list")
            members = []
            for i, member in enumerate(entry["members"]):
                member_path = f"{path}.members[{i}]"
                if not isinstance(member, dict) or not isinstance(member.get("name"), str):
                    raise SchemaError(f"{member_path}.name", "expected a string")
                if "density" not in member:
                    raise SchemaError(f"{member_path}.density", "missing")
                members.append(Member(member["name"],
                                      ValueMeasure.from_list(member["density"], f"{member_path}.density")))
            weight = parse_rational(entry["weight"], f"{path}.weight")
            if weight <= 0:
                raise SchemaError(f"{path}.weight", f"must be positive, got {weight}")
            families.append(Family(entry["name"], weight, tuple(members)))
        if not families:
            raise SchemaError("families", "expected at least one family")
        return cls(tuple(families))


def from_table(table: Dict[str, Any]) -> Instance:
    """Build an instance from a district table (see the ``presets`` package)."""
    families = []
    for entry in table["families"]:
        members = tuple(Member(member["name"], ValueMeasure.from_district_values(member["districts"]))
                        for member in entry["members"])
        families.append(Family(entry["name"], entry["weight"], members))
    return Instance(tuple(families))


PRESETS = {
    "land": (get_land_table, {}),
    "nonadditive": (get_nonadditive_table, {}),
    "weighted-gap": (get_weighted_gap_table, {"k": 2}),
    "interleaved": (get_interleaved_table, {"k": 2, "m": 3}),
}

PRESET_ALIASES = {
    "section2": "land",
    "thm2": "weighted-gap",
    "lemma5": "interleaved",
}


def gen_preset(name: str, params: Optional[Dict[str, int]] = None) -> Instance:
    """Build a named fixture instance.

    Args:
        name: One of ``land``, ``nonadditive``, ``weighted-gap`` (param k) and ``interleaved``
            (params k, m), or one of the aliases ``section2``, ``thm2`` and ``lemma5``
        params: Integer parameters; missing ones take their defaults

    Returns:
        The instance, with districts mapped to equal-length subintervals

    Raises:
        InstanceError: for an unknown preset or invalid parameters
    """
    name = PRESET_ALIASES.get(name, name)
    if name not in PRESETS:
        known = sorted(list(PRESETS) + list(PRESET_ALIASES))
        raise InstanceError(f"unknown preset {name!r}; choose from {known}")
    builder, defaults = PRESETS[name]
    params = dict(params or {})
    unknown = set(params) - set(defaults)
    if unknown:
        raise InstanceError(f"preset {name!r} takes no parameter(s) {sorted(unknown)}")
    merged = {**defaults, **params}
    try:
        table = builder(**merged)
    except ValueError as exc:
        raise InstanceError(str(exc)) from exc
    logger.debug("built preset %s with %s", name, merged)
    return from_table(table)


GRID_FACTOR = 2
MAX_DENSITY = 9


def gen_random(k: int,
               family_sizes: Sequence[int],
               max_breakpoints: int,
               seed: int,
               weights: Union[None, str, Sequence[Fraction]] = None) -> Instance:
    """Seeded random instance.

    The generator is ``numpy.random.default_rng(seed)``. For every member in
    family order it draws a segment count ``s`` uniformly from
    ``1..max_breakpoints``, then ``s - 1`` distinct interior breakpoints from
    the grid ``{1/G, ..., (G-1)/G}`` with ``G = 2 * max_breakpoints``, then
    ``s`` integer densities in ``0..9``. An all-zero draw gets density 1 on
    its first segment. Densities are rescaled exactly to total value 1.
    With ``weights="random"``, one integer in ``1..9`` per family is drawn
    last and the weights are these integers normalized.

    Args:
        k: Number of families
        family_sizes: Members per family
        max_breakpoints: Upper bound on segments per measure
        seed: PRNG seed
        weights: None for equal entitlements, ``"random"``, or explicit weights

    Returns:
        The generated instance
    """
    if k < 1 or len(family_sizes) != k:
        raise InstanceError(f"expected k >= 1 and one size per family, got k={k}, sizes={list(family_sizes)}")
    if any(size < 1 for size in family_sizes):
        raise InstanceError(f"family sizes must be positive, got {list(family_sizes)}")
    if max_breakpoints < 1:
        raise InstanceError(f"max_breakpoints must be positive, got {max_breakpoints}")

    rng = np.random.default_rng(seed)
    grid = GRID_FACTOR * max_breakpoints
    families = []
    for j, size in enumerate(family_sizes):
        members = []
        for i in range(size):
            members.append(Member(f"Agent {j + 1}.{i + 1}", _random_measure(rng, max_breakpoints, grid)))
        families.append((f"Family {j + 1}", members))

    if weights is None:
        chosen = [Fraction(1, k)] * k
    elif isinstance(weights, str):
        if weights != "random":
            raise InstanceError(f"unknown weight mode {weights!r}")
        raw = [int(value) for value in rng.integers(1, MAX_DENSITY + 1, size=k)]
        chosen = [Fraction(value, sum(raw)) for value in raw]
    else:
        chosen = [Fraction(weight) for weight in weights]
        if len(chosen) != k:
            raise InstanceError(f"expected {k} weights, got {len(chosen)}")

    return Instance(tuple(Family(name, weight, tuple(members))
                          for (name, members), weight in zip(families, chosen)))


def _random_measure(rng: np.random.Generator, max_breakpoints: int, grid: int) -> ValueMeasure:
    count = int(rng.integers(1, max_breakpoints + 1))
    interior = sorted(int(point) for point in rng.choice(np.arange(1, grid), size=count - 1, replace=False))
    densities = [int(value) for value in rng.integers(0, MAX_DENSITY + 1, size=count)]
    if not any(densities):
        densities[0] = 1
    untils = [Fraction(point, grid) for point in interior] + [Fraction(1)]
    return ValueMeasure.from_unnormalized(zip(untils, densities))

"""
District tables for the lower-bound constructions.
"""
from fractions import Fraction

NAME_POOL = ["Alice", "Bob", "Charlie", "David", "Eva", "Frankie"]


def get_weighted_gap_table(k: int) -> dict:
    """Connected-impossible instance for average fairness with unequal weights.

    The cake has ``2k - 1`` districts. Family 1 is entitled to
    ``k^2 / (k^2 + k - 1)`` and values the even districts (0, 2, ...); each
    other family j is entitled to ``1 / (k^2 + k - 1)`` and values only
    district ``2j - 1``. Every family has a single member.

    Args:
        k: Number of families (at least 2)

    Returns:
        Dict with ``families`` in the same layout as the worked example
    """
    if k < 2:
        raise ValueError(f"weighted-gap needs k >= 2, got {k}")
    districts = 2 * k - 1
    denominator = k * k + k - 1

    first = [1 if index % 2 == 0 else 0 for index in range(districts)]
    families = [{
        "name": "Family 1",
        "weight": Fraction(k * k, denominator),
        "members": [{"name": "Agent 1", "districts": first}],
    }]
    for j in range(1, k):
        row = [0] * districts
        row[2 * j - 1] = 1
        families.append({
            "name": f"Family {j + 1}",
            "weight": Fraction(1, denominator),
            "members": [{"name": f"Agent {j + 1}", "districts": row}],
        })
    return {"families": families}


def get_interleaved_table(k: int, m: int) -> dict:
    """Interleaved single-district interests: k families of m members.

    Member i of family j wants only district ``i*k + j`` of ``m*k`` districts,
    so no two members ever want the same district.
    """
    if k < 1 or m < 1:
        raise ValueError(f"interleaved needs k, m >= 1, got k={k}, m={m}")
    districts = m * k
    use_pool = k * m <= len(NAME_POOL)

    families = []
    for j in range(k):
        members = []
        for i in range(m):
            row = [0] * districts
            row[i * k + j] = 1
            name = NAME_POOL[j * m + i] if use_pool else f"Agent {j + 1}.{i + 1}"
            members.append({"name": name, "districts": row})
        families.append({"name": f"Family {j + 1}", "weight": Fraction(1, k), "members": members})
    return {"families": families}

"""
Tables of the two-family land example and the non-additivity example.
"""
from fractions import Fraction


def get_land_table() -> dict:
    """Two families of three sharing four equal districts worth 96 in total.

    Returns:
        Dict with ``families``: a list of {name, weight, members}, where each
        member is {name, districts} and districts are raw (unnormalized) values
    """
    return {
        "families": [
            {
                "name": "Family 1",
                "weight": Fraction(1, 2),
                "members": [
                    {"name": "Alice", "districts": [60, 30, 3, 3]},
                    {"name": "Bob", "districts": [50, 40, 3, 3]},
                    {"name": "Charlie", "districts": [10, 80, 3, 3]},
                ],
            },
            {
                "name": "Family 2",
                "weight": Fraction(1, 2),
                "members": [
                    {"name": "David", "districts": [3, 3, 60, 30]},
                    {"name": "Eva", "districts": [3, 3, 60, 30]},
                    {"name": "Frankie", "districts": [3, 3, 0, 90]},
                ],
            },
        ]
    }


def get_nonadditive_table() -> dict:
    """Three members of one family over three districts.

    The minimum over members is 0, 1 and 1 on the single districts but 3 on
    their union.
    """
    return {
        "families": [
            {
                "name": "Family 1",
                "weight": Fraction(1),
                "members": [
                    {"name": "Alice", "districts": [1, 1, 1]},
                    {"name": "Bob", "districts": [0, 2, 1]},
                    {"name": "Charlie", "districts": [0, 1, 2]},
                ],
            }
        ]
    }

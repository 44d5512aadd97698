"""
Exact linear feasibility over Fractions.

Phase I of the simplex method with Bland's rule: artificial variables are
driven out of the basis and the system is feasible exactly when their sum
reaches zero. Used by the component searches, whose systems are small.
"""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Row = Tuple[Sequence[Fraction], str, Fraction]

SENSES = ("==", ">=", "<=")


def feasible_point(rows: Sequence[Row], num_vars: int) -> Optional[List[Fraction]]:
    """Find x >= 0 satisfying every row, or None.

    Args:
        rows: (coefficients, sense, rhs) with sense one of ``==``, ``>=``, ``<=``
        num_vars: Number of structural variables

    Returns:
        A feasible point (a basic solution) or None when the system is infeasible
    """
    slack_count = sum(1 for _, sense, _ in rows if sense != "==")
    width = num_vars + slack_count
    tableau: List[List[Fraction]] = []
    slack = num_vars
    for coefficients, sense, rhs in rows:
        if sense not in SENSES:
            raise ValueError(f"unknown row sense {sense!r}")
        if len(coefficients) != num_vars:
            raise ValueError(f"row has {len(coefficients)} coefficients, expected {num_vars}")
        line = [Fraction(c) for c in coefficients] + [Fraction(0)] * slack_count
        if sense == ">=":
            line[slack] = Fraction(-1)
            slack += 1
        elif sense == "<=":
            line[slack] = Fraction(1)
            slack += 1
        rhs = Fraction(rhs)
        if rhs < 0:
            line = [-c for c in line]
            rhs = -rhs
        tableau.append(line + [rhs])

    # Basis starts on the artificial variables width .. width + m - 1.
    basis = [width + i for i in range(len(tableau))]
    objective = [sum((line[j] for line in tableau), Fraction(0)) for j in range(width + 1)]

    while True:
        entering = next((j for j in range(width) if objective[j] > 0), None)
        if entering is None:
            break
        leaving = None
        best = None
        for i, line in enumerate(tableau):
            if line[entering] > 0:
                ratio = line[-1] / line[entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best, leaving = ratio, i
        if leaving is None:
            # Phase I is bounded below by zero, so this cannot happen.
            raise ArithmeticError("unbounded phase-I problem")
        _pivot(tableau, objective, leaving, entering)
        basis[leaving] = entering

    if objective[-1] != 0:
        return None
    point = [Fraction(0)] * num_vars
    for i, var in enumerate(basis):
        if var < num_vars:
            point[var] = tableau[i][-1]
    return point


def _pivot(tableau: List[List[Fraction]], objective: List[Fraction], row: int, column: int) -> None:
    pivot = tableau[row][column]
    tableau[row] = [c / pivot for c in tableau[row]]
    normalized = tableau[row]
    for i, line in enumerate(tableau):
        if i != row and line[column] != 0:
            factor = line[column]
            tableau[i] = [c - factor * p for c, p in zip(line, normalized)]
    factor = objective[column]
    if factor != 0:
        objective[:] = [c - factor * p for c, p in zip(objective, normalized)]

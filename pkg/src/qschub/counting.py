"""From Gromov-Witten invariants to actual curve counts.

A degree-d invariant whose conditions include r Schubert varieties of
codimension one is divisible by d^r, and the quotient is the number of
degree-d rational curves meeting general translates of all the conditions.
The quotient, the invariant, and r are always reported together: the
distinction is the whole point (a curve through a divisor condition can be
marked at any of its d intersection points with it, inflating the map count
by d per divisor condition).
"""

from dataclasses import dataclass

from .errors import UnbalancedQueryError
from .gromov_witten import GWQuery, gw_spoint
from .partitions import Partition, weight
from .spaces import Grassmannian


@dataclass(frozen=True)
class CountProblem:
    """An enumerative query: how many degree-d rational curves on the space
    meet general translates of all the Schubert conditions?"""

    space: Grassmannian
    degree: int
    conditions: tuple[Partition, ...]

    def as_query(self) -> GWQuery:
        return GWQuery(self.space, self.degree, self.conditions)


@dataclass(frozen=True)
class CountResult:
    gw_value: int
    divisor_conditions: int
    curve_count: int


def rational_curve_count(problem: CountProblem) -> CountResult:
    """Solve a CountProblem: evaluate the invariant and divide by d^r where
    r counts the codimension-one conditions.  The division is exact; a
    remainder would be an implementation bug and raises RuntimeError."""
    if problem.degree < 1:
        raise ValueError("curve counting needs degree >= 1")
    value = gw_spoint(problem.as_query())
    r = sum(1 for g in problem.conditions if weight(g) == 1)
    scale = problem.degree**r
    if value % scale:
        raise RuntimeError(
            f"invariant {value} is not divisible by d^r = {scale}; this is a bug"
        )
    return CountResult(value, r, value // scale)


def check_balanced(space: Grassmannian, degree: int, conditions: tuple[Partition, ...]) -> None:
    """Raise UnbalancedQueryError unless the condition codimensions sum to
    the moduli dimension (convenience for front ends that validate early)."""
    query = GWQuery(space, degree, conditions)
    if not query.is_balanced():
        raise UnbalancedQueryError(
            f"codimensions sum to {query.total_codim()}, moduli dimension is "
            f"{space.moduli_dimension(len(conditions), degree)}"
        )

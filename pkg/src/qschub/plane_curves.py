"""Counts of rational plane curves through points in general position.

N_d is the number of degree-d rational curves in the projective plane
passing through 3d - 1 general points.  Starting from N_1 = 1 (the line
through two points), the recursion obtained from associativity of the
quantum product of the plane determines every higher value:

    N_d = sum over a + b = d, a, b >= 1 of
          N_a * N_b * a^2 * b * (b * C(3d-4, 3a-2) - a * C(3d-4, 3a-1))

All arithmetic is exact; the values grow fast (N_12 has 27 digits) and are
kept in a dense memo table.
"""

from math import comb

_table: list[int] = [0, 1]  # _table[d] = N_d; index 0 is unused


def kontsevich_nd(d: int) -> int:
    """The number of rational plane curves of degree d through 3d - 1
    general points, by the associativity recursion from N_1 = 1."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    while len(_table) <= d:
        e = len(_table)
        total = 0
        for a in range(1, e):
            b = e - a
            total += (
                _table[a]
                * _table[b]
                * a * a * b
                * (b * comb(3 * e - 4, 3 * a - 2) - a * comb(3 * e - 4, 3 * a - 1))
            )
        _table.append(total)
    return _table[d]


def nd_values(up_to: int) -> list[tuple[int, int]]:
    """The pairs (d, N_d) for d = 1..up_to."""
    return [(d, kontsevich_nd(d)) for d in range(1, up_to + 1)]


def reset_cache() -> None:
    """Drop every memoized value (used to test cold-cache determinism)."""
    del _table[2:]

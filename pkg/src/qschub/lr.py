"""Littlewood-Richardson coefficients by direct tableau enumeration.

This is the classical substrate for the quantum product and the brute-force
oracle for every product identity in the test suites.  The coefficient
c^nu_{lam,mu} is computed as the number of semistandard fillings of the
skew shape nu/lam with content mu whose reverse reading word (right to
left, top to bottom) is a lattice word.  The search visits cells in exactly
that reading order, so the lattice condition prunes branches as early as
possible.
"""

import os
from functools import lru_cache

from .errors import BoxError
from .partitions import (
    Partition,
    contains,
    part,
    partitions_of_weight,
    weight,
)
from .spaces import Grassmannian, require_type_a

LRExpansion = dict[Partition, int]

_DEFAULT_CACHE_SIZE = 1 << 16


def _cache_size() -> int:
    """Expansion cache bound; override with QSCHUB_CACHE_SIZE."""
    raw = os.environ.get("QSCHUB_CACHE_SIZE", "")
    try:
        return max(0, int(raw))
    except ValueError:
        return _DEFAULT_CACHE_SIZE


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Littlewood-Richardson coefficient c^nu_{lam,mu}.

    Zero unless lam fits inside nu and |nu| = |lam| + |mu|; otherwise the
    count of lattice semistandard skew tableaux of shape nu/lam and content
    mu (rows weakly increase, columns strictly increase, and every prefix of
    the reverse reading word contains at least as many i's as (i+1)'s).
    """
    if weight(nu) != weight(lam) + weight(mu) or not contains(nu, lam):
        return 0
    nrows = len(nu)
    nvals = len(mu)
    inner = [part(lam, r) for r in range(nrows)]
    cells = [
        (r, c) for r in range(nrows) for c in range(nu[r] - 1, inner[r] - 1, -1)
    ]
    grid = [[0] * nu[r] for r in range(nrows)]
    counts = [0] * (nvals + 2)
    found = 0

    def fill(t: int) -> None:
        nonlocal found
        if t == len(cells):
            found += 1
            return
        r, c = cells[t]
        hi = nvals
        if c + 1 < nu[r]:
            hi = min(hi, grid[r][c + 1])  # weakly increasing along the row
        lo = 1
        if r > 0 and c >= inner[r - 1]:
            lo = grid[r - 1][c] + 1  # strictly increasing down the column
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # would break the lattice prefix condition
            grid[r][c] = v
            counts[v] += 1
            fill(t + 1)
            counts[v] -= 1
        grid[r][c] = 0

    fill(0)
    return found


@lru_cache(maxsize=_cache_size())
def _schur_terms(lam: Partition, mu: Partition, max_rows: int):
    maxpart = part(lam, 0) + part(mu, 0)
    out = []
    for nu in partitions_of_weight(weight(lam) + weight(mu), max_rows, maxpart):
        if not contains(nu, lam):
            continue
        coeff = lr_coefficient(lam, mu, nu)
        if coeff:
            out.append((nu, coeff))
    return tuple(sorted(out))


def schur_product(lam: Partition, mu: Partition, max_rows: int) -> LRExpansion:
    """Expansion of the product of two Schur functions in the Schur basis,
    truncated to partitions with at most max_rows rows.  Results are
    memoized (bounded cache, see QSCHUB_CACHE_SIZE)."""
    return dict(_schur_terms(lam, mu, max_rows))


def schur_product_uncached(lam: Partition, mu: Partition, max_rows: int) -> LRExpansion:
    """Same as schur_product but bypassing the memo cache."""
    return dict(_schur_terms.__wrapped__(lam, mu, max_rows))


def clear_cache() -> None:
    _schur_terms.cache_clear()


def classical_structure_constants(
    space: Grassmannian, lam: Partition, mu: Partition
) -> LRExpansion:
    """schur_product restricted to the Schubert basis of the space: only
    partitions inside the m x (n-m) box survive."""
    require_type_a(space)
    for p in (lam, mu):
        if not space.in_box(p):
            raise BoxError(f"partition {p} does not fit the box of {space.notation}")
    return {
        nu: coeff
        for nu, coeff in schur_product(lam, mu, space.m).items()
        if space.in_box(nu)
    }

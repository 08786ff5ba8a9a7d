"""Integer partitions in canonical form.

A partition is a tuple of weakly decreasing positive integers; the empty
tuple is the empty partition (the index of the fundamental class).  No
zeros are ever stored, so equality and hashing are plain tuple semantics.
The text form is a comma list like "2,1", with "0" denoting the empty
partition.
"""

from collections import Counter
from typing import Iterable, Iterator

from .errors import BoxError

Partition = tuple[int, ...]

EMPTY: Partition = ()


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize an iterable of parts: trailing zeros are stripped,
    anything not weakly decreasing and positive is rejected."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"parts {p} are not weakly decreasing")
    if p and p[-1] < 1:
        raise ValueError(f"parts {p} contain a non-positive entry")
    return p


def parse_partition(text: str) -> Partition:
    """Parse the comma form "a,b,c"; a bare "0" is the empty partition."""
    body = text.strip()
    if body == "0":
        return EMPTY
    try:
        parts = tuple(int(piece) for piece in body.split(","))
    except ValueError:
        raise ValueError(f"bad partition syntax: {text!r}") from None
    if any(x < 1 for x in parts):
        raise ValueError(f"bad partition syntax: {text!r} (parts must be positive)")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"bad partition syntax: {text!r} (parts must be weakly decreasing)")
    return parts


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p) if p else "0"


def weight(p: Partition) -> int:
    """Total number of boxes; the codimension of the indexed Schubert class."""
    return sum(p)


def part(p: Partition, i: int) -> int:
    """The i-th part (0-indexed), reading zeros past the end."""
    return p[i] if 0 <= i < len(p) else 0


def fits_in_box(p: Partition, rows: int, cols: int) -> bool:
    """True iff p has at most `rows` parts, each at most `cols`."""
    return len(p) <= rows and (not p or p[0] <= cols)


def contains(outer: Partition, inner: Partition) -> bool:
    """Containment of Young diagrams: inner_i <= outer_i for all i."""
    return len(inner) <= len(outer) and all(
        inner[i] <= outer[i] for i in range(len(inner))
    )


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not p:
        return EMPTY
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def is_horizontal_strip(inner: Partition, outer: Partition) -> bool:
    """True iff outer/inner is a horizontal strip: outer contains inner and
    the skew diagram has at most one box per column, i.e.
    outer_i >= inner_i >= outer_{i+1} for all i."""
    if len(inner) > len(outer):
        return False
    return all(
        outer[i] >= part(inner, i) >= part(outer, i + 1) for i in range(len(outer))
    )


def dual_in_box(p: Partition, rows: int, cols: int) -> Partition:
    """The 180-degree rotated complement inside the rows x cols box; the
    index of the Poincare dual Schubert class.  Involution on the box."""
    if not fits_in_box(p, rows, cols):
        raise BoxError(f"partition {format_partition(p)} does not fit a {rows}x{cols} box")
    padded = p + (0,) * (rows - len(p))
    flipped = tuple(cols - padded[rows - 1 - i] for i in range(rows))
    return as_partition(flipped)


def enumerate_box(rows: int, cols: int) -> list[Partition]:
    """All partitions fitting in the rows x cols box, sorted by weight and,
    within a weight, with larger leading parts first (so the order starts
    0, 1, 2, 1,1, 2,1, 2,2 in the 2x2 box).  There are C(rows+cols, rows)
    of them."""
    def gen(nrows: int, maxpart: int) -> Iterator[Partition]:
        yield EMPTY
        if nrows == 0 or maxpart == 0:
            return
        for first in range(1, maxpart + 1):
            for rest in gen(nrows - 1, first):
                yield (first, *rest)

    return sorted(gen(rows, cols), key=lambda q: (weight(q), tuple(-x for x in q)))


def partitions_of_weight(n: int, max_rows: int, max_part: int) -> Iterator[Partition]:
    """All partitions of n with at most max_rows parts, each at most max_part."""
    if n == 0:
        yield EMPTY
        return
    if max_rows <= 0 or max_part <= 0:
        return
    for first in range(min(n, max_part), 0, -1):
        if first * max_rows < n:
            break
        for rest in partitions_of_weight(n - first, max_rows - 1, first):
            yield (first, *rest)


def is_k_strict(p: Partition, k: int) -> bool:
    """True iff no part greater than k is repeated."""
    return all(mult == 1 for value, mult in Counter(p).items() if value > k)

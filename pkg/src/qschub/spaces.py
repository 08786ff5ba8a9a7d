"""Grassmannian target spaces of the four classical families.

Family A is the ordinary Grassmannian G(m, n) of m-planes in C^n and is
fully supported.  The isotropic families are constructible and carry the
numeric data that has an explicit formula (k, critical degree, kernel/span
dimensions), but anything cohomological (dimension, degree of c1, products)
deliberately raises UnsupportedFamilyError instead of guessing:

    C = IG(m, 2n)    symplectic form
    B = OG(m, 2n+1)  symmetric form, odd ambient dimension
    D = OG(m, 2n+2)  symmetric form, even ambient dimension
"""

import re
from dataclasses import dataclass

from .errors import DegreeRangeError, UnsupportedFamilyError
from .partitions import Partition, dual_in_box, enumerate_box, fits_in_box

_FAMILIES = frozenset("ABCD")

_ISOTROPIC_MSG = "isotropic quantum products out of scope"


@dataclass(frozen=True)
class Grassmannian:
    family: str
    m: int
    n: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        hi = {"A": self.n - 1, "B": self.n, "C": self.n, "D": self.n + 1}[self.family]
        if not 1 <= self.m <= hi:
            raise ValueError(
                f"family {self.family} requires 1 <= m <= {hi}, got m={self.m}, n={self.n}"
            )

    @property
    def notation(self) -> str:
        if self.family == "A":
            return f"G({self.m},{self.n})"
        if self.family == "C":
            return f"IG({self.m},{2 * self.n})"
        if self.family == "B":
            return f"OG({self.m},{2 * self.n + 1})"
        return f"OG({self.m},{2 * self.n + 2})"

    @property
    def is_maximal(self) -> bool:
        """Whether the isotropic subspaces have the largest possible rank."""
        if self.family == "A":
            return False
        return self.m == (self.n + 1 if self.family == "D" else self.n)

    def k_value(self) -> int:
        """The strictness bound for the partitions indexing Schubert
        varieties: n-m in types B and C, n+1-m in type D."""
        if self.family == "A":
            raise UnsupportedFamilyError("k is defined only for families B, C, D")
        if self.family == "D":
            return self.n + 1 - self.m
        return self.n - self.m

    def dimension(self) -> int:
        if self.family != "A":
            raise UnsupportedFamilyError(
                f"dimension of {self.notation} not implemented (family {self.family})"
            )
        return self.m * (self.n - self.m)

    def c1_degree(self) -> int:
        """Degree of the first Chern class of the tangent bundle; this is
        also the grading degree of the quantum parameter q."""
        if self.family != "A":
            raise UnsupportedFamilyError(
                f"c1 degree of {self.notation} not implemented (family {self.family})"
            )
        return self.n

    def moduli_dimension(self, s: int, d: int) -> int:
        """Dimension of the moduli space of genus-zero degree-d stable maps
        with s marked points: dim X + s - 3 + d * deg c1(X)."""
        return self.dimension() + s - 3 + d * self.c1_degree()

    def critical_degree(self) -> int:
        """Smallest degree for which two general points lie on a rational
        curve of that degree."""
        if self.family == "A":
            return min(self.m, self.n - self.m)
        if self.family == "C":
            return self.m
        rounded_even = self.m + (self.m % 2)
        return rounded_even // 2 if self.is_maximal else rounded_even

    def kernel_span_dims(self, d: int) -> tuple[int, int]:
        """Dimensions (m-d, m+d) of the kernel/span pair swept out by a
        degree-d rational curve of maximal moving freedom."""
        if not 1 <= d <= min(self.critical_degree(), self.m):
            raise DegreeRangeError(
                f"degree {d} out of range 1..{min(self.critical_degree(), self.m)}"
                f" for {self.notation}"
            )
        return (self.m - d, self.m + d)

    # -- family-A Schubert basis helpers -------------------------------

    @property
    def box_cols(self) -> int:
        if self.family != "A":
            raise UnsupportedFamilyError(_ISOTROPIC_MSG)
        return self.n - self.m

    def in_box(self, p: Partition) -> bool:
        return fits_in_box(p, self.m, self.box_cols)

    def basis(self) -> list[Partition]:
        """Schubert basis indices in deterministic order."""
        return enumerate_box(self.m, self.box_cols)

    def dual(self, p: Partition) -> Partition:
        return dual_in_box(p, self.m, self.box_cols)

    def point_class(self) -> Partition:
        """Index of the class of a point: the full box."""
        return (self.box_cols,) * self.m if self.box_cols else ()

    def to_json(self) -> dict:
        return {"family": self.family, "m": self.m, "n": self.n, "notation": self.notation}

    def __str__(self) -> str:
        return self.notation


def grassmannian(m: int, n: int) -> Grassmannian:
    """The ordinary (family A) Grassmannian G(m, n)."""
    return Grassmannian("A", m, n)


_SPACE_RE = re.compile(r"^(G|IG|OG)\((\d+),(\d+)\)$")


def parse_space(text: str) -> Grassmannian:
    """Parse "G(m,n)", "IG(m,2n)", or "OG(m,N)" (odd N is family B, even
    N is family D)."""
    match = _SPACE_RE.match(text.strip())
    if not match:
        raise ValueError(f"bad space syntax: {text!r}")
    kind, m, big = match.group(1), int(match.group(2)), int(match.group(3))
    if kind == "G":
        return Grassmannian("A", m, big)
    if kind == "IG":
        if big % 2:
            raise ValueError(f"bad space syntax: {text!r} (IG needs an even ambient dimension)")
        return Grassmannian("C", m, big // 2)
    if big % 2:
        return Grassmannian("B", m, (big - 1) // 2)
    return Grassmannian("D", m, (big - 2) // 2)


def require_type_a(space: Grassmannian) -> None:
    if space.family != "A":
        raise UnsupportedFamilyError(_ISOTROPIC_MSG)

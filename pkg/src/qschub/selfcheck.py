"""Built-in invariant suites.

Every suite sweeps an identity that must hold exactly: ring axioms of the
quantum product, positivity and grading of its structure constants,
agreement of the rim-hook and Pieri paths, order-independence of rim-hook
removal, Poincare pairing, symmetry and the divisor rule for invariants,
and the plane-count cross checks.  `quick` covers G(2,4) and G(1,3)
exhaustively; `full` adds G(2,5) and G(3,6) sweeps.  A deliberately broken
build (wrong rim-hook sign, wrong Pieri chain) must fail here.
"""

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from . import quantum
from .counting import CountProblem, rational_curve_count
from .gromov_witten import GWQuery, gw_3point, gw_spoint
from .lr import classical_structure_constants
from .partitions import Partition, partitions_of_weight, weight
from .plane_curves import kontsevich_nd
from .quantum import (
    QuantumClass,
    quantum_pieri,
    quantum_product,
    removable_hooks,
    remove_rim_hook,
    rim_hook_reduce,
)
from .spaces import Grassmannian, grassmannian

QUICK_SPACES = (grassmannian(2, 4), grassmannian(1, 3))
FULL_EXTRA_SPACES = (grassmannian(2, 5), grassmannian(3, 6))

_RANDOM_TRIPLES = 200
_SEED = 20240811


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, condition: bool, label: str) -> None:
        self.checks += 1
        if not condition:
            self.failures.append(label)


def check_unit(spaces) -> SuiteResult:
    res = SuiteResult("unit")
    for space in spaces:
        for lam in space.basis():
            res.expect(
                quantum_product((), lam, space) == QuantumClass.from_partition(space, lam),
                f"{space}: unit * {lam}",
            )
    return res


def check_commutativity(spaces) -> SuiteResult:
    res = SuiteResult("commutativity")
    for space in spaces:
        basis = space.basis()
        for lam, mu in combinations_with_replacement(basis, 2):
            res.expect(
                quantum_product(lam, mu, space) == quantum_product(mu, lam, space),
                f"{space}: {lam} * {mu}",
            )
    return res


def _associative(space, a, b, c) -> bool:
    left = quantum_product(a, b, space) * QuantumClass.from_partition(space, c)
    right = QuantumClass.from_partition(space, a) * quantum_product(b, c, space)
    return left == right


def check_associativity(exhaustive_spaces, sampled_spaces=()) -> SuiteResult:
    res = SuiteResult("associativity")
    for space in exhaustive_spaces:
        basis = space.basis()
        for a in basis:
            for b in basis:
                for c in basis:
                    res.expect(_associative(space, a, b, c), f"{space}: ({a},{b},{c})")
    rng = random.Random(_SEED)
    for space in sampled_spaces:
        basis = space.basis()
        for _ in range(_RANDOM_TRIPLES):
            a, b, c = (rng.choice(basis) for _ in range(3))
            res.expect(_associative(space, a, b, c), f"{space}: ({a},{b},{c})")
    return res


def check_grading(spaces) -> SuiteResult:
    res = SuiteResult("grading")
    for space in spaces:
        basis = space.basis()
        for lam, mu in combinations_with_replacement(basis, 2):
            total = weight(lam) + weight(mu)
            for d, nu, _ in quantum_product(lam, mu, space).sorted_terms():
                res.expect(
                    weight(nu) + d * space.n == total,
                    f"{space}: {lam} * {mu} term (q^{d}, {nu})",
                )
    return res


def check_positivity(spaces) -> SuiteResult:
    res = SuiteResult("positivity")
    for space in spaces:
        basis = space.basis()
        for lam, mu in combinations_with_replacement(basis, 2):
            for d, nu, c in quantum_product(lam, mu, space).sorted_terms():
                res.expect(c > 0, f"{space}: {lam} * {mu} has coeff {c} at (q^{d}, {nu})")
    return res


def check_dual_path(spaces) -> SuiteResult:
    res = SuiteResult("dual_path")
    for space in spaces:
        for p in range(1, space.box_cols + 1):
            row: Partition = (p,)
            for lam in space.basis():
                res.expect(
                    quantum_pieri(p, lam, space) == quantum_product(row, lam, space),
                    f"{space}: pieri {p} on {lam}",
                )
    return res


def check_classical_layer(spaces) -> SuiteResult:
    res = SuiteResult("classical_layer")
    for space in spaces:
        basis = space.basis()
        for lam, mu in combinations_with_replacement(basis, 2):
            res.expect(
                quantum_product(lam, mu, space).q_part(0)
                == classical_structure_constants(space, lam, mu),
                f"{space}: {lam} * {mu}",
            )
    return res


def _all_reduction_results(nu: Partition, strip_size: int, m: int) -> set:
    """Every (q_power, sign, core) reachable by any removal order."""
    hooks = removable_hooks(nu, strip_size)
    if not hooks:
        return {(0, 1, nu)}
    results = set()
    for cell in hooks:
        smaller, height = remove_rim_hook(nu, cell)
        step_sign = quantum._hook_sign(m, height)
        for d, sign, core in _all_reduction_results(smaller, strip_size, m):
            results.add((d + 1, sign * step_sign, core))
    return results


def check_rim_hook_orders(space: Grassmannian, max_weight: int) -> SuiteResult:
    res = SuiteResult("rim_hook_orders")
    max_part = 2 * space.box_cols
    for w in range(max_weight + 1):
        for nu in partitions_of_weight(w, space.m, max_part):
            results = _all_reduction_results(nu, space.n, space.m)
            res.expect(len(results) == 1, f"{space}: {nu} gave {sorted(results)}")
            d, sign, core = next(iter(results))
            expected = (
                quantum.ReductionOutcome(d, sign, core) if space.in_box(core) else None
            )
            res.expect(
                rim_hook_reduce(nu, space) == expected,
                f"{space}: {nu} normative reduction disagrees",
            )
    return res


def check_poincare_pairing(spaces) -> SuiteResult:
    res = SuiteResult("poincare_pairing")
    for space in spaces:
        box = space.point_class()
        for lam in space.basis():
            for mu in space.basis():
                got = classical_structure_constants(space, lam, mu).get(box, 0)
                expected = 1 if mu == space.dual(lam) else 0
                res.expect(got == expected, f"{space}: pairing {lam}, {mu}")
    return res


def check_gw_symmetry(spaces, max_degree: int = 2) -> SuiteResult:
    res = SuiteResult("gw_symmetry")
    for space in spaces:
        basis = space.basis()
        for d in range(max_degree + 1):
            target = space.moduli_dimension(3, d)
            for a in basis:
                for b in basis:
                    for c in basis:
                        if weight(a) + weight(b) + weight(c) != target:
                            continue
                        value = gw_3point(space, a, b, c, d)
                        res.expect(value >= 0, f"{space}: I_{d}({a},{b},{c}) < 0")
                        for x, y, z in ((a, c, b), (b, a, c), (c, b, a), (b, c, a), (c, a, b)):
                            res.expect(
                                gw_3point(space, x, y, z, d) == value,
                                f"{space}: I_{d} not symmetric on ({a},{b},{c})",
                            )
    return res


def check_divisor_rule(spaces, max_degree: int = 2) -> SuiteResult:
    """Appending a divisor insertion multiplies the invariant by d and the
    curve count not at all."""
    res = SuiteResult("divisor_rule")
    for space in spaces:
        basis = [p for p in space.basis() if p]
        for d in range(1, max_degree + 1):
            for s in (2, 3):
                target = space.moduli_dimension(s, d)
                for combo in combinations_with_replacement(basis, s):
                    if sum(weight(p) for p in combo) != target:
                        continue
                    try:
                        base = rational_curve_count(CountProblem(space, d, combo))
                        more = rational_curve_count(
                            CountProblem(space, d, combo + ((1,),))
                        )
                    except Exception as exc:  # any raise here is a failure
                        res.expect(False, f"{space}: d={d} {combo} raised {exc!r}")
                        continue
                    res.expect(
                        more.gw_value == d * base.gw_value
                        and more.curve_count == base.curve_count,
                        f"{space}: divisor append changed the count on d={d} {combo}",
                    )
    return res


def check_plane_counts() -> SuiteResult:
    res = SuiteResult("plane_counts")
    res.expect(kontsevich_nd(1) == 1, "N_1 != 1")
    res.expect(kontsevich_nd(2) == 1, "N_2 != 1")
    res.expect(kontsevich_nd(3) == 12, "N_3 != 12")
    res.expect(kontsevich_nd(4) == 620, "N_4 != 620")
    plane = grassmannian(1, 3)
    res.expect(
        gw_3point(plane, (2,), (2,), (1,), 1) == kontsevich_nd(1),
        "rim-hook path disagrees with the recursion at d=1",
    )
    res.expect(
        gw_spoint(GWQuery(plane, 2, ((2,),) * 5)) == kontsevich_nd(2),
        "5-point conic invariant != N_2",
    )
    return res


def run_selfcheck(level: str = "quick") -> list[SuiteResult]:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown selfcheck level {level!r}")
    spaces = QUICK_SPACES if level == "quick" else QUICK_SPACES + FULL_EXTRA_SPACES
    sampled = () if level == "quick" else FULL_EXTRA_SPACES
    results = [
        check_unit(spaces),
        check_commutativity(spaces),
        check_associativity(QUICK_SPACES, sampled),
        check_grading(spaces),
        check_positivity(spaces),
        check_dual_path(spaces),
        check_classical_layer(spaces),
        check_rim_hook_orders(grassmannian(2, 4), 8),
        check_poincare_pairing(spaces),
        check_gw_symmetry(QUICK_SPACES),
        check_divisor_rule(QUICK_SPACES),
        check_plane_counts(),
    ]
    if level == "full":
        results.append(check_rim_hook_orders(grassmannian(3, 6), 12))
    return results

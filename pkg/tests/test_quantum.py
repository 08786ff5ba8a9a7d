import random
from itertools import combinations_with_replacement

import pytest

from qschub.errors import BoxError, UnsupportedFamilyError
from qschub.lr import classical_structure_constants
from qschub.partitions import partitions_of_weight, weight
from qschub.quantum import (
    QuantumClass,
    ReductionOutcome,
    _hook_sign,
    quantum_pieri,
    quantum_product,
    removable_hooks,
    remove_rim_hook,
    rim_hook_reduce,
)
from qschub.spaces import grassmannian, parse_space

G24 = grassmannian(2, 4)
G25 = grassmannian(2, 5)
G36 = grassmannian(3, 6)
P2 = grassmannian(1, 3)


def test_rim_hook_reduce_examples():
    assert rim_hook_reduce((2, 1), G24) == ReductionOutcome(0, 1, (2, 1))
    assert rim_hook_reduce((3, 1), G24) == ReductionOutcome(1, 1, ())
    assert rim_hook_reduce((4,), G24) == ReductionOutcome(1, -1, ())
    assert rim_hook_reduce((5, 1), G25) is None


def test_rim_hook_reduce_weight_balance():
    for w in range(13):
        for nu in partitions_of_weight(w, 3, 6):
            outcome = rim_hook_reduce(nu, G36)
            if outcome is not None:
                assert outcome.q_power * 6 + weight(outcome.core) == weight(nu)
                assert outcome.sign in (-1, 1)


def test_rim_hook_reduce_validates():
    with pytest.raises(BoxError):
        rim_hook_reduce((1, 1, 1), G24)
    with pytest.raises(UnsupportedFamilyError):
        rim_hook_reduce((1,), parse_space("IG(2,6)"))


def test_removable_hooks_positions():
    # (4,4) has two removable 4-strips: heads at the end of each row
    assert removable_hooks((4, 4), 4) == [(0, 1), (1, 0)]
    assert removable_hooks((2, 1), 4) == []


def test_remove_rim_hook():
    assert remove_rim_hook((4, 4), (0, 1)) == ((3, 1), 2)
    assert remove_rim_hook((4, 4), (1, 0)) == ((4,), 1)
    assert remove_rim_hook((4,), (0, 0)) == ((), 1)


def _all_outcomes(nu, strip_size, m):
    hooks = removable_hooks(nu, strip_size)
    if not hooks:
        return {(0, 1, nu)}
    out = set()
    for cell in hooks:
        smaller, height = remove_rim_hook(nu, cell)
        for d, sign, core in _all_outcomes(smaller, strip_size, m):
            out.add((d + 1, sign * _hook_sign(m, height), core))
    return out


def test_reduction_is_order_independent_small():
    for w in range(13):
        for nu in partitions_of_weight(w, 3, 6):
            outcomes = _all_outcomes(nu, G36.n, G36.m)
            assert len(outcomes) == 1, (nu, outcomes)
            d, sign, core = next(iter(outcomes))
            expected = ReductionOutcome(d, sign, core) if G36.in_box(core) else None
            assert rim_hook_reduce(nu, G36) == expected


GOLDEN_G24 = {
    ((1,), (1,)): {(0, (2,)): 1, (0, (1, 1)): 1},
    ((1,), (2, 1)): {(0, (2, 2)): 1, (1, ()): 1},
    ((1,), (2, 2)): {(1, (1,)): 1},
    ((2,), (1, 1)): {(1, ()): 1},
    ((2,), (2,)): {(0, (2, 2)): 1},
    ((2, 2), (2, 2)): {(2, ()): 1},
}


def test_quantum_product_golden_table():
    for (lam, mu), expected in GOLDEN_G24.items():
        assert quantum_product(lam, mu, G24).terms == expected


def test_quantum_product_p2():
    assert quantum_product((2,), (2,), P2).terms == {(1, (1,)): 1}
    assert quantum_product((2,), (1,), P2).terms == {(1, ()): 1}


def test_quantum_product_validates():
    with pytest.raises(BoxError):
        quantum_product((3,), (1,), G24)
    with pytest.raises(UnsupportedFamilyError):
        quantum_product((1,), (1,), parse_space("OG(2,7)"))


def test_quantum_pieri_examples():
    assert quantum_pieri(1, (2, 2), G24).terms == {(1, (1,)): 1}
    assert quantum_pieri(1, (2, 1), G24).terms == {(0, (2, 2)): 1, (1, ()): 1}
    assert quantum_pieri(1, (1,), grassmannian(1, 2)).terms == {(1, ()): 1}
    assert quantum_pieri(3, (3,), G25).terms == {(0, (3, 3)): 1}


def test_quantum_pieri_validates():
    with pytest.raises(ValueError):
        quantum_pieri(3, (1,), G24)
    with pytest.raises(BoxError):
        quantum_pieri(1, (3,), G24)


@pytest.mark.parametrize("space", [G24, G25, G36, grassmannian(2, 6)])
def test_dual_path_equality(space):
    for p in range(1, space.box_cols + 1):
        for lam in space.basis():
            assert quantum_pieri(p, lam, space) == quantum_product((p,), lam, space)


def test_unit_and_commutativity():
    for space in (G24, G25, P2, grassmannian(1, 4)):
        basis = space.basis()
        for lam in basis:
            assert quantum_product((), lam, space) == QuantumClass.from_partition(space, lam)
        for lam, mu in combinations_with_replacement(basis, 2):
            assert quantum_product(lam, mu, space) == quantum_product(mu, lam, space)


@pytest.mark.parametrize("space", [G24, G25, G36, P2, grassmannian(1, 4)])
def test_positivity_and_grading(space):
    for lam, mu in combinations_with_replacement(space.basis(), 2):
        product = quantum_product(lam, mu, space)
        total = weight(lam) + weight(mu)
        for d, nu, coeff in product.sorted_terms():
            assert coeff > 0
            assert weight(nu) + d * space.n == total
            assert space.in_box(nu)
            assert d <= total // space.n


def test_classical_layer_matches_lr():
    for space in (G24, G25):
        for lam, mu in combinations_with_replacement(space.basis(), 2):
            assert quantum_product(lam, mu, space).q_part(
                0
            ) == classical_structure_constants(space, lam, mu)


def test_associativity_exhaustive_g24():
    basis = G24.basis()
    for a in basis:
        for b in basis:
            for c in basis:
                left = quantum_product(a, b, G24) * QuantumClass.from_partition(G24, c)
                right = QuantumClass.from_partition(G24, a) * quantum_product(b, c, G24)
                assert left == right


def test_associativity_random_g36():
    rng = random.Random(7)
    basis = G36.basis()
    for _ in range(50):
        a, b, c = (rng.choice(basis) for _ in range(3))
        left = quantum_product(a, b, G36) * QuantumClass.from_partition(G36, c)
        right = QuantumClass.from_partition(G36, a) * quantum_product(b, c, G36)
        assert left == right


def test_quantum_class_algebra():
    one = QuantumClass.unit(G24)
    s1 = QuantumClass.from_partition(G24, (1,))
    assert one * s1 == s1
    assert (s1 + s1) == 2 * s1
    assert (s1 * s1).terms == {(0, (2,)): 1, (0, (1, 1)): 1}
    with pytest.raises(ValueError):
        s1 + QuantumClass.unit(P2)


def test_quantum_class_rendering():
    assert str(quantum_product((2,), (1, 1), G24)) == "q*1"
    assert str(quantum_product((1,), (1,), G24)) == "s[1,1] + s[2]"
    assert str(quantum_product((2, 2), (2, 2), G24)) == "q^2*1"
    assert str(QuantumClass(G24, {})) == "0"
    assert str(3 * QuantumClass.unit(G24)) == "3"

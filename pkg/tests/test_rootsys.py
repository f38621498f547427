import random

import pytest

from solvsph import (
    InvalidType,
    NotDominant,
    Root,
    Weight,
    ZeroRoot,
    build_root_system,
)


def test_positive_root_counts():
    cases = [
        ([("A", 2)], 3),
        ([("C", 2)], 4),
        ([("A", 3)], 6),
        ([("B", 2)], 4),
        ([("B", 3)], 9),
        ([("C", 3)], 9),
        ([("D", 3)], 6),
        ([("D", 4)], 12),
        ([("G", 2)], 6),
        ([("F", 4)], 24),
        ([("E", 6)], 36),
        ([("A", 1), ("A", 1)], 2),
        ([("A", 1), ("C", 2)], 5),
    ]
    for spec, count in cases:
        rs = build_root_system(spec)
        assert len(rs.positive_roots) == count, spec


def test_cartan_matrix_shape():
    for spec in [[("A", 3)], [("B", 3)], [("G", 2)], [("A", 1), ("B", 2)]]:
        rs = build_root_system(spec)
        for i in range(rs.n):
            assert rs.cartan[i][i] == 2
            for j in range(rs.n):
                if i != j:
                    assert rs.cartan[i][j] <= 0


def test_roots_are_nonnegative_combinations():
    rs = build_root_system([("C", 3)])
    for r in rs.positive_roots:
        assert all(k >= 0 for k in r.coords)
        assert any(k > 0 for k in r.coords)


def test_ordering_and_simple_roots():
    rs = build_root_system([("A", 3)])
    assert [r.coords for r in rs.simple_roots] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    heights = [r.height for r in rs.positive_roots]
    assert heights == sorted(heights)
    # construction is deterministic
    rs2 = build_root_system([("A", 3)])
    assert [r.coords for r in rs2.positive_roots] == [r.coords for r in rs.positive_roots]


def test_pairing_fundamental_vs_simple():
    for spec in [[("A", 2)], [("B", 2)], [("C", 2)], [("G", 2)], [("F", 4)]]:
        rs = build_root_system(spec)
        for i in range(rs.n):
            for j, a in enumerate(rs.simple_roots):
                assert rs.pairing(rs.fundamental_weight(i), a) == (1 if i == j else 0)


def test_pairing_of_root_with_itself_is_two():
    for spec in [[("A", 3)], [("B", 3)], [("C", 2)], [("G", 2)]]:
        rs = build_root_system(spec)
        for r in rs.positive_roots:
            assert rs.pairing(r, r) == 2


def test_pairing_a2_adjacent():
    rs = build_root_system([("A", 2)])
    a1, a2 = rs.simple_roots
    assert rs.pairing(a1, a2) == -1
    assert rs.pairing(a2, a1) == -1


def test_pairing_linear_in_first_argument():
    rs = build_root_system([("C", 2)])
    rng = random.Random(11)
    mu = rs.positive_roots[3]
    for _ in range(25):
        lam = Weight(tuple(rng.randint(-4, 4) for _ in range(2)))
        nu = Weight(tuple(rng.randint(-4, 4) for _ in range(2)))
        assert rs.pairing(lam + nu, mu) == rs.pairing(lam, mu) + rs.pairing(nu, mu)


def test_pairing_zero_root_rejected():
    rs = build_root_system([("A", 2)])
    with pytest.raises(ZeroRoot):
        rs.pairing(rs.fundamental_weight(0), Root((0, 0)))


def test_support():
    rs = build_root_system([("A", 3)])
    assert rs.support(rs.simple_roots[0]) == {0}
    assert rs.support(Root((1, 1, 0))) == {0, 1}
    rs2 = build_root_system([("A", 2)])
    assert rs2.support(Root((1, 1))) == {0, 1}


def test_dual_weight_values():
    rs = build_root_system([("A", 1)])
    assert rs.dual_weight(Weight((5,))).coords == (5,)
    rs = build_root_system([("A", 3)])
    assert rs.dual_weight(Weight((1, 0, 0))).coords == (0, 0, 1)
    assert rs.dual_weight(Weight((0, 1, 0))).coords == (0, 1, 0)
    rs = build_root_system([("C", 2)])
    assert rs.dual_weight(Weight((1, 0))).coords == (1, 0)
    assert rs.dual_weight(Weight((0, 1))).coords == (0, 1)


def test_dual_weight_is_dominance_preserving_involution():
    rng = random.Random(5)
    for spec in [[("A", 3)], [("D", 4)], [("A", 2), ("A", 1)]]:
        rs = build_root_system(spec)
        for _ in range(30):
            lam = Weight(tuple(rng.randint(0, 4) for _ in range(rs.n)))
            dual = rs.dual_weight(lam)
            assert dual.is_dominant
            assert rs.dual_weight(dual) == lam


def test_dual_weight_requires_dominant():
    rs = build_root_system([("A", 2)])
    with pytest.raises(NotDominant):
        rs.dual_weight(Weight((1, -1)))


def test_reflections_permute_roots():
    for spec in [[("A", 3)], [("B", 3)], [("C", 3)], [("G", 2)], [("D", 4)]]:
        rs = build_root_system(spec)
        for alpha in rs.positive_roots:
            for beta in rs.positive_roots:
                image = tuple(
                    b - rs.pairing(beta, alpha) * a for a, b in zip(alpha.coords, beta.coords)
                )
                assert rs.is_root(image), (spec, alpha, beta)


def test_inadmissible_types_rejected():
    for spec in [[("B", 1)], [("C", 1)], [("D", 2)], [("E", 5)], [("E", 9)], [("F", 3)], [("G", 3)], [("H", 2)], [("A", 0)], []]:
        with pytest.raises(InvalidType):
            build_root_system(spec)

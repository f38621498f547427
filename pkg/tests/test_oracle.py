import random

import pytest

from solvsph import (
    DimensionCap,
    NotDominant,
    NotSpherical,
    UnsupportedType,
    Weight,
    active_roots,
    anchor_weights,
    annihilated_by_nil,
    build_algebra,
    build_irrep,
    build_realization,
    build_root_system,
    build_subgroup,
    bounded_members,
    dominant_weights_up_to,
    enumerate_semigroup,
    generators,
    get_preset,
    open_orbit_check,
    representation_property_check,
    semi_invariant_dim,
    semi_invariant_witness,
    vector_s_weight,
    weyl_dim,
)


def _realization(spec):
    return build_realization(build_algebra(build_root_system(spec)))


def test_supported_types():
    for spec in [[("A", 1)], [("A", 2)], [("A", 3)], [("A", 4)], [("C", 2)]]:
        real = _realization(spec)
        assert real.natural_dim in (2, 3, 4, 5)
    for spec in [[("B", 2)], [("G", 2)], [("A", 5)], [("A", 1), ("A", 1)]]:
        with pytest.raises(UnsupportedType):
            _realization(spec)


def test_weyl_dimension_values():
    rs = build_root_system([("A", 3)])
    assert weyl_dim(rs, Weight((0, 0, 0))) == 1
    assert weyl_dim(rs, Weight((1, 0, 0))) == 4
    assert weyl_dim(rs, Weight((0, 1, 0))) == 6
    assert weyl_dim(rs, Weight((1, 0, 1))) == 15
    rsc = build_root_system([("C", 2)])
    assert weyl_dim(rsc, Weight((1, 0))) == 4
    assert weyl_dim(rsc, Weight((0, 1))) == 5
    assert weyl_dim(rsc, Weight((1, 1))) == 16
    rs2 = build_root_system([("A", 2)])
    assert weyl_dim(rs2, Weight((1, 1))) == 8


def test_fundamental_modules_have_formula_dimensions():
    for spec in [[("A", 3)], [("A", 4)], [("C", 2)]]:
        real = _realization(spec)
        rs = real.algebra.root_system
        for i, mod in enumerate(real.fundamentals):
            assert mod.dim == weyl_dim(rs, rs.fundamental_weight(i))
            assert mod.weights[0] == rs.fundamental_weight(i)


def test_build_irrep_dimensions():
    real = _realization([("A", 1)])
    assert build_irrep(real, Weight((2,))).dim == 3
    real3 = _realization([("A", 3)])
    assert build_irrep(real3, Weight((0, 1, 0))).dim == 6
    realc = _realization([("C", 2)])
    assert build_irrep(realc, Weight((0, 1))).dim == 5
    assert build_irrep(realc, Weight((1, 1))).dim == 16


def test_build_irrep_trivial_module():
    real = _realization([("A", 2)])
    mod = build_irrep(real, Weight((0, 0)))
    assert mod.dim == 1 and mod.weights == [Weight((0, 0))]


def test_build_irrep_rejects_bad_weights():
    real = _realization([("A", 2)])
    with pytest.raises(NotDominant):
        build_irrep(real, Weight((-1, 0)))
    with pytest.raises(DimensionCap):
        build_irrep(real, Weight((1, 1)), dim_cap=7)


def test_representation_property_of_constructed_modules():
    real = _realization([("A", 2)])
    for lam in [(1, 0), (1, 1), (2, 0)]:
        mod = build_irrep(real, Weight(lam))
        assert representation_property_check(real.algebra, mod.actions)
    realc = _realization([("C", 2)])
    mod = build_irrep(realc, Weight((0, 1)))
    assert representation_property_check(realc.algebra, mod.actions)


def test_lowering_then_raising_matches_bracket_on_highest_vector():
    rng = random.Random(31)
    for spec, lam in [([("A", 2)], (1, 1)), ([("C", 2)], (1, 1)), ([("A", 3)], (1, 0, 1))]:
        real = _realization(spec)
        alg = real.algebra
        rs = alg.root_system
        mod = build_irrep(real, Weight(lam))
        v0 = mod.highest_vector()
        for _ in range(12):
            a = rng.choice(rs.positive_roots)
            b = rng.choice(rs.positive_roots)
            lowered = mod.actions[("e", (-b).coords)] @ v0
            lhs = mod.actions[("e", a.coords)] @ lowered
            rhs = mod.act_element(alg.bracket(alg.e(a), alg.e(-b))) @ v0
            assert all(x == y for x, y in zip(lhs, rhs))


def test_semi_invariant_highest_vector_witness():
    sub = build_subgroup(get_preset("borel"))
    real = build_realization(sub.algebra)
    rs = sub.root_system
    lam = Weight((2, 1))
    mod = build_irrep(real, lam)
    rec = semi_invariant_dim(mod, sub, sub.tau.restrict(lam))
    assert rec.dim == 1
    # any other character of the full torus has no invariant vector
    other = tuple(c - 1 for c in sub.tau.restrict(lam))
    assert semi_invariant_dim(mod, sub, other).dim == 0


def test_semi_invariant_weight_spaces_of_torus():
    sub = build_subgroup(get_preset("sl2-torus"))
    real = build_realization(sub.algebra)
    mod = build_irrep(real, Weight((3,)))
    dims = {chi: semi_invariant_dim(mod, sub, chi).dim for chi in [(-3,), (-1,), (1,), (3,), (0,), (2,)]}
    assert dims == {(-3,): 1, (-1,): 1, (1,): 1, (3,): 1, (0,): 0, (2,): 0}


def test_sp4_preset_zero_character_generator_exists():
    sub = build_subgroup(get_preset("sl4-sp4borel"))
    real = build_realization(sub.algebra)
    mod = build_irrep(real, Weight((0, 1, 0)))
    assert semi_invariant_dim(mod, sub, (0, 0)).dim == 1


def test_witness_vectors_on_presets():
    for name in ["sl2-torus", "tu-prime", "sl4-sp4borel"]:
        sub = build_subgroup(get_preset(name))
        real = build_realization(sub.algebra)
        table = active_roots(sub)
        rs = sub.root_system
        lams = anchor_weights(table, rs)
        for j in range(table.m):
            mod = build_irrep(real, lams[j])
            w = semi_invariant_witness(mod, sub, table, j)
            assert any(x != 0 for x in w)
            assert annihilated_by_nil(mod, sub, w)
            expect = tuple(
                a - b for a, b in zip(sub.tau.restrict(lams[j]), table.families[j].phi)
            )
            assert vector_s_weight(mod, sub, w) == expect


def test_witness_with_singleton_family_is_lowered_highest_vector():
    sub = build_subgroup(get_preset("sl2-torus"))
    real = build_realization(sub.algebra)
    table = active_roots(sub)
    mod = build_irrep(real, Weight((1,)))
    w = semi_invariant_witness(mod, sub, table, 0)
    lowered = mod.actions[("e", (-1,))] @ mod.highest_vector()
    ratios = {x / y for x, y in zip(w, lowered) if y != 0}
    assert len(ratios) == 1
    assert vector_s_weight(mod, sub, w) == (-1,)


def test_witness_index_out_of_range():
    sub = build_subgroup(get_preset("sl2-torus"))
    real = build_realization(sub.algebra)
    table = active_roots(sub)
    mod = build_irrep(real, Weight((1,)))
    with pytest.raises(IndexError):
        semi_invariant_witness(mod, sub, table, 5)


def test_enumerate_maximal_unipotent_on_sl2():
    sub = build_subgroup(get_preset("borel", (("A", 1),)))
    real = build_realization(sub.algebra)
    records = enumerate_semigroup(sub, real, 2)
    assert [(r.lam.coords, r.chi, r.dim) for r in records] == [
        ((0,), (0,), 1),
        ((1,), (1,), 1),
        ((2,), (2,), 1),
    ]


def test_enumerate_sl2_torus():
    sub = build_subgroup(get_preset("sl2-torus"))
    real = build_realization(sub.algebra)
    rs = sub.root_system
    records = enumerate_semigroup(sub, real, 3)
    assert all(r.dim == 1 for r in records)
    got = {r.pair(rs) for r in records}
    assert got == {((k,), (l,)) for k in range(4) for l in range(-k, k + 1, 2)}


def test_enumerate_requires_spherical():
    sub = build_subgroup(get_preset("sl2-trivial"))
    real = build_realization(sub.algebra)
    with pytest.raises(NotSpherical):
        enumerate_semigroup(sub, real, 2)


def test_enumeration_matches_free_semigroup_on_sp4_preset():
    sub = build_subgroup(get_preset("sl4-sp4borel"))
    real = build_realization(sub.algebra)
    rs = sub.root_system
    table = active_roots(sub)
    gens = generators(sub, table)
    records = enumerate_semigroup(sub, real, 2)
    assert all(r.dim <= 1 for r in records)
    assert {r.pair(rs) for r in records} == bounded_members(gens, 2)


def test_dominant_weight_enumeration_is_ordered():
    rs = build_root_system([("A", 2)])
    ws = dominant_weights_up_to(rs, 2)
    assert [w.coords for w in ws] == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_open_orbit_on_presets():
    for name, expected in [("borel", True), ("sl2-torus", True), ("sl2-trivial", False)]:
        sub = build_subgroup(get_preset(name))
        real = build_realization(sub.algebra)
        assert open_orbit_check(sub, real, trials=60) is expected
    sub = build_subgroup(get_preset("sl4-sp4borel"))
    real = build_realization(sub.algebra)
    assert open_orbit_check(sub, real, trials=60) is True


def test_open_orbit_agrees_with_criterion_on_fuzzed_rank3():
    from solvsph import check_spherical
    from solvsph.fuzzing import random_mixed_config

    pool = [(("A", 1),), (("A", 2),), (("A", 3),), (("C", 2),)]
    rng = random.Random(4711)
    for k in range(12):
        sub = build_subgroup(random_mixed_config(rng, pool))
        real = build_realization(sub.algebra)
        verdict = check_spherical(sub).spherical
        assert open_orbit_check(sub, real, trials=200, seed=k) == verdict

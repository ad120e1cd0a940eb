from fractions import Fraction

import pytest

from queerw.core import (GeneratorId, antisymmetry_defect, build_preset,
                         bracket_gen, gen_e, gen_f, grading, jacobi_defect,
                         nilpotent_power, odd_annihilator, z_combination)


def test_build_q1_bracket():
    q1 = build_preset("q", 1)
    assert len(q1.generators) == 2
    assert bracket_gen(q1, gen_f(1, 1), gen_f(1, 1)) == {gen_e(1, 1): 2}


def test_build_q2_mixed_brackets():
    q2 = build_preset("q", 2)
    assert bracket_gen(q2, gen_e(1, 2), gen_e(2, 1)) == \
        {gen_e(1, 1): 1, gen_e(2, 2): -1}
    assert bracket_gen(q2, gen_e(1, 2), gen_f(2, 1)) == \
        {gen_f(1, 1): 1, gen_f(2, 2): -1}
    # odd-odd bracket picks up the plus sign on the second delta
    assert bracket_gen(q2, gen_f(1, 2), gen_f(2, 1)) == \
        {gen_e(1, 1): 1, gen_e(2, 2): 1}
    assert bracket_gen(q2, gen_f(1, 2), gen_f(1, 2)) == {}


def test_build_preset_errors():
    with pytest.raises(ValueError):
        build_preset("q")
    with pytest.raises(ValueError):
        build_preset("q", 0)
    with pytest.raises(ValueError):
        build_preset("osp12", 3)
    with pytest.raises(ValueError):
        build_preset("so5")


def test_bracket_rejects_foreign_generator():
    q2 = build_preset("q", 2)
    with pytest.raises(ValueError):
        q2.bracket(gen_e(1, 3), gen_e(1, 1))


def test_grading_values():
    q3 = build_preset("q", 3)
    assert grading(q3, gen_e(1, 2)) == (2, 2, 4, 0)
    assert grading(q3, gen_f(2, 1)) == (-2, -2, 0, 1)
    assert grading(q3, gen_e(1, 1)) == (0, 0, 2, 0)


def test_osp12_bracket_table():
    osp = build_preset("osp12")
    X, Y, H = GeneratorId("X"), GeneratorId("Y"), GeneratorId("H")
    theta, r = GeneratorId("theta"), GeneratorId("r")
    assert osp.bracket(theta, theta) == {Y: -2}
    assert osp.bracket(X, Y) == {H: 1}
    assert osp.bracket(H, X) == {X: 2}
    assert osp.bracket(H, theta) == {theta: -1}
    assert osp.bracket(theta, r) == {H: 1}
    assert osp.bracket(X, r) == {}


def test_osp12_form_values():
    osp = build_preset("osp12")
    X, Y, H = GeneratorId("X"), GeneratorId("Y"), GeneratorId("H")
    theta, r = GeneratorId("theta"), GeneratorId("r")
    assert osp.form_value(theta, r) == 1
    assert osp.form_value(X, Y) == Fraction(-1, 2)
    assert osp.form_value(H, H) == -1
    assert osp.form_value(theta, theta) == 0


@pytest.mark.parametrize("preset,n", [("q", 1), ("q", 2), ("q", 3),
                                      ("osp12", None), ("sl12", None)])
def test_super_jacobi_and_antisymmetry(preset, n):
    spec = build_preset(preset, n)
    for a in spec.generators:
        for b in spec.generators:
            assert not antisymmetry_defect(spec, a, b), (a, b)
            for c in spec.generators:
                assert not jacobi_defect(spec, a, b, c), (a, b, c)


def test_super_jacobi_q4():
    spec = build_preset("q", 4)
    gens = spec.generators
    for a in gens:
        for b in gens:
            assert not antisymmetry_defect(spec, a, b)
            for c in gens:
                assert not jacobi_defect(spec, a, b, c)


@pytest.mark.parametrize("preset,n", [("q", 3), ("osp12", None), ("sl12", None)])
def test_grading_compatibility(preset, n):
    spec = build_preset(preset, n)
    for a in spec.generators:
        for b in spec.generators:
            expected = spec.dynkin_degree(a) + spec.dynkin_degree(b)
            for g in spec.bracket(a, b):
                assert spec.dynkin_degree(g) == expected


def test_annihilator_combinations():
    q3 = build_preset("q", 3)
    assert z_combination(q3) == {gen_e(i, i): 1 for i in (1, 2, 3)}
    assert nilpotent_power(q3, 1) == {gen_e(1, 2): 1, gen_e(2, 3): 1}
    assert odd_annihilator(q3, 0) == \
        {gen_f(1, 1): 1, gen_f(2, 2): -1, gen_f(3, 3): 1}
    assert odd_annihilator(q3, 1) == {gen_f(1, 2): 1, gen_f(2, 3): -1}
    with pytest.raises(ValueError):
        nilpotent_power(q3, 3)

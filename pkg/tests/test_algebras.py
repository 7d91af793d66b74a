"""Graded algebra axioms, centralizers, crossed products, Miyashita actions."""
from fractions import Fraction

import pytest

from gradedmorita.algebras import (
    AlgebraHom,
    GActedAlgebra,
    GradedAlgebra,
    NotCrossedProduct,
    center_of,
    centralizer,
    check_algebra_hom,
    check_graded_algebra,
    check_subalgebra_embedding,
    find_crossed_product,
    full_embedding,
    identity_component,
    miyashita_action,
    subalgebra_from_span,
    trivial_action,
)
from gradedmorita.fixtures import (
    dual_numbers_algebra,
    e1_algebra,
    e2_algebra,
    e2_alternative_crossed,
    e3_algebra,
    group_algebra,
)
from gradedmorita.groups import conjugate, symmetric_group
from gradedmorita.linalg import Matrix, rank, unit_vec, zero_vec
from gradedmorita.overc import algebra_over_c_from_centralizer
from gradedmorita.scalars import QQ

from oracles import brute_force_centralizer_dims


def named(rep, name):
    return next(c for c in rep.checks if c.name == name)


def all_algebras():
    s3, _ = symmetric_group(3)
    return [
        e1_algebra(),
        e2_algebra(),
        e3_algebra(),
        dual_numbers_algebra(),
        group_algebra(s3, QQ),
    ]


def test_fixture_algebras_satisfy_all_axioms():
    for alg in all_algebras():
        rep = check_graded_algebra(alg)
        assert rep.ok(), rep.failures()


def test_grading_violation_is_detected_with_witness():
    # e_s * e_s lands in the wrong degree: the product of two degree-one
    # vectors must be degree zero, but here it is e_s itself.
    alg = e1_algebra()
    bad_struct = [[list(alg.structconst[i][j]) for j in range(2)] for i in range(2)]
    bad_struct[1][1] = [QQ.zero(), QQ.one()]
    bad = GradedAlgebra(alg.group, QQ, list(alg.degrees), bad_struct, list(alg.unit))
    rep = check_graded_algebra(bad)
    check = named(rep, "grading.product")
    assert not check.passed and check.witness == {"pair": (1, 1)}


def test_unit_violation_is_detected():
    alg = e1_algebra()
    bad = GradedAlgebra(alg.group, QQ, list(alg.degrees), alg.structconst,
                        [QQ.zero(), QQ.one()])
    rep = check_graded_algebra(bad)
    assert not rep.ok()
    assert any(c.name.startswith("unit.") and not c.passed for c in rep.checks)


def test_identity_component_shapes():
    for alg, dim in [(e1_algebra(), 1), (e2_algebra(), 2), (e3_algebra(), 3)]:
        emb = identity_component(alg)
        assert emb.sub.dim == dim
        assert all(d == 0 for d in emb.sub.degrees)
        assert check_subalgebra_embedding(emb).ok()
        assert check_graded_algebra(emb.sub).ok()


def test_centralizer_dimensions_match_brute_force():
    expected = {
        "e1": [1, 1],
        "e2": [2, 0],
        "e3": [3, 1],
    }
    for key, alg in [("e1", e1_algebra()), ("e2", e2_algebra()), ("e3", e3_algebra())]:
        cab = centralizer(alg, identity_component(alg))
        assert cab.sub.component_dims() == expected[key]
        assert cab.sub.component_dims() == brute_force_centralizer_dims(alg)
        assert check_subalgebra_embedding(cab).ok()


def test_centralizer_elements_commute_with_identity_component():
    for alg in [e1_algebra(), e2_algebra(), e3_algebra()]:
        idc = identity_component(alg)
        cab = centralizer(alg, idc)
        for j in range(cab.sub.dim):
            c = cab.inclusion.col(j)
            for i in range(idc.sub.dim):
                b = idc.inclusion.col(i)
                assert alg.mul_vec(b, c) == alg.mul_vec(c, b)


def test_identity_part_of_centralizer_is_center_of_identity_component():
    for alg in [e1_algebra(), e2_algebra(), e3_algebra()]:
        idc = identity_component(alg)
        cab = centralizer(alg, idc)
        zb = center_of(idc.sub)
        # both subspaces expressed in ambient coordinates
        cab_part = [cab.inclusion.col(j) for j in range(cab.sub.dim)
                    if cab.sub.degrees[j] == 0]
        zb_part = [idc.embed(zb.inclusion.col(j)) for j in range(zb.sub.dim)]
        assert len(cab_part) == len(zb_part)
        joint = Matrix(alg.field, cab_part + zb_part, alg.dim)
        assert rank(joint) == len(cab_part)


def test_center_of_matrix_algebra_is_scalars():
    z = center_of(e2_algebra())
    assert z.sub.dim == 1
    assert z.inclusion.col(0) == [QQ.one(), QQ.zero(), QQ.zero(), QQ.one()]


def test_crossed_product_units_are_homogeneous_and_invertible():
    s3, _ = symmetric_group(3)
    for alg in [e1_algebra(), e2_algebra(), e3_algebra(), group_algebra(s3, QQ)]:
        cp = find_crossed_product(alg)
        assert cp is not None
        assert cp.unit_for(0) == list(alg.unit)
        for g in alg.group.elements():
            u, v = cp.unit_for(g), cp.inverse_for(g)
            assert alg.support_degrees(u) <= {g}
            assert alg.mul_vec(u, v) == list(alg.unit)
            assert alg.mul_vec(v, u) == list(alg.unit)


def test_e2_default_crossed_unit_is_frozen():
    cp = find_crossed_product(e2_algebra())
    assert cp.units[1] == [Fraction(0), Fraction(1), Fraction(1), Fraction(0)]


def test_dual_numbers_admit_no_crossed_product():
    assert find_crossed_product(dual_numbers_algebra()) is None
    with pytest.raises(NotCrossedProduct):
        algebra_over_c_from_centralizer(dual_numbers_algebra())


def test_miyashita_action_ignores_the_choice_of_units():
    alg = e2_algebra()
    idc = identity_component(alg)
    default = miyashita_action(alg, idc, find_crossed_product(alg))
    other = miyashita_action(alg, idc, e2_alternative_crossed(alg))
    assert default.action == other.action


def test_miyashita_action_is_identity_in_the_identity_degree():
    for alg in [e1_algebra(), e2_algebra(), e3_algebra()]:
        acted = miyashita_action(alg, identity_component(alg), find_crossed_product(alg))
        assert acted.action[0] == Matrix.identity(alg.field, acted.algebra.dim)


def test_group_algebra_action_is_conjugation_of_group_elements():
    # Grading the group algebra by the group itself makes the identity
    # component the scalars, so the centralizer is everything and the
    # conjugation action permutes the group basis.
    s3, _ = symmetric_group(3)
    alg = group_algebra(s3, QQ)
    acted = miyashita_action(alg, identity_component(alg), find_crossed_product(alg))
    assert acted.algebra.dim == alg.dim
    # the centralizer keeps the ambient basis order here
    cab = centralizer(alg, identity_component(alg))
    assert cab.inclusion == Matrix.identity(QQ, alg.dim)
    for g in s3.elements():
        for h in s3.elements():
            assert acted.act(g, unit_vec(QQ, alg.dim, h)) == unit_vec(
                QQ, alg.dim, conjugate(s3, g, h)
            )


def test_subalgebra_from_span_rejects_bad_spans():
    alg = e1_algebra()
    odd = [QQ.zero(), QQ.one()]
    with pytest.raises(ValueError):
        subalgebra_from_span(alg, [odd], [1])  # e_s * e_s escapes the span
    e2 = e2_algebra()
    corner = [QQ.one(), QQ.zero(), QQ.zero(), QQ.zero()]
    with pytest.raises(ValueError):
        subalgebra_from_span(e2, [corner], [0])  # closed but missing the unit
    with pytest.raises(ValueError):
        subalgebra_from_span(alg, [list(alg.unit), list(alg.unit)], [0, 0])


def test_algebra_hom_checks_pass_for_inclusions_and_identity():
    alg = e2_algebra()
    idc = identity_component(alg)
    rep = check_algebra_hom(AlgebraHom(idc.sub, alg, idc.inclusion))
    assert rep.ok(), rep.failures()
    ident = AlgebraHom(alg, alg, Matrix.identity(QQ, alg.dim))
    act = trivial_action(alg)
    rep = check_algebra_hom(ident, act, act)
    assert rep.ok() and any(c.name == "hom.equivariant" for c in rep.checks)


def test_algebra_hom_checks_fail_with_witnesses():
    alg = e1_algebra()
    swap = AlgebraHom(alg, alg, Matrix(QQ, [[QQ.zero(), QQ.one()],
                                            [QQ.one(), QQ.zero()]], 2))
    rep = check_algebra_hom(swap)
    assert not named(rep, "hom.unital").passed

    crush = AlgebraHom(alg, alg, Matrix(QQ, [[QQ.one(), QQ.zero()],
                                             [QQ.zero(), QQ.zero()]], 2))
    rep = check_algebra_hom(crush)
    assert not named(rep, "hom.multiplicative").passed

    ident = AlgebraHom(alg, alg, Matrix.identity(QQ, 2))
    sign = Matrix(QQ, [[QQ.one(), QQ.zero()], [QQ.zero(), QQ.neg(QQ.one())]], 2)
    signed = GActedAlgebra(alg, [Matrix.identity(QQ, 2), sign])
    rep = check_algebra_hom(ident, trivial_action(alg), signed)
    check = named(rep, "hom.equivariant")
    assert not check.passed and check.witness == {"group_element": 1}


def test_degree_breaking_hom_is_detected():
    alg = e1_algebra()
    mix = AlgebraHom(alg, alg, Matrix(QQ, [[QQ.one(), QQ.one()],
                                           [QQ.zero(), QQ.zero()]], 2))
    rep = check_algebra_hom(mix)
    assert not named(rep, "hom.graded").passed


def test_vector_arithmetic_helpers():
    alg = e1_algebra()
    es = [QQ.zero(), QQ.one()]
    assert alg.inv_vec(es) == es
    assert alg.inv_vec(zero_vec(QQ, 2)) is None
    dn = dual_numbers_algebra()
    assert dn.inv_vec([QQ.zero(), QQ.one()]) is None
    two_plus_eps = [QQ.from_int(2), QQ.one()]
    inv = dn.inv_vec(two_plus_eps)
    assert inv is not None and dn.mul_vec(two_plus_eps, inv) == list(dn.unit)
    assert full_embedding(alg).coords(es) == es

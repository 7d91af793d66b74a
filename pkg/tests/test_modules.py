"""Graded modules: Hom spaces, suspensions, stabilizers, tensors, duals."""
import pytest

from gradedmorita.algebras import find_crossed_product, identity_component
from gradedmorita.fixtures import (
    column_module,
    dual_numbers_algebra,
    e1_algebra,
    e2_algebra,
    e3_algebra,
    e3_character_module,
    p3_module,
)
from gradedmorita.linalg import Matrix, invert, unit_vec
from gradedmorita.modules import (
    GradedBimodule,
    check_graded_bimodule,
    check_graded_module,
    direct_sum,
    dual_module,
    end_op_algebra,
    graded_bimodule_iso,
    hom_graded,
    induce,
    is_graded_iso,
    regular_bimodule,
    regular_module,
    restrict_module,
    stabilizer,
    suspend,
    TensorProduct,
    tensor_map_first,
    tensor_map_second,
    tensor_over,
    zero_module,
)
from gradedmorita.algebras import check_graded_algebra
from gradedmorita.scalars import QQ

from oracles import brute_force_stabilizer, oracle_rank, ungraded_hom_dim


def flatten(mat: Matrix):
    return [a for row in mat.rows for a in row]


def test_fixture_modules_satisfy_axioms():
    e1, e2, e3 = e1_algebra(), e2_algebra(), e3_algebra()
    modules = [
        regular_module(e1),
        regular_module(e1, "right"),
        suspend(regular_module(e1), 1),
        regular_module(e2),
        column_module(e2),
        direct_sum(column_module(e2), suspend(column_module(e2), 1)),
        regular_module(e3),
        p3_module(e3),
        regular_module(dual_numbers_algebra()),
    ]
    for m in modules:
        rep = check_graded_module(m)
        assert rep.ok(), (m, rep.failures())
    for alg in [e1, e2, e3]:
        assert check_graded_bimodule(regular_bimodule(alg)).ok()


def test_zero_module_flows_through_everything():
    alg = e1_algebra()
    z = zero_module(alg)
    assert check_graded_module(z).ok()
    assert hom_graded(z, regular_module(alg)).basis == []
    assert hom_graded(regular_module(alg), z).basis == []
    iso = is_graded_iso(z, z)
    assert iso is not None and iso.nrows == 0
    assert stabilizer(z).members == (0, 1)


def test_suspension_relabels_degrees_and_composes():
    alg = e2_algebra()
    m = column_module(alg)
    s = suspend(m, 1)
    assert s.degrees == [1, 0]
    assert s.action == m.action
    assert check_graded_module(s).ok()
    twice = suspend(s, 1)
    assert twice.degrees == m.degrees
    g = alg.group
    for a in g.elements():
        for b in g.elements():
            assert suspend(suspend(m, a), b).degrees == suspend(m, g.mul(a, b)).degrees


def test_suspension_rejects_right_modules():
    with pytest.raises(ValueError):
        suspend(regular_module(e1_algebra(), "right"), 1)


def dade_pairs():
    e1, e2, e3, dn = e1_algebra(), e2_algebra(), e3_algebra(), dual_numbers_algebra()
    a1, a2, a3 = regular_module(e1), regular_module(e2), regular_module(e3)
    col, p3 = column_module(e2), p3_module(e3)
    return [
        (a1, a1),
        (a1, suspend(a1, 1)),
        (direct_sum(a1, suspend(a1, 1)), a1),
        (a2, a2),
        (a2, col),
        (col, col),
        (suspend(col, 1), col),
        (a3, a3),
        (a3, p3),
        (p3, p3),
        (p3, a3),
        (regular_module(dn), regular_module(dn)),
        (regular_module(dn), suspend(regular_module(dn), 1)),
        (regular_module(e2, "right"), regular_module(e2, "right")),
    ]


def test_graded_hom_components_add_up_to_the_ungraded_dimension():
    # The total dimension of all graded-Hom components equals the dimension
    # of the plain Hom space whenever the grading group is finite.
    for m, n in dade_pairs():
        hom = hom_graded(m, n)
        assert len(hom.basis) == ungraded_hom_dim(m, n), (m, n)


def test_hom_basis_elements_are_homogeneous_module_maps():
    for m, n in dade_pairs():
        hom = hom_graded(m, n)
        group = m.algebra.group
        for b, g in zip(hom.basis, hom.degrees):
            for i in range(m.algebra.dim):
                assert n.action[i] @ b == b @ m.action[i]
            for r in range(n.dim):
                for c in range(m.dim):
                    if not m.algebra.field.is_zero(b.rows[r][c]):
                        assert n.degrees[r] == group.mul(m.degrees[c], g)


def test_hom_basis_is_linearly_independent():
    for m, n in dade_pairs():
        hom = hom_graded(m, n)
        if not hom.basis:
            continue
        rows = [flatten(b) for b in hom.basis]
        assert oracle_rank(m.algebra.field, rows) == len(hom.basis)


def test_hom_space_coords_recover_basis_vectors():
    alg = e2_algebra()
    hom = hom_graded(column_module(alg), regular_module(alg))
    for k, b in enumerate(hom.basis):
        coords = hom.coords(b)
        assert coords == unit_vec(alg.field, len(hom.basis), k)


def test_regular_module_matches_its_suspension_over_e1():
    a1 = regular_module(e1_algebra())
    iso = is_graded_iso(a1, suspend(a1, 1))
    assert iso is not None and invert(iso) is not None


def test_column_module_differs_from_its_suspension():
    col = column_module(e2_algebra())
    assert is_graded_iso(col, suspend(col, 1)) is None


def test_iso_search_rejects_mismatched_component_dims_quickly():
    alg = e1_algebra()
    a = regular_module(alg)
    assert is_graded_iso(a, direct_sum(a, suspend(a, 1))) is None


def test_stabilizers_match_brute_force_enumeration():
    e1, e2, e3 = e1_algebra(), e2_algebra(), e3_algebra()
    expected = [
        (regular_module(e1), (0, 1)),
        (regular_module(e2), (0, 1)),
        (column_module(e2), (0,)),
        (regular_module(e3), (0, 1)),
        (p3_module(e3), (0,)),
    ]
    for m, members in expected:
        assert stabilizer(m).members == members
    # exhaustive matrix enumeration is only affordable for a small module
    # over a finite field
    p3 = p3_module(e3)
    assert stabilizer(p3).members == brute_force_stabilizer(p3)


def test_induced_module_shape_and_frozen_character_value():
    alg = e3_algebra()
    p3 = p3_module(alg)
    assert p3.dim == 2 and p3.degrees == [0, 1]
    assert check_graded_module(p3).ok()
    # the first three-cycle acts on the identity-degree generator through
    # the inducing character, which sends it to 2 modulo 7
    assert p3.action[3].col(0) == [2, 0]


def test_induction_validates_its_input():
    alg = e3_algebra()
    emb = identity_component(alg)
    char = e3_character_module(emb)
    shifted = suspend(regular_module(alg), 1)
    with pytest.raises(ValueError):
        induce(emb, shifted)  # not over the subalgebra
    bad_degrees = suspend(induce(emb, char), 1)
    with pytest.raises(ValueError):
        induce(emb, restrict_module(bad_degrees, emb))  # not identity-degree


def test_tensoring_with_the_regular_bimodule_changes_nothing():
    e2, e3 = e2_algebra(), e3_algebra()
    for alg, m in [
        (e2, regular_module(e2)),
        (e2, column_module(e2)),
        (e3, p3_module(e3)),
    ]:
        t = tensor_over(regular_bimodule(alg), m)
        assert isinstance(t, type(m))
        assert check_graded_module(t).ok()
        assert sorted(t.degrees) == sorted(m.degrees)
        assert is_graded_iso(t, m) is not None


def test_tensor_product_balances_the_inner_algebra():
    alg = e2_algebra()
    t = TensorProduct(regular_bimodule(alg), column_module(alg))
    right = regular_module(alg, "right")
    col = column_module(alg)
    for i in range(alg.dim):
        u = unit_vec(QQ, alg.dim, i)
        for j in range(col.dim):
            w = unit_vec(QQ, col.dim, j)
            for k in range(alg.dim):
                s = unit_vec(QQ, alg.dim, k)
                assert t.pure(right.act(s, u), w) == t.pure(u, col.act(s, w))


def test_tensor_maps_are_functorial():
    alg = e2_algebra()
    col = column_module(alg)
    t = TensorProduct(regular_bimodule(alg), col)
    ident_col = Matrix.identity(QQ, col.dim)
    assert tensor_map_second(t, t, ident_col) == Matrix.identity(QQ, t.dim)
    ident_a = Matrix.identity(QQ, alg.dim)
    assert tensor_map_first(t, t, ident_a) == Matrix.identity(QQ, t.dim)
    endos = hom_graded(col, col).basis
    for phi in endos:
        for psi in endos:
            assert tensor_map_second(t, t, phi @ psi) == (
                tensor_map_second(t, t, phi) @ tensor_map_second(t, t, psi)
            )
    # outer and inner induced maps commute
    lift = alg.left_mult(unit_vec(QQ, alg.dim, 3))
    for phi in endos:
        assert (tensor_map_first(t, t, lift) @ tensor_map_second(t, t, phi)) == (
            tensor_map_second(t, t, phi) @ tensor_map_first(t, t, lift)
        )


def test_endomorphism_algebra_multiplies_in_diagram_order():
    alg = e2_algebra()
    p = direct_sum(column_module(alg), suspend(column_module(alg), 1))
    hom = hom_graded(p, p)
    endo, bimod = end_op_algebra(p)
    assert endo.dim == len(hom.basis)
    flat = hom.flat()
    from gradedmorita.linalg import solve

    for i in range(endo.dim):
        for j in range(endo.dim):
            composed = hom.basis[j] @ hom.basis[i]
            assert endo.structconst[i][j] == solve(flat, flatten(composed))


def test_endomorphism_and_dual_structures_satisfy_axioms():
    for alg, p in [
        (e1_algebra(), None),
        (e2_algebra(), None),
        (e3_algebra(), None),
    ]:
        p = p or regular_module(alg)
        endo, bimod = end_op_algebra(p)
        assert check_graded_algebra(endo).ok()
        assert check_graded_bimodule(bimod).ok()
        dual = dual_module(p, (endo, bimod))
        assert check_graded_bimodule(dual).ok()
        assert dual.dim == len(hom_graded(p, regular_module(alg)).basis)
    p3 = p3_module(e3_algebra())
    endo, bimod = end_op_algebra(p3)
    assert endo.dim == 1 and endo.component_dims() == [1, 0]
    assert check_graded_bimodule(dual_module(p3, (endo, bimod))).ok()


def test_bimodule_iso_exists_iff_degrees_can_match():
    alg = e2_algebra()
    m = regular_bimodule(alg)
    again = regular_bimodule(e2_algebra())
    iso = graded_bimodule_iso(m, again)
    assert iso is not None and invert(iso) is not None
    flipped = GradedBimodule(alg, alg, [1, 0, 0, 1], m.left_action, m.right_action)
    assert graded_bimodule_iso(m, flipped) is None
    small = regular_bimodule(e1_algebra())
    with pytest.raises(ValueError):
        graded_bimodule_iso(m, small)


def test_restriction_and_direct_sum_constructions():
    alg = e2_algebra()
    emb = identity_component(alg)
    restricted = restrict_module(column_module(alg), emb)
    assert restricted.algebra is emb.sub
    assert check_graded_module(restricted).ok()
    with pytest.raises(ValueError):
        direct_sum(regular_module(alg), regular_module(e1_algebra()))
    with pytest.raises(ValueError):
        direct_sum(regular_module(alg), regular_module(alg, "right"))

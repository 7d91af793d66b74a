"""Structures over a coefficient algebra: a graded algebra C carrying a
compatible group action, algebras receiving C through a central graded
equivariant map, and bimodules whose two C-structures agree.

The compatibility law for a bimodule reads: for every homogeneous m of
degree g and every coefficient c, m . c = (g.c) . m, where the left side
acts through the receiving map of the right algebra and the right side
through the receiving map of the left algebra twisted by the group action.
Over a crossed product the degree-one instances already force the general
law, and both directions are exposed as checkers here.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .algebras import (
    AlgebraHom,
    CrossedProductData,
    GActedAlgebra,
    GradedAlgebra,
    NotCrossedProduct,
    SubalgebraEmbedding,
    centralizer,
    check_algebra_hom,
    check_graded_algebra,
    degree_action_target,
    find_crossed_product,
    identity_component,
    miyashita_action,
)
from .linalg import Matrix, solve, unit_vec, zero_vec
from .modules import (
    GradedBimodule,
    GradedModule,
    check_graded_bimodule,
    end_op_algebra,
    hom_graded,
    stabilizer,
)
from .reports import ValidationReport

Vector = list


class NotGInvariant(ValueError):
    """The module is not isomorphic to all of its suspensions."""


def check_g_acted_algebra(acted: GActedAlgebra) -> ValidationReport:
    """Graded algebra axioms plus: the action consists of unital algebra
    automorphisms, composes along the group, and conjugates degrees."""
    rep = ValidationReport()
    alg = acted.algebra
    F = alg.field
    G = alg.group
    rep.extend(check_graded_algebra(alg), prefix="algebra.")

    ident = Matrix.identity(F, alg.dim)
    rep.record("action.identity", "the identity element acts as the identity map",
               acted.action[0] == ident)

    unital_witness = None
    for g in G.elements():
        if acted.act(g, alg.unit) != alg.unit:
            unital_witness = g
            break
    rep.record("action.unital", "g.1 = 1", unital_witness is None,
               {} if unital_witness is None else {"group_element": unital_witness})

    mult_witness = None
    for g in G.elements():
        ag = acted.action[g]
        for i in range(alg.dim):
            gi = ag.col(i)
            for j in range(alg.dim):
                lhs = ag.mat_vec(alg.structconst[i][j])
                rhs = alg.mul_vec(gi, ag.col(j))
                if lhs != rhs:
                    mult_witness = (g, i, j)
                    break
            if mult_witness:
                break
        if mult_witness:
            break
    rep.record("action.multiplicative", "g.(x*y) = (g.x)*(g.y)",
               mult_witness is None,
               {} if mult_witness is None else {"witness": mult_witness})

    comp_witness = None
    for g in G.elements():
        for h in G.elements():
            if acted.action[g] @ acted.action[h] != acted.action[G.mul(g, h)]:
                comp_witness = (g, h)
                break
        if comp_witness:
            break
    rep.record("action.composition", "g.(h.x) = (gh).x",
               comp_witness is None,
               {} if comp_witness is None else {"pair": comp_witness})

    deg_witness = None
    for g in G.elements():
        ag = acted.action[g]
        for i in range(alg.dim):
            want = degree_action_target(G, g, alg.degrees[i])
            support = alg.support_degrees(ag.col(i))
            if not support <= {want}:
                deg_witness = (g, i)
                break
        if deg_witness:
            break
    rep.record("action.degrees", "g maps the degree-h component into degree g h g^{-1}",
               deg_witness is None,
               {} if deg_witness is None else {"pair": deg_witness})
    return rep


class AlgebraOverC:
    """A crossed-product graded algebra receiving a coefficient algebra.

    zeta maps the coefficient algebra C into the ambient algebra; its image
    must centralize the identity component and intertwine the C-action with
    conjugation by the chosen homogeneous units.
    """

    def __init__(
        self,
        c: GActedAlgebra,
        algebra: GradedAlgebra,
        crossed: CrossedProductData,
        zeta: AlgebraHom,
    ):
        if zeta.source is not c.algebra or zeta.target is not algebra:
            raise ValueError("zeta must map the coefficient algebra into the receiving algebra")
        if crossed.algebra is not algebra:
            raise ValueError("crossed product data belongs to a different algebra")
        self.c = c
        self.algebra = algebra
        self.crossed = crossed
        self.zeta = zeta

    @cached_property
    def identity_comp(self) -> SubalgebraEmbedding:
        return identity_component(self.algebra)

    @cached_property
    def cab(self) -> SubalgebraEmbedding:
        return centralizer(self.algebra, self.identity_comp)

    @cached_property
    def cab_action(self) -> GActedAlgebra:
        return miyashita_action(self.algebra, self.identity_comp, self.crossed, cab=self.cab)

    def zeta_in_centralizer_coords(self) -> Matrix:
        cols = []
        for j in range(self.c.algebra.dim):
            coords = self.cab.coords(self.zeta.matrix.col(j))
            if coords is None:
                raise ValueError("zeta image is not inside the centralizer")
            cols.append(coords)
        return Matrix.from_cols(self.algebra.field, cols, self.cab.sub.dim)

    def __repr__(self) -> str:
        return f"AlgebraOverC(dim={self.algebra.dim}, coeff_dim={self.c.algebra.dim})"


def check_algebra_over_c(x: AlgebraOverC) -> ValidationReport:
    """Validate the full structure: both algebras, the crossed product
    choice, and zeta (central, graded, unital, multiplicative,
    action-intertwining)."""
    rep = ValidationReport()
    alg = x.algebra
    F = alg.field
    G = alg.group
    rep.extend(check_graded_algebra(alg), prefix="algebra.")
    rep.extend(check_g_acted_algebra(x.c), prefix="coefficients.")

    crossed_ok = None
    for g in G.elements():
        u = x.crossed.unit_for(g)
        if not alg.support_degrees(u) <= {g}:
            crossed_ok = ("degree", g)
            break
        if alg.mul_vec(u, x.crossed.inverse_for(g)) != alg.unit:
            crossed_ok = ("inverse", g)
            break
    rep.record("crossed.units", "chosen units are invertible and homogeneous",
               crossed_ok is None, {} if crossed_ok is None else {"witness": crossed_ok})

    rep.extend(check_algebra_hom(x.zeta), prefix="zeta.")

    central_witness = None
    for j in range(x.c.algebra.dim):
        v = x.zeta.matrix.col(j)
        for t in range(x.identity_comp.sub.dim):
            b = x.identity_comp.inclusion.col(t)
            if alg.mul_vec(v, b) != alg.mul_vec(b, v):
                central_witness = (j, t)
                break
        if central_witness:
            break
    rep.record("zeta.centralizes", "zeta(c) commutes with the identity component",
               central_witness is None,
               {} if central_witness is None else {"pair": central_witness})

    eq_witness = None
    for g in G.elements():
        u = x.crossed.unit_for(g)
        uinv = x.crossed.inverse_for(g)
        for j in range(x.c.algebra.dim):
            lhs = x.zeta.apply(x.c.act(g, unit_vec(F, x.c.algebra.dim, j)))
            rhs = alg.mul_vec(u, alg.mul_vec(x.zeta.matrix.col(j), uinv))
            if lhs != rhs:
                eq_witness = (g, j)
                break
        if eq_witness:
            break
    rep.record("zeta.equivariant", "zeta(g.c) = u_g zeta(c) u_g^{-1}",
               eq_witness is None,
               {} if eq_witness is None else {"pair": eq_witness})
    return rep


def component_projection(module: GradedModule, g: int) -> Matrix:
    F = module.algebra.field
    rows = []
    for r in range(module.dim):
        row = zero_vec(F, module.dim)
        if module.degrees[r] == g:
            row[r] = F.one()
        rows.append(row)
    return Matrix(F, rows, module.dim)


def central_extension_matrix(module: GradedModule, crossed: CrossedProductData, w: Vector) -> Matrix:
    """The module endomorphism extending left multiplication by w on the
    identity-degree component, for w centralizing that component.

    Over a crossed product every degree component is u_g times the identity
    component, so the extension is the sum over degrees of
    act(u_g) act(w) act(u_g^{-1}) projected onto the degree-g part.
    """
    alg = module.algebra
    F = alg.field
    total = Matrix.zeros(F, module.dim, module.dim)
    for g in alg.group.elements():
        ug = module.act_matrix(crossed.unit_for(g))
        uginv = module.act_matrix(crossed.inverse_for(g))
        total = total + (ug @ module.act_matrix(w) @ uginv @ component_projection(module, g))
    return total


def module_coefficient_action(module: GradedModule, x: AlgebraOverC) -> list[Matrix]:
    """The canonical right action of the coefficient algebra on a left module:
    c acts as the extension of left multiplication by zeta(c)."""
    if module.algebra is not x.algebra:
        raise ValueError("module is not over the receiving algebra")
    return [
        central_extension_matrix(module, x.crossed, x.zeta.matrix.col(j))
        for j in range(x.c.algebra.dim)
    ]


def canonical_theta(
    x: AlgebraOverC,
    p: GradedModule,
    endo: tuple[GradedAlgebra, GradedBimodule] | None = None,
) -> AlgebraHom:
    """The map from the centralizer into the opposite endomorphism algebra
    of a fully invariant module, by extending left multiplication.

    Requires the stabilizer of p to be the whole group.
    """
    if p.algebra is not x.algebra:
        raise ValueError("module is not over the receiving algebra")
    stab = stabilizer(p)
    if len(stab.members) != x.algebra.group.order:
        raise NotGInvariant(f"stabilizer is {stab.members}, not the full group")
    if endo is None:
        endo = end_op_algebra(p)
    endo_alg, _ = endo
    hom = hom_graded(p, p)
    flat = hom.flat()
    cols = []
    for j in range(x.cab.sub.dim):
        w = x.cab.inclusion.col(j)
        mat = central_extension_matrix(p, x.crossed, w)
        coords = solve(flat, [a for r in mat.rows for a in r])
        if coords is None:
            raise AssertionError("extension is not an endomorphism")
        cols.append(coords)
    matrix = Matrix.from_cols(x.algebra.field, cols, endo_alg.dim)
    return AlgebraHom(x.cab.sub, endo_alg, matrix)


def check_canonical_theta(x: AlgebraOverC, p: GradedModule) -> ValidationReport:
    """Build theta and verify it is a graded algebra map into the centralizer
    of the identity component, intertwining the two conjugation actions."""
    rep = ValidationReport()
    endo = end_op_algebra(p)
    endo_alg, _ = endo
    theta = canonical_theta(x, p, endo)
    rep.extend(check_algebra_hom(theta), prefix="theta.")

    bprime = identity_component(endo_alg)
    central_witness = None
    for j in range(theta.matrix.ncols):
        v = theta.matrix.col(j)
        for t in range(bprime.sub.dim):
            b = bprime.inclusion.col(t)
            if endo_alg.mul_vec(v, b) != endo_alg.mul_vec(b, v):
                central_witness = (j, t)
                break
        if central_witness:
            break
    rep.record("theta.lands_in_centralizer",
               "theta(c) commutes with the identity component of the endomorphism algebra",
               central_witness is None,
               {} if central_witness is None else {"pair": central_witness})

    crossed_prime = find_crossed_product(endo_alg)
    rep.record("theta.target_crossed",
               "the endomorphism algebra of an invariant module is a crossed product",
               crossed_prime is not None)
    if crossed_prime is not None:
        eq_witness = None
        for g in x.algebra.group.elements():
            u = crossed_prime.unit_for(g)
            uinv = crossed_prime.inverse_for(g)
            source_g = x.cab_action.action[g]
            for j in range(x.cab.sub.dim):
                lhs = theta.apply(source_g.col(j))
                rhs = endo_alg.mul_vec(u, endo_alg.mul_vec(theta.matrix.col(j), uinv))
                if lhs != rhs:
                    eq_witness = (g, j)
                    break
            if eq_witness:
                break
        rep.record("theta.equivariant", "theta(g.c) = g.theta(c)",
                   eq_witness is None,
                   {} if eq_witness is None else {"pair": eq_witness})
    return rep


def algebra_over_c_from_centralizer(
    alg: GradedAlgebra,
    crossed: CrossedProductData | None = None,
) -> AlgebraOverC:
    """The tautological coefficient structure: C is the centralizer of the
    identity component with its conjugation action, received by inclusion."""
    if crossed is None:
        crossed = find_crossed_product(alg)
        if crossed is None:
            raise NotCrossedProduct("algebra admits no crossed product")
    idc = identity_component(alg)
    cab = centralizer(alg, idc)
    acted = miyashita_action(alg, idc, crossed, cab=cab)
    zeta = AlgebraHom(cab.sub, alg, cab.inclusion)
    return AlgebraOverC(acted, alg, crossed, zeta)


def make_algebra_over_c_on_endos(
    x: AlgebraOverC,
    p: GradedModule,
    endo: tuple[GradedAlgebra, GradedBimodule] | None = None,
) -> AlgebraOverC:
    """Push the coefficient structure through theta onto the opposite
    endomorphism algebra of an invariant module."""
    if endo is None:
        endo = end_op_algebra(p)
    endo_alg, _ = endo
    theta = canonical_theta(x, p, endo)
    crossed_prime = find_crossed_product(endo_alg)
    if crossed_prime is None:
        raise NotCrossedProduct("endomorphism algebra has a degree with no invertible element")
    zeta_prime = AlgebraHom(
        x.c.algebra, endo_alg, theta.matrix @ x.zeta_in_centralizer_coords()
    )
    return AlgebraOverC(x.c, endo_alg, crossed_prime, zeta_prime)


@dataclass
class BimoduleOverC:
    """A graded bimodule whose two algebras receive the same coefficients."""

    bimodule: GradedBimodule
    left: AlgebraOverC
    right: AlgebraOverC

    def __post_init__(self):
        if self.bimodule.left_algebra is not self.left.algebra:
            raise ValueError("left structure belongs to a different algebra")
        if self.bimodule.right_algebra is not self.right.algebra:
            raise ValueError("right structure belongs to a different algebra")


def _compatibility_witness(m: BimoduleOverC, only_identity_degree: bool) -> Optional[dict]:
    bim = m.bimodule
    F = bim.left_algebra.field
    cdim = m.left.c.algebra.dim
    for t in range(bim.dim):
        g = bim.degrees[t]
        if only_identity_degree and g != 0:
            continue
        mvec = unit_vec(F, bim.dim, t)
        for j in range(cdim):
            cj = unit_vec(F, cdim, j)
            acted = cj if only_identity_degree else m.left.c.act(g, cj)
            rhs_alg = m.left.zeta.apply(acted)
            lhs_alg = m.right.zeta.apply(cj)
            lhs = lin_comb_apply(bim.right_action, lhs_alg, mvec)
            rhs = lin_comb_apply(bim.left_action, rhs_alg, mvec)
            if lhs != rhs:
                return {"module_basis": t, "degree": g, "coefficient_basis": j}
    return None


def lin_comb_apply(mats: list[Matrix], coeffs: Vector, v: Vector) -> Vector:
    F = mats[0].field if mats else None
    out = None
    for c, m in zip(coeffs, mats):
        if F.is_zero(c):
            continue
        w = [F.mul(c, a) for a in m.mat_vec(v)]
        out = w if out is None else [F.add(a, b) for a, b in zip(out, w)]
    if out is None:
        out = [F.zero()] * len(v)
    return out


def check_bimodule_over_c(m: BimoduleOverC) -> ValidationReport:
    """Bimodule axioms plus the full compatibility law m.c = (g.c).m on every
    homogeneous basis vector."""
    rep = ValidationReport()
    same = m.left.c is m.right.c or (
        m.left.c.algebra is m.right.c.algebra and m.left.c.action == m.right.c.action
    )
    rep.record("overc.same_coefficients", "both sides receive the same coefficient algebra", same)
    rep.extend(check_graded_bimodule(m.bimodule), prefix="bimodule.")
    witness = _compatibility_witness(m, only_identity_degree=False)
    rep.record("overc.compatibility", "m . c = (g.c) . m for homogeneous m of degree g",
               witness is None, witness or {})
    return rep


def condition_three_prime(m: BimoduleOverC) -> ValidationReport:
    """The degree-one fragment of the compatibility law: m . c = c . m for m
    in the identity-degree component."""
    rep = ValidationReport()
    witness = _compatibility_witness(m, only_identity_degree=True)
    rep.record("overc.compatibility_degree_one",
               "m . c = c . m for m in the identity-degree component",
               witness is None, witness or {})
    return rep

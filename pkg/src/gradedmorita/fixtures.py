"""Worked examples used by the test suite and the bundled workspace files.

Three algebras anchor everything: the rational group algebra of the cyclic
group of order two graded by itself, the two-by-two rational matrix algebra
graded by position parity, and the group algebra of the symmetric group on
three letters over F_7 graded by permutation sign.  Alongside them live the
modules, coefficient structures and deliberately broken variants that the
checks exercise.
"""
from __future__ import annotations

from .scalars import QQ, Field, PrimeField
from .groups import FiniteGroup, cyclic_group, perm_parity, symmetric_group
from .linalg import Matrix, solve, unit_vec, zero_vec
from .algebras import (
    AlgebraHom,
    CrossedProductData,
    GActedAlgebra,
    GradedAlgebra,
    SubalgebraEmbedding,
    center_of,
    centralizer,
    find_crossed_product,
    identity_component,
    miyashita_action,
)
from .modules import GradedModule, induce, regular_bimodule
from .overc import AlgebraOverC, BimoduleOverC, algebra_over_c_from_centralizer

Vector = list


def group_algebra(group: FiniteGroup, field: Field) -> GradedAlgebra:
    """The group algebra graded by the group itself: basis g, degree g."""
    dim = group.order
    struct = []
    for i in range(dim):
        row = []
        for j in range(dim):
            row.append(unit_vec(field, dim, group.mul(i, j)))
        struct.append(row)
    return GradedAlgebra(group, field, list(group.elements()), struct, unit_vec(field, dim, 0))


def e1_algebra() -> GradedAlgebra:
    """The rational group algebra of the order-two cyclic group."""
    return group_algebra(cyclic_group(2), QQ)


def e2_algebra() -> GradedAlgebra:
    """Two-by-two rational matrices graded by position parity.

    Basis order: top-left, top-right, bottom-left, bottom-right; diagonal
    units have the identity degree, antidiagonal ones the other degree.
    """
    group = cyclic_group(2)
    cells = [(0, 0), (0, 1), (1, 0), (1, 1)]
    dim = 4
    struct = []
    for a, b in cells:
        row = []
        for c, d in cells:
            if b == c:
                row.append(unit_vec(QQ, dim, cells.index((a, d))))
            else:
                row.append(zero_vec(QQ, dim))
        struct.append(row)
    unit = [QQ.one(), QQ.zero(), QQ.zero(), QQ.one()]
    degrees = [0, 1, 1, 0]
    return GradedAlgebra(group, QQ, degrees, struct, unit)


def e3_algebra() -> GradedAlgebra:
    """The group algebra of the symmetric group on three letters over F_7,
    graded by permutation sign inside the order-two cyclic group."""
    field = PrimeField(7)
    sym, perms = symmetric_group(3)
    grading = cyclic_group(2)
    dim = sym.order
    struct = []
    for i in range(dim):
        row = []
        for j in range(dim):
            row.append(unit_vec(field, dim, sym.mul(i, j)))
        struct.append(row)
    degrees = [perm_parity(p) for p in perms]
    return GradedAlgebra(grading, field, degrees, struct, unit_vec(field, dim, 0))


def dual_numbers_algebra() -> GradedAlgebra:
    """Rational dual numbers with the square-zero generator in degree one.

    The nonidentity component has no invertible element, so this algebra is
    graded but not a crossed product.
    """
    group = cyclic_group(2)
    one = [QQ.one(), QQ.zero()]
    eps = [QQ.zero(), QQ.one()]
    zero = [QQ.zero(), QQ.zero()]
    struct = [[one, eps], [eps, zero]]
    return GradedAlgebra(group, QQ, [0, 1], struct, one)


def column_module(alg: GradedAlgebra) -> GradedModule:
    """The column space of the matrix algebra, degrees (identity, other)."""
    F = alg.field
    cells = [(0, 0), (0, 1), (1, 0), (1, 1)]
    action = []
    for a, b in cells:
        mat = Matrix.zeros(F, 2, 2).tolist()
        mat[a][b] = F.one()
        action.append(Matrix(F, mat, 2))
    return GradedModule(alg, [0, 1], action, "left")


def e3_character_module(emb: SubalgebraEmbedding) -> GradedModule:
    """The one-dimensional module over the even subalgebra of e3 given by a
    nontrivial character of the rotation subgroup: the two three-cycles act
    as 2 and 4 modulo 7."""
    sub = emb.sub
    F = sub.field
    if sub.dim != 3:
        raise ValueError("expected the three-dimensional even subalgebra")
    values = [F.one(), F.from_int(2), F.from_int(4)]
    action = [Matrix(F, [[v]], 1) for v in values]
    return GradedModule(sub, [0], action, "left")


def p3_module(alg: GradedAlgebra) -> GradedModule:
    """The two-dimensional module over e3 induced from the character above."""
    emb = identity_component(alg)
    return induce(emb, e3_character_module(emb))


def e2_alternative_crossed(alg: GradedAlgebra) -> CrossedProductData:
    """A second choice of homogeneous units for e2: the antidiagonal matrix
    with entries 2 and 3."""
    F = alg.field
    u = [F.zero(), F.from_int(2), F.from_int(3), F.zero()]
    uinv = alg.inv_vec(u)
    if uinv is None:
        raise ValueError("alternative unit is not invertible")
    return CrossedProductData(alg, [list(alg.unit), u], [list(alg.unit), uinv])


def algebra_over_c_center_restricted(
    alg: GradedAlgebra,
    crossed: CrossedProductData | None = None,
) -> AlgebraOverC:
    """The smaller coefficient structure: C is the center of the identity
    component, with the restricted conjugation action."""
    if crossed is None:
        crossed = find_crossed_product(alg)
        if crossed is None:
            raise ValueError("algebra admits no crossed product")
    idc = identity_component(alg)
    zc = center_of(idc.sub)
    incl = idc.inclusion @ zc.inclusion
    mats = []
    for g in alg.group.elements():
        u = crossed.unit_for(g)
        uinv = crossed.inverse_for(g)
        cols = []
        for j in range(zc.sub.dim):
            conj = alg.mul_vec(alg.mul_vec(u, incl.col(j)), uinv)
            coords = solve(incl, conj)
            if coords is None:
                raise ValueError("conjugation escaped the center of the identity component")
            cols.append(coords)
        mats.append(Matrix.from_cols(alg.field, cols, zc.sub.dim))
    acted = GActedAlgebra(zc.sub, mats)
    zeta = AlgebraHom(zc.sub, alg, incl)
    return AlgebraOverC(acted, alg, crossed, zeta)


def twist_over_c(x: AlgebraOverC, sigma: Matrix) -> AlgebraOverC:
    """Precompose the receiving map with an automorphism of the coefficients.

    When sigma commutes with the coefficient action this yields another
    valid structure on the same algebra; bimodules built with the original
    structure on one side and the twisted one on the other then violate the
    compatibility law, which the negative fixtures exploit.
    """
    zeta = AlgebraHom(x.c.algebra, x.algebra, x.zeta.matrix @ sigma)
    return AlgebraOverC(x.c, x.algebra, x.crossed, zeta)


def degree_sign_twist(c_alg: GradedAlgebra) -> Matrix:
    """The automorphism negating every nonidentity-degree basis vector."""
    F = c_alg.field
    rows = []
    for i in range(c_alg.dim):
        row = zero_vec(F, c_alg.dim)
        row[i] = F.one() if c_alg.degrees[i] == 0 else F.neg(F.one())
        rows.append(row)
    return Matrix(F, rows, c_alg.dim)


def swap_twist(c_alg: GradedAlgebra) -> Matrix:
    """The automorphism exchanging the two basis idempotents of a
    two-dimensional split commutative coefficient algebra."""
    if c_alg.dim != 2:
        raise ValueError("swap twist needs a two-dimensional coefficient algebra")
    F = c_alg.field
    return Matrix(F, [[F.zero(), F.one()], [F.one(), F.zero()]], 2)


def regular_bimodule_over_c(x: AlgebraOverC) -> BimoduleOverC:
    """The algebra as a bimodule over itself, with both coefficient sides."""
    return BimoduleOverC(regular_bimodule(x.algebra), x, x)

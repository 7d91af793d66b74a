"""Finite-dimensional group-graded algebras with exact structure constants.

An algebra is a based vector space: basis vectors carry degrees in a finite
group, products are structure-constant vectors, and every axiom checker
returns a ValidationReport naming witnesses instead of raising.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .groups import FiniteGroup, conjugate
from .linalg import (
    Matrix,
    generic_invertible_combination,
    kernel_basis,
    lin_comb_matrix,
    rank,
    solve,
    unit_vec,
    vec_is_zero,
    zero_vec,
)
from .reports import ValidationReport
from .scalars import Field, Scalar, same_field

Vector = list


class ActionLeavesCentralizer(ValueError):
    """Conjugation by a homogeneous unit escaped the centralizer span."""


class NotCrossedProduct(ValueError):
    """The algebra has no invertible element in some degree component."""


class GradedAlgebra:
    """A unital algebra with a homogeneous basis over a finite grading group.

    structconst[i][j] is the coordinate vector of (basis i) * (basis j).
    """

    def __init__(
        self,
        group: FiniteGroup,
        field: Field,
        degrees: Sequence[int],
        structconst: Sequence[Sequence[Sequence[Scalar]]],
        unit: Sequence[Scalar],
    ):
        self.group = group
        self.field = field
        self.degrees = list(degrees)
        self.dim = len(self.degrees)
        if len(structconst) != self.dim or any(len(row) != self.dim for row in structconst):
            raise ValueError("structure constants must form a dim x dim table")
        self.structconst = [[list(v) for v in row] for row in structconst]
        for row in self.structconst:
            for v in row:
                if len(v) != self.dim:
                    raise ValueError("structure constant vectors must have length dim")
        if len(unit) != self.dim:
            raise ValueError("unit vector must have length dim")
        self.unit = list(unit)
        if any(not (0 <= d < group.order) for d in self.degrees):
            raise ValueError("degree out of range for the grading group")
        self._left = None
        self._right = None
        self._gens = None

    def left_basis_matrices(self) -> list[Matrix]:
        """L[i] with L[i] @ y = coordinates of (basis i) * y."""
        if self._left is None:
            self._left = [
                Matrix.from_cols(self.field, [self.structconst[i][j] for j in range(self.dim)], self.dim)
                for i in range(self.dim)
            ]
        return self._left

    def right_basis_matrices(self) -> list[Matrix]:
        """R[j] with R[j] @ x = coordinates of x * (basis j)."""
        if self._right is None:
            self._right = [
                Matrix.from_cols(self.field, [self.structconst[i][j] for i in range(self.dim)], self.dim)
                for j in range(self.dim)
            ]
        return self._right

    def left_mult(self, x: Vector) -> Matrix:
        return lin_comb_matrix(self.field, self.left_basis_matrices(), x)

    def right_mult(self, y: Vector) -> Matrix:
        return lin_comb_matrix(self.field, self.right_basis_matrices(), y)

    def mul_vec(self, x: Vector, y: Vector) -> Vector:
        return self.left_mult(x).mat_vec(y)

    def inv_vec(self, x: Vector) -> Optional[Vector]:
        """Two-sided inverse of x, or None (left and right agree in finite dim)."""
        lx = self.left_mult(x)
        if rank(lx) != self.dim:
            return None
        return solve(lx, self.unit)

    def component_indices(self, g: int) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == g]

    def component_dims(self) -> list[int]:
        dims = [0] * self.group.order
        for d in self.degrees:
            dims[d] += 1
        return dims

    def support_degrees(self, v: Vector) -> set[int]:
        return {self.degrees[i] for i, a in enumerate(v) if not self.field.is_zero(a)}

    def homogeneous_component(self, v: Vector, g: int) -> Vector:
        return [a if self.degrees[i] == g else self.field.zero() for i, a in enumerate(v)]

    def generating_indices(self) -> list[int]:
        """A small unital generating set of basis indices (greedy, cached)."""
        if self._gens is not None:
            return self._gens
        gens: list[int] = []
        span = [list(self.unit)]

        def in_span(v: Vector) -> bool:
            m = Matrix(self.field, span + [list(v)], self.dim)
            return rank(m) == len(_independent(self.field, span, self.dim))

        def close() -> None:
            # repeatedly multiply span members until the span stabilizes
            basis = _independent(self.field, span, self.dim)
            changed = True
            while changed:
                changed = False
                for x in list(basis):
                    for y in list(basis):
                        p = self.mul_vec(x, y)
                        m = Matrix(self.field, basis + [p], self.dim)
                        if rank(m) > len(basis):
                            basis.append(p)
                            changed = True
            span[:] = basis

        close()
        for i in range(self.dim):
            e = unit_vec(self.field, self.dim, i)
            if not in_span(e):
                gens.append(i)
                span.append(e)
                close()
        self._gens = gens
        return gens

    def __repr__(self) -> str:
        return f"GradedAlgebra(dim={self.dim}, group={self.group.order}, field={self.field.name})"


def _independent(field: Field, vectors: list[Vector], width: int) -> list[Vector]:
    """Subset of vectors forming a basis of their span (greedy, stable)."""
    out: list[Vector] = []
    for v in vectors:
        m = Matrix(field, out + [v], width)
        if rank(m) > len(out):
            out.append(v)
    return out


def check_graded_algebra(alg: GradedAlgebra) -> ValidationReport:
    """Verify unit, associativity, and grading laws on all basis tuples."""
    rep = ValidationReport()
    F = alg.field
    dim = alg.dim
    basis = [unit_vec(F, dim, i) for i in range(dim)]
    left = alg.left_basis_matrices()
    right = alg.right_basis_matrices()

    lunit = alg.left_mult(alg.unit)
    runit = alg.right_mult(alg.unit)
    unital = True
    for i in range(dim):
        if lunit.col(i) != basis[i]:
            rep.record("unit.left", "1 * x = x", False, {"basis": i})
            unital = False
            break
        if runit.col(i) != basis[i]:
            rep.record("unit.right", "x * 1 = x", False, {"basis": i})
            unital = False
            break
    if unital:
        rep.record("unit.left", "1 * x = x", True)
        rep.record("unit.right", "x * 1 = x", True)

    assoc_witness = None
    for i in range(dim):
        for j in range(dim):
            ij = alg.structconst[i][j]
            for k in range(dim):
                lhs = right[k].mat_vec(ij)
                rhs = left[i].mat_vec(alg.structconst[j][k])
                if lhs != rhs:
                    assoc_witness = (i, j, k)
                    break
            if assoc_witness:
                break
        if assoc_witness:
            break
    rep.record(
        "associativity",
        "(x*y)*z = x*(y*z)",
        assoc_witness is None,
        {} if assoc_witness is None else {"triple": assoc_witness},
    )

    grading_witness = None
    for i in range(dim):
        for j in range(dim):
            want = alg.group.mul(alg.degrees[i], alg.degrees[j])
            support = alg.support_degrees(alg.structconst[i][j])
            if not support <= {want}:
                grading_witness = (i, j)
                break
        if grading_witness:
            break
    rep.record(
        "grading.product",
        "A_g * A_h inside A_{gh}",
        grading_witness is None,
        {} if grading_witness is None else {"pair": grading_witness},
    )

    unit_support = alg.support_degrees(alg.unit)
    rep.record(
        "grading.unit",
        "1 is homogeneous of the identity degree",
        unit_support <= {0},
        {} if unit_support <= {0} else {"degrees": sorted(unit_support)},
    )
    return rep


@dataclass
class SubalgebraEmbedding:
    """A unital graded subalgebra with its inclusion into the ambient algebra.

    inclusion is ambient.dim x sub.dim; column j holds the ambient
    coordinates of the j-th sub basis vector.
    """

    ambient: GradedAlgebra
    sub: GradedAlgebra
    inclusion: Matrix

    def embed(self, v: Vector) -> Vector:
        return self.inclusion.mat_vec(v)

    def coords(self, ambient_vec: Vector) -> Optional[Vector]:
        return solve(self.inclusion, ambient_vec)


def check_subalgebra_embedding(emb: SubalgebraEmbedding) -> ValidationReport:
    rep = ValidationReport()
    amb, sub = emb.ambient, emb.sub
    rep.record("embedding.injective", "inclusion has full column rank",
               rank(emb.inclusion) == sub.dim)
    rep.record("embedding.unital", "inclusion(1_sub) = 1_ambient",
               emb.embed(sub.unit) == amb.unit)
    mult_witness = None
    for i in range(sub.dim):
        ei = emb.inclusion.col(i)
        for j in range(sub.dim):
            lhs = emb.embed(sub.structconst[i][j])
            rhs = amb.mul_vec(ei, emb.inclusion.col(j))
            if lhs != rhs:
                mult_witness = (i, j)
                break
        if mult_witness:
            break
    rep.record("embedding.multiplicative", "inclusion(x*y) = inclusion(x)*inclusion(y)",
               mult_witness is None,
               {} if mult_witness is None else {"pair": mult_witness})
    deg_witness = None
    for j in range(sub.dim):
        support = amb.support_degrees(emb.inclusion.col(j))
        if not support <= {sub.degrees[j]}:
            deg_witness = j
            break
    rep.record("embedding.graded", "inclusion preserves degrees",
               deg_witness is None,
               {} if deg_witness is None else {"basis": deg_witness})
    return rep


def full_embedding(alg: GradedAlgebra) -> SubalgebraEmbedding:
    return SubalgebraEmbedding(alg, alg, Matrix.identity(alg.field, alg.dim))


def subalgebra_from_span(
    ambient: GradedAlgebra, vectors: Sequence[Vector], degrees: Sequence[int]
) -> SubalgebraEmbedding:
    """Wrap independent homogeneous vectors (spanning a unital subalgebra)
    as a GradedAlgebra with its embedding. Products and the unit must stay in
    the span; violations raise ValueError.
    """
    F = ambient.field
    incl = Matrix.from_cols(F, [list(v) for v in vectors], ambient.dim)
    if rank(incl) != len(vectors):
        raise ValueError("span vectors are not independent")
    k = len(vectors)
    struct = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            prod = ambient.mul_vec(list(vectors[i]), list(vectors[j]))
            coords = solve(incl, prod)
            if coords is None:
                raise ValueError(f"span is not multiplicatively closed at pair ({i}, {j})")
            struct[i][j] = coords
    unit_coords = solve(incl, ambient.unit)
    if unit_coords is None:
        raise ValueError("span does not contain the unit")
    sub = GradedAlgebra(ambient.group, F, list(degrees), struct, unit_coords)
    return SubalgebraEmbedding(ambient, sub, incl)


def identity_component(alg: GradedAlgebra) -> SubalgebraEmbedding:
    """The identity-degree subalgebra, with degrees relabeled to the identity."""
    idx = alg.component_indices(0)
    vectors = [unit_vec(alg.field, alg.dim, i) for i in idx]
    return subalgebra_from_span(alg, vectors, [0] * len(idx))


def centralizer(alg: GradedAlgebra, inside: SubalgebraEmbedding) -> SubalgebraEmbedding:
    """Elements commuting with the embedded subalgebra, degree by degree.

    The result is spanned by homogeneous vectors, so it is itself a graded
    subalgebra (it contains the unit and is closed under products).
    """
    F = alg.field
    sub_vecs = [inside.inclusion.col(j) for j in range(inside.sub.dim)]
    commute_ops = [alg.left_mult(w) - alg.right_mult(w) for w in sub_vecs]
    vectors: list[Vector] = []
    degrees: list[int] = []
    for g in alg.group.elements():
        idx = alg.component_indices(g)
        if not idx:
            continue
        # restrict each commutation operator to the degree-g columns
        rows: list[list[Scalar]] = []
        for op in commute_ops:
            for r in op.rows:
                rows.append([r[c] for c in idx])
        system = Matrix(F, rows, len(idx)) if rows else Matrix.zeros(F, 0, len(idx))
        for coeffs in kernel_basis(system):
            v = zero_vec(F, alg.dim)
            for pos, c in zip(idx, coeffs):
                v[pos] = c
            vectors.append(v)
            degrees.append(g)
    return subalgebra_from_span(alg, vectors, degrees)


def center_of(alg: GradedAlgebra) -> SubalgebraEmbedding:
    return centralizer(alg, full_embedding(alg))


@dataclass
class CrossedProductData:
    """A chosen invertible homogeneous element per degree, with inverses."""

    algebra: GradedAlgebra
    units: list[Vector]
    inverses: list[Vector]

    def unit_for(self, g: int) -> Vector:
        return self.units[g]

    def inverse_for(self, g: int) -> Vector:
        return self.inverses[g]


def find_crossed_product(alg: GradedAlgebra) -> Optional[CrossedProductData]:
    """Pick an invertible element in every degree component, or None.

    The identity degree always uses the unit itself; other degrees search the
    span of left-multiplication matrices of the component basis.
    """
    F = alg.field
    units: list[Vector] = []
    inverses: list[Vector] = []
    left = alg.left_basis_matrices()
    for g in alg.group.elements():
        if g == 0:
            units.append(list(alg.unit))
            inverses.append(list(alg.unit))
            continue
        idx = alg.component_indices(g)
        if not idx:
            return None
        got = generic_invertible_combination([left[i] for i in idx])
        if got is None:
            return None
        coeffs, lu = got
        u = zero_vec(F, alg.dim)
        for pos, c in zip(idx, coeffs):
            u[pos] = c
        v = solve(lu, alg.unit)
        assert v is not None and alg.mul_vec(v, u) == alg.unit
        units.append(u)
        inverses.append(v)
    return CrossedProductData(alg, units, inverses)


@dataclass
class GActedAlgebra:
    """A graded algebra together with a group action by linear maps.

    action[g] sends basis coordinates to basis coordinates; the axioms
    (automorphisms, composition, conjugation on degrees) are verified by
    check_g_acted_algebra in the over-coefficient layer.
    """

    algebra: GradedAlgebra
    action: list[Matrix]

    def act(self, g: int, v: Vector) -> Vector:
        return self.action[g].mat_vec(v)


def trivial_action(alg: GradedAlgebra) -> GActedAlgebra:
    ident = Matrix.identity(alg.field, alg.dim)
    return GActedAlgebra(alg, [ident for _ in alg.group.elements()])


def miyashita_action(
    alg: GradedAlgebra,
    inside: SubalgebraEmbedding,
    crossed: CrossedProductData,
    cab: SubalgebraEmbedding | None = None,
) -> GActedAlgebra:
    """Conjugation by the chosen homogeneous units on the centralizer.

    The action is independent of the choice of units: two choices differ by
    an invertible element of the identity component, which centralizes the
    centralizer of that component.
    """
    if cab is None:
        cab = centralizer(alg, inside)
    F = alg.field
    mats: list[Matrix] = []
    for g in alg.group.elements():
        u = crossed.unit_for(g)
        uinv = crossed.inverse_for(g)
        cols = []
        for j in range(cab.sub.dim):
            c = cab.inclusion.col(j)
            conj = alg.mul_vec(alg.mul_vec(u, c), uinv)
            coords = cab.coords(conj)
            if coords is None:
                raise ActionLeavesCentralizer(f"degree {g}, centralizer basis {j}")
            cols.append(coords)
        mats.append(Matrix.from_cols(F, cols, cab.sub.dim))
    return GActedAlgebra(cab.sub, mats)


@dataclass
class AlgebraHom:
    """A linear map between algebras, stored as target-coords x source-coords."""

    source: GradedAlgebra
    target: GradedAlgebra
    matrix: Matrix

    def apply(self, v: Vector) -> Vector:
        return self.matrix.mat_vec(v)


def check_algebra_hom(
    hom: AlgebraHom,
    source_action: GActedAlgebra | None = None,
    target_action: GActedAlgebra | None = None,
) -> ValidationReport:
    """Unital + multiplicative + graded; equivariant when actions are given."""
    rep = ValidationReport()
    src, tgt = hom.source, hom.target
    same_field(src.field, tgt.field)
    F = src.field
    rep.record("hom.unital", "phi(1) = 1", hom.apply(src.unit) == tgt.unit)

    mult_witness = None
    for i in range(src.dim):
        fi = hom.matrix.col(i)
        for j in range(src.dim):
            lhs = hom.apply(src.structconst[i][j])
            rhs = tgt.mul_vec(fi, hom.matrix.col(j))
            if lhs != rhs:
                mult_witness = (i, j)
                break
        if mult_witness:
            break
    rep.record("hom.multiplicative", "phi(x*y) = phi(x)*phi(y)",
               mult_witness is None,
               {} if mult_witness is None else {"pair": mult_witness})

    deg_witness = None
    for j in range(src.dim):
        support = tgt.support_degrees(hom.matrix.col(j))
        if not support <= {src.degrees[j]}:
            deg_witness = j
            break
    rep.record("hom.graded", "phi preserves degrees",
               deg_witness is None,
               {} if deg_witness is None else {"basis": deg_witness})

    if source_action is not None and target_action is not None:
        eq_witness = None
        for g in src.group.elements():
            lhs = hom.matrix @ source_action.action[g]
            rhs = target_action.action[g] @ hom.matrix
            if lhs != rhs:
                eq_witness = g
                break
        rep.record("hom.equivariant", "phi(g.x) = g.phi(x)",
                   eq_witness is None,
                   {} if eq_witness is None else {"group_element": eq_witness})
    return rep


def degree_action_target(group: FiniteGroup, g: int, h: int) -> int:
    """Where the action of g must send the degree-h component: g h g^{-1}."""
    return conjugate(group, g, h)

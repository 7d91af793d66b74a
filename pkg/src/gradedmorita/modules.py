"""Graded modules and bimodules over graded algebras.

Covers the module-level toolkit: suspensions, graded Hom spaces with their
degree decomposition, graded isomorphism search, induction along the
identity component of a crossed product, balanced tensor products with full
quotient bookkeeping, opposite endomorphism algebras, and duals.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .algebras import CrossedProductData, GradedAlgebra, NotCrossedProduct, SubalgebraEmbedding, find_crossed_product
from .groups import Subgroup, stabilizer_closure
from .linalg import (
    Matrix,
    generic_invertible_combination,
    kernel_basis,
    lin_comb_matrix,
    rref,
    solve,
    unit_vec,
    vec_is_zero,
    zero_vec,
)
from .reports import ValidationReport
from .scalars import Scalar

Vector = list


class GradedModule:
    """A one-sided graded module: action[i] is the matrix of basis i acting.

    For side "left" the grading law is A_g M_x inside M_{gx}; for side
    "right" it is M_x A_g inside M_{xg}.
    """

    def __init__(self, algebra: GradedAlgebra, degrees: Sequence[int], action: Sequence[Matrix], side: str = "left"):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if len(action) != algebra.dim:
            raise ValueError("need one action matrix per algebra basis vector")
        self.algebra = algebra
        self.degrees = list(degrees)
        self.dim = len(self.degrees)
        self.action = list(action)
        self.side = side
        for m in self.action:
            if m.nrows != self.dim or m.ncols != self.dim:
                raise ValueError("action matrices must be dim x dim")

    def act_matrix(self, a: Vector) -> Matrix:
        return lin_comb_matrix(self.algebra.field, self.action, a)

    def act(self, a: Vector, v: Vector) -> Vector:
        return self.act_matrix(a).mat_vec(v)

    def component_indices(self, g: int) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == g]

    def component_dims(self) -> list[int]:
        dims = [0] * self.algebra.group.order
        for d in self.degrees:
            dims[d] += 1
        return dims

    def support_degrees(self, v: Vector) -> set[int]:
        return {self.degrees[i] for i, a in enumerate(v) if not self.algebra.field.is_zero(a)}

    def __repr__(self) -> str:
        return f"GradedModule(dim={self.dim}, side={self.side})"


class GradedBimodule:
    """A graded (left_algebra, right_algebra)-bimodule with commuting actions."""

    def __init__(
        self,
        left_algebra: GradedAlgebra,
        right_algebra: GradedAlgebra,
        degrees: Sequence[int],
        left_action: Sequence[Matrix],
        right_action: Sequence[Matrix],
    ):
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.degrees = list(degrees)
        self.dim = len(self.degrees)
        self.left_action = list(left_action)
        self.right_action = list(right_action)
        if len(self.left_action) != left_algebra.dim or len(self.right_action) != right_algebra.dim:
            raise ValueError("need one action matrix per algebra basis vector on each side")

    def as_left_module(self) -> GradedModule:
        return GradedModule(self.left_algebra, self.degrees, self.left_action, "left")

    def as_right_module(self) -> GradedModule:
        return GradedModule(self.right_algebra, self.degrees, self.right_action, "right")

    def component_dims(self) -> list[int]:
        dims = [0] * self.left_algebra.group.order
        for d in self.degrees:
            dims[d] += 1
        return dims

    def __repr__(self) -> str:
        return f"GradedBimodule(dim={self.dim})"


def regular_module(alg: GradedAlgebra, side: str = "left") -> GradedModule:
    mats = alg.left_basis_matrices() if side == "left" else alg.right_basis_matrices()
    return GradedModule(alg, alg.degrees, mats, side)


def regular_bimodule(alg: GradedAlgebra) -> GradedBimodule:
    return GradedBimodule(alg, alg, alg.degrees, alg.left_basis_matrices(), alg.right_basis_matrices())


def zero_module(alg: GradedAlgebra, side: str = "left") -> GradedModule:
    empty = Matrix(alg.field, [], 0)
    return GradedModule(alg, [], [empty] * alg.dim, side)


def direct_sum(m: GradedModule, n: GradedModule) -> GradedModule:
    """Block direct sum of two modules over the same algebra and side."""
    if m.algebra is not n.algebra or m.side != n.side:
        raise ValueError("summands must share algebra and side")
    F = m.algebra.field
    mats = []
    for am, an in zip(m.action, n.action):
        rows = []
        for i in range(m.dim):
            rows.append(list(am.rows[i]) + zero_vec(F, n.dim))
        for i in range(n.dim):
            rows.append(zero_vec(F, m.dim) + list(an.rows[i]))
        mats.append(Matrix(F, rows, m.dim + n.dim))
    return GradedModule(m.algebra, m.degrees + n.degrees, mats, m.side)


def restrict_module(m: GradedModule, emb: SubalgebraEmbedding) -> GradedModule:
    """View a module over the ambient algebra as a module over a subalgebra."""
    if m.algebra is not emb.ambient:
        raise ValueError("module is not over the ambient algebra")
    mats = [m.act_matrix(emb.inclusion.col(j)) for j in range(emb.sub.dim)]
    return GradedModule(emb.sub, m.degrees, mats, m.side)


def restrict_bimodule_right(bim: GradedBimodule, emb: SubalgebraEmbedding) -> GradedBimodule:
    if bim.right_algebra is not emb.ambient:
        raise ValueError("bimodule right algebra is not the ambient algebra")
    right = [
        lin_comb_matrix(bim.right_algebra.field, bim.right_action, emb.inclusion.col(j))
        for j in range(emb.sub.dim)
    ]
    return GradedBimodule(bim.left_algebra, emb.sub, bim.degrees, bim.left_action, right)


def check_graded_module(m: GradedModule) -> ValidationReport:
    """Unit, multiplicativity, and the grading law on all basis pairs."""
    rep = ValidationReport()
    alg = m.algebra
    F = alg.field
    rep.record("module.unit", "1 acts as the identity",
               m.act_matrix(alg.unit) == Matrix.identity(F, m.dim))

    mult_witness = None
    for i in range(alg.dim):
        for j in range(alg.dim):
            prod = m.act_matrix(alg.structconst[i][j])
            comp = (m.action[i] @ m.action[j]) if m.side == "left" else (m.action[j] @ m.action[i])
            if prod != comp:
                mult_witness = (i, j)
                break
        if mult_witness:
            break
    rep.record("module.multiplicative", "action respects products",
               mult_witness is None,
               {} if mult_witness is None else {"pair": mult_witness})

    grade_witness = None
    for i in range(alg.dim):
        da = alg.degrees[i]
        for c in range(m.dim):
            want = (alg.group.mul(da, m.degrees[c]) if m.side == "left"
                    else alg.group.mul(m.degrees[c], da))
            support = m.support_degrees(m.action[i].col(c))
            if not support <= {want}:
                grade_witness = (i, c)
                break
        if grade_witness:
            break
    rep.record("module.graded", "action respects the grading",
               grade_witness is None,
               {} if grade_witness is None else {"algebra_basis": grade_witness[0], "module_basis": grade_witness[1]})
    return rep


def check_graded_bimodule(bim: GradedBimodule) -> ValidationReport:
    rep = ValidationReport()
    rep.extend(check_graded_module(bim.as_left_module()), prefix="left.")
    rep.extend(check_graded_module(bim.as_right_module()), prefix="right.")
    witness = None
    for i, li in enumerate(bim.left_action):
        for j, rj in enumerate(bim.right_action):
            if li @ rj != rj @ li:
                witness = (i, j)
                break
        if witness:
            break
    rep.record("bimodule.commuting", "(a*m)*b = a*(m*b)",
               witness is None, {} if witness is None else {"pair": witness})
    return rep


def suspend(m: GradedModule, g: int) -> GradedModule:
    """Degree relabeling: a basis vector of old degree d gets the h with g*h = d."""
    if m.side != "left":
        raise ValueError("suspension is defined for left modules")
    group = m.algebra.group
    ginv = group.inv(g)
    return GradedModule(m.algebra, [group.mul(ginv, d) for d in m.degrees], m.action, "left")


@dataclass
class HomSpace:
    """A homogeneous basis of module homomorphisms with their degrees."""

    source: GradedModule
    target: GradedModule
    basis: list[Matrix]
    degrees: list[int]

    def flat(self) -> Matrix:
        """Columns are the flattened basis matrices (for coordinate solves)."""
        F = self.source.algebra.field
        cols = [[a for row in b.rows for a in row] for b in self.basis]
        return Matrix.from_cols(F, cols, self.source.dim * self.target.dim)

    def coords(self, m: Matrix) -> Optional[Vector]:
        flat = [a for row in m.rows for a in row]
        return solve(self.flat(), flat)


def hom_graded(m: GradedModule, n: GradedModule) -> HomSpace:
    """Graded Hom space, solved one degree at a time.

    The degree-g component consists of module maps sending M_x into N_{xg};
    the linearity system is restricted to the entries allowed by that degree
    pattern, one kernel per degree.
    """
    if m.algebra is not n.algebra:
        raise ValueError("modules live over different algebras")
    if m.side != n.side:
        raise ValueError("modules have different sides")
    alg = m.algebra
    F = alg.field
    group = alg.group
    gens = alg.generating_indices()
    basis: list[Matrix] = []
    degrees: list[int] = []
    for g in group.elements():
        allowed = [
            (r, c)
            for r in range(n.dim)
            for c in range(m.dim)
            if n.degrees[r] == group.mul(m.degrees[c], g)
        ]
        if not allowed:
            continue
        pos = {rc: k for k, rc in enumerate(allowed)}
        rows: list[list[Scalar]] = []
        for i in gens:
            am = m.action[i]
            an = n.action[i]
            for p in range(n.dim):
                for q in range(m.dim):
                    row = zero_vec(F, len(allowed))
                    touched = False
                    for (r, c), k in pos.items():
                        coeff = F.zero()
                        if r == p:
                            coeff = am.rows[c][q]
                        if q == c:
                            coeff = F.sub(coeff, an.rows[p][r])
                        if not F.is_zero(coeff):
                            row[k] = coeff
                            touched = True
                    if touched:
                        rows.append(row)
        system = Matrix(F, rows, len(allowed)) if rows else Matrix.zeros(F, 0, len(allowed))
        for coeffs in kernel_basis(system):
            mat = Matrix.zeros(F, n.dim, m.dim).tolist()
            for (r, c), k in pos.items():
                mat[r][c] = coeffs[k]
            basis.append(Matrix(F, mat, m.dim))
            degrees.append(g)
    return HomSpace(m, n, basis, degrees)


def is_graded_iso(m: GradedModule, n: GradedModule) -> Optional[Matrix]:
    """A degree-preserving module isomorphism, or None if none exists."""
    if m.component_dims() != n.component_dims():
        return None
    if m.dim == 0:
        return Matrix(m.algebra.field, [], 0)
    hom = hom_graded(m, n)
    degree_one = [b for b, d in zip(hom.basis, hom.degrees) if d == 0]
    if not degree_one:
        return None
    got = generic_invertible_combination(degree_one)
    return got[1] if got else None


def graded_bimodule_iso(m: GradedBimodule, n: GradedBimodule) -> Optional[Matrix]:
    """A degree-preserving bijection commuting with both actions, or None.

    The two bimodules must have algebras of matching dimensions on each
    side; the actions are compared entrywise, so algebras that agree after
    an identification of bases can be used directly.
    """
    if m.left_algebra.dim != n.left_algebra.dim or m.right_algebra.dim != n.right_algebra.dim:
        raise ValueError("bimodules have incompatible algebra dimensions")
    if m.component_dims() != n.component_dims():
        return None
    if m.dim == 0:
        return Matrix(m.left_algebra.field, [], 0)
    F = m.left_algebra.field
    allowed = [
        (r, c)
        for r in range(n.dim)
        for c in range(m.dim)
        if n.degrees[r] == m.degrees[c]
    ]
    if not allowed:
        return None
    pos = {rc: k for k, rc in enumerate(allowed)}
    rows: list[list[Scalar]] = []
    pairs = [(m.left_action[i], n.left_action[i]) for i in m.left_algebra.generating_indices()]
    pairs += [(m.right_action[j], n.right_action[j]) for j in m.right_algebra.generating_indices()]
    for am, an in pairs:
        for p in range(n.dim):
            for q in range(m.dim):
                row = zero_vec(F, len(allowed))
                touched = False
                for (r, c), k in pos.items():
                    coeff = F.zero()
                    if r == p:
                        coeff = am.rows[c][q]
                    if q == c:
                        coeff = F.sub(coeff, an.rows[p][r])
                    if not F.is_zero(coeff):
                        row[k] = coeff
                        touched = True
                if touched:
                    rows.append(row)
    system = Matrix(F, rows, len(allowed)) if rows else Matrix.zeros(F, 0, len(allowed))
    candidates = []
    for coeffs in kernel_basis(system):
        mat = Matrix.zeros(F, n.dim, m.dim).tolist()
        for (r, c), k in pos.items():
            mat[r][c] = coeffs[k]
        candidates.append(Matrix(F, mat, m.dim))
    if not candidates:
        return None
    got = generic_invertible_combination(candidates)
    return got[1] if got else None


def stabilizer(m: GradedModule) -> Subgroup:
    """Inertia subgroup: degrees g with M isomorphic to its g-suspension."""
    members = [g for g in m.algebra.group.elements() if is_graded_iso(m, suspend(m, g)) is not None]
    return stabilizer_closure(m.algebra.group, members)


def induce(
    emb: SubalgebraEmbedding,
    u: GradedModule,
    crossed: CrossedProductData | None = None,
) -> GradedModule:
    """Induction from the identity component along a crossed product.

    The result has basis (g, j) for g in the grading group and j a basis
    vector of u, with degree g; the ambient action routes through the chosen
    homogeneous units.
    """
    alg = emb.ambient
    if u.algebra is not emb.sub:
        raise ValueError("module is not over the embedded subalgebra")
    if u.side != "left":
        raise ValueError("induction expects a left module")
    if any(d != 0 for d in u.degrees):
        raise ValueError("module must be concentrated in the identity degree")
    if crossed is None:
        crossed = find_crossed_product(alg)
        if crossed is None:
            raise NotCrossedProduct("ambient algebra admits no crossed product")
    F = alg.field
    G = alg.group
    order = G.order
    dim = order * u.dim
    degrees = [g for g in G.elements() for _ in range(u.dim)]

    action: list[Matrix] = []
    for i in range(alg.dim):
        ei = unit_vec(F, alg.dim, i)
        cols: list[Vector] = []
        for g in G.elements():
            prod = alg.mul_vec(ei, crossed.unit_for(g))
            per_degree: list[tuple[int, Vector]] = []
            for h in G.elements():
                ph = alg.homogeneous_component(prod, h)
                if vec_is_zero(F, ph):
                    continue
                b_ambient = alg.mul_vec(crossed.inverse_for(h), ph)
                b_coords = emb.coords(b_ambient)
                if b_coords is None:
                    raise ValueError("identity-degree factor escaped the subalgebra")
                per_degree.append((h, b_coords))
            for j in range(u.dim):
                col = zero_vec(F, dim)
                for h, b in per_degree:
                    w = u.act(b, unit_vec(F, u.dim, j))
                    base = h * u.dim
                    for t, a in enumerate(w):
                        col[base + t] = F.add(col[base + t], a)
                cols.append(col)
        action.append(Matrix.from_cols(F, cols, dim))
    return GradedModule(alg, degrees, action, "left")


Factor = Union[GradedModule, GradedBimodule]


class TensorProduct:
    """Balanced tensor product M (x)_S N with its quotient bookkeeping.

    Plain basis pairs are quotiented by the span of
    (m * s) (x) n - m (x) (s * n); the relation generators are homogeneous,
    so the reduction runs one degree block at a time and the quotient basis
    stays homogeneous. `module` is the induced quotient module or bimodule
    (whichever outer actions survive); `project` sends plain coordinates to
    quotient coordinates.
    """

    def __init__(self, mr: Factor, ml: Factor):
        inner_right = mr.algebra if isinstance(mr, GradedModule) else mr.right_algebra
        inner_left = ml.algebra if isinstance(ml, GradedModule) else ml.left_algebra
        if isinstance(mr, GradedModule) and mr.side != "right":
            raise ValueError("first factor must be a right module or bimodule")
        if isinstance(ml, GradedModule) and ml.side != "left":
            raise ValueError("second factor must be a left module or bimodule")
        if inner_right is not inner_left:
            raise ValueError("factors are balanced over different algebras")
        inner = inner_right
        F = inner.field
        G = inner.group
        self.mr, self.ml, self.inner = mr, ml, inner
        self.field, self.group = F, G

        deg_mr = mr.degrees
        deg_ml = ml.degrees
        m_dim, n_dim = len(deg_mr), len(deg_ml)
        self.plain_dim = m_dim * n_dim
        self.pair_of = [(i, j) for i in range(m_dim) for j in range(n_dim)]
        self.pos_of = {p: k for k, p in enumerate(self.pair_of)}
        plain_deg = [G.mul(deg_mr[i], deg_ml[j]) for (i, j) in self.pair_of]

        mr_inner = mr.action if isinstance(mr, GradedModule) else mr.right_action
        ml_inner = ml.action if isinstance(ml, GradedModule) else ml.left_action

        buckets: dict[int, list[int]] = {}
        for k, d in enumerate(plain_deg):
            buckets.setdefault(d, []).append(k)
        # relations for a unital generating set span all of them: the relation
        # is linear in the algebra slot and splits across products
        gens_by_degree: dict[int, list[Vector]] = {d: [] for d in buckets}
        for a in inner.generating_indices():
            da = inner.degrees[a]
            right_mat = mr_inner[a]
            left_mat = ml_inner[a]
            for i in range(m_dim):
                u = right_mat.col(i)
                for j in range(n_dim):
                    w = left_mat.col(j)
                    gen = zero_vec(F, self.plain_dim)
                    nz = False
                    for r, c in enumerate(u):
                        if not F.is_zero(c):
                            gen[self.pos_of[(r, j)]] = F.add(gen[self.pos_of[(r, j)]], c)
                            nz = True
                    for s, c in enumerate(w):
                        if not F.is_zero(c):
                            k = self.pos_of[(i, s)]
                            gen[k] = F.sub(gen[k], c)
                            nz = True
                    if nz:
                        d = G.mul(G.mul(deg_mr[i], da), deg_ml[j])
                        local = [gen[k] for k in buckets[d]]
                        gens_by_degree[d].append(local)

        # reduce each degree block; non-pivot positions survive as the basis
        self._blocks: dict[int, dict] = {}
        quotient_positions: list[int] = []
        quotient_degrees: list[int] = []
        for d in sorted(buckets):
            positions = buckets[d]
            gens = gens_by_degree[d]
            if gens:
                red, pivots = rref(Matrix(F, gens, len(positions)))
                rows = [red.rows[r] for r in range(len(pivots))]
            else:
                rows, pivots = [], []
            nonpivots = [c for c in range(len(positions)) if c not in pivots]
            self._blocks[d] = {
                "positions": positions,
                "rows": rows,
                "pivots": pivots,
                "nonpivots": nonpivots,
                "offset": len(quotient_positions),
            }
            quotient_positions.extend(positions[c] for c in nonpivots)
            quotient_degrees.extend([d] * len(nonpivots))
        self.quotient_positions = quotient_positions
        self.dim = len(quotient_positions)
        self.degrees = quotient_degrees

        outer_left = mr.left_action if isinstance(mr, GradedBimodule) else None
        outer_left_alg = mr.left_algebra if isinstance(mr, GradedBimodule) else None
        outer_right = ml.right_action if isinstance(ml, GradedBimodule) else None
        outer_right_alg = ml.right_algebra if isinstance(ml, GradedBimodule) else None

        left_mats = None
        if outer_left is not None:
            left_mats = []
            for b in range(outer_left_alg.dim):
                ob = outer_left[b]
                cols = []
                for k in range(self.dim):
                    i, j = self.pair_of[self.quotient_positions[k]]
                    v = zero_vec(F, self.plain_dim)
                    for r, c in enumerate(ob.col(i)):
                        if not F.is_zero(c):
                            v[self.pos_of[(r, j)]] = c
                    cols.append(self.project(v))
                left_mats.append(Matrix.from_cols(F, cols, self.dim))
        right_mats = None
        if outer_right is not None:
            right_mats = []
            for b in range(outer_right_alg.dim):
                ob = outer_right[b]
                cols = []
                for k in range(self.dim):
                    i, j = self.pair_of[self.quotient_positions[k]]
                    v = zero_vec(F, self.plain_dim)
                    for s, c in enumerate(ob.col(j)):
                        if not F.is_zero(c):
                            v[self.pos_of[(i, s)]] = c
                    cols.append(self.project(v))
                right_mats.append(Matrix.from_cols(F, cols, self.dim))

        if left_mats is not None and right_mats is not None:
            self.module: Factor = GradedBimodule(outer_left_alg, outer_right_alg, self.degrees, left_mats, right_mats)
        elif left_mats is not None:
            self.module = GradedModule(outer_left_alg, self.degrees, left_mats, "left")
        elif right_mats is not None:
            self.module = GradedModule(outer_right_alg, self.degrees, right_mats, "right")
        else:
            raise ValueError("tensor product carries no residual action")

    def project(self, plain: Vector) -> Vector:
        """Quotient coordinates of a plain-tensor coordinate vector."""
        F = self.field
        out = zero_vec(F, self.dim)
        for d, blk in self._blocks.items():
            positions = blk["positions"]
            local = [plain[p] for p in positions]
            for row, pc in zip(blk["rows"], blk["pivots"]):
                c = local[pc]
                if not F.is_zero(c):
                    local = [F.sub(a, F.mul(c, b)) for a, b in zip(local, row)]
            for t, c in enumerate(blk["nonpivots"]):
                out[blk["offset"] + t] = local[c]
        return out

    def pure(self, u: Vector, w: Vector) -> Vector:
        """Quotient coordinates of the simple tensor u (x) w."""
        F = self.field
        v = zero_vec(F, self.plain_dim)
        for i, a in enumerate(u):
            if F.is_zero(a):
                continue
            for j, b in enumerate(w):
                if not F.is_zero(b):
                    v[self.pos_of[(i, j)]] = F.mul(a, b)
        return self.project(v)

    def kills(self, flat_map: Matrix) -> bool:
        """Whether a plain-level map (columns over plain positions) vanishes
        on every relation generator (well-definedness on the quotient)."""
        F = self.field
        for d, blk in self._blocks.items():
            for row, _ in zip(blk["rows"], blk["pivots"]):
                v = zero_vec(F, self.plain_dim)
                for c, val in zip(blk["positions"], row):
                    v[c] = val
                if not vec_is_zero(F, flat_map.mat_vec(v)):
                    return False
        return True


def tensor_over(mr: Factor, ml: Factor) -> Factor:
    """The balanced tensor product as a module/bimodule (quotient data dropped)."""
    return TensorProduct(mr, ml).module


def tensor_map_second(src: TensorProduct, dst: TensorProduct, phi: Matrix) -> Matrix:
    """The induced map id (x) phi between two tensor quotients."""
    F = src.field
    cols = []
    for k in range(src.dim):
        i, j = src.pair_of[src.quotient_positions[k]]
        v = zero_vec(F, dst.plain_dim)
        for s, c in enumerate(phi.col(j)):
            if not F.is_zero(c):
                v[dst.pos_of[(i, s)]] = c
        cols.append(dst.project(v))
    return Matrix.from_cols(F, cols, dst.dim)


def tensor_map_first(src: TensorProduct, dst: TensorProduct, psi: Matrix) -> Matrix:
    """The induced map psi (x) id between two tensor quotients."""
    F = src.field
    cols = []
    for k in range(src.dim):
        i, j = src.pair_of[src.quotient_positions[k]]
        v = zero_vec(F, dst.plain_dim)
        for r, c in enumerate(psi.col(i)):
            if not F.is_zero(c):
                v[dst.pos_of[(r, j)]] = c
        cols.append(dst.project(v))
    return Matrix.from_cols(F, cols, dst.dim)


def end_op_algebra(p: GradedModule) -> tuple[GradedAlgebra, GradedBimodule]:
    """The opposite endomorphism algebra of a left module, acting on the right.

    Multiplication is composition in diagram order (x * y = "x then y"), so
    p . f = f(p) makes the module a bimodule over (algebra, end_op).
    """
    if p.side != "left":
        raise ValueError("expected a left module")
    hom = hom_graded(p, p)
    F = p.algebra.field
    k = len(hom.basis)
    flat = hom.flat()
    struct = []
    for i in range(k):
        row = []
        for j in range(k):
            comp = hom.basis[j] @ hom.basis[i]
            coords = solve(flat, [a for r in comp.rows for a in r])
            if coords is None:
                raise AssertionError("composition left the endomorphism space")
            row.append(coords)
        struct.append(row)
    ident = Matrix.identity(F, p.dim)
    unit_coords = solve(flat, [a for r in ident.rows for a in r])
    if unit_coords is None:
        raise AssertionError("identity map missing from the endomorphism space")
    endo = GradedAlgebra(p.algebra.group, F, hom.degrees, struct, unit_coords)
    bimod = GradedBimodule(p.algebra, endo, p.degrees, p.action, hom.basis)
    return endo, bimod


def dual_module(
    p: GradedModule,
    endo: tuple[GradedAlgebra, GradedBimodule] | None = None,
) -> GradedBimodule:
    """Hom(P, A) as a bimodule: endomorphisms act on the left via
    precomposition, the algebra on the right via postmultiplication."""
    if p.side != "left":
        raise ValueError("expected a left module")
    alg = p.algebra
    F = alg.field
    if endo is None:
        endo = end_op_algebra(p)
    endo_alg, endo_bimod = endo
    hom = hom_graded(p, regular_module(alg))
    flat = hom.flat()
    kstar = len(hom.basis)

    def coords_of(m: Matrix) -> Vector:
        c = solve(flat, [a for r in m.rows for a in r])
        if c is None:
            raise AssertionError("map left the dual space")
        return c

    left_action = []
    for j in range(endo_alg.dim):
        fj = endo_bimod.right_action[j]
        cols = [coords_of(hom.basis[t] @ fj) for t in range(kstar)]
        left_action.append(Matrix.from_cols(F, cols, kstar))
    right_action = []
    for t in range(alg.dim):
        rt = alg.right_basis_matrices()[t]
        cols = [coords_of(rt @ hom.basis[s]) for s in range(kstar)]
        right_action.append(Matrix.from_cols(F, cols, kstar))
    return GradedBimodule(endo_alg, alg, hom.degrees, left_action, right_action)

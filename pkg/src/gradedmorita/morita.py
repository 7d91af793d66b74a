"""Morita contexts between graded algebras that share a coefficient algebra.

A context bundles two algebras, a bimodule in each direction and a pairing
into each algebra.  The canonical example starts from a graded module P:
take the opposite endomorphism algebra, the dual module, evaluation and
coevaluation.  The verifiers in this module check the context axioms on
basis elements, decide surjectivity by inverting the induced maps on
balanced tensor products, and confirm the equivalence statements that a
surjective context implies, sample module by sample module.
"""

from dataclasses import dataclass
from typing import Optional

from .linalg import Matrix, invert, rank, solve, unit_vec
from .groups import FiniteGroup
from .reports import ValidationReport
from .algebras import AlgebraHom, check_algebra_hom
from .modules import (
    GradedBimodule,
    GradedModule,
    HomSpace,
    TensorProduct,
    dual_module,
    end_op_algebra,
    graded_bimodule_iso,
    hom_graded,
    is_graded_iso,
    regular_bimodule,
    regular_module,
    stabilizer,
    suspend,
    tensor_map_first,
    tensor_map_second,
)
from .overc import (
    AlgebraOverC,
    BimoduleOverC,
    canonical_theta,
    check_bimodule_over_c,
    lin_comb_apply,
    make_algebra_over_c_on_endos,
    module_coefficient_action,
)

Vector = list


class NotSurjective(ValueError):
    """Raised when a Morita context fails the surjectivity test."""


class WitnessNotIso(ValueError):
    """Raised when a claimed composite-functor witness is not invertible."""


class OverCViolation(ValueError):
    """Raised when two functors do not share their coefficient algebra."""


@dataclass
class MoritaContext:
    """Two algebras over the same coefficients, linked by a pair of bimodules.

    left_pairing[i][j] is the element of the left algebra produced by the
    i-th basis vector of m and the j-th basis vector of mprime; the right
    pairing is indexed the other way around and lands in the right algebra.
    """

    left: AlgebraOverC
    right: AlgebraOverC
    m: BimoduleOverC
    mprime: BimoduleOverC
    left_pairing: list[list[Vector]]
    right_pairing: list[list[Vector]]

    def __post_init__(self) -> None:
        if self.m.bimodule.left_algebra is not self.left.algebra:
            raise ValueError("m must be a left module over the left algebra")
        if self.m.bimodule.right_algebra is not self.right.algebra:
            raise ValueError("m must be a right module over the right algebra")
        if self.mprime.bimodule.left_algebra is not self.right.algebra:
            raise ValueError("mprime must be a left module over the right algebra")
        if self.mprime.bimodule.right_algebra is not self.left.algebra:
            raise ValueError("mprime must be a right module over the left algebra")
        mdim = self.m.bimodule.dim
        pdim = self.mprime.bimodule.dim
        if len(self.left_pairing) != mdim or any(len(row) != pdim for row in self.left_pairing):
            raise ValueError("left pairing must be indexed by m then mprime")
        if len(self.right_pairing) != pdim or any(len(row) != mdim for row in self.right_pairing):
            raise ValueError("right pairing must be indexed by mprime then m")


@dataclass
class FunctorData:
    """A tensor functor between graded module categories, given by a bimodule.

    The functor sends a left module X over the source algebra to the
    balanced tensor product of the bimodule with X, a left module over the
    target algebra.
    """

    bimodule: BimoduleOverC

    @property
    def source(self) -> AlgebraOverC:
        return self.bimodule.right

    @property
    def target(self) -> AlgebraOverC:
        return self.bimodule.left

    def apply(self, module: GradedModule) -> TensorProduct:
        return TensorProduct(self.bimodule.bimodule, module)


def canonical_pairing_data(p: GradedModule):
    """Endomorphisms, dual, evaluation and coevaluation for a graded module.

    Returns (endo_algebra, endo_bimodule, dual_bimodule, left_pairing,
    right_pairing).  The left pairing evaluates a functional on a module
    element; the right pairing sends (functional, element) to the
    endomorphism y -> functional(y) * element, written in the basis of the
    opposite endomorphism algebra.
    """
    if p.side != "left":
        raise ValueError("canonical pairings need a left module")
    alg = p.algebra
    F = alg.field
    endo_alg, endo_bimod = end_op_algebra(p)
    dual_bimod = dual_module(p, (endo_alg, endo_bimod))
    functionals = hom_graded(p, regular_module(alg, "left"))
    kstar = len(functionals.basis)
    left_pairing = [
        [functionals.basis[j].col(i) for j in range(kstar)]
        for i in range(p.dim)
    ]
    endo_hom = HomSpace(p, p, endo_bimod.right_action, endo_alg.degrees)
    right_pairing: list[list[Vector]] = []
    for j in range(kstar):
        row = []
        for i in range(p.dim):
            cols = []
            for c in range(p.dim):
                a = functionals.basis[j].col(c)
                cols.append(p.act_matrix(a).col(i))
            coeffs = endo_hom.coords(Matrix.from_cols(F, cols, p.dim))
            if coeffs is None:
                raise AssertionError("coevaluation left the endomorphism algebra")
            row.append(coeffs)
        right_pairing.append(row)
    return endo_alg, endo_bimod, dual_bimod, left_pairing, right_pairing


def build_canonical_context(x: AlgebraOverC, p: GradedModule) -> MoritaContext:
    """The Morita context of a graded module over an algebra over C.

    The module must be over x.algebra and have full stabilizer, so that the
    opposite endomorphism algebra again becomes an algebra over the same
    coefficients.
    """
    if p.algebra is not x.algebra:
        raise ValueError("module is not over the algebra of x")
    endo_alg, endo_bimod, dual_bimod, left_pairing, right_pairing = canonical_pairing_data(p)
    xprime = make_algebra_over_c_on_endos(x, p, (endo_alg, endo_bimod))
    m = BimoduleOverC(endo_bimod, x, xprime)
    mprime = BimoduleOverC(dual_bimod, xprime, x)
    return MoritaContext(x, xprime, m, mprime, left_pairing, right_pairing)


def _pairing_checks(
    rep: ValidationReport,
    prefix: str,
    pairing: list[list[Vector]],
    mr: GradedBimodule,
    ml: GradedBimodule,
    group: FiniteGroup,
) -> None:
    """Record the bilinear-pairing axioms for one half of a context.

    The pairing eats mr (first index) and ml, lands in mr.left_algebra, is
    balanced over the shared inner algebra, a bimodule map for the outer
    algebra, and multiplies degrees.
    """
    outer = mr.left_algebra
    inner = mr.right_algebra
    F = outer.field

    def pair_left(vec: Vector, j: int) -> Vector:
        out = [F.zero()] * outer.dim
        for i, c in enumerate(vec):
            if F.is_zero(c):
                continue
            for t, w in enumerate(pairing[i][j]):
                out[t] = F.add(out[t], F.mul(c, w))
        return out

    def pair_right(i: int, vec: Vector) -> Vector:
        out = [F.zero()] * outer.dim
        for j, c in enumerate(vec):
            if F.is_zero(c):
                continue
            for t, w in enumerate(pairing[i][j]):
                out[t] = F.add(out[t], F.mul(c, w))
        return out

    witness = None
    for i in range(mr.dim):
        for j in range(ml.dim):
            for a in inner.generating_indices():
                lhs = pair_left(mr.right_action[a].col(i), j)
                rhs = pair_right(i, ml.left_action[a].col(j))
                if lhs != rhs:
                    witness = {"mr_basis": i, "ml_basis": j, "inner_basis": a}
                    break
            if witness:
                break
        if witness:
            break
    rep.record(prefix + "balanced", "pairing is balanced over the inner algebra",
               witness is None, witness)

    witness = None
    for i in range(mr.dim):
        for j in range(ml.dim):
            for a in outer.generating_indices():
                lhs = pair_left(mr.left_action[a].col(i), j)
                rhs = outer.left_basis_matrices()[a].mat_vec(pairing[i][j])
                if lhs != rhs:
                    witness = {"mr_basis": i, "ml_basis": j, "outer_basis": a, "side": "left"}
                    break
                lhs = pair_right(i, ml.right_action[a].col(j))
                rhs = outer.right_basis_matrices()[a].mat_vec(pairing[i][j])
                if lhs != rhs:
                    witness = {"mr_basis": i, "ml_basis": j, "outer_basis": a, "side": "right"}
                    break
            if witness:
                break
        if witness:
            break
    rep.record(prefix + "bimodule_map", "pairing commutes with the outer actions",
               witness is None, witness)

    witness = None
    for i in range(mr.dim):
        for j in range(ml.dim):
            want = group.mul(mr.degrees[i], ml.degrees[j])
            supp = outer.support_degrees(pairing[i][j])
            if not supp <= {want}:
                witness = {"mr_basis": i, "ml_basis": j,
                           "expected_degree": want, "support": sorted(supp)}
                break
        if witness:
            break
    rep.record(prefix + "graded", "pairing multiplies degrees",
               witness is None, witness)


def check_context(ctx: MoritaContext) -> ValidationReport:
    """Verify the Morita context axioms on basis elements."""
    rep = ValidationReport()
    group = ctx.left.algebra.group
    F = ctx.left.algebra.field
    mbim = ctx.m.bimodule
    pbim = ctx.mprime.bimodule

    rep.extend(check_bimodule_over_c(ctx.m), prefix="m.")
    rep.extend(check_bimodule_over_c(ctx.mprime), prefix="mprime.")

    _pairing_checks(rep, "f.", ctx.left_pairing, mbim, pbim, group)
    _pairing_checks(rep, "g.", ctx.right_pairing, pbim, mbim, group)

    witness = None
    for i in range(mbim.dim):
        for j in range(pbim.dim):
            for k in range(mbim.dim):
                lhs = lin_comb_apply(mbim.left_action, ctx.left_pairing[i][j],
                                     unit_vec(F, mbim.dim, k))
                rhs = lin_comb_apply(mbim.right_action, ctx.right_pairing[j][k],
                                     unit_vec(F, mbim.dim, i))
                if lhs != rhs:
                    witness = {"m_basis": i, "mprime_basis": j, "m_basis_2": k}
                    break
            if witness:
                break
        if witness:
            break
    rep.record("assoc.m", "f(m, m') n equals m g(m', n)", witness is None, witness)

    witness = None
    for j in range(pbim.dim):
        for i in range(mbim.dim):
            for l in range(pbim.dim):
                lhs = lin_comb_apply(pbim.left_action, ctx.right_pairing[j][i],
                                     unit_vec(F, pbim.dim, l))
                rhs = lin_comb_apply(pbim.right_action, ctx.left_pairing[i][l],
                                     unit_vec(F, pbim.dim, j))
                if lhs != rhs:
                    witness = {"mprime_basis": j, "m_basis": i, "mprime_basis_2": l}
                    break
            if witness:
                break
        if witness:
            break
    rep.record("assoc.mprime", "g(m', m) n' equals m' f(m, n')", witness is None, witness)

    return rep


def _plain_pairing_map(tens: TensorProduct, pairing: list[list[Vector]], target_dim: int) -> Matrix:
    """The pairing as a linear map out of the plain tensor space."""
    cols = []
    for pos in range(tens.plain_dim):
        i, j = tens.pair_of[pos]
        cols.append(pairing[i][j])
    return Matrix.from_cols(tens.field, cols, target_dim)


def pairings_bijective(
    mbim: GradedBimodule,
    pbim: GradedBimodule,
    left_pairing: list[list[Vector]],
    right_pairing: list[list[Vector]],
) -> tuple[bool, bool]:
    """Whether the two pairings induce bijections on balanced tensors.

    Works on raw bimodule data, with no coefficient algebra in sight, so it
    can also judge modules whose endomorphism algebra fails to inherit a
    coefficient structure.
    """
    lalg = mbim.left_algebra
    ralg = mbim.right_algebra

    t_mm = TensorProduct(mbim, pbim.as_left_module())
    plain_f = _plain_pairing_map(t_mm, left_pairing, lalg.dim)
    if not t_mm.kills(plain_f):
        raise ValueError("left pairing does not factor through the tensor product")
    induced_f = Matrix.from_cols(
        lalg.field, [plain_f.col(pos) for pos in t_mm.quotient_positions], lalg.dim)
    f_bij = induced_f.nrows == induced_f.ncols and invert(induced_f) is not None

    t_pm = TensorProduct(pbim, mbim.as_left_module())
    swapped = [[right_pairing[j][i] for i in range(mbim.dim)] for j in range(pbim.dim)]
    plain_g = _plain_pairing_map(t_pm, swapped, ralg.dim)
    if not t_pm.kills(plain_g):
        raise ValueError("right pairing does not factor through the tensor product")
    induced_g = Matrix.from_cols(
        ralg.field, [plain_g.col(pos) for pos in t_pm.quotient_positions], ralg.dim)
    g_bij = induced_g.nrows == induced_g.ncols and invert(induced_g) is not None

    return f_bij, g_bij


def is_surjective_context(ctx: MoritaContext) -> bool:
    """Whether both pairings of the context are onto.

    For unital algebras a Morita pairing is onto exactly when the induced
    map on the balanced tensor product is bijective, which is what gets
    checked here.
    """
    f_bij, g_bij = pairings_bijective(
        ctx.m.bimodule, ctx.mprime.bimodule, ctx.left_pairing, ctx.right_pairing)
    return f_bij and g_bij


def is_progenerator(p: GradedModule) -> bool:
    """Whether a graded module is a finitely generated projective generator.

    Generator: the images of all graded functionals into the algebra span it
    (the trace ideal is everything).  Projective: a dual basis exists, found
    by solving the defining linear system for the module elements.
    """
    if p.side != "left":
        raise ValueError("progenerator test needs a left module")
    alg = p.algebra
    F = alg.field
    functionals = hom_graded(p, regular_module(alg, "left"))
    traces = []
    for f in functionals.basis:
        for i in range(p.dim):
            traces.append(f.col(i))
    if rank(Matrix.from_cols(F, traces, alg.dim)) != alg.dim:
        return False

    k = len(functionals.basis)
    rows = []
    rhs = []
    for c in range(p.dim):
        blocks = [p.act_matrix(functionals.basis[j].col(c)) for j in range(k)]
        for r in range(p.dim):
            row = []
            for j in range(k):
                row.extend(blocks[j].rows[r])
            rows.append(row)
            rhs.append(F.one() if r == c else F.zero())
    system = Matrix(F, rows, k * p.dim)
    return solve(system, rhs) is not None


def default_samples(x: AlgebraOverC, extra: Optional[GradedModule] = None) -> list[GradedModule]:
    """Regular module, its suspensions by every group element, and one extra."""
    reg = regular_module(x.algebra, "left")
    out = [reg]
    for g in range(1, x.algebra.group.order):
        out.append(suspend(reg, g))
    if extra is not None:
        out.append(extra)
    return out


def _counit_checks(
    rep: ValidationReport,
    label: str,
    outer: BimoduleOverC,
    inner: BimoduleOverC,
    pairing: list[list[Vector]],
    sample: GradedModule,
) -> None:
    """The map outer (x) (inner (x) sample) -> sample given by the pairing.

    Sends m (x) (m' (x) s) to pairing(m, m') * s; records well-definedness
    on both tensor quotients, linearity over the sample's algebra, degree
    preservation and bijectivity.
    """
    alg = sample.algebra
    F = alg.field
    t_in = TensorProduct(inner.bimodule, sample)
    t_out = TensorProduct(outer.bimodule, t_in.module)

    witness = None
    for i in range(outer.bimodule.dim):
        cols = []
        for pos in range(t_in.plain_dim):
            j, c = t_in.pair_of[pos]
            cols.append(lin_comb_apply(sample.action, pairing[i][j],
                                       unit_vec(F, sample.dim, c)))
        if not t_in.kills(Matrix.from_cols(F, cols, sample.dim)):
            witness = {"outer_basis": i}
            break
    rep.record(label + ".well_defined_inner",
               "counit vanishes on the inner tensor relations",
               witness is None, witness)
    if witness is not None:
        return

    cols = []
    for pos in range(t_out.plain_dim):
        i, q = t_out.pair_of[pos]
        j, c = t_in.pair_of[t_in.quotient_positions[q]]
        cols.append(lin_comb_apply(sample.action, pairing[i][j],
                                   unit_vec(F, sample.dim, c)))
    plain = Matrix.from_cols(F, cols, sample.dim)
    ok = t_out.kills(plain)
    rep.record(label + ".well_defined_outer",
               "counit vanishes on the outer tensor relations", ok, None)
    if not ok:
        return

    induced = Matrix.from_cols(
        F, [plain.col(pos) for pos in t_out.quotient_positions], sample.dim)
    tz = t_out.module

    witness = None
    for a in alg.generating_indices():
        if induced @ tz.action[a] != sample.action[a] @ induced:
            witness = {"algebra_basis": a}
            break
    rep.record(label + ".linear", "counit commutes with the algebra action",
               witness is None, witness)

    witness = None
    for kpos in range(tz.dim):
        supp = sample.support_degrees(induced.col(kpos))
        if not supp <= {tz.degrees[kpos]}:
            witness = {"tensor_basis": kpos, "expected_degree": tz.degrees[kpos],
                       "support": sorted(supp)}
            break
    rep.record(label + ".graded", "counit preserves degrees", witness is None, witness)

    bij = induced.nrows == induced.ncols and invert(induced) is not None
    rep.record(label + ".bijective", "counit is a bijection", bij,
               None if bij else {"tensor_dim": tz.dim, "sample_dim": sample.dim})


def _suspension_checks(
    rep: ValidationReport,
    label: str,
    functor: FunctorData,
    sample: GradedModule,
) -> None:
    """Tensoring commutes with suspension, group element by group element."""
    group = functor.source.algebra.group
    base = functor.apply(sample).module
    for g in group.elements():
        shifted = functor.apply(suspend(sample, g)).module
        iso = is_graded_iso(shifted, suspend(base, g))
        rep.record(f"{label}.suspension.g{g}",
                   "tensor functor commutes with suspension",
                   iso is not None, None if iso is not None else {"group_element": g})


def _hom_transport_checks(
    rep: ValidationReport,
    label: str,
    functor: FunctorData,
    src: GradedModule,
    dst: GradedModule,
) -> None:
    """The induced map on graded homs respects degree and both C-actions."""
    group = functor.source.algebra.group
    cdim = functor.source.c.algebra.dim
    homs = hom_graded(src, dst)
    t_src = functor.apply(src)
    t_dst = functor.apply(dst)
    c_src = module_coefficient_action(src, functor.source)
    c_dst = module_coefficient_action(dst, functor.source)
    tc_src = module_coefficient_action(t_src.module, functor.target)
    tc_dst = module_coefficient_action(t_dst.module, functor.target)

    deg_witness = None
    coeff_witness = None
    for idx, phi in enumerate(homs.basis):
        d = homs.degrees[idx]
        tphi = tensor_map_second(t_src, t_dst, phi)
        if deg_witness is None:
            for kpos in range(t_src.module.dim):
                supp = t_dst.module.support_degrees(tphi.col(kpos))
                want = group.mul(t_src.module.degrees[kpos], d)
                if not supp <= {want}:
                    deg_witness = {"hom_basis": idx, "tensor_basis": kpos,
                                   "expected_degree": want, "support": sorted(supp)}
                    break
        if coeff_witness is None:
            for r in range(cdim):
                for s in range(cdim):
                    twisted = c_dst[s] @ phi @ c_src[r]
                    lhs = tensor_map_second(t_src, t_dst, twisted)
                    rhs = tc_dst[s] @ tphi @ tc_src[r]
                    if lhs != rhs:
                        coeff_witness = {"hom_basis": idx, "c_basis_left": r,
                                         "c_basis_right": s}
                        break
                if coeff_witness:
                    break
        if deg_witness is not None and coeff_witness is not None:
            break
    rep.record(label + ".hom_degree", "transported hom keeps its degree",
               deg_witness is None, deg_witness)
    rep.record(label + ".hom_coefficients",
               "hom transport is a bimodule map over the coefficients",
               coeff_witness is None, coeff_witness)


def verify_morita_i(ctx: MoritaContext, samples: Optional[list[GradedModule]] = None) -> ValidationReport:
    """The equivalence statements that follow from a surjective context.

    Raises NotSurjective when either pairing fails to be onto.  Otherwise
    checks, sample module by sample module: the counit of each adjunction is
    a graded isomorphism, the tensor functors commute with suspension, and
    the induced maps on graded homs are bimodule maps over the coefficient
    algebra.
    """
    if not is_surjective_context(ctx):
        raise NotSurjective("both pairings of the context must be onto")
    rep = ValidationReport()
    qf = FunctorData(ctx.mprime)
    qg = FunctorData(ctx.m)
    if samples is None:
        samples = default_samples(ctx.left, ctx.m.bimodule.as_left_module())
    right_samples = default_samples(ctx.right, ctx.mprime.bimodule.as_left_module())

    for n, sample in enumerate(samples):
        _counit_checks(rep, f"counit.left.s{n}", ctx.m, ctx.mprime,
                       ctx.left_pairing, sample)
        _suspension_checks(rep, f"functor.left.s{n}", qf, sample)
    for n, sample in enumerate(right_samples):
        _counit_checks(rep, f"counit.right.s{n}", ctx.mprime, ctx.m,
                       ctx.right_pairing, sample)
        _suspension_checks(rep, f"functor.right.s{n}", qg, sample)

    for a, src in enumerate(samples):
        for b, dst in enumerate(samples):
            _hom_transport_checks(rep, f"hom.left.s{a}to{b}", qf, src, dst)
    return rep


def check_same_stabilizer(functor: FunctorData, p: GradedModule) -> ValidationReport:
    """A tensor equivalence preserves the stabilizer of a module."""
    rep = ValidationReport()
    before = stabilizer(p)
    after = stabilizer(functor.apply(p).module)
    rep.record("stabilizer.preserved",
               "module and its image have the same stabilizer",
               before.members == after.members,
               None if before.members == after.members
               else {"before": list(before.members), "after": list(after.members)})
    return rep


def check_context_uniqueness(ctx: MoritaContext) -> ValidationReport:
    """A surjective context determines its right half up to isomorphism.

    The right algebra must match the opposite endomorphism algebra of m
    (compared under the canonical identification given by the deterministic
    hom basis) and mprime must be isomorphic to the dual of m as a graded
    bimodule (found by an actual search).
    """
    rep = ValidationReport()
    endo_alg, endo_bimod = end_op_algebra(ctx.m.bimodule.as_left_module())
    same = (endo_alg.degrees == ctx.right.algebra.degrees
            and endo_alg.unit == ctx.right.algebra.unit
            and endo_alg.structconst == ctx.right.algebra.structconst)
    rep.record("uniqueness.endo",
               "right algebra agrees with the opposite endomorphism algebra of m",
               same, None if same else {"endo_dim": endo_alg.dim,
                                        "right_dim": ctx.right.algebra.dim})
    dual = dual_module(ctx.m.bimodule.as_left_module(), (endo_alg, endo_bimod))
    iso = None
    if dual.left_algebra.dim == ctx.mprime.bimodule.left_algebra.dim:
        iso = graded_bimodule_iso(dual, ctx.mprime.bimodule)
    rep.record("uniqueness.dual",
               "mprime is isomorphic to the dual of m as a graded bimodule",
               iso is not None, None)
    return rep


def functors_from_context(ctx: MoritaContext):
    """The two tensor functors of a context and the composite-to-identity isos.

    Returns (qf, qg, iso_fg, iso_gf): qf sends left modules over the left
    algebra to the right algebra and qg comes back.  iso_fg is the matrix of
    the induced map mprime tensor m -> right algebra on the balanced tensor
    basis (the composite qf then qg collapses to the identity); iso_gf
    likewise lands in the left algebra.
    """
    qf = FunctorData(ctx.mprime)
    qg = FunctorData(ctx.m)

    t_pm = TensorProduct(ctx.mprime.bimodule, ctx.m.bimodule)
    swapped = [[ctx.right_pairing[j][i] for i in range(ctx.m.bimodule.dim)]
               for j in range(ctx.mprime.bimodule.dim)]
    plain_g = _plain_pairing_map(t_pm, swapped, ctx.right.algebra.dim)
    iso_fg = Matrix.from_cols(ctx.right.algebra.field,
                              [plain_g.col(pos) for pos in t_pm.quotient_positions],
                              ctx.right.algebra.dim)

    t_mp = TensorProduct(ctx.m.bimodule, ctx.mprime.bimodule)
    plain_f = _plain_pairing_map(t_mp, ctx.left_pairing, ctx.left.algebra.dim)
    iso_gf = Matrix.from_cols(ctx.left.algebra.field,
                              [plain_f.col(pos) for pos in t_mp.quotient_positions],
                              ctx.left.algebra.dim)
    return qf, qg, iso_fg, iso_gf


def _composite_iso_checks(
    rep: ValidationReport,
    label: str,
    outer: BimoduleOverC,
    inner: BimoduleOverC,
    iso: Matrix,
) -> None:
    """iso identifies outer tensor inner with the regular bimodule."""
    alg = outer.left.algebra
    tens = TensorProduct(outer.bimodule, inner.bimodule)
    tb = tens.module

    if iso.nrows != alg.dim or iso.ncols != tb.dim or iso.nrows != iso.ncols \
            or invert(iso) is None:
        raise WitnessNotIso(
            f"composite witness must be an invertible {alg.dim} x {tb.dim} matrix")

    witness = None
    for kpos in range(tb.dim):
        supp = alg.support_degrees(iso.col(kpos))
        if not supp <= {tb.degrees[kpos]}:
            witness = {"tensor_basis": kpos, "expected_degree": tb.degrees[kpos],
                       "support": sorted(supp)}
            break
    rep.record(label + ".graded", "composite witness preserves degrees",
               witness is None, witness)

    witness = None
    for a in alg.generating_indices():
        if iso @ tb.left_action[a] != alg.left_basis_matrices()[a] @ iso:
            witness = {"algebra_basis": a, "side": "left"}
            break
        if iso @ tb.right_action[a] != alg.right_basis_matrices()[a] @ iso:
            witness = {"algebra_basis": a, "side": "right"}
            break
    rep.record(label + ".bimodule_map", "composite witness is a bimodule map",
               witness is None, witness)


def verify_morita_ii(
    qf: FunctorData,
    qg: FunctorData,
    iso_fg: Matrix,
    iso_gf: Matrix,
    samples: Optional[list[GradedModule]] = None,
) -> ValidationReport:
    """An equivalence of graded module categories comes from a bimodule.

    Given inverse tensor functors between modules over two algebras over
    the same coefficients (witnessed by explicit isomorphisms of the
    composites with the regular bimodules), checks that the image of the
    regular module is a bimodule over the coefficients, that right
    multiplication gives a graded isomorphism onto its opposite
    endomorphism algebra compatible with the coefficient embeddings, and
    that the functor is naturally isomorphic to tensoring with that image,
    on the given samples.
    """
    rep = ValidationReport()
    a_over = qf.source
    aprime_over = qf.target
    if qg.source.algebra is not aprime_over.algebra or qg.target.algebra is not a_over.algebra:
        raise ValueError("qg must invert the endpoints of qf")
    if qf.source.c.algebra is not qf.target.c.algebra \
            or qg.source.c.algebra is not qf.source.c.algebra:
        raise OverCViolation("both functors must be over the same coefficient algebra")
    alg = a_over.algebra
    F = alg.field

    _composite_iso_checks(rep, "composite.fg", qf.bimodule, qg.bimodule, iso_fg)
    _composite_iso_checks(rep, "composite.gf", qg.bimodule, qf.bimodule, iso_gf)

    if samples is None:
        samples = default_samples(a_over, qg.bimodule.bimodule.as_left_module())

    for a, src in enumerate(samples):
        for b, dst in enumerate(samples):
            _hom_transport_checks(rep, f"hypothesis.s{a}to{b}", qf, src, dst)

    reg = regular_bimodule(alg)
    t_p = TensorProduct(qf.bimodule.bimodule, reg)
    p_bim = t_p.module
    p_over = BimoduleOverC(p_bim, aprime_over, a_over)
    rep.extend(check_bimodule_over_c(p_over), prefix="image.")

    p_left = p_bim.as_left_module()
    endo_alg, endo_bimod = end_op_algebra(p_left)
    endo_hom = HomSpace(p_left, p_left, endo_bimod.right_action, endo_alg.degrees)
    alpha_cols = []
    alpha_ok = True
    for t in range(alg.dim):
        coeffs = endo_hom.coords(p_bim.right_action[t])
        if coeffs is None:
            alpha_ok = False
            break
        alpha_cols.append(coeffs)
    rep.record("alpha.lands_in_endos",
               "right multiplication is a graded endomorphism of the image",
               alpha_ok, None)
    if alpha_ok:
        alpha = AlgebraHom(alg, endo_alg, Matrix.from_cols(F, alpha_cols, endo_alg.dim))
        rep.extend(check_algebra_hom(alpha), prefix="alpha.")
        bij = endo_alg.dim == alg.dim and invert(alpha.matrix) is not None
        rep.record("alpha.bijective", "right multiplication map is bijective", bij,
                   None if bij else {"algebra_dim": alg.dim, "endo_dim": endo_alg.dim})
        try:
            theta = canonical_theta(aprime_over, p_left, (endo_alg, endo_bimod))
            zeta_second = theta.matrix @ aprime_over.zeta_in_centralizer_coords()
            match = alpha.matrix @ a_over.zeta.matrix == zeta_second
            rep.record("alpha.coefficients",
                       "alpha carries one coefficient embedding to the other",
                       match, None)
        except ValueError as exc:
            rep.record("alpha.coefficients",
                       "alpha carries one coefficient embedding to the other",
                       False, {"error": str(exc)})

    psi_cols = [t_p.pure(unit_vec(F, qf.bimodule.bimodule.dim, i), alg.unit)
                for i in range(qf.bimodule.bimodule.dim)]
    psi = Matrix.from_cols(F, psi_cols, p_bim.dim)

    aprime = aprime_over.algebra
    transports = {}
    for n, sample in enumerate(samples):
        t_w = qf.apply(sample)
        t_px = TensorProduct(p_bim, sample)
        nu = tensor_map_first(t_w, t_px, psi)
        transports[n] = (t_w, t_px, nu)
        bij = nu.nrows == nu.ncols and invert(nu) is not None
        rep.record(f"natural.s{n}.bijective",
                   "comparison with the image functor is a bijection", bij,
                   None if bij else {"sample": n})
        witness = None
        for kpos in range(t_w.module.dim):
            supp = t_px.module.support_degrees(nu.col(kpos))
            if not supp <= {t_w.module.degrees[kpos]}:
                witness = {"tensor_basis": kpos}
                break
        rep.record(f"natural.s{n}.graded", "comparison map preserves degrees",
                   witness is None, witness)
        witness = None
        for a in aprime.generating_indices():
            if nu @ t_w.module.action[a] != t_px.module.action[a] @ nu:
                witness = {"algebra_basis": a}
                break
        rep.record(f"natural.s{n}.linear",
                   "comparison map commutes with the target algebra",
                   witness is None, witness)

    for a, src in enumerate(samples):
        for b, dst in enumerate(samples):
            homs = hom_graded(src, dst)
            t_src, tp_src, nu_src = transports[a]
            t_dst, tp_dst, nu_dst = transports[b]
            witness = None
            for idx, phi in enumerate(homs.basis):
                lhs = nu_dst @ tensor_map_second(t_src, t_dst, phi)
                rhs = tensor_map_second(tp_src, tp_dst, phi) @ nu_src
                if lhs != rhs:
                    witness = {"hom_basis": idx}
                    break
            rep.record(f"natural.hom.s{a}to{b}",
                       "comparison maps form a natural transformation",
                       witness is None, witness)
    return rep

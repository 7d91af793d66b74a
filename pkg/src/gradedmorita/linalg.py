"""Dense exact linear algebra over Q and F_p.

Matrices are small (desk scale), stored row-major, never mutated after
construction. Vectors are plain lists of field elements.
"""
from __future__ import annotations

import itertools
from typing import Optional, Sequence

from .scalars import Field, Scalar, same_field


class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence[Scalar]], ncols: int | None = None):
        rows = [list(r) for r in rows]
        if rows:
            ncols = len(rows[0]) if ncols is None else ncols
            for r in rows:
                if len(r) != ncols:
                    raise ValueError("ragged rows")
        elif ncols is None:
            ncols = 0
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @staticmethod
    def zeros(field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, [[z] * ncols for _ in range(nrows)], ncols)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @staticmethod
    def from_cols(field: Field, cols: Sequence[Sequence[Scalar]], nrows: int | None = None) -> "Matrix":
        if cols:
            nrows = len(cols[0]) if nrows is None else nrows
        elif nrows is None:
            nrows = 0
        return Matrix(field, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    def col(self, j: int) -> list[Scalar]:
        return [r[j] for r in self.rows]

    def cols(self) -> list[list[Scalar]]:
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.col(j) for j in range(self.ncols)], self.nrows)

    def mat_vec(self, v: Sequence[Scalar]) -> list[Scalar]:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        F = self.field
        out = []
        for r in self.rows:
            acc = F.zero()
            for a, b in zip(r, v):
                if not F.is_zero(a) and not F.is_zero(b):
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        F = self.field
        ocols = other.ncols
        out = []
        for r in self.rows:
            row = [F.zero()] * ocols
            for k, a in enumerate(r):
                if F.is_zero(a):
                    continue
                orow = other.rows[k]
                for j in range(ocols):
                    b = orow[j]
                    if not F.is_zero(b):
                        row[j] = F.add(row[j], F.mul(a, b))
            out.append(row)
        return Matrix(F, out, ocols)

    def __add__(self, other: "Matrix") -> "Matrix":
        same_field(self.field, other.field)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        F = self.field
        return Matrix(F, [[F.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        same_field(self.field, other.field)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        F = self.field
        return Matrix(F, [[F.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c: Scalar) -> "Matrix":
        F = self.field
        return Matrix(F, [[F.mul(c, a) for a in r] for r in self.rows], self.ncols)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.rows)))

    def is_zero(self) -> bool:
        F = self.field
        return all(F.is_zero(a) for r in self.rows for a in r)

    def tolist(self) -> list[list[Scalar]]:
        return [list(r) for r in self.rows]

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols})"


def zero_vec(field: Field, n: int) -> list[Scalar]:
    return [field.zero()] * n


def unit_vec(field: Field, n: int, i: int) -> list[Scalar]:
    v = zero_vec(field, n)
    v[i] = field.one()
    return v


def vec_add(field: Field, u: Sequence[Scalar], v: Sequence[Scalar]) -> list[Scalar]:
    return [field.add(a, b) for a, b in zip(u, v)]

def vec_sub(field: Field, u: Sequence[Scalar], v: Sequence[Scalar]) -> list[Scalar]:
    return [field.sub(a, b) for a, b in zip(u, v)]

def vec_scale(field: Field, c: Scalar, v: Sequence[Scalar]) -> list[Scalar]:
    return [field.mul(c, a) for a in v]

def vec_is_zero(field: Field, v: Sequence[Scalar]) -> bool:
    return all(field.is_zero(a) for a in v)


def lin_comb_matrix(field: Field, mats: Sequence[Matrix], coeffs: Sequence[Scalar]) -> Matrix:
    """Sum of coeffs[i] * mats[i]; shapes must agree."""
    if not mats:
        return Matrix(field, [], 0)
    nr, nc = mats[0].nrows, mats[0].ncols
    out = [[field.zero()] * nc for _ in range(nr)]
    for c, m in zip(coeffs, mats):
        if field.is_zero(c):
            continue
        for i in range(nr):
            mrow = m.rows[i]
            orow = out[i]
            for j in range(nc):
                if not field.is_zero(mrow[j]):
                    orow[j] = field.add(orow[j], field.mul(c, mrow[j]))
    return Matrix(field, out, nc)


def _rref(field: Field, rows: list[list[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if not field.is_zero(rows[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, a) for a in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    rows, pivots = _rref(m.field, [list(r) for r in m.rows], m.ncols)
    return Matrix(m.field, rows, m.ncols), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def solve(a: Matrix, b: Sequence[Scalar]) -> Optional[list[Scalar]]:
    """One solution of a @ x = b, or None if the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if len(b) != a.nrows:
        raise ValueError("dimension mismatch")
    F = a.field
    aug = [list(r) + [bv] for r, bv in zip(a.rows, b)]
    rows, pivots = _rref(F, aug, a.ncols + 1)
    if a.ncols in pivots:
        return None
    x = zero_vec(F, a.ncols)
    for r, c in enumerate(pivots):
        x[c] = rows[r][a.ncols]
    return x


def solve_matrix(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """Solve a @ X = b column by column; None if any column is inconsistent."""
    cols = []
    for j in range(b.ncols):
        x = solve(a, b.col(j))
        if x is None:
            return None
        cols.append(x)
    return Matrix.from_cols(a.field, cols, a.ncols)


def kernel_basis(a: Matrix) -> list[list[Scalar]]:
    """Basis of the right null space of a, deterministic order."""
    F = a.field
    red, pivots = rref(a)
    free = [c for c in range(a.ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = zero_vec(F, a.ncols)
        v[fc] = F.one()
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(red.rows[r][fc])
        basis.append(v)
    return basis


def invert(m: Matrix) -> Optional[Matrix]:
    """Inverse of a square matrix, or None if singular."""
    if m.nrows != m.ncols:
        return None
    if m.nrows == 0:
        return Matrix(m.field, [], 0)
    if rank(m) != m.nrows:
        return None
    return solve_matrix(m, Matrix.identity(m.field, m.nrows))


class GenericDetPoly:
    """det(sum_i t_i F_i) expanded as a polynomial in t_1..t_k.

    Coefficients map monomials (exponent tuples of length k) to scalars;
    zero coefficients are never stored.
    """

    __slots__ = ("field", "nvars", "coeffs")

    def __init__(self, field: Field, nvars: int, coeffs: dict[tuple[int, ...], Scalar]):
        self.field = field
        self.nvars = nvars
        self.coeffs = {e: c for e, c in coeffs.items() if not field.is_zero(c)}

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.coeffs), default=0)

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        F = self.field
        total = F.zero()
        for exp, c in self.coeffs.items():
            term = c
            for v, e in zip(point, exp):
                for _ in range(e):
                    term = F.mul(term, v)
            total = F.add(total, term)
        return total

    def substitute(self, var: int, value: Scalar) -> "GenericDetPoly":
        F = self.field
        out: dict[tuple[int, ...], Scalar] = {}
        for exp, c in self.coeffs.items():
            term = c
            for _ in range(exp[var]):
                term = F.mul(term, value)
            nexp = exp[:var] + (0,) + exp[var + 1:]
            out[nexp] = F.add(out.get(nexp, F.zero()), term)
        return GenericDetPoly(F, self.nvars, out)


def _poly_add(field, a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = field.add(out.get(e, field.zero()), c)
        if field.is_zero(s):
            out.pop(e, None)
        else:
            out[e] = s
    return out


def _poly_mul_linear(field, poly: dict, linear: Sequence[Scalar]) -> dict:
    """Multiply by sum_i linear[i] * t_i (entries of the pencil are linear)."""
    out: dict[tuple[int, ...], Scalar] = {}
    for exp, c in poly.items():
        for i, a in enumerate(linear):
            if field.is_zero(a):
                continue
            nexp = exp[:i] + (exp[i] + 1,) + exp[i + 1:]
            s = field.add(out.get(nexp, field.zero()), field.mul(c, a))
            if field.is_zero(s):
                out.pop(nexp, None)
            else:
                out[nexp] = s
    return out


def det_poly(basis: Sequence[Matrix]) -> GenericDetPoly:
    """Symbolic determinant of the matrix pencil sum_i t_i basis[i].

    Laplace expansion with memoization over column subsets; entries of the
    pencil are linear forms so every intermediate stays homogeneous.
    """
    if not basis:
        raise ValueError("empty basis has no pencil")
    F = basis[0].field
    n = basis[0].nrows
    k = len(basis)
    for m in basis:
        same_field(F, m.field)
        if m.nrows != n or m.ncols != n:
            raise ValueError("pencil members must be square of equal size")
    if n == 0:
        return GenericDetPoly(F, k, {(0,) * k: F.one()})
    entry = [[[m.rows[r][c] for m in basis] for c in range(n)] for r in range(n)]
    memo: dict[int, dict] = {0: {(0,) * k: F.one()}}

    def minor(mask: int) -> dict:
        got = memo.get(mask)
        if got is not None:
            return got
        row = bin(mask).count("1") - 1
        total: dict = {}
        sign = F.one() if row % 2 == 0 else F.neg(F.one())
        for c in range(n):
            bit = 1 << c
            if not mask & bit:
                continue
            sub = minor(mask ^ bit)
            if sub:
                lin = entry[row][c]
                term = _poly_mul_linear(F, sub, [F.mul(sign, a) for a in lin])
                total = _poly_add(F, total, term)
            sign = F.neg(sign)
        memo[mask] = total
        return total

    return GenericDetPoly(F, k, minor((1 << n) - 1))


def _witness_over_q(poly: GenericDetPoly) -> list[Scalar]:
    F = poly.field
    point: list[Scalar] = []
    current = poly
    for var in range(poly.nvars):
        deg = current.degree_in(var)
        for cand in range(deg + 1):
            trial = current.substitute(var, F.from_int(cand))
            if not trial.is_zero():
                point.append(F.from_int(cand))
                current = trial
                break
        else:  # a nonzero polynomial cannot vanish at deg+1 distinct points
            raise AssertionError("unreachable: witness search exhausted")
    return point


def generic_invertible_combination(
    basis: Sequence[Matrix],
) -> Optional[tuple[list[Scalar], Matrix]]:
    """An invertible linear combination of the given square matrices, or None.

    Returns the coefficient vector alongside the combination. Deterministic:
    cheap candidate combinations are tried first, then the symbolic
    determinant decides; over a finite field the witness search covers all of
    F_p^k, so None means no combination over the base field is invertible.
    """
    if not basis:
        return None
    F = basis[0].field
    n = basis[0].nrows
    k = len(basis)
    if n == 0:
        coeffs = zero_vec(F, k)
        return coeffs, Matrix(F, [], 0)

    def attempt(coeffs: list[Scalar]) -> Optional[tuple[list[Scalar], Matrix]]:
        m = lin_comb_matrix(F, basis, coeffs)
        if rank(m) == n:
            return coeffs, m
        return None

    for i in range(k):
        hit = attempt(unit_vec(F, k, i))
        if hit:
            return hit
    hit = attempt([F.one()] * k)
    if hit:
        return hit

    poly = det_poly(basis)
    if poly.is_zero():
        return None
    if F.elements() is None:
        point = _witness_over_q(poly)
        return point, lin_comb_matrix(F, basis, point)
    for raw in itertools.product(F.elements(), repeat=k):
        point = list(raw)
        if not F.is_zero(poly.evaluate(point)):
            return point, lin_comb_matrix(F, basis, point)
    return None


def generic_invertible_element(basis: Sequence[Matrix]) -> Optional[Matrix]:
    """An invertible element of the span of the given matrices, or None."""
    got = generic_invertible_combination(basis)
    return got[1] if got else None

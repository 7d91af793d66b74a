"""JSON workspaces: one file tying together groups, algebras, modules,
group actions, coefficient maps and Morita contexts by string key.

A workspace is a single JSON object with named sections ("groups",
"algebras", "modules", "actions", "zetas", "contexts"); entries reference
each other by key, so one file carries a whole worked example.  Scalars are
written as strings in the field's own notation ("2/3", "4 mod 7"); plain
integers are accepted on input.  Every scalar in a file lives in one field,
declared by the top-level "field" entry (default "Q") and overridable by
the caller, so moduli cannot disagree between entries.

Loaded objects are cached per key.  That matters beyond speed: the deeper
structures check that their parts share algebra objects by identity, so two
resolutions of the same key must return the same instance.
"""
from __future__ import annotations

import json
from typing import Any, Optional

from .algebras import (
    AlgebraHom,
    CrossedProductData,
    GActedAlgebra,
    GradedAlgebra,
    NotCrossedProduct,
    find_crossed_product,
)
from .groups import FiniteGroup, make_group
from .linalg import Matrix
from .modules import GradedBimodule, GradedModule
from .morita import MoritaContext
from .overc import AlgebraOverC, BimoduleOverC
from .scalars import Field, field_from_name

Vector = list

SECTIONS = ("groups", "algebras", "modules", "actions", "zetas", "contexts")


class ParseError(ValueError):
    """The file is not a well-formed workspace (bad JSON, shape, or scalar)."""


class UnknownKey(ValueError):
    """A reference names an entry that does not exist."""


class KindMismatch(ValueError):
    """An entry exists but is not the kind of object the caller needs."""


def load_workspace(path: str, field_override: Optional[str] = None) -> "Workspace":
    """Read a workspace file, optionally forcing the scalar field."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    return Workspace(data, field_override)


class Workspace:
    """Parsed workspace data plus per-key caches of the built objects."""

    def __init__(self, data: Any, field_override: Optional[str] = None):
        if not isinstance(data, dict):
            raise ParseError("workspace must be a JSON object")
        self.data = data
        for section in SECTIONS:
            entries = data.get(section, {})
            if not isinstance(entries, dict):
                raise ParseError(f"section {section!r} must be an object")
            for key, entry in entries.items():
                if not isinstance(entry, dict):
                    raise ParseError(f"{section}.{key} must be an object")
        declared = data.get("field", "Q")
        if not isinstance(declared, str):
            raise ParseError("top-level 'field' must be a string")
        name = field_override if field_override is not None else declared
        try:
            self.field: Field = field_from_name(name)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        self.field_overridden = field_override is not None
        self._cache: dict[tuple[str, str], Any] = {}
        self._crossed: dict[str, CrossedProductData] = {}

    # ------------------------------------------------------------------
    # raw access and low-level parsing

    def raw(self, section: str, key: str) -> dict:
        entries = self.data.get(section, {})
        if key not in entries:
            raise UnknownKey(f"no entry {key!r} in section {section!r}")
        return entries[key]

    def keys(self, section: str) -> list[str]:
        return sorted(self.data.get(section, {}))

    def _scalar(self, value: Any, path: str):
        if isinstance(value, bool):
            raise ParseError(f"{path}: expected a scalar, got a boolean")
        if isinstance(value, int):
            return self.field.from_int(value)
        if isinstance(value, str):
            try:
                return self.field.from_str(value)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(
                    f"{path}: cannot read {value!r} as a scalar over {self.field.name}"
                ) from exc
        raise ParseError(f"{path}: expected an integer or scalar string")

    def _vector(self, value: Any, n: int, path: str) -> Vector:
        if not isinstance(value, list) or len(value) != n:
            raise ParseError(f"{path}: expected a list of {n} scalars")
        return [self._scalar(a, f"{path}[{i}]") for i, a in enumerate(value)]

    def _matrix(self, value: Any, nrows: int, ncols: int, path: str) -> Matrix:
        if not isinstance(value, list) or len(value) != nrows:
            raise ParseError(f"{path}: expected {nrows} matrix rows")
        rows = [self._vector(row, ncols, f"{path}[{r}]") for r, row in enumerate(value)]
        return Matrix(self.field, rows, ncols)

    @staticmethod
    def _int(value: Any, path: str) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError(f"{path}: expected an integer")
        return value

    def _ref(self, entry: dict, field_name: str, path: str) -> str:
        if field_name not in entry:
            raise ParseError(f"{path}: missing reference {field_name!r}")
        ref = entry[field_name]
        if not isinstance(ref, str):
            raise ParseError(f"{path}.{field_name}: references must be strings")
        return ref

    def reference(self, section: str, key: str, field_name: str) -> str:
        """The key another entry is referenced under, without building it."""
        return self._ref(self.raw(section, key), field_name, f"{section}.{key}")

    # ------------------------------------------------------------------
    # groups

    def group(self, key: str) -> FiniteGroup:
        hit = self._cache.get(("groups", key))
        if hit is not None:
            return hit
        entry = self.raw("groups", key)
        path = f"groups.{key}"
        order = self._int(entry.get("order"), f"{path}.order")
        table = entry.get("table")
        if not isinstance(table, list) or len(table) != order:
            raise ParseError(f"{path}.table: expected {order} rows")
        for r, row in enumerate(table):
            if not isinstance(row, list) or len(row) != order:
                raise ParseError(f"{path}.table[{r}]: expected {order} entries")
            for c, v in enumerate(row):
                self._int(v, f"{path}.table[{r}][{c}]")
        group = make_group(table)
        self._cache[("groups", key)] = group
        return group

    def group_labels(self, key: str) -> list[str]:
        entry = self.raw("groups", key)
        order = self._int(entry.get("order"), f"groups.{key}.order")
        labels = entry.get("labels")
        if labels is None:
            return [f"g{i}" for i in range(order)]
        if not isinstance(labels, list) or len(labels) != order or any(
            not isinstance(s, str) for s in labels
        ):
            raise ParseError(f"groups.{key}.labels: expected {order} strings")
        return labels

    # ------------------------------------------------------------------
    # algebras

    def algebra(self, key: str) -> GradedAlgebra:
        hit = self._cache.get(("algebras", key))
        if hit is not None:
            return hit
        entry = self.raw("algebras", key)
        path = f"algebras.{key}"
        declared = entry.get("field")
        if declared is not None:
            if not isinstance(declared, str):
                raise ParseError(f"{path}.field: expected a string")
            if not self.field_overridden and declared != self.field.name:
                raise ParseError(
                    f"{path}.field: {declared!r} disagrees with the workspace field "
                    f"{self.field.name!r}"
                )
        group = self.group(self._ref(entry, "group", path))
        dim = self._int(entry.get("dim"), f"{path}.dim")
        degrees = self._degree_list(entry.get("deg"), dim, group.order, f"{path}.deg")
        struct_raw = entry.get("structconst")
        if not isinstance(struct_raw, list) or len(struct_raw) != dim:
            raise ParseError(f"{path}.structconst: expected {dim} rows")
        struct = []
        for i, row in enumerate(struct_raw):
            if not isinstance(row, list) or len(row) != dim:
                raise ParseError(f"{path}.structconst[{i}]: expected {dim} entries")
            struct.append(
                [self._vector(v, dim, f"{path}.structconst[{i}][{j}]") for j, v in enumerate(row)]
            )
        unit = self._vector(entry.get("unit"), dim, f"{path}.unit")
        alg = GradedAlgebra(group, self.field, degrees, struct, unit)
        self._cache[("algebras", key)] = alg
        return alg

    def _degree_list(self, value: Any, dim: int, order: int, path: str) -> list[int]:
        if not isinstance(value, list) or len(value) != dim:
            raise ParseError(f"{path}: expected {dim} degree indices")
        degrees = [self._int(d, f"{path}[{i}]") for i, d in enumerate(value)]
        for i, d in enumerate(degrees):
            if not 0 <= d < order:
                raise ParseError(f"{path}[{i}]: degree {d} outside the group of order {order}")
        return degrees

    def crossed(self, key: str) -> CrossedProductData:
        """Homogeneous units for the algebra under the given key, cached."""
        hit = self._crossed.get(key)
        if hit is not None:
            return hit
        alg = self.algebra(key)
        crossed = find_crossed_product(alg)
        if crossed is None:
            raise NotCrossedProduct(f"algebra {key!r} has a degree with no invertible element")
        self._crossed[key] = crossed
        return crossed

    # ------------------------------------------------------------------
    # modules and bimodules

    def module_kind(self, key: str) -> str:
        entry = self.raw("modules", key)
        path = f"modules.{key}"
        inferred = "bimodule" if "left_action" in entry or "right_action" in entry else "module"
        declared = entry.get("kind")
        if declared is not None and declared != inferred:
            raise ParseError(f"{path}.kind: {declared!r} does not match the entry's keys")
        return inferred

    def module(self, key: str) -> GradedModule:
        if self.module_kind(key) != "module":
            raise KindMismatch(f"modules.{key} is a bimodule, not a one-sided module")
        hit = self._cache.get(("modules", key))
        if hit is not None:
            return hit
        entry = self.raw("modules", key)
        path = f"modules.{key}"
        alg = self.algebra(self._ref(entry, "algebra", path))
        dim = self._int(entry.get("dim"), f"{path}.dim")
        degrees = self._degree_list(entry.get("deg"), dim, alg.group.order, f"{path}.deg")
        side = entry.get("side", "left")
        if side not in ("left", "right"):
            raise ParseError(f"{path}.side: expected 'left' or 'right'")
        action = self._action_list(entry.get("action"), alg.dim, dim, f"{path}.action")
        mod = GradedModule(alg, degrees, action, side)
        self._cache[("modules", key)] = mod
        return mod

    def bimodule(self, key: str) -> GradedBimodule:
        if self.module_kind(key) != "bimodule":
            raise KindMismatch(f"modules.{key} is a one-sided module, not a bimodule")
        hit = self._cache.get(("modules", key))
        if hit is not None:
            return hit
        entry = self.raw("modules", key)
        path = f"modules.{key}"
        left = self.algebra(self._ref(entry, "algebra", path))
        right = self.algebra(self._ref(entry, "right_algebra", path))
        dim = self._int(entry.get("dim"), f"{path}.dim")
        degrees = self._degree_list(entry.get("deg"), dim, left.group.order, f"{path}.deg")
        left_action = self._action_list(entry.get("left_action"), left.dim, dim, f"{path}.left_action")
        right_action = self._action_list(entry.get("right_action"), right.dim, dim, f"{path}.right_action")
        bim = GradedBimodule(left, right, degrees, left_action, right_action)
        self._cache[("modules", key)] = bim
        return bim

    def _action_list(self, value: Any, count: int, dim: int, path: str) -> list[Matrix]:
        if not isinstance(value, list) or len(value) != count:
            raise ParseError(f"{path}: expected one matrix per algebra basis vector ({count})")
        return [self._matrix(m, dim, dim, f"{path}[{i}]") for i, m in enumerate(value)]

    def bimodule_over_c(self, key: str) -> Optional[BimoduleOverC]:
        """The bimodule with its coefficient structures, when the entry
        names them; None when it carries no zeta annotations."""
        entry = self.raw("modules", key)
        if "left_zeta" not in entry and "right_zeta" not in entry:
            return None
        path = f"modules.{key}"
        bim = self.bimodule(key)
        left = self.zeta(self._ref(entry, "left_zeta", path))
        right = self.zeta(self._ref(entry, "right_zeta", path))
        try:
            return BimoduleOverC(bim, left, right)
        except ValueError as exc:
            raise KindMismatch(f"{path}: {exc}") from exc

    # ------------------------------------------------------------------
    # actions and coefficient maps

    def action(self, key: str) -> GActedAlgebra:
        hit = self._cache.get(("actions", key))
        if hit is not None:
            return hit
        entry = self.raw("actions", key)
        path = f"actions.{key}"
        alg = self.algebra(self._ref(entry, "algebra", path))
        mats = self._action_list(
            entry.get("matrices"), alg.group.order, alg.dim, f"{path}.matrices"
        )
        acted = GActedAlgebra(alg, mats)
        self._cache[("actions", key)] = acted
        return acted

    def zeta(self, key: str) -> AlgebraOverC:
        hit = self._cache.get(("zetas", key))
        if hit is not None:
            return hit
        entry = self.raw("zetas", key)
        path = f"zetas.{key}"
        acted = self.action(self._ref(entry, "coefficients", path))
        target_key = self._ref(entry, "target", path)
        target = self.algebra(target_key)
        matrix = self._matrix(
            entry.get("matrix"), target.dim, acted.algebra.dim, f"{path}.matrix"
        )
        hom = AlgebraHom(acted.algebra, target, matrix)
        x = AlgebraOverC(acted, target, self.crossed(target_key), hom)
        self._cache[("zetas", key)] = x
        return x

    # ------------------------------------------------------------------
    # contexts

    def context(self, key: str) -> MoritaContext:
        hit = self._cache.get(("contexts", key))
        if hit is not None:
            return hit
        entry = self.raw("contexts", key)
        path = f"contexts.{key}"
        left = self.zeta(self._ref(entry, "left_zeta", path))
        right = self.zeta(self._ref(entry, "right_zeta", path))
        m_bim = self.bimodule(self._ref(entry, "m", path))
        mprime_bim = self.bimodule(self._ref(entry, "mprime", path))
        f = self._pairing(
            entry.get("f"), m_bim.dim, mprime_bim.dim, left.algebra.dim, f"{path}.f"
        )
        g = self._pairing(
            entry.get("g"), mprime_bim.dim, m_bim.dim, right.algebra.dim, f"{path}.g"
        )
        try:
            m = BimoduleOverC(m_bim, left, right)
            mprime = BimoduleOverC(mprime_bim, right, left)
            ctx = MoritaContext(left, right, m, mprime, f, g)
        except ValueError as exc:
            raise KindMismatch(f"{path}: {exc}") from exc
        self._cache[("contexts", key)] = ctx
        return ctx

    def _pairing(self, value: Any, rows: int, cols: int, dim: int, path: str) -> list[list[Vector]]:
        if not isinstance(value, list) or len(value) != rows:
            raise ParseError(f"{path}: expected {rows} rows of {cols} coordinate vectors")
        out = []
        for i, row in enumerate(value):
            if not isinstance(row, list) or len(row) != cols:
                raise ParseError(f"{path}[{i}]: expected {cols} coordinate vectors")
            out.append([self._vector(v, dim, f"{path}[{i}][{j}]") for j, v in enumerate(row)])
        return out


# ----------------------------------------------------------------------
# serialization

def vector_json(field: Field, v: Vector) -> list[str]:
    return [field.to_str(a) for a in v]


def matrix_json(m: Matrix) -> list[list[str]]:
    return [vector_json(m.field, row) for row in m.rows]


def group_json(group: FiniteGroup, labels: Optional[list[str]] = None) -> dict:
    table = [[group.mul(i, j) for j in range(group.order)] for i in range(group.order)]
    return {
        "order": group.order,
        "table": table,
        "labels": labels if labels is not None else [f"g{i}" for i in range(group.order)],
    }


def algebra_json(alg: GradedAlgebra, group_key: str) -> dict:
    return {
        "group": group_key,
        "field": alg.field.name,
        "dim": alg.dim,
        "deg": list(alg.degrees),
        "structconst": [
            [vector_json(alg.field, v) for v in row] for row in alg.structconst
        ],
        "unit": vector_json(alg.field, alg.unit),
    }


def module_json(mod: GradedModule, algebra_key: str) -> dict:
    return {
        "algebra": algebra_key,
        "dim": mod.dim,
        "deg": list(mod.degrees),
        "action": [matrix_json(m) for m in mod.action],
        "side": mod.side,
    }


def bimodule_json(
    bim: GradedBimodule,
    left_key: str,
    right_key: str,
    left_zeta: Optional[str] = None,
    right_zeta: Optional[str] = None,
) -> dict:
    entry = {
        "algebra": left_key,
        "right_algebra": right_key,
        "dim": bim.dim,
        "deg": list(bim.degrees),
        "left_action": [matrix_json(m) for m in bim.left_action],
        "right_action": [matrix_json(m) for m in bim.right_action],
    }
    if left_zeta is not None:
        entry["left_zeta"] = left_zeta
    if right_zeta is not None:
        entry["right_zeta"] = right_zeta
    return entry


def action_json(acted: GActedAlgebra, algebra_key: str) -> dict:
    return {
        "algebra": algebra_key,
        "matrices": [matrix_json(m) for m in acted.action],
    }


def zeta_json(x: AlgebraOverC, action_key: str, target_key: str) -> dict:
    return {
        "coefficients": action_key,
        "target": target_key,
        "matrix": matrix_json(x.zeta.matrix),
    }


def context_json(
    ctx: MoritaContext,
    left_zeta_key: str,
    right_zeta_key: str,
    m_key: str,
    mprime_key: str,
) -> dict:
    field = ctx.left.algebra.field
    return {
        "left_zeta": left_zeta_key,
        "right_zeta": right_zeta_key,
        "m": m_key,
        "mprime": mprime_key,
        "f": [[vector_json(field, v) for v in row] for row in ctx.left_pairing],
        "g": [[vector_json(field, v) for v in row] for row in ctx.right_pairing],
    }


def canonical_context_workspace(
    ctx: MoritaContext,
    group_labels: Optional[list[str]] = None,
) -> dict:
    """A self-contained workspace holding one context and everything it
    references, under fixed keys (context key "ctx")."""
    left, right = ctx.left, ctx.right
    data = {
        "field": left.algebra.field.name,
        "groups": {"G": group_json(left.algebra.group, group_labels)},
        "algebras": {
            "A": algebra_json(left.algebra, "G"),
            "Aprime": algebra_json(right.algebra, "G"),
            "C": algebra_json(left.c.algebra, "G"),
        },
        "actions": {"C-action": action_json(left.c, "C")},
        "zetas": {
            "zeta": zeta_json(left, "C-action", "A"),
            "zetaprime": zeta_json(right, "C-action", "Aprime"),
        },
        "modules": {
            "M": bimodule_json(ctx.m.bimodule, "A", "Aprime", "zeta", "zetaprime"),
            "Mprime": bimodule_json(ctx.mprime.bimodule, "Aprime", "A", "zetaprime", "zeta"),
        },
        "contexts": {
            "ctx": context_json(ctx, "zeta", "zetaprime", "M", "Mprime"),
        },
    }
    return data


def dumps_workspace(data: dict) -> str:
    """Canonical text form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def save_workspace(path: str, data: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_workspace(data))

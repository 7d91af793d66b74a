"""Command-line front end: validate workspace entries, compute derived
objects, and run Morita context verification tiers.

Three subcommands share one report shape.  ``validate`` runs the checker
matching an entry's kind, ``analyze`` computes centralizers, stabilizers,
graded homs, endomorphism algebras, duals and canonical contexts, and
``morita`` drives the context verification ladder (axioms, surjectivity,
equivalence consequences, converse).  Reports are deterministic: checks are
sorted by name, JSON keys are sorted, and no timestamps appear, so repeated
runs on the same input are byte-identical.

Exit codes: 0 all checks passed, 1 some check failed (or a verification
hypothesis such as surjectivity does not hold), 2 the workspace file or
command line is malformed, 3 a reference names a missing entry or an entry
of the wrong kind.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional

from . import workspace as ws
from .algebras import centralizer, check_graded_algebra, identity_component
from .groups import NoIdentity, NoInverse, NotAssociative, NotClosed, Subgroup
from .linalg import Matrix
from .modules import (
    check_graded_bimodule,
    check_graded_module,
    dual_module,
    end_op_algebra,
    hom_graded,
    stabilizer,
)
from .morita import (
    NotSurjective,
    OverCViolation,
    WitnessNotIso,
    build_canonical_context,
    check_context,
    functors_from_context,
    is_surjective_context,
    verify_morita_i,
    verify_morita_ii,
)
from .overc import (
    algebra_over_c_from_centralizer,
    check_algebra_over_c,
    check_bimodule_over_c,
    check_g_acted_algebra,
)
from .reports import ValidationReport

VALIDATE_KINDS = ("group", "algebra", "module", "bimodule", "action", "zeta", "context")
ANALYZE_KINDS = ("centralizer", "stabilizer", "hom", "endop", "dual", "context")
MORITA_LEVELS = ("check", "surjective", "morita1", "morita2")

GROUP_LAWS = {
    "group.closed": "products stay inside the element set",
    "group.identity": "index 0 is a two-sided identity",
    "group.associative": "(g*h)*k = g*(h*k) for all triples",
    "group.inverse": "every element has a two-sided inverse",
}


def jsonable(value: Any) -> Any:
    """Reduce report payloads to plain JSON values, exactly and stably."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, Matrix):
        return [[value.field.to_str(a) for a in row] for row in value.rows]
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    return repr(value)


def report_dict(command: str, rep: Optional[ValidationReport], result: Optional[dict] = None) -> dict:
    checks = [
        {
            "name": c["name"],
            "law": c["law"],
            "status": c["status"],
            "witness": jsonable(c["witness"]),
        }
        for c in (rep.to_json() if rep is not None else [])
    ]
    out = {
        "command": command,
        "checks": checks,
        "ok": rep.ok() if rep is not None else True,
    }
    if result is not None:
        out["result"] = jsonable(result)
    return out


def print_report(report: dict, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
        return
    for check in report["checks"]:
        line = f"{check['status'].upper():4} {check['name']}: {check['law']}"
        if check["status"] == "fail" and check["witness"]:
            line += "  witness=" + json.dumps(check["witness"], sort_keys=True)
        sys.stdout.write(line + "\n")
    result = report.get("result")
    if result is not None:
        for key in sorted(result):
            sys.stdout.write(f"{key}: {json.dumps(result[key], sort_keys=True)}\n")
    total = len(report["checks"])
    failed = sum(1 for c in report["checks"] if c["status"] == "fail")
    if report["ok"]:
        sys.stdout.write(f"ok ({total} checks)\n")
    else:
        sys.stdout.write(f"FAILED ({failed} of {total} checks)\n")


def _expect(wsp: ws.Workspace, section: str, key: str) -> None:
    """Raise UnknownKey or KindMismatch with a message naming the section."""
    if key in wsp.data.get(section, {}):
        return
    elsewhere = [s for s in ws.SECTIONS if s != section and key in wsp.data.get(s, {})]
    if elsewhere:
        raise ws.KindMismatch(
            f"{key!r} names an entry in {elsewhere[0]!r}, but this operation needs {section!r}"
        )
    raise ws.UnknownKey(f"no entry {key!r} in section {section!r}")


def _left_module(wsp: ws.Workspace, key: str):
    _expect(wsp, "modules", key)
    mod = wsp.module(key)
    if mod.side != "left":
        raise ws.KindMismatch(f"modules.{key} is a right module, but a left module is needed")
    return mod


def _algebra_key_of_module(wsp: ws.Workspace, key: str) -> str:
    return wsp.reference("modules", key, "algebra")


def _group_key_of_algebra(wsp: ws.Workspace, akey: str) -> str:
    return wsp.reference("algebras", akey, "group")


def _subgroup_json(sub: Subgroup, labels: list[str]) -> dict:
    members = list(sub.members)
    table = [
        [members.index(sub.group.mul(a, b)) for b in members]
        for a in members
    ]
    return {
        "order": len(members),
        "table": table,
        "labels": [labels[m] for m in members],
    }


# ----------------------------------------------------------------------
# validate

def cmd_validate(args: argparse.Namespace) -> dict:
    wsp = ws.load_workspace(args.file, args.field)
    kind, sep, key = args.target.partition(":")
    if not sep or kind not in VALIDATE_KINDS:
        raise ws.ParseError(
            f"target must look like kind:key with kind one of {', '.join(VALIDATE_KINDS)}"
        )
    command = f"validate {args.file} {args.target}"
    rep = ValidationReport()
    if kind == "group":
        _expect(wsp, "groups", key)
        try:
            wsp.group(key)
        except (NoIdentity, NotAssociative, NoInverse, NotClosed) as exc:
            name = {
                NotClosed: "group.closed",
                NoIdentity: "group.identity",
                NotAssociative: "group.associative",
                NoInverse: "group.inverse",
            }[type(exc)]
            rep.record(name, GROUP_LAWS[name], False, {"witness": jsonable(exc.witness)})
        else:
            for name in sorted(GROUP_LAWS):
                rep.record(name, GROUP_LAWS[name], True)
    elif kind == "algebra":
        _expect(wsp, "algebras", key)
        rep = check_graded_algebra(wsp.algebra(key))
    elif kind == "module":
        _expect(wsp, "modules", key)
        rep = check_graded_module(wsp.module(key))
    elif kind == "bimodule":
        _expect(wsp, "modules", key)
        over = wsp.bimodule_over_c(key)
        if over is not None:
            rep = check_bimodule_over_c(over)
        else:
            rep = check_graded_bimodule(wsp.bimodule(key))
    elif kind == "action":
        _expect(wsp, "actions", key)
        rep = check_g_acted_algebra(wsp.action(key))
    elif kind == "zeta":
        _expect(wsp, "zetas", key)
        rep = check_algebra_over_c(wsp.zeta(key))
    else:
        _expect(wsp, "contexts", key)
        rep = check_context(wsp.context(key))
    return report_dict(command, rep)


# ----------------------------------------------------------------------
# analyze

def cmd_analyze(args: argparse.Namespace) -> dict:
    wsp = ws.load_workspace(args.file, args.field)
    command = f"analyze {args.file} {args.key} {args.what}"
    out_sections: Optional[dict] = None
    result: dict

    if args.what == "centralizer":
        _expect(wsp, "algebras", args.key)
        alg = wsp.algebra(args.key)
        emb = centralizer(alg, identity_component(alg))
        result = {
            "dims": emb.sub.component_dims(),
            "degrees": list(emb.sub.degrees),
            "basis": [ws.vector_json(alg.field, col) for col in emb.inclusion.cols()],
        }
        gkey = _group_key_of_algebra(wsp, args.key)
        out_sections = {
            "field": alg.field.name,
            "groups": {gkey: ws.group_json(alg.group, wsp.group_labels(gkey))},
            "algebras": {f"{args.key}.centralizer": ws.algebra_json(emb.sub, gkey)},
        }
    elif args.what == "stabilizer":
        _expect(wsp, "modules", args.key)
        if wsp.module_kind(args.key) == "bimodule":
            mod = wsp.bimodule(args.key).as_left_module()
        else:
            mod = wsp.module(args.key)
        akey = _algebra_key_of_module(wsp, args.key)
        gkey = _group_key_of_algebra(wsp, akey)
        labels = wsp.group_labels(gkey)
        sub = stabilizer(mod)
        result = {
            "members": list(sub.members),
            "labels": [labels[m] for m in sub.members],
            "order": len(sub.members),
        }
        out_sections = {
            "groups": {f"{args.key}.stabilizer": _subgroup_json(sub, labels)},
        }
    elif args.what == "hom":
        if args.target is None:
            raise ws.ParseError("analyze hom needs --target naming the codomain module")
        src = _left_module(wsp, args.key)
        dst = _left_module(wsp, args.target)
        if dst.algebra is not src.algebra:
            raise ws.KindMismatch(
                f"modules.{args.key} and modules.{args.target} live over different algebras"
            )
        command = f"analyze {args.file} {args.key} hom --target {args.target}"
        hom = hom_graded(src, dst)
        order = src.algebra.group.order
        result = {
            "total": len(hom.basis),
            "dims": [hom.degrees.count(g) for g in range(order)],
            "degrees": list(hom.degrees),
            "basis": [ws.matrix_json(b) for b in hom.basis],
        }
    elif args.what == "endop":
        p = _left_module(wsp, args.key)
        endo_alg, endo_bim = end_op_algebra(p)
        akey = _algebra_key_of_module(wsp, args.key)
        gkey = _group_key_of_algebra(wsp, akey)
        result = {
            "dim": endo_alg.dim,
            "dims": endo_alg.component_dims(),
            "degrees": list(endo_alg.degrees),
        }
        out_sections = {
            "field": endo_alg.field.name,
            "groups": {gkey: ws.group_json(endo_alg.group, wsp.group_labels(gkey))},
            "algebras": {
                akey: ws.algebra_json(p.algebra, gkey),
                f"{args.key}.endop": ws.algebra_json(endo_alg, gkey),
            },
            "modules": {
                f"{args.key}.endop_bimodule": ws.bimodule_json(
                    endo_bim, akey, f"{args.key}.endop"
                ),
            },
        }
    elif args.what == "dual":
        p = _left_module(wsp, args.key)
        endo = end_op_algebra(p)
        dual = dual_module(p, endo)
        akey = _algebra_key_of_module(wsp, args.key)
        gkey = _group_key_of_algebra(wsp, akey)
        result = {
            "dim": dual.dim,
            "dims": dual.component_dims(),
            "degrees": list(dual.degrees),
        }
        out_sections = {
            "field": p.algebra.field.name,
            "groups": {gkey: ws.group_json(p.algebra.group, wsp.group_labels(gkey))},
            "algebras": {
                akey: ws.algebra_json(p.algebra, gkey),
                f"{args.key}.endop": ws.algebra_json(endo[0], gkey),
            },
            "modules": {
                f"{args.key}.dual": ws.bimodule_json(dual, f"{args.key}.endop", akey),
            },
        }
    else:
        p = _left_module(wsp, args.key)
        akey = _algebra_key_of_module(wsp, args.key)
        if args.zeta is not None:
            _expect(wsp, "zetas", args.zeta)
            x = wsp.zeta(args.zeta)
            command = f"analyze {args.file} {args.key} context --zeta {args.zeta}"
            if x.algebra is not p.algebra:
                raise ws.KindMismatch(
                    f"zetas.{args.zeta} targets a different algebra than modules.{args.key}"
                )
        else:
            x = algebra_over_c_from_centralizer(wsp.algebra(akey), wsp.crossed(akey))
        ctx = build_canonical_context(x, p)
        gkey = _group_key_of_algebra(wsp, akey)
        result = {
            "left_dim": ctx.left.algebra.dim,
            "right_dim": ctx.right.algebra.dim,
            "right_dims": ctx.right.algebra.component_dims(),
            "m_degrees": list(ctx.m.bimodule.degrees),
            "mprime_degrees": list(ctx.mprime.bimodule.degrees),
        }
        out_sections = ws.canonical_context_workspace(ctx, wsp.group_labels(gkey))

    if args.out is not None:
        if out_sections is None:
            raise ws.ParseError(f"analyze {args.what} has no derived workspace to write")
        ws.save_workspace(args.out, out_sections)
    return report_dict(command, None, result)


# ----------------------------------------------------------------------
# morita

def cmd_morita(args: argparse.Namespace) -> dict:
    wsp = ws.load_workspace(args.file, args.field)
    _expect(wsp, "contexts", args.key)
    ctx = wsp.context(args.key)
    command = f"morita {args.file} {args.key} {args.level}"
    samples = None
    if args.samples:
        command += " --samples " + " ".join(args.samples)
        samples = []
        for skey in args.samples:
            mod = _left_module(wsp, skey)
            if mod.algebra is not ctx.left.algebra:
                raise ws.KindMismatch(
                    f"sample modules.{skey} is not a module over the context's left algebra"
                )
            samples.append(mod)

    rep = ValidationReport()
    result = None
    if args.level == "check":
        rep = check_context(ctx)
    elif args.level == "surjective":
        value = is_surjective_context(ctx)
        rep.record("context.surjective", "both induced tensor maps are bijective", value)
        result = {"surjective": value}
    elif args.level == "morita1":
        try:
            rep = verify_morita_i(ctx, samples)
        except NotSurjective as exc:
            rep.record("context.surjective", "both induced tensor maps are bijective",
                       False, {"error": str(exc)})
    else:
        qf, qg, iso_fg, iso_gf = functors_from_context(ctx)
        try:
            rep = verify_morita_ii(qf, qg, iso_fg, iso_gf, samples)
        except WitnessNotIso as exc:
            rep.record("witness.invertible", "composite isomorphism witnesses are invertible",
                       False, {"error": str(exc)})
        except OverCViolation as exc:
            rep.record("functors.coefficients", "both functors are over the same coefficients",
                       False, {"error": str(exc)})
    return report_dict(command, rep, result)


# ----------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedmorita",
        description="Validate and analyze graded algebra workspaces.",
    )
    parser.add_argument("--field", default=None, metavar="NAME",
                        help="override the workspace scalar field (Q or Fp:<p>)")
    parser.add_argument("--json", action="store_true", help="emit the report as JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check the axioms of one entry")
    p_validate.add_argument("file", help="workspace JSON file")
    p_validate.add_argument("target", help="entry to check, written kind:key")
    p_validate.set_defaults(func=cmd_validate)

    p_analyze = sub.add_parser("analyze", help="compute a derived object")
    p_analyze.add_argument("file", help="workspace JSON file")
    p_analyze.add_argument("key", help="entry the computation starts from")
    p_analyze.add_argument("what", choices=ANALYZE_KINDS, help="derived object to compute")
    p_analyze.add_argument("--target", default=None, metavar="KEY",
                           help="codomain module key (hom only)")
    p_analyze.add_argument("--zeta", default=None, metavar="KEY",
                           help="coefficient map key (context only; default: centralizer)")
    p_analyze.add_argument("--out", default=None, metavar="FILE",
                           help="write the derived objects to a workspace file")
    p_analyze.set_defaults(func=cmd_analyze)

    p_morita = sub.add_parser("morita", help="run a context verification tier")
    p_morita.add_argument("file", help="workspace JSON file")
    p_morita.add_argument("key", help="context entry to verify")
    p_morita.add_argument("level", choices=MORITA_LEVELS, help="verification tier")
    p_morita.add_argument("--samples", nargs="+", default=None, metavar="KEY",
                          help="module keys used as naturality samples")
    p_morita.set_defaults(func=cmd_morita)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except ws.ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ws.UnknownKey, ws.KindMismatch) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except ValueError as exc:
        rep = ValidationReport()
        rep.record("error", str(exc), False)
        echo = " ".join(str(p) for p in (args.command, getattr(args, "file", None)) if p)
        print_report(report_dict(echo, rep), args.json)
        return 1
    print_report(report, args.json)
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())

"""Regenerate the JSON workspaces under fixtures/ from the library.

Everything here is deterministic, so rerunning the script must reproduce
the checked-in files byte for byte; the test suite relies on that to keep
the fixtures in sync with the code.
"""
from __future__ import annotations

import json
import os
import sys

from gradedmorita import workspace as ws
from gradedmorita.cli import main as cli_main
from gradedmorita.fixtures import (
    column_module,
    e1_algebra,
    e2_algebra,
    e3_algebra,
    p3_module,
)
from gradedmorita.modules import direct_sum, regular_module, suspend
from gradedmorita.overc import algebra_over_c_from_centralizer

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")


def base_workspace(alg, labels, modules):
    """Sections shared by the three example files: the algebra, its
    centralizer coefficient structure, and a few named modules."""
    x = algebra_over_c_from_centralizer(alg)
    data = {
        "field": alg.field.name,
        "groups": {"C2": ws.group_json(alg.group, labels)},
        "algebras": {
            "A": ws.algebra_json(alg, "C2"),
            "C": ws.algebra_json(x.c.algebra, "C2"),
        },
        "actions": {"c-act": ws.action_json(x.c, "C")},
        "zetas": {"z": ws.zeta_json(x, "c-act", "A")},
        "modules": {key: ws.module_json(mod, "A") for key, mod in modules.items()},
    }
    return data


def write(name, data):
    path = os.path.join(FIXTURES, name)
    ws.save_workspace(path, data)
    print("wrote", path)


def main():
    os.makedirs(FIXTURES, exist_ok=True)

    a1 = e1_algebra()
    reg1 = regular_module(a1, "left")
    write("e1.json", base_workspace(a1, ["1", "s"], {
        "A": reg1,
        "As": suspend(reg1, 1),
    }))

    a2 = e2_algebra()
    reg2 = regular_module(a2, "left")
    col = column_module(a2)
    write("e2.json", base_workspace(a2, ["1", "s"], {
        "A": reg2,
        "col": col,
        "cols": suspend(col, 1),
        "P": direct_sum(col, suspend(col, 1)),
    }))

    a3 = e3_algebra()
    write("e3.json", base_workspace(a3, ["1", "s"], {
        "A": regular_module(a3, "left"),
        "P3": p3_module(a3),
    }))

    # context files come out of the command line itself
    rc = cli_main([
        "analyze", os.path.join(FIXTURES, "e1.json"), "A", "context",
        "--zeta", "z", "--out", os.path.join(FIXTURES, "e1-ctx.json"),
    ])
    assert rc == 0, "e1 context generation failed"
    print("wrote", os.path.join(FIXTURES, "e1-ctx.json"))
    rc = cli_main([
        "analyze", os.path.join(FIXTURES, "e2.json"), "P", "context",
        "--zeta", "z", "--out", os.path.join(FIXTURES, "e2-ctx.json"),
    ])
    assert rc == 0, "e2 context generation failed"
    print("wrote", os.path.join(FIXTURES, "e2-ctx.json"))

    # the degenerate context: same bimodules, both pairings zero
    with open(os.path.join(FIXTURES, "e1-ctx.json"), "r", encoding="utf-8") as fh:
        degenerate = json.load(fh)
    ctx = degenerate["contexts"]["ctx"]
    zero = "0/1"
    ctx["f"] = [[[zero for _ in v] for v in row] for row in ctx["f"]]
    ctx["g"] = [[[zero for _ in v] for v in row] for row in ctx["g"]]
    write("zero-f.json", degenerate)


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Smoke test for the rickart_py extension module.

Builds nothing itself: looks for the compiled cdylib under target/
(release first, then debug), stages it under a temp directory with the
importable name, and exercises the main surfaces end to end.

Run from the repository root:

    cargo build -p rickart-py --release
    python3 python/smoke_test.py
"""

import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def stage_module() -> None:
    candidates = [
        ROOT / "target" / "release" / "librickart_py.so",
        ROOT / "target" / "debug" / "librickart_py.so",
    ]
    lib = next((c for c in candidates if c.exists()), None)
    if lib is None:
        sys.exit(
            "librickart_py.so not found; run `cargo build -p rickart-py --release` first"
        )
    stage = pathlib.Path(tempfile.mkdtemp(prefix="rickart-py-"))
    shutil.copy2(lib, stage / "rickart_py.so")
    sys.path.insert(0, str(stage))


def check(label: str, ok: bool) -> None:
    print(f"{'ok  ' if ok else 'FAIL'} {label}")
    if not ok:
        sys.exit(1)


def main() -> None:
    stage_module()
    import rickart_py as rp

    names = rp.catalog_names()
    check("catalog has the named entries", "zmod4" in names and "m4z4" in names)
    check("check ids include thm-3", "thm-3" in rp.check_ids())

    z12 = rp.Ring("zmod12")
    check("zmod12 has 12 elements", len(z12) == 12)
    check("projections of Z12 are 0,1,4,9", z12.projections() == [0, 1, 4, 9])
    check("GRP(2) = (4, 2)", z12.grp(2) == (4, 2))
    check("GLP(3) = 9", z12.glp(3)[0] == 9)
    check("r(2) = {0,6}", z12.right_annihilator([2]) == [0, 6])
    chain, stab = z12.ann_chain(2)
    check("chain of 2 stabilizes at n=2", stab == 2 and chain[1] == [0, 3, 6, 9])
    check("meet(4,9) = 0 and join(4,9) = 1", z12.meet(4, 9) == 0 and z12.join(4, 9) == 1)

    z4 = rp.Ring("zmod4")
    rep = json.loads(z4.classify_json())
    props = {p["property"]: p["status"] for p in rep["properties"]}
    check(
        "Z4 is generalized Rickart but not Rickart",
        props["rickart"] == "false" and props["generalized_rickart"] == "true",
    )

    demo = rp.Ring("unitify-demo")
    check("unitify-demo has unity (0,1)", demo.unity() == demo.encode([0, 1]))
    ledger = json.loads(demo.prove_json(["thm-3"]))
    check("thm-3 passes on the demo", ledger[0]["status"] == "pass")

    m2 = rp.Ring("matrix(zmod(3), 2)")
    e11 = m2.encode([1, 0, 0, 0])
    f = m2.encode([2, 2, 2, 2])
    check("E11 and the all-twos matrix are inequivalent", m2.equivalent(e11, f) is None)
    check("center of M2(Z3) has 3 elements", m2.center().size() == 3)
    check("hasse dot renders", m2.hasse_dot().startswith("digraph hasse {"))

    m4 = rp.Ring("m4z4")
    check("m4z4 is witness-only", m4.is_witness_only())
    a = m4.encode([1, 1, 1, 1] + [0] * 12)
    check("row-of-ones has no GRP", m4.witness_grp_scan(a) is None)
    rep = json.loads(m4.classify_json(witness=a))
    props = {p["property"]: p["status"] for p in rep["properties"]}
    check(
        "witness classification refutes the weakly property",
        props["generalized_weakly_rickart"] == "false",
    )

    arith = rp.Ring("quaternion-z2")
    i, j, k = arith.encode([0, 1, 0, 0]), arith.encode([0, 0, 1, 0]), arith.encode([0, 0, 0, 1])
    check("i * j = k over Z2", arith.mul(i, j) == k)
    check("star fixes everything in characteristic 2", arith.star(i) == i)

    print("all smoke checks passed")


if __name__ == "__main__":
    main()

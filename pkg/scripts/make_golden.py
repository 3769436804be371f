"""Regenerate tests/golden/*.json.

The golden files freeze computed values and, for the link tables, the
orientation of each builtin diagram that reproduces the printed row.

    python scripts/make_golden.py tests/golden
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from orientation import first_match  # noqa: E402
from reference import EX35_TABLE, EX37_TABLE  # noqa: E402
from unchecked import unchecked_quiver_polynomial  # noqa: E402

from modquiver import catalog  # noqa: E402
from modquiver.diagram import TABLE_LINKS, builtin_link  # noqa: E402
from modquiver.module import module_polynomial  # noqa: E402
from modquiver.polynomial import parse_polynomial  # noqa: E402
from modquiver.quiver import module_quiver, quiver_polynomial  # noqa: E402


def table_entry(d, compute, printed):
    hit = first_match(d, compute, printed)
    mask, mirror = hit if hit else (0, False)
    return {
        "reverse_mask": mask,
        "mirror": mirror,
        "matches_printed": hit is not None,
        "polynomial": compute(d.oriented(mask, mirror)).to_text(),
    }


def main(outdir: str) -> None:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    endos = catalog.paper_endomorphisms()

    q, m, f = catalog.load_quandle("ex35"), catalog.load_module("ex35_z3"), endos["ex35"]
    ex35 = {}
    for name in TABLE_LINKS:
        compute = lambda d: quiver_polynomial(module_quiver(d, q, [f], m, jobs=1))
        ex35[name] = table_entry(builtin_link(name), compute, parse_polynomial(EX35_TABLE[name]))
    write(out / "ex35.json", {"quandle": "ex35", "module": "ex35_z3", "endo": "3,3,4,3,3",
                               "links": ex35})

    q, f = catalog.load_quandle("ex37"), endos["ex37"]
    m = catalog.load_module("ex37_z6")
    ex37 = {}
    for name in TABLE_LINKS:
        compute = lambda d: unchecked_quiver_polynomial(d, q, m, f)
        ex37[name] = table_entry(builtin_link(name), compute, parse_polynomial(EX37_TABLE[name]))
    write(out / "ex37_unchecked.json", {"quandle": "ex37", "module": "ex37_z6", "endo": "1,3,2",
                                         "note": "pushed vectors weighted without a coloring check",
                                         "links": ex37})

    q, f = catalog.load_quandle("ex36"), endos["ex36"]
    ex36 = {}
    for mod in ("ex36_z3", "ex36_z3_printed"):
        m = catalog.load_module(mod)
        ex36[mod] = {
            name: unchecked_or_strict(builtin_link(name), q, m, f) for name in ("L7n1", "L7n2")
        }
    write(out / "ex36.json", {"quandle": "ex36", "endo": "1,3,3,3", "modules": ex36})

    small = {}
    q, m = catalog.load_quandle("q1"), catalog.load_module("ex34_z4")
    d = builtin_link("T(4,2)")
    small["T(4,2)/q1/ex34_z4"] = {
        "count": len(module_quiver(d, q, [endos["q1"]], m, jobs=1).colorings),
        "quiver": quiver_polynomial(module_quiver(d, q, [endos["q1"]], m, jobs=1)).to_text(),
    }
    q, m = catalog.load_quandle("ex210"), catalog.load_module("ex210_z5")
    for name in ("3_1", "4_1"):
        small[f"{name}/ex210/ex210_z5"] = {"module": module_polynomial(builtin_link(name), q, m).to_text()}
    q, m = catalog.load_quandle("ex37"), catalog.load_module("ex37_z6")
    for name in ("3_1", "0_1"):
        wq = module_quiver(builtin_link(name), q, [endos["ex37"]], m, jobs=1, strict=False)
        small[f"{name}/ex37/ex37_z6"] = {"quiver": quiver_polynomial(wq).to_text()}
    write(out / "small.json", small)


def unchecked_or_strict(d, q, m, f):
    from modquiver.module import validate_module
    if validate_module(q, m).valid:
        return quiver_polynomial(module_quiver(d, q, [f], m, jobs=1)).to_text()
    return None


def write(path: Path, data) -> None:
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])

"""Regenerate the stored PD codes and native diagrams for the builtin links.

Maintainer tool only; needs ``spherogram`` (not a runtime dependency):

    pip install spherogram snappy_manifolds
    python scripts/export_pd_table.py src/modquiver/data/links
"""

import sys
from pathlib import Path

import spherogram

from modquiver.diagram import TABLE_LINKS, format_pd, pd_to_diagram, serialize_diagram

SOURCE_NAMES = {"3_1": "K3a1", "4_1": "K4a1"}


def main(outdir: str) -> None:
    out = Path(outdir)
    for name in ("3_1", "4_1") + TABLE_LINKS:
        link = spherogram.Link(SOURCE_NAMES.get(name, name))
        pd = [tuple(e + 1 for e in x) for x in link.PD_code()]
        (out / f"{name}.pd").write_text(format_pd(pd) + "\n")
        (out / f"{name}.link").write_text(serialize_diagram(pd_to_diagram(pd, name)))


if __name__ == "__main__":
    main(sys.argv[1])

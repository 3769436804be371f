"""Named quandles, modules and endomorphisms shipped with the package.

Names resolve to files under ``data/reference``; anything else is treated as
a filesystem path. A path that does not exist but whose stem is a known
name (``examples/q1.qnd``) falls back to the shipped copy.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .module import QuandleModule, parse_module
from .quandle import Quandle, parse_map, parse_quandle

QUANDLES = ("q1", "ex210", "ex35", "ex36", "ex37")
MODULES = ("ex210_z5", "ex34_z4", "ex35_z3", "ex36_z3", "ex36_z3_printed", "ex37_z6")


def _data_file(filename: str):
    return resources.files("modquiver").joinpath("data").joinpath("reference").joinpath(filename)


def data_dir() -> Path:
    return Path(str(_data_file("")))


def _resolve(source: str, names: tuple[str, ...]) -> str | None:
    if source in names:
        return source
    path = Path(source)
    if not path.exists() and path.stem in names:
        return path.stem
    return None


def quandle_text(source: str) -> str:
    name = _resolve(source, QUANDLES)
    if name:
        return _data_file(f"{name}.qnd").read_text("utf-8")
    return Path(source).read_text("utf-8")


def module_text(source: str) -> str:
    name = _resolve(source, MODULES)
    if name:
        return _data_file(f"{name}.mod").read_text("utf-8")
    return Path(source).read_text("utf-8")


def load_quandle(source: str) -> Quandle:
    return parse_quandle(quandle_text(source), name=Path(source).stem)


def load_module(source: str) -> QuandleModule:
    return parse_module(module_text(source))


def reference_endomorphisms() -> dict[str, tuple[int, ...]]:
    out = {}
    for line in _data_file("endomorphisms.txt").read_text("utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            name, spec = line.split()
            out[name] = parse_map(spec)
    return out

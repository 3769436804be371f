"""Command-line interface.

Exit status is 0 on success, 1 when the input is well-formed but fails a
domain check (not a quandle, not a module, not an endomorphism), and 2 for
usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import catalog
from .coloring import enumerate_colorings
from .diagram import (
    ALIASES,
    BUILTIN_NAMES,
    DiagramError,
    LinkDiagram,
    builtin_link,
    builtin_pd,
    parse_diagram,
    parse_pd,
    serialize_diagram,
    validate_diagram,
)
from .module import (
    ModuleError,
    QuandleModule,
    Ring,
    module_polynomial,
    search_modules,
    validate_module,
)
from .quandle import (
    Quandle,
    QuandleError,
    enumerate_endomorphisms,
    format_map,
    parse_map,
    read_quandle_table,
    validate_quandle,
)
from .quiver import QuiverError, default_jobs, dot_export, module_quiver, quiver_polynomial


class UsageError(Exception):
    pass


class DomainFailure(Exception):
    pass


def load_link(args) -> LinkDiagram:
    sources = [s for s in (args.link, args.link_file, args.pd_file) if s]
    if len(sources) != 1:
        raise UsageError("give exactly one of --link, --link-file, --pd-file")
    if args.link:
        d = builtin_link(args.link)
    elif args.link_file:
        d = parse_diagram(Path(args.link_file).read_text("utf-8"))
    else:
        path = Path(args.pd_file)
        d = parse_pd(path.read_text("utf-8"), name=path.stem)
    return d.oriented(args.reverse_components, args.mirror)


def load_quandle(args) -> Quandle:
    try:
        return catalog.load_quandle(args.quandle)
    except QuandleError as e:
        if "fails at" in str(e):
            raise DomainFailure(f"{args.quandle}: not a quandle: {e}") from None
        raise


def load_module(args, q: Quandle) -> QuandleModule:
    m = catalog.load_module(args.module)
    report = validate_module(q, m)
    if not report.valid:
        raise DomainFailure(
            f"{args.module}: not a module over this quandle: "
            + "; ".join(str(v) for v in report.violations)
        )
    return m


def load_endos(args, q: Quandle) -> list[tuple[int, ...]]:
    if not args.endo:
        raise UsageError("--endo is required")
    if args.endo == ["all"]:
        return enumerate_endomorphisms(q)
    maps = []
    for text in args.endo:
        try:
            f = parse_map(text)
        except QuandleError as e:
            raise UsageError(str(e)) from None
        if len(f) != q.order or any(not 0 <= v < q.order for v in f):
            raise UsageError(f"--endo {text}: expected {q.order} values in 1..{q.order}")
        maps.append(f)
    return maps


def emit_poly(p, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(p.to_json())
    return p.to_text()


def batch_table(
    links: Sequence[str],
    q: Quandle,
    m: QuandleModule,
    endo: Sequence[int],
    orientations: dict[str, tuple[int, bool]] | None = None,
    jobs: int = 1,
) -> list[tuple[str, str]]:
    """Quiver polynomial rows for a list of builtin links.

    ``orientations`` maps a link name to a (reversal mask, mirror) pair.
    """
    rows = []
    for name in links:
        mask, mirror = (orientations or {}).get(name, (0, False))
        try:
            d = builtin_link(name).oriented(mask, mirror)
            p = quiver_polynomial(module_quiver(d, q, [endo], m, jobs=jobs))
        except (DiagramError, QuandleError, QuiverError, ModuleError) as e:
            raise DomainFailure(f"{name}: {e}") from None
        rows.append((name, p.to_text()))
    return rows


# -- subcommands -------------------------------------------------------------

def cmd_validate_quandle(args) -> int:
    table = read_quandle_table(catalog.quandle_text(args.quandle))
    report = validate_quandle(table)
    print(f"quandle: {'yes' if report.is_quandle else 'no'}")
    print(f"kei: {'yes' if report.is_kei else 'no'}")
    for v in report.violations:
        print(f"violation: {v}")
    return 0 if report.is_quandle else 1


def cmd_validate_module(args) -> int:
    q = load_quandle(args)
    m = catalog.load_module(args.module)
    report = validate_module(q, m)
    print(f"module: {'yes' if report.valid else 'no'} ({m.ring})")
    for v in report.violations:
        print(f"violation: {v}")
    return 0 if report.valid else 1


def cmd_links(args) -> int:
    if args.action == "list":
        for name in BUILTIN_NAMES:
            d = builtin_link(name)
            print(f"{name}\tcrossings={len(d.crossings)}\tcomponents={d.component_count}")
        for alias, target in sorted(ALIASES.items()):
            print(f"{alias}\t-> {target}")
        return 0
    if not args.name:
        raise UsageError("links show needs a link name")
    if args.pd:
        pd = builtin_pd(args.name)
        if pd is None:
            raise UsageError(f"no PD code stored for {args.name}")
        sys.stdout.write(pd)
        return 0
    sys.stdout.write(serialize_diagram(builtin_link(args.name)))
    return 0


def cmd_validate_link(args) -> int:
    d = load_link(args)
    report = validate_diagram(d)
    print(f"valid: {'yes' if report.valid else 'no'}")
    for p in report.problems:
        print(f"problem: {p}")
    return 0 if report.valid else 1


def cmd_colorings(args) -> int:
    d, q = load_link(args), load_quandle(args)
    cs = enumerate_colorings(d, q)
    if args.format == "json":
        print(json.dumps([[x + 1 for x in c] for c in cs]))
    else:
        for c in cs:
            print(" ".join(str(x + 1) for x in c))
    return 0


def cmd_count(args) -> int:
    d, q = load_link(args), load_quandle(args)
    n = len(enumerate_colorings(d, q))
    print(json.dumps({"count": n}) if args.format == "json" else n)
    return 0


def cmd_endos(args) -> int:
    q = load_quandle(args)
    es = enumerate_endomorphisms(q)
    if args.format == "json":
        print(json.dumps([[x + 1 for x in f] for f in es]))
    else:
        for f in es:
            print(format_map(f))
    return 0


def cmd_modules(args) -> int:
    q = load_quandle(args)
    ring = Ring.parse(args.ring)
    if not ring.finite:
        raise UsageError("module search needs a finite modulus")
    found = search_modules(q, ring.modulus, args.max)
    if args.format == "json":
        print(json.dumps([{"t": m.t, "s": m.s, "modulus": ring.modulus} for m in found]))
    else:
        for i, m in enumerate(found):
            if i:
                print()
            sys.stdout.write(m.to_text())
    return 0


def cmd_poly(args) -> int:
    d, q = load_link(args), load_quandle(args)
    m = load_module(args, q)
    if args.kind == "module":
        p = module_polynomial(d, q, m)
    else:
        endos = load_endos(args, q)
        wq = module_quiver(d, q, endos, m, jobs=args.jobs, strict=not args.allow_non_endomorphism)
        p = quiver_polynomial(wq)
    print(emit_poly(p, args.format))
    return 0


def cmd_quiver(args) -> int:
    d, q = load_link(args), load_quandle(args)
    m = load_module(args, q)
    endos = load_endos(args, q)
    wq = module_quiver(d, q, endos, m, jobs=args.jobs, strict=not args.allow_non_endomorphism)
    sys.stdout.write(dot_export(wq, labels=args.labels, name=d.name))
    return 0


def cmd_table(args) -> int:
    q = load_quandle(args)
    m = load_module(args, q)
    endos = load_endos(args, q)
    if len(endos) != 1:
        raise UsageError("table takes a single --endo")
    links = [s for s in args.links.split(",") if s] if args.links else []
    rows = batch_table(links, q, m, endos[0], jobs=args.jobs)
    if args.format == "json":
        print(json.dumps([{"link": n, "polynomial": p} for n, p in rows]))
    else:
        for n, p in rows:
            print(f"{n}\t{p}")
    return 0


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modquiver",
        description="Quandle colorings, module polynomials and module quiver polynomials of links.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def link_opts(p):
        p.add_argument("--link", help="builtin link name (see 'links list')")
        p.add_argument("--link-file", help="diagram in the native crossing-list format")
        p.add_argument("--pd-file", help="diagram as a PD code")
        p.add_argument("--reverse-components", type=int, default=0, metavar="MASK",
                       help="bitmask of components whose orientation is reversed")
        p.add_argument("--mirror", action="store_true", help="use the mirror image")

    def common(p, quandle=True, module=False, endo=False, fmt=("text", "json")):
        if quandle:
            p.add_argument("--quandle", required=True, help="quandle file or builtin name")
        if module:
            p.add_argument("--module", required=True, help="module file or builtin name")
        if endo:
            p.add_argument("--endo", action="append",
                           help="1-based map such as 2,4,3,1 (repeatable) or 'all'")
            p.add_argument("--allow-non-endomorphism", action="store_true",
                           help="accept maps that only preserve this diagram's colorings")
        p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--jobs", type=int, default=default_jobs(),
                       help="worker processes for weight computations")

    p = sub.add_parser("validate-quandle", help="check the quandle axioms")
    p.add_argument("quandle")
    p.set_defaults(func=cmd_validate_quandle)

    p = sub.add_parser("validate-module", help="check the module axioms")
    common(p, module=True)
    p.set_defaults(func=cmd_validate_module)

    p = sub.add_parser("validate-link", help="check a diagram")
    link_opts(p)
    p.set_defaults(func=cmd_validate_link)

    p = sub.add_parser("links", help="list or show builtin diagrams")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.add_argument("--pd", action="store_true", help="show the stored PD code")
    p.set_defaults(func=cmd_links)

    for name, func, help_ in (
        ("colorings", cmd_colorings, "list colorings"),
        ("count", cmd_count, "quandle counting invariant"),
    ):
        p = sub.add_parser(name, help=help_)
        link_opts(p)
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("endos", help="list quandle endomorphisms")
    common(p)
    p.set_defaults(func=cmd_endos)

    p = sub.add_parser("modules", help="search for quandle modules")
    p.add_argument("action", choices=("search",))
    common(p)
    p.add_argument("--ring", required=True, help="modulus n for Z_n")
    p.add_argument("--max", type=int, default=None, help="stop after this many modules")
    p.set_defaults(func=cmd_modules)

    p = sub.add_parser("poly", help="module polynomial or module quiver polynomial")
    p.add_argument("kind", choices=("module", "quiver"))
    link_opts(p)
    common(p, module=True, endo=True)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("quiver", help="module quiver as DOT")
    link_opts(p)
    common(p, module=True, endo=True, fmt=("dot",))
    p.add_argument("--labels", choices=("weight", "coloring", "both", "none"), default="weight")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("table", help="quiver polynomials for several builtin links")
    common(p, module=True, endo=True)
    p.add_argument("--links", default=",".join(BUILTIN_NAMES[4:]),
                   help="comma-separated builtin names (default: the 2-7 crossing link table)")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except DomainFailure as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (QuandleError, QuiverError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (UsageError, DiagramError, ModuleError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

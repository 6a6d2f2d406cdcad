"""Command line: ``cell24 analyze|verify|cycles``.

Exit status 1 means the input could not be parsed or validated, 2 means a
``verify`` expectation failed.  Inconclusive coset enumerations are reported
with status ``inconclusive`` and do not change the exit status.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib.resources import files
from pathlib import Path

from .cusp import analyze_cusps, cusp_string
from .cycles import edge_cycles, handle_counts, is_orientable, ridge_cycles
from .errors import Cell24Error
from .filling import certify, fill, parse_filling
from .groups import DEFAULT_CAP
from .pairing import format_word, orientation_character, parse_manifold
from .polytope import build_polytope


def read_input(path: str) -> tuple[str, str]:
    """Text and display name of ``path``; bare names of shipped data files also work."""
    p = Path(path)
    if p.exists():
        return p.read_text(), str(p)
    shipped = files("cell24.data").joinpath(p.name)
    if shipped.is_file():
        return shipped.read_text(), p.name
    raise FileNotFoundError(path)


def build_report(desc, fill_text=None, fill_source=None, double_cover=False, cap=DEFAULT_CAP) -> dict:
    P = build_polytope()
    cycles = ridge_cycles(desc)
    edges = edge_cycles(desc)
    handles = handle_counts(desc, cycles, edges)
    reports = analyze_cusps(desc)
    ordered, sorted_ = cusp_string(reports)
    cusps = []
    for r in reports:
        cusps.append({
            "class": r.vertex_class.ordinal,
            "members": [str(P.vertices[v]) for v in r.vertex_class.members],
            "type": r.flat_type.code,
            "wolf": r.flat_type.wolf,
            "orientable": r.flat_type.orientable,
            "holonomy": r.flat_type.holonomy,
            "h1": str(r.h1),
            "lattice": [[str(x) for x in v] for v in r.group.lattice],
            "generators": [{"word": format_word(w), **a.to_dict()} for w, a in r.group.generators],
        })
    report = {
        "manifold": desc.name,
        "cusps": cusps,
        "cusp_string": {"class_order": ordered, "sorted": sorted_},
        "cycles": {
            "ridges": len(P.ridges),
            "ridge_cycles": len(cycles),
            "ridge_cycle_lengths": sorted({len(c) for c in cycles}),
            "relators": [format_word(c.word) for c in cycles],
            "edges": len(P.edges),
            "edge_classes": len(edges),
        },
        "handles": list(handles.as_tuple()),
        "chi": handles.chi,
        "orientable": is_orientable(desc),
        "orientation_character": orientation_character(desc),
        "certificate": None,
    }
    if fill_text is not None:
        spec = parse_filling(fill_text, desc, fill_source)
        filled = fill(desc, spec, cycles=cycles)
        cert = certify(desc, filled, cap, double_cover=double_cover)
        report["certificate"] = {
            "fibres": [f.to_dict() for f in filled.fibres],
            "relators": len(filled.presentation.relators),
            "handles": list(filled.handles.as_tuple()),
            **cert.to_dict(),
        }
    return report


def _order_text(d):
    if d is None:
        return "-"
    return f"{d['order']}" if d["status"] == "complete" else f"inconclusive (cap {d['cap']})"


def format_text(report: dict) -> str:
    out = [f"manifold {report['manifold']}", ""]
    out.append("[cycles]")
    c = report["cycles"]
    out.append(f"  ridges {c['ridges']} in {c['ridge_cycles']} cycles of length "
               + "/".join(map(str, c["ridge_cycle_lengths"])))
    out.append(f"  edges {c['edges']} in {c['edge_classes']} classes")
    out.append(f"  handles {tuple(report['handles'])}  chi {report['chi']}")
    out.append(f"  orientable {report['orientable']}")
    signs = " ".join(f"{g}{'+' if s > 0 else '-'}" for g, s in report["orientation_character"].items())
    out.append(f"  orientation character {signs}")
    out.append("")
    out.append("[cusps]")
    for cu in report["cusps"]:
        members = cu["members"] if len(cu["members"]) <= 4 else [f"{len(cu['members'])} half vertices"]
        out.append(f"  class {cu['class']}: {cu['type']} ({cu['wolf']})  H1 {cu['h1']}  "
                   f"holonomy {cu['holonomy']}  members {', '.join(members)}")
        for g in cu["generators"]:
            lin = "; ".join(" ".join(row) for row in g["linear"])
            out.append(f"    {g['word']:<24} [{lin}] + ({', '.join(g['translation'])})")
    cs = report["cusp_string"]
    out.append(f"  cusp string {cs['class_order']}  sorted {cs['sorted']}")
    cert = report["certificate"]
    if cert is not None:
        out.append("")
        out.append("[filling]")
        for f in cert["fibres"]:
            status = "ok" if f["valid"] else "FAILED: " + ", ".join(f["failures"])
            out.append(f"  class {f['class']} fibre {f['word']:<8} translation ({', '.join(f['translation'] or [])}) {status}")
        out.append(f"  relators {cert['relators']}  handles {tuple(cert['handles'])}  chi {cert['chi']}")
        out.append(f"  group order {_order_text(cert['group_order'])}  H1 {cert['h1']}")
        for cv in cert["covers"]:
            chi = " ".join(g for g, s in cv["character"].items() if s < 0)
            out.append(f"  double cover (character -1 on {chi}): order {_order_text(cv['order'])}  "
                       f"H1 {cv['h1']}  chi {cv['chi']}  link components {cv['link_components']}")
        for note in cert["notes"]:
            out.append(f"  note: {note}")
    return "\n".join(out) + "\n"


def _load(path):
    text, name = read_input(path)
    return parse_manifold(text, source=name)


def cmd_analyze(args) -> int:
    desc = _load(args.manifold)
    fill_text = fill_source = None
    if args.fill:
        fill_text, fill_source = read_input(args.fill)
    report = build_report(desc, fill_text, fill_source, args.double_cover, args.max_cosets)
    text = json.dumps(report, indent=2) + "\n" if args.format == "json" else format_text(report)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    desc = _load(args.manifold)
    ordered, sorted_ = cusp_string(analyze_cusps(desc))
    expect = "".join(sorted(args.expect_lt.strip().upper()))
    if sorted_ == expect:
        print(f"ok: {desc.name} cusps {ordered} (sorted {sorted_})")
        return 0
    print(f"mismatch: {desc.name} cusps sorted {sorted_}, expected {args.expect_lt}", file=sys.stderr)
    return 2


def cmd_cycles(args) -> int:
    desc = _load(args.manifold)
    for i, c in enumerate(ridge_cycles(desc)):
        print(f"{i:2d}  {c.describe()}    relator {format_word(c.word)}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cell24", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for a manifold file")
    a.add_argument("manifold")
    a.add_argument("--fill", help="filling file with one fibre per cusp")
    a.add_argument("--double-cover", action="store_true", help="also certify index-2 covers")
    a.add_argument("--max-cosets", type=int, default=DEFAULT_CAP)
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.add_argument("--out", help="write the report here instead of stdout")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="compare the sorted cusp string with a census entry")
    v.add_argument("manifold")
    v.add_argument("--expect-lt", required=True)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cycles", help="print canonical ridge cycles")
    c.add_argument("manifold")
    c.set_defaults(func=cmd_cycles)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Cell24Error, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

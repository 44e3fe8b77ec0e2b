"""``pclatt`` command line.

Exit codes: 0 success, 1 a law failed inside its hypothesis class, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from pclatt import classify as cl
from pclatt.congruence import BinRel, check_theta_theorem, class_of_top, enumerate_congruences, theta_of
from pclatt.deduction import ds_closure, enumerate_deductive_systems
from pclatt.errors import HypothesisViolated, PclattError
from pclatt.genlat import filter_family, generate_all
from pclatt.implication import PCAlgebra
from pclatt.lattice import FiniteLattice
from pclatt.laws import REGISTRY, check_law, get_law
from pclatt.lawsuite import format_counterexample, run_suite
from pclatt.pseudo import dense_elements, try_pseudocomplement_table
from pclatt.textio import export_dot, load_lattice, serialize_lattice


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, ensure_ascii=False, indent=1))
    else:
        print(text)


def _verdict_line(name: str, v) -> str:
    line = f"{name}: {'yes' if v.holds else 'no'}"
    if v.counterexample:
        line += "  " + format_counterexample(v.counterexample)
    return line


def cmd_check(args) -> int:
    L = load_lattice(args.file)
    star = try_pseudocomplement_table(L)
    verdicts = {"pseudocomplemented": cl.is_pseudocomplemented(L), "distributive": cl.is_distributive(L)}
    if star is not None:
        verdicts["stone-identity"] = cl.satisfies_stone_identity(L, star)
        verdicts["stone"] = cl.is_stone(L, star)
    verdicts["brouwerian"] = cl.is_brouwerian(L)
    lines = [f"bounded: yes  (0 = {L.label(L.bottom)}, 1 = {L.label(L.top)})"]
    for name, v in verdicts.items():
        lines.append(_verdict_line(name, v))
    if star is None:
        lines.insert(3, "stone-identity: n/a (no pseudocomplement)")
        lines.insert(4, "stone: no (no pseudocomplement)")
    else:
        lines.append("dense: " + L.format_set(dense_elements(L, star)))
    data = {"bounded": {"holds": True, "counterexample": None}}
    data.update({k: {"holds": v.holds, "counterexample": v.counterexample} for k, v in verdicts.items()})
    _emit(args, "\n".join(lines), data)
    return 0


def _grid(L: FiniteLattice, symbol: str, table) -> str:
    w = max(len(symbol), *(len(s) for s in L.labels))
    head = f"{symbol:<{w}} | " + " ".join(f"{s:<{w}}" for s in L.labels)
    lines = [head.rstrip(), "-" * (w + 1) + "+" + "-" * (len(head) - w - 2)]
    for x in L.elements:
        lines.append((f"{L.label(x):<{w}} | " + " ".join(f"{L.label(table(x, y)):<{w}}" for y in L.elements)).rstrip())
    return "\n".join(lines)


def cmd_table(args) -> int:
    L = load_lattice(args.file)
    p = PCAlgebra(L)
    lab = L.label
    if args.op == "star":
        w = max(3, *(len(s) for s in L.labels))
        lines = [f"{'x':<{w}} {'x*':<{w}} x**"]
        lines += [f"{lab(x):<{w}} {lab(p.star(x)):<{w}} {lab(p.dstar(x))}" for x in L.elements]
        data = {lab(x): [lab(p.star(x)), lab(p.dstar(x))] for x in L.elements}
        _emit(args, "\n".join(lines), data)
        return 0
    fn, sym = (p.arrow, "→") if args.op == "arrow" else (p.darrow, "⇒")
    data = {lab(x): {lab(y): lab(fn(x, y)) for y in L.elements} for x in L.elements}
    _emit(args, _grid(L, sym, fn), data)
    return 0


def cmd_laws(args) -> int:
    L = load_lattice(args.file)
    p = PCAlgebra(L)
    classes = cl.classify(L, p.star_table)
    laws = [get_law(i) for i in args.law] if args.law else list(REGISTRY.values())
    lines, data, status = [], [], 0
    for law in laws:
        if not classes.meets(law.evaluable):
            if args.law:
                lines.append(f"skip  {law.id:20} needs a {law.evaluable.value} lattice")
            continue
        if not args.law and not args.all and not classes.meets(law.hypothesis):
            continue
        v = check_law(p, law, classes)
        tag = "PASS" if v.holds else ("FAIL" if v.hypothesis_met else "info")
        line = f"{tag:5} {law.id:20} {law.statement if len(law.statement) < 70 else law.anchor}"
        if not v.hypothesis_met:
            line += f"  (hypothesis {law.hypothesis.value} not met)"
        if v.counterexample:
            line += "\n      " + format_counterexample(v.counterexample)
        lines.append(line)
        data.append({"law": law.id, "hypothesis": law.hypothesis.value,
                     "hypothesis_met": v.hypothesis_met, "holds": v.holds,
                     "counterexample": v.counterexample})
        if v.hypothesis_met and not v.holds:
            status = 1
    _emit(args, "\n".join(lines), data)
    return status


def cmd_ds(args) -> int:
    L = load_lattice(args.file)
    p = PCAlgebra(L)
    if args.closure is not None:
        A = ds_closure(p, L.parse_set(args.closure), args.kind)
        _emit(args, L.format_set(A), sorted(L.label(x) for x in A))
        return 0
    systems = enumerate_deductive_systems(p, args.kind)
    _emit(args, "\n".join(L.format_set(A) for A in systems),
          [[L.label(x) for x in sorted(A)] for A in systems])
    return 0


def _relation_text(L: FiniteLattice, rel: BinRel) -> tuple[str, object]:
    if rel.is_reflexive() and rel.is_symmetric() and rel.is_transitive():
        P = rel.classes()
        return P.format(L), [[L.label(x) for x in b] for b in P.blocks]
    return rel.format_pairs(L), [[L.label(x), L.label(y)] for x, y in sorted(rel.pairs)]


def cmd_cong(args) -> int:
    L = load_lattice(args.file)
    p = PCAlgebra(L)
    if args.theta is None:
        congs = enumerate_congruences(p)
        _emit(args, "\n".join(P.format(L) for P in congs),
              [[[L.label(x) for x in b] for b in P.blocks] for P in congs])
        return 0
    A = L.parse_set(args.theta)
    rel = theta_of(p, A)
    text, rel_data = _relation_text(L, rel)
    lines = [f"Θ({L.format_set(A)}): {text}"]
    data = {"A": sorted(L.label(x) for x in A), "relation": rel_data}
    try:
        r = check_theta_theorem(p, A)
    except HypothesisViolated as exc:
        lines.append(f"theorem not applicable: {exc}")
        lines.append("[1]Θ(A): " + L.format_set(class_of_top(L, rel)))
        data["theorem"] = None
        _emit(args, "\n".join(lines), data)
        return 0
    report = {
        "reflexive": r.reflexive,
        "symmetric": r.symmetric,
        "compatible": r.compatible,
        "top_class": L.format_set(r.top_class),
        "expected_top_class": L.format_set(r.expected_top_class),
        "meet_closed": r.meet_closed,
        "transitive": r.transitive,
        "ok": r.ok,
    }
    for k, v in report.items():
        lines.append(f"{k}: {v if isinstance(v, str) else ('yes' if v else 'no')}")
    if r.compatibility_failure:
        lines.append(f"compatibility failure: {r.compatibility_failure}")
    data["theorem"] = report
    _emit(args, "\n".join(lines), data)
    return 0 if r.ok else 1


def cmd_gen(args) -> int:
    fam = generate_all(args.n, dedup=args.dedup)
    if args.filter:
        fam = filter_family(fam, args.filter)
    lattices = list(fam)
    if args.format == "json":
        print(json.dumps([
            {"elements": list(L.labels), "covers": [[L.label(x), L.label(y)] for x, y in L.covers()]}
            for L in lattices
        ], indent=1))
    else:
        sys.stdout.write("---\n".join(serialize_lattice(L) for L in lattices))
    return 0


def cmd_suite(args) -> int:
    report = run_suite(args.max_n, laws=args.law or None, fixtures=not args.no_fixtures)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.render_text(verbose=args.verbose))
    return 1 if report.fatal else 0


def cmd_export(args) -> int:
    L = load_lattice(args.file)
    sys.stdout.write(export_dot(L) if args.to == "dot" else serialize_lattice(L))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(
        prog="pclatt",
        description="Pseudocomplemented lattices, their implications and deductive systems.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    FILE_HELP = "lattice file, '-' for stdin, or a fixture name (fig1a, fig1b, fig1c)"

    s = sub.add_parser("check", parents=[common], help="classify a lattice")
    s.add_argument("file", help=FILE_HELP)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("table", parents=[common], help="print the *, → or ⇒ table")
    s.add_argument("--op", choices=["star", "arrow", "darrow"], required=True)
    s.add_argument("file", help=FILE_HELP)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("laws", parents=[common], help="check registered laws on one lattice")
    s.add_argument("file", help=FILE_HELP)
    s.add_argument("--law", action="append", help="law id (repeatable)")
    s.add_argument("--all", action="store_true", help="also laws whose hypothesis is not met")
    s.set_defaults(func=cmd_laws)

    s = sub.add_parser("ds", parents=[common], help="deductive systems")
    s.add_argument("file", help=FILE_HELP)
    s.add_argument("--kind", choices=["first", "second"], required=True)
    s.add_argument("--closure", metavar="E1,E2,...", help="print the least system containing these")
    s.set_defaults(func=cmd_ds)

    s = sub.add_parser("cong", parents=[common], help="congruences and Θ(A)")
    s.add_argument("file", help=FILE_HELP)
    s.add_argument("--theta", metavar="E1,E2,...", help="second-kind deductive system A")
    s.set_defaults(func=cmd_cong)

    s = sub.add_parser("gen", parents=[common], help="generate all lattices of a size")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--dedup", action="store_true", help="one lattice per isomorphism class")
    s.add_argument("--filter", help="comma-separated tags, e.g. stone or stone-identity,not-distributive")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("suite", parents=[common], help="run the law campaign")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--json", metavar="PATH", help="also write the JSON report here")
    s.add_argument("--law", action="append", help="restrict to these law ids")
    s.add_argument("--no-fixtures", action="store_true")
    s.add_argument("--verbose", action="store_true", help="list passing checks too")
    s.set_defaults(func=cmd_suite)

    s = sub.add_parser("export", parents=[common], help="export a lattice")
    s.add_argument("file", help=FILE_HELP)
    s.add_argument("--to", choices=["dot", "text"], default="dot")
    s.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "format"):
        args.format = "text"
    try:
        return args.func(args)
    except (PclattError, OSError, ValueError) as exc:
        print(f"pclatt: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

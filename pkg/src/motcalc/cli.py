"""Command-line interface.

Subcommands::

    motcalc decompose [DOC] [--base point] [--fibre "Gr 2 4"]... [--format table|json]
                      [--higher-chow TABLE]
    motcalc gp LETTER RANK [--levi 1,3] [--format table|json]
    motcalc higher-chow TABLE [DOC] [--fibre ...]... [--format table|json]
    motcalc check SUITE [--bound N] [--seed S] [--summary-json FILE]

Exit codes: 0 success, 1 domain or parse error, 2 orbit cap exceeded,
3 internal invariant violation or failed verification.
"""

from __future__ import annotations

import argparse
import sys

from . import documents, roots, verify
from .cellular import fibre_dimension, format_fibre, parse_fibre
from .errors import MotcalcError, ParseError
from .leray_hirsch import FreeChowBase, Point, RankTable, TowerSpec, higher_chow_table, tower_chow_ranks, tower_motive
from .tate import TateMotive, render

EXIT_OK, EXIT_DOMAIN, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3

LEVI_HELP = """\
Simple roots are numbered by Bourbaki's convention:
  A_n  1-2-...-n            B_n  1-...-(n-1)=>n (alpha_n short)
  C_n  1-...-(n-1)<=n       D_n  1-...-(n-2) branching to n-1 and n
  E_n  1-3-4-...-n, 2 on 4  F_4  1-2=>3-4       G_2  1<=2 (alpha_1 short)
--levi lists the simple roots generating the Levi factor of P: empty is the
Borel (full flag variety), all roots is G itself.  Gr(d,n) is GP A n-1 with
every root except d in the Levi."""


class _Parser(argparse.ArgumentParser):
    # usage errors are domain errors (exit 1); exit 2 is reserved for the orbit cap
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _inline_fibres(texts):
    out = []
    for i, text in enumerate(texts or [], 1):
        try:
            out.append(parse_fibre(text))
        except ParseError as exc:
            raise ParseError(f"--fibre #{i} {text!r}: {exc.reason}", exc.line, exc.column) from None
    return out


def _tower_from_args(args) -> TowerSpec:
    if args.document is not None:
        tower = documents.parse_tower_document(_read(args.document))
        extra = _inline_fibres(args.fibre)
        return TowerSpec(tower.base, tower.fibres + tuple(extra))
    if args.base not in (None, "point"):
        base = documents.parse_base_text(args.base)
    else:
        base = Point()
    return TowerSpec(base, _inline_fibres(args.fibre))


def decompose(tower: TowerSpec, higher=None, max_orbit=None) -> dict:
    """Result document for one tower; values are canonical and stringified."""
    ranks = tower_chow_ranks(tower, max_orbit)
    motive = None if isinstance(tower.base, FreeChowBase) else tower_motive(tower, max_orbit)
    fdims = [fibre_dimension(f) for f in tower.fibres]
    if isinstance(tower.base, Point):
        base_dim = 0
    elif isinstance(tower.base, FreeChowBase):
        base_dim = tower.base.dim
    else:
        base_dim = max(tower.base.motive.top_twist, 0)
    doc = {
        "tower": documents.tower_to_obj(tower),
        "fibre_dimensions": fdims,
        "dimension": base_dim + sum(fdims),
        "motive": None if motive is None else {str(n): str(m) for n, m in motive.terms()},
        "chow_ranks": [str(r) for r in ranks],
        "poincare": render(TateMotive.from_coefficients(ranks)),
    }
    if higher is not None:
        doc["higher_chow"] = documents.rank_table_to_obj(higher_chow_table(higher, tower.fibres, max_orbit))["entries"]
    return doc


def _fmt_table_rows(header, rows):
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(r, widths)) for r in [header, *rows]]
    return lines


def render_rank_table(table: RankTable) -> list[str]:
    """Rows q ascending, columns p ascending."""
    if not table.items():
        return ["(empty)"]
    ps = range(max(p for (p, _), _ in table.items()) + 1)
    header = ["q\\p", *ps]
    rows = [[q, *(table[p, q] for p in ps)] for q in table.q_values()]
    return _fmt_table_rows(header, rows)


def render_decomposition(doc) -> str:
    tower = doc["tower"]
    base = tower["base"]
    if base == "point":
        base_txt = "point"
    elif "tate" in base:
        base_txt = "tate " + render(TateMotive({int(k): int(v) for k, v in base["tate"].items()}))
    else:
        base_txt = f"chow ranks [{', '.join(base['chow_ranks'])}], dim {base['dim']}"
    lines = [
        f"base:        {base_txt}",
        f"fibres:      {' | '.join(tower['fibres']) or '(none)'}",
        f"fibre dims:  {' '.join(map(str, doc['fibre_dimensions'])) or '-'}",
        f"dimension:   {doc['dimension']}",
    ]
    if doc["motive"] is not None:
        mult = " ".join(f"{k}:{v}" for k, v in sorted(doc["motive"].items(), key=lambda kv: int(kv[0])))
        lines.append(f"motive:      {mult or '0'}")
    lines.append(f"poincare:    {doc['poincare']}")
    lines.append("")
    lines += _fmt_table_rows(["p", "rank CH^p"], [[p, r] for p, r in enumerate(doc["chow_ranks"])])
    if "higher_chow" in doc:
        lines.append("")
        lines.append("higher Chow ranks CH^p(X, q):")
        table = RankTable({(p, q): int(r) for p, q, r in doc["higher_chow"]})
        lines += render_rank_table(table)
    return "\n".join(lines) + "\n"


def cmd_decompose(args, out):
    tower = _tower_from_args(args)
    higher = documents.parse_rank_table(_read(args.higher_chow)) if args.higher_chow else None
    doc = decompose(tower, higher, args.max_orbit)
    out.write(documents.dumps(doc) if args.format == "json" else render_decomposition(doc))
    return EXIT_OK


def _levi(text):
    text = (text or "").strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"--levi expects a comma-separated list of simple root indices, got {text!r}") from None


def cmd_gp(args, out):
    rs = roots.build_root_system(args.letter, args.rank)
    p = roots.ParabolicSpec(_levi(args.levi)).validate(rs)
    prof = roots.coset_lengths(rs, p, args.max_orbit)
    motive = TateMotive(prof.lengths)
    doc = {
        "type": str(rs),
        "levi": sorted(p.levi_simple_roots),
        "total": str(prof.total),
        "dimension": prof.dimension,
        "lengths": {str(k): str(v) for k, v in sorted(prof.lengths.items())},
        "motive": render(motive),
    }
    if args.format == "json":
        out.write(documents.dumps(doc))
        return EXIT_OK
    lines = [
        f"group:       {rs}",
        f"levi:        {','.join(map(str, doc['levi'])) or '(empty: Borel)'}",
        f"|W^P|:       {prof.total}",
        f"dim G/P:     {prof.dimension}",
        f"motive:      {doc['motive']}",
        "",
        *_fmt_table_rows(["length", "count"], [[k, v] for k, v in sorted(prof.lengths.items())]),
    ]
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_higher_chow(args, out):
    table = documents.parse_rank_table(_read(args.table))
    if args.document is not None:
        fibres = documents.parse_tower_document(_read(args.document)).fibres + tuple(_inline_fibres(args.fibre))
    else:
        fibres = tuple(_inline_fibres(args.fibre))
    result = higher_chow_table(table, fibres, args.max_orbit)
    if args.format == "json":
        doc = {"fibres": [format_fibre(f) for f in fibres], **documents.rank_table_to_obj(result)}
        out.write(documents.dumps(doc))
    else:
        out.write("\n".join(render_rank_table(result)) + "\n")
    return EXIT_OK


def cmd_check(args, out):
    rep = verify.run_suite(args.suite, args.bound, args.seed, args.max_orbit)
    out.write(rep.render() + "\n")
    if args.summary_json:
        with open(args.summary_json, "w", encoding="utf-8") as fh:
            fh.write(documents.dumps(rep.summary()))
    return EXIT_OK if rep.passed else EXIT_INTERNAL


def _positive_int(text):
    try:
        value = int(text.replace("_", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser():
    parser = _Parser(prog="motcalc", description="Pure Tate motives of fibre-bundle towers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt=True):
        p.add_argument(
            "--max-orbit", type=_positive_int, default=None,
            help=f"Weyl orbit cap (default: ${roots.MAX_ORBIT_ENV} or {roots.DEFAULT_MAX_ORBIT})",
        )
        if fmt:
            p.add_argument("--format", choices=("table", "json"), default="table")

    d = sub.add_parser("decompose", help="motive and Chow ranks of a tower",
                       formatter_class=argparse.RawDescriptionHelpFormatter,
                       epilog="Fibre syntax: 'P n', 'Gr d n', 'GP <letter> <rank> levi=<list>', 'cells d1,d2,...'\n\n" + LEVI_HELP)
    d.add_argument("document", nargs="?", help="tower document (JSON), '-' for stdin")
    d.add_argument("--base", default=None, help="'point' (default) or a JSON base object")
    d.add_argument("--fibre", action="append", help="fibre descriptor, repeatable, appended in order")
    d.add_argument("--higher-chow", metavar="TABLE", help="base higher Chow rank table (JSON)")
    common(d)
    d.set_defaults(func=cmd_decompose)

    g = sub.add_parser("gp", help="Tate decomposition of G/P",
                       formatter_class=argparse.RawDescriptionHelpFormatter, epilog=LEVI_HELP)
    g.add_argument("letter")
    g.add_argument("rank", type=int)
    g.add_argument("--levi", default="", help="comma-separated simple roots in the Levi (default: empty)")
    common(g)
    g.set_defaults(func=cmd_gp)

    h = sub.add_parser("higher-chow", help="convolve a base higher Chow rank table with fibres")
    h.add_argument("table", help="rank table document (JSON), '-' for stdin")
    h.add_argument("document", nargs="?", help="tower document whose fibres are used")
    h.add_argument("--fibre", action="append")
    common(h)
    h.set_defaults(func=cmd_higher_chow)

    c = sub.add_parser("check", help="run a verification suite")
    c.add_argument("suite", choices=verify.SUITES)
    c.add_argument("--bound", type=_positive_int, default=6)
    c.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    c.add_argument("--summary-json", metavar="FILE", help="also write the summary document here")
    common(c, fmt=False)
    c.set_defaults(func=cmd_check)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except MotcalcError as exc:
        print(f"motcalc: error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

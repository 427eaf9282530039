"""``weylorder`` command line.

Exit codes: 0 success, 1 usage error, 2 computation error (budget or
bounds), 3 verification failure.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from . import closed_forms, forests, graphs, qweights, rewrite, rooks, verify
from .errors import (
    BudgetExceededError,
    EnumerationBoundError,
    MalformedInputError,
    NotDyckError,
    WordSyntaxError,
    WordTooLongError,
)
from .poly import Poly
from .words import DEFAULT_MAX_WORD_LENGTH, associated_dyck, is_dyck, parse_word

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_VERIFY = 0, 1, 2, 3

ENV_MAX_ENUM = "WEYLORDER_MAX_ENUM"


@dataclass(frozen=True)
class Config:
    max_word_length: int = DEFAULT_MAX_WORD_LENGTH
    max_enum_vertices: int = graphs.DEFAULT_MAX_ENUM_VERTICES
    rewrite_step_budget: int = rewrite.DEFAULT_STEP_BUDGET
    rng_seed: int = 0
    output_format: str = "text"

    def __post_init__(self):
        for name in ("max_word_length", "max_enum_vertices", "rewrite_step_budget"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.output_format not in ("text", "json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class _VerificationFailed(Exception):
    pass


# -- rendering ---------------------------------------------------------------------

def _num(v) -> str:
    return v.format("q") if isinstance(v, Poly) else str(v)


def _json_value(v):
    if isinstance(v, Poly):
        return [str(c) for c in v.coeffs]
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    return v


def _emit_table(out, fmt: str, header: list[str], rows: list[list], preamble: dict | None = None):
    if fmt == "json":
        doc = [{h: _json_value(v) for h, v in zip(header, row)} for row in rows]
        if preamble is not None:
            doc = dict(preamble, rows=doc)
        out.write(json.dumps(doc) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([_num(v) for v in row] for row in rows)
        out.write(buf.getvalue())
    else:
        if preamble:
            for key, val in preamble.items():
                out.write(f"{key}: {val}\n")
        cells = [header] + [[_num(v) for v in row] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        for r in cells:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def normal_form_to_json(nf: rewrite.NormalForm) -> dict:
    return {"offset": nf.offset, "coeffs": {str(k): _json_value(v) for k, v in nf.items()}}


def normal_form_from_json(doc: dict) -> rewrite.NormalForm:
    coeffs = doc["coeffs"]
    if any(isinstance(v, list) for v in coeffs.values()):
        return rewrite.QNormalForm(int(doc["offset"]), {int(k): Poly(int(c) for c in v) for k, v in coeffs.items()})
    return rewrite.NormalForm(int(doc["offset"]), {int(k): int(v) for k, v in coeffs.items()})


# -- commands ------------------------------------------------------------------------

def _word(args, cfg: Config) -> str:
    if args.word is None:
        raise UsageError("a word is required")
    return parse_word(args.word, cfg.max_word_length)


def cmd_normal_order(args, cfg, out):
    w = _word(args, cfg)
    fn = rewrite.normal_order_q if args.q else rewrite.normal_order
    nf = fn(w, budget=cfg.rewrite_step_budget)
    if cfg.output_format == "json":
        out.write(json.dumps(normal_form_to_json(nf)) + "\n")
    else:
        _emit_table(out, cfg.output_format, ["k", "coefficient"], [[k, v] for k, v in nf.items()],
                    preamble={"offset": nf.offset} if cfg.output_format == "text" else None)


def _dyck_for_graph(w: str, err) -> str:
    if is_dyck(w):
        return w
    a, b, dyck = associated_dyck(w)
    err.write(f"note: using associated Dyck word (a={a}, b={b})\n")
    return dyck


def cmd_graph(args, cfg, out, err):
    if args.which in ("g", "h"):
        dyck = _dyck_for_graph(_word(args, cfg), err)
        g = graphs.build_g(dyck) if args.which == "g" else graphs.build_h(dyck)
    else:
        if args.n is None or args.r is None:
            raise UsageError(f"--which {args.which} needs --n and --r")
        g = graphs.build_g_nr(args.n, args.r) if args.which == "gnr" else graphs.build_h_nr(args.n, args.r)
    fmt = args.graph_format or ("json" if cfg.output_format == "json" else "dot")
    if fmt == "json":
        out.write(g.to_json() + "\n")
    else:
        out.write(g.to_dot())


def cmd_stirling(args, cfg, out, err):
    if args.method == "summation":
        if args.n is None or args.s is None:
            raise UsageError("--method summation needs --n and --s")
        top = args.n * args.s
        rows = [[k, closed_forms.summation_sw(args.n, args.s, k)] for k in range(top + 1)]
    else:
        w = _word(args, cfg)
        n = w.count("D")
        a, b, dyck = associated_dyck(w)
        if args.method == "rewrite":
            nf = rewrite.normal_order(w, budget=cfg.rewrite_step_budget)
            vals = [nf[k] for k in range(n + 1)]
        elif args.method in ("graph-g", "graph-h"):
            build = graphs.build_g if args.method == "graph-g" else graphs.build_h
            row = graphs.graph_stirling_row(build(dyck), max_vertices=cfg.max_enum_vertices)
            vals = [row[k + b] if k + b < len(row) else 0 for k in range(n + 1)]
        elif args.method == "rook":
            vals = [rooks.stirling_via_rooks(w, k) for k in range(n + 1)]
        else:
            vals = [closed_forms.closed_form_sw(w, k) for k in range(n + 1)]
        rows = [[k, v] for k, v in enumerate(vals)]
    if args.k is not None:
        rows = [row for row in rows if row[0] == args.k] or [[args.k, 0]]
    else:
        rows = [row for row in rows if row[1]]
    _emit_table(out, cfg.output_format, ["k", "S"], rows)


def cmd_forests(args, cfg, out, err):
    if args.list:
        fs = forests.enumerate_forests(args.r, args.n, args.k, args.direction)
        if cfg.output_format == "json":
            out.write(json.dumps([f.to_json_dict() for f in fs]) + "\n")
        else:
            for f in fs:
                out.write(str(f) + "\n")
    else:
        if args.n > forests.DEFAULT_MAX_FOREST_VERTICES:
            count = forests.count_forests(args.r, args.n, args.k)
        else:
            count = len(forests.enumerate_forests(args.r, args.n, args.k, args.direction))
        _emit_table(out, cfg.output_format, ["r", "n", "k", "count"], [[args.r, args.n, args.k, count]])


def cmd_bijection(args, cfg, out, err):
    to_part = forests.forest_to_partition_g if args.which == "g" else forests.forest_to_partition_h
    to_forest = forests.partition_to_forest_g if args.which == "g" else forests.partition_to_forest_h
    build = graphs.build_g_nr if args.which == "g" else graphs.build_h_nr
    rows = []
    failures = 0
    for f in forests.enumerate_forests(args.r, args.n, args.k, "decreasing"):
        p = to_part(f, args.n, args.r)
        row = [str(f), str(p)]
        if args.check_roundtrip:
            ok = to_forest(p, args.n, args.r) == f
            row.append("ok" if ok else "FAIL")
            failures += not ok
        rows.append(row)
    header = ["forest", "partition"] + (["roundtrip"] if args.check_roundtrip else [])
    _emit_table(out, cfg.output_format, header, rows)
    if args.check_roundtrip:
        g = build(args.n, args.r)
        expected = graphs.graph_stirling(g, args.k + (args.r - 1) * args.n,
                                         max_vertices=max(cfg.max_enum_vertices, g.n))
        if expected != len(rows):
            failures += 1
            err.write(f"partition count {expected} != forest count {len(rows)}\n")
    if failures:
        raise _VerificationFailed(f"{failures} round-trip failure(s)")


def cmd_qtable(args, cfg, out, err):
    if args.carlitz is not None:
        rows = [[n, k, qweights.q_stirling_carlitz(n, k)]
                for n in range(args.carlitz + 1) for k in range(n + 1)]
        _emit_table(out, cfg.output_format, ["n", "k", "stirling_q"], rows)
        return
    w = _word(args, cfg)
    if not is_dyck(w):
        raise NotDyckError(f"q-weights are only defined here for Dyck words; {args.word!r} is not one")
    nv = w.count("x")
    order = qweights.lex_order if args.order == "lex" else qweights.random_order(nv, cfg.rng_seed)
    nf = rewrite.normal_order_q(w, budget=cfg.rewrite_step_budget)
    rows = []
    mismatch = False
    for k in range(nv + 1):
        by_weight = qweights.q_graph_stirling(w, k, order, max_vertices=cfg.max_enum_vertices)
        by_rewrite = nf[k]
        mismatch |= by_weight != by_rewrite
        if by_weight or by_rewrite:
            rows.append([k, by_weight, by_rewrite])
    _emit_table(out, cfg.output_format, ["k", "weights", "rewrite"], rows)
    if mismatch:
        raise _VerificationFailed("partition weights disagree with q-rewriting")


def cmd_bell(args, cfg, out, err):
    if args.n is not None:
        _emit_table(out, cfg.output_format, ["n", "bell"], [[args.n, closed_forms.bell(args.n)]])
    else:
        w = _word(args, cfg)
        nf = rewrite.normal_order(w, budget=cfg.rewrite_step_budget)
        _emit_table(out, cfg.output_format, ["word", "bell"], [[args.word, sum(nf.coeffs.values())]])


def cmd_fcoeff(args, cfg, out, err):
    fn = {"nested": closed_forms.f_nested, "genfunc": closed_forms.f_genfunc,
          "stirling1": closed_forms.f_stirling1}[args.method]
    ls = [args.l] if args.l is not None else range((args.s - 1) * (args.n - 1) + 1)
    _emit_table(out, cfg.output_format, ["l", "f"], [[l, fn(args.n, args.s, l)] for l in ls])


def cmd_verify(args, cfg, out, err):
    kwargs = {"max_vertices": cfg.max_enum_vertices, "budget": cfg.rewrite_step_budget}
    if args.all_dyck:
        count, bad = verify.check_all_dyck(args.max_len, **kwargs)
    elif args.word is not None:
        count, bad = 1, verify.check_word(parse_word(args.word, cfg.max_word_length), **kwargs)
    else:
        raise UsageError("verify needs --all-dyck or --word")
    if bad:
        for m in bad:
            err.write(str(m) + "\n")
        raise _VerificationFailed(f"{len(bad)} mismatch(es)")
    out.write(f"OK ({count} word{'s' if count != 1 else ''} checked)\n")


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # no abbreviations: --s and --n on subcommands would otherwise clash with --seed
    p = _Parser(prog="weylorder", description="Normal ordering and generalized Stirling numbers.",
                allow_abbrev=False)
    p.add_argument("--format", dest="output_format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-word-length", type=int, default=DEFAULT_MAX_WORD_LENGTH)
    p.add_argument("--max-enum", type=int, default=None, help=f"enumeration bound (env {ENV_MAX_ENUM})")
    p.add_argument("--step-budget", type=int, default=rewrite.DEFAULT_STEP_BUDGET)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("normal-order", help="normal form of a word")
    s.add_argument("word")
    s.add_argument("--q", action="store_true", help="use Dx = q xD + 1")

    s = sub.add_parser("graph", help="G_w, H_w, G(n,r) or H(n,r)")
    s.add_argument("word", nargs="?")
    s.add_argument("--which", choices=["g", "h", "gnr", "hnr"], default="g")
    s.add_argument("--format", dest="graph_format", choices=["dot", "json"])
    s.add_argument("--n", type=int)
    s.add_argument("--r", type=int)

    s = sub.add_parser("stirling", help="Stirling sequence by one method")
    s.add_argument("word", nargs="?")
    s.add_argument("--method", choices=["rewrite", "graph-g", "graph-h", "rook", "closed", "summation"],
                   default="rewrite")
    s.add_argument("--k", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--s", type=int)

    s = sub.add_parser("forests", help="count or list r-ary forests")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--direction", choices=["increasing", "decreasing"], default="increasing")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", default=True)
    mode.add_argument("--list", action="store_true")

    s = sub.add_parser("bijection", help="forest <-> partition bijections")
    s.add_argument("--which", choices=["g", "h"], default="g")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--check-roundtrip", action="store_true")

    s = sub.add_parser("qtable", help="q-Stirling numbers via partition weights")
    s.add_argument("word", nargs="?")
    s.add_argument("--order", choices=["lex", "random"], default="lex")
    s.add_argument("--carlitz", type=int, metavar="N", help="print the Carlitz table up to N instead")

    s = sub.add_parser("bell", help="Bell number of a word or ordinary B_n")
    s.add_argument("word", nargs="?")
    s.add_argument("--n", type=int)

    s = sub.add_parser("fcoeff", help="coefficients f(n,s,l)")
    s.add_argument("--method", choices=["nested", "genfunc", "stirling1"], default="nested")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--l", type=int)

    s = sub.add_parser("verify", help="five-way agreement check")
    s.add_argument("--all-dyck", action="store_true")
    s.add_argument("--max-len", type=int, default=10)
    s.add_argument("--word")
    return p


COMMANDS = {
    "normal-order": lambda a, c, o, e: cmd_normal_order(a, c, o),
    "graph": cmd_graph,
    "stirling": cmd_stirling,
    "forests": cmd_forests,
    "bijection": cmd_bijection,
    "qtable": cmd_qtable,
    "bell": cmd_bell,
    "fcoeff": cmd_fcoeff,
    "verify": cmd_verify,
}


def _config(args, environ) -> Config:
    max_enum = args.max_enum
    if max_enum is None:
        env = environ.get(ENV_MAX_ENUM)
        if env:
            try:
                max_enum = int(env)
            except ValueError:
                raise UsageError(f"{ENV_MAX_ENUM} must be an integer, got {env!r}") from None
        else:
            max_enum = graphs.DEFAULT_MAX_ENUM_VERTICES
    try:
        return Config(args.max_word_length, max_enum, args.step_budget, args.seed, args.output_format)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def run(argv: list[str] | None = None, out=None, err=None, environ=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    environ = os.environ if environ is None else environ
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args, environ)
        COMMANDS[args.command](args, cfg, out, err)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (WordSyntaxError, NotDyckError, MalformedInputError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (BudgetExceededError, EnumerationBoundError, WordTooLongError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_COMPUTE
    except _VerificationFailed as exc:
        err.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line front end.

Shapes are comma-separated parts; walled bipartitions are written ``a,b|c,d``
and an empty partition is ``-`` (or nothing).  ``--delta`` takes a rational
``p/q`` or ``generic``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import coeff, diagalg, modtab, oracle, permmod, schur, symcomb
from .coeff import DegenerateParameterError, ScalarDomain
from .diagalg import FAMILY_KINDS, WALLED, Family

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing

def parse_partition(text: str) -> tuple:
    text = text.strip()
    if text in ("", "-", "∅", "0"):
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad shape {text!r}") from None
    if any(p <= 0 for p in parts) or not symcomb.is_partition(parts):
        raise UsageError(f"{text!r} is not a partition")
    return parts


def parse_shape(family: Family, text: str):
    if family.kind == WALLED:
        if "|" not in text:
            raise UsageError("walled shapes are written left|right")
        left, right = text.split("|", 1)
        return (parse_partition(left), parse_partition(right))
    if "|" in text:
        raise UsageError("only walled shapes take a bar")
    return parse_partition(text)


def parse_delta(text: str):
    if text is None or text.strip().lower() == "generic":
        return None
    try:
        q = coeff.parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad value for --delta: {text!r}") from None
    if q == 0:
        raise UsageError("delta = 0 is degenerate")
    return q


def make_family(args) -> Family:
    if args.family is None or args.r is None:
        raise UsageError("--family and --r are required")
    if args.family != WALLED and args.rprime:
        raise UsageError("--rprime only applies to the walled family")
    if args.family == WALLED and args.rprime is None:
        raise UsageError("the walled family needs --rprime")
    try:
        return Family(args.family, args.r, args.rprime or 0)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def make_label(family: Family, shape_text: str, layer: int) -> permmod.ModuleLabel:
    shape = parse_shape(family, shape_text)
    try:
        return permmod.ModuleLabel.of(family, shape, layer)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# formatting

def fmt(x) -> str:
    return coeff.format_scalar(x)


def scalar_json(x) -> dict:
    return coeff.to_json(x)


def matrix_json(mat) -> list:
    return [[scalar_json(x) for x in row] for row in mat]


def table(rows: list, header: list | None = None) -> str:
    body = ([header] if header else []) + rows
    widths = [max(len(str(r[k])) for r in body) for k in range(len(body[0]))]
    lines = []
    for i, r in enumerate(body):
        lines.append("  ".join(str(c).rjust(w) for c, w in zip(r, widths)).rstrip())
        if header and i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def label_text(lab: permmod.ModuleLabel) -> str:
    return str(lab)


# ---------------------------------------------------------------------------
# subcommands

def cmd_basis(args, family):
    basis = diagalg.enumerate_basis(family)
    if args.json:
        return {"family": diagalg.family_to_json(family), "count": len(basis),
                "diagrams": [{"blocks": [list(b) for b in d.blocks], "layer": d.layer} for d in basis]}
    lines = [f"{family}: {len(basis)} diagrams"]
    for k, d in enumerate(basis):
        lines.append(f"[{k}] layer {d.layer}  " + " ".join("{" + ",".join(map(str, b)) + "}" for b in d.blocks))
    return "\n".join(lines)


def _label_from_args(args, family):
    if args.shape is None or args.layer is None:
        raise UsageError("--shape and --layer are required")
    return make_label(family, args.shape, args.layer)


def cmd_permmod(args, family):
    lab = _label_from_args(args, family)
    dom = ScalarDomain(parse_delta(args.delta))
    mod = permmod.get_module(lab, dom)
    murphy = mod.murphy_basis()
    filtration = mod.specht_filtration()
    layers = []
    for i in range(modtab.max_arcs(family, lab.segs) + 1):
        if lab.layer + i > family.max_layer:
            break
        for sigma, ks in mod.filtration_layer(i):
            layers.append((i, sigma, len(ks)))
    gens = mod.alg.generators()
    if args.json:
        return {
            "label": lab.to_json(), "dim": mod.dim, "delta": dom.label(),
            "natural_basis": [[list(b) for b in diagalg.public_blocks(rep)] for rep in mod.reps],
            "murphy_basis": [{"v": vec.v.to_json(), "sigma": vec.sigma.to_json(),
                              "shape": [list(s) for s in vec.shape],
                              "s": [t.to_json() for t in vec.s], "T": [t.to_json() for t in vec.T],
                              "coords": {str(k): str(c) for k, c in sorted(coords.items())}}
                             for vec, coords in murphy],
            "filtration_layers": [{"i": i, "sigma": s.to_json(), "restricted": _restricted_json(s), "dim": d}
                                  for i, s, d in layers],
            "specht_filtration": [{"shape": [list(s) for s in sh], "layer": l, "multiplicity": m}
                                  for sh, l, m in filtration],
            "generators": [{"diagram": [list(b) for b in diagalg.public_blocks(g)],
                            "matrix": matrix_json(mod.matrix(g))} for g in gens],
        }
    lines = [f"M{lab} in {family}: dim {mod.dim}  (delta {dom.label()})", "", "Murphy basis:"]
    for k, (vec, _) in enumerate(murphy):
        lines.append(f"  [{k}] {vec}")
    lines += ["", "filtration layers:"]
    rows = [[i, str(s), str(modtab.restrict(s)), d] for i, s, d in layers]
    lines.append(table(rows, ["i", "sigma", "restricted", "dim"]))
    lines += ["", "cell filtration:"]
    lines.append(table([[_shape_text(family, sh), l, m] for sh, l, m in filtration], ["shape", "layer", "mult"]))
    lines += ["", "generator action (columns = images of natural basis vectors):"]
    for g in gens:
        lines.append("  " + " ".join("{" + ",".join(map(str, b)) + "}" for b in diagalg.public_blocks(g)))
        for row in mod.matrix(g):
            lines.append("    " + "  ".join(fmt(x) for x in row))
    return "\n".join(lines)


def _restricted_json(sigma):
    r = modtab.restrict(sigma)
    return json.loads(json.dumps(r))


def _shape_text(family, segs) -> str:
    parts = [",".join(map(str, s)) or "-" for s in segs]
    return "|".join(parts)


def cmd_hom(args, family):
    labels = permmod.weights(family)
    if args.source is not None or args.target is not None:
        if args.source is None or args.target is None:
            raise UsageError("--source and --target go together (shape:layer)")
        src = _parse_pair(family, args.source)
        tgt = _parse_pair(family, args.target)
        dom = ScalarDomain(parse_delta(args.delta))
        maps = schur.hom_basis_semistandard(permmod.get_module(src, dom), permmod.get_module(tgt, dom))
        if args.json:
            return {"source": src.to_json(), "target": tgt.to_json(), "delta": dom.label(),
                    "maps": [{"index": str(m.index), "matrix": matrix_json(m.matrix())} for m in maps]}
        lines = [f"Hom(M{src}, M{tgt}): {len(maps)} maps  (delta {dom.label()})"]
        for m in maps:
            lines.append(f"  {m.index}")
            for row in m.matrix():
                lines.append("    " + "  ".join(fmt(x) for x in row))
        return "\n".join(lines)
    dims = [[schur.hom_index_count(a, b) for b in labels] for a in labels]
    if args.json:
        return {"family": diagalg.family_to_json(family), "labels": [lab.to_json() for lab in labels],
                "dims": dims}
    rows = [[label_text(a)] + row for a, row in zip(labels, dims)]
    return "dim Hom(M(row), M(column))\n" + table(rows, [""] + [label_text(b) for b in labels])


def _parse_pair(family, text: str):
    if ":" not in text:
        raise UsageError("labels are written shape:layer")
    shape, layer = text.rsplit(":", 1)
    try:
        layer = int(layer)
    except ValueError:
        raise UsageError(f"bad layer in {text!r}") from None
    return make_label(family, shape, layer)


def cmd_schur(args, family):
    sa = schur.schur_algebra(family)
    cells = sa.cells()
    chain = []
    for c in sorted(cells, key=lambda c: (-c[0], [-x for s in c[1] for x in s])):
        chain.append((c, len(sa.ideal(c)), sum(1 for j in range(len(sa)) if sa.cell(j) == c)))
    if args.json:
        return {"family": diagalg.family_to_json(family), "size": len(sa),
                "phi": [{"source": sa.phi[j].source.label.to_json(), "target": sa.phi[j].target.label.to_json(),
                         "index": str(sa.phi[j].index), "cell": {"layer": sa.cell(j)[0],
                                                                  "shape": [list(s) for s in sa.cell(j)[1]]}}
                        for j in range(len(sa))],
                "cells": [{"layer": c[0], "shape": [list(s) for s in c[1]], "ideal_dim": d, "count": n}
                          for c, d, n in chain]}
    lines = [f"S(A) for {family}: |Phi| = {len(sa)}", ""]
    for j, m in enumerate(sa.phi):
        lines.append(f"  [{j}] M{m.source.label} -> M{m.target.label}  {m.index}")
    lines += ["", "cells (deepest first) with ideal dimensions:"]
    lines.append(table([[c[0], _shape_text(family, c[1]), n, d] for c, d, n in chain],
                       ["layer", "shape", "count", "ideal"]))
    return "\n".join(lines)


def cmd_chartable(args, family):
    dom = ScalarDomain(parse_delta(args.delta))
    rows, cols, values = permmod.character_table(family, dom)
    col_names = [_class_name(family, k, mu) for k, mu, _ in cols]
    if args.json:
        return {"family": diagalg.family_to_json(family), "delta": dom.label(),
                "rows": [r.to_json() for r in rows],
                "columns": [{"layer": k, "class": json.loads(json.dumps(mu)),
                             "element": [list(b) for b in diagalg.public_blocks(z)]} for k, mu, z in cols],
                "values": matrix_json(values)}
    body = [[f"Δ{r}"] + [fmt(x) for x in row] for r, row in zip(rows, values)]
    return table(body, [""] + col_names)


def _class_name(family, k, mu) -> str:
    text = _cycle_text(mu) if family.kind != WALLED else "×".join(_cycle_text(m) for m in mu)
    return text if k == 0 else f"e{k}·{text}"


def _cycle_text(mu) -> str:
    mu = tuple(mu)
    if not mu or all(x == 1 for x in mu):
        return "e"
    out, start = [], 1
    for part in mu:
        if part > 1:
            out.append("(" + "".join(str(x) for x in range(start, start + part)) + ")")
        start += part
    return "".join(out)


def cmd_gram(args, family):
    q = parse_delta(args.delta)
    out = []
    for lab in permmod.weights(family):
        shape = modtab.shape_of(family, lab.segs)
        w = schur.weyl_module(shape, lab.layer, family)
        generic = schur.gram_rank(shape, lab.layer, family)
        rank = generic if q is None else schur.gram_rank(shape, lab.layer, family, q)
        out.append((lab, w, generic, rank))
    if args.json:
        return {"family": diagalg.family_to_json(family), "delta": "generic" if q is None else str(q),
                "labels": [{"label": lab.to_json(), "dim": w.dim, "generic_rank": g, "rank": r,
                            "gram": matrix_json(w.gram)} for lab, w, g, r in out]}
    rows = [[label_text(lab), w.dim, g, r, "drop" if r < g else ""] for lab, w, g, r in out]
    head = f"Gram ranks of Weyl modules for {family} at delta = {'generic' if q is None else q}"
    return head + "\n" + table(rows, ["label", "dim", "generic", "rank", ""])


def cmd_verify(args, family):
    suite = args.suite
    q = parse_delta(args.delta) if args.delta not in (None, "generic") else Fraction(1009)
    reports = []
    if suite == "cellular":
        sc, cd = oracle.diagram_cell_datum(family)
        reports.append(oracle.check_cellular(sc, cd))
        bad = oracle.check_cellular(sc, oracle.corrupt(cd, random.Random(args.seed)))
        reports.append({"check": "cellular-negative-control", "instance": str(family),
                        "status": "pass" if bad["status"] == "fail" else "fail",
                        "witness": bad.get("witness")})
    elif suite == "doublecentralizer":
        reports.append(oracle.check_double_centralizer(family, q))
    elif suite == "filtration":
        for lab in permmod.weights(family):
            got = oracle.generic_decompose(lab, q, seed=args.seed)
            expected = sorted(permmod.get_module(lab).specht_filtration())
            found = sorted((tuple(tuple(s) for s in f["shape"]), f["layer"], f["multiplicity"])
                           for f in got.get("factors", []))
            ok = got["status"] == "pass" and found == expected
            reports.append(oracle.report("filtration", f"M{lab}", ok,
                                         None if ok else {"expected": str(expected), "found": str(found)}))
    elif suite == "homdims":
        labels = permmod.weights(family)
        for a in labels:
            for b in labels:
                solved = oracle.hom_dimension(permmod.get_module(a), permmod.get_module(b))
                counted = schur.hom_index_count(a, b)
                reports.append(oracle.report("homdims", f"Hom(M{a}, M{b})", solved == counted,
                                             None if solved == counted else {"solver": solved, "index": counted},
                                             dim=solved))
    ok = all(r["status"] == "pass" for r in reports)
    if args.json:
        return {"suite": suite, "status": "pass" if ok else "fail", "reports": reports}, ok
    lines = [f"{r['status'].upper():4}  {r['check']}  {r['instance']}"
             + (f"  {r['witness']}" if r.get("witness") else "") for r in reports]
    lines.append(f"{'PASS' if ok else 'FAIL'}: {sum(r['status'] == 'pass' for r in reports)}/{len(reports)}")
    return "\n".join(lines), ok


COMMANDS = {
    "basis": cmd_basis,
    "permmod": cmd_permmod,
    "hom": cmd_hom,
    "schur": cmd_schur,
    "chartable": cmd_chartable,
    "gram": cmd_gram,
    "verify": cmd_verify,
}


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommands repeat the global flags; suppressed defaults keep them from
    # overwriting values given before the subcommand name
    def default(x):
        return argparse.SUPPRESS if suppress else x

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=FAMILY_KINDS, default=default(None))
    common.add_argument("--r", type=int, default=default(None))
    common.add_argument("--rprime", type=int, default=default(None))
    common.add_argument("--delta", default=default("generic"))
    common.add_argument("--json", action="store_true", default=default(False))
    common.add_argument("--seed", type=int, default=default(0))
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cellstrat", parents=[_common_flags(False)],
                                     description="Diagram algebras, permutation modules and their Schur algebras.")
    common = _common_flags(True)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("basis", parents=[common], help="list the diagram basis")
    p = sub.add_parser("permmod", parents=[common], help="Murphy basis and filtration of M(shape, layer)")
    p.add_argument("--shape")
    p.add_argument("--layer", type=int)
    p = sub.add_parser("hom", parents=[common], help="hom dimension matrix or explicit maps")
    p.add_argument("--source", help="shape:layer")
    p.add_argument("--target", help="shape:layer")
    sub.add_parser("schur", parents=[common], help="the basis Phi and its cell chain")
    sub.add_parser("chartable", parents=[common], help="characters of the cell modules")
    sub.add_parser("gram", parents=[common], help="Gram ranks of Weyl modules")
    p = sub.add_parser("verify", parents=[common], help="run an oracle suite")
    p.add_argument("--suite", required=True, choices=["cellular", "doublecentralizer", "filtration", "homdims"])
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        family = make_family(args)
        parse_delta(args.delta)
        result = COMMANDS[args.command](args, family)
    except (UsageError, DegenerateParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    ok = True
    if isinstance(result, tuple):
        result, ok = result
    if args.json:
        out.write(json.dumps(result, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        out.write(result + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

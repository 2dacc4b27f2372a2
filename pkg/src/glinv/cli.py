"""Command-line front end: ``glinv invariants|slice|form|census|selftest``."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import bilinear as bl
from . import enhancement as en
from .diagram import DiagramError, realize_diagram
from .gauss import GaussCodeError, parse_gauss_code
from .invariants import (
    SURFACE_LABEL,
    NotColorableError,
    alternating_obstruction,
    brown_json,
    full_report,
    report_to_json,
    slice_obstructions,
)

EXIT_OK, EXIT_PARSE, EXIT_NOT_COLORABLE, EXIT_NOT_KNOT = 0, 2, 3, 4

CENSUS_COLUMNS = (
    "file", "components", "crossings", "genus",
    "sigma_xi", "det_xi", "nullity_xi", "brown_xi",
    "sigma_xi*", "det_xi*", "nullity_xi*", "brown_xi*",
    "slice", "error",
)


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple[str, ...]
    fmt: str
    cap: int
    seed: int
    quiet: bool

    def __post_init__(self):
        if self.cap < 1:
            raise ValueError("cap must be at least 1")


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None
    try:
        return realize_diagram(parse_gauss_code(text))
    except (GaussCodeError, DiagramError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _report(path: str, cap: int):
    d = _load(path)
    try:
        return full_report(d, cap)
    except NotColorableError as exc:
        raise CliError(f"{path}: {exc}", EXIT_NOT_COLORABLE) from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _tsv(header, rows) -> str:
    lines = ["\t".join(header)]
    lines += ["\t".join(str(x) for x in row) for row in rows]
    return "\n".join(lines)


def cmd_invariants(cfg: RunConfig) -> str:
    path = cfg.inputs[0]
    r = _report(path, cfg.cap)
    doc = report_to_json(r, path, cap=cfg.cap)
    if cfg.fmt == "json":
        return _dump(doc)
    if cfg.fmt == "tsv":
        header = ("label", "surface", "goeritz", "mu", "euler", "sigma", "determinant", "nullity", "brown")
        rows = [(c["label"], SURFACE_LABEL[c["label"]], bl.format_matrix(bl.SymIntMatrix.of(c["goeritz"])),
                 c["mu"], c["euler"], c["sigma"], c["determinant"], c["nullity"], c["brown"])
                for c in doc["colorings"]]
        return _tsv(header, rows)
    out = [f"{path}: genus {r.genus}, {r.diagram.n_components} component(s), "
           f"{r.diagram.n_crossings} crossing(s)"]
    for c in doc["colorings"]:
        g = bl.format_matrix(bl.SymIntMatrix.of(c["goeritz"])) or "(empty)"
        out.append(f"  {c['label']:<4} [{SURFACE_LABEL[c['label']]}]  G = {g}")
        out.append(f"       mu {c['mu']}  euler {c['euler']}  sigma {c['sigma']}  det {c['determinant']}  "
                   f"nullity {c['nullity']}  brown {c['brown']}")
    if not cfg.quiet:
        out.append(f"  note: {doc['duality_note']}")
        if doc["slice"]:
            out.append(f"  slice: {doc['slice']['verdict']}")
        checks = doc["checks"]
        if checks["levine"]:
            out.append("  levine: " + ", ".join(f"{k} {v}" for k, v in checks["levine"].items()))
        out.append(f"  arf: {checks['arf']['status']} {checks['arf']['arf']}")
        out.append(f"  mirror: vertical {checks['mirror']['vertical']}, horizontal {checks['mirror']['horizontal']}")
    return "\n".join(out)


def cmd_slice(cfg: RunConfig) -> str:
    path = cfg.inputs[0]
    r = _report(path, cfg.cap)
    if not r.is_knot:
        raise CliError(f"{path}: slice obstructions need a knot, got {r.diagram.n_components} components",
                       EXIT_NOT_KNOT)
    s = slice_obstructions(r)
    alt = alternating_obstruction(r)
    doc = report_to_json(r, path, with_mirror=False, cap=cfg.cap)["slice"]
    doc["alternating"] = {"status": alt.status, "sigma_gap": alt.sigma_gap}
    doc["caveat"] = s.caveat
    if cfg.fmt == "json":
        return _dump(doc)
    if cfg.fmt == "tsv":
        header = ("label", "signature", "determinant", "brown", "genus_lower_bound")
        rows = [(k, v["signature"], v["determinant"], v["brown"], v["genus_lower_bound"])
                for k, v in doc["per_coloring"].items()]
        return _tsv(header, rows)
    out = [f"{path}: {s.verdict}"]
    for k, v in doc["per_coloring"].items():
        fired = [name for name in ("signature", "determinant", "brown") if v[name]]
        out.append(f"  {k:<4} obstructed by: {', '.join(fired) or 'nothing'}; "
                   f"genus bound {v['genus_lower_bound']}")
    out.append(f"  genus lower bound {doc['genus_lower_bound']}")
    out.append(f"  alternating test: {alt.status}"
               + (f" (sigma gap {alt.sigma_gap})" if alt.sigma_gap is not None else ""))
    if not cfg.quiet:
        out.append(f"  caveat: {s.caveat}")
    return "\n".join(out)


def form_report(text: str, mode: str = "integer", cap: Optional[int] = None) -> dict:
    m = bl.parse_matrix(text)
    e = en.from_special_matrix(m) if mode == "special" else en.enhance(m)
    lam = en.monsky_sum_decomposed(e, cap)
    return {
        "matrix": m.tolist(),
        "mode": mode,
        "signature": bl.signature(m),
        "determinant": bl.determinant(m),
        "nullity": bl.nullity(m),
        "monsky": str(lam),
        "brown": brown_json(en.brown(e, cap)),
        "proper": en.is_proper(e),
        "radical_dim": len(en.radical(e)),
    }


def cmd_form(cfg: RunConfig, mode: str) -> str:
    try:
        doc = form_report(cfg.inputs[0], mode, cfg.cap)
    except ValueError as exc:
        raise CliError(f"bad matrix {cfg.inputs[0]!r}: {exc}", EXIT_PARSE) from None
    if cfg.fmt == "json":
        return _dump(doc)
    keys = ("signature", "determinant", "nullity", "monsky", "brown", "proper", "radical_dim")
    if cfg.fmt == "tsv":
        return _tsv(keys, [[doc[k] for k in keys]])
    return "\n".join(f"{k:<12} {doc[k]}" for k in keys)


def census_row(path: Path, cap: int) -> list:
    row = {k: "" for k in CENSUS_COLUMNS}
    row["file"] = path.name
    try:
        r = _report(str(path), cap)
        row.update(components=r.diagram.n_components, crossings=r.diagram.n_crossings, genus=r.genus)
        for c in r.colorings:
            row[f"sigma_{c.label}"] = c.sigma
            row[f"det_{c.label}"] = c.det_inv
            row[f"nullity_{c.label}"] = c.nullity
            row[f"brown_{c.label}"] = brown_json(c.brown)
        row["slice"] = slice_obstructions(r).verdict if r.is_knot else "n/a"
    except (CliError, en.EnumerationCapExceeded) as exc:
        row["error"] = str(exc).replace("\t", " ").replace("\n", " ")
    return [row[k] for k in CENSUS_COLUMNS]


def cmd_census(cfg: RunConfig) -> str:
    root = Path(cfg.inputs[0])
    if not root.is_dir():
        raise CliError(f"{root} is not a directory", EXIT_PARSE)
    files = sorted((p for p in root.iterdir() if p.is_file() and p.suffix == ".gauss"), key=lambda p: p.name)
    return _tsv(CENSUS_COLUMNS, [census_row(p, cfg.cap) for p in files])


def cmd_selftest(cfg: RunConfig, cases: int) -> str:
    """Randomized spot check that beta survives unimodular congruence and negation."""
    rng = random.Random(cfg.seed)
    for k in range(cases):
        n = rng.randint(0, 5)
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                a[i][j] = a[j][i] = rng.randint(-3, 3)
        m = bl.SymIntMatrix.of(a)
        b = en.brown(en.enhance(m), cfg.cap)
        p = bl.random_unimodular(n, rng.randrange(2**32))
        if en.brown(en.enhance(m.congruent(p)), cfg.cap) != b:
            raise CliError(f"case {k}: congruence changed beta for {bl.format_matrix(m)}", 1)
        if en.brown(en.enhance(-m), cfg.cap) != en.brown_neg(b):
            raise CliError(f"case {k}: negation rule failed for {bl.format_matrix(m)}", 1)
    return f"selftest: {cases} cases passed (seed {cfg.seed})"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("json", "tsv", "pretty"), default="pretty")
    common.add_argument("--cap", type=int, default=None,
                        help="enumeration cap on form dimension (default: $GLINV_CAP or 24)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized self-tests")
    common.add_argument("--quiet", action="store_true", help="omit notes and caveats")

    parser = argparse.ArgumentParser(prog="glinv", description="Goeritz, signature and Brown invariants "
                                     "of link diagrams on surfaces.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("invariants", parents=[common], help="full report for a Gauss code file")
    p.add_argument("file")
    p = sub.add_parser("slice", parents=[common], help="slice obstructions for a knot")
    p.add_argument("file")
    p = sub.add_parser("form", parents=[common], help="invariants of a symmetric matrix literal")
    p.add_argument("matrix", help='rows separated by ";", entries by ",", e.g. "1,-1;-1,2"')
    p.add_argument("--mode", choices=("integer", "special"), default="integer")
    p = sub.add_parser("census", parents=[common], help="TSV table for every .gauss file in a directory")
    p.add_argument("dir")
    p = sub.add_parser("selftest", parents=[common], help="randomized consistency check")
    p.add_argument("--cases", type=int, default=200)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cap = args.cap if args.cap is not None else int(os.environ.get("GLINV_CAP", en.DEFAULT_CAP))
    target = {"invariants": "file", "slice": "file", "form": "matrix", "census": "dir"}.get(args.command)
    inputs = (getattr(args, target),) if target else ()
    try:
        cfg = RunConfig(args.command, inputs, args.fmt, cap, args.seed, args.quiet)
        if args.command == "invariants":
            out = cmd_invariants(cfg)
        elif args.command == "slice":
            out = cmd_slice(cfg)
        elif args.command == "form":
            out = cmd_form(cfg, args.mode)
        elif args.command == "census":
            out = cmd_census(cfg)
        else:
            out = cmd_selftest(cfg, args.cases)
    except CliError as exc:
        print(f"glinv: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, en.EnumerationCapExceeded) as exc:
        print(f"glinv: {exc}", file=sys.stderr)
        return 1
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

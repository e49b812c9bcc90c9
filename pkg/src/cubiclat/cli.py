"""Command-line interface with JSON input/output.

Lattice files look like::

    {"gram": [[3, 4], [4, 10]],
     "labels": ["h2", "T"],
     "distinguished": {"h2": 0},
     "marking": {"T": 1}}

where ``distinguished`` and ``marking`` give basis positions.  Output is
JSON by default (``--text`` renders tables); integers outside the
64-bit-safe range are serialized as strings in both directions.  Exit
codes: 0 success, 1 input error, 2 internal invariant failure, 3 report
mismatch under ``paper --check``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from . import cubic, discform, k3, repro
from .lattice import IntegralLattice, LatticeError, determinant, is_even, lattice, signature

_SAFE = 2**53 - 1


class InputError(Exception):
    pass


def _decode_int(x):
    if isinstance(x, bool):
        raise InputError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x)
        except ValueError:
            raise InputError(f"expected an integer, got {x!r}") from None
    raise InputError(f"expected an integer, got {x!r}")


def _encode(obj):
    """JSON-safe copy with big integers as strings and exact fields kept."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _SAFE else obj
    if isinstance(obj, Fraction):
        return str(obj)
    if is_dataclass(obj) and not isinstance(obj, type):
        return _encode(asdict(obj))
    if isinstance(obj, dict):
        return {k: _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _load_lattice(path: str) -> tuple[IntegralLattice, dict]:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON in {path}: {e}") from None
    if not isinstance(doc, dict) or "gram" not in doc:
        raise InputError(f"{path}: expected an object with a \"gram\" field")
    gram = doc["gram"]
    if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
        raise InputError(f"{path}: \"gram\" must be a matrix")
    rows = tuple(tuple(_decode_int(x) for x in r) for r in gram)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InputError(f"{path}: Gram matrix must be square")
    if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(n)):
        raise InputError(f"{path}: Gram matrix must be symmetric")
    labels = doc.get("labels")
    if labels is not None:
        if len(labels) != n or not all(isinstance(s, str) for s in labels):
            raise InputError(f"{path}: \"labels\" must list one string per basis vector")
        labels = tuple(labels)
    return lattice(rows, labels), doc


def _basis_vector(l: IntegralLattice, doc: dict, section: str, key: str):
    entry = doc.get(section)
    if entry is None or key not in entry:
        return None
    i = _decode_int(entry[key])
    if not 0 <= i < l.rank:
        raise InputError(f"\"{section}\" index {i} out of range for rank {l.rank}")
    return tuple(int(j == i) for j in range(l.rank))


def _marked(path: str, need_marking: bool) -> cubic.MarkedCubicLattice:
    l, doc = _load_lattice(path)
    h2 = _basis_vector(l, doc, "distinguished", "h2")
    if h2 is None:
        raise InputError(f"{path}: missing \"distinguished\": {{\"h2\": index}}")
    t = _basis_vector(l, doc, "marking", "T")
    if t is None and need_marking:
        candidates = cubic.find_k14_markings(cubic.MarkedCubicLattice(l, h2))
        if len(candidates) != 1:
            raise InputError(
                f"{path}: no \"marking\" given and {len(candidates)} candidate "
                "markings found; specify one")
        t = candidates[0]
    return cubic.MarkedCubicLattice(l, h2, t)


def _polarized(path: str) -> k3.PolarizedK3Lattice:
    l, doc = _load_lattice(path)
    h = _basis_vector(l, doc, "distinguished", "H")
    if h is None:
        raise InputError(f"{path}: missing \"distinguished\": {{\"H\": index}}")
    return k3.PolarizedK3Lattice(l, h)


def _emit(args, payload, text: str):
    if args.text:
        sys.stdout.write(text)
    else:
        json.dump(_encode(payload), sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")


def _kv_text(pairs) -> str:
    return "".join(f"{k}: {v}\n" for k, v in pairs)


def _cmd_lattice_info(args):
    l, _ = _load_lattice(args.file)
    det = determinant(l)
    sig = signature(l)
    group = discform.discriminant_group(l).invariants if det else ()
    payload = {"rank": l.rank, "det": det, "signature": list(sig),
               "even": is_even(l), "discriminant_group": list(group)}
    _emit(args, payload, _kv_text([
        ("rank", l.rank), ("det", det), ("signature", sig),
        ("even", is_even(l)),
        ("discriminant group", " x ".join(f"Z/{d}" for d in group) or "trivial"),
    ]))


def _cmd_lattice_overlattices(args):
    l, _ = _load_lattice(args.file)
    overs = discform.even_overlattices(l)
    payload = {"overlattices": [
        {"gram": o.lattice.gram, "index": o.index, "embedding": o.embedding}
        for o in overs]}
    lines = [f"{len(overs)} even overlattice(s)\n"]
    for o in overs:
        lines.append(f"index {o.index}: gram {o.lattice.gram}\n")
    _emit(args, payload, "".join(lines))


def _cmd_lattice_easy_test(args):
    l, _ = _load_lattice(args.file)
    verdict = discform.easy_test(l)
    payload = {"passed": verdict.passed, "criterion": verdict.criterion,
               "detail": verdict.detail, "verdict": str(verdict)}
    _emit(args, payload, str(verdict) + "\n")


def _cmd_cubic_roots(args):
    marked = _marked(args.file, need_marking=False)
    short = cubic.find_short_roots(marked)
    long_ = cubic.find_long_roots(marked)
    payload = {"short": [{"vector": r.vector} for r in short],
               "long": [{"vector": r.vector, "witness": r.witness}
                        for r in long_]}
    lines = [f"short roots: {[r.vector for r in short]}\n",
             f"long roots:  {[r.vector for r in long_]}\n"]
    _emit(args, payload, "".join(lines))


def _cmd_cubic_normal_form(args):
    nf = cubic.normal_form(_marked(args.file, need_marking=True))
    payload = {"b": nf.b, "c": nf.c, "basis_change": nf.basis_change}
    _emit(args, payload, _kv_text([
        ("b", nf.b), ("c", nf.c), ("basis (h2, T, J)", nf.basis_change)]))


def _cmd_cubic_sigma(args):
    s = cubic.sigma(_marked(args.file, need_marking=True))
    payload = {"gram": s.lattice.gram, "alpha": s.alpha, "beta": s.beta}
    _emit(args, payload, _kv_text([
        ("gram", s.lattice.gram), ("alpha", s.alpha), ("beta", s.beta)]))


def _cmd_cubic_markings(args):
    marked = _marked(args.file, need_marking=False)
    found = cubic.find_k14_markings(marked)
    _emit(args, {"markings": found},
          "".join(f"{v}\n" for v in found) or "no markings\n")


def _cmd_cubic_scan(args):
    rows = cubic.scan_bc(args.bmax, args.cmax)
    payload = {"rows": [asdict(r) for r in rows]}
    lines = ["  b   c   det  sigma           roots\n"]
    for r in rows:
        status = []
        if r.short_roots:
            status.append(f"short {list(r.short_roots)}")
        if r.long_roots:
            status.append(f"long {list(r.long_roots)}")
        lines.append(f"  {r.b}  {r.c:2d}  {r.det:4d}  {r.sigma_gram}  "
                     f"{'; '.join(status) or 'root-free'}\n")
    _emit(args, payload, "".join(lines))


def _cmd_k3_classify(args):
    report = k3.bn_classify(_polarized(args.file))
    payload = {"verdict": report.describe(),
               "gamma_bound": report.gamma_bound,
               "markers": [asdict(m) for m in report.markers]}
    lines = [f"{report.describe()}\n"]
    for m in report.markers:
        lines.append(f"  {m.kind}: witness {m.witness}\n")
    _emit(args, payload, "".join(lines))


_PAPER_OPS = {
    "table1": repro.reproduce_table1,
    "clifford3": repro.clifford3_certificates,
    "pi": repro.pi_presentations,
    "example-a2": repro.example_a2,
}


def _cmd_paper(args):
    if args.report == "all":
        reports = repro.run_all()
    else:
        reports = [_PAPER_OPS[args.report]()]
    payload = {"reports": [
        {"name": r.name, "passed": r.passed,
         "cells": [dict(asdict(c), passed=c.passed) for c in r.cells]}
        for r in reports]}
    _emit(args, payload, repro.render_text(reports))
    if args.check and not all(r.passed for r in reports):
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubiclat",
        description="Exact lattice computations for discriminant-14 "
                    "cubic fourfolds and their associated K3 surfaces.")
    parser.add_argument("--text", action="store_true",
                        help="render human-readable text instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    lat = sub.add_parser("lattice", help="generic lattice operations")
    lat_sub = lat.add_subparsers(dest="subcommand", required=True)
    for name, fn in (("info", _cmd_lattice_info),
                     ("overlattices", _cmd_lattice_overlattices),
                     ("easy-test", _cmd_lattice_easy_test)):
        p = lat_sub.add_parser(name)
        p.add_argument("file", help="lattice JSON file, or - for stdin")
        p.set_defaults(func=fn)

    cub = sub.add_parser("cubic", help="marked cubic fourfold lattices")
    cub_sub = cub.add_subparsers(dest="subcommand", required=True)
    for name, fn in (("roots", _cmd_cubic_roots),
                     ("normal-form", _cmd_cubic_normal_form),
                     ("sigma", _cmd_cubic_sigma),
                     ("markings", _cmd_cubic_markings)):
        p = cub_sub.add_parser(name)
        p.add_argument("file", help="lattice JSON file, or - for stdin")
        p.set_defaults(func=fn)
    p = cub_sub.add_parser("scan")
    p.add_argument("--bmax", type=int, required=True)
    p.add_argument("--cmax", type=int, required=True)
    p.set_defaults(func=_cmd_cubic_scan)

    k3p = sub.add_parser("k3", help="polarized K3 lattices")
    k3_sub = k3p.add_subparsers(dest="subcommand", required=True)
    p = k3_sub.add_parser("classify")
    p.add_argument("file", help="lattice JSON file, or - for stdin")
    p.set_defaults(func=_cmd_k3_classify)

    pap = sub.add_parser("paper", help="reproduction reports")
    pap.add_argument("report", choices=[*_PAPER_OPS, "all"])
    pap.add_argument("--check", action="store_true",
                     help="exit 3 if any report cell fails")
    pap.set_defaults(func=_cmd_paper)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args) or 0
    except (InputError, LatticeError, KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (AssertionError, ArithmeticError) as e:
        print(f"internal invariant failure: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

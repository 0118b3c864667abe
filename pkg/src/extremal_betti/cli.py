"""Command-line front end.

    extremal-betti betti FILE [--engine closed-form|oracle|both]
    extremal-betti invariants FILE
    extremal-betti classify FILE
    extremal-betti sweep --n K --alpha-max M [--exhaustive | --seed S --count C]

Instance files are JSON ({"n", "alpha", "beta", "edges"}, vertices 1-indexed)
or plain text: a header line "n alpha beta" followed by one "i j" per edge.
Exit codes: 0 ok, 2 bad input, 3 the two engines disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import Pool
from pathlib import Path

from .closed_form import PG_CLAUSES, DispatchGap, dispatch, pseudo_gorenstein_clauses
from .graph import GraphError, new_graph
from .instance import Instance, UnsupportedInstance
from .invariants import compute_invariants
from .oracle import extremal_report_oracle
from .sweep import all_graphs, compare, random_graphs, weight_pairs

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MISMATCH = 3

ENGINES = ("closed-form", "oracle", "both")


class ParseError(ValueError):
    pass


class EngineMismatch(RuntimeError):
    pass


def _as_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def instance_from_dict(d) -> Instance:
    if not isinstance(d, dict):
        raise ParseError("instance JSON must be an object")
    missing = [k for k in ("n", "alpha", "beta", "edges") if k not in d]
    if missing:
        raise ParseError(f"missing field(s): {', '.join(missing)}")
    n = _as_int(d["n"], "n")
    alpha, beta = _as_int(d["alpha"], "alpha"), _as_int(d["beta"], "beta")
    if not isinstance(d["edges"], list):
        raise ParseError("edges must be a list of [i, j] pairs")
    edges = []
    for e in d["edges"]:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ParseError(f"bad edge {e!r}")
        edges.append((_as_int(e[0], "vertex"), _as_int(e[1], "vertex")))
    if n < 1:
        raise UnsupportedInstance(f"n must be at least 5, got {n}")
    try:
        g = new_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    return Instance(n, alpha, beta, g)


def _parse_text(text: str) -> Instance:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            try:
                rows.append([int(tok) for tok in line.split()])
            except ValueError as exc:
                raise ParseError(f"not an integer line: {raw!r}") from exc
    if not rows or len(rows[0]) != 3:
        raise ParseError('text instances start with a header line "n alpha beta"')
    for r in rows[1:]:
        if len(r) != 2:
            raise ParseError(f"edge lines hold two vertices, got {r}")
    n, alpha, beta = rows[0]
    return instance_from_dict({"n": n, "alpha": alpha, "beta": beta, "edges": rows[1:]})


def parse_instance(text: str) -> Instance:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return instance_from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    return _parse_text(text)


def load_instance(path) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_instance(text)


def serialize_instance(inst: Instance) -> str:
    return json.dumps({
        "n": inst.n,
        "alpha": inst.alpha,
        "beta": inst.beta,
        "edges": [list(e) for e in inst.graph.sorted_edges],
    })


def report_document(inst: Instance, engine: str) -> dict:
    inv = compute_invariants(inst.graph, inst.n)
    if engine == "oracle":
        rep = extremal_report_oracle(inst)
    else:
        rep = dispatch(inst, inv)
    doc = {"engine": engine.replace("-", "_")}
    doc.update(rep.to_json())
    if engine == "both":
        doc["agreement"] = rep.agrees_with(extremal_report_oracle(inst))
    doc["invariants"] = inv.as_dict()
    return doc


# -- commands ---------------------------------------------------------------

def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_betti(args) -> int:
    inst = load_instance(args.file)
    doc = report_document(inst, args.engine)
    _emit(doc)
    if doc.get("agreement") is False:
        print(f"EngineMismatch: {serialize_instance(inst)}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_invariants(args) -> int:
    inst = load_instance(args.file)
    _emit(compute_invariants(inst.graph, inst.n).as_dict())
    return EXIT_OK


def cmd_classify(args) -> int:
    inst = load_instance(args.file)
    hits = pseudo_gorenstein_clauses(inst)
    _emit({
        "pseudo_gorenstein": bool(hits),
        "clauses": [{"label": h, "statement": PG_CLAUSES[h]} for h in hits],
    })
    return EXIT_OK


def _check_one(inst: Instance):
    c = compare(inst)
    return c.agree, serialize_instance(inst), c.error


def sweep_instances(n: int, alpha_max: int, exhaustive: bool, seed: int, count: int):
    graphs = all_graphs(n) if exhaustive else random_graphs(n, count, seed)
    pairs = weight_pairs(alpha_max)
    for g in graphs:
        for a, b in pairs:
            yield Instance(n, a, b, g)


def cmd_sweep(args) -> int:
    if args.n not in (5, 6, 7):
        raise UnsupportedInstance("sweeps run on n = 5, 6 or 7")
    if args.alpha_max < 2:
        raise UnsupportedInstance("alpha-max must be at least 2")
    if args.exhaustive and args.alpha_max > 8:
        raise UnsupportedInstance("exhaustive sweeps stop at alpha-max = 8")
    jobs = sweep_instances(args.n, args.alpha_max, args.exhaustive, args.seed, args.count)
    total, mismatches = 0, []
    if args.workers > 1:
        with Pool(args.workers) as pool:
            results = list(pool.imap(_check_one, jobs, chunksize=64))
    else:
        results = map(_check_one, jobs)
    for agree, inst_json, error in results:
        total += 1
        if not agree:
            # save the instance JSON to a file and rerun `betti FILE --engine both`
            mismatches.append({"instance": json.loads(inst_json), "error": error})
    _emit({
        "n": args.n,
        "alpha_max": args.alpha_max,
        "mode": "exhaustive" if args.exhaustive else f"seed={args.seed} count={args.count}",
        "instances": total,
        "mismatches": len(mismatches),
        "reproduce": mismatches,
    })
    return EXIT_OK if not mismatches else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="extremal-betti", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("betti", help="extremal Betti numbers of one instance")
    b.add_argument("file")
    b.add_argument("--engine", choices=ENGINES, default="closed-form")
    b.set_defaults(func=cmd_betti)

    i = sub.add_parser("invariants", help="graph invariants of the weight graph")
    i.add_argument("file")
    i.set_defaults(func=cmd_invariants)

    c = sub.add_parser("classify", help="pseudo-Gorenstein verdict with matched clauses")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("sweep", help="cross-check both engines over many graphs")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--alpha-max", type=int, required=True)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=500)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnsupportedInstance) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DispatchGap as exc:
        print(f"EngineMismatch: closed form has no answer: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Graphs travel as edge lists, structured results as JSON.  Exit status is 0
on success, 1 when a verification fails and 2 on bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .constructions import (CHAIN, STAR, CockadeSpec, SGraphSpec, cockade, k5_minus,
                            line_graph_complete, path_power, s_graph)
from .extraction import ExtractionError, ExtractionParams, certificate_to_json, extract_dense_minor
from .formats import (GraphFormatError, dumps, load_edge_list, model_to_json, parse_fraction,
                      write_edge_list)
from .graph import Graph, GraphError, complete_graph
from .reduction import PreconditionError, mader_reduce

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

BASES = {"k4": lambda: complete_graph(4), "k5minus": k5_minus, "k5": lambda: complete_graph(5)}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- independent certificate check ----------------------------------------------

def _floor_bound(t: int) -> Fraction:
    # recomputed here on purpose rather than imported from extraction
    value = Fraction(1414213, 1000000) - 1 - Fraction(24, t)
    return max(Fraction(0), value) * (t * (t - 1) // 2)


def check_certificate(g: Graph, cert: Dict, strict_bound: bool = True) -> Tuple[bool, str]:
    """Re-check a certificate dict against ``g`` from scratch.

    Returns ``(ok, reason)``.  None of the model-verification helpers used
    by the extraction pipeline are called here.
    """
    try:
        t = int(cert["t"])
        bound = Fraction(int(cert["bound_num"]), int(cert["bound_den"]))
        achieved = int(cert["achieved"])
        raw_sets = cert["model"]["branch_sets"]
        claimed = {tuple(sorted(map(int, e))) for e in cert["model"].get("realized_edges", [])}
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        return False, f"malformed certificate: {exc}"

    adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)

    if len(raw_sets) != t:
        return False, f"coverage: {len(raw_sets)} branch sets for t={t}"
    owner: Dict[int, str] = {}
    sets: Dict[str, List[int]] = {}
    for key, ids in raw_sets.items():
        ids = [int(x) for x in ids]
        if not ids:
            return False, f"nonempty: branch set {key} is empty"
        for x in ids:
            if x not in adj:
                return False, f"membership: vertex {x} of branch set {key} not in host"
            if x in owner:
                return False, f"disjoint: vertex {x} in branch sets {owner[x]} and {key}"
            owner[x] = key
        members = set(ids)
        seen = {ids[0]}
        stack = [ids[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in members and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != members:
            return False, f"connected: branch set {key} is not connected"
        sets[key] = ids

    keys = list(sets)
    index = {k: i for i, k in enumerate(keys)}
    pairs = set()
    for u, v in g.edges:
        a, b = owner.get(u), owner.get(v)
        if a is not None and b is not None and a != b:
            i, j = sorted((index[a], index[b]))
            pairs.add((i, j))
    recount = len(pairs)
    if recount != achieved:
        return False, f"recount: model realizes {recount} edges, certificate says {achieved}"
    if claimed:
        as_keys = set()
        for i, j in pairs:
            x, y = keys[i], keys[j]
            as_keys.add(tuple(sorted((int(x), int(y)))))
        if claimed != as_keys:
            return False, "recount: listed realized edges differ from the model"
    if achieved < bound:
        return False, f"bound: achieved {achieved} < bound {bound}"
    if strict_bound and bound != _floor_bound(t):
        return False, f"bound: certificate bound {bound} differs from {_floor_bound(t)}"
    if achieved > comb(t, 2):
        return False, "recount: more edges than a t-vertex graph can have"
    return True, "ok"


# -- commands -------------------------------------------------------------------

def _out(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _cmd_construct(a) -> int:
    if a.family == "s-graph":
        spec = SGraphSpec(a.k, a.r, a.s)
        g = s_graph(spec)
        note = f"S_{{{a.k},{a.r},{a.s}}}"
    elif a.family == "path-power":
        g = path_power(a.n, a.k)
        note = f"P_{a.n}^{a.k}"
    elif a.family == "cockade":
        g = cockade(CockadeSpec(BASES[a.base](), a.k, a.copies, a.attachment))
        note = f"({a.base},{a.k})-cockade, {a.copies} copies, {a.attachment}"
    else:
        g = line_graph_complete(a.n)
        note = f"L(K_{a.n})"
    _out(write_edge_list(g, [note]), a.output)
    return EXIT_OK


def _cmd_reduce(a) -> int:
    g = load_edge_list(a.graph)
    thr = parse_fraction(a.t) if a.t is not None else None
    res = mader_reduce(g, thr)
    h = res.reduced
    if a.trace:
        _out(dumps({"threshold": str(res.threshold), "trace": res.trace.to_json()}) + "\n",
             a.trace)
    _out(write_edge_list(h, [f"reduced from v={g.num_vertices()} e={g.num_edges()}",
                             f"original ids: {' '.join(map(str, h.vertices))}"]), a.output)
    return EXIT_OK


def _cmd_extract(a) -> int:
    g = load_edge_list(a.graph)
    kw = {k: parse_fraction(getattr(a, k)) for k in ("alpha", "beta", "nu") if getattr(a, k)}
    params = ExtractionParams(a.t, **kw)
    cert = extract_dense_minor(g, a.t, params)
    _out(dumps(certificate_to_json(cert)) + "\n", a.output)
    return EXIT_OK


def _cmd_oracle(a) -> int:
    from .oracle import has_minor, max_minor_edges

    if a.query == "max-minor":
        g = load_edge_list(a.graph)
        res = max_minor_edges(g, a.t)
        _out(dumps({"t": a.t, "optimum": res.optimum, "exhaustive": res.exhaustive,
                    "explored": res.explored, "model": model_to_json(res.witness)}) + "\n", a.output)
        return EXIT_OK
    g, h = load_edge_list(a.graph), load_edge_list(a.pattern)
    found, model = has_minor(g, h)
    _out(dumps({"found": found, "model": model_to_json(model) if found else None}) + "\n", a.output)
    return EXIT_OK if found else EXIT_FAIL


def _cmd_verify(a) -> int:
    from . import oracle

    if a.claim == "small":
        rep = oracle.verify_small_theorem(a.t, a.nmax, labeled=a.labeled, workers=a.workers)
    elif a.claim == "extremal11":
        rep = oracle.verify_extremal11(a.nmax, labeled=a.labeled, workers=a.workers)
    elif a.claim == "6v12e":
        rep = oracle.verify_6v12e_report()
    else:
        spec = SGraphSpec(a.k, a.r, a.s)
        rep = oracle.verify_lemma32(spec, a.hmax if a.hmax is not None else min(5, spec.num_vertices))
    _out(dumps(rep.to_json()) + "\n", a.output)
    return EXIT_OK if rep.ok else EXIT_FAIL


def _cmd_check_cert(a) -> int:
    g = load_edge_list(a.graph)
    try:
        if a.certificate == "-":
            cert = json.load(sys.stdin)
        else:
            with open(a.certificate) as fh:
                cert = json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"certificate is not valid JSON: line {exc.lineno}: {exc.msg}") from None
    ok, reason = check_certificate(g, cert)
    print("PASS" if ok else f"FAIL {reason}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="denseminor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def out(sp):
        sp.add_argument("-o", "--output", default="-", help="output path, '-' for stdout")

    c = sub.add_parser("construct", help="emit an extremal family member as an edge list")
    fam = c.add_subparsers(dest="family", required=True, parser_class=_Parser)
    sp = fam.add_parser("s-graph")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    out(sp)
    sp = fam.add_parser("path-power")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    out(sp)
    sp = fam.add_parser("cockade")
    sp.add_argument("--base", choices=sorted(BASES), required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--copies", type=int, required=True)
    sp.add_argument("--attachment", choices=[STAR, CHAIN], default=STAR)
    out(sp)
    sp = fam.add_parser("line-complete")
    sp.add_argument("--n", type=int, required=True)
    out(sp)
    c.set_defaults(func=_cmd_construct)

    sp = sub.add_parser("reduce", help="run the contraction pass")
    sp.add_argument("graph")
    sp.add_argument("--t", help="threshold as p/q (default: half the average degree)")
    sp.add_argument("--trace", help="write the contraction trace as JSON here")
    out(sp)
    sp.set_defaults(func=_cmd_reduce)

    sp = sub.add_parser("extract", help="certified dense t-vertex minor")
    sp.add_argument("graph")
    sp.add_argument("--t", type=int, required=True)
    for name in ("alpha", "beta", "nu"):
        sp.add_argument(f"--{name}")
    out(sp)
    sp.set_defaults(func=_cmd_extract)

    o = sub.add_parser("oracle", help="exact searches on small hosts")
    q = o.add_subparsers(dest="query", required=True, parser_class=_Parser)
    sp = q.add_parser("max-minor")
    sp.add_argument("graph")
    sp.add_argument("--t", type=int, required=True)
    out(sp)
    sp = q.add_parser("has-minor")
    sp.add_argument("graph")
    sp.add_argument("pattern")
    out(sp)
    o.set_defaults(func=_cmd_oracle)

    v = sub.add_parser("verify", help="exhaustive sweeps of small-case claims")
    cl = v.add_subparsers(dest="claim", required=True, parser_class=_Parser)
    sp = cl.add_parser("small")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--labeled", action="store_true")
    sp.add_argument("--workers", type=int, default=1)
    out(sp)
    sp = cl.add_parser("extremal11")
    sp.add_argument("--nmax", type=int, default=7)
    sp.add_argument("--labeled", action="store_true")
    sp.add_argument("--workers", type=int, default=1)
    out(sp)
    sp = cl.add_parser("6v12e")
    out(sp)
    sp = cl.add_parser("lemma32")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--hmax", type=int)
    out(sp)
    v.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("check-cert", help="re-verify a certificate independently")
    sp.add_argument("graph")
    sp.add_argument("certificate")
    sp.set_defaults(func=_cmd_check_cert)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except ExtractionError as exc:
        print(f"extraction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except GraphFormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
    except (PreconditionError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

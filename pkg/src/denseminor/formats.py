"""Text and JSON interchange: edge lists, minor models, rationals."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, List, TextIO, Union

from .graph import Graph
from .models import MinorModel, realized_edges


class GraphFormatError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def parse_fraction(text: Union[str, int, Fraction]) -> Fraction:
    """Parse ``"p/q"`` or an integer exactly; floats are refused."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = text.strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(s)


def read_edge_list(lines: Iterable[str]) -> Graph:
    """Parse ``p <v> <e>`` followed by ``u v`` lines (0-indexed)."""
    n = m = None
    edges: List[tuple] = []
    seen = set()
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 3 or parts[0] != "p":
                raise GraphFormatError(lineno, "expected header 'p <v> <e>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(lineno, "non-integer header field") from None
            if n < 0 or m < 0:
                raise GraphFormatError(lineno, "negative count in header")
            continue
        if len(parts) != 2:
            raise GraphFormatError(lineno, "expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(lineno, "non-integer vertex id") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(lineno, f"vertex id out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(lineno, "loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(lineno, "duplicate edge")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError(0, "missing header")
    if len(edges) != m:
        raise GraphFormatError(lineno if edges else 1, f"header says {m} edges, found {len(edges)}")
    return Graph(range(n), edges)


def load_edge_list(path: str, stdin: TextIO = None) -> Graph:
    if path == "-":
        import sys
        return read_edge_list((stdin or sys.stdin).read().splitlines())
    with open(path) as fh:
        return read_edge_list(fh)


def write_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    """Serialize ``g``; vertex ids are compacted to ``0..n-1`` in order."""
    cg = g.compact()
    out = [f"# {c}" for c in comments]
    out.append(f"p {cg.num_vertices()} {cg.num_edges()}")
    out.extend(f"{u} {v}" for u, v in cg.edges)
    return "\n".join(out) + "\n"


def model_to_json(model: MinorModel) -> Dict:
    return {
        "host_vertices": model.host.num_vertices(),
        "branch_sets": {str(k): sorted(v) for k, v in sorted(model.branch_sets.items(), key=lambda kv: repr(kv[0]))},
        "realized_edges": [[a, b] for a, b in realized_edges(model)],
    }


def model_from_json(data: Dict, host: Graph) -> MinorModel:
    sets = {}
    for k, ids in data["branch_sets"].items():
        key = int(k) if k.lstrip("-").isdigit() else k
        sets[key] = frozenset(int(x) for x in ids)
    return MinorModel(host, sets)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)

"""Minor models (branch-set certificates) and contraction traces."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Tuple

from .graph import Graph, GraphError


class InvalidModelError(ValueError):
    """The branch sets do not form a model (empty, overlapping or disconnected)."""


@dataclass(frozen=True)
class MinorModel:
    """Disjoint connected branch sets in ``host``, keyed by pattern vertex."""

    host: Graph
    branch_sets: Mapping[Hashable, FrozenSet[int]]

    def __post_init__(self):
        frozen = {k: frozenset(v) for k, v in self.branch_sets.items()}
        object.__setattr__(self, "branch_sets", frozen)

    def __len__(self) -> int:
        return len(self.branch_sets)

    def restrict(self, keys: Iterable[Hashable]) -> "MinorModel":
        return MinorModel(self.host, {k: self.branch_sets[k] for k in keys})

    def covered(self) -> FrozenSet[int]:
        out: set = set()
        for b in self.branch_sets.values():
            out |= b
        return frozenset(out)


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    condition: Optional[str] = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "pass"
        return f"fail: {self.condition} ({self.witness!r})"


def _connected(host: Graph, vs: FrozenSet[int]) -> bool:
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in host.neighbors(x):
            if y in vs and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(vs)


def _joined(host: Graph, a: FrozenSet[int], b: FrozenSet[int]) -> bool:
    if len(a) > len(b):
        a, b = b, a
    return any(not host.neighbors(x).isdisjoint(b) for x in a)


def _structure(model: MinorModel) -> VerificationReport:
    host = model.host
    owner: Dict[int, Hashable] = {}
    for key in sorted(model.branch_sets, key=repr):
        bs = model.branch_sets[key]
        if not bs:
            return VerificationReport(False, "nonempty", key)
        for x in sorted(bs):
            if x not in host:
                return VerificationReport(False, "membership", (key, x))
            if x in owner:
                return VerificationReport(False, "disjoint", (owner[x], key, x))
            owner[x] = key
    for key in sorted(model.branch_sets, key=repr):
        if not _connected(host, model.branch_sets[key]):
            return VerificationReport(False, "connected", key)
    return VerificationReport(True)


def verify_model(model: MinorModel,
                 required_pattern_edges: Iterable[Tuple[Hashable, Hashable]] = ()) -> VerificationReport:
    """Check the model conditions; on failure name the first violated one.

    Conditions are tested in the order nonempty, membership, disjoint,
    connected, then one host edge for every required pattern pair.
    """
    rep = _structure(model)
    if not rep:
        return rep
    for a, b in required_pattern_edges:
        if a not in model.branch_sets or b not in model.branch_sets:
            return VerificationReport(False, "pattern-vertex", (a, b))
        if not _joined(model.host, model.branch_sets[a], model.branch_sets[b]):
            return VerificationReport(False, "edge", (a, b))
    return VerificationReport(True)


def realized_edges(model: MinorModel) -> List[Tuple[Hashable, Hashable]]:
    """Pattern pairs whose branch sets are joined by at least one host edge."""
    rep = _structure(model)
    if not rep:
        raise InvalidModelError(str(rep))
    keys = sorted(model.branch_sets, key=repr)
    return [(a, b) for a, b in combinations(keys, 2)
            if _joined(model.host, model.branch_sets[a], model.branch_sets[b])]


def model_edge_count(model: MinorModel) -> int:
    """Edges of the densest pattern the partition realizes."""
    return len(realized_edges(model))


def quotient(model: MinorModel) -> Graph:
    """The graph on branch-set keys realized by the model (integer keys only)."""
    return Graph(model.branch_sets, realized_edges(model))


DELETE = "delete"
CONTRACT = "contract"


@dataclass(frozen=True)
class ContractionTrace:
    """Ordered delete/contract operations applied to a host graph.

    Ops are ``("delete", v)`` or ``("contract", u, v, survivor)``.
    """

    ops: Tuple[tuple, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.ops)

    def __add__(self, other: "ContractionTrace") -> "ContractionTrace":
        return ContractionTrace(self.ops + other.ops)

    def replay(self, host: Graph) -> Tuple[Graph, MinorModel]:
        """Re-apply the ops to ``host``.

        Returns the reduced graph and a model of it in ``host`` whose keys
        are the surviving vertex ids.
        """
        g = host
        branch: Dict[int, set] = {v: {v} for v in host.vertices}
        for op in self.ops:
            if op[0] == DELETE:
                v = op[1]
                g = g.delete([v])
                del branch[v]
            elif op[0] == CONTRACT:
                _, u, v, survivor = op
                if survivor != min(u, v):
                    raise GraphError(f"bad survivor in {op}")
                g = g.contract(u, v)
                gone = max(u, v)
                branch[survivor] |= branch.pop(gone)
            else:
                raise GraphError(f"unknown trace op {op!r}")
        return g, MinorModel(host, branch)

    def to_json(self) -> list:
        return [list(op) for op in self.ops]

    @classmethod
    def from_json(cls, data: list) -> "ContractionTrace":
        return cls(tuple(tuple(op) for op in data))

"""Text formats: edge-list graphs, JSON instances, DIMACS CNF.

Parsers raise :class:`ParseError` with the offending line number; every
serializer round-trips through its parser.
"""

from __future__ import annotations

import json
from typing import Any

from .constructions import PartitionedInstance
from .graph import Graph, from_edges
from .solvers import CnfFormula


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            out.append((lineno, stripped))
    return out


# ---------------------------------------------------------------------------
# Edge-list graphs:  "n m" header, then m lines "u v"
# ---------------------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty graph file: expected an 'n m' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"expected header 'n m', got {header!r}", lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"non-integer header {header!r}", lineno) from None
    body = lines[1:]
    if len(body) > m:
        raise ParseError(
            f"header promises {m} edges but the file has {len(body)}",
            body[m][0],
        )
    if len(body) < m:
        raise ParseError(
            f"header promises {m} edges but the file has {len(body)}"
        )
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer edge {line!r}", lineno) from None
        if u == v:
            raise ParseError(f"edge ({u}, {v}) is a self-loop", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(
                f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}", lineno
            )
        edges.append((u, v))
    try:
        return from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def graph_to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Instance JSON
# ---------------------------------------------------------------------------


def parse_instance(text: str) -> PartitionedInstance:
    """Parse the JSON instance format.

    Keys: ``n``, ``edges``, ``d``, ``pairs`` (each ``{"fu", "fv", "x"}``),
    optional ``labels``.  Structural pair rules are enforced here; the
    deeper neighbourhood rules are the recognizer's job.
    """
    try:
        data: Any = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("instance JSON must be an object")
    for key in ("n", "edges", "d", "pairs"):
        if key not in data:
            raise ParseError(
                f"missing key {key!r}; pair-labelled instances need it"
            )
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError(f"'n' must be a non-negative integer, got {n!r}")
    try:
        g = from_edges(n, [tuple(e) for e in data["edges"]])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad edge list: {exc}") from exc

    d_list = data["d"]
    if not isinstance(d_list, list) or not all(
        isinstance(v, int) and 0 <= v < n for v in d_list
    ):
        raise ParseError("'d' must list vertices in range")
    d = frozenset(d_list)

    pair_map: dict[tuple[int, int], tuple[int, int]] = {}
    used: set[int] = set()
    for idx, entry in enumerate(data["pairs"]):
        if not isinstance(entry, dict) or not {"fu", "fv", "x"} <= set(entry):
            raise ParseError(f"pair #{idx} must have keys fu, fv, x")
        fu, fv, x = entry["fu"], entry["fv"], entry["x"]
        if fu not in d or fv not in d or fu == fv:
            raise ParseError(
                f"pair #{idx}: endpoints ({fu}, {fv}) must be two distinct "
                f"D-vertices"
            )
        if (
            not isinstance(x, list)
            or len(x) != 2
            or not all(isinstance(v, int) and 0 <= v < n for v in x)
        ):
            raise ParseError(f"pair #{idx}: 'x' must list two vertices")
        x1, x2 = x
        if x1 == x2 or x1 in d or x2 in d:
            raise ParseError(
                f"pair #{idx}: subdivision vertices must be two distinct "
                f"non-D vertices"
            )
        key = (min(fu, fv), max(fu, fv))
        if key in pair_map:
            raise ParseError(f"pair #{idx}: duplicate pair for edge {key}")
        if x1 in used or x2 in used:
            raise ParseError(
                f"pair #{idx}: a subdivision vertex appears in two pairs"
            )
        used.update((x1, x2))
        pair_map[key] = (x1, x2)

    labels: dict[int, str] = {}
    for key_str, value in data.get("labels", {}).items():
        try:
            vertex = int(key_str)
        except ValueError:
            raise ParseError(f"label key {key_str!r} is not a vertex") from None
        labels[vertex] = str(value)

    return PartitionedInstance(g=g, d=d, pair_map=pair_map, labels=labels)


def instance_to_json(inst: PartitionedInstance) -> str:
    data: dict[str, Any] = {
        "n": inst.g.n,
        "edges": [list(e) for e in inst.g.edges()],
        "d": sorted(inst.d),
        "pairs": [
            {"fu": a, "fv": b, "x": list(inst.pair_map[(a, b)])}
            for a, b in sorted(inst.pair_map)
        ],
    }
    if inst.labels:
        data["labels"] = {str(v): name for v, name in sorted(inst.labels.items())}
    return json.dumps(data, indent=2) + "\n"


# ---------------------------------------------------------------------------
# DIMACS CNF
# ---------------------------------------------------------------------------


def parse_cnf(text: str) -> CnfFormula:
    """DIMACS: 'p cnf <vars> <clauses>', clauses as 0-terminated literals."""
    num_vars: int | None = None
    promised = 0
    clauses: list[tuple[int, int, int]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise ParseError("duplicate problem line", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(
                    f"expected 'p cnf <vars> <clauses>', got {line!r}", lineno
                )
            try:
                num_vars, promised = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer problem line {line!r}", lineno) from None
            continue
        if num_vars is None:
            raise ParseError("clause before the problem line", lineno)
        try:
            tokens = [int(t) for t in line.split()]
        except ValueError:
            raise ParseError(f"non-integer literal in {line!r}", lineno) from None
        for token in tokens:
            if token == 0:
                if len(current) != 3:
                    raise ParseError(
                        f"clause {current} does not have exactly three "
                        f"literals",
                        lineno,
                    )
                clauses.append((current[0], current[1], current[2]))
                current = []
            else:
                current.append(token)
    if num_vars is None:
        raise ParseError("missing problem line")
    if current:
        raise ParseError(f"unterminated clause {current}")
    if len(clauses) != promised:
        raise ParseError(
            f"problem line promises {promised} clauses, found {len(clauses)}"
        )
    try:
        return CnfFormula(num_vars, tuple(clauses))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def cnf_to_text(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    lines += [" ".join(str(lit) for lit in clause) + " 0" for clause in f.clauses]
    return "\n".join(lines) + "\n"

"""
The line-oriented HypergraphFile text format:

    dhg 1
    # comment
    vertex <name>
    arc <name>... -> <name>...
"""
import json
from typing import Dict, List, Optional, Tuple

from hyperfactor.core.errors import FormatError
from hyperfactor.core.hypergraph import canonical_order
from hyperfactor.core.types import Coordinatization, DirectedHypergraph, Hyperarc

HEADER = "dhg 1"
ARROW = "->"


def parse(text: str) -> DirectedHypergraph:
    diagnostics: List[Tuple[int, str]] = []
    index: Dict[str, int] = {}
    arcs: List[Hyperarc] = []
    arc_line: Dict[Tuple[frozenset, frozenset], int] = {}

    def vid(name: str) -> int:
        return index.setdefault(name, len(index))

    header_seen = False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        if not header_seen:
            if line != HEADER:
                diagnostics.append((number, f"expected header {HEADER!r}, got {line!r}"))
                break
            header_seen = True
            continue

        directive, _, rest = line.partition(" ")
        if directive == "vertex":
            names = rest.split()
            if len(names) != 1:
                diagnostics.append((number, "vertex takes exactly one name"))
                continue
            if names[0] == ARROW:
                diagnostics.append((number, f"{ARROW!r} is not a vertex name"))
                continue
            vid(names[0])
        elif directive == "arc":
            tokens = rest.split()
            arrows = tokens.count(ARROW)
            if arrows != 1:
                diagnostics.append((number, "arc is missing '->'" if not arrows else "arc has more than one '->'"))
                continue
            split = tokens.index(ARROW)
            tail, head = tokens[:split], tokens[split + 1:]
            if not tail or not head:
                diagnostics.append((number, "arc has an empty " + ("tail" if not tail else "head")))
                continue
            if len(set(tail) | set(head)) < 2:
                diagnostics.append((number, f"loop on vertex {tail[0]!r}"))
                continue
            arc = Hyperarc.of([vid(x) for x in tail], [vid(x) for x in head])
            if arc.set_key in arc_line:
                diagnostics.append((number, f"multi-arc, already declared on line {arc_line[arc.set_key]}"))
                continue
            arc_line[arc.set_key] = number
            arcs.append(arc)
        else:
            diagnostics.append((number, f"unknown directive {directive!r}"))

    if not header_seen and not diagnostics:
        diagnostics.append((1, f"missing header {HEADER!r}"))
    if diagnostics:
        raise FormatError(diagnostics)
    return DirectedHypergraph(tuple(index), tuple(arcs))


def _arc_line(h: DirectedHypergraph, arc: Hyperarc) -> str:
    tail, head = h.arc_names(arc)
    return f"arc {' '.join(tail)} -> {' '.join(head)}"


def serialize(h: DirectedHypergraph, c: Optional[Coordinatization] = None) -> str:
    """
    Byte-stable text form. With coordinates, vertices and arcs follow the
    lexicographic coordinate order and a `# coord` table is appended;
    without, vertices and arcs are ordered by name.
    """
    if c is not None:
        order = canonical_order(h, c)
        vertices = list(order.vertices)
        arcs = list(order.arcs)
    else:
        vertices = sorted(range(h.n), key=h.names.__getitem__)
        by_name = lambda v: h.names[v]
        arcs = [Hyperarc(tuple(sorted(e.tail, key=by_name)), tuple(sorted(e.head, key=by_name))) for e in h.arcs]
        arcs.sort(key=lambda e: h.arc_names(e))

    covered = {v for e in h.arcs for v in e.vertices}
    lines = [HEADER]
    lines += [f"vertex {h.names[v]}" for v in vertices if v not in covered]
    lines += [_arc_line(h, e) for e in arcs]
    if c is not None:
        lines += [f"# coord {h.names[v]} = ({','.join(map(str, c.coords[v]))})" for v in vertices]
    return "\n".join(lines) + "\n"


def to_dict(h: DirectedHypergraph, c: Optional[Coordinatization] = None) -> dict:
    vertices = list(c.lex_order()) if c is not None else sorted(range(h.n), key=h.names.__getitem__)
    data = {
        "vertices": [h.names[v] for v in vertices],
        "arcs": [{"tail": list(tail), "head": list(head)} for tail, head in sorted(h.arc_names(e) for e in h.arcs)],
    }
    if c is not None:
        data["coordinates"] = {h.names[v]: list(c.coords[v]) for v in vertices}
    return data


def to_json(h: DirectedHypergraph, c: Optional[Coordinatization] = None) -> str:
    return json.dumps(to_dict(h, c), ensure_ascii=False, indent=2)

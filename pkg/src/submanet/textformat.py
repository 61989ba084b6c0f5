"""Line-oriented graph text format.

::

    # comment
    vertex a
    arc a b

Arcs declare unseen endpoints in order of appearance unless
``auto_declare=False``.
"""
from __future__ import annotations

from .digraph import Digraph, build
from .errors import DanglingEndpoint, GraphError, InvalidLabel, LoopArc, ParseError

__all__ = ["parse_graph", "serialize_graph", "to_dot"]


def parse_graph(text: str, auto_declare: bool = True) -> Digraph:
    vertices: list = []
    arcs: list = []
    declared: set = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *args = line.split()
        if kind == "vertex":
            if len(args) != 1:
                raise ParseError("expected 'vertex <label>'", lineno)
            vertices.append(args[0])
            declared.add(args[0])
        elif kind == "arc":
            if len(args) != 2:
                raise ParseError("expected 'arc <tail> <head>'", lineno)
            tail, head = args
            if tail == head:
                err = LoopArc(tail)
                err.line = lineno
                raise err
            for end in args:
                if end not in declared:
                    if not auto_declare:
                        err = DanglingEndpoint(tuple(args))
                        err.line = lineno
                        raise err
                    vertices.append(end)
                    declared.add(end)
            arcs.append((tail, head))
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)
    if not vertices:
        raise ParseError("graph declares no vertices")
    try:
        return build(vertices, arcs)
    except InvalidLabel as exc:
        raise ParseError(str(exc)) from exc
    except GraphError:
        raise


def serialize_graph(D: Digraph) -> str:
    lines = [f"vertex {v}" for v in D.vertices]
    lines += [f"arc {t} {h}" for t, h in D.arcs]
    return "\n".join(lines) + "\n"


def to_dot(D: Digraph, name: str = "D") -> str:
    """Emit-only Graphviz rendering."""
    lines = [f"digraph {name} {{"]
    lines += [f'  "{v}";' for v in D.vertices]
    lines += [f'  "{t}" -> "{h}";' for t, h in D.arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"

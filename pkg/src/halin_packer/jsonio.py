"""Graph and coloring JSON interchange, plus DOT rendering."""

import json

import numpy as np

from .errors import InvalidColoring, InvalidGraph
from .graph_core import SPacking, build_halin

FORMAT_VERSION = 1


def graph_to_json(h):
    return {
        "format_version": FORMAT_VERSION,
        "tree_edges": h.tree_edges_named(),
        "cycle": [h.names[v] for v in h.cycle],
        "vertices": list(h.names),
    }


def graph_from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "tree_edges" not in obj or "cycle" not in obj:
        raise InvalidGraph('graph JSON needs "tree_edges" and "cycle"')
    edges = obj["tree_edges"]
    if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise InvalidGraph('"tree_edges" must be a list of [id, id] pairs')
    vertices = obj.get("vertices")
    for x in [x for e in edges for x in e] + list(obj["cycle"]) + list(vertices or []):
        if not isinstance(x, (str, int)) or isinstance(x, bool):
            raise InvalidGraph(f"vertex ids must be strings or integers, got {x!r}")
    return build_halin(edges, obj["cycle"], vertices)


def coloring_to_json(names, schedule, colors, diagnostics=None):
    out = {
        "format_version": FORMAT_VERSION,
        "schedule": list(schedule.s),
        "colors": {str(name): int(c) for name, c in zip(names, colors)},
    }
    if diagnostics is not None:
        out["diagnostics"] = diagnostics.to_json()
    return out


def coloring_from_json(obj, names):
    """Return ``(schedule, colors)``; uncolored vertices keep class 0."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        schedule = SPacking(tuple(obj["schedule"]))
        mapping = obj["colors"]
    except (KeyError, TypeError) as exc:
        raise InvalidColoring(f"malformed coloring JSON: {exc}") from None
    index = {str(name): i for i, name in enumerate(names)}
    colors = np.zeros(len(names), dtype=np.int64)
    for key, cls in mapping.items():
        if key not in index:
            raise InvalidColoring(f"coloring references unknown vertex {key!r}")
        if not isinstance(cls, int) or isinstance(cls, bool):
            raise InvalidColoring(f"class of vertex {key!r} must be an integer")
        colors[index[key]] = cls
    return schedule, colors


def class_names(schedule):
    """Display names: 1, 1', 2, 3 for (1,1,2,3) and 1, 2_a, 2_b, ... otherwise."""
    s = schedule.s
    if s == (1, 1, 2, 3):
        return ["1", "1'", "2", "3"]
    names = []
    for c, value in enumerate(s):
        group = [i for i, x in enumerate(s) if x == value]
        if len(group) == 1:
            names.append(str(value))
        else:
            names.append(f"{value}_{'abcdefghijklmnop'[group.index(c)]}")
    return names


def to_dot(h, schedule=None, colors=None):
    labels = class_names(schedule) if schedule is not None else None
    lines = ["graph halin {", "  node [shape=circle];"]
    for v, name in enumerate(h.names):
        text = str(name)
        if colors is not None:
            text += f"\\n{labels[int(colors[v]) - 1]}"
        shape = "doublecircle" if h.is_leaf(v) else "circle"
        lines.append(f'  "{name}" [label="{text}", shape={shape}];')
    for u, w in h.tree_edges():
        lines.append(f'  "{h.names[u]}" -- "{h.names[w]}" [style=solid];')
    for i, v in enumerate(h.cycle):
        w = h.cycle[(i + 1) % h.n]
        lines.append(f'  "{h.names[v]}" -- "{h.names[w]}" [style=dashed, color=blue];')
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Rendering: DOT, static SVG disk pictures, and canonical JSON.

All outputs are deterministic — vertices and edges are emitted in sorted
order and the force layout is a fixed number of averaging rounds from a
fixed start — so repeated exports of the same map are byte-identical.
"""

from __future__ import annotations

import math

from .core_map import DiskMap, edge_of
from .io import Document, serialize

_COLORS = {"black": "black", "white": "white", "cross": "red", "mono": "gray"}
_STYLES = {"solid": "solid", "bold": "bold", "dotted": "dotted"}
_WIDTHS = {"solid": 1.5, "bold": 3.5, "dotted": 1.5}
_DASHES = {"solid": None, "bold": None, "dotted": "6,4"}


def to_dot(m: DiskMap) -> bytes:
    lines = ["graph dessin {"]
    for v in sorted(m.vertex_tags):
        tag = m.vertex_tags[v]
        real = "true" if m.is_real(v) else "false"
        lines.append(
            f'  "{v}" [kind="{tag}", real={real}, fillcolor="{_COLORS[tag]}"];'
        )
    for e in sorted(m.edge_tags):
        u = m.dart_vertex(e + ".0")
        w = m.dart_vertex(e + ".1")
        head = m.edge_head.get(e)
        attrs = f'kind="{m.edge_tags[e]}", style="{_STYLES[m.edge_tags[e]]}"'
        if head is not None:
            attrs += f', head="{m.dart_vertex(head)}"'
        lines.append(f'  "{u}" -- "{w}" [{attrs}];')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def _layout(m: DiskMap, radius: float = 200.0) -> dict[str, tuple[float, float]]:
    """Real vertices pinned on the circle; inner ones relax toward the
    average of their neighbours (plus the disk centre, so isolated or
    symmetric configurations stay put)."""
    pos = {}
    n = max(len(m.boundary), 1)
    for i, v in enumerate(m.boundary):
        a = 2 * math.pi * i / n - math.pi / 2
        pos[v] = (radius * math.cos(a), radius * math.sin(a))
    inner = sorted(v for v in m.vertex_tags if not m.is_real(v))
    for v in inner:
        pos[v] = (0.0, 0.0)
    nbrs = {v: [] for v in inner}
    for e in m.edge_tags:
        u, w = m.dart_vertex(e + ".0"), m.dart_vertex(e + ".1")
        if u in nbrs:
            nbrs[u].append(w)
        if w in nbrs:
            nbrs[w].append(u)
    for _ in range(60):
        for v in inner:
            pts = [pos[w] for w in nbrs[v]] or [(0.0, 0.0)]
            x = sum(p[0] for p in pts) / (len(pts) + 1)
            y = sum(p[1] for p in pts) / (len(pts) + 1)
            pos[v] = (x, y)
    return pos


def to_svg(m: DiskMap, radius: float = 200.0) -> bytes:
    pos = _layout(m, radius)
    size = int(2.4 * radius)
    half = size / 2
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}"'
        f' viewBox="{-half} {-half} {size} {size}">',
        f'<circle class="disk" cx="0" cy="0" r="{radius}"'
        ' fill="none" stroke="lightgray"/>',
    ]
    for e in sorted(m.edge_tags):
        tag = m.edge_tags[e]
        (x1, y1) = pos[m.dart_vertex(e + ".0")]
        (x2, y2) = pos[m.dart_vertex(e + ".1")]
        dash = f' stroke-dasharray="{_DASHES[tag]}"' if _DASHES[tag] else ""
        parts.append(
            f'<line class="edge {tag}" x1="{x1:.1f}" y1="{y1:.1f}"'
            f' x2="{x2:.1f}" y2="{y2:.1f}" stroke="black"'
            f' stroke-width="{_WIDTHS[tag]}"{dash}/>'
        )
    for v in sorted(m.vertex_tags):
        tag = m.vertex_tags[v]
        x, y = pos[v]
        if tag == "cross":
            parts.append(
                f'<path class="vertex cross" d="M {x - 5:.1f} {y - 5:.1f}'
                f' l 10 10 m 0 -10 l -10 10" stroke="black" stroke-width="2"/>'
            )
        else:
            fill = {"black": "black", "white": "white", "mono": "gray"}[tag]
            parts.append(
                f'<circle class="vertex {tag}" cx="{x:.1f}" cy="{y:.1f}" r="5"'
                f' fill="{fill}" stroke="black"/>'
            )
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode()


def to_json(m: DiskMap, kind: str = "dessin") -> bytes:
    return serialize(Document(kind, m)).encode()


def export(value, fmt: str, kind: str = "dessin") -> bytes:
    if fmt == "dot":
        return to_dot(value)
    if fmt == "svg":
        return to_svg(value)
    if fmt == "json":
        return to_json(value, kind)
    raise ValueError(f"unknown export format {fmt!r}")

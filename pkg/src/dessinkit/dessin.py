"""Dessins: three-coloured decorated graphs in the disk.

A dessin records the branch data of a real rational function with three
critical values 0, 1, infinity on the quotient disk.  Vertices are tagged

* ``black``  -- preimages of 0 (ramification 3: six darts inside, four on the
  boundary),
* ``white``  -- preimages of 1 (ramification 2),
* ``cross``  -- preimages of infinity (simple poles),
* ``mono``   -- critical points of the function inside an edge of one kind
  (boundary only, trivalent),

and edges carry one of three kinds, each oriented by the flow of the function
value along the edge:

* ``bold``   -- value in [0, 1], directed black -> white,
* ``dotted`` -- value in [1, oo], directed white -> cross,
* ``solid``  -- value in [oo, 0] (through the negative reals), directed
  cross -> black.

The boundary circle is entirely covered by edges.  A trivalent boundary
``mono`` vertex is a local extremum of the value along the boundary: at a
maximum the two boundary darts point in and the inner dart points out (the
value keeps growing inward there, by harmonicity), at a minimum the reverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core_map import (
    DiskMap,
    MapBuilder,
    MapError,
    RewriteRule,
    build_map,
    darts_of,
    edge_of,
    other_dart,
)

BLACK, WHITE, CROSS, MONO = "black", "white", "cross", "mono"
SOLID, BOLD, DOTTED = "solid", "bold", "dotted"
KINDS = (SOLID, BOLD, DOTTED)


class DessinError(MapError):
    pass


# ---------------------------------------------------------------------------
# validation


def _kind(m: DiskMap, dart: str) -> str:
    return m.edge_tags[edge_of(dart)]


def _incoming(m: DiskMap, dart: str) -> bool:
    """True when the edge of ``dart`` is directed toward the dart's vertex."""
    return m.edge_head[edge_of(dart)] == dart


def validate_dessin(m: DiskMap) -> None:
    errs = []
    if not m.boundary:
        raise DessinError("a dessin has a nonempty boundary")
    if any(e is None for e in m.boundary_edges):
        errs.append("the boundary circle must be entirely covered by edges")
    if m.anchors:
        errs.append("dessins have no isolated vertices")
    for e, t in m.edge_tags.items():
        if t not in KINDS:
            errs.append(f"edge {e}: unknown kind {t}")
        if m.edge_head[e] is None:
            errs.append(f"edge {e}: dessin edges are directed")
    if errs:
        raise DessinError("; ".join(errs))

    for v, tag in m.vertex_tags.items():
        rot = m.rotations[v]
        kinds = [_kind(m, d) for d in rot]
        inc = [_incoming(m, d) for d in rot]
        real = m.is_real(v)
        if tag == BLACK:
            want = 4 if real else 6
            if len(rot) != want:
                errs.append(f"{v}: black vertex must have {want} darts")
                continue
            ok = all(k in (SOLID, BOLD) for k in kinds) and all(
                kinds[i] != kinds[(i + 1) % len(kinds)] for i in range(len(kinds))
            )
            if not ok:
                errs.append(f"{v}: darts at a black vertex alternate solid/bold")
            for k, i in zip(kinds, inc):
                if k == SOLID and not i:
                    errs.append(f"{v}: solid edges point into black vertices")
                if k == BOLD and i:
                    errs.append(f"{v}: bold edges point out of black vertices")
        elif tag == WHITE:
            if real:
                if len(rot) != 3 or kinds[0] != kinds[2] or kinds[0] not in (BOLD, DOTTED):
                    errs.append(f"{v}: boundary white vertex has two boundary darts "
                                "of one kind (bold or dotted) and one inner dart")
                    continue
                if kinds[1] == kinds[0] or kinds[1] not in (BOLD, DOTTED):
                    errs.append(f"{v}: inner dart at a boundary white has the other kind")
            else:
                if len(rot) != 4 or any(
                    kinds[i] == kinds[(i + 1) % 4] for i in range(4)
                ) or set(kinds) != {BOLD, DOTTED}:
                    errs.append(f"{v}: inner white vertex alternates bold/dotted")
                    continue
            for k, i in zip(kinds, inc):
                if k == BOLD and not i:
                    errs.append(f"{v}: bold edges point into white vertices")
                if k == DOTTED and i:
                    errs.append(f"{v}: dotted edges point out of white vertices")
        elif tag == CROSS:
            if len(rot) != 2 or sorted(kinds) != [DOTTED, SOLID]:
                errs.append(f"{v}: cross vertex carries one dotted and one solid dart")
                continue
            for k, i in zip(kinds, inc):
                if k == DOTTED and not i:
                    errs.append(f"{v}: dotted edges point into crosses")
                if k == SOLID and i:
                    errs.append(f"{v}: solid edges point out of crosses")
        elif tag == MONO:
            if not real:
                errs.append(f"{v}: monochrome vertices live on the boundary")
                continue
            if len(rot) != 3 or len(set(kinds)) != 1:
                errs.append(f"{v}: monochrome vertex has three darts of one kind")
                continue
            if inc[0] != inc[2] or inc[1] == inc[0]:
                errs.append(f"{v}: monochrome vertex is a boundary extremum "
                            "(both boundary darts in and inner out, or the reverse)")
        else:
            errs.append(f"{v}: unknown vertex tag {tag}")
    if errs:
        raise DessinError("; ".join(errs))

    r_b = sum(1 for v in m.boundary if m.vertex_tags[v] == BLACK)
    i_b = sum(1 for v, t in m.vertex_tags.items() if t == BLACK and not m.is_real(v))
    r_w = sum(1 for v in m.boundary if m.vertex_tags[v] == WHITE)
    i_w = sum(1 for v, t in m.vertex_tags.items() if t == WHITE and not m.is_real(v))
    r_x = sum(1 for v in m.boundary if m.vertex_tags[v] == CROSS)
    i_x = sum(1 for v, t in m.vertex_tags.items() if t == CROSS and not m.is_real(v))
    if (r_b + 2 * i_b) % 2 or r_b + 2 * i_b == 0:
        errs.append("black vertices must count to an even positive total")
        raise DessinError("; ".join(errs))
    d = (r_b + 2 * i_b) // 2
    if r_w + 2 * i_w != 3 * d:
        errs.append(f"white count {r_w}+2*{i_w} does not match 3*degree={3 * d}")
    if r_x + 2 * i_x != 6 * d:
        errs.append(f"cross count {r_x}+2*{i_x} does not match 6*degree={6 * d}")

    # the function value is strictly monotone along each edge, so no directed
    # cycle may run through monochrome vertices within a single kind
    for kind in KINDS:
        adj: dict[str, list[str]] = {}
        for e, t in m.edge_tags.items():
            if t != kind:
                continue
            a, b = darts_of(e)
            u, w = m.dart_vertex(a), m.dart_vertex(b)
            if m.vertex_tags[u] == MONO and m.vertex_tags[w] == MONO:
                tail = m.tail_vertex(e)
                head = m.head_vertex(e)
                if tail == head:
                    errs.append(f"edge {e}: directed {kind} loop")
                else:
                    adj.setdefault(tail, []).append(head)
        state: dict[str, int] = {}

        def dfs(u: str) -> bool:
            state[u] = 1
            for w in adj.get(u, ()):
                s = state.get(w, 0)
                if s == 1 or (s == 0 and dfs(w)):
                    return True
            state[u] = 2
            return False

        for u in sorted(adj):
            if state.get(u, 0) == 0 and dfs(u):
                errs.append(f"directed cycle of {kind} monochrome edges")
                break
    if errs:
        raise DessinError("; ".join(errs))


def is_dessin(m: DiskMap) -> bool:
    try:
        validate_dessin(m)
        return True
    except MapError:
        return False


def degree(m: DiskMap) -> int:
    r_b = sum(1 for v in m.boundary if m.vertex_tags[v] == BLACK)
    i_b = sum(1 for v, t in m.vertex_tags.items() if t == BLACK and not m.is_real(v))
    return (r_b + 2 * i_b) // 2


# ---------------------------------------------------------------------------
# boundary structure


@dataclass(frozen=True)
class Pillar:
    """A maximal boundary stretch of dotted or bold edges.

    Dotted pillars run between two crosses, bold pillars between two black
    vertices; ``whites`` counts the white vertices strictly inside.  The
    shape letter encodes the pillar in the real part of the curve: a dotted
    pillar is an oval (O) or zigzag (Z), a bold one a wave (W) or jump (J),
    according to the parity of its white count.
    """

    kind: str
    vertices: tuple[str, ...]  # including the two bounding vertices
    whites: int

    @property
    def shape(self) -> str:
        if self.kind == DOTTED:
            return "O" if self.whites % 2 == 0 else "Z"
        return "W" if self.whites % 2 == 0 else "J"


def is_hyperbolic(m: DiskMap) -> bool:
    return all(m.edge_tags[e] == DOTTED for e in m.boundary_edges)


def pillars(m: DiskMap) -> list[Pillar]:
    """Pillars in boundary order; empty for hyperbolic dessins."""
    if is_hyperbolic(m):
        return []
    n = len(m.boundary)
    delims = [i for i, v in enumerate(m.boundary)
              if m.vertex_tags[v] in (BLACK, CROSS)]
    if not delims:
        return []
    out = []
    for a, b in zip(delims, delims[1:] + [delims[0] + n]):
        kind = m.edge_tags[m.boundary_edges[a % n]]
        if kind == SOLID:
            continue
        verts = tuple(m.boundary[i % n] for i in range(a, b + 1))
        whites = sum(1 for v in verts if m.vertex_tags[v] == WHITE)
        out.append(Pillar(kind=kind, vertices=verts, whites=whites))
    return out


def real_part_code(m: DiskMap) -> str:
    """Canonical cyclic word of pillar shapes (or H<n> for hyperbolic)."""
    if is_hyperbolic(m):
        return "H%d" % sum(1 for v in m.boundary if m.vertex_tags[v] == WHITE)
    word = "".join(p.shape for p in pillars(m))
    if not word:
        return ""
    cands = []
    for w in (word, word[::-1]):
        cands.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(cands)


# ---------------------------------------------------------------------------
# move machinery helpers


def _rotated_to(m: DiskMap, v: str) -> DiskMap:
    """Same map with the boundary list starting at ``v``."""
    k = m.boundary.index(v)
    if k == 0:
        return m
    n = len(m.boundary)
    anchors = {
        w: ((a - k) % n if isinstance(a, int) else a) for w, a in m.anchors.items()
    }
    return build_map(
        m.boundary[k:] + m.boundary[:k],
        m.vertex_tags,
        m.rotations,
        m.edge_tags,
        m.edge_head,
        m.boundary_edges[k:] + m.boundary_edges[:k],
        anchors,
    )


def _replace_dart(b: MapBuilder, old: str, new: str) -> None:
    for v, rot in b.rotations.items():
        for i, d in enumerate(rot):
            if d == old:
                rot[i] = new
                return
    raise MapError(f"dart {old} not found")


def _pop_edge(b: MapBuilder, e: str) -> None:
    """Forget an edge whose darts were already removed or replaced."""
    b.edge_tags.pop(e)
    b.edge_head.pop(e)


def _cyclic_from(seq, x):
    k = seq.index(x)
    return list(seq[k:]) + list(seq[:k])


def _try(apply, m, site) -> Optional[DiskMap]:
    try:
        out = apply(m, site)
        validate_dessin(out)
        return out
    except (MapError, KeyError, IndexError, ValueError):
        return None


def _filtered_sites(enumerate_sites, apply):
    def find(m: DiskMap) -> list:
        return [s for s in enumerate_sites(m) if _try(apply, m, s) is not None]

    return find


# ---------------------------------------------------------------------------
# monochrome modification


def _monomod_sites(m: DiskMap):
    real = set(e for e in m.boundary_edges if e)
    sites = set()
    for face in m.faces():
        if face.is_outer:
            continue
        occ = [d for d in face.darts if edge_of(d) not in real]
        for i, d1 in enumerate(occ):
            for d2 in occ[i + 1:]:
                e1, e2 = edge_of(d1), edge_of(d2)
                if e1 == e2 or m.edge_tags[e1] != m.edge_tags[e2]:
                    continue
                # the two passages must both agree or both disagree with the
                # walk; that is exactly when the reconnection keeps the value
                # monotone through the virtual crossing point
                if (m.edge_head[e1] == d1) != (m.edge_head[e2] == d2):
                    continue
                sites.add(tuple(sorted((d1, d2))))
    return sorted(sites)


def _monomod_apply(m: DiskMap, site) -> DiskMap:
    d1, d2 = site
    e1, e2 = edge_of(d1), edge_of(d2)
    kind = m.edge_tags[e1]
    b = MapBuilder(m)
    f1 = b.fresh_edge(kind)
    f2 = b.fresh_edge(kind)
    d1o, d2o = other_dart(d1), other_dart(d2)
    # walk passages X1 -> Y1 and X2 -> Y2 reconnect to X1 -> Y2 and X2 -> Y1
    _replace_dart(b, d1o, f1 + ".0")  # at Y1
    _replace_dart(b, d2, f1 + ".1")  # at X2
    _replace_dart(b, d1, f2 + ".0")  # at X1
    _replace_dart(b, d2o, f2 + ".1")  # at Y2
    h1, h2 = m.edge_head[e1], m.edge_head[e2]
    b.edge_head[f1] = f1 + ".0" if h1 == d1o else f1 + ".1"
    b.edge_head[f2] = f2 + ".0" if h1 == d1 else f2 + ".1"
    if (h1 == d1o) == (h2 == d2):
        raise MapError("passages disagree about orientation")
    _pop_edge(b, e1)
    _pop_edge(b, e2)
    return b.build()


# ---------------------------------------------------------------------------
# bridges


def _bridge_create_sites(m: DiskMap):
    sites = []
    real = set(e for e in m.boundary_edges if e)
    for g, r in enumerate(m.boundary_edges):
        face = m.inner_face_of_gap(g)
        q = m.boundary[(g + 1) % len(m.boundary)]
        dr = m.rotations[q][-1]
        agree_r = m.edge_head[r] != dr
        for d in face.darts:
            e = edge_of(d)
            if e in real or m.edge_tags[e] != m.edge_tags[r]:
                continue
            if (m.edge_head[e] != d) == agree_r:
                sites.append((r, d))
    return sorted(sites)


def _bridge_create_apply(m: DiskMap, site) -> DiskMap:
    r, di = site
    kind = m.edge_tags[r]
    g = m.gap_of_edge(r)
    p = m.boundary[g]
    m = _rotated_to(m, p)
    q = m.boundary[1]
    ei = edge_of(di)
    tail_d = other_dart(m.edge_head[ei])
    head_d = m.edge_head[ei]

    b = MapBuilder(m)
    m1 = b.fresh_vertex(MONO, prefix="mb")
    m2 = b.fresh_vertex(MONO, prefix="mb")
    seg_a = b.fresh_edge(kind)  # tail-side boundary segment (into m1)
    bridge = b.fresh_edge(kind)
    seg_b = b.fresh_edge(kind)  # head-side boundary segment (out of m2)
    e_in = b.fresh_edge(kind)  # tail half of the split inner edge, into m2
    e_out = b.fresh_edge(kind)  # head half, out of m1

    d_p = m.rotations[p][0]
    d_q = m.rotations[q][-1]
    flow_fwd = m.edge_head[r] == d_q  # r directed p -> q along the boundary

    # boundary order p, a, z, q where a is the mono next to the flow tail
    a, z = (m1, m2) if flow_fwd else (m2, m1)
    _replace_dart(b, d_p, seg_a + ".0")
    _replace_dart(b, d_q, seg_b + ".1")
    b.rotations[a] = [bridge + ".0", (e_out if a == m1 else e_in) + (".0" if a == m1 else ".1"),
                      seg_a + ".1"]
    b.rotations[z] = [seg_b + ".0", (e_out if z == m1 else e_in) + (".0" if z == m1 else ".1"),
                      bridge + ".1"]
    # boundary segments: into m1 on the tail side, out of m2 on the head side
    b.edge_head[seg_a] = seg_a + (".1" if flow_fwd else ".0")
    b.edge_head[seg_b] = seg_b + (".1" if flow_fwd else ".0")
    b.edge_head[bridge] = bridge + (".0" if a == m1 else ".1")

    _replace_dart(b, tail_d, e_in + ".0")
    _replace_dart(b, head_d, e_out + ".1")
    b.edge_head[e_in] = e_in + ".1"
    b.edge_head[e_out] = e_out + ".1"
    _pop_edge(b, r)
    _pop_edge(b, ei)

    b.boundary = [p, a, z] + list(m.boundary[1:])
    b.boundary_edges = [seg_a, bridge, seg_b] + list(m.boundary_edges[1:])
    return b.build()


def _bridge_destroy_sites(m: DiskMap):
    sites = []
    n = len(m.boundary)
    for g, e in enumerate(m.boundary_edges):
        u1, u2 = m.boundary[g], m.boundary[(g + 1) % n]
        if m.vertex_tags[u1] != MONO or m.vertex_tags[u2] != MONO or u1 == u2:
            continue
        mono_in = m.head_vertex(e)
        mono_out = u1 if mono_in == u2 else u2
        inner_in = m.rotations[mono_in][1]
        inner_out = m.rotations[mono_out][1]
        if edge_of(inner_in) == edge_of(inner_out):
            continue  # would leave a closed curve without vertices
        # the outer neighbours must continue the flow through the bridge
        a = m.prev_on_boundary(u1)
        bnd = m.next_on_boundary(u2)
        if a in (u1, u2) or bnd in (u1, u2):
            continue
        sites.append((e,))
    return sorted(sites)


def _bridge_destroy_apply(m: DiskMap, site) -> DiskMap:
    (e,) = site
    g = m.gap_of_edge(e)
    p = m.boundary[g - 1]
    m = _rotated_to(m, p)
    u1, u2 = m.boundary[1], m.boundary[2]
    q = m.boundary[3]
    mono_in = m.head_vertex(e)  # end with the outgoing inner dart
    kind = m.edge_tags[e]
    seg_a = m.boundary_edges[0]
    seg_b = m.boundary_edges[2]

    out_d = m.rotations[mono_in][1]
    in_d = m.rotations[u1 if mono_in == u2 else u2][1]
    c_d = other_dart(in_d)  # dart at the tail vertex of the inner path
    dd = other_dart(out_d)  # dart at the head vertex

    b = MapBuilder(m)
    fused_r = b.fresh_edge(kind)
    fused_i = b.fresh_edge(kind)
    _replace_dart(b, m.rotations[p][0], fused_r + ".0")
    _replace_dart(b, m.rotations[q][-1], fused_r + ".1")
    # overall boundary flow runs from the outer vertex feeding the in-end of
    # the bridge toward the one fed by the out-end
    b.edge_head[fused_r] = fused_r + (".0" if mono_in == u2 else ".1")
    _replace_dart(b, c_d, fused_i + ".0")
    _replace_dart(b, dd, fused_i + ".1")
    b.edge_head[fused_i] = fused_i + ".1"

    for x in (e, seg_a, seg_b, edge_of(out_d), edge_of(in_d)):
        _pop_edge(b, x)
    b.rotations[u1] = []
    b.rotations[u2] = []
    b.vertex_tags.pop(u1)
    b.vertex_tags.pop(u2)
    b.rotations.pop(u1)
    b.rotations.pop(u2)
    b.boundary = [p] + list(m.boundary[3:])
    b.boundary_edges = [fused_r] + list(m.boundary_edges[3:])
    return b.build()


# ---------------------------------------------------------------------------
# white insertion / extraction


def _white_in_sites(m: DiskMap):
    sites = []
    n = len(m.boundary)
    for i, w1 in enumerate(m.boundary):
        mono = m.boundary[(i + 1) % n]
        w2 = m.boundary[(i + 2) % n]
        if (m.vertex_tags[w1], m.vertex_tags[mono], m.vertex_tags[w2]) != (WHITE, MONO, WHITE):
            continue
        if len({w1, mono, w2}) != 3:
            continue
        kind = m.edge_tags[m.boundary_edges[i]]
        if m.edge_tags[m.boundary_edges[(i + 1) % n]] != kind:
            continue
        sites.append((w1,))
    return sorted(sites)


def _white_in_apply(m: DiskMap, site) -> DiskMap:
    (w1,) = site
    m = _rotated_to(m, m.prev_on_boundary(w1))
    el, w1, mono, w2, r = m.boundary[0], m.boundary[1], m.boundary[2], m.boundary[3], \
        m.boundary[4 % len(m.boundary)]
    kind = m.edge_tags[m.boundary_edges[1]]
    leg1 = m.rotations[w1][1]
    leg2 = m.rotations[w2][1]
    mono_inner = m.rotations[mono][1]

    b = MapBuilder(m)
    p = b.fresh_vertex(WHITE, prefix="iw")
    down = b.fresh_edge(kind)
    f_l = b.fresh_edge(kind)
    f_r = b.fresh_edge(kind)
    _replace_dart(b, m.rotations[el][0], f_l + ".0")
    _replace_dart(b, m.rotations[r][-1], f_r + ".1")
    b.rotations[mono] = [f_r + ".0", down + ".1", f_l + ".1"]
    b.rotations[p] = [down + ".0", leg2, mono_inner, leg1]
    if kind == DOTTED:
        # the mono flips from maximum to minimum: boundary flow leaves it
        b.edge_head[f_l] = f_l + ".0"
        b.edge_head[f_r] = f_r + ".1"
        b.edge_head[down] = down + ".1"
    else:
        b.edge_head[f_l] = f_l + ".1"
        b.edge_head[f_r] = f_r + ".0"
        b.edge_head[down] = down + ".0"
    for x in (m.boundary_edges[0], m.boundary_edges[1], m.boundary_edges[2],
              m.boundary_edges[3]):
        _pop_edge(b, x)
    for w in (w1, w2):
        b.rotations.pop(w)
        b.vertex_tags.pop(w)
    b.boundary = [el, mono] + list(m.boundary[4:])
    b.boundary_edges = [f_l, f_r] + list(m.boundary_edges[4:])
    return b.build()


def _white_out_sites(m: DiskMap):
    sites = []
    for v in sorted(m.vertex_tags):
        if m.vertex_tags[v] != WHITE or m.is_real(v):
            continue
        for d in m.rotations[v]:
            w = m.dart_vertex(other_dart(d))
            if m.vertex_tags[w] == MONO and m.edge_tags[edge_of(d)] in (BOLD, DOTTED):
                sites.append((v, d))
    return sorted(sites)


def _white_out_apply(m: DiskMap, site) -> DiskMap:
    p, down_d = site
    mono = m.dart_vertex(other_dart(down_d))
    kind = m.edge_tags[edge_of(down_d)]
    m = _rotated_to(m, m.prev_on_boundary(mono))
    el, r = m.boundary[0], m.boundary[2 % len(m.boundary)]
    x1, x2, x3 = _cyclic_from(m.rotations[p], down_d)[1:]

    b = MapBuilder(m)
    w1 = b.fresh_vertex(WHITE, prefix="w")
    w2 = b.fresh_vertex(WHITE, prefix="w")
    e_l = b.fresh_edge(kind)
    e_a = b.fresh_edge(kind)
    e_b = b.fresh_edge(kind)
    e_r = b.fresh_edge(kind)
    _replace_dart(b, m.rotations[el][0], e_l + ".0")
    _replace_dart(b, m.rotations[r][-1], e_r + ".1")
    b.rotations[w1] = [e_a + ".0", x3, e_l + ".1"]
    b.rotations[mono] = [e_b + ".0", x2, e_a + ".1"]
    b.rotations[w2] = [e_r + ".0", x1, e_b + ".1"]
    if kind == DOTTED:
        b.edge_head[e_l] = e_l + ".0"
        b.edge_head[e_a] = e_a + ".1"
        b.edge_head[e_b] = e_b + ".0"
        b.edge_head[e_r] = e_r + ".1"
    else:
        b.edge_head[e_l] = e_l + ".1"
        b.edge_head[e_a] = e_a + ".0"
        b.edge_head[e_b] = e_b + ".1"
        b.edge_head[e_r] = e_r + ".0"
    _pop_edge(b, m.boundary_edges[0])
    _pop_edge(b, m.boundary_edges[1])
    _pop_edge(b, edge_of(down_d))
    b.rotations.pop(p)
    b.vertex_tags.pop(p)
    b.boundary = [el, w1, mono, w2] + list(m.boundary[2:])
    b.boundary_edges = [e_l, e_a, e_b, e_r] + list(m.boundary_edges[2:])
    return b.build()


# ---------------------------------------------------------------------------
# black insertion / extraction


def _black_in_sites(m: DiskMap):
    sites = []
    n = len(m.boundary)
    for i, v1 in enumerate(m.boundary):
        mid = m.boundary[(i + 1) % n]
        v2 = m.boundary[(i + 2) % n]
        if (m.vertex_tags[v1], m.vertex_tags[mid], m.vertex_tags[v2]) != (BLACK, MONO, BLACK):
            continue
        if len({v1, mid, v2}) != 3:
            continue
        kind = m.edge_tags[m.boundary_edges[i]]
        if kind not in (BOLD, SOLID) or m.edge_tags[m.boundary_edges[(i + 1) % n]] != kind:
            continue
        sites.append((v1,))
    return sorted(sites)


def _black_in_apply(m: DiskMap, site) -> DiskMap:
    (v1,) = site
    m = _rotated_to(m, m.prev_on_boundary(v1))
    el = m.boundary[0]
    v1, mid, v2 = m.boundary[1], m.boundary[2], m.boundary[3]
    r = m.boundary[4 % len(m.boundary)]
    kind = m.edge_tags[m.boundary_edges[1]]
    other = SOLID if kind == BOLD else BOLD

    b = MapBuilder(m)
    vtx = b.fresh_vertex(BLACK, prefix="ib")
    mono = b.fresh_vertex(MONO, prefix="mk")
    down = b.fresh_edge(other)
    f_l = b.fresh_edge(other)
    f_r = b.fresh_edge(other)
    _replace_dart(b, m.rotations[el][0], f_l + ".0")
    _replace_dart(b, m.rotations[r][-1], f_r + ".1")
    b.rotations[vtx] = [down + ".0", m.rotations[v2][1], m.rotations[v2][2],
                        m.rotations[mid][1], m.rotations[v1][1], m.rotations[v1][2]]
    b.rotations[mono] = [f_r + ".0", down + ".1", f_l + ".1"]
    if kind == BOLD:
        # the new boundary mono is a maximum of the (negative-value) solid runs
        b.edge_head[f_l] = f_l + ".1"
        b.edge_head[f_r] = f_r + ".0"
        b.edge_head[down] = down + ".0"
    else:
        b.edge_head[f_l] = f_l + ".0"
        b.edge_head[f_r] = f_r + ".1"
        b.edge_head[down] = down + ".1"
    for x in (m.boundary_edges[0], m.boundary_edges[1], m.boundary_edges[2],
              m.boundary_edges[3]):
        _pop_edge(b, x)
    for v in (v1, mid, v2):
        b.rotations.pop(v)
        b.vertex_tags.pop(v)
    b.boundary = [el, mono] + list(m.boundary[4:])
    b.boundary_edges = [f_l, f_r] + list(m.boundary_edges[4:])
    return b.build()


def _black_out_sites(m: DiskMap):
    sites = []
    for v in sorted(m.vertex_tags):
        if m.vertex_tags[v] != BLACK or m.is_real(v):
            continue
        for d in m.rotations[v]:
            w = m.dart_vertex(other_dart(d))
            if m.vertex_tags[w] == MONO:
                sites.append((v, d))
    return sorted(sites)


def _black_out_apply(m: DiskMap, site) -> DiskMap:
    vtx, down_d = site
    mono_old = m.dart_vertex(other_dart(down_d))
    other = m.edge_tags[edge_of(down_d)]
    kind = SOLID if other == BOLD else BOLD
    m = _rotated_to(m, m.prev_on_boundary(mono_old))
    el, r = m.boundary[0], m.boundary[2 % len(m.boundary)]
    x1, x2, x3, x4, x5 = _cyclic_from(m.rotations[vtx], down_d)[1:]

    b = MapBuilder(m)
    v1 = b.fresh_vertex(BLACK, prefix="bb")
    v2 = b.fresh_vertex(BLACK, prefix="bb")
    e_l = b.fresh_edge(other)
    e_a = b.fresh_edge(kind)
    e_b = b.fresh_edge(kind)
    e_r = b.fresh_edge(other)
    _replace_dart(b, m.rotations[el][0], e_l + ".0")
    _replace_dart(b, m.rotations[r][-1], e_r + ".1")
    b.rotations[v1] = [e_a + ".0", x4, x5, e_l + ".1"]
    b.rotations[mono_old] = [e_b + ".0", x3, e_a + ".1"]
    b.rotations[v2] = [e_r + ".0", x1, x2, e_b + ".1"]
    if kind == BOLD:
        b.edge_head[e_a] = e_a + ".1"
        b.edge_head[e_b] = e_b + ".0"
        b.edge_head[e_l] = e_l + ".1"
        b.edge_head[e_r] = e_r + ".0"
    else:
        b.edge_head[e_a] = e_a + ".0"
        b.edge_head[e_b] = e_b + ".1"
        b.edge_head[e_l] = e_l + ".0"
        b.edge_head[e_r] = e_r + ".1"
    _pop_edge(b, m.boundary_edges[0])
    _pop_edge(b, m.boundary_edges[1])
    _pop_edge(b, edge_of(down_d))
    b.rotations.pop(vtx)
    b.vertex_tags.pop(vtx)
    b.boundary = [el, v1, mono_old, v2] + list(m.boundary[2:])
    b.boundary_edges = [e_l, e_a, e_b, e_r] + list(m.boundary_edges[2:])
    return b.build()


# ---------------------------------------------------------------------------
# the move table


def _rule(name, enumerate_sites, apply, note=""):
    return RewriteRule(
        name=name,
        find_sites=_filtered_sites(enumerate_sites, apply),
        apply=apply,
        post_check=validate_dessin,
        note=note,
    )


MONO_MODIFICATION = _rule(
    "mono-modification", _monomod_sites, _monomod_apply,
    "reconnect two like-kind inner edge passages across one region",
)
BRIDGE_CREATE = _rule(
    "bridge-create", _bridge_create_sites, _bridge_create_apply,
    "pinch a boundary edge against an antiparallel like-kind inner edge",
)
BRIDGE_DESTROY = _rule(
    "bridge-destroy", _bridge_destroy_sites, _bridge_destroy_apply,
    "remove a boundary bridge between two monochrome extrema",
)
WHITE_IN = _rule(
    "white-in", _white_in_sites, _white_in_apply,
    "collapse a white-mono-white boundary fragment into an inner white vertex",
)
WHITE_OUT = _rule(
    "white-out", _white_out_sites, _white_out_apply,
    "expand an inner white vertex over a boundary monochrome vertex",
)
BLACK_IN = _rule(
    "black-in", _black_in_sites, _black_in_apply,
    "collapse a black-mono-black boundary fragment into an inner black vertex",
)
BLACK_OUT = _rule(
    "black-out", _black_out_sites, _black_out_apply,
    "expand an inner black vertex over a boundary monochrome vertex",
)

DESSIN_MOVES = {
    r.name: r
    for r in (
        MONO_MODIFICATION,
        BRIDGE_CREATE,
        BRIDGE_DESTROY,
        WHITE_IN,
        WHITE_OUT,
        BLACK_IN,
        BLACK_OUT,
    )
}


def dessin_equivalent(g1: DiskMap, g2: DiskMap, bound: int = 4, max_states: int = 10000):
    """Breadth-first search for a move script carrying ``g1`` to ``g2``.

    Same contract as the skeleton-level search: a positive verdict carries a
    replayable ``(move name, site)`` script, a negative one is only ever
    ``unknown`` (the move set may connect the dessins beyond the bound), with
    a hint when the conserved black count already separates them.
    """
    from .core_map import apply_rewrite, canonical_code
    from .skeleton import EquivalenceResult, black_count

    validate_dessin(g1)
    validate_dessin(g2)
    target = canonical_code(g2)
    if canonical_code(g1) == target:
        return EquivalenceResult("equivalent", ())
    if black_count(g1) != black_count(g2):
        return EquivalenceResult(
            "unknown", (), hint="conserved black vertex count differs"
        )
    frontier = [(g1, ())]
    seen = {canonical_code(g1)}
    for _ in range(bound):
        nxt = []
        for m, script in frontier:
            for name in sorted(DESSIN_MOVES):
                rule = DESSIN_MOVES[name]
                for site in rule.find_sites(m):
                    try:
                        out = apply_rewrite(m, rule, site)
                    except MapError:
                        continue
                    code = canonical_code(out)
                    if code == target:
                        return EquivalenceResult(
                            "equivalent", script + ((name, site),)
                        )
                    if code not in seen:
                        seen.add(code)
                        nxt.append((out, script + ((name, site),)))
                        if len(seen) > max_states:
                            return EquivalenceResult(
                                "unknown", (), hint="state bound exceeded"
                            )
        frontier = nxt
        if not frontier:
            break
    return EquivalenceResult("unknown", (), hint=f"no script within {bound} moves")

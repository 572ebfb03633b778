"""Partially directed disk graphs that summarise a dessin's dotted structure.

A *skeleton* is a disk map whose vertices are coloured ``black`` or ``white``
and whose edges are either directed (tag ``"dir"``, with a head dart) or
undirected (tag ``"ud"``, head ``None``).  Whites live on the boundary circle,
inner blacks are isolated, and black vertices only emit edges.  The local
rules plus a per-region counting identity make these graphs exactly the
combinatorial shadows of dessins with all their poles on the boundary.

The module provides the condition-by-condition validator, the finer set of
conditions singled out for the dividing ("type I") case, admissible
orientations of the undirected part together with their inversion graph, the
elementary surgeries, and a bounded equivalence search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core_map import (
    DiskMap,
    MapBuilder,
    MapError,
    RewriteRule,
    canonical_code,
    darts_of,
    edge_of,
    other_dart,
)
from .dessin import _cyclic_from, _pop_edge, _replace_dart

BLACK, WHITE = "black", "white"
DIRECTED, UNDIRECTED = "dir", "ud"


class SkeletonError(MapError):
    pass


# ---------------------------------------------------------------------------
# local structure helpers


def _status(m: DiskMap, dart: str) -> str:
    """``in``/``out``/``ud`` for the edge end sitting at this dart."""
    e = edge_of(dart)
    if m.edge_tags[e] == UNDIRECTED:
        return "ud"
    return "in" if m.edge_head[e] == dart else "out"


def _neighbor_pairs(m: DiskMap, v: str) -> list[tuple[str, str]]:
    """Immediate-neighbor dart pairs at ``v`` (linear on the boundary)."""
    rot = m.rotations[v]
    pairs = list(zip(rot, rot[1:]))
    if not m.is_real(v) and len(rot) > 2:
        pairs.append((rot[-1], rot[0]))
    return pairs


def _gap_before(m: DiskMap, v: str) -> int:
    return (m.boundary_pos(v) - 1) % len(m.boundary)


def _sector_face(m: DiskMap, v: str, i: int):
    """Face of the corner between rotation slots ``i-1`` and ``i`` at real ``v``.

    ``i == len(rotations[v])`` names the corner next to the preceding gap.
    """
    rot = m.rotations[v]
    if i < len(rot):
        return m.face_of(rot[i])
    return m.inner_face_of_gap(_gap_before(m, v))


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Balance:
    """Per-region counts entering the balance identity b1 + 3b = v + z."""

    b1: int  # boundary visits of an edged black showing a single edge side
    v: int  # corners between two consecutive edges of a black
    b: int  # isolated black vertices (inner or boundary)
    z: int  # undirected arcs of the region walk plus isolated whites

    @property
    def ok(self) -> bool:
        return self.b1 + 3 * self.b == self.v + self.z


def region_balance(m: DiskMap) -> dict[int, Balance]:
    """Exact (b1, v, b, z) counts for every region of the cut disk."""
    out: dict[int, Balance] = {}
    for r in m.regions():
        walk = r.face.walk
        n = len(walk)
        b1 = v = b = z_iso = 0
        ud_flags = []
        for i in range(n):
            x, y = walk[i - 1], walk[i]
            xs, ys = isinstance(x, str), isinstance(y, str)
            if ys:
                w = m.dart_vertex(y)
                ud_flags.append(m.edge_tags[edge_of(y)] == UNDIRECTED)
            else:
                # virtual arc ("arc", g, 1): runs to boundary[g]
                w = m.boundary[(y[1] + 1) % len(m.boundary)] if not xs else None
                ud_flags.append(False)
            if xs and not ys:
                w = m.dart_vertex(other_dart(x))
            black = w is not None and m.vertex_tags[w] == BLACK
            if xs and ys:
                if black:
                    v += 1
            elif xs or ys:
                if black:
                    b1 += 1
            else:
                # corner between two boundary arcs: an isolated real vertex
                w = m.boundary[(y[1] + 1) % len(m.boundary)]
                if m.vertex_tags[w] == BLACK:
                    b += 1
                else:
                    z_iso += 1
        b += sum(1 for w in r.isolated if m.vertex_tags[w] == BLACK)
        # undirected components along the walk are maximal runs of ud sides
        if all(ud_flags) and ud_flags:
            z_runs = 1
        else:
            z_runs = sum(
                1 for i in range(n) if ud_flags[i] and not ud_flags[i - 1]
            )
        out[r.index] = Balance(b1, v, b, z_runs + z_iso)
    return out


def validate_skeleton(m: DiskMap) -> dict[str, tuple[bool, object]]:
    """Per-condition report; keys map to the defining conditions in order."""
    report: dict[str, tuple[bool, object]] = {}

    ok, witness = True, None
    for v, t in m.vertex_tags.items():
        if t not in (BLACK, WHITE):
            ok, witness = False, f"vertex {v} has tag {t!r}"
            break
    else:
        for e, t in m.edge_tags.items():
            if t not in (DIRECTED, UNDIRECTED):
                ok, witness = False, f"edge {e} has tag {t!r}"
                break
            if (m.edge_head[e] is None) != (t == UNDIRECTED):
                ok, witness = False, f"edge {e} direction/tag mismatch"
                break
        if ok and any(x is not None for x in m.boundary_edges):
            ok, witness = False, "boundary carries a real edge"
    report["structure"] = (ok, witness)
    if not ok:
        for key in ("roles", "neighbors", "cycles", "boundary", "balance"):
            report[key] = (False, "skipped: structural failure")
        return report

    ok, witness = True, None
    for v, t in m.vertex_tags.items():
        if t == WHITE and not m.is_real(v):
            ok, witness = False, f"inner white {v}"
            break
        if t == BLACK and not m.is_real(v) and m.degree(v) > 0:
            ok, witness = False, f"inner black {v} has edges"
            break
        if t == BLACK:
            for d in m.rotations[v]:
                if _status(m, d) != "out":
                    ok, witness = False, f"non-outgoing end {d} at black {v}"
                    break
            if not ok:
                break
    report["roles"] = (ok, witness)

    ok, witness = True, None
    for v in m.vertex_tags:
        for a, b in _neighbor_pairs(m, v):
            sa, sb = _status(m, a), _status(m, b)
            if ("in" in (sa, sb)) and (sa, sb) != ("in", "out") and (sa, sb) != ("out", "in"):
                ok, witness = False, (v, a, b)
                break
        if not ok:
            break
    report["neighbors"] = (ok, witness)

    report["cycles"] = _first_neighbor_cycles(m)
    report["boundary"] = (len(m.boundary) > 0, None)

    balance = region_balance(m)
    bad = {i: bal for i, bal in balance.items() if not bal.ok}
    report["balance"] = (not bad, bad or None)
    return report


def _first_neighbor_cycles(m: DiskMap) -> tuple[bool, object]:
    """Cycle check on the follow-an-immediate-neighbor relation."""
    nb: dict[str, list[str]] = {}
    for v in m.vertex_tags:
        for a, b in _neighbor_pairs(m, v):
            nb.setdefault(a, []).append(b)
            nb.setdefault(b, []).append(a)
    succ = {d: nb.get(other_dart(d), []) for v in m.rotations for d in m.rotations[v]}
    color: dict[str, int] = {}
    stack_trace: list[str] = []

    def dfs(d: str) -> Optional[list[str]]:
        color[d] = 1
        stack_trace.append(d)
        for s in succ.get(d, ()):
            c = color.get(s)
            if c == 1:
                return stack_trace[stack_trace.index(s):]
            if c is None:
                cyc = dfs(s)
                if cyc is not None:
                    return cyc
        color[d] = 2
        stack_trace.pop()
        return None

    for d in succ:
        if d not in color:
            cyc = dfs(d)
            if cyc is not None:
                return (False, tuple(cyc))
            stack_trace.clear()
    return (True, None)


def check_skeleton(m: DiskMap) -> None:
    report = validate_skeleton(m)
    bad = [k for k, (ok, _) in report.items() if not ok]
    if bad:
        raise SkeletonError(f"skeleton conditions failed: {', '.join(bad)}")


def is_skeleton(m: DiskMap) -> bool:
    return not any(not ok for ok, _ in validate_skeleton(m).values())


# ---------------------------------------------------------------------------
# dividing-case conditions


@dataclass(frozen=True)
class TypeIWitness:
    """Pass/fail record of the extra conditions for the dividing case."""

    parts_disjoint: bool  # directed and undirected parts share no vertex
    outgoing_separated: bool  # no two outgoing ends are immediate neighbors
    sinks_odd: bool  # edged whites: odd valency, one more in than out
    blacks_monovalent: bool  # every black is real with exactly one edge
    parity_rule: bool  # directed/undirected vertices alternate on the circle

    @property
    def ok(self) -> bool:
        return all(
            (
                self.parts_disjoint,
                self.outgoing_separated,
                self.sinks_odd,
                self.blacks_monovalent,
                self.parity_rule,
            )
        )

    @property
    def balance_redundant(self) -> bool:
        """The balance identity follows from the parity rule when it holds."""
        return self.parity_rule


def _part_of(m: DiskMap, v: str) -> str:
    """``dir``/``ud`` membership of a vertex (isolated ones go by color)."""
    statuses = {_status(m, d) for d in m.rotations[v]}
    if statuses - {"ud"}:
        if "ud" in statuses:
            return "both"
        return DIRECTED
    if statuses:
        return UNDIRECTED
    return DIRECTED if m.vertex_tags[v] == BLACK else UNDIRECTED


def is_typeI(m: DiskMap) -> TypeIWitness:
    parts = {v: _part_of(m, v) for v in m.vertex_tags}
    disjoint = "both" not in parts.values()

    separated = True
    for v in m.vertex_tags:
        for a, b in _neighbor_pairs(m, v):
            if _status(m, a) == _status(m, b) == "out":
                separated = False
    sinks = True
    for v, t in m.vertex_tags.items():
        if t != WHITE:
            continue
        statuses = [_status(m, d) for d in m.rotations[v]]
        n_in, n_out = statuses.count("in"), statuses.count("out")
        if n_in + n_out == 0:
            continue
        if (n_in + n_out) % 2 == 0 or n_in != n_out + 1:
            sinks = False
    blacks = all(
        m.is_real(v) and m.degree(v) == 1
        for v, t in m.vertex_tags.items()
        if t == BLACK
    )
    seq = [parts[v] for v in m.boundary]
    parity = len(seq) % 2 == 0 and all(
        seq[i] != seq[i - 1] for i in range(len(seq))
    ) if seq else False
    return TypeIWitness(disjoint, separated, sinks, blacks, parity)


# ---------------------------------------------------------------------------
# admissible orientations

Orientation = dict  # edge id -> head dart, covering every edge


def ud_edges(m: DiskMap) -> tuple[str, ...]:
    return tuple(sorted(e for e, t in m.edge_tags.items() if t == UNDIRECTED))


def is_admissible(m: DiskMap, orient: Orientation) -> bool:
    """No two incoming ends may be immediate neighbors at any vertex."""

    def incoming(d: str) -> bool:
        return orient[edge_of(d)] == d

    for v in m.vertex_tags:
        for a, b in _neighbor_pairs(m, v):
            if incoming(a) and incoming(b):
                return False
    return True


def _extend_orientation(m: DiskMap, fixed: dict) -> Optional[Orientation]:
    """Deterministic backtracking completion of a partial orientation."""
    orient = {e: h for e, h in m.edge_head.items() if h is not None}
    orient.update(fixed)
    free = [e for e in ud_edges(m) if e not in orient]
    pairs_at = {v: _neighbor_pairs(m, v) for v in m.vertex_tags}

    def consistent() -> bool:
        for v, pairs in pairs_at.items():
            for a, b in pairs:
                ea, eb = edge_of(a), edge_of(b)
                if orient.get(ea) == a and orient.get(eb) == b:
                    return False
        return True

    def solve(k: int) -> bool:
        if not consistent():
            return False
        if k == len(free):
            return True
        for h in darts_of(free[k]):
            orient[free[k]] = h
            if solve(k + 1):
                return True
            del orient[free[k]]
        return False

    return dict(orient) if solve(0) else None


def admissible_orientation(m: DiskMap) -> Orientation:
    """A canonical admissible orientation (existence is guaranteed)."""
    orient = _extend_orientation(m, {})
    if orient is None:
        raise SkeletonError("no admissible orientation found (bug signal)")
    return orient


def all_admissible_orientations(m: DiskMap, bound: int = 14) -> list[Orientation]:
    free = ud_edges(m)
    if len(free) > bound:
        raise SkeletonError(f"more than {bound} undirected edges")
    base = {e: h for e, h in m.edge_head.items() if h is not None}
    out = []
    for choice in _dart_choices(free):
        orient = dict(base)
        orient.update(zip(free, choice))
        if is_admissible(m, orient):
            out.append(orient)
    return out


def _dart_choices(edges):
    if not edges:
        yield ()
        return
    for rest in _dart_choices(edges[1:]):
        for h in darts_of(edges[0]):
            yield (h,) + rest


@dataclass(frozen=True)
class InversionCertificate:
    count: int
    connected: bool
    tree: tuple  # (parent key, child key, reversed edge) triples


def _orientation_key(m: DiskMap, orient: Orientation) -> tuple:
    return tuple((e, orient[e]) for e in ud_edges(m))


def inversion_reachability(m: DiskMap, bound: int = 14) -> InversionCertificate:
    """Enumerate admissible orientations and span them by single reversals."""
    orients = all_admissible_orientations(m, bound)
    keys = {_orientation_key(m, o): o for o in orients}
    if not keys:
        raise SkeletonError("no admissible orientation found (bug signal)")
    start = min(keys)
    seen = {start}
    frontier = [start]
    tree = []
    while frontier:
        k = frontier.pop(0)
        for i, (e, h) in enumerate(k):
            flipped = k[:i] + ((e, other_dart(h)),) + k[i + 1:]
            if flipped in keys and flipped not in seen:
                seen.add(flipped)
                tree.append((k, flipped, e))
                frontier.append(flipped)
    return InversionCertificate(len(keys), len(seen) == len(keys), tuple(tree))


def pair_state_extension(m: DiskMap, e1: str, e2: str) -> tuple:
    """Direction pairs of two undirected edges extendable to admissibility."""
    if e1 == e2 or UNDIRECTED not in (m.edge_tags[e1], m.edge_tags[e2]):
        raise SkeletonError("need two distinct undirected edges")
    states = []
    for h1 in darts_of(e1):
        for h2 in darts_of(e2):
            if _extend_orientation(m, {e1: h1, e2: h2}) is not None:
                states.append((h1, h2))
    return tuple(states)


# ---------------------------------------------------------------------------
# elementary surgeries


def _reanchor(b: MapBuilder, m: DiskMap, dying_edges) -> None:
    """Re-anchor isolated vertices whose anchor dart is about to vanish."""
    dying = set(dying_edges)
    for v, a in list(b.anchors.items()):
        if not (isinstance(a, str) and edge_of(a) in dying):
            continue
        face = m.face_of(a)
        for d in face.walk:
            if isinstance(d, str) and edge_of(d) not in dying:
                b.anchors[v] = d
                break
        else:
            if not face.arcs:
                raise MapError(f"cannot re-anchor {v}")
            b.anchors[v] = face.arcs[0]


def _try(apply, m, site) -> Optional[DiskMap]:
    try:
        out = apply(m, site)
        check_skeleton(out)
        return out
    except (MapError, KeyError, IndexError, ValueError):
        return None


def _filtered(enumerate_sites, apply):
    def find(m: DiskMap) -> list:
        return [s for s in enumerate_sites(m) if _try(apply, m, s) is not None]

    return find


def _mod_sites(m: DiskMap):
    sites = set()
    for face in m.faces():
        if face.is_outer:
            continue
        occ = face.darts
        for d1, d2 in combinations(occ, 2):
            e1, e2 = edge_of(d1), edge_of(d2)
            if e1 == e2 or m.edge_tags[e1] != m.edge_tags[e2]:
                continue
            if m.edge_tags[e1] == DIRECTED:
                if (m.edge_head[e1] == d1) != (m.edge_head[e2] == d2):
                    continue
            else:
                aligned = any(
                    _extend_orientation(m, {e1: h1, e2: h2}) is not None
                    for h1 in darts_of(e1)
                    for h2 in darts_of(e2)
                    if (h1 == d1) == (h2 == d2)
                )
                if not aligned:
                    continue
            sites.add(tuple(sorted((d1, d2))))
    return sorted(sites)


def _mod_apply(m: DiskMap, site) -> DiskMap:
    d1, d2 = site
    e1, e2 = edge_of(d1), edge_of(d2)
    tag = m.edge_tags[e1]
    b = MapBuilder(m)
    f1 = b.fresh_edge(tag)
    f2 = b.fresh_edge(tag)
    d1o, d2o = other_dart(d1), other_dart(d2)
    _replace_dart(b, d1o, f1 + ".0")
    _replace_dart(b, d2, f1 + ".1")
    _replace_dart(b, d1, f2 + ".0")
    _replace_dart(b, d2o, f2 + ".1")
    if tag == DIRECTED:
        h1 = m.edge_head[e1]
        b.edge_head[f1] = f1 + ".0" if h1 == d1o else f1 + ".1"
        b.edge_head[f2] = f2 + ".0" if h1 == d1 else f2 + ".1"
    _reanchor(b, m, (e1, e2))
    _pop_edge(b, e1)
    _pop_edge(b, e2)
    return b.build()


def _bridge_create_sites(m: DiskMap):
    sites = []
    whites = sorted(v for v, t in m.vertex_tags.items() if t == WHITE)
    for e in sorted(e for e, t in m.edge_tags.items() if t == DIRECTED):
        for w in whites:
            for pos in range(len(m.rotations[w]) + 1):
                for order in (0, 1):
                    sites.append((e, w, pos, order))
    return sites


def _bridge_create_apply(m: DiskMap, site) -> DiskMap:
    e, w, pos, order = site
    h = m.edge_head[e]
    t = other_dart(h)
    b = MapBuilder(m)
    ea = b.fresh_edge(DIRECTED)
    eb = b.fresh_edge(DIRECTED)
    _replace_dart(b, t, ea + ".0")
    _replace_dart(b, h, eb + ".1")
    b.edge_head[ea] = ea + ".1"
    b.edge_head[eb] = eb + ".1"
    mid = [ea + ".1", eb + ".0"] if order == 0 else [eb + ".0", ea + ".1"]
    b.rotations[w][pos:pos] = mid
    _reanchor(b, m, (e,))
    _pop_edge(b, e)
    return b.build()


def _bridge_destroy_sites(m: DiskMap):
    sites = []
    for w in sorted(v for v, t in m.vertex_tags.items() if t == WHITE):
        rot = m.rotations[w]
        for i in range(len(rot) - 1):
            a, c = rot[i], rot[i + 1]
            ea, ec = edge_of(a), edge_of(c)
            if ea == ec:
                continue
            if {m.edge_tags[ea], m.edge_tags[ec]} != {DIRECTED}:
                continue
            if {_status(m, a), _status(m, c)} == {"in", "out"}:
                sites.append((w, i))
    return sites


def _bridge_destroy_apply(m: DiskMap, site) -> DiskMap:
    w, i = site
    a, c = m.rotations[w][i], m.rotations[w][i + 1]
    if _status(m, a) == "out":
        a, c = c, a
    e_in, e_out = edge_of(a), edge_of(c)
    t = other_dart(a)
    h = m.edge_head[e_out]
    b = MapBuilder(m)
    fused = b.fresh_edge(DIRECTED)
    _replace_dart(b, t, fused + ".0")
    _replace_dart(b, h, fused + ".1")
    b.edge_head[fused] = fused + ".1"
    b.rotations[w] = [d for d in b.rotations[w] if edge_of(d) not in (e_in, e_out)]
    _reanchor(b, m, (e_in, e_out))
    _pop_edge(b, e_in)
    _pop_edge(b, e_out)
    return b.build()


def _ud_create_sites(m: DiskMap):
    sites = []
    for v in sorted(v for v, t in m.vertex_tags.items() if t == BLACK):
        rot = m.rotations[v]
        for i in range(len(rot) - 1):
            sites.append((v, i))
    return sites


def _ud_create_apply(m: DiskMap, site) -> DiskMap:
    v, i = site
    d1, d2 = m.rotations[v][i], m.rotations[v][i + 1]
    e1, e2 = edge_of(d1), edge_of(d2)
    h1, h2 = m.edge_head[e1], m.edge_head[e2]
    b = MapBuilder(m)
    u = b.fresh_edge(UNDIRECTED)
    _replace_dart(b, h1, u + ".0")
    _replace_dart(b, h2, u + ".1")
    b.rotations[v] = [d for d in b.rotations[v] if d not in (d1, d2)]
    _reanchor(b, m, (e1, e2))
    _pop_edge(b, e1)
    _pop_edge(b, e2)
    return b.build()


def _ud_destroy_sites(m: DiskMap):
    sites = []
    blacks = sorted(
        v for v, t in m.vertex_tags.items() if t == BLACK and m.is_real(v)
    )
    for u in ud_edges(m):
        for v in blacks:
            for pos in range(len(m.rotations[v]) + 1):
                for order in (0, 1):
                    sites.append((u, v, pos, order))
    return sites


def _ud_destroy_apply(m: DiskMap, site) -> DiskMap:
    u, v, pos, order = site
    a, c = darts_of(u)
    if order:
        a, c = c, a
    b = MapBuilder(m)
    e1 = b.fresh_edge(DIRECTED)
    e2 = b.fresh_edge(DIRECTED)
    _replace_dart(b, a, e1 + ".1")
    _replace_dart(b, c, e2 + ".1")
    b.edge_head[e1] = e1 + ".1"
    b.edge_head[e2] = e2 + ".1"
    b.rotations[v][pos:pos] = [e1 + ".0", e2 + ".0"]
    _reanchor(b, m, (u,))
    _pop_edge(b, u)
    return b.build()


def _remove_boundary_vertex(b: MapBuilder, v: str):
    """Drop a bare boundary vertex; returns the gap-index remapping."""
    j = b.boundary.index(v)
    n = len(b.boundary)

    def remap(g: int) -> int:
        if j == 0:
            return n - 2 if g in (n - 1, 0) else g - 1
        if g in (j - 1, j):
            return j - 1
        return g if g < j else g - 1

    b.rotations[v] = []
    b.drop_vertex(v)
    for w, a in list(b.anchors.items()):
        if isinstance(a, int):
            b.anchors[w] = remap(a)
    return remap


def _fresh_inner_black(b: MapBuilder, anchor) -> str:
    v = b.fresh_vertex(BLACK, prefix="ib")
    b.anchors[v] = anchor
    return v


def _anchor_in_face(m: DiskMap, face, skip_gaps=()):
    """A surviving anchor for ``face``: prefer a dart, else another gap."""
    for d in face.walk:
        if isinstance(d, str):
            return d
    for g in face.arcs:
        if g not in skip_gaps:
            return g
    raise MapError("region has no usable anchor")


def _black_in_sites(m: DiskMap):
    sites = []
    n = len(m.boundary)
    for i in range(n):
        v1, v2 = m.boundary[i], m.boundary[(i + 1) % n]
        if v1 != v2 and m.vertex_tags[v1] == m.vertex_tags[v2] == BLACK:
            sites.append(("merge", v1, v2))
    for v in sorted(m.boundary):
        if m.vertex_tags[v] == BLACK and m.degree(v) == 0:
            sites.append(("vanish", v))
    return sites


def _black_in_apply(m: DiskMap, site) -> DiskMap:
    b = MapBuilder(m)
    if site[0] == "merge":
        _, v1, v2 = site
        gap = m.boundary_pos(v1)
        face = m.inner_face_of_gap(gap)
        anchor = _anchor_in_face(m, face, skip_gaps=(gap,))
        b.rotations[v1] = list(m.rotations[v2]) + list(m.rotations[v1])
        b.rotations[v2] = []
        remap = _remove_boundary_vertex(b, v2)
        _fresh_inner_black(b, remap(anchor) if isinstance(anchor, int) else anchor)
        return b.build()
    _, v = site
    face = m.inner_face_of_gap(_gap_before(m, v))
    g1, g2 = _gap_before(m, v), m.boundary_pos(v)
    anchor = _anchor_in_face(m, face, skip_gaps=(g1, g2))
    remap = _remove_boundary_vertex(b, v)
    _fresh_inner_black(b, remap(anchor) if isinstance(anchor, int) else anchor)
    return b.build()


def _black_out_sites(m: DiskMap):
    sites = []
    blacks = sorted(
        v for v, t in m.vertex_tags.items() if t == BLACK and m.is_real(v)
    )
    for r in m.regions():
        inner = [v for v in r.isolated if m.vertex_tags[v] == BLACK]
        if not inner:
            continue
        for v in inner:
            for g in sorted(set(r.face.arcs)):
                sites.append(("emerge", v, g))
            for w in blacks:
                for k in range(len(m.rotations[w]) + 1):
                    f = _sector_face(m, w, k)
                    if f.walk == r.face.walk:
                        sites.append(("split", v, w, k))
    return sites


def _black_out_apply(m: DiskMap, site) -> DiskMap:
    b = MapBuilder(m)
    if site[0] == "emerge":
        _, v, g = site
        b.anchors.pop(v)
        b.vertex_tags.pop(v)
        b.rotations.pop(v)
        nv = b.fresh_vertex(BLACK, prefix="bk")
        b.insert_on_boundary(nv, g)
        for w, a in list(b.anchors.items()):
            if isinstance(a, int) and a > g:
                b.anchors[w] = a + 1
        return b.build()
    _, v, w, k = site
    b.anchors.pop(v)
    b.vertex_tags.pop(v)
    b.rotations.pop(v)
    rot = list(m.rotations[w])
    p = m.boundary_pos(w)
    nv = b.fresh_vertex(BLACK, prefix="bk")
    b.rotations[w] = rot[k:]
    b.rotations[nv] = rot[:k]
    b.boundary.insert(p + 1, nv)
    b.boundary_edges.insert(p + 1, None)
    for x, a in list(b.anchors.items()):
        if isinstance(a, int) and a >= p:
            b.anchors[x] = a + 1
    return b.build()


def _rule(name, enumerate_sites, apply, note=""):
    return RewriteRule(
        name=name,
        find_sites=_filtered(enumerate_sites, apply),
        apply=apply,
        post_check=check_skeleton,
        note=note,
    )


MODIFICATION = _rule(
    "modification",
    _mod_sites,
    _mod_apply,
    "reconnect two co-orientable edge passages on a common region",
)
BRIDGE_CREATE = _rule(
    "bridge-create",
    _bridge_create_sites,
    _bridge_create_apply,
    "reroute a directed edge through a white vertex",
)
BRIDGE_DESTROY = _rule(
    "bridge-destroy",
    _bridge_destroy_sites,
    _bridge_destroy_apply,
    "fuse an adjacent in/out pair at a white into one directed edge",
)
UD_CREATE = _rule(
    "ud-create",
    _ud_create_sites,
    _ud_create_apply,
    "replace two neighboring edges of a black by one undirected edge",
)
UD_DESTROY = _rule(
    "ud-destroy",
    _ud_destroy_sites,
    _ud_destroy_apply,
    "split an undirected edge over a black vertex",
)
BLACK_IN = _rule(
    "black-in",
    _black_in_sites,
    _black_in_apply,
    "merge two neighboring blacks (or sink a bare one) into an inner black",
)
BLACK_OUT = _rule(
    "black-out",
    _black_out_sites,
    _black_out_apply,
    "resurface an inner black on the boundary of its region",
)

SKELETON_MOVES = {
    r.name: r
    for r in (
        MODIFICATION,
        BRIDGE_CREATE,
        BRIDGE_DESTROY,
        UD_CREATE,
        UD_DESTROY,
        BLACK_IN,
        BLACK_OUT,
    )
}


# ---------------------------------------------------------------------------
# bounded equivalence


@dataclass(frozen=True)
class EquivalenceResult:
    verdict: str  # "equivalent" | "unknown"
    script: tuple  # (move name, site) pairs replayable from the first input
    hint: Optional[str] = None


def black_count(m: DiskMap) -> int:
    """Number of black vertices; conserved by every move above."""
    return sum(1 for t in m.vertex_tags.values() if t == BLACK)


def skeleton_equivalent(
    s1: DiskMap, s2: DiskMap, bound: int = 4, max_states: int = 10000
) -> EquivalenceResult:
    """Breadth-first search for a move script carrying ``s1`` to ``s2``."""
    check_skeleton(s1)
    check_skeleton(s2)
    target = canonical_code(s2)
    if canonical_code(s1) == target:
        return EquivalenceResult("equivalent", ())
    if black_count(s1) != black_count(s2):
        return EquivalenceResult(
            "unknown", (), hint="conserved black vertex count differs"
        )
    frontier = [(s1, ())]
    seen = {canonical_code(s1)}
    for _ in range(bound):
        nxt = []
        for m, script in frontier:
            for name in sorted(SKELETON_MOVES):
                rule = SKELETON_MOVES[name]
                for site in rule.find_sites(m):
                    out = rule.apply(m, site)
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

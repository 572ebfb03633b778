"""Passing between dessins and their skeletons in both directions.

``skeleton_of`` contracts every boundary pillar of a dessin to a point and
keeps only the inner dotted structure: edges whose direction survives all
elementary moves stay directed, the others become undirected.  The inverse,
``dessin_from_skeleton``, blows each skeleton vertex back up into a pillar,
joins neighboring pillars by solid segments, and then pairs up the remaining
bold/solid edge germs region by region.  The two constructions are mutually
inverse on canonical codes, which is asserted at build time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core_map import (
    DiskMap,
    MapError,
    build_map,
    canonical_code,
    darts_of,
    edge_of,
    other_dart,
)
from .dessin import (
    BLACK,
    BOLD,
    CROSS,
    DOTTED,
    MONO,
    SOLID,
    WHITE,
    MONO_MODIFICATION,
    degree,
    pillars,
    validate_dessin,
)
from .skeleton import (
    DIRECTED,
    UNDIRECTED,
    SkeletonError,
    all_admissible_orientations,
    black_count,
    check_skeleton,
    is_admissible,
    ud_edges,
)


@dataclass(frozen=True)
class BlowupChart:
    """Bookkeeping for the boundary blow-up relating a dessin to a skeleton.

    ``pillars`` maps each boundary skeleton vertex to the dessin boundary
    stretch it contracts; ``blacks`` pairs inner skeleton blacks with inner
    dessin blacks; ``transforms`` gives the proper transform of every
    skeleton edge (one dotted edge, or leg/white/leg for a patched chain).
    """

    pillars: dict
    blacks: dict
    transforms: dict


# ---------------------------------------------------------------------------
# dessin -> skeleton


def _effectively_white(g: DiskMap, v: str) -> bool:
    """White, or a mono holding a patched white that can be pushed back out.

    Pushing an inner white back onto the boundary surrounds its carrier mono
    with two real whites, so such a mono flanks just as well as a white.
    """
    if g.vertex_tags[v] == WHITE:
        return True
    if g.vertex_tags[v] != MONO:
        return False
    inner = g.rotations[v][1]
    far = g.dart_vertex(other_dart(inner))
    return g.vertex_tags[far] == WHITE and not g.is_real(far)


def _flanked(g: DiskMap, v: str) -> bool:
    """Both boundary neighbors of ``v`` are (effectively) white vertices."""
    return (
        _effectively_white(g, g.prev_on_boundary(v))
        and _effectively_white(g, g.next_on_boundary(v))
    )


def _inner_face_of_real_edge(g: DiskMap, e: str):
    return next(f for d in darts_of(e) if not (f := g.face_of(d)).is_outer)


def _face_classes(g: DiskMap):
    """Union faces across inner bold/solid edges; dotted edges are walls.

    Returns a ``find`` function on face walks; its classes are the regions
    obtained by contracting the boundary pillars.
    """
    parent = {f.walk: f.walk for f in g.faces()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges():
        if g.is_real_edge(e) or g.edge_tags[e] == DOTTED:
            continue
        a, b = (find(g.face_of(d).walk) for d in darts_of(e))
        parent[a] = b
    return find


def skeleton_of(g: DiskMap) -> tuple[DiskMap, BlowupChart]:
    """Contract pillars and classify the inner dotted edges of ``g``."""
    validate_dessin(g)
    for v, t in g.vertex_tags.items():
        if t == CROSS and not g.is_real(v):
            raise SkeletonError(f"ramified input: inner cross vertex {v!r}")
    pls = pillars(g)
    if not pls:
        raise SkeletonError("ramified input: boundary carries no pillars")

    used = set(g.vertex_tags)
    boundary, vt, chart_pillars = [], {}, {}
    pillar_name: dict[str, str] = {}
    for idx, p in enumerate(pls):
        name = f"p{idx}"
        while name in used:
            name += "x"
        used.add(name)
        boundary.append(name)
        vt[name] = BLACK if p.kind == BOLD else WHITE
        chart_pillars[name] = p.vertices
        for v in p.vertices:
            pillar_name[v] = name

    # chains: an inner white patches its two dotted legs into one edge
    chain_legs = {}
    chains = []
    for P in sorted(v for v, t in g.vertex_tags.items()
                    if t == WHITE and not g.is_real(v)):
        legs = [d for d in g.rotations[P] if g.edge_tags[edge_of(d)] == DOTTED]
        chains.append((P, legs[0], legs[1]))
        chain_legs[edge_of(legs[0])] = P
        chain_legs[edge_of(legs[1])] = P

    et, heads, transforms = {}, {}, {}
    attach = {}  # dessin attach vertex -> skeleton dart sitting at its pillar
    side = {}  # skeleton dart -> dessin dart with the same face on its right
    for e in sorted(g.edges()):
        if (g.edge_tags[e] != DOTTED or g.is_real_edge(e)
                or e in chain_legs):
            continue
        h = g.edge_head[e]
        td = other_dart(h)
        tv = g.dart_vertex(td)
        ud = g.vertex_tags[tv] == MONO and _flanked(g, tv)
        et[e] = UNDIRECTED if ud else DIRECTED
        heads[e] = None if ud else h
        attach[tv] = td
        attach[g.dart_vertex(h)] = h
        side[td], side[h] = td, h
        transforms[e] = (e,)
    for P, l1, l2 in chains:
        e = P
        while e in et or "." in e:
            e = e.replace(".", "_") + "c"
        et[e] = UNDIRECTED
        heads[e] = None
        m1 = g.dart_vertex(other_dart(l1))
        m2 = g.dart_vertex(other_dart(l2))
        attach[m1] = e + ".0"
        attach[m2] = e + ".1"
        side[e + ".0"] = other_dart(l1)
        side[e + ".1"] = other_dart(l2)
        transforms[e] = (edge_of(l1), P, edge_of(l2))

    rot = {}
    for idx, p in enumerate(pls):
        darts = [attach[v] for v in p.vertices if v in attach]
        rot[boundary[idx]] = list(reversed(darts))

    sk0 = build_map(boundary, vt, rot, et, heads, [None] * len(boundary))

    # anchor inner blacks: dessin faces merge across inner bold/solid edges
    find = _face_classes(g)

    class_anchor = {}
    for r in sk0.regions():
        anchor = None
        cls = None
        for x in r.face.walk:
            if isinstance(x, str):
                anchor = anchor or x
                cls = find(g.face_of(side[x]).walk)
        if cls is None:
            gap = r.face.arcs[0]
            anchor = gap
            # the solid stretch between contracted pillars idx gap, gap+1
            last = chart_pillars[boundary[gap]][-1]
            e_r = g.boundary_edges[g.boundary_pos(last)]
            cls = find(_inner_face_of_real_edge(g, e_r).walk)
        class_anchor[cls] = anchor

    anchors, chart_blacks = {}, {}
    for ib in sorted(v for v, t in g.vertex_tags.items()
                     if t == BLACK and not g.is_real(v)):
        name = ib
        while name in used:
            name += "i"
        used.add(name)
        vt[name] = BLACK
        rot[name] = []
        d0 = g.rotations[ib][0]
        anchors[name] = class_anchor[find(g.face_of(d0).walk)]
        chart_blacks[name] = ib

    sk = build_map(boundary, vt, rot, et, heads, [None] * len(boundary),
                   anchors=anchors)
    check_skeleton(sk)
    return sk, BlowupChart(chart_pillars, chart_blacks, transforms)


# ---------------------------------------------------------------------------
# skeleton -> dessin


def _status(orient, dart: str) -> str:
    return "in" if orient[edge_of(dart)] == dart else "out"


def _profile(s: DiskMap, orient, w: str) -> list[str]:
    """hi/lo items along the pillar of ``w`` with virtual cross ends."""
    inner = ["hi" if _status(orient, d) == "out" else "lo"
             for d in s.rotations[w]]
    return ["hi"] + inner + ["hi"]


def orientation_is_faithful(s: DiskMap, orient) -> bool:
    """Whether blowing up along ``orient`` reproduces the edge directions.

    An undirected edge must come out of its pillar flanked by whites (so
    extraction sees it as reversible), a directed white-to-white edge must
    not, and no two incoming germs may sit side by side on one pillar.
    """
    for w, t in s.vertex_tags.items():
        if t != WHITE:
            continue
        seq = _profile(s, orient, w)
        if any(a == b == "lo" for a, b in zip(seq, seq[1:])):
            return False
        for i, d in enumerate(s.rotations[w]):
            if _status(orient, d) != "out":
                continue
            flanked = seq[i] == "hi" and seq[i + 2] == "hi"
            if (s.edge_tags[edge_of(d)] == UNDIRECTED) != flanked:
                return False
    return True


def faithful_orientation(s: DiskMap, bound: int = 16):
    for orient in all_admissible_orientations(s, bound):
        if orientation_is_faithful(s, orient):
            return orient
    raise SkeletonError(
        "skeleton admits no realization-faithful admissible orientation"
    )


@dataclass
class _Slot:
    kind: str  # bold | solid
    dir: str  # in | out
    dart: Optional[str] = None


@dataclass
class _Item:
    name: str
    tag: str
    rank: str  # hi | lo, within its pillar's elevation
    pillar: Optional[int]  # index of the skeleton boundary vertex, or None
    attach: Optional[str] = None  # skeleton dart realized at this vertex
    slots: list = field(default_factory=list)


def dessin_from_skeleton(s: DiskMap, orient=None) -> DiskMap:
    """Blow up ``s`` into a dessin; inverse of :func:`skeleton_of` on codes."""
    check_skeleton(s)
    if orient is None:
        orient = faithful_orientation(s)
    else:
        if set(orient) != set(s.edge_tags) or not is_admissible(s, orient):
            raise SkeletonError("supplied orientation is not admissible")
        for e, t in s.edge_tags.items():
            if t == DIRECTED and orient[e] != s.edge_head[e]:
                raise SkeletonError("orientation reverses a directed edge")
        if not orientation_is_faithful(s, orient):
            raise SkeletonError(
                "orientation is not realization-faithful for this skeleton"
            )

    used_v, used_e = set(s.vertex_tags), set(s.edge_tags)
    counters = {}

    def fresh(prefix: str, pool: set) -> str:
        while True:
            counters[prefix] = counters.get(prefix, -1) + 1
            name = f"{prefix}{counters[prefix]}"
            if name not in pool:
                pool.add(name)
                return name

    # -- pillar items along the dessin boundary -----------------------------
    items: list[_Item] = []
    pillar_span: dict[int, tuple[int, int]] = {}
    for pi, v in enumerate(s.boundary):
        start = len(items)
        order = list(reversed(s.rotations[v]))
        if s.vertex_tags[v] == BLACK:
            items.append(_Item(fresh("b", used_v), BLACK, "lo", pi,
                               slots=[_Slot(SOLID, "in"), _Slot(BOLD, "out")]))
            if order:
                for i, d in enumerate(order):
                    if i:
                        items.append(_Item(fresh("m", used_v), MONO, "lo", pi,
                                           slots=[_Slot(BOLD, "in")]))
                    items.append(_Item(fresh("w", used_v), WHITE, "hi", pi,
                                       attach=d))
            else:
                items.append(_Item(fresh("m", used_v), MONO, "hi", pi,
                                   slots=[_Slot(BOLD, "out")]))
            items.append(_Item(fresh("b", used_v), BLACK, "lo", pi,
                               slots=[_Slot(BOLD, "out"), _Slot(SOLID, "in")]))
        else:
            items.append(_Item(fresh("x", used_v), CROSS, "hi", pi))
            ranks = _profile(s, orient, v)
            order_ranks = list(reversed(ranks[1:-1]))
            prev = "hi"
            for i, d in enumerate(order):
                if prev == "hi" and order_ranks[i] == "hi":
                    items.append(_Item(fresh("w", used_v), WHITE, "lo", pi,
                                       slots=[_Slot(BOLD, "in")]))
                if prev == "lo" and order_ranks[i] == "lo":
                    raise SkeletonError(
                        "two incoming germs side by side: not realizable"
                    )
                items.append(_Item(fresh("m", used_v), MONO, order_ranks[i],
                                   pi, attach=d))
                prev = order_ranks[i]
            if prev == "hi":
                items.append(_Item(fresh("w", used_v), WHITE, "lo", pi,
                                   slots=[_Slot(BOLD, "in")]))
            items.append(_Item(fresh("x", used_v), CROSS, "hi", pi))
        pillar_span[pi] = (start, len(items))

    # -- solid connectors between consecutive pillars -----------------------
    full: list[_Item] = []
    gap_items: dict[int, int] = {}  # skeleton gap -> index of first connector
    npill = len(s.boundary)
    for pi in range(npill):
        full.extend(items[pillar_span[pi][0]:pillar_span[pi][1]])
        a = items[pillar_span[pi][1] - 1]
        nxt = items[pillar_span[(pi + 1) % npill][0]]
        gap_items[pi] = len(full)
        if a.tag == CROSS and nxt.tag == CROSS:
            full.append(_Item(fresh("m", used_v), MONO, "lo", None,
                              slots=[_Slot(SOLID, "out")]))
        elif a.tag == BLACK and nxt.tag == BLACK:
            full.append(_Item(fresh("m", used_v), MONO, "hi", None,
                              slots=[_Slot(SOLID, "in")]))
        # mixed gaps carry a single real solid edge and no vertex

    # -- real edges, tags, partial rotations --------------------------------
    vt = {it.name: it.tag for it in full}
    et, heads = {e: DOTTED for e in s.edge_tags}, {}
    pre, post = {}, {}  # item name -> forward / backward real dart
    b_edges = []
    n = len(full)

    def real_kind(a: _Item, b: _Item) -> str:
        if a.pillar is not None and a.pillar == b.pillar:
            return BOLD if s.vertex_tags[s.boundary[a.pillar]] == BLACK else DOTTED
        return SOLID

    for i in range(n):
        a, b = full[i], full[(i + 1) % n]
        kind = real_kind(a, b)
        e = fresh("r", used_e)
        et[e] = kind
        b_edges.append(e)
        pre[a.name] = e + ".0"
        post[b.name] = e + ".1"
        if kind == SOLID:
            lower = e + ".0" if _solid_rank(a) <= _solid_rank(b) else e + ".1"
            heads[e] = lower
        else:
            heads[e] = e + ".0" if a.rank == "hi" else e + ".1"

    rot = {}
    for it in full:
        mid = [it.attach] if it.attach else []
        rot[it.name] = [pre[it.name]] + mid + [post[it.name]]
    for e in s.edge_tags:
        heads[e] = orient[e]

    boundary_names = [it.name for it in full]
    partial = build_map(boundary_names, vt, rot, et, heads, b_edges)

    # -- germ slots collected region by region ------------------------------
    slot_at = {}
    for it in full:
        if it.slots:
            slot_at[(it.name, 1)] = it.slots
    face_slots = {}
    inner_faces = [f for f in partial.faces() if not f.is_outer]
    for f in inner_faces:
        lst = []
        walk = f.walk
        for i in range(len(walk)):
            y = walk[i]
            w = partial.dart_vertex(y)
            key = (w, partial.rotations[w].index(y))
            lst.extend(slot_at.get(key, ()))
        face_slots[f.walk] = lst

    def face_of_anchor(a):
        if isinstance(a, str):
            return partial.face_of(a).walk
        # gap a of the skeleton: first connector edge after pillar a
        d = b_edges[(gap_items[a] - 1) % n]
        return _inner_face_of_real_edge(partial, d).walk

    # -- inner blacks spliced into their regions ----------------------------
    extra_rot = {}
    for ib in sorted(v for v, t in s.vertex_tags.items()
                     if t == BLACK and not s.is_real(v)):
        name = ib
        lst = face_slots[face_of_anchor(s.anchors[ib])]
        i = next(k for k, sl in enumerate(lst)
                 if sl.kind == SOLID and sl.dir == "out")
        e = fresh("t", used_e)
        et[e] = SOLID
        heads[e] = e + ".1"
        lst[i].dart = e + ".0"
        germs = [_Slot(BOLD, "out"), _Slot(SOLID, "in"), _Slot(BOLD, "out"),
                 _Slot(SOLID, "in"), _Slot(BOLD, "out")]
        vt[name] = BLACK
        extra_rot[name] = [e + ".1"] + germs
        lst[i:i + 1] = germs

    # -- pair bold germs, sweeping up the solid germs between ---------------
    for f in inner_faces:
        lst = face_slots[f.walk]
        while lst:
            done = _pair_step(lst, et, heads, lambda p: fresh(p, used_e))
            if not done:
                raise SkeletonError(
                    "germ pairing failed: region is not balanced (bug signal)"
                )

    # -- final rotations -----------------------------------------------------
    final_rot = {}
    for it in full:
        mid = [it.attach] if it.attach else [sl.dart for sl in it.slots]
        final_rot[it.name] = [pre[it.name]] + mid + [post[it.name]]
    for name, entries in extra_rot.items():
        final_rot[name] = [x if isinstance(x, str) else x.dart for x in entries]

    out = build_map(boundary_names, vt, final_rot, et, heads, b_edges)
    validate_dessin(out)
    if degree(out) != black_count(s):
        raise SkeletonError("degree mismatch after blow-up (bug signal)")
    sk2, _ = skeleton_of(out)
    if canonical_code(sk2) != canonical_code(s):
        raise SkeletonError("round trip broke the skeleton (bug signal)")
    return out


def _solid_rank(it: _Item) -> int:
    # solid edges run downhill from crosses through gap monos to blacks
    return {CROSS: 2, MONO: 1, BLACK: 0}[it.tag]


def _pair_step(lst, et, heads, fresh) -> bool:
    """Connect one neighboring bold out/in pair plus the solids between."""
    bolds = [i for i, sl in enumerate(lst) if sl.kind == BOLD]
    if not bolds:
        for i in range(len(lst)):
            j = (i + 1) % len(lst)
            if i != j and lst[i].dir != lst[j].dir:
                _connect(lst[i], lst[j], SOLID, et, heads, fresh)
                for idx in sorted((i, j), reverse=True):
                    del lst[idx]
                return True
        return False
    k = len(bolds)
    for t in range(k):
        i, j = bolds[t], bolds[(t + 1) % k]
        if lst[i].dir == lst[j].dir:
            continue
        between = [(x % len(lst)) for x in range(i + 1, i + 1 + (j - i - 1) % len(lst))]
        if len(between) % 2:
            continue
        pairs = [(between[x], between[x + 1]) for x in range(0, len(between), 2)]
        if any(lst[a].dir == lst[b].dir for a, b in pairs):
            continue
        _connect(lst[i], lst[j], BOLD, et, heads, fresh)
        for a, b in pairs:
            _connect(lst[a], lst[b], SOLID, et, heads, fresh)
        for idx in sorted([i, j] + between, reverse=True):
            del lst[idx]
        return True
    return False


def _connect(a: _Slot, b: _Slot, kind, et, heads, fresh) -> None:
    if a.dir == "in":
        a, b = b, a
    e = fresh("i" if kind == BOLD else "t")
    et[e] = kind
    heads[e] = e + ".1"
    a.dart = e + ".0"
    b.dart = e + ".1"


# ---------------------------------------------------------------------------
# standard form within a region


@dataclass(frozen=True)
class NormalizationResult:
    dessin: DiskMap
    script: tuple  # replayable (move name, site) pairs
    reduced: bool
    note: str = ""


def normalize_region(g: DiskMap, region, max_states: int = 4000,
                     ) -> NormalizationResult:
    """Rewire the inner bold/solid edges of one region to standard form.

    ``region`` is a region of ``g`` (or one of its faces); the operation
    targets the whole patch of faces glued across inner bold/solid edges.
    Standard form is the deterministic germ pairing of the blow-up; the
    result is reached purely by monochrome modifications inside the region,
    so replaying the returned script reproduces the output exactly.
    """
    validate_dessin(g)
    face = region.face if hasattr(region, "face") else region
    target, landmark = _repair_region(g, face)
    goal = canonical_code(target)
    if canonical_code(g) == goal:
        return NormalizationResult(g, (), True, "already standard")
    frontier = [(g, ())]
    seen = {canonical_code(g)}
    while frontier and len(seen) <= max_states:
        m, script = frontier.pop(0)
        allowed = _patch_edges(m, m.face_of(landmark))
        for site in MONO_MODIFICATION.find_sites(m):
            if not all(edge_of(d) in allowed for d in site):
                continue
            out = MONO_MODIFICATION.apply(m, site)
            step = script + (("mono-modification", site),)
            code = canonical_code(out)
            if code == goal:
                return NormalizationResult(out, step, True)
            if code not in seen:
                seen.add(code)
                frontier.append((out, step))
    return NormalizationResult(
        g, (), False, "non-reducible-configuration: search bound exhausted"
    )


def _patch_edges(g: DiskMap, face) -> set:
    """Inner bold/solid edges of the face patch containing ``face``."""
    find = _face_classes(g)
    cls = find(face.walk)
    return {
        e for e in g.edges()
        if not g.is_real_edge(e) and g.edge_tags[e] != DOTTED
        and find(g.face_of(e + ".0").walk) == cls
    }


def _repair_region(g: DiskMap, face) -> tuple[DiskMap, str]:
    """The dessin with one region's pairing rebuilt canonically.

    Also returns a landmark dart: a dotted or real dart on the patch whose
    edge no move inside the patch can touch, used to re-identify the region.
    """
    dead = _patch_edges(g, face)
    find = _face_classes(g)
    cls = find(face.walk)
    landmark = next(
        d for f in g.faces() if not f.is_outer and find(f.walk) == cls
        for d in f.walk
        if g.is_real_edge(edge_of(d)) or g.edge_tags[edge_of(d)] == DOTTED
    )
    patch_blacks = sorted(
        v for v, t in g.vertex_tags.items()
        if t == BLACK and not g.is_real(v)
        and edge_of(g.rotations[v][0]) in dead
    )

    vt = dict(g.vertex_tags)
    et = {e: t for e, t in g.edge_tags.items() if e not in dead}
    heads = {e: h for e, h in g.edge_head.items() if e not in dead}
    used_e = set(et)
    counters = {}

    def fresh(prefix: str) -> str:
        while True:
            counters[prefix] = counters.get(prefix, -1) + 1
            name = f"{prefix}{counters[prefix]}"
            if name not in used_e:
                used_e.add(name)
                return name

    rot, slot_at = {}, {}
    for v in g.vertex_tags:
        if v in patch_blacks:
            rot[v] = []
            continue
        kept = []
        for d in g.rotations[v]:
            e = edge_of(d)
            if e in dead:
                sl = _Slot(g.edge_tags[e],
                           "in" if g.edge_head[e] == d else "out")
                slot_at.setdefault((v, len(kept)), []).append(sl)
            else:
                kept.append(d)
        rot[v] = kept
        # at inner vertices the corner after the last dart is the corner
        # before the first one
        if kept and not g.is_real(v) and (v, len(kept)) in slot_at:
            tail = slot_at.pop((v, len(kept)))
            slot_at[(v, 0)] = tail + slot_at.get((v, 0), [])

    anchors = dict(g.anchors)
    for ib in patch_blacks:
        anchors[ib] = landmark
    partial = build_map(list(g.boundary), vt, rot, et, heads,
                        list(g.boundary_edges), anchors=anchors)

    merged = partial.face_of(landmark)
    lst = []
    walk = merged.walk
    for y in walk:
        if not isinstance(y, str):
            continue
        w = partial.dart_vertex(y)
        lst.extend(slot_at.get((w, partial.rotations[w].index(y)), ()))

    extra_rot = {}
    for ib in patch_blacks:
        i = next(k for k, sl in enumerate(lst)
                 if sl.kind == SOLID and sl.dir == "out")
        e = fresh("t")
        et[e] = SOLID
        heads[e] = e + ".1"
        lst[i].dart = e + ".0"
        germs = [_Slot(BOLD, "out"), _Slot(SOLID, "in"), _Slot(BOLD, "out"),
                 _Slot(SOLID, "in"), _Slot(BOLD, "out")]
        extra_rot[ib] = [e + ".1"] + germs
        lst[i:i + 1] = germs
        del anchors[ib]

    while lst:
        if not _pair_step(lst, et, heads, lambda p: fresh(p)):
            raise SkeletonError(
                "germ pairing failed: region is not balanced (bug signal)"
            )

    final_rot = {}
    for v in g.vertex_tags:
        if v in patch_blacks:
            final_rot[v] = [x if isinstance(x, str) else x.dart
                            for x in extra_rot[v]]
            continue
        out = []
        for i, d in enumerate(rot[v]):
            out.extend(sl.dart for sl in slot_at.get((v, i), ()))
            out.append(d)
        out.extend(sl.dart for sl in slot_at.get((v, len(rot[v])), ()))
        final_rot[v] = out

    target = build_map(list(g.boundary), vt, final_rot, et, heads,
                       list(g.boundary_edges), anchors=anchors)
    validate_dessin(target)
    return target, landmark
